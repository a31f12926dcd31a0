/** Client-side annotation session state machine.
 *
 * Pure of DOM concerns so it is unit-testable: placement, dragging,
 * form fields, validation, and export/import of the service's annotation
 * schema.  A label is either pending (in the click queue) or placed,
 * never both; every mutation that can change the estimate bumps
 * `revision` so the UI knows to re-request.
 */
import { fullQueue, REQUIRED_LABELS, speakerLabels } from "./labels.js";
import { displayToImage, insideImage } from "./zoom.js";
export class AnnotationSession {
    frameId;
    imageWidth;
    imageHeight;
    placed = new Map();
    keyboardWidthIn = null;
    monitorWidthIn = null;
    speakers = [];
    scalesPpi = new Map();
    lastResponse = null;
    /** bumped on every estimate-relevant change */
    revision = 0;
    constructor(frameId, imageWidth, imageHeight) {
        this.frameId = frameId;
        this.imageWidth = imageWidth;
        this.imageHeight = imageHeight;
    }
    /** labels still waiting for a click, in guided order */
    pending() {
        return fullQueue(this.speakers).filter((label) => !this.placed.has(label));
    }
    nextLabel() {
        const queue = this.pending();
        return queue.length ? queue[0] : null;
    }
    /** Place the next pending label at a display-space click. */
    placeNext(displayX, displayY, zoom) {
        const label = this.nextLabel();
        if (label === null) {
            return { ok: false, warning: "all labels are placed" };
        }
        return this.placeAt(label, displayX, displayY, zoom);
    }
    /** Place or move a specific label (drag = placeAt on a placed label). */
    placeAt(label, displayX, displayY, zoom) {
        const point = displayToImage(displayX, displayY, zoom);
        if (!insideImage(point, this.imageWidth, this.imageHeight)) {
            return {
                ok: false,
                warning: `click for ${label} lands outside the image`,
            };
        }
        this.placed.set(label, point);
        this.revision += 1;
        return { ok: true, label };
    }
    removePoint(label) {
        if (this.placed.delete(label)) {
            this.revision += 1;
        }
    }
    addSpeaker(speakerId) {
        if (!speakerId || this.speakers.includes(speakerId)) {
            return;
        }
        this.speakers.push(speakerId);
        this.revision += 1;
    }
    removeSpeaker(speakerId) {
        const index = this.speakers.indexOf(speakerId);
        if (index < 0) {
            return;
        }
        this.speakers.splice(index, 1);
        this.scalesPpi.delete(speakerId);
        for (const label of speakerLabels(speakerId)) {
            this.placed.delete(label);
        }
        this.revision += 1;
    }
    setKeyboardWidth(inches) {
        this.keyboardWidthIn = inches;
        this.revision += 1;
    }
    setMonitorWidth(inches) {
        this.monitorWidthIn = inches;
        this.revision += 1;
    }
    setScale(speakerId, ppi) {
        this.scalesPpi.set(speakerId, ppi);
        this.revision += 1;
    }
    /** Missing requirements for requesting an estimate. */
    missingForEstimate() {
        const missing = REQUIRED_LABELS.filter((label) => !this.placed.has(label));
        if (!(this.keyboardWidthIn !== null && this.keyboardWidthIn > 0)) {
            missing.push("keyboard_width_in");
        }
        for (const speaker of this.speakers) {
            const scale = this.scalesPpi.get(speaker);
            if (!(scale !== undefined && scale > 0)) {
                missing.push(`scale:${speaker}`);
            }
            if (!this.placed.has(`head_${speaker}`) && !this.placed.has(`hand_${speaker}`)) {
                missing.push(`head_${speaker}`);
            }
        }
        return missing;
    }
    canEstimate() {
        return this.missingForEstimate().length === 0;
    }
    /** Annotation document in the service schema. */
    toDoc() {
        const doc = {
            frame_id: this.frameId,
            keyboard_width_in: this.keyboardWidthIn ?? 0,
            speakers: [...this.speakers],
            scales_ppi: Object.fromEntries(this.scalesPpi),
            points: [...this.placed.entries()].map(([label, p]) => ({
                label,
                x: p.x,
                y: p.y,
            })),
        };
        if (this.monitorWidthIn !== null && this.monitorWidthIn > 0) {
            doc.monitor_width_in = this.monitorWidthIn;
        }
        return doc;
    }
    /** Export for download/persistence; blocked while required labels pend. */
    exportAnnotation() {
        const missing = this.missingForEstimate();
        if (missing.length) {
            return { ok: false, missing };
        }
        return { ok: true, doc: this.toDoc() };
    }
    /** Restore a previously exported annotation. */
    importAnnotation(doc) {
        this.frameId = doc.frame_id;
        this.keyboardWidthIn = doc.keyboard_width_in;
        this.monitorWidthIn = doc.monitor_width_in ?? null;
        this.speakers = [...doc.speakers];
        this.scalesPpi = new Map(Object.entries(doc.scales_ppi));
        this.placed = new Map(doc.points.map((p) => [p.label, { x: p.x, y: p.y }]));
        this.lastResponse = null;
        this.revision += 1;
    }
}
