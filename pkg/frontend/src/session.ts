/** Client-side annotation session state machine.
 *
 * Pure of DOM concerns so it is unit-testable: placement, dragging,
 * form fields, validation, and export/import of the service's annotation
 * schema.  A label is either pending (in the click queue) or placed,
 * never both; every mutation that can change the estimate bumps
 * `revision` so the UI knows to re-request.
 */

import { fullQueue, REQUIRED_LABELS, speakerLabels } from "./labels.js";
import { AnnotationDoc, EstimateResponse, ImagePoint } from "./types.js";
import { displayToImage, insideImage } from "./zoom.js";

export type PlaceResult =
  | { ok: true; label: string }
  | { ok: false; warning: string };

export type ExportResult =
  | { ok: true; doc: AnnotationDoc }
  | { ok: false; missing: string[] };

export class AnnotationSession {
  frameId: string;
  imageWidth: number;
  imageHeight: number;
  placed = new Map<string, ImagePoint>();
  keyboardWidthIn: number | null = null;
  monitorWidthIn: number | null = null;
  speakers: string[] = [];
  scalesPpi = new Map<string, number>();
  lastResponse: EstimateResponse | null = null;
  /** bumped on every estimate-relevant change */
  revision = 0;

  constructor(frameId: string, imageWidth: number, imageHeight: number) {
    this.frameId = frameId;
    this.imageWidth = imageWidth;
    this.imageHeight = imageHeight;
  }

  /** labels still waiting for a click, in guided order */
  pending(): string[] {
    return fullQueue(this.speakers).filter((label) => !this.placed.has(label));
  }

  nextLabel(): string | null {
    const queue = this.pending();
    return queue.length ? queue[0] : null;
  }

  /** Place the next pending label at a display-space click. */
  placeNext(displayX: number, displayY: number, zoom: number): PlaceResult {
    const label = this.nextLabel();
    if (label === null) {
      return { ok: false, warning: "all labels are placed" };
    }
    return this.placeAt(label, displayX, displayY, zoom);
  }

  /** Place or move a specific label (drag = placeAt on a placed label). */
  placeAt(label: string, displayX: number, displayY: number, zoom: number): PlaceResult {
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

  removePoint(label: string): void {
    if (this.placed.delete(label)) {
      this.revision += 1;
    }
  }

  addSpeaker(speakerId: string): void {
    if (!speakerId || this.speakers.includes(speakerId)) {
      return;
    }
    this.speakers.push(speakerId);
    this.revision += 1;
  }

  removeSpeaker(speakerId: string): void {
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

  setKeyboardWidth(inches: number | null): void {
    this.keyboardWidthIn = inches;
    this.revision += 1;
  }

  setMonitorWidth(inches: number | null): void {
    this.monitorWidthIn = inches;
    this.revision += 1;
  }

  setScale(speakerId: string, ppi: number): void {
    this.scalesPpi.set(speakerId, ppi);
    this.revision += 1;
  }

  /** Missing requirements for requesting an estimate. */
  missingForEstimate(): string[] {
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

  canEstimate(): boolean {
    return this.missingForEstimate().length === 0;
  }

  /** Annotation document in the service schema. */
  toDoc(): AnnotationDoc {
    const doc: AnnotationDoc = {
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
  exportAnnotation(): ExportResult {
    const missing = this.missingForEstimate();
    if (missing.length) {
      return { ok: false, missing };
    }
    return { ok: true, doc: this.toDoc() };
  }

  /** Restore a previously exported annotation. */
  importAnnotation(doc: AnnotationDoc): void {
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
