/** App wiring: frame loading, canvas interaction, live estimation. */

import { ApiError, EstimateScheduler, frameUrl, listFrames, saveAnnotation } from "./api.js";
import { labelHint } from "./labels.js";
import { drawOverlay, distancesHtml } from "./overlay.js";
import { AnnotationSession } from "./session.js";
import { AnnotationDoc } from "./types.js";
import { displayToImage, imageToDisplay, ZOOM_LEVELS } from "./zoom.js";

const frameSelect = document.getElementById("frameSelect") as HTMLSelectElement;
const zoomSelect = document.getElementById("zoomSelect") as HTMLSelectElement;
const promptLine = document.getElementById("promptLine") as HTMLDivElement;
const warningBanner = document.getElementById("warningBanner") as HTMLDivElement;
const resultPanel = document.getElementById("resultPanel") as HTMLDivElement;
const keyboardWidthInput = document.getElementById("keyboardWidth") as HTMLInputElement;
const monitorWidthInput = document.getElementById("monitorWidth") as HTMLInputElement;
const speakerIdInput = document.getElementById("speakerId") as HTMLInputElement;
const addSpeakerBtn = document.getElementById("addSpeaker") as HTMLButtonElement;
const speakerList = document.getElementById("speakerList") as HTMLDivElement;
const exportBtn = document.getElementById("exportBtn") as HTMLButtonElement;
const importInput = document.getElementById("importInput") as HTMLInputElement;
const imageCanvas = document.getElementById("imageCanvas") as HTMLCanvasElement;
const overlayCanvas = document.getElementById("overlayCanvas") as HTMLCanvasElement;

let session: AnnotationSession | null = null;
let image: HTMLImageElement | null = null;
let zoom = 1;
let dragging: string | null = null;
const highlighted = new Set<string>();

const scheduler = new EstimateScheduler(
  (response) => {
    if (!session) return;
    session.lastResponse = response;
    highlighted.clear();
    warningBanner.textContent = response.diagnostics.warnings.join(" | ");
    resultPanel.innerHTML = distancesHtml(response);
    redraw();
  },
  (error) => {
    if (!session) return;
    session.lastResponse = null;
    resultPanel.innerHTML = "";
    warningBanner.textContent = error.message;
    highlighted.clear();
    if (error instanceof ApiError && error.code === "MissingPoints") {
      for (const label of session.placed.keys()) {
        if (error.message.includes(label)) highlighted.add(label);
      }
    }
    redraw();
  },
);

function redraw(): void {
  if (!session || !image) return;
  imageCanvas.width = overlayCanvas.width = Math.round(image.width * zoom);
  imageCanvas.height = overlayCanvas.height = Math.round(image.height * zoom);
  const ctx = imageCanvas.getContext("2d")!;
  ctx.drawImage(image, 0, 0, imageCanvas.width, imageCanvas.height);
  drawOverlay(overlayCanvas.getContext("2d")!, session, zoom, highlighted);
  const next = session.nextLabel();
  promptLine.textContent = next
    ? `click: ${labelHint(next)}`
    : "all labels placed — drag any point to adjust";
  renderSpeakers();
}

function maybeEstimate(): void {
  if (session && session.canEstimate()) {
    scheduler.request(session.toDoc());
  }
}

function renderSpeakers(): void {
  if (!session) return;
  speakerList.innerHTML = "";
  for (const speaker of session.speakers) {
    const row = document.createElement("div");
    row.className = "speaker-row";
    const label = document.createElement("span");
    label.textContent = `${speaker} scale (px/in):`;
    const input = document.createElement("input");
    input.type = "number";
    input.step = "0.1";
    input.value = String(session.scalesPpi.get(speaker) ?? "");
    input.addEventListener("change", () => {
      session!.setScale(speaker, Number(input.value));
      maybeEstimate();
    });
    row.append(label, input);
    speakerList.append(row);
  }
}

function canvasPoint(event: MouseEvent): { x: number; y: number } {
  const rect = overlayCanvas.getBoundingClientRect();
  return { x: event.clientX - rect.left, y: event.clientY - rect.top };
}

function hitTest(displayX: number, displayY: number): string | null {
  if (!session) return null;
  for (const [label, point] of session.placed) {
    const display = imageToDisplay(point, zoom);
    if (Math.hypot(display.x - displayX, display.y - displayY) <= 8) {
      return label;
    }
  }
  return null;
}

overlayCanvas.addEventListener("mousedown", (event) => {
  if (!session) return;
  const { x, y } = canvasPoint(event);
  const hit = hitTest(x, y);
  if (hit) {
    dragging = hit;
    return;
  }
  const result = session.placeNext(x, y, zoom);
  warningBanner.textContent = result.ok ? "" : result.warning;
  redraw();
  maybeEstimate();
});

overlayCanvas.addEventListener("mousemove", (event) => {
  if (!session || !dragging) return;
  const { x, y } = canvasPoint(event);
  session.placeAt(dragging, x, y, zoom);
  redraw();
});

overlayCanvas.addEventListener("mouseup", () => {
  if (dragging) {
    dragging = null;
    maybeEstimate();
  }
});

zoomSelect.addEventListener("change", () => {
  zoom = Number(zoomSelect.value);
  redraw();
});

keyboardWidthInput.addEventListener("change", () => {
  session?.setKeyboardWidth(Number(keyboardWidthInput.value) || null);
  maybeEstimate();
});

monitorWidthInput.addEventListener("change", () => {
  session?.setMonitorWidth(Number(monitorWidthInput.value) || null);
  maybeEstimate();
});

addSpeakerBtn.addEventListener("click", () => {
  if (!session) return;
  session.addSpeaker(speakerIdInput.value.trim());
  speakerIdInput.value = "";
  redraw();
});

exportBtn.addEventListener("click", () => {
  if (!session) return;
  const result = session.exportAnnotation();
  if (!result.ok) {
    warningBanner.textContent = `cannot export, missing: ${result.missing.join(", ")}`;
    return;
  }
  const blob = new Blob([JSON.stringify(result.doc, null, 2)], {
    type: "application/json",
  });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = `${session.frameId}.json`;
  link.click();
  URL.revokeObjectURL(link.href);
  void saveAnnotation(result.doc).catch((error: Error) => {
    warningBanner.textContent = `save failed: ${error.message}`;
  });
});

importInput.addEventListener("change", async () => {
  const file = importInput.files?.[0];
  if (!file || !session) return;
  const doc = JSON.parse(await file.text()) as AnnotationDoc;
  session.importAnnotation(doc);
  keyboardWidthInput.value = String(session.keyboardWidthIn ?? "");
  monitorWidthInput.value = String(session.monitorWidthIn ?? "");
  redraw();
  maybeEstimate();
});

async function loadFrame(frameId: string): Promise<void> {
  const img = new Image();
  img.src = frameUrl(frameId);
  await img.decode();
  image = img;
  session = new AnnotationSession(frameId, img.width, img.height);
  warningBanner.textContent = "";
  resultPanel.innerHTML = "";
  redraw();
}

async function boot(): Promise<void> {
  const frames = await listFrames();
  frameSelect.innerHTML = frames
    .map((f) => `<option value="${f.frame_id}">${f.frame_id}</option>`)
    .join("");
  frameSelect.addEventListener("change", () => void loadFrame(frameSelect.value));
  zoomSelect.innerHTML = ZOOM_LEVELS
    .map((z) => `<option value="${z}" ${z === 1 ? "selected" : ""}>${z}x</option>`)
    .join("");
  if (frames.length) {
    await loadFrame(frames[0].frame_id);
  } else {
    promptLine.textContent = "no frames found — start the service with --frames-dir";
  }
}

void boot();
