/**
 * Round-trip parity against the live estimation service and the CLI.
 *
 * Drives the same session state machine the browser UI uses: labeled
 * points are placed through display coordinates at 2x zoom, form fields
 * filled, the annotation exported, then (a) POSTed to /api/estimate and
 * (b) written to disk and run through the CLI.  The distances the UI
 * would display must match the CLI output exactly.
 *
 * No browser binary ships in this environment, so this node-level
 * integration stands in for the headless-browser run.
 */

import assert from "node:assert/strict";
import { spawn, spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join, resolve } from "node:path";
import { after, before, test } from "node:test";
import { fileURLToPath } from "node:url";

import { AnnotationSession } from "../src/session.js";
import { AnnotationDoc, EstimateResponse, GeometryDoc } from "../src/types.js";

const HERE = dirname(fileURLToPath(import.meta.url));
const REPO_ROOT = resolve(HERE, "..", "..", "..");
const PY_TESTS = join(REPO_ROOT, "tests");

let serverProc: ReturnType<typeof spawn> | null = null;
let baseUrl = "";
let fixture: AnnotationDoc;

function generateFixture(): AnnotationDoc {
  const script = [
    "import json, sys",
    `sys.path.insert(0, ${JSON.stringify(PY_TESTS)})`,
    "from scenes import four_speaker_scene, classroom_camera",
    "from tabletalk.geometry import annotation_to_jsonable",
    "scene = four_speaker_scene()",
    "doc = annotation_to_jsonable(scene.annotate(classroom_camera()))",
    "print(json.dumps(doc))",
  ].join("\n");
  const run = spawnSync("python3", ["-c", script], { encoding: "utf-8" });
  assert.equal(run.status, 0, run.stderr);
  return JSON.parse(run.stdout) as AnnotationDoc;
}

before(async () => {
  fixture = generateFixture();
  const script = [
    "from tabletalk.service.http import make_server",
    "server = make_server(port=0)",
    "print(server.server_address[1], flush=True)",
    "server.serve_forever()",
  ].join("\n");
  serverProc = spawn("python3", ["-c", script], { stdio: ["ignore", "pipe", "inherit"] });
  baseUrl = await new Promise<string>((resolvePort, reject) => {
    const timer = setTimeout(() => reject(new Error("service did not start")), 15000);
    serverProc!.stdout!.once("data", (chunk: Buffer) => {
      clearTimeout(timer);
      resolvePort(`http://127.0.0.1:${chunk.toString().trim()}`);
    });
  });
});

after(() => {
  serverProc?.kill();
});

function buildSessionInteractively(zoom: number): AnnotationSession {
  // generous canvas bounds: the synthetic frame is FHD-ish
  const session = new AnnotationSession(fixture.frame_id, 4000, 4000);
  const byLabel = new Map(fixture.points.map((p) => [p.label, p]));

  // follow the guided queue exactly as the click handler would
  let guard = 0;
  while (session.nextLabel() !== null && guard++ < 100) {
    const label = session.nextLabel()!;
    const point = byLabel.get(label);
    assert.ok(point, `fixture missing ${label}`);
    const placed = session.placeAt(label, point.x * zoom, point.y * zoom, zoom);
    assert.ok(placed.ok);
  }
  for (const speaker of fixture.speakers) {
    session.addSpeaker(speaker);
    session.setScale(speaker, fixture.scales_ppi[speaker]);
    for (const kind of ["head", "hand"]) {
      const point = byLabel.get(`${kind}_${speaker}`)!;
      session.placeAt(`${kind}_${speaker}`, point.x * zoom, point.y * zoom, zoom);
    }
  }
  session.setKeyboardWidth(fixture.keyboard_width_in);
  session.setMonitorWidth(fixture.monitor_width_in ?? null);
  return session;
}

test("interactive session export runs through the CLI with identical distances", async () => {
  const session = buildSessionInteractively(2);
  assert.ok(session.canEstimate());

  const exported = session.exportAnnotation();
  assert.ok(exported.ok);
  const doc = (exported as { ok: true; doc: AnnotationDoc }).doc;

  // what the UI displays: the service response for the exported annotation
  const response = await fetch(`${baseUrl}/api/estimate`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(doc),
  });
  assert.equal(response.status, 200);
  const displayed = (await response.json()) as EstimateResponse;

  // the same annotation through the CLI
  const workDir = mkdtempSync(join(tmpdir(), "tabletalk-parity-"));
  const annotationPath = join(workDir, "annotation.json");
  const geometryPath = join(workDir, "geometry.json");
  writeFileSync(annotationPath, JSON.stringify(doc));
  const cli = spawnSync(
    "python3",
    ["-m", "tabletalk.service.cli", "estimate", annotationPath, "--out", geometryPath],
    { encoding: "utf-8" },
  );
  assert.equal(cli.status, 0, cli.stderr);
  const fromCli = JSON.parse(readFileSync(geometryPath, "utf-8")) as GeometryDoc;

  assert.deepEqual(displayed.geometry, fromCli);
  // byte-for-byte on the canonical encoding
  assert.equal(
    JSON.stringify(displayed.geometry.distances_in),
    JSON.stringify(fromCli.distances_in),
  );
});

test("zoom level does not change the exported annotation", () => {
  const docs = [0.5, 1, 2].map((zoom) => buildSessionInteractively(zoom).toDoc());
  for (const doc of docs) {
    for (const [index, point] of doc.points.entries()) {
      assert.ok(Math.abs(point.x - docs[0].points[index].x) < 0.5);
      assert.ok(Math.abs(point.y - docs[0].points[index].y) < 0.5);
    }
  }
});

test("service flags missing points with the offending labels", async () => {
  const doc = buildSessionInteractively(1).toDoc();
  doc.points = doc.points.filter((p) => p.label !== "table_corner_3");
  const response = await fetch(`${baseUrl}/api/estimate`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(doc),
  });
  assert.equal(response.status, 400);
  const body = (await response.json()) as { code: string; message: string };
  assert.equal(body.code, "MissingPoints");
  assert.match(body.message, /table_corner_3/);
});
