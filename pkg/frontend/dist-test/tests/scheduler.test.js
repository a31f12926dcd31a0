import assert from "node:assert/strict";
import { test } from "node:test";
import { EstimateScheduler } from "../src/api.js";
function annotation(markerWidth) {
    return {
        frame_id: "f",
        keyboard_width_in: markerWidth,
        speakers: [],
        scales_ppi: {},
        points: [],
    };
}
function fakeResponse(tag) {
    return {
        geometry: {
            table: { width_in: tag, depth_in: 1 },
            mic: [0, 0, 0],
            mouths_in: {},
            distances_in: {},
        },
        diagnostics: { lines: {}, cross_ratios: {}, warnings: [], depth_method: null },
    };
}
function jsonResponse(payload) {
    return new Response(JSON.stringify(payload), {
        status: 200,
        headers: { "Content-Type": "application/json" },
    });
}
const realFetch = globalThis.fetch;
function sleep(ms) {
    return new Promise((resolve) => setTimeout(resolve, ms));
}
test("rapid requests are debounced down to one fetch", async () => {
    const seen = [];
    globalThis.fetch = (async (_url, init) => {
        const doc = JSON.parse(String(init?.body));
        seen.push(doc.keyboard_width_in);
        return jsonResponse(fakeResponse(doc.keyboard_width_in));
    });
    try {
        const results = [];
        const scheduler = new EstimateScheduler((response) => results.push(response.geometry.table.width_in), () => assert.fail("unexpected error"), 10);
        for (let width = 1; width <= 5; width++) {
            scheduler.request(annotation(width));
        }
        await sleep(60);
        assert.deepEqual(seen, [5], "only the last debounced request fires");
        assert.deepEqual(results, [5]);
    }
    finally {
        globalThis.fetch = realFetch;
    }
});
test("a slow stale response never overwrites a newer one", async () => {
    const resolvers = new Map();
    globalThis.fetch = (async (_url, init) => {
        const doc = JSON.parse(String(init?.body));
        return new Promise((resolve) => {
            resolvers.set(doc.keyboard_width_in, resolve);
        });
    });
    try {
        const applied = [];
        const scheduler = new EstimateScheduler((response) => applied.push(response.geometry.table.width_in), () => assert.fail("unexpected error"), 1);
        scheduler.request(annotation(1));
        await sleep(15);
        scheduler.request(annotation(2));
        await sleep(15);
        assert.ok(resolvers.has(1) && resolvers.has(2));
        // the newer response lands first; the stale one must be dropped
        resolvers.get(2)(jsonResponse(fakeResponse(2)));
        await sleep(10);
        resolvers.get(1)(jsonResponse(fakeResponse(1)));
        await sleep(10);
        assert.deepEqual(applied, [2]);
    }
    finally {
        globalThis.fetch = realFetch;
    }
});
