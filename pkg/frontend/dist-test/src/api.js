/** Service client: debounced estimation with stale-response protection. */
export const ESTIMATE_DEBOUNCE_MS = 250;
export class ApiError extends Error {
    code;
    constructor(error) {
        super(error.message);
        this.code = error.code;
    }
}
async function parseJson(response) {
    const body = await response.json();
    if (!response.ok) {
        throw new ApiError(body);
    }
    return body;
}
export async function requestEstimate(doc, base = "") {
    const response = await fetch(`${base}/api/estimate`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(doc),
    });
    return (await parseJson(response));
}
export async function saveAnnotation(doc, base = "") {
    const response = await fetch(`${base}/api/annotations`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(doc),
    });
    await parseJson(response);
}
export async function listFrames(base = "") {
    const response = await fetch(`${base}/api/frames`);
    return (await parseJson(response));
}
export function frameUrl(frameId, base = "") {
    return `${base}/api/frames/${encodeURIComponent(frameId)}`;
}
/**
 * Debounces estimate requests and discards superseded responses by
 * sequence number, so a slow earlier reply can never overwrite the
 * overlay produced by a later edit.
 */
export class EstimateScheduler {
    onResult;
    onError;
    debounceMs;
    base;
    timer = null;
    sequence = 0;
    applied = 0;
    constructor(onResult, onError, debounceMs = ESTIMATE_DEBOUNCE_MS, base = "") {
        this.onResult = onResult;
        this.onError = onError;
        this.debounceMs = debounceMs;
        this.base = base;
    }
    request(doc) {
        if (this.timer !== null) {
            clearTimeout(this.timer);
        }
        this.timer = setTimeout(() => {
            this.timer = null;
            void this.fire(doc);
        }, this.debounceMs);
    }
    async fire(doc) {
        const ticket = ++this.sequence;
        try {
            const response = await requestEstimate(doc, this.base);
            if (ticket > this.applied) {
                this.applied = ticket;
                this.onResult(response);
            }
        }
        catch (error) {
            if (ticket > this.applied) {
                this.applied = ticket;
                this.onError(error);
            }
        }
    }
}
