/** Service client: debounced estimation with stale-response protection. */

import { AnnotationDoc, EstimateResponse, FrameInfo, ServiceError } from "./types.js";

export const ESTIMATE_DEBOUNCE_MS = 250;

export class ApiError extends Error {
  code: string;

  constructor(error: ServiceError) {
    super(error.message);
    this.code = error.code;
  }
}

async function parseJson(response: Response): Promise<unknown> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(body as ServiceError);
  }
  return body;
}

export async function requestEstimate(doc: AnnotationDoc, base = ""): Promise<EstimateResponse> {
  const response = await fetch(`${base}/api/estimate`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(doc),
  });
  return (await parseJson(response)) as EstimateResponse;
}

export async function saveAnnotation(doc: AnnotationDoc, base = ""): Promise<void> {
  const response = await fetch(`${base}/api/annotations`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(doc),
  });
  await parseJson(response);
}

export async function listFrames(base = ""): Promise<FrameInfo[]> {
  const response = await fetch(`${base}/api/frames`);
  return (await parseJson(response)) as FrameInfo[];
}

export function frameUrl(frameId: string, base = ""): string {
  return `${base}/api/frames/${encodeURIComponent(frameId)}`;
}

type EstimateHandler = (response: EstimateResponse) => void;
type ErrorHandler = (error: ApiError | Error) => void;

/**
 * Debounces estimate requests and discards superseded responses by
 * sequence number, so a slow earlier reply can never overwrite the
 * overlay produced by a later edit.
 */
export class EstimateScheduler {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private sequence = 0;
  private applied = 0;

  constructor(
    private onResult: EstimateHandler,
    private onError: ErrorHandler,
    private debounceMs: number = ESTIMATE_DEBOUNCE_MS,
    private base: string = "",
  ) {}

  request(doc: AnnotationDoc): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire(doc);
    }, this.debounceMs);
  }

  private async fire(doc: AnnotationDoc): Promise<void> {
    const ticket = ++this.sequence;
    try {
      const response = await requestEstimate(doc, this.base);
      if (ticket > this.applied) {
        this.applied = ticket;
        this.onResult(response);
      }
    } catch (error) {
      if (ticket > this.applied) {
        this.applied = ticket;
        this.onError(error as Error);
      }
    }
  }
}
