/** Zoom math: points live in native image pixels; zoom is display-only. */

import { ImagePoint } from "./types.js";

export const ZOOM_LEVELS = [0.5, 1, 2] as const;

/** Display (canvas) coordinates -> stored image-space coordinates. */
export function displayToImage(displayX: number, displayY: number, zoom: number): ImagePoint {
  if (!(zoom > 0)) {
    throw new Error(`zoom must be positive, got ${zoom}`);
  }
  return { x: displayX / zoom, y: displayY / zoom };
}

/** Stored image-space coordinates -> display coordinates. */
export function imageToDisplay(point: ImagePoint, zoom: number): ImagePoint {
  return { x: point.x * zoom, y: point.y * zoom };
}

export function insideImage(point: ImagePoint, width: number, height: number): boolean {
  return point.x >= 0 && point.y >= 0 && point.x <= width && point.y <= height;
}
