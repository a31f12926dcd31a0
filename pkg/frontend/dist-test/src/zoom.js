/** Zoom math: points live in native image pixels; zoom is display-only. */
export const ZOOM_LEVELS = [0.5, 1, 2];
/** Display (canvas) coordinates -> stored image-space coordinates. */
export function displayToImage(displayX, displayY, zoom) {
    if (!(zoom > 0)) {
        throw new Error(`zoom must be positive, got ${zoom}`);
    }
    return { x: displayX / zoom, y: displayY / zoom };
}
/** Stored image-space coordinates -> display coordinates. */
export function imageToDisplay(point, zoom) {
    return { x: point.x * zoom, y: point.y * zoom };
}
export function insideImage(point, width, height) {
    return point.x >= 0 && point.y >= 0 && point.x <= width && point.y <= height;
}
