/** Canvas overlay drawing: placed points, fitted grid lines, distances. */
import { imageToDisplay } from "./zoom.js";
const POINT_RADIUS = 5;
const COLORS = {
    table: "#e4572e",
    keyboard: "#7c3aed",
    monitor: "#0ea5e9",
    head: "#16a34a",
    hand: "#ca8a04",
};
function colorFor(label) {
    for (const key of Object.keys(COLORS)) {
        if (label.startsWith(key)) {
            return COLORS[key];
        }
    }
    return "#334155";
}
export function drawOverlay(ctx, session, zoom, highlight) {
    ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
    const response = session.lastResponse;
    if (response) {
        drawGridLines(ctx, response, zoom);
    }
    ctx.font = "11px system-ui, sans-serif";
    for (const [label, point] of session.placed) {
        const display = imageToDisplay(point, zoom);
        ctx.beginPath();
        ctx.arc(display.x, display.y, POINT_RADIUS, 0, 2 * Math.PI);
        ctx.fillStyle = colorFor(label);
        ctx.fill();
        if (highlight.has(label)) {
            ctx.lineWidth = 3;
            ctx.strokeStyle = "#dc2626";
            ctx.stroke();
        }
        ctx.fillStyle = "#0f172a";
        ctx.fillText(label, display.x + 7, display.y - 7);
    }
}
function drawGridLines(ctx, response, zoom) {
    ctx.save();
    ctx.setLineDash([6, 4]);
    ctx.lineWidth = 1.5;
    ctx.strokeStyle = "#64748b";
    for (const segment of Object.values(response.diagnostics.lines)) {
        const from = imageToDisplay({ x: segment.from[0], y: segment.from[1] }, zoom);
        const to = imageToDisplay({ x: segment.to[0], y: segment.to[1] }, zoom);
        ctx.beginPath();
        ctx.moveTo(from.x, from.y);
        ctx.lineTo(to.x, to.y);
        ctx.stroke();
    }
    ctx.restore();
}
export function distancesHtml(response) {
    const table = response.geometry.table;
    const rows = Object.entries(response.geometry.distances_in)
        .map(([speaker, distance]) => `<tr><td>${speaker}</td><td>${distance.toFixed(2)} in</td></tr>`)
        .join("");
    return `
    <p>table ${table.width_in.toFixed(1)} x ${table.depth_in.toFixed(1)} in</p>
    <table><thead><tr><th>speaker</th><th>distance to mic</th></tr></thead>
    <tbody>${rows}</tbody></table>`;
}
