/** Guided click order and label bookkeeping.
 *
 * The queue walks the fixed scene labels first (table corners 1-4,
 * keyboard 5-8, monitor 9-13) and then head/hand for each registered
 * speaker, mirroring the numbering the estimation expects.  Monitor and
 * hand points improve the estimate but only corners + keyboard are
 * required to request one.
 */

export const TABLE_LABELS = [
  "table_corner_1", "table_corner_2", "table_corner_3", "table_corner_4",
] as const;

export const KEYBOARD_LABELS = [
  "keyboard_5", "keyboard_6", "keyboard_7", "keyboard_8",
] as const;

export const MONITOR_LABELS = [
  "monitor_9", "monitor_10", "monitor_11", "monitor_12", "monitor_13",
] as const;

export const REQUIRED_LABELS: readonly string[] = [
  ...TABLE_LABELS, ...KEYBOARD_LABELS,
];

export function speakerLabels(speakerId: string): string[] {
  return [`head_${speakerId}`, `hand_${speakerId}`];
}

export function fullQueue(speakers: string[]): string[] {
  return [
    ...TABLE_LABELS,
    ...KEYBOARD_LABELS,
    ...MONITOR_LABELS,
    ...speakers.flatMap(speakerLabels),
  ];
}

export function labelHint(label: string): string {
  if (label.startsWith("table_corner_")) {
    const n = label.slice(-1);
    const where = { "1": "near-left", "2": "far-left", "3": "far-right", "4": "near-right" }[n];
    return `table corner ${n} (${where})`;
  }
  if (label.startsWith("keyboard_")) {
    const n = label.slice(-1);
    const where = { "5": "near-left", "6": "far-left", "7": "far-right", "8": "near-right" }[n];
    return `keyboard corner ${n} (${where})`;
  }
  if (label.startsWith("monitor_")) {
    const n = label.split("_")[1];
    const where: Record<string, string> = {
      "9": "base near end", "10": "base far end",
      "11": "screen top-left", "12": "screen top-right", "13": "base midpoint",
    };
    return `monitor point ${n} (${where[n]})`;
  }
  const [kind, speaker] = label.split("_", 2);
  return `${kind} of speaker ${speaker}`;
}
