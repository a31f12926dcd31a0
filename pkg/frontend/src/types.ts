/** Wire types shared with the estimation service. */

export interface PointDoc {
  label: string;
  x: number;
  y: number;
}

/** Annotation document; field names must match the service schema. */
export interface AnnotationDoc {
  frame_id: string;
  keyboard_width_in: number;
  speakers: string[];
  scales_ppi: Record<string, number>;
  points: PointDoc[];
  monitor_width_in?: number;
}

export interface GeometryDoc {
  table: { width_in: number; depth_in: number };
  mic: [number, number, number];
  mouths_in: Record<string, [number, number, number]>;
  distances_in: Record<string, number>;
}

export interface LineSegmentDoc {
  from: [number, number];
  to: [number, number];
}

export interface DiagnosticsDoc {
  lines: Record<string, LineSegmentDoc>;
  cross_ratios: Record<string, number>;
  warnings: string[];
  depth_method: "cross_ratio" | "pixel_scale" | null;
}

export interface EstimateResponse {
  geometry: GeometryDoc;
  diagnostics: DiagnosticsDoc;
}

export interface ServiceError {
  code: string;
  message: string;
}

export interface FrameInfo {
  frame_id: string;
  filename: string;
}

export interface ImagePoint {
  x: number;
  y: number;
}
