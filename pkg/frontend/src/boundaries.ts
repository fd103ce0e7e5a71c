/** Phase-boundary segments from the phase-diagram JSON, clipped to the plot window. */

export interface BoundarySegment {
  kind: "sloped" | "vertical";
  slope?: number;
  intercept?: number;
  j1_range?: [number, number];
  j1?: number;
  h_range?: [number, number];
}

export interface Polyline {
  points: [number, number][]; // (x, y) in data coordinates
}

interface Window {
  x: [number, number];
  y: [number, number];
}

export function parseBoundaries(jsonText: string): BoundarySegment[] {
  const data = JSON.parse(jsonText) as { segments?: BoundarySegment[] };
  if (!Array.isArray(data.segments)) throw new Error("boundary JSON lacks a 'segments' array");
  return data.segments;
}

/** Convert segments to polylines with x = J1/J and y = h/J, clipped to the window. */
export function boundaryPolylines(segments: BoundarySegment[], win: Window): Polyline[] {
  const out: Polyline[] = [];
  const clamp = (v: number, [lo, hi]: [number, number]) => Math.min(Math.max(v, lo), hi);
  for (const seg of segments) {
    if (seg.kind === "vertical") {
      const x = seg.j1 ?? 0;
      if (x < win.x[0] || x > win.x[1] || !seg.h_range) continue;
      const y0 = clamp(seg.h_range[0], win.y);
      const y1 = clamp(seg.h_range[1], win.y);
      if (y1 > y0) out.push({ points: [[x, y0], [x, y1]] });
      continue;
    }
    const { slope = 0, intercept = 0 } = seg;
    const [j1lo, j1hi] = seg.j1_range ?? win.x;
    const x0 = clamp(j1lo, win.x);
    const x1 = clamp(j1hi, win.x);
    if (!(x1 > x0)) continue;
    // clip h = intercept + slope * x against the y window
    let [xa, xb] = [x0, x1];
    const h = (x: number) => intercept + slope * x;
    if (slope !== 0) {
      const xAtY = (y: number) => (y - intercept) / slope;
      const lo = Math.min(xAtY(win.y[0]), xAtY(win.y[1]));
      const hi = Math.max(xAtY(win.y[0]), xAtY(win.y[1]));
      xa = Math.max(xa, lo);
      xb = Math.min(xb, hi);
    } else if (h(x0) < win.y[0] || h(x0) > win.y[1]) {
      continue;
    }
    if (xb > xa) out.push({ points: [[xa, h(xa)], [xb, h(xb)]] });
  }
  return out;
}
