/** SVG density plots: heatmap cells, contour lines, boundary overlays. */

import { contours } from "d3-contour";
import { Polyline } from "./boundaries.js";
import { Grid, gridMax } from "./grid.js";

const WIDTH = 640;
const HEIGHT = 520;
const MARGIN = { left: 64, right: 96, top: 28, bottom: 52 };

// viridis stops; interpolated linearly in RGB
const VIRIDIS: [number, number, number][] = [
  [68, 1, 84], [72, 40, 120], [62, 74, 137], [49, 104, 142], [38, 130, 142],
  [31, 158, 137], [53, 183, 121], [109, 205, 89], [180, 222, 44], [253, 231, 37],
];

export function colorAt(t: number): string {
  const clamped = Math.min(Math.max(t, 0), 1);
  const pos = clamped * (VIRIDIS.length - 1);
  const lo = Math.floor(pos);
  const hi = Math.min(lo + 1, VIRIDIS.length - 1);
  const frac = pos - lo;
  const mix = (a: number, b: number) => Math.round(a + (b - a) * frac);
  const [r1, g1, b1] = VIRIDIS[lo]!;
  const [r2, g2, b2] = VIRIDIS[hi]!;
  return `rgb(${mix(r1, r2)},${mix(g1, g2)},${mix(b1, b2)})`;
}

const fmt = (v: number) => {
  const text = v.toPrecision(6);
  return text.includes(".") ? text.replace(/\.?0+$/, "").replace(/\.?0+e/, "e") : text;
};

interface Scales {
  px: (x: number) => number;
  py: (y: number) => number;
}

function scales(grid: Grid): Scales {
  const x0 = grid.x[0]!;
  const x1 = grid.x[grid.x.length - 1]!;
  const y0 = grid.y[0]!;
  const y1 = grid.y[grid.y.length - 1]!;
  const innerW = WIDTH - MARGIN.left - MARGIN.right;
  const innerH = HEIGHT - MARGIN.top - MARGIN.bottom;
  return {
    px: (x) => MARGIN.left + ((x - x0) / (x1 - x0)) * innerW,
    py: (y) => MARGIN.top + innerH - ((y - y0) / (y1 - y0)) * innerH,
  };
}

function heatmapCells(grid: Grid, s: Scales, vmax: number): string {
  const parts: string[] = [];
  for (let j = 0; j < grid.y.length; j++) {
    for (let i = 0; i < grid.x.length; i++) {
      const x = grid.x[i]!;
      const y = grid.y[j]!;
      const xl = i === 0 ? x : (x + grid.x[i - 1]!) / 2;
      const xr = i === grid.x.length - 1 ? x : (x + grid.x[i + 1]!) / 2;
      const yl = j === 0 ? y : (y + grid.y[j - 1]!) / 2;
      const yr = j === grid.y.length - 1 ? y : (y + grid.y[j + 1]!) / 2;
      const value = grid.values[j]![i]!;
      const color = colorAt(vmax > 0 ? value / vmax : 0);
      parts.push(
        `<rect x="${fmt(s.px(xl))}" y="${fmt(s.py(yr))}" ` +
        `width="${fmt(s.px(xr) - s.px(xl))}" height="${fmt(s.py(yl) - s.py(yr))}" ` +
        `fill="${color}"/>`,
      );
    }
  }
  return `<g class="heatmap" shape-rendering="crispEdges">${parts.join("")}</g>`;
}

/** Contour polygons in data coordinates (cell-center convention). */
export function contourPaths(grid: Grid, levels: number[], s: Scales): string[] {
  const nx = grid.x.length;
  const ny = grid.y.length;
  const flat = new Array<number>(nx * ny);
  for (let j = 0; j < ny; j++) for (let i = 0; i < nx; i++) flat[j * nx + i] = grid.values[j]![i]!;
  // only levels that actually cut the data produce lines (a constant grid or
  // an out-of-range level would otherwise yield a spurious full-domain ring)
  const vmin = Math.min(...flat);
  const vmax = Math.max(...flat);
  levels = levels.filter((lv) => lv > vmin && lv < vmax);
  const stepX = (grid.x[nx - 1]! - grid.x[0]!) / (nx - 1);
  const stepY = (grid.y[ny - 1]! - grid.y[0]!) / (ny - 1);
  const toData = (gx: number, gy: number): [number, number] => [
    grid.x[0]! + (gx - 0.5) * stepX,
    grid.y[0]! + (gy - 0.5) * stepY,
  ];
  const generator = contours().size([nx, ny]).thresholds(levels).smooth(true);
  const paths: string[] = [];
  for (const multi of generator(flat)) {
    const segments: string[] = [];
    for (const polygon of multi.coordinates) {
      for (const ring of polygon) {
        const points = ring.map(([gx, gy]) => {
          const [dx, dy] = toData(gx!, gy!);
          return `${fmt(s.px(dx))},${fmt(s.py(dy))}`;
        });
        segments.push(`M${points.join("L")}Z`);
      }
    }
    if (segments.length > 0) {
      paths.push(
        `<path class="contour" data-level="${fmt(multi.value)}" d="${segments.join("")}" ` +
        `fill="none" stroke="black" stroke-width="0.8"/>`,
      );
    }
  }
  return paths;
}

function axes(grid: Grid, s: Scales): string {
  const parts: string[] = [];
  const ticks = (lo: number, hi: number) => {
    const span = hi - lo;
    const step = Math.pow(10, Math.floor(Math.log10(span / 4)));
    const mult = span / step > 12 ? 5 : span / step > 6 ? 2 : 1;
    const out: number[] = [];
    const t0 = Math.ceil(lo / (step * mult)) * step * mult;
    for (let t = t0; t <= hi + 1e-12; t += step * mult) out.push(t);
    return out;
  };
  const x0 = grid.x[0]!;
  const x1 = grid.x[grid.x.length - 1]!;
  const y0 = grid.y[0]!;
  const y1 = grid.y[grid.y.length - 1]!;
  const bottom = s.py(y0);
  for (const t of ticks(x0, x1)) {
    parts.push(`<line x1="${fmt(s.px(t))}" y1="${fmt(bottom)}" x2="${fmt(s.px(t))}" y2="${fmt(bottom + 5)}" stroke="black"/>`);
    parts.push(`<text x="${fmt(s.px(t))}" y="${fmt(bottom + 18)}" text-anchor="middle" font-size="11">${fmt(t)}</text>`);
  }
  for (const t of ticks(y0, y1)) {
    parts.push(`<line x1="${fmt(MARGIN.left - 5)}" y1="${fmt(s.py(t))}" x2="${fmt(MARGIN.left)}" y2="${fmt(s.py(t))}" stroke="black"/>`);
    parts.push(`<text x="${fmt(MARGIN.left - 8)}" y="${fmt(s.py(t) + 4)}" text-anchor="end" font-size="11">${fmt(t)}</text>`);
  }
  parts.push(`<text class="axis-label" x="${fmt((MARGIN.left + WIDTH - MARGIN.right) / 2)}" y="${fmt(HEIGHT - 12)}" text-anchor="middle" font-size="13">${grid.xName}</text>`);
  parts.push(`<text class="axis-label" x="16" y="${fmt((MARGIN.top + HEIGHT - MARGIN.bottom) / 2)}" text-anchor="middle" font-size="13" transform="rotate(-90 16 ${fmt((MARGIN.top + HEIGHT - MARGIN.bottom) / 2)})">${grid.yName}</text>`);
  return `<g class="axes">${parts.join("")}</g>`;
}

function colorbar(vmax: number): string {
  const x = WIDTH - MARGIN.right + 24;
  const h = HEIGHT - MARGIN.top - MARGIN.bottom;
  const parts: string[] = [];
  const steps = 64;
  for (let k = 0; k < steps; k++) {
    const y = MARGIN.top + h - ((k + 1) / steps) * h;
    parts.push(`<rect x="${x}" y="${fmt(y)}" width="14" height="${fmt(h / steps + 0.5)}" fill="${colorAt(k / (steps - 1))}"/>`);
  }
  parts.push(`<text x="${x + 18}" y="${fmt(MARGIN.top + 10)}" font-size="11">${fmt(vmax)}</text>`);
  parts.push(`<text x="${x + 18}" y="${fmt(MARGIN.top + h)}" font-size="11">0</text>`);
  return `<g class="colorbar">${parts.join("")}</g>`;
}

export function renderSvg(
  grid: Grid,
  levels: number[],
  boundaries: Polyline[],
  title?: string,
): string {
  const s = scales(grid);
  const vmax = Math.max(gridMax(grid), 0);
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    heatmapCells(grid, s, vmax),
    ...(vmax > 0 ? contourPaths(grid, levels, s) : []),
  ];
  for (const line of boundaries) {
    const points = line.points.map(([x, y]) => `${fmt(s.px(x))},${fmt(s.py(y))}`).join(" ");
    parts.push(`<polyline class="boundary" points="${points}" fill="none" stroke="black" stroke-width="1.6"/>`);
  }
  parts.push(axes(grid, s));
  parts.push(colorbar(vmax));
  if (title) {
    parts.push(`<text x="${WIDTH / 2}" y="18" text-anchor="middle" font-size="14">${title}</text>`);
  }
  parts.push(`<text class="value-label" x="${WIDTH - MARGIN.right + 24}" y="${HEIGHT - 12}" font-size="12">${grid.valueName}</text>`);
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
