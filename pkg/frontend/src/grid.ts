/** Pivot scan records into a rectangular grid and checksum its data. */

import { createHash } from "node:crypto";
import { Table, columnIndex } from "./csv.js";

export interface Grid {
  /** strictly increasing axis coordinates */
  x: number[];
  y: number[];
  /** values[j][i] is the cell at (x[i], y[j]) */
  values: number[][];
  xName: string;
  yName: string;
  valueName: string;
}

export function pivotGrid(table: Table, xName: string, yName: string, valueName: string): Grid {
  const xi = columnIndex(table, xName);
  const yi = columnIndex(table, yName);
  const vi = columnIndex(table, valueName);
  const xs = new Map<number, number>();
  const ys = new Map<number, number>();
  for (const row of table.rows) {
    xs.set(Number(row[xi]), 0);
    ys.set(Number(row[yi]), 0);
  }
  const x = [...xs.keys()].sort((a, b) => a - b);
  const y = [...ys.keys()].sort((a, b) => a - b);
  for (const [arr, name] of [[x, xName], [y, yName]] as const) {
    for (let k = 1; k < arr.length; k++) {
      if (!(arr[k]! > arr[k - 1]!)) throw new Error(`axis ${name} is not strictly increasing`);
    }
  }
  x.forEach((v, k) => xs.set(v, k));
  y.forEach((v, k) => ys.set(v, k));
  const values = y.map(() => new Array<number>(x.length).fill(Number.NaN));
  for (const row of table.rows) {
    const i = xs.get(Number(row[xi]))!;
    const j = ys.get(Number(row[yi]))!;
    values[j]![i] = Number(row[vi]);
  }
  for (const [j, line] of values.entries()) {
    for (const [i, v] of line.entries()) {
      if (Number.isNaN(v)) throw new Error(`missing grid node at (${x[i]}, ${y[j]})`);
    }
  }
  return { x, y, values, xName, yName, valueName };
}

/** Hash of the rendered grid data at 12 significant digits (environment independent). */
export function gridChecksum(grid: Grid): string {
  const fmt = (v: number) => (Object.is(v, -0) ? "0" : v.toPrecision(12));
  const payload = [
    grid.xName,
    grid.yName,
    grid.valueName,
    grid.x.map(fmt).join(","),
    grid.y.map(fmt).join(","),
    grid.values.map((line) => line.map(fmt).join(",")).join(";"),
  ].join("|");
  return createHash("sha256").update(payload).digest("hex");
}

export function gridMax(grid: Grid): number {
  let max = -Infinity;
  for (const line of grid.values) for (const v of line) max = Math.max(max, v);
  return max;
}
