/** Command line: render one density plot from a scan CSV.
 *
 * Either `--spec plot.json` (a PlotSpec) or the individual flags:
 *   --input scan.csv --x J1_over_J --y h_over_J --value N_mu1_S1S2
 *   [--levels 0.05,0.1,0.2,0.3,0.4] [--boundaries phases.json]
 *   [--title text] --out figure.svg
 */

import { readFileSync, writeFileSync } from "node:fs";
import { boundaryPolylines, parseBoundaries } from "./boundaries.js";
import { parseCsv } from "./csv.js";
import { gridChecksum, pivotGrid } from "./grid.js";
import { DEFAULT_LEVELS, PlotSpec, validateSpec } from "./plotspec.js";
import { renderSvg } from "./render.js";

function parseArgs(argv: string[]): PlotSpec {
  const flags = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key?.startsWith("--") || value === undefined) {
      throw new Error(`malformed arguments near '${key ?? ""}'`);
    }
    flags.set(key.slice(2), value);
  }
  if (flags.has("spec")) {
    return validateSpec(JSON.parse(readFileSync(flags.get("spec")!, "utf8")));
  }
  const need = (k: string): string => {
    const v = flags.get(k);
    if (!v) throw new Error(`missing --${k}`);
    return v;
  };
  return validateSpec({
    input: need("input"),
    xColumn: need("x"),
    yColumn: need("y"),
    valueColumn: need("value"),
    contourLevels: flags.has("levels")
      ? flags.get("levels")!.split(",").map(Number)
      : DEFAULT_LEVELS,
    boundaries: flags.get("boundaries"),
    output: need("out"),
    title: flags.get("title"),
  });
}

export function renderFromSpec(spec: PlotSpec): { checksum: string; svg: string } {
  const table = parseCsv(readFileSync(spec.input, "utf8"));
  const grid = pivotGrid(table, spec.xColumn, spec.yColumn, spec.valueColumn);
  const polylines = spec.boundaries
    ? boundaryPolylines(parseBoundaries(readFileSync(spec.boundaries, "utf8")), {
        x: [grid.x[0]!, grid.x[grid.x.length - 1]!],
        y: [grid.y[0]!, grid.y[grid.y.length - 1]!],
      })
    : [];
  const svg = renderSvg(grid, spec.contourLevels, polylines, spec.title);
  return { checksum: gridChecksum(grid), svg };
}

export function main(argv: string[]): number {
  let spec: PlotSpec;
  try {
    spec = parseArgs(argv);
  } catch (err) {
    console.error(`plotkit: ${(err as Error).message}`);
    return 1;
  }
  try {
    const { checksum, svg } = renderFromSpec(spec);
    writeFileSync(spec.output, svg);
    console.error(`wrote ${spec.output} (grid sha256 ${checksum.slice(0, 16)})`);
    return 0;
  } catch (err) {
    console.error(`plotkit: ${(err as Error).message}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  new URL(`file://${process.argv[1]}`).pathname === new URL(import.meta.url).pathname;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
