/** Plot specification: CSV source, columns, contour levels, output target. */

export interface PlotSpec {
  input: string;
  xColumn: string;
  yColumn: string;
  valueColumn: string;
  contourLevels: number[];
  boundaries?: string;
  output: string;
  title?: string;
}

export const DEFAULT_LEVELS = [0.05, 0.1, 0.2, 0.3, 0.4];

export function validateSpec(raw: unknown): PlotSpec {
  if (typeof raw !== "object" || raw === null) throw new Error("plot spec must be an object");
  const spec = raw as Record<string, unknown>;
  const str = (key: string, optional = false): string | undefined => {
    const v = spec[key];
    if (v === undefined) {
      if (optional) return undefined;
      throw new Error(`plot spec missing '${key}'`);
    }
    if (typeof v !== "string" || v.length === 0) throw new Error(`plot spec '${key}' must be a non-empty string`);
    return v;
  };
  let levels = DEFAULT_LEVELS;
  if (spec.contourLevels !== undefined) {
    if (!Array.isArray(spec.contourLevels) || !spec.contourLevels.every((v) => typeof v === "number")) {
      throw new Error("plot spec 'contourLevels' must be an array of numbers");
    }
    levels = spec.contourLevels as number[];
  }
  return {
    input: str("input")!,
    xColumn: str("xColumn")!,
    yColumn: str("yColumn")!,
    valueColumn: str("valueColumn")!,
    contourLevels: levels,
    boundaries: str("boundaries", true),
    output: str("output")!,
    title: str("title", true),
  };
}
