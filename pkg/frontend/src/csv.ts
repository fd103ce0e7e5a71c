/** Minimal strict CSV reader (RFC-4180 quoting, LF or CRLF line ends). */

export interface Table {
  header: string[];
  rows: string[][];
}

export function parseCsv(text: string): Table {
  const rows: string[][] = [];
  let field = "";
  let row: string[] = [];
  let inQuotes = false;
  let i = 0;
  const push = () => {
    row.push(field);
    field = "";
  };
  const endRow = () => {
    push();
    rows.push(row);
    row = [];
  };
  while (i < text.length) {
    const ch = text[i]!;
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 2;
          continue;
        }
        inQuotes = false;
        i += 1;
        continue;
      }
      field += ch;
      i += 1;
      continue;
    }
    if (ch === '"' && field.length === 0) {
      inQuotes = true;
    } else if (ch === ",") {
      push();
    } else if (ch === "\n") {
      endRow();
    } else if (ch !== "\r") {
      field += ch;
    }
    i += 1;
  }
  if (field.length > 0 || row.length > 0) endRow();
  if (rows.length === 0) throw new Error("empty CSV");
  const header = rows[0]!;
  const body = rows.slice(1);
  for (const [k, r] of body.entries()) {
    if (r.length !== header.length) {
      throw new Error(`row ${k + 2} has ${r.length} fields, header has ${header.length}`);
    }
  }
  return { header, rows: body };
}

export function columnIndex(table: Table, name: string): number {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new Error(`column '${name}' not found; header has: ${table.header.join(", ")}`);
  }
  return idx;
}
