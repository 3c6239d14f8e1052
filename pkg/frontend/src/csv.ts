/** Reader for the simulator's sweep CSV schema. */

export const CSV_HEADER =
  "case,p,theta,J,Jz,B,Dz,Gz,gamma,sweep_param,sweep_value,t," +
  "C_l1,C_cc,QD,qd1,qd2,lambda1,lambda2,lambda3,lambda4";

export const COLUMNS = CSV_HEADER.split(",");

export const MEASURES = ["C_l1", "C_cc", "QD"] as const;
export type Measure = (typeof MEASURES)[number];

export interface Row {
  case: number;
  sweep_param: string;
  sweep_value: number;
  t: number;
  values: Record<string, number>;
}

export class SchemaError extends Error {}

function parseNumber(raw: string, column: string, line: number): number {
  if (raw === "inf") return Infinity;
  const value = Number(raw);
  if (raw === "" || Number.isNaN(value)) {
    throw new SchemaError(`line ${line}: column ${column} is not numeric: ${raw}`);
  }
  return value;
}

export function parseCsv(text: string): Row[] {
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) throw new SchemaError("empty input");
  const header = lines[0].split(",");
  for (const required of COLUMNS) {
    if (!header.includes(required)) {
      throw new SchemaError(`missing column: ${required}`);
    }
  }
  if (lines[0] !== CSV_HEADER) {
    throw new SchemaError("columns are present but not in the emitter's order");
  }
  if (lines.length === 1) throw new SchemaError("no data rows");

  const rows: Row[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== COLUMNS.length) {
      throw new SchemaError(`line ${i + 1}: expected ${COLUMNS.length} fields, got ${parts.length}`);
    }
    const values: Record<string, number> = {};
    let sweepParam = "";
    for (let k = 0; k < COLUMNS.length; k++) {
      if (COLUMNS[k] === "sweep_param") {
        sweepParam = parts[k];
      } else {
        values[COLUMNS[k]] = parseNumber(parts[k], COLUMNS[k], i + 1);
      }
    }
    rows.push({
      case: values["case"],
      sweep_param: sweepParam,
      sweep_value: values["sweep_value"],
      t: values["t"],
      values,
    });
  }
  return rows;
}
