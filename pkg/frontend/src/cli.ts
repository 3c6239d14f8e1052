/** plot --input PATH --measure {C_cc|QD|C_l1} --out PATH.png
 *
 * Reads the simulator's sweep CSV and writes a PNG: one panel per case, one
 * curve per swept value, dashed horizontal lines for steady-state rows.
 * Exit codes: 0 success, 2 bad arguments or malformed CSV, 1 I/O failure.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { MEASURES, Measure, SchemaError, parseCsv } from "./csv.js";
import { buildModel } from "./model.js";
import { renderPng } from "./render.js";

const USAGE = `usage: plot --input PATH --measure {${MEASURES.join("|")}} --out PATH.png`;

function parseArgs(argv: string[]): { input: string; measure: Measure; out: string } {
  const opts = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new SchemaError(USAGE);
    }
    opts.set(flag.slice(2), value);
  }
  const input = opts.get("input");
  const measure = opts.get("measure");
  const out = opts.get("out");
  if (input === undefined || measure === undefined || out === undefined) {
    throw new SchemaError(USAGE);
  }
  if (!(MEASURES as readonly string[]).includes(measure)) {
    throw new SchemaError(`unknown measure ${measure}; ${USAGE}`);
  }
  return { input, measure: measure as Measure, out };
}

export function main(argv: string[]): number {
  let args;
  try {
    args = parseArgs(argv);
  } catch (error) {
    console.error((error as Error).message);
    return 2;
  }
  try {
    const rows = parseCsv(readFileSync(args.input, "utf8"));
    const png = renderPng(buildModel(rows, args.measure));
    writeFileSync(args.out, png);
  } catch (error) {
    console.error(`error: ${(error as Error).message}`);
    return error instanceof SchemaError ? 2 : 1;
  }
  return 0;
}
