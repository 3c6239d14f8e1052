/** Grouping of CSV rows into panels (by case) and curves (by swept value). */

import { MEASURES, Measure, Row, SchemaError } from "./csv.js";

export type Rgb = readonly [number, number, number];

export interface Point {
  x: number;
  y: number;
}

export interface Curve {
  label: string;
  color: Rgb;
  points: Point[];
}

export interface SteadyLine {
  label: string;
  color: Rgb;
  y: number;
}

export interface Panel {
  title: string;
  curves: Curve[];
  steadyLines: SteadyLine[];
}

export interface PlotModel {
  measure: Measure;
  panels: Panel[];
}

export const PALETTE: readonly Rgb[] = [
  [214, 39, 40],
  [31, 119, 180],
  [44, 160, 44],
  [255, 127, 14],
  [148, 103, 189],
  [140, 86, 75],
];

export function formatValue(value: number): string {
  return Number(value.toPrecision(6)).toString();
}

function curveLabel(row: Row): string {
  return row.sweep_param === "none" ? "run" : `${row.sweep_param}=${formatValue(row.sweep_value)}`;
}

export function buildModel(rows: Row[], measure: Measure): PlotModel {
  if (!MEASURES.includes(measure)) {
    throw new SchemaError(`measure must be one of ${MEASURES.join(", ")}, got ${measure}`);
  }
  if (rows.length === 0) throw new SchemaError("no data rows");

  const colorByLabel = new Map<string, Rgb>();
  const colorOf = (label: string): Rgb => {
    let color = colorByLabel.get(label);
    if (color === undefined) {
      color = PALETTE[colorByLabel.size % PALETTE.length];
      colorByLabel.set(label, color);
    }
    return color;
  };

  const cases = [...new Set(rows.map((row) => row.case))].sort((a, b) => a - b);
  const panels: Panel[] = [];
  for (const caseId of cases) {
    const caseRows = rows.filter((row) => row.case === caseId);
    const curves = new Map<string, Curve>();
    const steadyLines: SteadyLine[] = [];
    for (const row of caseRows) {
      const label = curveLabel(row);
      const y = row.values[measure];
      if (Number.isFinite(row.t)) {
        let curve = curves.get(label);
        if (curve === undefined) {
          curve = { label, color: colorOf(label), points: [] };
          curves.set(label, curve);
        }
        curve.points.push({ x: row.t, y });
      } else {
        steadyLines.push({ label, color: colorOf(label), y });
      }
    }
    for (const curve of curves.values()) {
      curve.points.sort((a, b) => a.x - b.x);
    }
    panels.push({ title: `case ${caseId}`, curves: [...curves.values()], steadyLines });
  }
  return { measure, panels };
}
