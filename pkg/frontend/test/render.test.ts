// Renders every figure-preset CSV produced by the simulator CLI and checks
// curve counts, steady-state reference lines, and byte-identical re-renders.
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { Measure, parseCsv } from "../src/csv.js";
import { PALETTE, PlotModel, buildModel } from "../src/model.js";
import { decodePng } from "../src/png.js";
import { renderModel, renderPng } from "../src/render.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

interface Expectation {
  measure: Measure;
  panels: number;
  curves: number;
  steady: number;
}

const EXPECTED: Record<string, Expectation> = {
  fig1a: { measure: "C_cc", panels: 2, curves: 4, steady: 3 }, // no steady row at gamma=0
  fig1b: { measure: "QD", panels: 2, curves: 4, steady: 3 },
  fig2a: { measure: "C_cc", panels: 1, curves: 4, steady: 4 },
  fig2b: { measure: "QD", panels: 1, curves: 4, steady: 4 },
  fig3a: { measure: "C_cc", panels: 1, curves: 4, steady: 4 },
  fig3b: { measure: "QD", panels: 1, curves: 4, steady: 4 },
  fig4a: { measure: "C_cc", panels: 2, curves: 4, steady: 4 },
  fig4b: { measure: "QD", panels: 2, curves: 4, steady: 4 },
  fig5a: { measure: "C_cc", panels: 2, curves: 5, steady: 5 },
  fig5b: { measure: "QD", panels: 2, curves: 5, steady: 5 },
};

function loadModel(name: string): PlotModel {
  const text = readFileSync(join(FIXTURES, `${name}.csv`), "utf8");
  return buildModel(parseCsv(text), EXPECTED[name].measure);
}

function paletteColorsPresent(rgba: Uint8Array): number {
  const present = new Set<number>();
  for (let i = 0; i < rgba.length; i += 4) {
    for (let c = 0; c < PALETTE.length; c++) {
      const [r, g, b] = PALETTE[c];
      if (rgba[i] === r && rgba[i + 1] === g && rgba[i + 2] === b) present.add(c);
    }
  }
  return present.size;
}

describe.each(Object.keys(EXPECTED))("preset %s", (name) => {
  const want = EXPECTED[name];

  it("groups into the expected panels, curves, and steady lines", () => {
    const model = loadModel(name);
    expect(model.panels).toHaveLength(want.panels);
    for (const panel of model.panels) {
      expect(panel.curves).toHaveLength(want.curves);
      expect(panel.steadyLines).toHaveLength(want.steady);
      for (const curve of panel.curves) {
        expect(curve.points).toHaveLength(600);
      }
    }
  });

  it("renders every curve in its own color", () => {
    const png = renderPng(loadModel(name));
    const decoded = decodePng(png);
    expect(paletteColorsPresent(decoded.rgba)).toBe(want.curves);
  });

  it("draws the dashed steady-state reference lines", () => {
    const model = loadModel(name);
    const withLines = renderPng(model);
    const stripped: PlotModel = {
      measure: model.measure,
      panels: model.panels.map((panel) => ({ ...panel, steadyLines: [] })),
    };
    expect(renderPng(stripped).equals(withLines)).toBe(false);
  });

  it("re-renders byte-identically", () => {
    const model = loadModel(name);
    expect(renderPng(model).equals(renderPng(loadModel(name)))).toBe(true);
  });
});

describe("renderModel", () => {
  it("draws dashes as interrupted runs along the steady line", () => {
    const model: PlotModel = {
      measure: "C_cc",
      panels: [{
        title: "case 1",
        curves: [{ label: "B=0.1", color: PALETTE[0],
                   points: [{ x: 0, y: 0 }, { x: 1, y: 1 }] }],
        steadyLines: [{ label: "B=0.1", color: PALETTE[1], y: 0.5 }],
      }],
    };
    const img = renderModel(model);
    // scan every row for the steady color; the dashed row must contain gaps
    const [r, g, b] = PALETTE[1];
    let dashedRows = 0;
    for (let y = 0; y < img.height; y++) {
      const runs: number[] = [];
      let run = 0;
      for (let x = 0; x < img.width; x++) {
        const i = 4 * (y * img.width + x);
        if (img.data[i] === r && img.data[i + 1] === g && img.data[i + 2] === b) {
          run++;
        } else if (run > 0) {
          runs.push(run);
          run = 0;
        }
      }
      if (run > 0) runs.push(run);
      if (runs.length > 3) dashedRows++;
    }
    expect(dashedRows).toBeGreaterThan(0);
  });
});
