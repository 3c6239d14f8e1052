/** Layout and drawing: one panel per case, one curve per swept value,
 * horizontal dashed reference lines for steady-state rows. */

import { Curve, Panel, PlotModel, Rgb, formatValue } from "./model.js";
import { encodePng } from "./png.js";
import { Raster, textWidth } from "./raster.js";

// All styling lives here; nothing else hard-codes appearance.
export const STYLE = {
  panelWidth: 420,
  panelHeight: 300,
  marginLeft: 64,
  marginRight: 18,
  marginTop: 30,
  panelGap: 46,
  xLabelBand: 34,
  legendRowHeight: 13,
  legendPad: 10,
  background: [255, 255, 255] as Rgb,
  axisColor: [60, 60, 60] as Rgb,
  gridColor: [225, 225, 225] as Rgb,
  textColor: [60, 60, 60] as Rgb,
  steadyDash: { on: 5, off: 4 },
  ticks: 5,
} as const;

interface Domain {
  lo: number;
  hi: number;
}

function padDomain(lo: number, hi: number): Domain {
  if (!(hi > lo)) {
    return { lo: lo - 0.5, hi: lo + 0.5 };
  }
  const pad = 0.05 * (hi - lo);
  return { lo: lo - pad, hi: hi + pad };
}

function panelDomains(panel: Panel): { x: Domain; y: Domain } {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const curve of panel.curves) {
    for (const point of curve.points) {
      xs.push(point.x);
      ys.push(point.y);
    }
  }
  for (const line of panel.steadyLines) ys.push(line.y);
  if (xs.length === 0) throw new Error(`panel ${panel.title} has no points`);
  return {
    x: { lo: Math.min(...xs), hi: Math.max(...xs) },
    y: padDomain(Math.min(...ys), Math.max(...ys)),
  };
}

function ticks(domain: Domain, count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i < count; i++) {
    out.push(domain.lo + ((domain.hi - domain.lo) * i) / (count - 1));
  }
  return out;
}

function fmtTick(value: number): string {
  if (value === 0) return "0";
  return Number(value.toPrecision(3)).toString();
}

function legendEntries(model: PlotModel): Curve[] {
  const seen = new Map<string, Curve>();
  for (const panel of model.panels) {
    for (const curve of panel.curves) {
      if (!seen.has(curve.label)) seen.set(curve.label, curve);
    }
  }
  return [...seen.values()];
}

export function renderModel(model: PlotModel): Raster {
  const s = STYLE;
  const nPanels = model.panels.length;
  const legend = legendEntries(model);
  const width = s.marginLeft + nPanels * s.panelWidth + (nPanels - 1) * s.panelGap + s.marginRight;
  const height = s.marginTop + s.panelHeight + s.xLabelBand
    + legend.length * s.legendRowHeight + s.legendPad;
  const img = new Raster(width, height, s.background);

  model.panels.forEach((panel, index) => {
    const left = s.marginLeft + index * (s.panelWidth + s.panelGap);
    const top = s.marginTop;
    const { x: xDom, y: yDom } = panelDomains(panel);
    const px = (x: number) =>
      left + ((x - xDom.lo) / (xDom.hi - xDom.lo || 1)) * (s.panelWidth - 1);
    const py = (y: number) =>
      top + s.panelHeight - 1 - ((y - yDom.lo) / (yDom.hi - yDom.lo)) * (s.panelHeight - 1);

    // grid + tick labels
    for (const tx of ticks(xDom, s.ticks)) {
      const gx = Math.round(px(tx));
      img.line(gx, top, gx, top + s.panelHeight - 1, s.gridColor);
      const label = fmtTick(tx);
      img.text(gx - Math.floor(textWidth(label) / 2), top + s.panelHeight + 4, label, s.textColor);
    }
    for (const ty of ticks(yDom, s.ticks)) {
      const gy = Math.round(py(ty));
      img.line(left, gy, left + s.panelWidth - 1, gy, s.gridColor);
      const label = fmtTick(ty);
      img.text(left - textWidth(label) - 6, gy - 3, label, s.textColor);
    }

    // frame
    img.line(left, top, left + s.panelWidth - 1, top, s.axisColor);
    img.line(left, top + s.panelHeight - 1, left + s.panelWidth - 1, top + s.panelHeight - 1,
             s.axisColor);
    img.line(left, top, left, top + s.panelHeight - 1, s.axisColor);
    img.line(left + s.panelWidth - 1, top, left + s.panelWidth - 1, top + s.panelHeight - 1,
             s.axisColor);

    // steady-state reference lines (dashed), then the trajectories on top
    for (const steady of panel.steadyLines) {
      const gy = Math.round(py(steady.y));
      img.line(left + 1, gy, left + s.panelWidth - 2, gy, steady.color, s.steadyDash);
    }
    for (const curve of panel.curves) {
      for (let i = 1; i < curve.points.length; i++) {
        img.line(px(curve.points[i - 1].x), py(curve.points[i - 1].y),
                 px(curve.points[i].x), py(curve.points[i].y), curve.color);
      }
      if (curve.points.length === 1) {
        img.set(Math.round(px(curve.points[0].x)), Math.round(py(curve.points[0].y)), curve.color);
      }
    }

    // panel title and axis names
    img.text(left + Math.floor((s.panelWidth - textWidth(panel.title)) / 2), top - 12,
             panel.title, s.textColor);
    img.text(left + s.panelWidth - textWidth("t") - 2, top + s.panelHeight + 14, "t",
             s.textColor);
    img.text(left + 4, top + 4, model.measure, s.textColor);
  });

  // legend: swatch line plus label, one row per swept value
  const legendTop = s.marginTop + s.panelHeight + s.xLabelBand;
  legend.forEach((curve, row) => {
    const y = legendTop + row * s.legendRowHeight;
    img.line(s.marginLeft, y + 3, s.marginLeft + 18, y + 3, curve.color);
    img.text(s.marginLeft + 24, y, curve.label, s.textColor);
  });

  return img;
}

export function renderPng(model: PlotModel): Buffer {
  const img = renderModel(model);
  return encodePng(img.width, img.height, img.data);
}

export { formatValue };
