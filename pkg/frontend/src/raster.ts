/** Tiny deterministic RGBA rasterizer: lines (solid or dashed), rects, text. */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphRows } from "./font.js";
import { Rgb } from "./model.js";

export interface DashPattern {
  on: number;
  off: number;
}

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number, background: Rgb) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.data[4 * i] = background[0];
      this.data[4 * i + 1] = background[1];
      this.data[4 * i + 2] = background[2];
      this.data[4 * i + 3] = 255;
    }
  }

  set(x: number, y: number, color: Rgb): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = 4 * (y * this.width + x);
    this.data[i] = color[0];
    this.data[i + 1] = color[1];
    this.data[i + 2] = color[2];
    this.data[i + 3] = 255;
  }

  line(x0: number, y0: number, x1: number, y1: number, color: Rgb, dash?: DashPattern): void {
    // Bresenham; the dash pattern counts steps along the major axis.
    let x = Math.round(x0);
    let y = Math.round(y0);
    const xe = Math.round(x1);
    const ye = Math.round(y1);
    const dx = Math.abs(xe - x);
    const dy = -Math.abs(ye - y);
    const sx = x < xe ? 1 : -1;
    const sy = y < ye ? 1 : -1;
    let err = dx + dy;
    let step = 0;
    const period = dash ? dash.on + dash.off : 0;
    for (;;) {
      if (!dash || step % period < dash.on) this.set(x, y, color);
      if (x === xe && y === ye) break;
      const doubled = 2 * err;
      if (doubled >= dy) {
        err += dy;
        x += sx;
      }
      if (doubled <= dx) {
        err += dx;
        y += sy;
      }
      step++;
    }
  }

  fillRect(x: number, y: number, width: number, height: number, color: Rgb): void {
    for (let yy = y; yy < y + height; yy++) {
      for (let xx = x; xx < x + width; xx++) {
        this.set(xx, yy, color);
      }
    }
  }

  /** Draw text with its top-left corner at (x, y); returns the end x. */
  text(x: number, y: number, content: string, color: Rgb): number {
    let cursor = Math.round(x);
    const top = Math.round(y);
    for (const char of content) {
      const rows = glyphRows(char);
      if (rows !== undefined) {
        for (let row = 0; row < GLYPH_HEIGHT; row++) {
          for (let col = 0; col < GLYPH_WIDTH; col++) {
            if (rows[row] & (1 << col)) this.set(cursor + col, top + row, color);
          }
        }
      }
      cursor += GLYPH_WIDTH + 1;
    }
    return cursor;
  }
}

export function textWidth(content: string): number {
  return content.length * (GLYPH_WIDTH + 1) - 1;
}
