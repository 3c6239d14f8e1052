/** Minimal 5x7 bitmap font: digits, lowercase, the uppercase and punctuation
 * the plot labels need.  Unknown characters advance the cursor silently. */

export const GLYPH_WIDTH = 5;
export const GLYPH_HEIGHT = 7;

const GLYPHS: Record<string, string[]> = {
  "0": [".XXX.", "X...X", "X..XX", "X.X.X", "XX..X", "X...X", ".XXX."],
  "1": ["..X..", ".XX..", "..X..", "..X..", "..X..", "..X..", ".XXX."],
  "2": [".XXX.", "X...X", "....X", "...X.", "..X..", ".X...", "XXXXX"],
  "3": ["XXXXX", "....X", "...X.", "..XX.", "....X", "X...X", ".XXX."],
  "4": ["...X.", "..XX.", ".X.X.", "X..X.", "XXXXX", "...X.", "...X."],
  "5": ["XXXXX", "X....", "XXXX.", "....X", "....X", "X...X", ".XXX."],
  "6": ["..XX.", ".X...", "X....", "XXXX.", "X...X", "X...X", ".XXX."],
  "7": ["XXXXX", "....X", "...X.", "..X..", ".X...", ".X...", ".X..."],
  "8": [".XXX.", "X...X", "X...X", ".XXX.", "X...X", "X...X", ".XXX."],
  "9": [".XXX.", "X...X", "X...X", ".XXXX", "....X", "...X.", ".XX.."],
  a: [".....", ".....", ".XXX.", "....X", ".XXXX", "X...X", ".XXXX"],
  b: ["X....", "X....", "XXXX.", "X...X", "X...X", "X...X", "XXXX."],
  c: [".....", ".....", ".XXX.", "X....", "X....", "X....", ".XXX."],
  d: ["....X", "....X", ".XXXX", "X...X", "X...X", "X...X", ".XXXX"],
  e: [".....", ".....", ".XXX.", "X...X", "XXXXX", "X....", ".XXX."],
  f: ["..XX.", ".X...", "XXXX.", ".X...", ".X...", ".X...", ".X..."],
  g: [".....", ".XXXX", "X...X", "X...X", ".XXXX", "....X", ".XXX."],
  h: ["X....", "X....", "XXXX.", "X...X", "X...X", "X...X", "X...X"],
  i: ["..X..", ".....", ".XX..", "..X..", "..X..", "..X..", ".XXX."],
  j: ["...X.", ".....", "..XX.", "...X.", "...X.", "X..X.", ".XX.."],
  k: ["X....", "X....", "X..X.", "X.X..", "XX...", "X.X..", "X..X."],
  l: [".XX..", "..X..", "..X..", "..X..", "..X..", "..X..", ".XXX."],
  m: [".....", ".....", "XX.X.", "X.X.X", "X.X.X", "X.X.X", "X.X.X"],
  n: [".....", ".....", "XXXX.", "X...X", "X...X", "X...X", "X...X"],
  o: [".....", ".....", ".XXX.", "X...X", "X...X", "X...X", ".XXX."],
  p: [".....", ".....", "XXXX.", "X...X", "XXXX.", "X....", "X...."],
  q: [".....", ".....", ".XXXX", "X...X", ".XXXX", "....X", "....X"],
  r: [".....", ".....", "X.XX.", "XX..X", "X....", "X....", "X...."],
  s: [".....", ".....", ".XXXX", "X....", ".XXX.", "....X", "XXXX."],
  t: [".X...", ".X...", "XXXX.", ".X...", ".X...", ".X..X", "..XX."],
  u: [".....", ".....", "X...X", "X...X", "X...X", "X...X", ".XXXX"],
  v: [".....", ".....", "X...X", "X...X", "X...X", ".X.X.", "..X.."],
  w: [".....", ".....", "X...X", "X.X.X", "X.X.X", "X.X.X", ".X.X."],
  x: [".....", ".....", "X...X", ".X.X.", "..X..", ".X.X.", "X...X"],
  y: [".....", ".....", "X...X", "X...X", ".XXXX", "....X", ".XXX."],
  z: [".....", ".....", "XXXXX", "...X.", "..X..", ".X...", "XXXXX"],
  B: ["XXXX.", "X...X", "X...X", "XXXX.", "X...X", "X...X", "XXXX."],
  C: [".XXX.", "X...X", "X....", "X....", "X....", "X...X", ".XXX."],
  D: ["XXXX.", "X...X", "X...X", "X...X", "X...X", "X...X", "XXXX."],
  G: [".XXX.", "X...X", "X....", "X.XXX", "X...X", "X...X", ".XXXX"],
  J: ["..XXX", "...X.", "...X.", "...X.", "...X.", "X..X.", ".XX.."],
  L: ["X....", "X....", "X....", "X....", "X....", "X....", "XXXXX"],
  Q: [".XXX.", "X...X", "X...X", "X...X", "X.X.X", "X..X.", ".XX.X"],
  ".": [".....", ".....", ".....", ".....", ".....", ".XX..", ".XX.."],
  ",": [".....", ".....", ".....", ".....", ".XX..", "..X..", ".X..."],
  "-": [".....", ".....", ".....", "XXXXX", ".....", ".....", "....."],
  "=": [".....", ".....", "XXXXX", ".....", "XXXXX", ".....", "....."],
  _: [".....", ".....", ".....", ".....", ".....", ".....", "XXXXX"],
  ":": [".....", ".XX..", ".XX..", ".....", ".XX..", ".XX..", "....."],
  "+": [".....", "..X..", "..X..", "XXXXX", "..X..", "..X..", "....."],
  "/": ["....X", "...X.", "...X.", "..X..", ".X...", ".X...", "X...."],
  " ": [".....", ".....", ".....", ".....", ".....", ".....", "....."],
};

/** Bit rows (least significant bit = leftmost column) for one character. */
export function glyphRows(char: string): number[] | undefined {
  const art = GLYPHS[char];
  if (art === undefined) return undefined;
  return art.map((row) => {
    let bits = 0;
    for (let i = 0; i < GLYPH_WIDTH; i++) {
      if (row[i] === "X") bits |= 1 << i;
    }
    return bits;
  });
}
