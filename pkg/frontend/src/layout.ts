// Vertex placement. Grid presets get their fixed figure layout (mutable
// block row-major, frozen along the bottom and up the right edge); anything
// else falls back to a small deterministic force-directed relaxation.

export interface Point {
  x: number;
  y: number;
}

export function gridLayout(k: number, l: number, width: number, height: number): Point[] {
  const nmut = (k - 1) * (l - 1);
  const cell = Math.min(width / (l + 1), height / (k + 1));
  const at = (i: number, j: number): Point => ({ x: j * cell, y: i * cell });
  const points: Point[] = [];
  for (let v = 1; v <= k * l; v++) {
    let i: number, j: number;
    if (v <= nmut) {
      i = Math.floor((v - 1) / (l - 1)) + 1;
      j = ((v - 1) % (l - 1)) + 1;
    } else if (v <= nmut + l) {
      i = k;
      j = v - nmut;
    } else {
      i = k - (v - nmut - l);
      j = l;
    }
    points.push(at(i, j));
  }
  return points;
}

// detects the grid preset by vertex count: returns [k, l] or null
export function guessGrid(n: number, m: number): [number, number] | null {
  for (let k = 2; k <= 8; k++) {
    for (let l = 2; l <= 8; l++) {
      if ((k - 1) * (l - 1) === n && k * l === n + m) {
        return [k, l];
      }
    }
  }
  return null;
}

export function forceLayout(size: number, edges: Array<[number, number]>,
                            width: number, height: number,
                            iterations = 150): Point[] {
  // deterministic seed positions on a circle, then spring relaxation
  const pts: Point[] = [];
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.38;
  for (let v = 0; v < size; v++) {
    const angle = (2 * Math.PI * v) / size - Math.PI / 2;
    pts.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  }
  const ideal = radius * (size > 1 ? 1.6 / Math.sqrt(size) : 1);
  for (let step = 0; step < iterations; step++) {
    const disp = pts.map(() => ({ x: 0, y: 0 }));
    for (let a = 0; a < size; a++) {
      for (let b = a + 1; b < size; b++) {
        const dx = pts[a].x - pts[b].x;
        const dy = pts[a].y - pts[b].y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const rep = (ideal * ideal) / d2;
        disp[a].x += dx * rep * 0.5;
        disp[a].y += dy * rep * 0.5;
        disp[b].x -= dx * rep * 0.5;
        disp[b].y -= dy * rep * 0.5;
      }
    }
    for (const [a, b] of edges) {
      const dx = pts[a].x - pts[b].x;
      const dy = pts[a].y - pts[b].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-2;
      const att = (d - ideal) / d * 0.08;
      disp[a].x -= dx * att;
      disp[a].y -= dy * att;
      disp[b].x += dx * att;
      disp[b].y += dy * att;
    }
    const cool = 1 - step / iterations;
    for (let v = 0; v < size; v++) {
      pts[v].x += Math.max(-8, Math.min(8, disp[v].x)) * cool;
      pts[v].y += Math.max(-8, Math.min(8, disp[v].y)) * cool;
      pts[v].x = Math.max(20, Math.min(width - 20, pts[v].x));
      pts[v].y = Math.max(20, Math.min(height - 20, pts[v].y));
    }
  }
  return pts;
}

export function layoutFor(n: number, m: number, edges: Array<[number, number]>,
                          width: number, height: number): Point[] {
  const grid = guessGrid(n, m);
  if (grid) {
    return gridLayout(grid[0], grid[1], width, height);
  }
  return forceLayout(n + m, edges, width, height);
}
