// Pure state -> SVG markup. Vertices show their 1-based number and degree;
// frozen vertices are drawn boxed, mutable ones as circles. Arrows carry
// their weight when it exceeds 1. Keeping this a string function keeps it
// trivially testable.

import { SessionState } from "./api.js";
import { Point, layoutFor } from "./layout.js";

export interface RenderOptions {
  width?: number;
  height?: number;
  highlight?: number | null;  // 1-based vertex to emphasise
}

export function arrowsOf(state: SessionState): Array<[number, number, number]> {
  // [from, to, weight] with 0-based vertices. Mutable-mutable arrows are
  // the positive principal entries; a frozen row f encodes f -> j when
  // positive and j -> f when negative (frozen-frozen pairs have no column).
  const out: Array<[number, number, number]> = [];
  const size = state.n + state.m;
  for (let i = 0; i < state.n; i++) {
    for (let j = 0; j < state.n; j++) {
      if (state.matrix[i][j] > 0) {
        out.push([i, j, state.matrix[i][j]]);
      }
    }
  }
  for (let f = state.n; f < size; f++) {
    for (let j = 0; j < state.n; j++) {
      const w = state.matrix[f][j];
      if (w > 0) {
        out.push([f, j, w]);
      } else if (w < 0) {
        out.push([j, f, -w]);
      }
    }
  }
  return out;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function degreeLabel(deg: number[]): string {
  return deg.length === 1 ? String(deg[0]) : `(${deg.join(",")})`;
}

export function renderSession(state: SessionState, opts: RenderOptions = {}): string {
  const width = opts.width ?? 640;
  const height = opts.height ?? 480;
  const size = state.n + state.m;
  const edges = arrowsOf(state).map(([a, b]) => [a, b] as [number, number]);
  const pts: Point[] = layoutFor(state.n, state.m, edges, width, height);

  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
    `class="quiver" data-n="${state.n}" data-m="${state.m}">`);
  parts.push(`<defs><marker id="arr" viewBox="0 0 10 10" refX="9" refY="5" ` +
    `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
    `<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>`);

  for (const [a, b, w] of arrowsOf(state)) {
    const p = pts[a];
    const q = pts[b];
    const dx = q.x - p.x;
    const dy = q.y - p.y;
    const d = Math.sqrt(dx * dx + dy * dy) || 1;
    const off = 18;
    const x1 = p.x + (dx / d) * off;
    const y1 = p.y + (dy / d) * off;
    const x2 = q.x - (dx / d) * off;
    const y2 = q.y - (dy / d) * off;
    parts.push(`<line class="arrow" data-from="${a + 1}" data-to="${b + 1}" ` +
      `x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" ` +
      `y2="${y2.toFixed(1)}" marker-end="url(#arr)"/>`);
    if (w > 1) {
      const mx = (x1 + x2) / 2;
      const my = (y1 + y2) / 2;
      parts.push(`<text class="weight" x="${mx.toFixed(1)}" y="${(my - 4).toFixed(1)}">${w}</text>`);
    }
  }

  for (let v = 0; v < size; v++) {
    const p = pts[v];
    const frozen = v >= state.n;
    const hl = opts.highlight === v + 1 ? " highlight" : "";
    const deg = degreeLabel(state.degrees[v]);
    parts.push(`<g class="vertex${frozen ? " frozen" : " mutable"}${hl}" data-vertex="${v + 1}">`);
    if (frozen) {
      parts.push(`<rect x="${(p.x - 16).toFixed(1)}" y="${(p.y - 14).toFixed(1)}" width="32" height="28"/>`);
    } else {
      parts.push(`<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="16"/>`);
    }
    parts.push(`<text class="vnum" x="${p.x.toFixed(1)}" y="${(p.y + 4).toFixed(1)}">${v + 1}</text>`);
    parts.push(`<text class="degree" x="${p.x.toFixed(1)}" y="${(p.y - 20).toFixed(1)}">${esc(deg)}</text>`);
    parts.push(`</g>`);
  }
  parts.push(`</svg>`);
  return parts.join("");
}

export function renderHistory(history: number[]): string {
  if (history.length === 0) {
    return `<span class="crumb empty">(initial seed)</span>`;
  }
  return history.map((k, i) =>
    `<span class="crumb" data-step="${i}">${k}</span>`).join(" → ");
}

export function renderDenominators(state: SessionState): string {
  const rows = state.denominators.map((d, i) =>
    `<tr><td>x${i + 1}</td><td>(${d.join(", ")})</td>` +
    `<td>${esc(degreeLabel(state.degrees[i]))}</td></tr>`).join("");
  return `<table class="denoms"><thead><tr><th>var</th><th>denominator</th>` +
    `<th>degree</th></tr></thead><tbody>${rows}</tbody></table>`;
}
