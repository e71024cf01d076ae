// Path console input: "3,2,1" or "[3, 2, 1]" in right-to-left notation
// (the rightmost direction is applied first, as in the workbench CLI).

export interface ParsedPath {
  steps: number[];        // as written, right to left
  applications: number[]; // order the service should mutate in
}

export function parsePath(text: string, n: number): ParsedPath {
  const cleaned = text.trim().replace(/^\[/, "").replace(/\]$/, "");
  if (cleaned === "") {
    throw new Error("empty path");
  }
  const parts = cleaned.split(/[\s,;]+/).filter((p) => p.length > 0);
  const steps = parts.map((p) => {
    if (!/^\d+$/.test(p)) {
      throw new Error(`bad direction '${p}'`);
    }
    return parseInt(p, 10);
  });
  for (const s of steps) {
    if (s < 1 || s > n) {
      throw new Error(`direction ${s} out of range 1..${n}`);
    }
  }
  return { steps, applications: [...steps].reverse() };
}
