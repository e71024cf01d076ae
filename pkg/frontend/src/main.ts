import { ExplorerClient } from "./api.js";
import { ExplorerApp } from "./app.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const backend = new URLSearchParams(window.location.search).get("backend")
  ?? "http://127.0.0.1:8642";

const app = new ExplorerApp(new ExplorerClient(backend), {
  graph: el("graph"),
  history: el("history"),
  denominators: el("denominators"),
  notice: el("notice"),
  presetSelect: el<HTMLSelectElement>("preset"),
  pathInput: el<HTMLInputElement>("path"),
  searchInput: el<HTMLInputElement>("search"),
  undoButton: el<HTMLButtonElement>("undo"),
});

el<HTMLButtonElement>("load").addEventListener("click", () => {
  void app.openPreset(app.els.presetSelect.value);
});
el<HTMLButtonElement>("undo").addEventListener("click", () => void app.undo());
el<HTMLButtonElement>("apply").addEventListener("click", () => {
  void app.applyPathText(app.els.pathInput.value);
});
el<HTMLButtonElement>("dosearch").addEventListener("click", () => {
  void app.searchDegree(app.els.searchInput.value);
});

void app.loadPresets().then(() => app.openPreset("X7"))
  .catch((err) => app.surface(err));
