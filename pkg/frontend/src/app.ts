// Wires the session client, request queue and renderers to the DOM.

import { ApiError, ExplorerClient, SessionState } from "./api.js";
import { parsePath } from "./console.js";
import { RequestQueue } from "./queue.js";
import { renderDenominators, renderHistory, renderSession } from "./render.js";

export interface AppElements {
  graph: HTMLElement;
  history: HTMLElement;
  denominators: HTMLElement;
  notice: HTMLElement;
  presetSelect: HTMLSelectElement;
  pathInput: HTMLInputElement;
  searchInput: HTMLInputElement;
  undoButton: HTMLButtonElement;
}

export class ExplorerApp {
  client: ExplorerClient;
  queue = new RequestQueue();
  els: AppElements;
  state: SessionState | null = null;

  constructor(client: ExplorerClient, els: AppElements) {
    this.client = client;
    this.els = els;
  }

  notice(text: string, kind: "info" | "error" = "info"): void {
    this.els.notice.textContent = text;
    this.els.notice.className = `notice ${kind}`;
  }

  show(state: SessionState, highlight: number | null = null): void {
    this.state = state;
    this.els.graph.innerHTML = renderSession(state, { highlight });
    this.els.history.innerHTML = renderHistory(state.history);
    this.els.denominators.innerHTML = renderDenominators(state);
    this.els.undoButton.disabled = state.history.length === 0;
    this.bindVertexClicks();
  }

  bindVertexClicks(): void {
    const nodes = this.els.graph.querySelectorAll<SVGGElement>("g.vertex");
    nodes.forEach((node) => {
      node.addEventListener("click", () => {
        const vertex = parseInt(node.dataset.vertex ?? "0", 10);
        void this.clickVertex(vertex);
      });
    });
  }

  async loadPresets(): Promise<void> {
    const { presets } = await this.client.presets();
    this.els.presetSelect.innerHTML = presets
      .map((p) => `<option value="${p}">${p}</option>`).join("");
  }

  async openPreset(name: string): Promise<void> {
    const state = await this.queue.enqueue(() => this.client.createSession(name));
    this.show(state);
    this.notice(`loaded ${name}`);
  }

  async clickVertex(vertex: number): Promise<void> {
    const state = this.state;
    if (!state) return;
    if (vertex > state.n) {
      this.notice(`vertex ${vertex} is frozen`, "error");
      return;
    }
    try {
      const next = await this.queue.enqueue(() => this.client.mutate(state.id, vertex));
      this.show(next, vertex);
      const deg = next.last_variable_degree;
      this.notice(`mutated at ${vertex}; new degree ${deg ? deg.join(",") : "?"}`);
    } catch (err) {
      this.surface(err);
    }
  }

  async undo(): Promise<void> {
    if (!this.state) return;
    const id = this.state.id;
    try {
      const next = await this.queue.enqueue(() => this.client.undo(id));
      this.show(next);
      this.notice("undid last mutation");
    } catch (err) {
      this.surface(err);
    }
  }

  async applyPathText(text: string): Promise<SessionState | null> {
    const state = this.state;
    if (!state) return null;
    let parsed;
    try {
      parsed = parsePath(text, state.n);
    } catch (err) {
      this.surface(err);
      return null;
    }
    let cur = state;
    for (const vertex of parsed.applications) {
      cur = await this.queue.enqueue(() => this.client.mutate(state.id, vertex));
      this.show(cur, vertex);
    }
    this.notice(`applied [${parsed.steps.join(",")}]`);
    return cur;
  }

  async searchDegree(text: string): Promise<void> {
    const state = this.state;
    if (!state) return;
    const target = text.includes(",")
      ? text.split(",").map((t) => parseInt(t.trim(), 10))
      : parseInt(text.trim(), 10);
    try {
      const { path } = await this.queue.enqueue(
        () => this.client.search(state.id, target, 6));
      this.notice(path ? `path to degree ${text}: [${path.join(",")}]`
                       : `no path to degree ${text} within depth 6`);
    } catch (err) {
      this.surface(err);
    }
  }

  surface(err: unknown): void {
    if (err instanceof ApiError) {
      this.notice(err.message, "error");
    } else if (err instanceof Error) {
      this.notice(err.message, "error");
    } else {
      this.notice(String(err), "error");
    }
  }
}
