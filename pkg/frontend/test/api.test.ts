import { describe, expect, it } from "vitest";
import { ApiError, ExplorerClient, SessionState } from "../src/api.js";

interface Recorded {
  url: string;
  method?: string;
  body?: string;
}

function fakeFetch(responses: Array<{ status: number; payload: unknown }>) {
  const calls: Recorded[] = [];
  const fetcher = async (url: string, init?: RequestInit): Promise<Response> => {
    calls.push({ url, method: init?.method, body: init?.body as string });
    const next = responses.shift() ?? { status: 500, payload: { error: "exhausted" } };
    return {
      ok: next.status < 400,
      status: next.status,
      json: async () => next.payload,
    } as Response;
  };
  return { fetcher, calls };
}

const state: SessionState = {
  id: "abc", n: 2, m: 0,
  matrix: [[0, 1], [-1, 0]],
  degrees: [[1], [1]],
  denominators: [[-1, 0], [0, -1]],
  last_variable_degree: null,
  history: [],
  labels: null,
};

describe("explorer client", () => {
  it("creates sessions and passes server state through untouched", async () => {
    const { fetcher, calls } = fakeFetch([
      { status: 200, payload: { id: "abc", state } },
    ]);
    const client = new ExplorerClient("http://host:1", fetcher);
    const got = await client.createSession("X7");
    expect(got).toEqual(state);
    expect(calls[0].url).toBe("http://host:1/sessions");
    expect(JSON.parse(calls[0].body!)).toEqual({ preset: "X7" });
  });

  it("sends mutate and undo to the session endpoints", async () => {
    const { fetcher, calls } = fakeFetch([
      { status: 200, payload: state },
      { status: 200, payload: state },
    ]);
    const client = new ExplorerClient("http://host:1/", fetcher);
    await client.mutate("abc", 2);
    await client.undo("abc");
    expect(calls[0].url).toBe("http://host:1/sessions/abc/mutate");
    expect(JSON.parse(calls[0].body!)).toEqual({ vertex: 2 });
    expect(calls[1].url).toBe("http://host:1/sessions/abc/undo");
    expect(calls[1].method).toBe("POST");
  });

  it("turns HTTP failures into ApiError with status", async () => {
    const { fetcher } = fakeFetch([
      { status: 409, payload: { error: "vertex 3 is frozen" } },
    ]);
    const client = new ExplorerClient("http://host:1", fetcher);
    try {
      await client.mutate("abc", 3);
      throw new Error("should have thrown");
    } catch (err) {
      expect(err).toBeInstanceOf(ApiError);
      expect((err as ApiError).status).toBe(409);
      expect((err as ApiError).message).toMatch(/frozen/);
    }
  });

  it("search posts the target and depth", async () => {
    const { fetcher, calls } = fakeFetch([
      { status: 200, payload: { path: [5, 4, 3] } },
    ]);
    const client = new ExplorerClient("http://host:1", fetcher);
    const got = await client.search("abc", 2, 5);
    expect(got.path).toEqual([5, 4, 3]);
    expect(JSON.parse(calls[0].body!)).toEqual({ target_degree: 2, max_depth: 5 });
  });
});
