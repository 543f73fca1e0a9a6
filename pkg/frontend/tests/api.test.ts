import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, deltaE, infer } from "../src/api.js";

function jsonResponse(doc: unknown, status = 200) {
  return {
    ok: status < 400,
    status,
    json: async () => doc,
  };
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("infer", () => {
  it("posts the description and returns the parsed document", async () => {
    const doc = { rgb: [1, 2, 3], hex: "#010203", nearest: [], tokens: [], model_version: "v" };
    const fetchMock = vi.fn(async () => jsonResponse(doc));
    vi.stubGlobal("fetch", fetchMock);

    const result = await infer("deep teal");
    expect(result).toEqual(doc);
    expect(fetchMock).toHaveBeenCalledWith("/api/infer", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ description: "deep teal" }),
    });
  });

  it("raises ApiError carrying the service's message on 400", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => jsonResponse({ error: "empty description" }, 400)),
    );
    const failure = await infer("").catch((err) => err);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(400);
    expect(failure.message).toBe("empty description");
  });
});

describe("deltaE", () => {
  it("posts pairs with the ciede2000 metric and unwraps values", async () => {
    const fetchMock = vi.fn(async () =>
      jsonResponse({ metric: "ciede2000", values: [0, 12.34] }),
    );
    vi.stubGlobal("fetch", fetchMock);

    const pairs: [number[], number[]][] = [
      [[0, 0, 0], [0, 0, 0]],
      [[255, 0, 0], [0, 0, 255]],
    ];
    const values = await deltaE(pairs);
    expect(values).toEqual([0, 12.34]);
    expect(fetchMock).toHaveBeenCalledWith("/api/delta-e", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ pairs, metric: "ciede2000" }),
    });
  });
});
