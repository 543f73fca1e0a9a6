import { describe, expect, it } from "vitest";

import { MAX_PINS, SessionState } from "../src/state.js";
import { fakeResponse } from "./helpers.js";

function filled(state: SessionState, count: number) {
  return Array.from({ length: count }, (_, at) =>
    state.addEntry(`color ${at}`, fakeResponse("#000000", [0, 0, 0])),
  );
}

describe("history", () => {
  it("appends entries in order with increasing ids", () => {
    const state = new SessionState();
    const entries = filled(state, 3);
    expect(state.history.map((e) => e.description)).toEqual([
      "color 0", "color 1", "color 2",
    ]);
    expect(entries[0].id).toBeLessThan(entries[1].id);
    expect(entries[1].id).toBeLessThan(entries[2].id);
  });

  it("is untouched by pinning and unpinning", () => {
    const state = new SessionState();
    const [a, b] = filled(state, 2);
    state.pin(a);
    state.pin(b);
    state.unpin(a);
    expect(state.history).toHaveLength(2);
    expect(state.history[0]).toBe(a);
  });

  it("records identical descriptions as separate entries", () => {
    const state = new SessionState();
    const response = fakeResponse("#123456", [18, 52, 86]);
    const first = state.addEntry("same words", response);
    const second = state.addEntry("same words", response);
    expect(first.id).not.toBe(second.id);
    expect(state.history).toHaveLength(2);
  });
});

describe("pins", () => {
  it("toggles membership", () => {
    const state = new SessionState();
    const [entry] = filled(state, 1);
    expect(state.isPinned(entry)).toBe(false);
    state.togglePin(entry);
    expect(state.isPinned(entry)).toBe(true);
    state.togglePin(entry);
    expect(state.isPinned(entry)).toBe(false);
  });

  it("does not duplicate an already pinned entry", () => {
    const state = new SessionState();
    const [entry] = filled(state, 1);
    state.pin(entry);
    state.pin(entry);
    expect(state.pins).toHaveLength(1);
  });

  it("replaces the oldest pin once the board is full", () => {
    const state = new SessionState();
    const entries = filled(state, MAX_PINS + 1);
    for (const entry of entries) state.pin(entry);
    expect(state.pins).toHaveLength(MAX_PINS);
    expect(state.isPinned(entries[0])).toBe(false);
    expect(state.pins[0]).toBe(entries[1]);
    expect(state.pins[MAX_PINS - 1]).toBe(entries[MAX_PINS]);
  });

  it("keeps pin order stable under unpin", () => {
    const state = new SessionState();
    const [a, b, c] = filled(state, 3);
    state.pin(a);
    state.pin(b);
    state.pin(c);
    state.unpin(b);
    expect(state.pins.map((e) => e.id)).toEqual([a.id, c.id]);
  });
});
