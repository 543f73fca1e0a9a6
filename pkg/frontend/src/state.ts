// Session state for the explorer. History is append-only: refining a
// phrase adds a new entry rather than touching old ones, so attempts
// stay comparable. Pins are a small working set drawn from history.

import type { InferenceResponse } from "./api.js";

export interface HistoryEntry {
  readonly id: number;
  readonly description: string;
  readonly response: InferenceResponse;
  readonly timestamp: number;
}

export const MAX_PINS = 4;

export class SessionState {
  private readonly entries: HistoryEntry[] = [];
  private readonly pinned: HistoryEntry[] = [];
  private nextId = 1;
  pending = false;

  get history(): readonly HistoryEntry[] {
    return this.entries;
  }

  get pins(): readonly HistoryEntry[] {
    return this.pinned;
  }

  addEntry(
    description: string,
    response: InferenceResponse,
    timestamp: number = Date.now(),
  ): HistoryEntry {
    const entry: HistoryEntry = {
      id: this.nextId++,
      description,
      response,
      timestamp,
    };
    this.entries.push(entry);
    return entry;
  }

  isPinned(entry: HistoryEntry): boolean {
    return this.pinned.some((pin) => pin.id === entry.id);
  }

  pin(entry: HistoryEntry): void {
    if (this.isPinned(entry)) return;
    if (this.pinned.length >= MAX_PINS) {
      // a fifth pin replaces the oldest one
      this.pinned.shift();
    }
    this.pinned.push(entry);
  }

  unpin(entry: HistoryEntry): void {
    const at = this.pinned.findIndex((pin) => pin.id === entry.id);
    if (at >= 0) this.pinned.splice(at, 1);
  }

  togglePin(entry: HistoryEntry): void {
    if (this.isPinned(entry)) {
      this.unpin(entry);
    } else {
      this.pin(entry);
    }
  }
}
