// DOM builders. Every swatch takes its CSS background directly from
// the hex string of the response that owns it, never from recomputed
// channel values.

import type { HistoryEntry } from "./state.js";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

export function swatch(hex: string, className = "swatch"): HTMLDivElement {
  const node = el("div", className);
  node.style.background = hex;
  node.dataset.hex = hex;
  return node;
}

export function resultPanel(entry: HistoryEntry): HTMLElement {
  const { response } = entry;
  const panel = el("section", "result-panel");

  const main = el("div", "result-main");
  main.append(
    swatch(response.hex, "swatch swatch-large"),
    el("div", "result-caption",
      `"${entry.description}" → rgb(${response.rgb.join(", ")}) ${response.hex}`),
    el("div", "result-tokens", `tokens [${response.tokens.join(", ")}]`),
  );
  panel.append(main);

  const nearestRow = el("div", "nearest-row");
  for (const near of response.nearest) {
    const card = el("div", "nearest-card");
    card.append(
      swatch(near.hex, "swatch swatch-small"),
      el("div", "nearest-name", near.name),
      el("div", "nearest-delta", `ΔE ${near.delta_e.toFixed(2)}`),
    );
    nearestRow.append(card);
  }
  panel.append(nearestRow);
  return panel;
}

export interface HistoryCardHooks {
  pinned: boolean;
  onTogglePin: (entry: HistoryEntry) => void;
}

export function historyCard(
  entry: HistoryEntry,
  hooks: HistoryCardHooks,
): HTMLElement {
  const card = el("article", "history-card");
  card.dataset.entryId = String(entry.id);

  card.append(
    swatch(entry.response.hex, "swatch swatch-medium"),
    el("div", "card-description", entry.description),
    el("div", "card-hex", entry.response.hex),
  );

  const pinButton = el(
    "button",
    "pin-button",
    hooks.pinned ? "unpin" : "pin",
  );
  pinButton.type = "button";
  pinButton.addEventListener("click", () => hooks.onTogglePin(entry));
  card.append(pinButton);
  return card;
}

export interface PairwiseRow {
  label: string;
  value: number;
}

export function pinBoard(
  pins: readonly HistoryEntry[],
  pairwise: readonly PairwiseRow[] | "loading" | null,
  onUnpin: (entry: HistoryEntry) => void,
): HTMLElement {
  const board = el("section", "pin-board");
  if (pins.length === 0) {
    board.append(el("p", "pin-empty", "pin history cards to compare them here"));
    return board;
  }

  const row = el("div", "pin-row");
  for (const entry of pins) {
    const cell = el("div", "pin-cell");
    const unpinButton = el("button", "unpin-button", "×");
    unpinButton.type = "button";
    unpinButton.title = `unpin "${entry.description}"`;
    unpinButton.addEventListener("click", () => onUnpin(entry));
    cell.append(
      swatch(entry.response.hex, "swatch swatch-medium"),
      el("div", "pin-label", entry.description),
      unpinButton,
    );
    row.append(cell);
  }
  board.append(row);

  if (pairwise === "loading") {
    board.append(el("p", "pairwise-loading", "computing ΔE…"));
  } else if (pairwise && pairwise.length > 0) {
    const list = el("ul", "pairwise-list");
    for (const entry of pairwise) {
      list.append(
        el("li", "pairwise-item", `${entry.label}: ΔE ${entry.value.toFixed(2)}`),
      );
    }
    board.append(list);
  }
  return board;
}
