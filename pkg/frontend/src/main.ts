// Wiring: one form, one result slot, an append-only history column,
// and a pin board whose pairwise distances come from the service.

import {
  ApiError,
  deltaE as serviceDeltaE,
  infer as serviceInfer,
  type InferenceResponse,
  type RgbPair,
} from "./api.js";
import { el, historyCard, pinBoard, resultPanel, type PairwiseRow } from "./render.js";
import { SessionState, type HistoryEntry } from "./state.js";

export interface ApiClient {
  infer(description: string): Promise<InferenceResponse>;
  deltaE(pairs: RgbPair[]): Promise<number[]>;
}

export interface App {
  state: SessionState;
  // the promises of in-flight work, so callers (and tests) can await them
  pendingSubmit: Promise<void> | null;
  pendingPairwise: Promise<void> | null;
}

const defaultClient: ApiClient = { infer: serviceInfer, deltaE: serviceDeltaE };

export function createApp(root: HTMLElement, api: ApiClient = defaultClient): App {
  const state = new SessionState();

  const form = el("form", "query-form");
  const input = el("input", "query-input");
  input.type = "text";
  input.placeholder = "describe a color, e.g. very light grey";
  input.setAttribute("aria-label", "color description");
  const submitButton = el("button", "query-submit", "predict");
  submitButton.type = "submit";
  form.append(input, submitButton);

  const notice = el("div", "notice");
  const resultSlot = el("div", "result-slot");
  const boardSlot = el("div", "board-slot");
  const historyHeading = el("h2", "history-heading", "history");
  const historyList = el("div", "history-list");

  root.replaceChildren(
    form, notice, resultSlot, boardSlot, historyHeading, historyList,
  );

  const app: App = { state, pendingSubmit: null, pendingPairwise: null };
  let pairwiseToken = 0;

  function syncControls(): void {
    submitButton.disabled = state.pending || input.value.trim() === "";
  }

  function clearNotice(): void {
    notice.replaceChildren();
  }

  function showError(message: string): void {
    notice.replaceChildren(el("p", "error-message", message));
  }

  function showRetry(message: string, description: string): void {
    const banner = el("div", "retry-banner");
    banner.append(el("span", "retry-message", message));
    const retryButton = el("button", "retry-button", "retry");
    retryButton.type = "button";
    retryButton.addEventListener("click", () => {
      app.pendingSubmit = submit(description);
    });
    banner.append(retryButton);
    notice.replaceChildren(banner);
  }

  function renderHistory(): void {
    historyList.replaceChildren(
      ...state.history.map((entry) =>
        historyCard(entry, {
          pinned: state.isPinned(entry),
          onTogglePin: togglePin,
        }),
      ),
    );
  }

  function renderBoard(pairwise: readonly PairwiseRow[] | "loading" | null): void {
    boardSlot.replaceChildren(pinBoard(state.pins, pairwise, togglePin));
  }

  function refreshPairwise(): void {
    const pins = state.pins;
    if (pins.length < 2) {
      renderBoard(null);
      return;
    }
    const pairs: RgbPair[] = [];
    const labels: string[] = [];
    for (let i = 0; i < pins.length; i += 1) {
      for (let j = i + 1; j < pins.length; j += 1) {
        pairs.push([pins[i].response.rgb, pins[j].response.rgb]);
        labels.push(`${pins[i].description} vs ${pins[j].description}`);
      }
    }
    renderBoard("loading");
    const token = ++pairwiseToken;
    app.pendingPairwise = api
      .deltaE(pairs)
      .then((values) => {
        if (token !== pairwiseToken) return; // pins changed meanwhile
        renderBoard(values.map((value, at) => ({ label: labels[at], value })));
      })
      .catch(() => {
        if (token !== pairwiseToken) return;
        renderBoard(null);
        showError("could not fetch pairwise distances");
      });
  }

  function togglePin(entry: HistoryEntry): void {
    state.togglePin(entry);
    renderHistory();
    refreshPairwise();
  }

  async function submit(description: string): Promise<void> {
    state.pending = true;
    syncControls();
    clearNotice();
    try {
      const response = await api.infer(description);
      const entry = state.addEntry(description, response);
      resultSlot.replaceChildren(resultPanel(entry));
      renderHistory();
    } catch (err) {
      if (err instanceof ApiError) {
        showError(err.message);
      } else {
        // network trouble: keep the input so the operator can retry
        showRetry("request failed, check the service", description);
      }
    } finally {
      state.pending = false;
      syncControls();
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const description = input.value.trim();
    if (description === "" || state.pending) return;
    app.pendingSubmit = submit(description);
  });
  input.addEventListener("input", syncControls);

  syncControls();
  renderBoard(null);
  renderHistory();
  return app;
}

const mount = document.getElementById("app");
if (mount) createApp(mount);
