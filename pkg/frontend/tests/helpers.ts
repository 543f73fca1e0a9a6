import type { InferenceResponse } from "../src/api.js";

export function fakeResponse(
  hex: string,
  rgb: number[],
  overrides: Partial<InferenceResponse> = {},
): InferenceResponse {
  return {
    rgb,
    hex,
    nearest: [
      { name: "alpha", rgb: [1, 2, 3], hex: "#010203", delta_e: 1.2 },
      { name: "beta", rgb: [4, 5, 6], hex: "#040506", delta_e: 2.5 },
      { name: "gamma", rgb: [7, 8, 9], hex: "#070809", delta_e: 9.0 },
    ],
    tokens: [2, 3, 0, 0, 0, 0],
    model_version: "test",
    ...overrides,
  };
}

// happy-dom round-trips hex colors through its CSS model, so compare
// case-insensitively on whatever the inline style reports
export function cssBackground(node: HTMLElement): string {
  return node.style.background.trim().toLowerCase();
}
