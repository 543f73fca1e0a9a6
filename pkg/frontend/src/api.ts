// Thin typed wrappers over the inference service JSON API. The UI does
// no color math of its own; every number shown comes from these calls.

export interface NearestEntry {
  name: string;
  rgb: number[];
  hex: string;
  delta_e: number;
}

export interface InferenceResponse {
  rgb: number[];
  hex: string;
  nearest: NearestEntry[];
  tokens: number[];
  model_version: string;
}

export interface DeltaEResponse {
  metric: string;
  values: number[];
}

export type RgbPair = [number[], number[]];

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function postJson<T>(path: string, payload: unknown): Promise<T> {
  const res = await fetch(path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(payload),
  });
  const doc = await res.json();
  if (!res.ok) {
    throw new ApiError(res.status, doc.error ?? `request failed (${res.status})`);
  }
  return doc as T;
}

export function infer(description: string): Promise<InferenceResponse> {
  return postJson<InferenceResponse>("/api/infer", { description });
}

export async function deltaE(pairs: RgbPair[]): Promise<number[]> {
  const doc = await postJson<DeltaEResponse>("/api/delta-e", {
    pairs,
    metric: "ciede2000",
  });
  return doc.values;
}
