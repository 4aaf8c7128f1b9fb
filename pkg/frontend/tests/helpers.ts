import { readFileSync } from "node:fs";
import type { AnalyzeResponse, SweepResponse } from "../src/types.js";

// Frozen responses captured from the analysis service for the bundled
// retail-stores example; regenerate by POSTing the dataset to a running
// service and saving the bodies.
function load<T>(name: string): T {
  const url = new URL(`./fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

export const analyzeAt075 = (): AnalyzeResponse => load("analyze_075");
export const analyzeAt050 = (): AnalyzeResponse => load("analyze_050");
export const analyzeAt100 = (): AnalyzeResponse => load("analyze_100");
export const sweepFixture = (): SweepResponse => load("sweep");

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}
