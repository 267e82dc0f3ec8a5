// In-memory stand-in for the simbloom service. Implements the same
// bigram-overlap coefficient so scenario tests exercise realistic
// verdicts, and records every URL it is asked to fetch.

import { FetchLike } from "../src/api.js";

function bigrams(s: string): Set<string> {
  const grams = new Set<string>();
  for (let i = 0; i < s.length; i += 2) grams.add(s.slice(i, i + 2));
  return grams;
}

function dice(a: string, b: string): number {
  const ga = bigrams(a);
  const gb = bigrams(b);
  if (ga.size + gb.size === 0) return 1;
  let common = 0;
  for (const g of ga) if (gb.has(g)) common += 1;
  return (2 * common) / (ga.size + gb.size);
}

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export class StubService {
  passwords = new Map<string, string>();
  threshold = 0.6;
  requestedUrls: string[] = [];
  /** When set, /v1/check responses wait until the matching release. */
  pendingChecks: Array<{ candidate: string; resolve: () => void }> = [];
  holdChecks = false;
  offline = false;

  fetch: FetchLike = async (url, init) => {
    this.requestedUrls.push(String(url));
    if (this.offline) throw new TypeError("fetch failed");
    const { pathname } = new URL(String(url));
    const body = init?.body ? JSON.parse(String(init.body)) : null;

    if (pathname === "/v1/filters" && (!init || !init.method)) {
      return json(
        200,
        [...this.passwords.keys()].map((label) => ({
          label,
          created_at: "2026-01-01T00:00:00+00:00",
          nu: 2,
        })),
      );
    }
    if (pathname.startsWith("/v1/filters/") && init?.method === "POST") {
      const label = decodeURIComponent(pathname.slice("/v1/filters/".length));
      if (this.passwords.has(label)) return json(409, { detail: "duplicate" });
      if (typeof body?.password !== "string") return json(422, { detail: "bad body" });
      this.passwords.set(label, body.password);
      return json(201, { label });
    }
    if (pathname === "/v1/check" && init?.method === "POST") {
      if (typeof body?.password !== "string") return json(422, { detail: "bad body" });
      if (this.holdChecks) {
        await new Promise<void>((resolve) =>
          this.pendingChecks.push({ candidate: body.password, resolve }),
        );
      }
      const deltas: Record<string, number> = {};
      for (const [label, stored] of this.passwords) {
        deltas[label] = dice(body.password, stored);
      }
      const maxDelta = Math.max(0, ...Object.values(deltas));
      return json(200, {
        deltas,
        max_delta: maxDelta,
        threshold: this.threshold,
        verdict: this.passwords.size > 0 && maxDelta >= this.threshold
          ? "warn"
          : "accept",
      });
    }
    return json(404, { detail: "no such endpoint" });
  };

  /** Release the held check for the given candidate (out-of-order capable). */
  release(candidate: string): void {
    const i = this.pendingChecks.findIndex((p) => p.candidate === candidate);
    if (i === -1) throw new Error(`no pending check for ${candidate}`);
    this.pendingChecks.splice(i, 1)[0].resolve();
  }
}
