// View-model for the live similarity meter. Holds the candidate in
// memory only, tags every check request with a sequence number so a
// stale response can never overwrite a newer one, and backs off
// exponentially while the service is unreachable.

import { ApiClient, CheckDecision } from "./api.js";

export interface CheckRow {
  label: string;
  delta: number;
  barWidth: number; // percent, for the meter
}

export type BannerState = "neutral" | "accept" | "warn" | "offline";

export interface CheckView {
  rows: CheckRow[];
  maxDelta: number | null;
  threshold: number | null;
  banner: BannerState;
}

export const NEUTRAL_VIEW: CheckView = {
  rows: [],
  maxDelta: null,
  threshold: null,
  banner: "neutral",
};

const BACKOFF_BASE_MS = 500;
const BACKOFF_MAX_MS = 8000;

export function toView(decision: CheckDecision): CheckView {
  const rows = Object.entries(decision.deltas)
    .map(([label, delta]) => ({
      label,
      delta,
      barWidth: Math.round(delta * 100),
    }))
    .sort((a, b) => b.delta - a.delta);
  return {
    rows,
    maxDelta: decision.max_delta,
    threshold: decision.threshold,
    banner: decision.verdict,
  };
}

export class CheckController {
  private sequence = 0;
  private applied = 0;
  private failures = 0;
  private retryHandle: ReturnType<typeof setTimeout> | undefined;

  constructor(
    private api: ApiClient,
    private onView: (view: CheckView) => void,
  ) {}

  /** Latest candidate wins; empty input issues no request at all. */
  submit(candidate: string): void {
    if (this.retryHandle !== undefined) {
      clearTimeout(this.retryHandle);
      this.retryHandle = undefined;
    }
    if (candidate === "") {
      this.sequence += 1;
      this.applied = this.sequence;
      this.onView(NEUTRAL_VIEW);
      return;
    }
    const seq = ++this.sequence;
    this.api.check(candidate).then(
      (decision) => {
        if (seq <= this.applied) return; // stale response, discard
        this.applied = seq;
        this.failures = 0;
        this.onView(toView(decision));
      },
      () => {
        if (seq <= this.applied) return;
        this.applied = seq;
        this.failures += 1;
        this.onView({ ...NEUTRAL_VIEW, banner: "offline" });
        const delay = Math.min(
          BACKOFF_BASE_MS * 2 ** (this.failures - 1),
          BACKOFF_MAX_MS,
        );
        this.retryHandle = setTimeout(() => this.submit(candidate), delay);
      },
    );
  }
}
