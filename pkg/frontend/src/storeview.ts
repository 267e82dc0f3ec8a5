// View-model for the stored-history panel: list labels, add entries,
// surface duplicate-label conflicts inline.

import { ApiClient, FilterEntry, ServiceError } from "./api.js";

export interface StoreView {
  entries: FilterEntry[];
  empty: boolean;
  error: string | null;
}

export class StoreController {
  constructor(
    private api: ApiClient,
    private onView: (view: StoreView) => void,
  ) {}

  async refresh(): Promise<void> {
    try {
      const entries = await this.api.listFilters();
      this.onView({ entries, empty: entries.length === 0, error: null });
    } catch (err) {
      this.onView({ entries: [], empty: true, error: describe(err) });
    }
  }

  async add(label: string, password: string): Promise<void> {
    try {
      await this.api.addFilter(label, password);
    } catch (err) {
      const entries = await this.api.listFilters().catch(() => []);
      this.onView({ entries, empty: entries.length === 0, error: describe(err) });
      return;
    }
    await this.refresh();
  }
}

function describe(err: unknown): string {
  if (err instanceof ServiceError) return err.message;
  return "service unreachable";
}
