import type { CalcApi } from "./api.js";
import type { EvalResponse } from "./types.js";

export interface HistoryEntry {
  input: string;
  response: EvalResponse;
  timestamp: number;
}

/** Append-only record of everything submitted in this page session. */
export class History {
  private readonly items: HistoryEntry[] = [];

  append(input: string, response: EvalResponse, timestamp = Date.now()): HistoryEntry {
    const entry = { input, response, timestamp };
    this.items.push(entry);
    return entry;
  }

  get entries(): readonly HistoryEntry[] {
    return this.items;
  }

  get length(): number {
    return this.items.length;
  }

  /**
   * Re-submit every input, in order, against a fresh session.  With a
   * deterministic engine this reproduces the original responses (apart
   * from timing), which is what the tests assert.
   */
  async replay(api: CalcApi, session: string): Promise<EvalResponse[]> {
    const out: EvalResponse[] = [];
    for (const entry of this.items) {
      out.push(await api.evaluate(session, entry.input));
    }
    return out;
  }
}
