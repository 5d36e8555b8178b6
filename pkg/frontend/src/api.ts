import type { EvalResponse, TreeResponse } from "./types.js";

/**
 * Thin client for the calculator service.  Protocol-level failures
 * (malformed request, depth out of range) still come back as JSON with
 * ok=false and are returned normally; only transport failures throw.
 */
export class CalcApi {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  async evaluate(session: string, input: string): Promise<EvalResponse> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/eval`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ session, input }),
    });
    return (await resp.json()) as EvalResponse;
  }

  async tree(depth: number): Promise<TreeResponse> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/tree?depth=${depth}`);
    return (await resp.json()) as TreeResponse;
  }

  async health(): Promise<boolean> {
    try {
      const resp = await this.fetchFn(`${this.baseUrl}/api/health`);
      const body = (await resp.json()) as { ok?: boolean };
      return body.ok === true;
    } catch {
      return false;
    }
  }
}
