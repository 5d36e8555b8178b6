/** Wire types of the calculator service (JSON over HTTP). */

export interface EvalRequest {
  session: string;
  input: string;
}

export interface EvalStats {
  geCalls: number;
  plusEvals: number;
  timesEvals: number;
}

export interface EvalResponse {
  ok: boolean;
  /** Formatted result or an "error: ..." string; always present. */
  display: string;
  name?: string;
  form?: string;
  generation?: number;
  millis: number;
  stats: EvalStats;
}

export interface TreeResponse {
  ok: boolean;
  depth: number;
  /** One node per line: path<TAB>name<TAB>form, in value order. */
  dump: string;
}
