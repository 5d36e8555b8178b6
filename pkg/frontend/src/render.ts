import type { EvalResponse, TreeResponse } from "./types.js";

/**
 * Pure view models.  The calculator never does arithmetic of its own:
 * every number string shown comes verbatim out of a service response or
 * tree dump.
 */

export interface RowModel {
  input: string;
  /** Main line, byte-for-byte the service's display string. */
  text: string;
  isError: boolean;
  /** Secondary line with timing and counter deltas, "" for error rows. */
  meta: string;
}

export function resultRow(input: string, response: EvalResponse): RowModel {
  if (!response.ok) {
    return { input, text: response.display, isError: true, meta: "" };
  }
  const s = response.stats;
  const meta =
    `${response.millis.toFixed(2)} ms | ge ${s.geCalls}` +
    ` | plus ${s.plusEvals} | times ${s.timesEvals}`;
  return { input, text: response.display, isError: false, meta };
}

export interface TreeNodeModel {
  path: string;
  name: string;
  form: string;
  generation: number;
}

export function parseTreeDump(tree: TreeResponse): TreeNodeModel[] {
  if (tree.dump === "") return [];
  return tree.dump.split("\n").map((line) => {
    const [path = "", name = "", form = ""] = line.split("\t");
    return { path, name, form, generation: path.length };
  });
}
