import { CalcApi } from "./api.js";
import { History } from "./history.js";
import { parseTreeDump, resultRow } from "./render.js";
import { newSessionId } from "./session.js";

const STRATEGIES = ["parents", "memo", "naive"] as const;

/**
 * DOM shell around the pure pieces: one input box, an append-only list of
 * result rows, a strategy toggle and the generation browser.  One request
 * is in flight at a time; the submit control stays disabled meanwhile.
 */
export class CalculatorApp {
  private session = newSessionId();
  readonly history = new History();
  private pending = false;

  private input!: HTMLInputElement;
  private submit!: HTMLButtonElement;
  private rows!: HTMLElement;
  private tree!: HTMLElement;
  private depth!: HTMLSelectElement;
  private status!: HTMLElement;

  constructor(private readonly root: HTMLElement,
              private readonly api: CalcApi) {
    this.build();
  }

  private build(): void {
    this.root.innerHTML = `
      <h1>surreal calculator</h1>
      <p class="hint">numbers are dyadic (3/4, -2, 1/2); forms are
        &lt;L|R&gt;; try <code>2*2</code>, <code>x = &lt;0|1&gt;</code>,
        <code>x+x</code>, <code>2*2 = 4</code></p>
      <form class="entry">
        <input type="text" autocomplete="off" spellcheck="false"
               placeholder="expression, e.g. <0|1> * 2" />
        <button type="submit">evaluate</button>
        <select class="strategy" title="evaluation strategy">
          ${STRATEGIES.map((s) => `<option>${s}</option>`).join("")}
        </select>
        <button type="button" class="reset" title="new session">reset</button>
      </form>
      <div class="status"></div>
      <ol class="rows"></ol>
      <section class="browser">
        <h2>genealogy
          <select class="depth">
            ${[0, 1, 2, 3, 4, 5, 6].map((d) => `<option ${d === 2 ? "selected" : ""}>${d}</option>`).join("")}
          </select>
        </h2>
        <div class="tree"></div>
      </section>`;
    this.input = this.root.querySelector("input")!;
    this.submit = this.root.querySelector("button[type=submit]")!;
    this.rows = this.root.querySelector(".rows")!;
    this.tree = this.root.querySelector(".tree")!;
    this.depth = this.root.querySelector(".depth")!;
    this.status = this.root.querySelector(".status")!;

    this.root.querySelector("form")!.addEventListener("submit", (ev) => {
      ev.preventDefault();
      void this.submitExpression(this.input.value);
    });
    this.root.querySelector(".strategy")!.addEventListener("change", (ev) => {
      const strategy = (ev.target as HTMLSelectElement).value;
      void this.submitExpression(`:strategy ${strategy}`);
    });
    this.root.querySelector(".reset")!.addEventListener("click", () => {
      this.session = newSessionId();
      this.rows.innerHTML = "";
      this.status.textContent = "new session started";
    });
    this.depth.addEventListener("change", () => void this.loadTree());
    void this.loadTree();
  }

  async submitExpression(text: string): Promise<void> {
    const statement = text.trim();
    if (!statement || this.pending) return;
    this.pending = true;
    this.submit.disabled = true;
    this.status.textContent = "";
    try {
      const response = await this.api.evaluate(this.session, statement);
      this.history.append(statement, response);
      this.appendRow(statement, response);
      this.input.value = "";
    } catch {
      // network failure: history is untouched, offer a retry
      this.status.innerHTML = "";
      const note = document.createElement("span");
      note.className = "error";
      note.textContent = "network failure — ";
      const retry = document.createElement("button");
      retry.type = "button";
      retry.textContent = "retry";
      retry.addEventListener("click", () => void this.submitExpression(statement));
      note.appendChild(retry);
      this.status.appendChild(note);
    } finally {
      this.pending = false;
      this.submit.disabled = false;
    }
  }

  private appendRow(input: string, response: Parameters<typeof resultRow>[1]): void {
    const model = resultRow(input, response);
    const li = document.createElement("li");
    li.className = model.isError ? "row error" : "row";
    const echo = document.createElement("span");
    echo.className = "echo";
    echo.textContent = model.input;
    const text = document.createElement("span");
    text.className = "text";
    text.textContent = model.text;
    li.append(echo, text);
    if (model.meta) {
      const meta = document.createElement("span");
      meta.className = "meta";
      meta.textContent = model.meta;
      li.append(meta);
    }
    this.rows.append(li);
    li.scrollIntoView({ block: "nearest" });
  }

  async loadTree(): Promise<void> {
    try {
      const response = await this.api.tree(Number(this.depth.value));
      this.tree.innerHTML = "";
      if (!response.ok) {
        this.tree.textContent = "tree unavailable";
        return;
      }
      for (const node of parseTreeDump(response)) {
        const btn = document.createElement("button");
        btn.type = "button";
        btn.className = "node";
        btn.style.marginLeft = `${node.generation}em`;
        btn.textContent = node.name;
        btn.title = `${node.form} (gen ${node.generation})`;
        btn.addEventListener("click", () => {
          this.input.value += node.name;
          this.input.focus();
        });
        const line = document.createElement("div");
        line.append(btn);
        this.tree.append(line);
      }
    } catch {
      this.tree.textContent = "tree unavailable (network failure)";
    }
  }
}
