"""Interactive terminal calculator.

Statements are evaluated against one engine and one environment; commands
start with ``:``.  Errors are reported inline and never end the session.
"""

from __future__ import annotations

import sys
import time

from .engine import Engine, Strategy
from .errors import SurrealError
from .lang import eval_ast, format_value, parse

PROMPT = "surreal> "

HELP = """\
statements:
  EXPR            evaluate, e.g. 2*2, <0|1> + 1/2, x < 3/4
  NAME = EXPR     bind a variable
commands:
  :help           this text
  :gen D          dump the genealogy tree to generation D
  :time EXPR      evaluate and report wall time and counter deltas
  :stats          show operation counters
  :reset          reset counters and variables
  :strategy S     naive | memo | parents (clears the tables)
  :parents on|off toggle the parents optimization (parents <-> memo)
  :quit           leave
"""


class Repl:
    def __init__(self, engine: Engine | None = None,
                 stdin=None, stdout=None):
        self.engine = engine if engine is not None else Engine()
        self.env: dict = {}
        self.stdin = stdin if stdin is not None else sys.stdin
        self.stdout = stdout if stdout is not None else sys.stdout

    def run(self) -> int:
        while True:
            self.stdout.write(PROMPT)
            self.stdout.flush()
            try:
                line = self.stdin.readline()
            except OSError:
                return 1
            if line == "":  # EOF
                self.stdout.write("\n")
                return 0
            line = line.strip()
            if not line:
                continue
            if line.startswith(":"):
                if self.command(line) is not None:
                    return 0
            else:
                self.evaluate(line)

    # returns non-None to quit
    def command(self, line: str):
        parts = line.split(None, 1)
        cmd, arg = parts[0], (parts[1] if len(parts) > 1 else "")
        if cmd in (":quit", ":q"):
            return 0
        if cmd == ":help":
            self.stdout.write(HELP)
        elif cmd == ":stats":
            for field, value in self.engine.stats_snapshot().as_dict().items():
                self.stdout.write(f"{field} = {value}\n")
        elif cmd == ":reset":
            self.engine.stats_reset()
            self.env.clear()
            self.stdout.write("counters and variables cleared\n")
        elif cmd == ":gen":
            try:
                depth = int(arg)
                if depth < 0:
                    raise ValueError
            except ValueError:
                self.stdout.write("error: :gen needs a non-negative depth\n")
                return None
            if depth > 16:  # 2^17-1 lines is already beyond any terminal
                self.stdout.write("error: :gen depth is capped at 16\n")
                return None
            try:
                for line_ in self.engine.tree.dump(depth):
                    self.stdout.write(line_ + "\n")
            except SurrealError as exc:
                self.stdout.write(f"error: {exc}\n")
        elif cmd == ":time":
            before = self.engine.stats_snapshot()
            start = time.perf_counter()
            if self.evaluate(arg):
                millis = (time.perf_counter() - start) * 1000.0
                d = self.engine.stats_snapshot().delta(before)
                self.stdout.write(
                    f"time: {millis:.3f} ms | ge={d.ge_calls} "
                    f"plus={d.plus_evals} times={d.times_evals} "
                    f"select={d.select_steps} hits={d.table_hits}\n")
        elif cmd == ":strategy":
            try:
                self.engine.set_strategy(Strategy(arg.strip()))
                self.stdout.write(f"strategy set to {arg.strip()}\n")
            except ValueError:
                self.stdout.write(
                    "error: strategy must be naive, memo or parents\n")
        elif cmd == ":parents":
            flag = arg.strip()
            if flag == "on":
                self.engine.set_strategy(Strategy.MEMO_PARENTS)
                self.stdout.write("parents optimization on\n")
            elif flag == "off":
                self.engine.set_strategy(Strategy.MEMO)
                self.stdout.write("parents optimization off\n")
            else:
                self.stdout.write("error: :parents takes on or off\n")
        else:
            self.stdout.write(f"error: unknown command {cmd}\n")
        return None

    def evaluate(self, text: str) -> bool:
        try:
            value = eval_ast(parse(text), self.env, self.engine)
        except SurrealError as exc:
            self.stdout.write(f"error: {exc}\n")
            return False
        self.stdout.write(format_value(value) + "\n")
        return True


def run_repl(engine: Engine | None = None) -> int:
    return Repl(engine).run()
