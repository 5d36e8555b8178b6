#!/usr/bin/env python3
"""Regenerate the web calculator's test fixtures from the real service.

The demo script is replayed against a fresh engine through the same code
path the HTTP handler uses, and the responses (with wall time zeroed, the
only nondeterministic field) are written to frontend/test/fixtures/.
tests/test_frontend_fixtures.py asserts the committed fixtures stay in
sync with the service.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from surreal.service import CalcService  # noqa: E402

DEMO_SESSION = "demo"
DEMO_SCRIPT = [
    "2",
    "1/2",
    "<0|1> + 1/2",
    "x = <0|1>",
    "x + x",
    "a = 2",
    "a*a",
    "2*2 = 4",
    "-(1+1)",
    "1/3",
]


def build_fixture() -> dict:
    service = CalcService()
    steps = []
    for statement in DEMO_SCRIPT:
        status, response = service.handle_eval(
            {"session": DEMO_SESSION, "input": statement})
        assert status == 200, (statement, response)
        response["millis"] = 0.0
        steps.append({"input": statement, "response": response})
    status, tree = service.handle_tree(2)
    assert status == 200
    return {"session": DEMO_SESSION, "steps": steps, "tree2": tree}


def main() -> int:
    out_path = Path(__file__).resolve().parents[1] / \
        "frontend" / "test" / "fixtures" / "demo.json"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    fixture = build_fixture()
    out_path.write_text(
        json.dumps(fixture, ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8")
    errors = sum(not s["response"]["ok"] for s in fixture["steps"])
    print(f"wrote {out_path} ({len(fixture['steps'])} steps, "
          f"{errors} error case)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
