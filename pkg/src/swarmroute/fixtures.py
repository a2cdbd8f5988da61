"""Golden-file fixtures.

Each directory under the packaged ``fixtures/`` tree holds one desk-scale
scenario: graph.txt (the input), cmd.txt (CLI arguments, where the literal
token ``graph.txt`` stands for the fixture's graph file), expected.txt
(frozen stdout), and provenance.txt (where the expectation came from).
Expected outputs were generated once, reviewed, and committed; the checker
never regenerates them.
"""

from __future__ import annotations

import io
import shlex
from contextlib import redirect_stdout
from dataclasses import dataclass
from importlib import resources
from pathlib import Path


@dataclass(frozen=True)
class FixtureOutcome:
    name: str
    passed: bool
    detail: str


def fixtures_root() -> Path:
    root = resources.files("swarmroute") / "fixtures"
    return Path(str(root))


def list_fixtures() -> list[str]:
    root = fixtures_root()
    if not root.is_dir():
        return []
    return sorted(p.name for p in root.iterdir() if (p / "cmd.txt").is_file())


def run_fixture_dir(path: Path) -> FixtureOutcome:
    """Run one fixture directory through the CLI and diff its stdout."""
    from . import cli

    name = path.name
    argv = shlex.split((path / "cmd.txt").read_text(encoding="utf-8").strip())
    argv = [str(path / "graph.txt") if tok == "graph.txt" else tok for tok in argv]
    expected = (path / "expected.txt").read_text(encoding="utf-8")

    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = cli.main(argv)
    actual = buffer.getvalue()

    if code != 0:
        return FixtureOutcome(name, False, f"exit code {code}, expected 0")
    if actual != expected:
        detail = _first_diff(expected, actual)
        return FixtureOutcome(name, False, f"output mismatch: {detail}")
    return FixtureOutcome(name, True, "ok")


def run_fixture(name: str) -> FixtureOutcome:
    return run_fixture_dir(fixtures_root() / name)


def fixture_check() -> list[FixtureOutcome]:
    """Run every packaged fixture; returns one outcome per fixture."""
    return [run_fixture(name) for name in list_fixtures()]


def _first_diff(expected: str, actual: str) -> str:
    exp_lines = expected.splitlines()
    act_lines = actual.splitlines()
    for i in range(max(len(exp_lines), len(act_lines))):
        e = exp_lines[i] if i < len(exp_lines) else "<missing>"
        a = act_lines[i] if i < len(act_lines) else "<missing>"
        if e != a:
            return f"line {i + 1}: expected {e!r}, got {a!r}"
    return "outputs differ only in trailing whitespace"
