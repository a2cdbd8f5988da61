import shutil
import time

import pytest

from swarmroute.fixtures import (
    fixture_check,
    fixtures_root,
    list_fixtures,
    run_fixture,
    run_fixture_dir,
)

EXPECTED_NAMES = [
    "five-node-mst-kruskal",
    "five-node-mst-prim",
    "five-node-sp",
    "gen-seeded",
    "pso-seeded-run",
    "six-node-decode",
]


def test_all_fixtures_present():
    assert list_fixtures() == EXPECTED_NAMES


@pytest.mark.parametrize("name", EXPECTED_NAMES)
def test_fixture_passes(name):
    outcome = run_fixture(name)
    assert outcome.passed, outcome.detail


@pytest.mark.parametrize("name", EXPECTED_NAMES)
def test_fixture_files_complete(name):
    d = fixtures_root() / name
    for filename in ("graph.txt", "cmd.txt", "expected.txt", "provenance.txt"):
        assert (d / filename).is_file(), filename
        assert (d / filename).read_text(encoding="utf-8").strip(), filename


def test_suite_runs_quickly():
    started = time.perf_counter()
    outcomes = fixture_check()
    elapsed = time.perf_counter() - started
    assert all(o.passed for o in outcomes)
    assert elapsed < 10.0


def test_corrupted_fixture_fails(tmp_path):
    # test-of-tests: a tampered expectation must be caught
    source = fixtures_root() / "five-node-sp"
    target = tmp_path / "five-node-sp"
    shutil.copytree(source, target)
    (target / "expected.txt").write_text("1 3 4\nweight 2\n", encoding="utf-8")
    outcome = run_fixture_dir(target)
    assert not outcome.passed
    assert "mismatch" in outcome.detail


def test_wrong_exit_code_fails(tmp_path):
    source = fixtures_root() / "five-node-sp"
    target = tmp_path / "broken"
    shutil.copytree(source, target)
    (target / "cmd.txt").write_text("sp graph.txt --from 1 --to 99\n", encoding="utf-8")
    outcome = run_fixture_dir(target)
    assert not outcome.passed
    assert "exit code" in outcome.detail
