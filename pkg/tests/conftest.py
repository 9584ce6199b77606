from pathlib import Path

import pytest

from ordgram import load_grammar

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

# solvable corpus grammars and their expected order types
GOLDEN = {
    "omega.cfg": "w",
    "omega_plus_one.cfg": "w + 1",
    "w2a.cfg": "w^2",
    "w2b.cfg": "w^2",
    "w3.cfg": "w^3",
    "w_w.cfg": "w^(w)",
    "w_w_plus_1.cfg": "w^(w + 1)",
    "case2.cfg": "w",
    "finite2.cfg": "2",
}

# grammars that parse and normalize but are rejected by the solver
REJECTED = {"left_recursive.cfg": "LeftRecursionDetected",
            "prefix_violation.cfg": "PrefixViolation"}


def corpus_path(name: str) -> str:
    return str(CORPUS / name)


@pytest.fixture(scope="session")
def corpus():
    return {name: load_grammar(corpus_path(name)) for name in GOLDEN}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, text = mark.args
    table = item.config._criteria
    _, ok = table.get(n, (text, True))
    # a criterion passes only if every test carrying it passes
    table[n] = (text, ok and rep.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = getattr(config, "_criteria", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(table):
        text, ok = table[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
