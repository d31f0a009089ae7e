"""Shared fixtures: seeded corpora and the acceptance-line reporter."""

import numpy as np
import pytest
from hypothesis import settings

from strokelab import synth

settings.register_profile("suite", deadline=None, max_examples=60,
                          derandomize=True, database=None)
settings.load_profile("suite")

# printed again in the terminal summary so a piped `pytest -v` shows them
_ACCEPT_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


@pytest.fixture(scope="session")
def unit_corpus():
    """Small mixed-loopiness corpus for unit tests."""
    return synth.corpus(40, seed=101, input_points=(64, 512))


@pytest.fixture(scope="session")
def corpus_1000():
    """The winding/Euler acceptance corpus: 1000 curves, 64-512 input points."""
    return synth.corpus(1000, seed=20260814, input_points=(64, 512))


@pytest.fixture
def criterion():
    """Record one acceptance line; fails the test if the criterion failed."""
    def note(name: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
        print(line)
        _ACCEPT_LINES.append(line)
        assert ok, line
    return note


def pytest_terminal_summary(terminalreporter):
    if _ACCEPT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPT_LINES:
            terminalreporter.write_line(line)
