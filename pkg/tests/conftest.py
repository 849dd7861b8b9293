import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from twistlab.coxeter import is_irreducible  # noqa: E402
from twistlab.io import read_cox, read_genset  # noqa: E402

CORPUS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")

_ACCEPTANCE = {}


def corpus_path(name):
    return os.path.join(CORPUS, name)


def load(name):
    return read_cox(corpus_path(name + ".cox"))


def load_genset(name):
    return read_genset(corpus_path(name))


TREES = [f"tree6_{i}" for i in range(6)]
# the star tree has a central generator commuting with all others
IRREDUCIBLE_TREES = [t for t in TREES if is_irreducible(load(t), range(6))]
# irreducible, non-spherical, FC and 2-rigid
RIGID_FC = ["g1", "p5", "cycle4_m3", "cycle5_m3"] + IRREDUCIBLE_TREES


@pytest.fixture
def acceptance():
    def record(number, ok, detail):
        _ACCEPTANCE[number] = (ok, detail)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
