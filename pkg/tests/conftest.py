"""Shared parameter sets for the figure configurations."""
import math
from fractions import Fraction

import pytest

from gaudin_hopf.model import ModelParams

FIG1 = ModelParams(R1=1, R2=1, w=1, t0=0, t1=Fraction(1, 2), t2=0, t3=Fraction(1, 2))
FIG5 = ModelParams(R1=1, R2=1, w=1, t0=0, t1=Fraction(-1, 2), t2=0, t3=Fraction(-1, 2))
FIG6 = ModelParams(R1=1, R2=2, w=0, t0=Fraction(-1, 2), t1=0, t2=0, t3=Fraction(1, 2))
FIG7 = ModelParams(R1=1, R2=2, w=0, t0=Fraction(1, 2), t1=0, t2=0, t3=-3 / math.sqrt(2), t4=-2)


@pytest.fixture
def fig1():
    return FIG1


@pytest.fixture
def fig5():
    return FIG5


@pytest.fixture
def fig6():
    return FIG6


@pytest.fixture
def fig7():
    return FIG7


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, when the acceptance module ran."""
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.TITLES):
        if n not in mod.RESULTS:
            terminalreporter.write_line(f"criterion {n:2d}: NOT RUN  {mod.TITLES[n]}")
            continue
        ok, failed = mod.RESULTS[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {mod.TITLES[n]}"
        if failed:
            line += f"  (failed: {', '.join(failed)})"
        terminalreporter.write_line(line)
