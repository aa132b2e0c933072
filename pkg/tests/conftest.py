import json
from pathlib import Path

import pytest

from cpcascade.cascade import build_cascade
from cpcascade.rootsys import all_types, build_root_system

DATA = Path(__file__).parent / "data"

# independent reference values (standard tables, not computed by the package)
DUAL_COXETER = {"A": lambda n: n + 1, "B": lambda n: 2 * n - 1, "C": lambda n: n + 1, "D": lambda n: 2 * n - 2}
DUAL_COXETER_EXC = {"E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4}
N_POSITIVE = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n, "D": lambda n: n * (n - 1)}
N_POSITIVE_EXC = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


def dual_coxeter(t) -> int:
    return DUAL_COXETER_EXC.get(str(t)) or DUAL_COXETER[t.family](t.rank)


def n_positive(t) -> int:
    return N_POSITIVE_EXC.get(str(t)) or N_POSITIVE[t.family](t.rank)


def golden(name):
    return json.loads((DATA / name).read_text())


def system(name):
    rs = build_root_system(name)
    return rs, build_cascade(rs)


TYPES_8 = all_types(8)
TYPES_5 = all_types(5)


# acceptance lines are collected here and printed once at the end of the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")


@pytest.fixture(params=TYPES_8, ids=str)
def any_type(request):
    return system(request.param)
