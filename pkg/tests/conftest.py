import hypothesis
from hypothesis import strategies as st

from yhlinks.braid import BraidWord
from yhlinks.laurent import LaurentPoly

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


def laurent_polys(max_terms=8, lo=-5, hi=5, coeff=9):
    exps = st.tuples(st.integers(lo, hi), st.integers(lo, hi), st.integers(lo, hi))
    return st.dictionaries(exps, st.integers(-coeff, coeff), max_size=max_terms).map(LaurentPoly)


@st.composite
def braids(draw, max_n=5, max_len=10, min_n=1):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return BraidWord(1)
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return BraidWord(n, tuple(draw(st.lists(gens, max_size=max_len))))


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "PASS" if report.passed else "FAIL"
    elif "test_acceptance.py::" in report.nodeid and report.failed:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE.items():
        terminalreporter.write_line(f"{outcome}  {name}")
