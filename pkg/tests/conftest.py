import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from glicci.complex import SimplicialComplex, mask_of
from glicci.corpus import load_entry
from glicci.fields import FieldSpec

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GF31013 = FieldSpec.gf(31013)


@pytest.fixture(scope="session")
def rp2():
    return load_entry("ex53-rp2").complex


@pytest.fixture(scope="session")
def four_points():
    return load_entry("ex24-four-points").complex


@pytest.fixture(scope="session")
def shifted_nonlevel():
    return load_entry("ex52-shifted-not-level").complex


@pytest.fixture(scope="session")
def char_dep():
    return load_entry("ex54-char-dependent").complex


@pytest.fixture(scope="session")
def mt_complex():
    return load_entry("ex55-v6f10-6").complex


def path3():
    return SimplicialComplex.from_facets(3, [[1, 2], [2, 3]])


def triangle_boundary():
    return SimplicialComplex.from_facets(3, [[1, 2], [1, 3], [2, 3]])


def tetra_boundary():
    return SimplicialComplex.from_facets(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])


@st.composite
def complexes(draw, max_n=6, pure=False):
    n = draw(st.integers(1, max_n))
    if pure:
        k = draw(st.integers(1, n))
        subset = st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True)
    else:
        subset = st.lists(st.integers(1, n), max_size=n, unique=True)
    facets = draw(st.lists(subset, min_size=1, max_size=8))
    return SimplicialComplex(n, [mask_of(f) for f in facets])


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(1, n + 1))))


# (criterion, part, passed, detail) rows filled in by test_acceptance
ACCEPTANCE: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted({row[0] for row in ACCEPTANCE}):
        rows = [r for r in ACCEPTANCE if r[0] == crit]
        status = "PASS" if all(r[2] for r in rows) else "FAIL"
        tr.write_line(f"criterion {crit}: {status}")
        for _, part, ok, detail in rows:
            tr.write_line(f"    [{'ok' if ok else 'FAILED'}] {part}: {detail}")
