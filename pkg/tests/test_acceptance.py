"""Acceptance criteria, one test each.  Every test prints a single
``PASS``/``FAIL`` line with the measured numbers before asserting."""
import time

import pytest

from prefixsc.automata import equivalent, rename_symbols, trim
from prefixsc.census import star_collapse_check, star_census
from prefixsc.ops import star_nfa
from prefixsc.properties import ALL_PROPERTIES
from prefixsc.witnesses import (
    DEFAULT_BUDGET,
    RECONSTRUCTED,
    ReconstructionError,
    WitnessSpec,
    bound_report,
    idfa,
    reconstruct_witness,
    validate_witness,
)

SEED = 20240611
CASES = 10_000


@pytest.fixture
def verdict(capsys):
    def emit(criterion: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {criterion}: {detail}")
    return emit


def pairs(lo, hi):
    return [(m, n) for m in range(lo, hi + 1) for n in range(lo, hi + 1)]


# 1 -----------------------------------------------------------------------------------------

CENSUS = {
    2: ({2: 2}, None),
    3: ({1: 8, 2: 1, 3: 6}, "1.866"),
    4: ({1: 161, 2: 1, 3: 48, 4: 30, 5: 6}, "1.857"),
    5: ({1: 4177, 2: 1, 3: 771, 4: 275, 5: 350, 6: 84, 7: 84, 9: 26}, "1.849"),
}


def test_census_exactness(verdict):
    problems, timings = [], []
    for n, (freq, avg) in CENSUS.items():
        start = time.perf_counter()
        table = star_census(n)
        elapsed = time.perf_counter() - start
        timings.append(f"n={n} {elapsed:.2f}s")
        limit = 10 if n <= 4 else 600
        if table.frequencies != freq:
            problems.append(f"n={n} counts {table.frequencies}")
        if avg is not None and table.average_3dp() != avg:
            problems.append(f"n={n} average {table.average_3dp()} != {avg}")
        if elapsed > limit:
            problems.append(f"n={n} took {elapsed:.1f}s > {limit}s")
    verdict("criterion-1 census", not problems, "; ".join(problems or timings))
    assert not problems


# 2 -----------------------------------------------------------------------------------------

ISC_GRID = (
    [("intersection-isc", m, n, m * n) for m, n in pairs(2, 5)]
    + [("union-isc", m, n, m * n + m + n) for m, n in pairs(2, 5)]
    + [("concat-isc", m, n, m * 2 ** (n - 1) + 2 ** n - 1) for m, n in pairs(3, 5)]
    + [("star-isc", None, n, 2 ** (n - 1)) for n in range(4, 9)]
    + [("reversal-isc", None, n, 2 ** n - 1) for n in range(2, 9)]
    + [("complement-isc", None, n, n + 1) for n in range(1, 9)]
)


def test_isc_tightness_grid(verdict):
    problems, slowest = [], 0.0
    for theorem, m, n, expected in ISC_GRID:
        start = time.perf_counter()
        r = bound_report(theorem, m, n)
        elapsed = time.perf_counter() - start
        slowest = max(slowest, elapsed)
        if r.achieved != expected or r.upper != expected or r.status != "tight":
            problems.append(f"{theorem} m={m} n={n}: achieved {r.achieved}, expected {expected}")
        if elapsed > 5:
            problems.append(f"{theorem} m={m} n={n} took {elapsed:.1f}s")
    detail = f"{len(ISC_GRID)} cells, slowest {slowest:.2f}s"
    verdict("criterion-2 isc grid", not problems, "; ".join(problems) or detail)
    assert not problems


# 3 -----------------------------------------------------------------------------------------

NSC_GRID = (
    [("complement-nsc", None, n, 2 ** n) for n in range(2, 9)]
    + [("intersection-nsc", m, n, m * n) for m, n in pairs(2, 5)]
    + [("concat-nsc", m, n, m + n) for m, n in pairs(3, 5)]
    + [("star-nsc", None, n, n) for n in range(1, 9)]
    + [("union-nsc", m, n, m + n + 1) for m, n in pairs(2, 5)]
    + [("reversal-nsc", None, n, n + 1) for n in range(2, 9)]
)


def test_nsc_certification(verdict):
    problems = []
    start = time.perf_counter()
    for theorem, m, n, expected in NSC_GRID:
        r = bound_report(theorem, m, n)
        if (r.achieved, r.construction_states, r.status) != (expected, expected, "tight"):
            problems.append(f"{theorem} m={m} n={n}: certified {r.achieved}, "
                            f"construction {r.construction_states}, expected {expected} {r.detail}")
    elapsed = time.perf_counter() - start
    if elapsed > 120:
        problems.append(f"total {elapsed:.1f}s > 120s")
    detail = f"{len(NSC_GRID)} cells in {elapsed:.2f}s"
    verdict("criterion-3 nsc certification", not problems, "; ".join(problems) or detail)
    assert not problems


# 4 -----------------------------------------------------------------------------------------

def test_star_collapse(verdict):
    # members are taken up to renaming of symbols, so the star is b* up to
    # that renaming
    b_star = idfa("ab", 1, [(0, "b", 0)])
    a_star = rename_symbols(b_star, {"a": "b", "b": "a"})
    problems, timings = [], []
    for n in range(3, 7):
        start = time.perf_counter()
        hits = star_collapse_check(n)
        timings.append(f"n={n} {time.perf_counter() - start:.1f}s")
        if len(hits) != 1:
            problems.append(f"n={n}: {len(hits)} languages")
            continue
        star = star_nfa(trim(hits[0]))
        if not (equivalent(star, b_star) or equivalent(star, a_star)):
            problems.append(f"n={n}: star is not b* up to renaming")
    verdict("criterion-4 star collapse", not problems, "; ".join(problems or timings))
    assert not problems


# 5 -----------------------------------------------------------------------------------------

@pytest.mark.parametrize("name", list(ALL_PROPERTIES))
def test_property_suite(verdict, name):
    start = time.perf_counter()
    res = ALL_PROPERTIES[name](CASES, seed=SEED)
    detail = f"{res.cases} cases, seed {SEED}, {len(res.violations)} violations, {time.perf_counter() - start:.1f}s"
    if res.violations:
        detail += f"; first: {res.violations[0]}"
    verdict(f"criterion-5 property {name}", res.ok, detail)
    assert res.ok


# 6 -----------------------------------------------------------------------------------------

RECONSTRUCTION_GRIDS = {
    "union-nsc": pairs(2, 5),
    "concat-nsc": pairs(3, 5),
    "reversal-isc": [(None, n) for n in range(2, 9)],
    "star-reversal-nsc": [(None, n) for n in range(1, 9)],
}


def test_reconstruction_gate(verdict):
    assert set(RECONSTRUCTION_GRIDS) == set(RECONSTRUCTED)
    problems, count = [], 0
    for family, grid in RECONSTRUCTION_GRIDS.items():
        for m, n in grid:
            count += 1
            try:
                automata, _ = reconstruct_witness(family, m, n, DEFAULT_BUDGET)
            except ReconstructionError as exc:
                problems.append(str(exc))
                continue
            report = validate_witness(WitnessSpec(family, m, n), automata)
            if not report.ok:
                problems.append(f"{family} m={m} n={n}: " + ", ".join(c.name for c in report.failures()))
    detail = f"{count} instances over {len(RECONSTRUCTION_GRIDS)} families, budget {DEFAULT_BUDGET}"
    verdict("criterion-6 reconstruction", not problems, "; ".join(problems) or detail)
    assert not problems
