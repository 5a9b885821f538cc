"""Exhaustive census of minimal binary prefix-closed complete DFAs and the
state complexity of star on them.

The class for ``(n, k)``: complete DFAs with ``n`` states over ``k`` symbols,
reachable and minimal, with exactly one dead state, every other state final
and a non-dead initial state.  Members are taken up to isomorphism and, by
default, up to renaming of symbols.
"""
from __future__ import annotations

import csv
import io
import itertools
from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_DOWN, ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterator

from .automata import Cdfa, canonical_form, minimize_cdfa, sc, trim
from .ops import star_nfa

SYMBOLS = "abcdefghij"


def _bfs_key(rows, order) -> tuple | None:
    """BFS relabelling of a transition table read in symbol ``order``; None if
    some state is unreachable from state 0."""
    ids = {0: 0}
    seq = [0]
    trans = []
    for q in seq:
        row = rows[q]
        for a in order:
            t = row[a]
            j = ids.get(t)
            if j is None:
                j = ids[t] = len(seq)
                seq.append(t)
            trans.append(j)
    if len(seq) != len(rows):
        return None
    return (seq.index(len(rows) - 1),) + tuple(trans)


def _cdfa(rows, n: int, k: int) -> Cdfa:
    dead = n - 1
    return Cdfa(tuple(SYMBOLS[:k]), tuple(tuple(r) for r in rows), 0, ((1 << n) - 1) & ~(1 << dead))


def _brute(n: int, k: int, permute_alphabet: bool) -> Iterator[Cdfa]:
    """Every table with state 0 initial and state n-1 dead, deduplicated."""
    dead = n - 1
    orders = list(itertools.permutations(range(k))) if permute_alphabet else [tuple(range(k))]
    dead_row = (dead,) * k
    seen: set[tuple] = set()
    for table in itertools.product(range(n), repeat=(n - 1) * k):
        rows = [table[q * k:(q + 1) * k] for q in range(n - 1)]
        rows.append(dead_row)
        keys = [_bfs_key(rows, order) for order in orders]
        if keys[0] is None:
            continue
        key = min(keys)
        if key in seen:
            continue
        seen.add(key)
        yield _cdfa(rows, n, k)


def _generate(n: int, k: int) -> Iterator[tuple[list[list[int]], int]]:
    """Transition tables already in BFS order, one per isomorphism class.

    Rows are filled state by state; a target may be any state already
    discovered or the next new one, and each new state is either the dead
    state (if none is chosen yet) or an ordinary final state.
    """
    rows = [[-1] * k for _ in range(n)]
    dead = [-1]

    def fill(q, a, used):
        if q == n:
            if used == n and dead[0] >= 0:
                yield rows
            return
        if q >= used:  # state q was never reached
            return
        if q == dead[0]:
            yield from fill(q + 1, 0, used)
            return
        if a == k:
            yield from fill(q + 1, 0, used)
            return
        for t in range(min(used + 1, n)):
            if t < used:
                rows[q][a] = t
                yield from fill(q, a + 1, used)
                continue
            rows[q][a] = t  # a new state
            yield from fill(q, a + 1, used + 1)
            if dead[0] < 0 and t > 0:
                dead[0] = t
                rows[t] = [t] * k
                yield from fill(q, a + 1, used + 1)
                rows[t] = [-1] * k
                dead[0] = -1
        rows[q][a] = -1

    for table in fill(0, 0, 1):
        yield [list(r) for r in table], dead[0]


def _canonical(n: int, k: int, permute_alphabet: bool) -> Iterator[Cdfa]:
    for rows, d in _generate(n, k):
        final = ((1 << n) - 1) & ~(1 << d)
        dfa = Cdfa(tuple(SYMBOLS[:k]), tuple(map(tuple, rows)), 0, final)
        if permute_alphabet and canonical_form(dfa, True) != canonical_form(dfa, False):
            continue
        yield dfa


def enumerate_class(n: int, k: int = 2, permute_alphabet: bool = True,
                    method: str = "brute") -> Iterator[Cdfa]:
    """One representative per class member, in no particular order.

    ``brute`` runs through all ``n ** (k * (n - 1))`` tables with the dead
    state fixed last; ``canonical`` generates BFS-ordered tables directly
    and scales further.  Both keep only reachable minimal automata.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if method == "brute":
        source = _brute(n, k, permute_alphabet)
    elif method == "canonical":
        source = _canonical(n, k, permute_alphabet)
    else:
        raise ValueError(f"unknown method {method!r}")
    for dfa in source:
        if minimize_cdfa(dfa).num_states == n:
            yield dfa


def star_complexity(dfa: Cdfa) -> int:
    """sc(L*) for the language of a class member."""
    return sc(star_nfa(trim(dfa)))


@dataclass
class CensusTable:
    n: int
    k: int
    frequencies: dict[int, int]
    members: list[tuple[tuple, Cdfa, int]] = field(default_factory=list, repr=False)

    @property
    def total(self) -> int:
        return sum(self.frequencies.values())

    @property
    def average(self) -> Fraction:
        return Fraction(sum(v * c for v, c in self.frequencies.items()), self.total)

    def average_3dp(self, mode: str = "truncate") -> str:
        """The average to three decimals, truncated (the default) or rounded
        half-up."""
        rounding = {"truncate": ROUND_DOWN, "round": ROUND_HALF_UP}[mode]
        avg = self.average
        value = Decimal(avg.numerator) / Decimal(avg.denominator)
        return str(value.quantize(Decimal("0.001"), rounding=rounding))

    def row(self, upto: int | None = None) -> list[int]:
        """Counts for sc(L*) = 1, 2, ..., ``upto`` (zeros for empty buckets)."""
        top = upto or max(self.frequencies, default=0)
        return [self.frequencies.get(v, 0) for v in range(1, top + 1)]

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["sc_star", "count"])
        for v in sorted(self.frequencies):
            w.writerow([v, self.frequencies[v]])
        w.writerow(["total", self.total])
        w.writerow(["average_exact", str(self.average)])
        w.writerow(["average_3dp", self.average_3dp()])
        return out.getvalue()


def star_census(n: int, k: int = 2, permute_alphabet: bool = True,
                method: str = "brute", keep_members: bool = False) -> CensusTable:
    """Frequencies of sc(L*) over the class for ``(n, k)``."""
    freq: Counter[int] = Counter()
    members = []
    for dfa in enumerate_class(n, k, permute_alphabet, method):
        value = star_complexity(dfa)
        freq[value] += 1
        if keep_members:
            members.append((canonical_form(dfa, permute_alphabet), dfa, value))
    members.sort(key=lambda item: item[0])
    return CensusTable(n, k, dict(sorted(freq.items())), members)


def star_collapse_check(n: int, method: str | None = None) -> list[Cdfa]:
    """Class members whose star collapses to state complexity 2, for binary
    languages with sc(L) = n."""
    if n < 3:
        raise ValueError("need n >= 3")
    method = method or ("brute" if n <= 5 else "canonical")
    hits = [d for d in enumerate_class(n, 2, True, method) if star_complexity(d) == 2]
    return sorted(hits, key=lambda d: canonical_form(d, True))
