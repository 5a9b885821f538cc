"""Fooling-set lower bounds on NFA size.

A fooling set for L is a list of pairs ``(x_i, y_i)`` with every ``x_i y_i``
in L and, for ``i != j``, at least one of ``x_i y_j``, ``x_j y_i`` outside L.
Any NFA for L (even with several initial states) then has at least as many
states as there are pairs.  The extended form ``(A, B, u, v)`` requires
``A + B``, ``A + [(eps, u)]`` and ``B + [(eps, v)]`` to be fooling sets and
bounds single-initial NFAs by ``|A| + |B| + 1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .automata import Automaton, Cdfa, Idfa, determinize, minimize_cdfa, words_upto

Pair = tuple[str, str]


@dataclass(frozen=True)
class Split:
    a: tuple[Pair, ...]
    b: tuple[Pair, ...]
    u: str
    v: str


@dataclass(frozen=True)
class FoolingCertificate:
    pairs: tuple[Pair, ...]
    claimed_bound: int
    split: Split | None = None

    def __post_init__(self):
        if self.split is None:
            if self.claimed_bound != len(self.pairs):
                raise ValueError("plain certificate must claim exactly len(pairs)")
        else:
            if self.pairs != self.split.a + self.split.b:
                raise ValueError("pairs must be A followed by B")
            if self.claimed_bound != len(self.pairs) + 1:
                raise ValueError("extended certificate must claim |A| + |B| + 1")

    @classmethod
    def plain(cls, pairs) -> FoolingCertificate:
        pairs = tuple((x, y) for x, y in pairs)
        return cls(pairs, len(pairs))

    @classmethod
    def extended(cls, a, b, u: str, v: str) -> FoolingCertificate:
        split = Split(tuple((x, y) for x, y in a), tuple((x, y) for x, y in b), u, v)
        return cls(split.a + split.b, len(split.a) + len(split.b) + 1, split)


@dataclass(frozen=True)
class Violation:
    """Pairs ``i`` and ``j`` (``i == j`` for F1) of the checked set break
    ``condition``.  ``family`` names which of the three sets of an extended
    certificate was being checked."""

    i: int
    j: int
    condition: str  # "F1" or "F2"
    family: str = "pairs"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    bound: int
    violation: Violation | None = None


class Membership:
    """Membership queries against the minimal complete DFA of a language.

    ``state(x)`` is the state reached on ``x``; ``accepting_from(y)`` is the
    bitmask of states from which ``y`` leads to acceptance.  Both are cached,
    so checking ``x_i y_j`` for all pairs costs one lookup per pair.
    """

    def __init__(self, automaton: Automaton):
        dfa = automaton if isinstance(automaton, Idfa) else determinize(automaton)
        self.dfa: Cdfa = minimize_cdfa(dfa)
        self._state: dict[str, int] = {}
        self._accepting: dict[str, int] = {}

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.dfa.alphabet

    def state(self, x: str) -> int:
        if x not in self._state:
            self._state[x] = self.dfa.run(self.dfa.initial, self.dfa.encode(x))
        return self._state[x]

    def accepting_from(self, y: str) -> int:
        if y not in self._accepting:
            enc = self.dfa.encode(y)
            self._accepting[y] = sum(
                1 << q for q in range(self.dfa.num_states)
                if self.dfa.is_final(self.dfa.run(q, enc))
            )
        return self._accepting[y]

    def __contains__(self, word: str) -> bool:
        return self.dfa.is_final(self.dfa.run(self.dfa.initial, self.dfa.encode(word)))

    def joined(self, x: str, y: str) -> bool:
        """Whether ``x + y`` is in the language."""
        return bool(self.accepting_from(y) >> self.state(x) & 1)


def _as_membership(language) -> Membership:
    return language if isinstance(language, Membership) else Membership(language)


def _check_pairs(mem: Membership, pairs, family: str = "pairs") -> Violation | None:
    xs = [mem.state(x) for x, _ in pairs]
    ys = [mem.accepting_from(y) for _, y in pairs]
    for i, (p, acc) in enumerate(zip(xs, ys)):
        if not acc >> p & 1:
            return Violation(i, i, "F1", family)
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if ys[j] >> xs[i] & 1 and ys[i] >> xs[j] & 1:
                return Violation(i, j, "F2", family)
    return None


def check_fooling(language, cert: FoolingCertificate) -> Verdict:
    """Check conditions F1/F2 on ``cert.pairs``.

    On failure the violation with the smallest index pair is reported (all
    F1 checks come first).  A valid verdict certifies that every NFA for the
    language has at least ``len(cert.pairs)`` states.
    """
    mem = _as_membership(language)
    violation = _check_pairs(mem, cert.pairs)
    return Verdict(violation is None, len(cert.pairs), violation)


def check_fooling_extended(language, cert: FoolingCertificate) -> Verdict:
    """Check the three fooling sets of an extended certificate; a valid verdict
    certifies ``|A| + |B| + 1`` states for NFAs with a single initial state."""
    if cert.split is None:
        raise ValueError("certificate has no (A, B, u, v) split")
    mem = _as_membership(language)
    s = cert.split
    for family, pairs in (
        ("A+B", s.a + s.b),
        ("A+u", s.a + (("", s.u),)),
        ("B+v", s.b + (("", s.v),)),
    ):
        violation = _check_pairs(mem, pairs, family)
        if violation is not None:
            return Verdict(False, cert.claimed_bound, violation)
    return Verdict(True, cert.claimed_bound)


def check(language, cert: FoolingCertificate) -> Verdict:
    """Dispatch on the certificate flavour."""
    if cert.split is None:
        return check_fooling(language, cert)
    return check_fooling_extended(language, cert)


# --- the explicit fooling sets from the lower-bound proofs --------------------

def _complement_x(n: int, subset: frozenset[int]) -> str:
    """Word taking state 1 of the complement witness NFA to ``subset``
    (states numbered 1..n), following the reachability induction."""
    if not subset:
        return "a" * n
    elems = sorted(subset)
    first = elems[0]
    if len(elems) == 1:
        return "a" * (first - 1)
    smaller = frozenset(i - first for i in elems[1:])
    return _complement_x(n, smaller) + "b" + "a" * (first - 1)


def _complement_y(n: int, subset: frozenset[int]) -> str:
    return "".join("a" if n - i in subset else "c" for i in range(n))


def complement_subsets(n: int) -> list[frozenset[int]]:
    """All subsets of ``{1..n}``, ordered by size and then lexicographically."""
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]


def complement_pair(n: int, subset) -> Pair:
    subset = frozenset(subset)
    return _complement_x(n, subset), _complement_y(n, subset)


PROOF_FOOLING_SETS = (
    "complement-nsc",
    "intersection-nsc",
    "union-nsc",
    "concat-nsc",
    "star-nsc",
    "reversal-nsc",
    "cyclic-union",
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


@lru_cache(maxsize=None)
def proof_fooling_set(theorem: str, m: int | None = None, n: int | None = None) -> FoolingCertificate:
    """The fooling set (or extended certificate) exhibited in the lower-bound
    argument for ``theorem`` with the given parameters.

    Unary theorems take only ``n``.  ``cyclic-union`` ignores both parameters.
    """
    if theorem == "complement-nsc":
        _require(n is not None and n >= 1, "complement-nsc needs n >= 1")
        return FoolingCertificate.plain(complement_pair(n, s) for s in complement_subsets(n))
    if theorem == "intersection-nsc":
        _require(m is not None and n is not None and m >= 1 and n >= 1, "intersection-nsc needs m, n >= 1")
        return FoolingCertificate.plain(
            ("a" * i + "b" * j, "a" * (m - 1 - i) + "b" * (n - 1 - j))
            for i in range(m) for j in range(n)
        )
    if theorem == "union-nsc":
        _require(m is not None and n is not None and m >= 2 and n >= 2, "union-nsc needs m, n >= 2")
        a = [("a" * i, "a" * (m - 1 - i) + "b") for i in range(1, m)]
        a.append(("a" * (m - 1) + "b", "a"))
        b = [("c" * j, "c" * (n - 1 - j) + "d") for j in range(1, n)]
        b.append(("c" * (n - 1) + "d", "c"))
        return FoolingCertificate.extended(a, b, u="c", v="a")
    if theorem == "concat-nsc":
        _require(m is not None and n is not None and m >= 1 and n >= 1, "concat-nsc needs m, n >= 1")
        pairs = [("a" * i, "a" * (m - 1 - i) + "cb" + "a" * (n - 1)) for i in range(m)]
        pairs += [("a" * (m - 1) + "cb" + "a" * j, "a" * (n - 1 - j)) for j in range(n)]
        return FoolingCertificate.plain(pairs)
    if theorem == "star-nsc":
        _require(n is not None and n >= 1, "star-nsc needs n >= 1")
        return FoolingCertificate.plain(("a" * i, "a" * (n - 1 - i) + "b") for i in range(n))
    if theorem == "reversal-nsc":
        _require(n is not None and n >= 2, "reversal-nsc needs n >= 2")
        a = [("b" + "a" * i, "a" * (n - 1 - i)) for i in range(n - 1)]
        b = [("b" + "a" * (n - 1), "b" + "a" * (n - 1))]
        return FoolingCertificate.extended(a, b, u="b" + "a" * (n - 1), v="a")
    if theorem == "cyclic-union":
        return FoolingCertificate.extended(
            [("a", "aa"), ("aa", "a"), ("aaa", "aaa")],
            [("b", "bb"), ("bb", "b"), ("bbb", "bbb")],
            u="bbb",
            v="aaa",
        )
    raise ValueError(f"no fooling set for {theorem!r}; known: {', '.join(PROOF_FOOLING_SETS)}")


# --- search -----------------------------------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    certificate: FoolingCertificate
    plain_bound: int
    partial: bool  # the node budget ran out before the search finished


def search_fooling(
    language,
    max_pairs: int = 64,
    max_len: int = 4,
    extended: bool = False,
    budget: int = 200_000,
) -> SearchResult:
    """Best-effort search for a large fooling set using words up to ``max_len``.

    A pair only matters through the state its first word reaches and the set
    of states from which its second word is accepted, so candidates are
    deduplicated on that and at most one pair per state is ever useful.  A
    greedy pass is followed by branch-and-bound over states.  With
    ``extended`` the largest sets found are also tried against every
    ``(u, v)`` split.  The result is always a valid certificate, but not
    necessarily a maximum one.
    """
    mem = _as_membership(language)
    dfa = mem.dfa
    words = list(words_upto(dfa.alphabet, max_len))
    reach: dict[int, str] = {}
    for w in words:
        reach.setdefault(mem.state(w), w)
    ys: dict[int, str] = {}
    for w in words:
        ys.setdefault(mem.accepting_from(w), w)
    by_state = {s: sorted((acc for acc in ys if acc >> s & 1), key=lambda acc: -bin(acc).count("1"))
                for s in sorted(reach)}
    by_state = {s: accs for s, accs in by_state.items() if accs}
    states = sorted(by_state, key=lambda s: len(by_state[s]))

    def compatible(p, q) -> bool:
        (sp, ap), (sq, aq) = p, q
        return not (aq >> sp & 1 and ap >> sq & 1)

    best: list[list[tuple[int, int]]] = [[]]
    nodes = 0
    partial = False

    def extend(chosen, idx):
        nonlocal nodes, partial
        nodes += 1
        if nodes > budget:
            partial = True
            return
        if len(chosen) > len(best[0]):
            best[0] = list(chosen)
            best[1:] = []
        elif chosen and len(chosen) == len(best[0]) and len(best) < 256:
            best.append(list(chosen))
        if len(chosen) >= max_pairs or len(chosen) + len(states) - idx < len(best[0]):
            return
        for k in range(idx, len(states)):
            s = states[k]
            for acc in by_state[s]:
                cand = (s, acc)
                if all(compatible(cand, c) for c in chosen):
                    chosen.append(cand)
                    extend(chosen, k + 1)
                    chosen.pop()
                    if partial:
                        return

    extend([], 0)
    found = best[0]
    plain_pairs = [(reach[s], ys[acc]) for s, acc in found]
    result = FoolingCertificate.plain(plain_pairs)

    if extended:
        start = dfa.initial
        us = [acc for acc in ys if acc >> start & 1]
        for clique in best:
            full = (1 << len(clique)) - 1
            covers = {}
            for acc in us:
                probe = (start, acc)
                covers[acc] = sum(1 << i for i, c in enumerate(clique) if compatible(probe, c))
            split = next(((u, v) for u in us for v in us if covers[u] | covers[v] == full), None)
            if split is None:
                continue
            u, v = split
            a = [c for i, c in enumerate(clique) if covers[u] >> i & 1]
            b = [c for i, c in enumerate(clique) if not covers[u] >> i & 1]
            result = FoolingCertificate.extended(
                [(reach[s], ys[acc]) for s, acc in a],
                [(reach[s], ys[acc]) for s, acc in b],
                ys[u], ys[v],
            )
            break
    return SearchResult(result, len(found), partial)

