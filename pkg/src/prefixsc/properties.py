"""Seeded randomized property checks over small automata.

Each ``check_*`` function draws ``cases`` random instances from its own
``random.Random(seed)`` stream and returns the violations it found; an
empty list means the property held on every case.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .automata import (
    Idfa,
    Nfa,
    determinize,
    enumerate_language,
    is_prefix_closed,
    isc,
    minimize_cdfa,
    minimize_idfa,
    sc,
    coreachable_states,
    trim,
)
from .fooling import check, search_fooling
from .ops import (
    OPERATIONS,
    concat_nfa,
    concat_nfa_single,
    construct,
    intersect_idfa,
    intersect_nfa,
    merge_initial,
    reverse_nfa,
    star_nfa,
    union_idfa,
    union_nfa,
)

SYMBOLS = "abc"


@dataclass
class PropertyResult:
    name: str
    cases: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def random_nfa(rng: random.Random, max_states: int = 5, max_symbols: int = 3) -> Nfa:
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_symbols)
    density = rng.choice((0.15, 0.3, 0.5))
    rows = tuple(
        tuple(sum(1 << t for t in range(n) if rng.random() < density) for _ in range(k))
        for _ in range(n)
    )
    initial = sum(1 << q for q in range(n) if rng.random() < 0.3) or 1
    final = sum(1 << q for q in range(n) if rng.random() < 0.5)
    return Nfa(tuple(SYMBOLS[:k]), rows, initial, final)


def random_prefix_closed(rng: random.Random, alphabet: str, max_states: int = 5) -> Idfa:
    """Random all-final incomplete DFA, trimmed to its reachable part."""
    n = rng.randint(1, max_states)
    undefined = rng.choice((0.2, 0.4, 0.6))
    rows = tuple(
        tuple(None if rng.random() < undefined else rng.randrange(n) for _ in alphabet)
        for _ in range(n)
    )
    return trim(Idfa(tuple(alphabet), rows, 0, (1 << n) - 1))


def _pair(rng: random.Random, max_states: int = 5) -> tuple[Idfa, Idfa]:
    alphabet = SYMBOLS[: rng.randint(1, 3)]
    return random_prefix_closed(rng, alphabet, max_states), random_prefix_closed(rng, alphabet, max_states)


def check_prefix_closure(cases: int, seed: int = 0) -> PropertyResult:
    """Intersection, union, concatenation and star keep languages prefix-closed."""
    rng = random.Random(seed)
    res = PropertyResult("prefix-closure", cases)
    for case in range(cases):
        a, b = _pair(rng)
        results = {
            "intersection": intersect_idfa(a, b),
            "union": union_idfa(a, b),
            "concat": concat_nfa(a, b),
            "star": star_nfa(a),
        }
        for op, r in results.items():
            if not is_prefix_closed(r):
                res.violations.append(f"case {case}: {op} of {a} and {b} is not prefix-closed")
    return res


def check_bounds(cases: int, seed: int = 0) -> PropertyResult:
    """Every construction stays within its upper bound on random inputs."""
    rng = random.Random(seed)
    res = PropertyResult("bound-compliance", cases)
    for case in range(cases):
        a, b = _pair(rng)
        for op, spec in OPERATIONS.items():
            inputs = (a, b) if spec.arity == 2 else (a,)
            r = construct(op, *inputs)
            if r.construction_states > r.upper_bound:
                res.violations.append(f"case {case}: {op} built {r.construction_states} > {r.upper_bound}")
    return res


def check_round_trip(cases: int, seed: int = 0, max_len: int = 8) -> PropertyResult:
    """Determinization and minimization preserve the language, compared by
    enumerating every word up to ``max_len``."""
    rng = random.Random(seed)
    res = PropertyResult("round-trip", cases)
    for case in range(cases):
        a = random_nfa(rng)
        expected = enumerate_language(a, max_len)
        d = determinize(a)
        for label, b in (("determinize", d), ("minimize_idfa", minimize_idfa(d)),
                         ("minimize_cdfa", minimize_cdfa(d))):
            got = enumerate_language(b, max_len)
            if got != expected:
                diff = sorted(got ^ expected, key=lambda w: (len(w), w))[:3]
                res.violations.append(f"case {case}: {label} changes the language, e.g. {diff}")
    return res


def check_sc_isc(cases: int, seed: int = 0) -> PropertyResult:
    """For non-empty languages sc - isc is 0 or 1, and 1 exactly when the
    minimal complete DFA has a dead state."""
    rng = random.Random(seed)
    res = PropertyResult("sc-isc", cases)
    for case in range(cases):
        a = random_nfa(rng)
        i, s = isc(a), sc(a)
        if i == 0:
            if s != 1:
                res.violations.append(f"case {case}: empty language with sc {s}")
            continue
        c = minimize_cdfa(determinize(a))
        has_dead = coreachable_states(c) != c.all_states
        if s - i not in (0, 1) or (s - i == 1) != has_dead:
            res.violations.append(f"case {case}: isc {i}, sc {s}, dead state {has_dead}")
    return res


_NFA_CONSTRUCTIONS = {
    "intersect_nfa": (2, intersect_nfa, True),
    "union_nfa": (2, union_nfa, True),
    "concat_nfa": (2, concat_nfa, False),
    "concat_nfa_single": (2, concat_nfa_single, True),
    "star_nfa": (1, star_nfa, True),
    "reverse_nfa": (1, reverse_nfa, False),
    "reverse_merged": (1, lambda x: merge_initial(reverse_nfa(x)), True),
}


def check_fooling_soundness(cases: int, seed: int = 0) -> PropertyResult:
    """A valid fooling set never exceeds the size of an NFA we built for the
    language; an extended certificate never exceeds a single-initial one."""
    rng = random.Random(seed)
    res = PropertyResult("fooling-soundness", cases)
    names = sorted(_NFA_CONSTRUCTIONS)
    for case in range(cases):
        a, b = _pair(rng, max_states=4)
        name = rng.choice(names)
        arity, build, single = _NFA_CONSTRUCTIONS[name]
        nfa = build(a, b) if arity == 2 else build(a)
        found = search_fooling(nfa, max_len=3, extended=single, budget=2000)
        cert = found.certificate
        verdict = check(nfa, cert)
        if not verdict.valid:
            res.violations.append(f"case {case}: search returned an invalid certificate for {name}")
        elif cert.claimed_bound > nfa.num_states:
            res.violations.append(
                f"case {case}: {name} has {nfa.num_states} states but a certificate claims {cert.claimed_bound}"
            )
    return res


ALL_PROPERTIES = {
    "prefix-closure": check_prefix_closure,
    "bound-compliance": check_bounds,
    "round-trip": check_round_trip,
    "sc-isc": check_sc_isc,
    "fooling-soundness": check_fooling_soundness,
}
