"""Parametric witness automata for every tightness claim, plus the machinery
that measures or certifies each bound on them.

Families with explicit transition tables are built directly.  Four
families are only pinned down by behavioural constraints, so they are recovered by
:func:`reconstruct_witness`: analytically derived seed candidates are tried
first, then a bounded exhaustive search over all-final automata, and a
candidate is only returned once :func:`validate_witness` accepts it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .automata import (
    Automaton,
    Cdfa,
    Idfa,
    Nfa,
    as_nfa,
    bits,
    determinize,
    find_counterexample,
    is_prefix_closed,
    isc,
    minimize_idfa,
    sc,
    to_mask,
    trim,
)
from .fooling import FoolingCertificate, Membership, check, proof_fooling_set
from .ops import (
    OPERATIONS,
    complement_idfa,
    concat_nfa,
    construct,
    intersect_idfa,
    reverse_nfa,
    star_nfa,
    union_idfa,
)


class WitnessError(ValueError):
    """Parameters outside a family's range."""


class ReconstructionError(RuntimeError):
    """No candidate passed validation within the search budget."""


DEFAULT_BUDGET = 2000


def idfa(alphabet: str, n: int, transitions, initial: int = 0, final=None) -> Idfa:
    """Build an incomplete DFA from ``(source, symbol, target)`` triples;
    every state is final unless ``final`` is given."""
    rows = [[None] * len(alphabet) for _ in range(n)]
    for p, a, q in transitions:
        rows[p][alphabet.index(a)] = q
    final_mask = (1 << n) - 1 if final is None else to_mask(final)
    return Idfa(tuple(alphabet), tuple(map(tuple, rows)), initial, final_mask)


# --- explicit families ----------------------------------------------------------

def complement_unary(n: int) -> Idfa:
    """``{a^i | 0 <= i <= n-1}``."""
    return idfa("a", n, [(i, "a", i + 1) for i in range(n - 1)])


def complement_nsc(n: int) -> Nfa:
    """Ternary NFA on states 1..n (indices 0..n-1): state n has no move on
    a or b and goes to 1 on c; every other state i goes to i+1 on a and c
    and to {1, i+1} on b."""
    rows = []
    for i in range(n - 1):
        nxt = 1 << (i + 1)
        rows.append((nxt, nxt | 1, nxt))
    rows.append((0, 0, 1))
    return Nfa(("a", "b", "c"), tuple(rows), 1, (1 << n) - 1)


def counters(m: int, n: int) -> tuple[Idfa, Idfa]:
    """``#a(w) <= m-1`` and ``#b(w) <= n-1`` over {a, b}."""
    k = idfa("ab", m, [(i, "a", i + 1) for i in range(m - 1)] + [(i, "b", i) for i in range(m)])
    l = idfa("ab", n, [(j, "b", j + 1) for j in range(n - 1)] + [(j, "a", j) for j in range(n)])
    return k, l


def concat_isc(m: int, n: int) -> tuple[Idfa, Idfa]:
    """States q_0..q_{m-1} of K: a loops on q_0 only, b resets to q_0, c
    advances.  States 0..n-1 of L: a rotates, b loops on 0 and advances
    1..n-2, c loops everywhere."""
    k = [(0, "a", 0)] + [(i, "b", 0) for i in range(m)] + [(i, "c", i + 1) for i in range(m - 1)]
    l = [(j, "a", (j + 1) % n) for j in range(n)] + [(0, "b", 0)]
    l += [(j, "b", j + 1) for j in range(1, n - 1)] + [(j, "c", j) for j in range(n)]
    return idfa("abc", m, k), idfa("abc", n, l)


def star_isc(n: int) -> Idfa:
    """Binary DFA on states 1..n (indices 0..n-1).

    b cycles 1 -> 2 -> 3 -> 1; a is undefined on 1 and 2.  From 3 upward, a
    swaps (3,4), (5,6), ... and b swaps (4,5), (6,7), ...; the top state
    left without a partner loops on that letter (on a when n is odd, on b
    when n is even).
    """
    t = [(0, "b", 1), (1, "b", 2), (2, "b", 0)]
    for first, sym in ((3, "a"), (4, "b")):
        i = first
        while i <= n:
            if i + 1 <= n:
                t += [(i - 1, sym, i), (i, sym, i - 1)]
            else:
                t.append((i - 1, sym, i - 1))
            i += 2
    return idfa("ab", n, t)


def star_collapse(n: int) -> Cdfa:
    """Complete DFA for ``{b^i | i <= n-2}``: a b-path through the n-1 final
    states, everything else into the dead state n-1."""
    dead = n - 1
    rows = [(dead, i + 1 if i < n - 2 else dead) for i in range(n - 1)]
    rows.append((dead, dead))
    return Cdfa(("a", "b"), tuple(rows), 0, (1 << (n - 1)) - 1)


# --- seeds for the reconstructed families -----------------------------------------

def union_nsc_seed(m: int, n: int) -> tuple[Idfa, Idfa]:
    """Prefixes of ``(a^{m-1} b)*`` and of ``(c^{n-1} d)*`` over {a,b,c,d}."""
    k = [(i, "a", i + 1) for i in range(m - 1)] + [(m - 1, "b", 0)]
    l = [(j, "c", j + 1) for j in range(n - 1)] + [(n - 1, "d", 0)]
    return idfa("abcd", m, k), idfa("abcd", n, l)


def concat_nsc_seed(m: int, n: int) -> tuple[Idfa, Idfa]:
    """b-loop on the initial state, an a-chain, and a c-loop on the last state."""
    def chain(size):
        return [(0, "b", 0)] + [(i, "a", i + 1) for i in range(size - 1)] + [(size - 1, "c", size - 1)]
    return idfa("abc", m, chain(m)), idfa("abc", n, chain(n))


def reversal_isc_seed(n: int) -> Idfa:
    """a rotates states 1..n; b is the identity except on state n."""
    t = [(i, "a", (i + 1) % n) for i in range(n)] + [(i, "b", i) for i in range(n - 1)]
    return idfa("ab", n, t)


def star_reversal_nsc_seed(n: int) -> Idfa:
    """Prefixes of ``(a^{n-1} b)*``."""
    return idfa("ab", n, [(i, "a", i + 1) for i in range(n - 1)] + [(n - 1, "b", 0)])


# --- family table ------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    arity: int
    alphabet: str
    origin: str  # "explicit" or "reconstructed"
    theorems: tuple[str, ...]
    model: str  # how input complexities are certified: "isc", "nsc", "sc"
    min_m: int | None
    min_n: int
    build: Callable


FAMILIES: dict[str, Family] = {
    "complement-unary": Family(1, "a", "explicit", ("complement-isc",), "isc", None, 1, complement_unary),
    "complement-nsc": Family(1, "abc", "explicit", ("complement-nsc",), "nsc", None, 2, complement_nsc),
    "intersection": Family(2, "ab", "explicit", ("intersection-isc", "intersection-nsc"), "both", 1, 1, counters),
    "union-isc-product": Family(2, "ab", "explicit", ("union-isc",), "isc", 1, 1, counters),
    "union-nsc": Family(2, "abcd", "reconstructed", ("union-nsc",), "nsc", 2, 2, union_nsc_seed),
    "concat-isc": Family(2, "abc", "explicit", ("concat-isc",), "isc", 3, 3, concat_isc),
    "concat-nsc": Family(2, "abc", "reconstructed", ("concat-nsc",), "nsc", 3, 3, concat_nsc_seed),
    "star-isc": Family(1, "ab", "explicit", ("star-isc",), "isc", None, 4, star_isc),
    "star-collapse": Family(1, "ab", "explicit", (), "sc", None, 3, star_collapse),
    "reversal-isc": Family(1, "ab", "reconstructed", ("reversal-isc",), "isc", None, 2, reversal_isc_seed),
    "star-reversal-nsc": Family(1, "ab", "reconstructed", ("star-nsc", "reversal-nsc"), "nsc", None, 1, star_reversal_nsc_seed),
}

# theorem id -> (family, minimum m, minimum n); unary theorems have m = None
THEOREMS: dict[str, tuple[str, int | None, int]] = {
    "complement-isc": ("complement-unary", None, 1),
    "complement-nsc": ("complement-nsc", None, 2),
    "intersection-isc": ("intersection", 1, 1),
    "intersection-nsc": ("intersection", 1, 1),
    "union-isc": ("union-isc-product", 1, 1),
    "union-nsc": ("union-nsc", 2, 2),
    "concat-isc": ("concat-isc", 3, 3),
    "concat-nsc": ("concat-nsc", 3, 3),
    "star-isc": ("star-isc", None, 4),
    "star-nsc": ("star-reversal-nsc", None, 1),
    "reversal-isc": ("reversal-isc", None, 2),
    "reversal-nsc": ("star-reversal-nsc", None, 2),
}


@dataclass(frozen=True)
class WitnessSpec:
    family: str
    m: int | None = None
    n: int = 0

    @property
    def origin(self) -> str:
        return FAMILIES[self.family].origin

    def sizes(self) -> tuple[int, ...]:
        return (self.m, self.n) if FAMILIES[self.family].arity == 2 else (self.n,)


def _check_params(spec: WitnessSpec) -> Family:
    if spec.family not in FAMILIES:
        raise WitnessError(f"unknown family {spec.family!r}; known: {', '.join(FAMILIES)}")
    fam = FAMILIES[spec.family]
    if spec.n is None or spec.n < fam.min_n:
        raise WitnessError(f"{spec.family} needs n >= {fam.min_n}, got {spec.n}")
    if fam.arity == 2 and (spec.m is None or spec.m < fam.min_m):
        raise WitnessError(f"{spec.family} needs m >= {fam.min_m}, got {spec.m}")
    return fam


def _build(spec: WitnessSpec) -> tuple[Automaton, ...]:
    fam = FAMILIES[spec.family]
    out = fam.build(spec.m, spec.n) if fam.arity == 2 else fam.build(spec.n)
    return out if isinstance(out, tuple) else (out,)


def make_witness(spec: WitnessSpec, budget: int = DEFAULT_BUDGET) -> tuple[Automaton, ...]:
    """The witness automata (one or two) for ``spec``.

    Reconstructed families go through :func:`reconstruct_witness` and are
    validated before being returned.
    """
    fam = _check_params(spec)
    if fam.origin == "reconstructed":
        automata, _ = reconstruct_witness(spec.family, spec.m, spec.n, budget)
        return automata
    return _build(spec)


# --- input certificates ------------------------------------------------------------

def _input_fooling(family: str, which: int, size: int) -> FoolingCertificate:
    """A fooling set of ``size`` pairs for input ``which`` (0 = K, 1 = L) of an
    nsc family, showing that its automaton is already state-minimal."""
    if family == "complement-nsc" or family == "concat-nsc":
        return FoolingCertificate.plain(("a" * i, "a" * (size - 1 - i)) for i in range(size))
    if family == "intersection":
        s = "ab"[which]
        return FoolingCertificate.plain((s * i, s * (size - 1 - i)) for i in range(size))
    if family == "union-nsc":
        s, t = ("a", "b") if which == 0 else ("c", "d")
        return FoolingCertificate.plain((s * i, s * (size - 1 - i) + t) for i in range(size))
    if family == "star-reversal-nsc":
        return FoolingCertificate.plain(("a" * i, "a" * (size - 1 - i) + "b") for i in range(size))
    raise KeyError(family)


# --- bound measurement ---------------------------------------------------------------

@dataclass
class BoundReport:
    theorem: str
    m: int | None
    n: int
    model: str
    upper: int
    achieved: int
    construction_states: int
    status: str  # "tight", "gap" or "fail"
    detail: list[str] = field(default_factory=list)

    def summary(self) -> str:
        m = "none" if self.m is None else self.m
        return (f"theorem={self.theorem} m={m} n={self.n} model={self.model} upper={self.upper} "
                f"achieved={self.achieved} construction={self.construction_states} status={self.status}")

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem, "m": self.m, "n": self.n, "model": self.model,
            "upper": self.upper, "achieved": self.achieved,
            "construction": self.construction_states, "status": self.status, "detail": self.detail,
        }


def _reference(theorem: str, inputs: Sequence[Automaton]) -> Automaton:
    """The same operation through the deterministic construction, used to
    cross-check the language of each NFA construction."""
    dfas = [x if isinstance(x, Idfa) else determinize(x) for x in inputs]
    op = theorem.rsplit("-", 1)[0]
    if op == "complement":
        return complement_idfa(dfas[0])
    if op == "intersection":
        return intersect_idfa(*dfas)
    if op == "union":
        return union_idfa(*dfas)
    if op == "concat":
        return determinize(concat_nfa(*dfas))
    if op == "star":
        return determinize(star_nfa(dfas[0]))
    return determinize(reverse_nfa(dfas[0]))


def measure(theorem: str, inputs: Sequence[Automaton], m: int | None, n: int) -> BoundReport:
    """Run the construction for ``theorem`` on ``inputs`` and compare with the
    bound evaluated at ``(m, n)``.

    isc theorems: the minimal incomplete DFA of the result is counted.  nsc
    theorems: the fooling certificate from the lower-bound proof must validate on the result
    language and the construction must be a single-initial NFA with exactly
    that many states.
    """
    op = OPERATIONS[theorem]
    upper = op.bound(m or 0, n)
    detail: list[str] = []
    result = construct(theorem, *inputs)
    if result.construction_states > upper:
        detail.append(f"construction has {result.construction_states} states, above the bound {upper}")
    if op.model == "isc":
        achieved = minimize_idfa(result.automaton if isinstance(result.automaton, Idfa)
                                 else determinize(result.automaton)).num_states
    else:
        ref = _reference(theorem, inputs)
        cex = find_counterexample(result.automaton, ref)
        if cex is not None:
            detail.append(f"NFA construction disagrees with DFA construction on {cex!r}")
        initials = bin(as_nfa(result.automaton).initial).count("1")
        if initials != 1:
            detail.append(f"construction has {initials} initial states")
        cert = proof_fooling_set(theorem, m, n)
        verdict = check(result.automaton, cert)
        if verdict.valid:
            achieved = cert.claimed_bound
        else:
            achieved = 0
            detail.append(f"fooling certificate broken: {verdict.violation}")
        if verdict.valid and result.construction_states != achieved:
            detail.append(f"construction has {result.construction_states} states, certificate {achieved}")
    if detail:
        status = "fail"
    elif achieved == upper:
        status = "tight"
    elif achieved < upper:
        status = "gap"
    else:
        status = "fail"
        detail.append(f"measured {achieved} exceeds upper bound {upper}")
    return BoundReport(theorem, m, n, op.model, upper, achieved, result.construction_states, status, detail)


def bound_report(theorem: str, m: int | None = None, n: int | None = None,
                 budget: int = DEFAULT_BUDGET) -> BoundReport:
    """Build the witnesses for ``theorem`` and measure the bound on them."""
    if theorem not in THEOREMS:
        raise WitnessError(f"unknown theorem {theorem!r}; known: {', '.join(THEOREMS)}")
    family, min_m, min_n = THEOREMS[theorem]
    if n is None or n < min_n or (min_m is not None and (m is None or m < min_m)):
        lo = f"m >= {min_m}, " if min_m is not None else ""
        raise WitnessError(f"{theorem} needs {lo}n >= {min_n}")
    if min_m is None:
        m = None
    model = OPERATIONS[theorem].model
    try:
        inputs = make_witness(WitnessSpec(family, m, n), budget)
    except ReconstructionError as exc:
        upper = OPERATIONS[theorem].bound(m or 0, n)
        return BoundReport(theorem, m, n, model, upper, 0, 0, "fail", [str(exc)])
    return measure(theorem, inputs, m, n)


# --- validation ------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class WitnessReport:
    spec: WitnessSpec
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def render(self) -> str:
        lines = [f"{'ok  ' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
                 for c in self.checks]
        return "\n".join(lines)


def _membership_checks(label: str, language: Automaton, facts) -> list[Check]:
    checks = []
    mem = Membership(language)
    for word, expected in facts:
        ok = (word in mem) == expected
        checks.append(Check(f"{label}: {word or '-'} {'in' if expected else 'not in'}", ok))
    return checks


def _subset_language(alphabet: str, pattern: str) -> Idfa:
    """All-final DFA for words in ``x1* x2* ... xk*`` (``pattern`` = x1..xk)."""
    t = []
    for i, sym in enumerate(pattern):
        for j in range(i, len(pattern)):
            t.append((i, pattern[j], j))
    # first matching block wins, so keep only the earliest target per (state, symbol)
    seen, rows = set(), []
    for p, a, q in t:
        if (p, a) not in seen:
            seen.add((p, a))
            rows.append((p, a, q))
    return idfa(alphabet, len(pattern), rows)


def _included(small: Automaton, big: Automaton) -> str | None:
    """A word of ``small`` outside ``big``, or None."""
    dsmall = small if isinstance(small, Idfa) else determinize(small)
    dbig = big if isinstance(big, Idfa) else determinize(big)
    inter = intersect_idfa(minimize_idfa(dsmall), minimize_idfa(dbig))
    return find_counterexample(inter, dsmall)


def _a_count_at_most(alphabet: str, limit: int) -> Idfa:
    t = [(i, "a", i + 1) for i in range(limit)]
    t += [(i, s, i) for i in range(limit + 1) for s in alphabet if s != "a"]
    return idfa(alphabet, limit + 1, t)


def _textual_constraints(spec: WitnessSpec, automata: Sequence[Automaton]) -> list[Check]:
    """String-level facts the lower-bound arguments rely on, for the
    reconstructed families."""
    m, n = spec.m, spec.n
    if spec.family == "union-nsc":
        k, l = automata
        union = union_idfa(*(x if isinstance(x, Idfa) else determinize(x) for x in (k, l)))
        facts = [("a" * (m - 1) + "b", True), ("a" * (m - 1) + "ba", True),
                 ("c" * (n - 1) + "d", True), ("c" * (n - 1) + "dc", True)]
        facts += [("a" * (m - 1 - d) + "b", False) for d in range(1, m - 1)]
        facts += [("a" * (m - 1) + "b" + "a" * (m - 1 - i) + "b", False) for i in range(1, m)]
        facts += [("c" * (n - 1 - d) + "d", False) for d in range(1, n - 1)]
        facts += [("c" * (n - 1) + "d" + "c" * (n - 1 - j) + "d", False) for j in range(1, n)]
        xa = ["a" * i for i in range(1, m)] + ["a" * (m - 1) + "b"]
        yb = ["c" * (n - 1 - j) + "d" for j in range(1, n)] + ["c"]
        facts += [(x + y, False) for x in xa for y in yb]
        return _membership_checks("K u L", union, facts)
    if spec.family == "concat-nsc":
        k, l = automata
        kl = concat_nfa(k, l)
        checks = _membership_checks("K", k, [("a" * (m - 1) + "c", True)])
        checks += _membership_checks("L", l, [("b" + "a" * (n - 1), True)])
        checks += _membership_checks("KL", kl, [("a" * (m - 1) + "cbcb" + "a" * (n - 1), False)])
        shape = _included(kl, _subset_language("abc", "bacbac"))
        checks.append(Check("KL within b*a*c*b*a*c*", shape is None, "" if shape is None else repr(shape)))
        count = _included(kl, _a_count_at_most("abc", m + n - 2))
        checks.append(Check(f"KL has at most {m + n - 2} a's", count is None, "" if count is None else repr(count)))
        return checks
    if spec.family == "reversal-isc":
        (a,) = automata
        rev = reverse_nfa(a)
        bad = []
        for s in range(1, 1 << n):
            for i in bits(s):
                word = rev.encode("a" * (i + 1) + "b" + "a" * (n - i - 1))
                if rev.run(s, word) != s & ~(1 << i):
                    bad.append((s, i + 1))
        return [Check("S goes to S minus {i} on a^i b a^(n-i)", not bad, f"{len(bad)} failures" if bad else "")]
    if spec.family == "star-reversal-nsc":
        (a,) = automata
        facts = [("a" * (n - 1) + "b", True)] + [("a" * k + "b", False) for k in range(n - 1)]
        return _membership_checks("L", a, facts)
    return []


def validate_witness(spec: WitnessSpec, automata: Sequence[Automaton]) -> WitnessReport:
    """Check that ``automata`` witness every claim attached to ``spec``:
    prefix-closedness, the complexity of each input, the tight bound of each
    theorem, and (for reconstructed families) the textual constraints."""
    fam = _check_params(spec)
    checks: list[Check] = []
    if len(automata) != fam.arity:
        return WitnessReport(spec, [Check("arity", False, f"expected {fam.arity} automata")])
    alphabet = tuple(fam.alphabet)
    for label, x in zip("KL" if fam.arity == 2 else "L", automata):
        if x.alphabet != alphabet:
            checks.append(Check(f"{label} alphabet", False, "".join(x.alphabet)))
            return WitnessReport(spec, checks)
        checks.append(Check(f"{label} prefix-closed", is_prefix_closed(x)))

    for which, (label, x, size) in enumerate(zip("KL" if fam.arity == 2 else "L", automata, spec.sizes())):
        if fam.model in ("isc", "both"):
            got = isc(x)
            checks.append(Check(f"isc({label}) = {size}", got == size, f"got {got}"))
        if fam.model in ("nsc", "both"):
            states = x.num_states
            verdict = check(x, _input_fooling(spec.family, which, size))
            checks.append(Check(f"nsc({label}) = {size}", verdict.valid and states == size,
                                f"{states} states, certificate {'valid' if verdict.valid else verdict.violation}"))
        if fam.model == "sc":
            got = sc(x)
            checks.append(Check(f"sc({label}) = {size}", got == size, f"got {got}"))

    if spec.family == "star-collapse":
        (x,) = automata
        body = trim(x) if isinstance(x, Idfa) else x
        got = sc(star_nfa(body))
        checks.append(Check("sc(L*) = 2", got == 2, f"got {got}"))

    for theorem in fam.theorems:
        _, min_m, min_n = THEOREMS[theorem]
        if spec.n < min_n:
            continue
        report = measure(theorem, automata, spec.m if min_m is not None else None, spec.n)
        checks.append(Check(f"{theorem} tight", report.status == "tight",
                            "; ".join([f"upper {report.upper}, achieved {report.achieved}"] + report.detail)))
    checks += _textual_constraints(spec, automata)
    return WitnessReport(spec, checks)


# --- reconstruction ------------------------------------------------------------------

RECONSTRUCTED = ("union-nsc", "concat-nsc", "reversal-isc", "star-reversal-nsc")


def _all_final_idfas(alphabet: str, size: int) -> Iterator[Idfa]:
    """Every all-final incomplete DFA with ``size`` states, in a fixed order."""
    k = len(alphabet)
    for table in itertools.product(range(-1, size), repeat=size * k):
        rows = tuple(tuple(None if t < 0 else t for t in table[q * k:(q + 1) * k]) for q in range(size))
        yield Idfa(tuple(alphabet), rows, 0, (1 << size) - 1)


def _candidates(family: str, m: int | None, n: int) -> Iterator[tuple[Automaton, ...]]:
    fam = FAMILIES[family]
    seed = _build(WitnessSpec(family, m, n))
    yield seed
    if fam.arity == 1:
        for a in _all_final_idfas(fam.alphabet, n):
            yield (a,)
    else:
        for a in _all_final_idfas(fam.alphabet, m):
            for b in _all_final_idfas(fam.alphabet, n):
                yield (a, b)


@lru_cache(maxsize=None)
def reconstruct_witness(family: str, m: int | None, n: int,
                        budget: int = DEFAULT_BUDGET) -> tuple[tuple[Automaton, ...], WitnessReport]:
    """First candidate (seed first, then exhaustive order) that passes
    :func:`validate_witness`; raises :class:`ReconstructionError` when
    ``budget`` candidates have been tried without success."""
    if family not in RECONSTRUCTED:
        raise WitnessError(f"{family} is not a reconstructed family")
    spec = WitnessSpec(family, m, n)
    _check_params(spec)
    last = None
    for tried, candidate in enumerate(_candidates(family, m, n)):
        if tried >= budget:
            break
        report = validate_witness(spec, candidate)
        if report.ok:
            return candidate, report
        last = report
    hint = "" if last is None else "; last failures: " + ", ".join(c.name for c in last.failures()[:5])
    raise ReconstructionError(f"{family} m={m} n={n}: no valid candidate within budget {budget}{hint}")

