"""Constructions for complement, intersection, union, concatenation, star and
reversal, each in the form used for the upper-bound arguments, for both the
incomplete-deterministic and the nondeterministic model.

All constructions keep the input alphabet verbatim, unused symbols included.
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .automata import (
    AlphabetError,
    Automaton,
    Cdfa,
    Idfa,
    Nfa,
    PreconditionError,
    as_nfa,
    bits,
    complete,
    determinize,
    to_mask,
)


def _same_alphabet(a: Automaton, b: Automaton) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetError(
            f"alphabets differ: {''.join(a.alphabet)} vs {''.join(b.alphabet)}"
        )


def _all_final(a: Automaton, what: str) -> None:
    if a.final != a.all_states:
        raise PreconditionError(f"{what}: every state must be final")


def _single_initial(a: Nfa, what: str) -> int:
    states = list(bits(a.initial))
    if len(states) != 1:
        raise PreconditionError(f"{what}: needs exactly one initial state, got {len(states)}")
    return states[0]


# --- complement ------------------------------------------------------------

def complement_idfa(dfa: Idfa) -> Cdfa:
    """Add a dead state, then swap final and non-final states."""
    c = complete(dfa)
    return Cdfa(c.alphabet, c.delta, c.initial, c.all_states & ~c.final)


def complement_nfa(nfa: Automaton) -> Cdfa:
    """Subset automaton (with the empty set as dead state), finals swapped."""
    return complement_idfa(determinize(nfa))


# --- intersection and union --------------------------------------------------

def intersect_idfa(a: Idfa, b: Idfa) -> Idfa:
    """Reachable part of the incomplete product automaton: a pair moves only
    if both components move."""
    _same_alphabet(a, b)
    if a.initial is None or b.initial is None:
        return Idfa(a.alphabet, (), None, 0)
    start = (a.initial, b.initial)
    ids = {start: 0}
    order = [start]
    rows = []
    for p, q in order:
        row = []
        for i in range(len(a.alphabet)):
            tp, tq = a.delta[p][i], b.delta[q][i]
            if tp is None or tq is None:
                row.append(None)
                continue
            if (tp, tq) not in ids:
                ids[tp, tq] = len(order)
                order.append((tp, tq))
            row.append(ids[tp, tq])
        rows.append(tuple(row))
    final = to_mask(i for i, (p, q) in enumerate(order) if a.is_final(p) and b.is_final(q))
    return Idfa(a.alphabet, tuple(rows), 0, final)


def intersect_nfa(a: Automaton, b: Automaton) -> Nfa:
    """Full product NFA on ``Q_A x Q_B`` (pair ``(p, q)`` is ``p * n + q``)."""
    _same_alphabet(a, b)
    a, b = as_nfa(a), as_nfa(b)
    m, n = a.num_states, b.num_states
    rows = []
    for p in range(m):
        for q in range(n):
            rows.append(tuple(
                to_mask(s * n + t for s in bits(a.delta[p][i]) for t in bits(b.delta[q][i]))
                for i in range(len(a.alphabet))
            ))
    initial = to_mask(p * n + q for p in bits(a.initial) for q in bits(b.initial))
    final = to_mask(p * n + q for p in bits(a.final) for q in bits(b.final))
    return Nfa(a.alphabet, tuple(rows), initial, final)


def _with_dead(dfa: Idfa) -> tuple[list[tuple[int, ...]], int, int]:
    """Transition rows with an extra dead state appended (always, even when
    ``dfa`` is already complete), plus the initial and dead indices."""
    dead = dfa.num_states
    rows = [tuple(dead if t is None else t for t in row) for row in dfa.delta]
    rows.append((dead,) * len(dfa.alphabet))
    return rows, (dead if dfa.initial is None else dfa.initial), dead


def union_idfa(a: Idfa, b: Idfa) -> Idfa:
    """Complete both automata with dead states, take the reachable product,
    and leave out the pair of dead states."""
    _same_alphabet(a, b)
    ra, sa, da = _with_dead(a)
    rb, sb, db = _with_dead(b)
    dead = (da, db)
    start = (sa, sb)
    if start == dead:
        return Idfa(a.alphabet, (), None, 0)
    ids = {start: 0}
    order = [start]
    rows = []
    for p, q in order:
        row = []
        for i in range(len(a.alphabet)):
            nxt = (ra[p][i], rb[q][i])
            if nxt == dead:
                row.append(None)
                continue
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
            row.append(ids[nxt])
        rows.append(tuple(row))
    final = to_mask(
        i for i, (p, q) in enumerate(order)
        if (p != da and a.is_final(p)) or (q != db and b.is_final(q))
    )
    return Idfa(a.alphabet, tuple(rows), 0, final)


def union_nfa(a: Automaton, b: Automaton) -> Nfa:
    """Disjoint union plus a fresh initial state that copies the outgoing
    transitions of both old initial states; ``m + n + 1`` states."""
    _same_alphabet(a, b)
    a, b = as_nfa(a), as_nfa(b)
    sa = _single_initial(a, "union")
    sb = _single_initial(b, "union")
    m = a.num_states
    rows = [row for row in a.delta]
    rows += [tuple(t << m for t in row) for row in b.delta]
    rows.append(tuple(a.delta[sa][i] | b.delta[sb][i] << m for i in range(len(a.alphabet))))
    fresh = a.num_states + b.num_states
    final = a.final | b.final << m
    if a.final >> sa & 1 or b.final >> sb & 1:
        final |= 1 << fresh
    return Nfa(a.alphabet, tuple(rows), 1 << fresh, final)


def merge_initial(nfa: Automaton) -> Nfa:
    """Equivalent NFA with a single initial state.

    Unchanged if there already is exactly one; otherwise one fresh state
    takes over the outgoing transitions of all initial states.
    """
    nfa = as_nfa(nfa)
    if bin(nfa.initial).count("1") == 1:
        return nfa
    fresh = nfa.num_states
    row = tuple(nfa.step(nfa.initial, i) for i in range(len(nfa.alphabet)))
    final = nfa.final | ((1 << fresh) if nfa.initial & nfa.final else 0)
    return Nfa(nfa.alphabet, nfa.delta + (row,), 1 << fresh, final)


# --- concatenation -----------------------------------------------------------

def concat_nfa(a: Automaton, b: Automaton) -> Nfa:
    """NFA for ``L(a) L(b)`` when every state of ``a`` is final.

    Whenever ``q`` in ``a`` has a transition on some symbol, the same symbol
    also leads to the initial state of ``b``.  Initial states are those of
    ``a`` plus the initial state of ``b``; final states are those of ``b``.
    States of ``b`` are numbered after those of ``a``.
    """
    _same_alphabet(a, b)
    a, b = as_nfa(a), as_nfa(b)
    _all_final(a, "concatenation")
    sb = _single_initial(b, "concatenation")
    m = a.num_states
    jump = 1 << (m + sb)
    rows = [tuple(t | jump if t else 0 for t in row) for row in a.delta]
    rows += [tuple(t << m for t in row) for row in b.delta]
    return Nfa(a.alphabet, tuple(rows), a.initial | jump, b.final << m)


def concat_nfa_single(a: Automaton, b: Automaton) -> Nfa:
    """Single-initial NFA for ``L(a) L(b)`` with ``m + n`` states, for ``a``
    with all states final.

    Every state of ``a`` also carries the outgoing transitions of the initial
    state of ``b``; states of ``a`` are final iff the empty word is in L(b).
    """
    _same_alphabet(a, b)
    a, b = as_nfa(a), as_nfa(b)
    _all_final(a, "concatenation")
    _single_initial(a, "concatenation")
    sb = _single_initial(b, "concatenation")
    m = a.num_states
    rows = [tuple(row[i] | b.delta[sb][i] << m for i in range(len(row))) for row in a.delta]
    rows += [tuple(t << m for t in row) for row in b.delta]
    final = b.final << m
    if b.final >> sb & 1:
        final |= a.all_states
    return Nfa(a.alphabet, tuple(rows), a.initial, final)


# --- star and reversal -------------------------------------------------------

def star_nfa(a: Automaton) -> Nfa:
    """NFA for ``L(a)*`` on the same states, for single-initial ``a`` whose
    initial state is final: a transition into a final state is doubled by
    one into the initial state."""
    a = as_nfa(a)
    s = _single_initial(a, "star")
    if not a.final >> s & 1:
        raise PreconditionError("star: the initial state must be final")
    back = 1 << s
    rows = tuple(tuple(t | back if t & a.final else t for t in row) for row in a.delta)
    return Nfa(a.alphabet, rows, a.initial, a.final)


def reverse_nfa(a: Automaton) -> Nfa:
    """Swap initial and final states and reverse every transition."""
    a = as_nfa(a)
    n, k = a.num_states, len(a.alphabet)
    rows = [[0] * k for _ in range(n)]
    for p in range(n):
        for i in range(k):
            for q in bits(a.delta[p][i]):
                rows[q][i] |= 1 << p
    return Nfa(a.alphabet, tuple(map(tuple, rows)), a.final, a.initial)


# --- construction registry -------------------------------------------------------

@dataclass(frozen=True)
class OpResult:
    """A construction's output, its size, and the upper bound it must obey."""

    automaton: Automaton
    construction_states: int
    upper_bound: int


@dataclass(frozen=True)
class Operation:
    arity: int
    model: str  # "isc" or "nsc"
    build: Callable[..., Automaton]
    bound: Callable[[int, int], int]  # (m, n) -> bound; unary ops ignore m


def _det(build):
    return lambda *xs: determinize(build(*xs))


def _as_dfa(x: Automaton) -> Idfa:
    if isinstance(x, Idfa):
        return x
    raise PreconditionError("this construction needs a deterministic input")


OPERATIONS: dict[str, Operation] = {
    "complement-isc": Operation(1, "isc", lambda d: complement_idfa(_as_dfa(d)), lambda m, n: n + 1),
    "complement-nsc": Operation(1, "nsc", complement_nfa, lambda m, n: 2 ** n),
    "intersection-isc": Operation(2, "isc", lambda a, b: intersect_idfa(_as_dfa(a), _as_dfa(b)), lambda m, n: m * n),
    "intersection-nsc": Operation(2, "nsc", intersect_nfa, lambda m, n: m * n),
    "union-isc": Operation(2, "isc", lambda a, b: union_idfa(_as_dfa(a), _as_dfa(b)), lambda m, n: m * n + m + n),
    "union-nsc": Operation(2, "nsc", union_nfa, lambda m, n: m + n + 1),
    "concat-isc": Operation(2, "isc", _det(concat_nfa), lambda m, n: m * 2 ** (n - 1) + 2 ** n - 1),
    "concat-nsc": Operation(2, "nsc", concat_nfa_single, lambda m, n: m + n),
    "star-isc": Operation(1, "isc", _det(star_nfa), lambda m, n: 2 ** (n - 1)),
    "star-nsc": Operation(1, "nsc", star_nfa, lambda m, n: n),
    "reversal-isc": Operation(1, "isc", _det(reverse_nfa), lambda m, n: 2 ** n - 1),
    "reversal-nsc": Operation(1, "nsc", lambda a: merge_initial(reverse_nfa(a)), lambda m, n: n + 1),
}


def construct(op: str, *inputs: Automaton) -> OpResult:
    """Run construction ``op`` and evaluate its bound on the input sizes.

    For ``isc`` operations the inputs must be incomplete DFAs and the
    construction size is the number of reachable non-empty states; for
    ``nsc`` operations it is the number of NFA states.
    """
    try:
        spec = OPERATIONS[op]
    except KeyError:
        raise KeyError(f"unknown operation {op!r}; known: {', '.join(OPERATIONS)}") from None
    if len(inputs) != spec.arity:
        raise PreconditionError(f"{op} takes {spec.arity} input(s), got {len(inputs)}")
    sizes = [x.num_states for x in inputs]
    m, n = (sizes[0], sizes[1]) if spec.arity == 2 else (0, sizes[0])
    result = spec.build(*inputs)
    return OpResult(result, result.num_states, spec.bound(m, n))
