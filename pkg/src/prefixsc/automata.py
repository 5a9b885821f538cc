"""Automaton models and the basic algorithms on them.

States are the integers ``0 .. num_states - 1`` and sets of states are int
bitmasks, so the subset construction interns subsets for free.  Words are
plain ``str`` values; every symbol is a single character of the alphabet.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterator, Sequence, Union


class AutomatonError(ValueError):
    """Base class for malformed automata and bad inputs."""


class AlphabetError(AutomatonError):
    """A bad alphabet, or a word or second automaton that does not fit one."""


class PreconditionError(AutomatonError):
    """A construction was applied outside its stated domain."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitmask state set in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(states) -> int:
    mask = 0
    for q in states:
        mask |= 1 << q
    return mask


def _check_alphabet(alphabet: tuple[str, ...]) -> None:
    if not alphabet:
        raise AlphabetError("alphabet must be non-empty")
    if len(set(alphabet)) != len(alphabet):
        raise AlphabetError(f"alphabet symbols are not distinct: {alphabet}")
    for a in alphabet:
        if not isinstance(a, str) or len(a) != 1 or a.isspace() or a in "-#:":
            raise AlphabetError(f"symbol {a!r} must be one printable character other than - # :")


class _Alphabetic:
    alphabet: tuple[str, ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def encode(self, word: str) -> list[int]:
        idx = self.index
        try:
            return [idx[c] for c in word]
        except KeyError as exc:
            raise AlphabetError(
                f"symbol {exc.args[0]!r} not in alphabet {''.join(self.alphabet)}"
            ) from None


@dataclass(frozen=True, eq=True)
class Nfa(_Alphabetic):
    """Nondeterministic automaton; ``delta[q][i]`` is the target bitmask of
    state ``q`` on the ``i``-th symbol."""

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    final: int

    def __post_init__(self):
        _check_alphabet(self.alphabet)
        n, k = len(self.delta), len(self.alphabet)
        full = (1 << n) - 1
        for q, row in enumerate(self.delta):
            if len(row) != k:
                raise AutomatonError(f"state {q} has {len(row)} rows, expected {k}")
            if any(t & ~full for t in row):
                raise AutomatonError(f"state {q} has a target outside 0..{n - 1}")
        if self.initial & ~full or self.final & ~full:
            raise AutomatonError("initial/final set mentions unknown state")

    @property
    def num_states(self) -> int:
        return len(self.delta)

    @property
    def all_states(self) -> int:
        return (1 << len(self.delta)) - 1

    def step(self, mask: int, a: int) -> int:
        out = 0
        for q in bits(mask):
            out |= self.delta[q][a]
        return out

    def run(self, mask: int, word: Sequence[int]) -> int:
        for a in word:
            if not mask:
                break
            mask = self.step(mask, a)
        return mask


@dataclass(frozen=True, eq=True)
class Idfa(_Alphabetic):
    """Incomplete deterministic automaton; ``delta[q][i]`` is a state or None.

    The empty language is the automaton with no states and ``initial=None``.
    ``subsets`` optionally records, for automata built by :func:`determinize`,
    the NFA state set each state stands for.
    """

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int | None, ...], ...]
    initial: int | None
    final: int
    subsets: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        _check_alphabet(self.alphabet)
        n, k = len(self.delta), len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != k:
                raise AutomatonError(f"state {q} has {len(row)} rows, expected {k}")
            for t in row:
                if t is not None and not 0 <= t < n:
                    raise AutomatonError(f"state {q} has target {t} outside 0..{n - 1}")
        if n == 0:
            if self.initial is not None:
                raise AutomatonError("a 0-state automaton has no initial state")
        elif self.initial is None or not 0 <= self.initial < n:
            raise AutomatonError(f"initial state {self.initial} outside 0..{n - 1}")
        if self.final & ~((1 << n) - 1):
            raise AutomatonError("final set mentions unknown state")

    @property
    def num_states(self) -> int:
        return len(self.delta)

    @property
    def all_states(self) -> int:
        return (1 << len(self.delta)) - 1

    def is_final(self, q: int) -> bool:
        return bool(self.final >> q & 1)

    def is_total(self) -> bool:
        return all(t is not None for row in self.delta for t in row)

    def run(self, q: int | None, word: Sequence[int]) -> int | None:
        for a in word:
            if q is None:
                return None
            q = self.delta[q][a]
        return q


@dataclass(frozen=True, eq=True)
class Cdfa(Idfa):
    """Complete deterministic automaton (total transition function)."""

    def __post_init__(self):
        super().__post_init__()
        if not self.delta:
            raise AutomatonError("a complete DFA needs at least one state")
        if not self.is_total():
            raise AutomatonError("complete DFA has an undefined transition")


Automaton = Union[Nfa, Idfa]


# --- conversions -----------------------------------------------------------

def as_nfa(automaton: Automaton) -> Nfa:
    if isinstance(automaton, Nfa):
        return automaton
    delta = tuple(
        tuple(0 if t is None else 1 << t for t in row) for row in automaton.delta
    )
    initial = 0 if automaton.initial is None else 1 << automaton.initial
    return Nfa(automaton.alphabet, delta, initial, automaton.final)


def as_idfa(automaton: Idfa) -> Idfa:
    """Drop the Cdfa marker (and diagnostics) without changing anything else."""
    return Idfa(automaton.alphabet, automaton.delta, automaton.initial, automaton.final)


def empty_idfa(alphabet: Sequence[str]) -> Idfa:
    return Idfa(tuple(alphabet), (), None, 0)


# --- membership ------------------------------------------------------------

def accepts(automaton: Automaton, word: str) -> bool:
    """True iff ``word`` is in the language of ``automaton``.

    Raises :class:`AlphabetError` when the word uses a foreign symbol.
    """
    encoded = automaton.encode(word)
    if isinstance(automaton, Nfa):
        return bool(automaton.run(automaton.initial, encoded) & automaton.final)
    q = automaton.run(automaton.initial, encoded)
    return q is not None and automaton.is_final(q)


def enumerate_language(automaton: Automaton, max_len: int) -> set[str]:
    """All accepted words of length at most ``max_len``, by direct simulation.

    Walks the word tree depth-first, carrying the NFA state set reached by
    each prefix; used as the brute-force oracle in tests.
    """
    nfa = as_nfa(automaton)
    out: set[str] = set()
    stack = [("", nfa.initial)]
    while stack:
        word, mask = stack.pop()
        if mask & nfa.final:
            out.add(word)
        if len(word) == max_len or not mask:
            continue
        for i, a in enumerate(nfa.alphabet):
            stack.append((word + a, nfa.step(mask, i)))
    return out


def words_upto(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """All words of length ``<= max_len``, shortest first, then lexicographic
    in alphabet order."""
    level = [""]
    for _ in range(max_len + 1):
        yield from level
        level = [w + a for w in level for a in alphabet]


# --- subset construction, completion, minimization -------------------------

def determinize(automaton: Automaton) -> Idfa:
    """Reachable part of the subset automaton, with the empty set left out.

    Transitions into the empty set become undefined.  State ``i`` of the
    result stands for the NFA subset ``result.subsets[i]``.
    """
    nfa = as_nfa(automaton)
    k = len(nfa.alphabet)
    if not nfa.initial:
        return Idfa(nfa.alphabet, (), None, 0, subsets=())
    ids = {nfa.initial: 0}
    order = [nfa.initial]
    rows: list[tuple[int | None, ...]] = []
    for mask in order:  # order grows while we iterate
        row = []
        for a in range(k):
            t = nfa.step(mask, a)
            if not t:
                row.append(None)
                continue
            if t not in ids:
                ids[t] = len(order)
                order.append(t)
            row.append(ids[t])
        rows.append(tuple(row))
    final = to_mask(i for i, s in enumerate(order) if s & nfa.final)
    return Idfa(nfa.alphabet, tuple(rows), 0, final, subsets=tuple(order))


def complete(dfa: Idfa) -> Cdfa:
    """Send every undefined transition to one fresh non-final dead state."""
    if isinstance(dfa, Cdfa):
        return dfa
    if dfa.num_states and dfa.is_total():
        return Cdfa(dfa.alphabet, dfa.delta, dfa.initial, dfa.final)
    dead = dfa.num_states
    k = len(dfa.alphabet)
    rows = [tuple(dead if t is None else t for t in row) for row in dfa.delta]
    rows.append((dead,) * k)
    initial = dead if dfa.initial is None else dfa.initial
    return Cdfa(dfa.alphabet, tuple(rows), initial, dfa.final)


def reachable_states(dfa: Idfa) -> list[int]:
    """States reachable from the initial state, in BFS order (symbol order)."""
    if dfa.initial is None:
        return []
    seen = {dfa.initial}
    order = [dfa.initial]
    for q in order:
        for t in dfa.delta[q]:
            if t is not None and t not in seen:
                seen.add(t)
                order.append(t)
    return order


def _restrict(dfa: Idfa, keep: Sequence[int], cls=Idfa) -> Idfa:
    """Sub-automaton on ``keep`` (renumbered by position in ``keep``);
    transitions leaving ``keep`` become undefined."""
    if not keep:
        return empty_idfa(dfa.alphabet)
    new = {q: i for i, q in enumerate(keep)}
    rows = tuple(tuple(new.get(t) if t is not None else None for t in dfa.delta[q])
                 for q in keep)
    final = to_mask(i for i, q in enumerate(keep) if dfa.is_final(q))
    return cls(dfa.alphabet, rows, new[dfa.initial], final)


def coreachable_states(dfa: Idfa) -> int:
    """Bitmask of states from which some final state is reachable."""
    preds: list[list[int]] = [[] for _ in range(dfa.num_states)]
    for q, row in enumerate(dfa.delta):
        for t in row:
            if t is not None:
                preds[t].append(q)
    live = dfa.final
    todo = list(bits(dfa.final))
    while todo:
        q = todo.pop()
        for p in preds[q]:
            if not live >> p & 1:
                live |= 1 << p
                todo.append(p)
    return live


def trim(dfa: Idfa) -> Idfa:
    """Remove unreachable states and states with an empty future."""
    live = coreachable_states(dfa)
    if dfa.initial is None or not live >> dfa.initial & 1:
        return empty_idfa(dfa.alphabet)
    keep = [q for q in reachable_states(dfa) if live >> q & 1]
    return _restrict(dfa, keep)


def equivalence_classes(dfa: Cdfa) -> list[int]:
    """Myhill-Nerode classes of a complete DFA by iterated partition refinement.

    Returns ``block[q]``; blocks are numbered by first appearance.
    """
    n = dfa.num_states
    block = [1 if dfa.final >> q & 1 else 0 for q in range(n)]
    count = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new = []
        for q in range(n):
            sig = (block[q],) + tuple(block[t] for t in dfa.delta[q])
            new.append(sigs.setdefault(sig, len(sigs)))
        if len(sigs) == count:
            return new
        block, count = new, len(sigs)


def _quotient(dfa: Cdfa, block: list[int], drop: int | None = None) -> Idfa:
    """Quotient by ``block`` with blocks renumbered in BFS order; the block
    ``drop`` (if any) is removed and transitions into it become undefined."""
    rep: dict[int, int] = {}
    for q, b in enumerate(block):
        rep.setdefault(b, q)
    start = block[dfa.initial]
    if start == drop:
        return empty_idfa(dfa.alphabet)
    ids = {start: 0}
    order = [start]
    rows = []
    for b in order:
        row = []
        for t in dfa.delta[rep[b]]:
            tb = block[t]
            if tb == drop:
                row.append(None)
                continue
            if tb not in ids:
                ids[tb] = len(order)
                order.append(tb)
            row.append(ids[tb])
        rows.append(tuple(row))
    final = to_mask(i for i, b in enumerate(order) if dfa.is_final(rep[b]))
    cls = Cdfa if drop is None else Idfa
    return cls(dfa.alphabet, tuple(rows), 0, final)


def minimize_cdfa(dfa: Idfa) -> Cdfa:
    """Minimal complete DFA for the language of ``dfa`` (completed first)."""
    c = complete(dfa)
    c = _restrict(c, reachable_states(c), cls=Cdfa)
    return _quotient(c, equivalence_classes(c))


def minimize_idfa(dfa: Idfa) -> Idfa:
    """Minimal incomplete DFA: reachable, no dead state, no equivalent states.

    The empty language gives the 0-state automaton.
    """
    c = complete(dfa)
    c = _restrict(c, reachable_states(c), cls=Cdfa)
    block = equivalence_classes(c)
    live = coreachable_states(c)
    dead = {block[q] for q in range(c.num_states) if not live >> q & 1}
    # all states with an empty future are equivalent, so at most one block
    drop = dead.pop() if dead else None
    result = _quotient(c, block, drop)
    return as_idfa(result)


def _dfa_of(automaton: Automaton) -> Idfa:
    return automaton if isinstance(automaton, Idfa) else determinize(automaton)


def isc(automaton: Automaton) -> int:
    """Incomplete state complexity of the language of ``automaton``."""
    return minimize_idfa(_dfa_of(automaton)).num_states


def sc(automaton: Automaton) -> int:
    """State complexity (size of the minimal complete DFA)."""
    return minimize_cdfa(_dfa_of(automaton)).num_states


def is_prefix_closed(automaton: Automaton) -> bool:
    """A language is prefix-closed iff its minimal incomplete DFA has every
    state final."""
    m = minimize_idfa(_dfa_of(automaton))
    return m.final == m.all_states


def _shortest_words(dfa: Idfa, start: int) -> dict[int, str]:
    """BFS from ``start``: the shortest (then symbol-order first) word to
    each reachable state."""
    words = {start: ""}
    order = [start]
    for q in order:
        for i, t in enumerate(dfa.delta[q]):
            if t is not None and t not in words:
                words[t] = words[q] + dfa.alphabet[i]
                order.append(t)
    return words


def prefix_violation(automaton: Automaton) -> tuple[str, str] | None:
    """A pair ``(u, w)`` with ``u`` a prefix of ``w``, ``w`` accepted and
    ``u`` rejected; None if the language is prefix-closed.  ``u`` is as short
    as possible."""
    m = minimize_idfa(_dfa_of(automaton))
    if m.final == m.all_states:
        return None
    reach = _shortest_words(m, m.initial)
    u, p = min(((w, q) for q, w in reach.items() if not m.is_final(q)),
               key=lambda item: (len(item[0]), item[0]))
    # every state of a minimal incomplete DFA can still reach a final state
    tail = min((w for q, w in _shortest_words(m, p).items() if m.is_final(q)),
               key=lambda w: (len(w), w))
    return u, u + tail


# --- equivalence -----------------------------------------------------------

def _aligned(a: Automaton, b: Automaton) -> Automaton:
    """``b`` with its symbols reordered to match ``a``'s alphabet."""
    if a.alphabet == b.alphabet:
        return b
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetError(
            f"alphabets differ: {''.join(a.alphabet)} vs {''.join(b.alphabet)}"
        )
    perm = [b.index[s] for s in a.alphabet]
    rows = tuple(tuple(row[i] for i in perm) for row in b.delta)
    if isinstance(b, Nfa):
        return Nfa(a.alphabet, rows, b.initial, b.final)
    return type(b)(a.alphabet, rows, b.initial, b.final)


def find_counterexample(a: Automaton, b: Automaton) -> str | None:
    """A shortest word in exactly one of the two languages, or None."""
    b = _aligned(a, b)
    da = minimize_cdfa(_dfa_of(a))
    db = minimize_cdfa(_dfa_of(b))
    start = (da.initial, db.initial)
    back: dict[tuple[int, int], tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        p, q = pair = queue.popleft()
        if da.is_final(p) != db.is_final(q):
            word = []
            while back[pair] is not None:
                pair, sym = back[pair]
                word.append(da.alphabet[sym])
            return "".join(reversed(word))
        for i in range(len(da.alphabet)):
            nxt = (da.delta[p][i], db.delta[q][i])
            if nxt not in back:
                back[nxt] = (pair, i)
                queue.append(nxt)
    return None


def equivalent(a: Automaton, b: Automaton) -> bool:
    return find_counterexample(a, b) is None


def rename_symbols(automaton: Automaton, mapping: dict[str, str]) -> Automaton:
    """Same automaton with every symbol ``s`` spelled ``mapping.get(s, s)``."""
    alphabet = tuple(mapping.get(s, s) for s in automaton.alphabet)
    if isinstance(automaton, Nfa):
        return Nfa(alphabet, automaton.delta, automaton.initial, automaton.final)
    return type(automaton)(alphabet, automaton.delta, automaton.initial, automaton.final)


# --- canonical forms -------------------------------------------------------

def _bfs_encoding(dfa: Idfa, order: Sequence[int]) -> tuple:
    start = dfa.initial
    ids = {start: 0}
    seq = [start]
    trans = []
    for q in seq:
        for a in order:
            t = dfa.delta[q][a]
            if t is None:
                trans.append(-1)
                continue
            if t not in ids:
                ids[t] = len(seq)
                seq.append(t)
            trans.append(ids[t])
    finals = tuple(int(dfa.is_final(q)) for q in seq)
    return (len(seq),) + finals + tuple(trans)


def canonical_form(dfa: Idfa, permute_alphabet: bool = False) -> tuple:
    """Isomorphism-invariant encoding of the reachable part of ``dfa``.

    States are relabelled by breadth-first discovery from the initial state,
    reading symbols in alphabet order.  With ``permute_alphabet`` the
    smallest encoding over all symbol orders is returned, so automata that
    differ only by renaming symbols get equal encodings.
    """
    if dfa.initial is None:
        return (0,)
    k = len(dfa.alphabet)
    orders = permutations(range(k)) if permute_alphabet else [tuple(range(k))]
    return min(_bfs_encoding(dfa, order) for order in orders)
