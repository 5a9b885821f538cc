"""Shared strategies and brute-force oracles.

The oracles work on plain Python predicates over strings, so they share no
code with the automaton algorithms they check.
"""
from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from prefixsc.automata import Idfa, Nfa, trim, words_upto

settings.register_profile(
    "default", deadline=None, max_examples=80, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def nfas(draw, max_states: int = 4, max_symbols: int = 3, alphabet: str | None = None) -> Nfa:
    n = draw(st.integers(1, max_states))
    sigma = alphabet or "abc"[: draw(st.integers(1, max_symbols))]
    masks = st.integers(0, (1 << n) - 1)
    rows = tuple(tuple(draw(masks) for _ in sigma) for _ in range(n))
    return Nfa(tuple(sigma), rows, draw(st.integers(1, (1 << n) - 1)), draw(masks))


@st.composite
def idfas(draw, max_states: int = 4, alphabet: str = "ab", all_final: bool = False) -> Idfa:
    n = draw(st.integers(1, max_states))
    target = st.one_of(st.none(), st.integers(0, n - 1))
    rows = tuple(tuple(draw(target) for _ in alphabet) for _ in range(n))
    final = (1 << n) - 1 if all_final else draw(st.integers(0, (1 << n) - 1))
    return Idfa(tuple(alphabet), rows, 0, final)


def prefix_closed(max_states: int = 4, alphabet: str = "ab"):
    """Random prefix-closed languages as trimmed all-final incomplete DFAs."""
    return idfas(max_states, alphabet, all_final=True).map(trim)


def nerode_count(member, alphabet: str, max_len: int, suffix_len: int) -> int:
    """Number of distinct non-empty residuals seen on words up to ``max_len``,
    telling residuals apart by suffixes up to ``suffix_len``.  For a large
    enough window this is the incomplete state complexity."""
    suffixes = list(words_upto(alphabet, suffix_len))
    sigs = set()
    for w in words_upto(alphabet, max_len):
        sig = frozenset(s for s in suffixes if member(w + s))
        if sig:
            sigs.add(sig)
    return len(sigs)


def brute_language(member, alphabet: str, max_len: int) -> set[str]:
    return {w for w in words_upto(alphabet, max_len) if member(w)}
