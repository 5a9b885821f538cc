import pytest
from hypothesis import given

from prefixsc.automata import (
    AlphabetError,
    Cdfa,
    Idfa,
    PreconditionError,
    accepts,
    determinize,
    enumerate_language,
    equivalent,
    isc,
    minimize_cdfa,
    sc,
    trim,
    words_upto,
)
from prefixsc.fooling import check, proof_fooling_set
from prefixsc.ops import (
    OPERATIONS,
    complement_idfa,
    complement_nfa,
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
from prefixsc.witnesses import (
    WitnessSpec,
    complement_nsc,
    complement_unary,
    concat_isc,
    counters,
    idfa,
    make_witness,
    reversal_isc_seed,
    star_isc,
    star_collapse,
)

from conftest import brute_language, nerode_count, nfas, prefix_closed

SIGMA_STAR = idfa("a", 1, [(0, "a", 0)])
EPSILON_ONLY = idfa("ab", 1, [])


def lang(a, k=5):
    return enumerate_language(a, k)


# --- complement --------------------------------------------------------------------

def test_complement_unary_four():
    c = complement_idfa(complement_unary(4))
    assert minimize_cdfa(c).num_states == 5
    assert lang(c, 7) == brute_language(lambda w: len(w) >= 4, "a", 7)


def test_complement_of_complete_input_flips_finals():
    d = Cdfa(("a",), ((1,), (0,)), 0, 0b01)
    c = complement_idfa(d)
    assert c.num_states == 2
    assert c.final == 0b10


@given(prefix_closed(alphabet="ab"))
def test_complement_is_an_involution(a):
    assert equivalent(complement_idfa(complement_idfa(a)), a)


def test_complement_nsc_fooling_set_on_three():
    comp = complement_nfa(complement_nsc(3))
    verdict = check(comp, proof_fooling_set("complement-nsc", n=3))
    assert verdict.valid and verdict.bound == 8


def test_complement_of_sigma_star_is_empty():
    assert isc(complement_nfa(SIGMA_STAR)) == 0


def test_complement_nsc_four_has_sixteen_states():
    assert sc(complement_nfa(complement_nsc(4))) == 16


# --- intersection ------------------------------------------------------------------

def test_intersection_counters_three_four():
    k, l = counters(3, 4)
    assert isc(intersect_idfa(k, l)) == 12


@given(prefix_closed(alphabet="ab"))
def test_intersection_idempotent(a):
    assert equivalent(intersect_idfa(a, a), a)


def test_intersection_counters_two_two_against_brute_force():
    k, l = counters(2, 2)
    member = lambda w: w.count("a") <= 1 and w.count("b") <= 1  # noqa: E731
    assert lang(intersect_idfa(k, l), 4) == brute_language(member, "ab", 4)
    assert nerode_count(member, "ab", 4, 4) == isc(intersect_idfa(k, l)) == 4


# --- union -------------------------------------------------------------------------

def test_union_counters_three_four():
    k, l = counters(3, 4)
    u = union_idfa(k, l)
    assert u.num_states == 19
    assert isc(u) == 19


@given(prefix_closed(alphabet="ab"))
def test_union_idempotent(a):
    assert equivalent(union_idfa(a, a), a)


def test_union_counters_two_two_against_brute_force():
    k, l = counters(2, 2)
    member = lambda w: w.count("a") <= 1 or w.count("b") <= 1  # noqa: E731
    assert lang(union_idfa(k, l), 4) == brute_language(member, "ab", 4)
    assert nerode_count(member, "ab", 4, 4) == isc(union_idfa(k, l)) == 8


def test_union_nfa_for_cyclic_counters():
    k = idfa("ab", 3, [(0, "a", 1), (1, "a", 2), (2, "a", 0)], final=[0])
    l = idfa("ab", 3, [(0, "b", 1), (1, "b", 2), (2, "b", 0)], final=[0])
    u = union_nfa(k, l)
    assert u.num_states == 7
    member = lambda w: set(w) <= {"a"} and len(w) % 3 == 0 or set(w) <= {"b"} and len(w) % 3 == 0  # noqa: E731
    assert lang(u, 7) == brute_language(member, "ab", 7)


def test_union_nfa_of_two_sigma_stars():
    u = union_nfa(SIGMA_STAR, SIGMA_STAR)
    assert u.num_states == 3
    assert equivalent(u, SIGMA_STAR)


def test_union_nfa_reconstructed_witness_validates():
    k, l = make_witness(WitnessSpec("union-nsc", 3, 3))
    u = union_nfa(k, l)
    assert u.num_states == 7
    assert check(u, proof_fooling_set("union-nsc", 3, 3)).valid


# --- concatenation -----------------------------------------------------------------

def test_concat_three_three():
    k, l = concat_isc(3, 3)
    assert isc(concat_nfa(k, l)) == 19


def test_concat_three_four():
    k, l = concat_isc(3, 4)
    assert isc(concat_nfa(k, l)) == 3 * 2 ** 3 + 2 ** 4 - 1


@given(prefix_closed(alphabet="ab"))
def test_concat_with_empty_word_is_identity(k):
    assert equivalent(concat_nfa(k, EPSILON_ONLY), k)


@given(prefix_closed(alphabet="ab"), prefix_closed(alphabet="ab"))
def test_concat_matches_brute_force(k, l):
    lk, ll = lang(k), lang(l)
    member = lambda w: any(w[:i] in lk and w[i:] in ll for i in range(len(w) + 1))  # noqa: E731
    expected = brute_language(member, "ab", 5)
    assert lang(concat_nfa(k, l)) == expected
    single = concat_nfa_single(k, l)
    assert single.num_states == k.num_states + l.num_states
    assert lang(single) == expected


def test_concat_needs_all_final_left_operand():
    k = idfa("a", 2, [(0, "a", 1)], final=[1])
    with pytest.raises(PreconditionError):
        concat_nfa(k, SIGMA_STAR)


def test_alphabets_must_agree():
    with pytest.raises(AlphabetError):
        intersect_nfa(SIGMA_STAR, EPSILON_ONLY)


# --- star ----------------------------------------------------------------------------

def test_star_witness_six():
    assert isc(star_nfa(star_isc(6))) == 32


def test_star_of_empty_word():
    assert equivalent(star_nfa(EPSILON_ONLY), EPSILON_ONLY)


def test_star_collapse_four_is_b_star():
    assert equivalent(star_nfa(trim(star_collapse(4))), idfa("ab", 1, [(0, "b", 0)]))


@given(prefix_closed(alphabet="ab"))
def test_star_matches_brute_force(a):
    base = lang(a) - {""}

    def member(w):
        if not w:
            return True
        return any(w[:i] in base and member(w[i:]) for i in range(1, len(w) + 1))

    s = star_nfa(a)
    assert s.num_states == a.num_states
    assert lang(s) == brute_language(member, "ab", 5)


# --- reversal ------------------------------------------------------------------------

def test_reversal_three():
    assert isc(reverse_nfa(reversal_isc_seed(3))) == 7


def test_palindrome_reversal():
    aba = idfa("ab", 4, [(0, "a", 1), (1, "b", 2), (2, "a", 3)], final=[3])
    assert equivalent(reverse_nfa(aba), aba)


@given(nfas())
def test_double_reversal(a):
    assert equivalent(reverse_nfa(reverse_nfa(a)), a)


@given(nfas())
def test_merge_initial_keeps_language(a):
    merged = merge_initial(a)
    assert bin(merged.initial).count("1") == 1
    assert equivalent(merged, a)


# --- intersection, union and reversal semantics ----------------------------------------

@given(prefix_closed(alphabet="ab"), prefix_closed(alphabet="ab"))
def test_boolean_operations_match_sets(k, l):
    lk, ll = lang(k), lang(l)
    assert lang(intersect_idfa(k, l)) == lk & ll
    assert lang(intersect_nfa(k, l)) == lk & ll
    assert lang(union_idfa(k, l)) == lk | ll
    assert lang(union_nfa(k, l)) == lk | ll


@given(nfas(alphabet="ab"))
def test_reversal_matches_reversed_words(a):
    assert lang(reverse_nfa(a)) == {w[::-1] for w in lang(a)}


# --- registry --------------------------------------------------------------------------

@given(prefix_closed(alphabet="ab"), prefix_closed(alphabet="ab"))
def test_every_construction_respects_its_bound(k, l):
    for op, spec in OPERATIONS.items():
        r = construct(op, *((k, l) if spec.arity == 2 else (l,)))
        assert r.construction_states <= r.upper_bound, op


def test_isc_constructions_are_deterministic():
    k, l = counters(2, 3)
    for op, spec in OPERATIONS.items():
        if spec.model == "isc":
            r = construct(op, *((k, l) if spec.arity == 2 else (l,)))
            assert isinstance(r.automaton, Idfa), op


def test_isc_ops_reject_nondeterministic_input():
    with pytest.raises(PreconditionError):
        construct("union-isc", complement_nsc(2), complement_nsc(2))


def test_determinized_construction_words_agree():
    k, l = concat_isc(3, 3)
    d = determinize(concat_nfa(k, l))
    for w in words_upto("abc", 4):
        assert accepts(d, w) == accepts(concat_nfa(k, l), w)
