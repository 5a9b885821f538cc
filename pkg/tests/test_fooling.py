import pytest
from hypothesis import given
from hypothesis import strategies as st

from prefixsc.automata import accepts, to_mask
from prefixsc.fooling import (
    FoolingCertificate,
    Violation,
    check,
    check_fooling,
    check_fooling_extended,
    complement_pair,
    complement_subsets,
    proof_fooling_set,
    search_fooling,
)
from prefixsc.ops import complement_nfa, concat_nfa_single, intersect_nfa, merge_initial, reverse_nfa, union_nfa
from prefixsc.witnesses import (
    WitnessSpec,
    complement_nsc,
    complement_unary,
    counters,
    idfa,
    make_witness,
    star_reversal_nsc_seed,
)

from conftest import nfas


def cyclic(symbol: str):
    return idfa("ab", 3, [(0, symbol, 1), (1, symbol, 2), (2, symbol, 0)], final=[0])


CYCLIC_UNION = union_nfa(cyclic("a"), cyclic("b"))


def brute_fooling(accept, pairs) -> bool:
    """Conditions F1 and F2 straight from the definition."""
    if not all(accept(x + y) for x, y in pairs):
        return False
    return all(
        not (accept(pairs[i][0] + pairs[j][1]) and accept(pairs[j][0] + pairs[i][1]))
        for i in range(len(pairs)) for j in range(i + 1, len(pairs))
    )


# --- certificate objects ----------------------------------------------------------------

def test_plain_certificate_must_claim_its_size():
    with pytest.raises(ValueError):
        FoolingCertificate((("a", "b"),), 2)


def test_extended_certificate_claims_one_more():
    cert = FoolingCertificate.extended([("a", "")], [("b", "")], "a", "b")
    assert cert.claimed_bound == 3
    assert cert.pairs == (("a", ""), ("b", ""))


# --- checking -----------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 7))
def test_complement_fooling_set_validates(n):
    v = check(complement_nfa(complement_nsc(n)), proof_fooling_set("complement-nsc", n=n))
    assert v.valid and v.bound == 2 ** n


@pytest.mark.parametrize("n", range(2, 6))
def test_complement_x_reaches_its_subset(n):
    # simulate the witness NFA; states 1..n are indices 0..n-1
    nfa = complement_nsc(n)
    for s in complement_subsets(n):
        x, _ = complement_pair(n, s)
        assert nfa.run(nfa.initial, nfa.encode(x)) == to_mask(i - 1 for i in s)


@pytest.mark.parametrize("n", range(2, 6))
def test_complement_y_rejected_exactly_from_subset(n):
    nfa = complement_nsc(n)
    for s in complement_subsets(n):
        _, y = complement_pair(n, s)
        for i in range(1, n + 1):
            dies = nfa.run(1 << (i - 1), nfa.encode(y)) == 0
            assert dies == (i in s)


def test_complement_y_for_one_three():
    assert complement_pair(3, {1, 3})[1] == "aca"


def test_single_empty_pair():
    v = check_fooling(complement_unary(2), FoolingCertificate.plain([("", "")]))
    assert v.valid and v.bound == 1


def test_empty_certificate_is_valid():
    v = check(complement_unary(2), FoolingCertificate.plain([]))
    assert v.valid and v.bound == 0


def test_intersection_fooling_set_three_three():
    k, l = counters(3, 3)
    cert = proof_fooling_set("intersection-nsc", 3, 3)
    assert cert.pairs[4] == ("ab", "ab")
    v = check(intersect_nfa(k, l), cert)
    assert v.valid and v.bound == 9


def test_corrupted_intersection_pair_is_pinpointed():
    k, l = counters(3, 3)
    lang = intersect_nfa(k, l)
    pairs = list(proof_fooling_set("intersection-nsc", 3, 3).pairs)
    pairs[4] = ("ab", "aab")  # x y now has three a's
    assert check(lang, FoolingCertificate.plain(pairs)).violation == Violation(4, 4, "F1")
    pairs = list(proof_fooling_set("intersection-nsc", 3, 3).pairs)
    pairs[6] = pairs[2]
    assert check(lang, FoolingCertificate.plain(pairs)).violation == Violation(2, 6, "F2")


def test_cyclic_union_extended_certificate():
    v = check(CYCLIC_UNION, proof_fooling_set("cyclic-union"))
    assert v.valid and v.bound == 7


def test_cyclic_union_certificate_with_empty_u_v_fails():
    s = proof_fooling_set("cyclic-union").split
    v = check(CYCLIC_UNION, FoolingCertificate.extended(s.a, s.b, "", ""))
    # (aaa, aaa) and (eps, eps) are both in the language when crossed
    assert not v.valid
    assert v.violation == Violation(2, 3, "F2", "A+u")


def test_cyclic_union_plain_part_only_gives_six():
    cert = proof_fooling_set("cyclic-union")
    v = check_fooling(CYCLIC_UNION, FoolingCertificate.plain(cert.pairs))
    assert v.valid and v.bound == 6


def test_reversal_extended_certificate_four():
    lang = reverse_nfa(star_reversal_nsc_seed(4))
    v = check(lang, proof_fooling_set("reversal-nsc", n=4))
    assert v.valid and v.bound == 5


def test_concat_fooling_set_shape():
    cert = proof_fooling_set("concat-nsc", 3, 3)
    assert len(cert.pairs) == 6
    crossed = cert.pairs[3][0] + cert.pairs[2][1]
    assert crossed == "aacbcbaa"
    k, l = make_witness(WitnessSpec("concat-nsc", 3, 3))
    lang = concat_nfa_single(k, l)
    assert not accepts(lang, crossed)
    assert check(lang, cert).valid


def test_star_fooling_set_boundary():
    assert proof_fooling_set("star-nsc", n=1).pairs == (("", "b"),)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        proof_fooling_set("shuffle")


words = st.text(alphabet="ab", max_size=3)


@given(nfas(alphabet="ab"), st.lists(st.tuples(words, words), max_size=5))
def test_checker_agrees_with_definition(a, pairs):
    v = check_fooling(a, FoolingCertificate.plain(pairs))
    assert v.valid == brute_fooling(lambda w: accepts(a, w), pairs)


@given(nfas(alphabet="ab"), st.lists(st.tuples(words, words), max_size=3),
       st.lists(st.tuples(words, words), max_size=3), words, words)
def test_extended_check_is_three_plain_checks(a, pa, pb, u, v):
    cert = FoolingCertificate.extended(pa, pb, u, v)
    accept = lambda w: accepts(a, w)  # noqa: E731
    expected = (brute_fooling(accept, pa + pb) and brute_fooling(accept, pa + [("", u)])
                and brute_fooling(accept, pb + [("", v)]))
    assert check_fooling_extended(a, cert).valid == expected


# --- search ----------------------------------------------------------------------------------

def test_search_unary_prefixes():
    found = search_fooling(complement_unary(3), max_len=3)
    assert set(found.certificate.pairs) == {("", "aa"), ("a", "a"), ("aa", "")}
    assert not found.partial


def test_search_sigma_star():
    assert search_fooling(idfa("a", 1, [(0, "a", 0)])).certificate.claimed_bound == 1


def test_search_union_plain_versus_extended():
    k, l = make_witness(WitnessSpec("union-nsc", 3, 3))
    lang = union_nfa(k, l)
    plain = search_fooling(lang, max_len=4)
    ext = search_fooling(lang, max_len=4, extended=True)
    assert plain.certificate.claimed_bound <= 6
    assert ext.certificate.claimed_bound == 7
    assert check(lang, ext.certificate).valid


@given(nfas(max_states=3, alphabet="ab"))
def test_search_never_beats_an_automaton(a):
    found = search_fooling(a, max_len=3, budget=2000)
    assert check(a, found.certificate).valid
    assert found.certificate.claimed_bound <= a.num_states
    ext = search_fooling(merge_initial(a), max_len=3, extended=True, budget=2000)
    assert check(a, ext.certificate).valid
    assert ext.certificate.claimed_bound <= merge_initial(a).num_states
