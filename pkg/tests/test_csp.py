import itertools
from math import gcd

import pytest

import oracles
from chowlab.core.combinat import DecoratedPermutation, Partition, Permutation, partitions
from chowlab.core.poly import UniPoly
from chowlab.csp import (FAMILIES, character_via_p, cn_character_compare, conjugate, csp_verify,
                         cyclic_fixed_codes, family_j_range, relabel_decorated, root_order)
from chowlab.errors import InvalidArgument, SizeLimitError
from chowlab.symfun import SymH, frobenius_codes


def rotate(word, r):
    """The word read from position r+1 cyclically: (w_{c^r(1)}, ..., w_{c^r(n)})."""
    n = len(word)
    return tuple(word[(i + r) % n] for i in range(n))


def conj_tuple(p, r):
    """c^r p c^-r on a one-line tuple, with c = (1 2 ... n)."""
    n = len(p)

    def c(i):
        return (i - 1 + r) % n + 1
    out = [0] * n
    for i, v in enumerate(p, 1):
        out[c(i) - 1] = c(v) if v else 0
    return tuple(out)


# ---------------------------------------------------------------- fixed points

def test_fixed_code_examples():
    assert cyclic_fixed_codes(3, 1, 0) == 4
    assert cyclic_fixed_codes(3, 1, 1) == 1
    with pytest.raises(InvalidArgument):
        cyclic_fixed_codes(3, 1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_fixed_codes_match_brute_force(n):
    cs = oracles.codes_brute(n)
    for j in range(n):
        for r in range(n):
            want = sum(1 for a, marks in cs if sum(marks) == j and rotate(a, r) == a)
            assert cyclic_fixed_codes(n, j, r) == want


@pytest.mark.parametrize("n", range(1, 6))
def test_fixed_extended_codes_match_brute_force(n):
    cs = oracles.codes_brute(n, extended=True)
    for j in range(-1, n):
        for r in range(n):
            want = sum(1 for a, marks in cs if oracles.code_index(a, marks) == j and rotate(a, r) == a)
            assert cyclic_fixed_codes(n, j, r, extended=True) == want


@pytest.mark.parametrize("n", range(2, 8))
def test_fixed_counts_depend_on_gcd_only(n):
    for j in range(n):
        counts = [cyclic_fixed_codes(n, j, r) for r in range(n)]
        for r in range(n):
            assert counts[r] == counts[gcd(n, r) % n]
            assert counts[r] == counts[(n - r) % n]


def test_conjugation_matches_tuple_oracle():
    for n in range(1, 6):
        for p in itertools.permutations(range(1, n + 1)):
            for r in range(n):
                assert conjugate(Permutation(p), r).images == conj_tuple(p, r)


def test_relabeling_matches_tuple_oracle():
    for n in range(1, 5):
        for w in oracles.decorated_perms(n):
            for r in range(n):
                assert relabel_decorated(DecoratedPermutation(w), r).images == conj_tuple(w, r)


def test_root_order():
    assert root_order(6, 0) == 1
    assert root_order(6, 4) == 3
    assert root_order(7, 3) == 7


# ---------------------------------------------------------------- sieving

def test_codes_example_report():
    rep = csp_verify("codes", 3, 1)
    assert rep.passed
    assert rep.fixed_counts == [4, 1, 1]
    assert rep.polynomial == UniPoly({0: 2, 1: 1, 2: 1})
    assert rep.rows[1].poly_value.constant() == 1


def test_three_cycles_under_conjugation():
    for j in range(3):
        rep = csp_verify("perms_cycletype", 3, j, cycle_type=(3,))
        assert rep.passed


@pytest.mark.parametrize("n", range(1, 7))
def test_polynomial_values_match_complex_evaluation(n):
    for j in range(n):
        rep = csp_verify("codes", n, j)
        poly = dict(rep.polynomial.items())
        for row in rep.rows:
            assert row.poly_value.constant() == oracles.at_root(poly, n, row.r)
            assert row.fixed_count == oracles.at_root(poly, n, row.r)


@pytest.mark.parametrize("n", range(1, 8))
def test_codes_and_excedance_classes(n):
    for j in family_j_range("codes", n):
        a = csp_verify("codes", n, j)
        b = csp_verify("perms_exc", n, j)
        assert a.passed and b.passed
        assert a.fixed_counts == b.fixed_counts
        assert a.rows[0].fixed_count == oracles.eulerian_numbers(n)[j]


@pytest.mark.parametrize("n", range(1, 7))
def test_extended_codes(n):
    for j in family_j_range("extcodes", n):
        rep = csp_verify("extcodes", n, j)
        assert rep.passed, rep.to_json()
        assert rep.rows[0].fixed_count == oracles.binomial_eulerian_numbers(n)[j]


@pytest.mark.parametrize("n", range(1, 7))
def test_permutations_by_cycle_type(n):
    for lam in partitions(n):
        for j in range(n):
            rep = csp_verify("perms_cycletype", n, j, cycle_type=lam)
            assert rep.passed, (lam, j)


@pytest.mark.parametrize("n", range(1, 5))
def test_cycle_type_polynomial_matches_brute_force(n):
    for lam in partitions(n):
        for j in range(n):
            rep = csp_verify("perms_cycletype", n, j, cycle_type=lam)
            want = oracles.dist(oracles.maj(p) - oracles.exc(p) for p in itertools.permutations(range(1, n + 1))
                                if Permutation(p).cycle_type() == lam and oracles.exc(p) == j)
            assert dict(rep.polynomial.items()) == want


@pytest.mark.parametrize("n", range(1, 7))
def test_decorated_permutation_experiment(n):
    for j in family_j_range("dperms_conjecture", n):
        rep = csp_verify("dperms_conjecture", n, j)
        assert rep.experimental
        assert rep.passed, rep.to_json()


def test_pluggable_action():
    # the identity action fixes everything, so the check must fail somewhere
    reps = [csp_verify("dperms_conjecture", 3, j, action=lambda p, r: p) for j in range(4)]
    assert not all(r.passed for r in reps)


def test_report_json():
    js = csp_verify("codes", 3, 1).to_json()
    assert js["passed"] is True
    assert [row["fixed_count"] for row in js["rows"]] == [4, 1, 1]
    # residue mod Phi_3, as coefficients of 1 and q
    assert js["rows"][1]["poly_value"] == ["1", "0"]


def test_argument_errors():
    with pytest.raises(InvalidArgument):
        csp_verify("nope", 3, 1)
    with pytest.raises(InvalidArgument):
        csp_verify("codes", 3)
    with pytest.raises(InvalidArgument):
        csp_verify("perms_cycletype", 3, 1, cycle_type=(2,))
    with pytest.raises(SizeLimitError):
        csp_verify("extcodes", 8, 1)
    assert set(FAMILIES) == {"codes", "extcodes", "perms_exc", "perms_cycletype", "dperms_conjecture"}


# ---------------------------------------------------------------- characters

def test_character_examples():
    assert character_via_p(SymH.h((4,)), 4) == 1
    assert character_via_p(SymH.h((2, 1)), 1) == 3
    with pytest.raises(InvalidArgument):
        character_via_p(SymH.h((3,)), 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_character_routes_agree_on_code_modules(n):
    F = frobenius_codes(n)
    for j in range(n):
        Fj = F.t_coeff(j)
        for d in range(1, n + 1):
            if n % d == 0:
                chi = character_via_p(Fj, d)
                # an element of cycle type (d^k) is c_n^(n/d)
                assert chi == cyclic_fixed_codes(n, j, n // d % n)


def test_character_compare_examples():
    rep = cn_character_compare(3, 1)
    assert rep.codes_character == rep.conj_character == [4, 1, 1]
    assert cn_character_compare(4, 2).passed


@pytest.mark.parametrize("n", range(1, 8))
def test_character_compare(n):
    for j in range(n):
        rep = cn_character_compare(n, j)
        assert rep.passed
        assert rep.codes_character[0] == oracles.eulerian_numbers(n)[j]


def test_partition_of_cycle_type_accepts_partition():
    assert csp_verify("perms_cycletype", 4, 1, cycle_type=Partition((2, 2))).passed
