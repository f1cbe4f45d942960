import itertools

import pytest

import oracles
from chowlab.core.poly import BiPoly, UniPoly
from chowlab.errors import InvalidArgument
from chowlab.eulerian import (binomial_eulerian, eulerian, q_binom_from_dperms, q_binom_from_extcodes,
                              q_binomial_eulerian, q_eulerian, q_eulerian_from_codes)


def bi(d):
    """BiPoly from {(q, t): c}."""
    return BiPoly(dict(d))


def as_dict(b):
    return dict(b.items())


# ---------------------------------------------------------------- examples

def test_eulerian_examples():
    assert eulerian(1) == UniPoly([1], "t")
    assert eulerian(3) == UniPoly([1, 4, 1], "t")
    assert eulerian(4) == UniPoly([1, 11, 11, 1], "t")


def test_binomial_eulerian_examples():
    assert binomial_eulerian(0) == UniPoly([1], "t")
    assert binomial_eulerian(2) == UniPoly([1, 3, 1], "t")
    assert binomial_eulerian(3) == UniPoly([1, 7, 7, 1], "t")


def test_q_eulerian_examples():
    assert q_eulerian(2) == bi({(0, 0): 1, (0, 1): 1})
    assert q_eulerian(3) == bi({(0, 0): 1, (0, 1): 2, (1, 1): 1, (2, 1): 1, (0, 2): 1})


def test_q_binomial_eulerian_examples():
    assert q_binomial_eulerian(0) == bi({(0, 0): 1})
    want2 = bi({(0, 0): 1, (0, 1): 2, (1, 1): 1, (0, 2): 1})
    assert q_binomial_eulerian(2) == want2
    assert q_binom_from_extcodes(2) == want2
    assert q_binom_from_dperms(2) == want2


def test_small_cases_of_combinatorial_sums():
    assert q_eulerian_from_codes(1) == bi({(0, 0): 1})
    assert q_eulerian_from_codes(3, "inv") == q_eulerian(3)
    assert q_binom_from_extcodes(0) == bi({(0, 0): 1})
    assert q_binom_from_dperms(0) == bi({(0, 0): 1})


def test_rejects_bad_arguments():
    with pytest.raises(InvalidArgument):
        eulerian(0)
    with pytest.raises(InvalidArgument):
        q_eulerian_from_codes(3, "des")


# ---------------------------------------------------------------- brute force

@pytest.mark.parametrize("n", range(1, 9))
def test_eulerian_matches_recurrence(n):
    assert eulerian(n).dense() == oracles.eulerian_numbers(n)


@pytest.mark.parametrize("n", range(0, 9))
def test_binomial_eulerian_matches_definition(n):
    assert binomial_eulerian(n).dense() == oracles.binomial_eulerian_numbers(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_q_eulerian_matches_brute_force(n):
    assert as_dict(q_eulerian(n)) == oracles.q_eulerian_brute(n)


@pytest.mark.parametrize("n", range(0, 7))
def test_q_binom_from_dperms_matches_brute_force(n):
    want = oracles.dist(
        (0, 0) if not any(w) else (oracles.maj(w) - oracles.exc(w), oracles.exc(w) + 1)
        for w in oracles.decorated_perms(n))
    if n == 0:
        want = {(0, 0): 1}
    assert as_dict(q_binom_from_dperms(n)) == want


@pytest.mark.parametrize("n", range(1, 6))
def test_codes_sum_matches_brute_force(n):
    for stat in ("inv", "maj"):
        f = oracles.inv if stat == "inv" else oracles.maj
        want = oracles.dist((f(a), sum(marks)) for a, marks in oracles.codes_brute(n))
        assert as_dict(q_eulerian_from_codes(n, stat)) == want


@pytest.mark.parametrize("n", range(0, 5))
def test_extcodes_sum_matches_brute_force(n):
    for stat in ("inv", "maj"):
        f = oracles.inv if stat == "inv" else oracles.maj
        want = oracles.dist((f(a), oracles.code_index(a, marks) + 1)
                            for a, marks in oracles.codes_brute(n, extended=True))
        assert as_dict(q_binom_from_extcodes(n, stat)) == want


# ---------------------------------------------------------------- identities

@pytest.mark.parametrize("n", range(1, 8))
def test_codes_give_q_eulerian(n):
    assert q_eulerian_from_codes(n, "inv") == q_eulerian(n)
    assert q_eulerian_from_codes(n, "maj") == q_eulerian(n)


@pytest.mark.parametrize("n", range(0, 7))
def test_extcodes_and_dperms_give_q_binomial_eulerian(n):
    want = q_binomial_eulerian(n)
    assert q_binom_from_extcodes(n, "inv") == want
    assert q_binom_from_extcodes(n, "maj") == want
    assert q_binom_from_dperms(n) == want


@pytest.mark.parametrize("n", range(1, 9))
def test_specializations_at_q_one(n):
    assert q_eulerian(n).at_q1() == eulerian(n)
    assert q_binomial_eulerian(n).at_q1() == binomial_eulerian(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_degrees_and_extreme_coefficients(n):
    qa = q_eulerian(n)
    assert max(t for (_, t), _ in qa.items()) == n - 1
    assert qa.t_coeff(0) == UniPoly({0: 1}) and qa.t_coeff(n - 1) == UniPoly({0: 1})
    qb = q_binomial_eulerian(n)
    assert max(t for (_, t), _ in qb.items()) == n
    assert qb.t_coeff(0) == UniPoly({0: 1}) and qb.t_coeff(n) == UniPoly({0: 1})


def test_no_negative_exponents():
    for n in range(1, 7):
        for b in (q_eulerian(n), q_binomial_eulerian(n), q_binom_from_dperms(n)):
            assert all(q >= 0 and t >= 0 for (q, t), _ in b.items())


def test_exc_and_des_are_equidistributed():
    for n in range(1, 7):
        perms = list(itertools.permutations(range(1, n + 1)))
        assert oracles.dist(oracles.exc(p) for p in perms) == oracles.dist(len(oracles.descents(p)) for p in perms)
