import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from chowlab.core.combinat import (DecoratedPermutation, Partition, Permutation, Subset, decorated_count,
                                   decorated_perms, elements_of, mask_of, partitions, permutations,
                                   relabel_mask, submasks)
from chowlab.core.poly import (BiPoly, UniPoly, cyclotomic, eval_at_root_of_unity, q_binomial, q_int,
                               q_multinomial)
from chowlab.core.words import (BARRED, PLAIN, Bar, des_set, dex, dex_decorated, exc, exc_set, inv, maj,
                                perm_maj, shuffles)
from chowlab.errors import InternalError, InvalidArgument, SizeLimitError, check_cap

small_poly = st.dictionaries(st.integers(0, 6), st.integers(-5, 5), max_size=5).map(UniPoly)


# ---------------------------------------------------------------- masks and subsets

def test_mask_roundtrip():
    assert mask_of([1, 3]) == 0b101
    assert elements_of(0b101) == [1, 3]


@given(st.integers(0, 2 ** 10 - 1))
def test_subset_iterates_in_increasing_order(mask):
    s = Subset(mask, 10)
    els = list(s)
    assert els == sorted(els)
    assert all(1 <= i <= 10 for i in els)
    assert mask_of(els) == mask


def test_subset_rejects_bits_beyond_n():
    with pytest.raises(InvalidArgument):
        Subset(0b1000, 3)


def test_submasks_count():
    assert len(list(submasks(0b1011))) == 8


def test_relabel_mask():
    assert relabel_mask(mask_of([1, 3]), (2, 1, 3)) == mask_of([2, 3])


# ---------------------------------------------------------------- permutations

@given(st.permutations(list(range(1, 7))), st.permutations(list(range(1, 7))))
def test_permutation_group_laws(a, b):
    p, q = Permutation(tuple(a)), Permutation(tuple(b))
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert p * p.inverse() == Permutation.identity(6)
    assert (p * q)(1) == p(q(1))


def test_permutation_rejects_non_permutation():
    with pytest.raises(InvalidArgument):
        Permutation((1, 1, 2))


def test_cycle_type_and_cycle_power():
    assert Permutation.cycle(4).cycle_type() == Partition((4,))
    assert Permutation.cycle(4, 2).cycle_type() == Partition((2, 2))
    assert Permutation.identity(3).cycle_type() == Partition((1, 1, 1))


def test_permutations_cap():
    with pytest.raises(SizeLimitError):
        list(permutations(10))


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("CHOWLAB_MAX_N", "3")
    with pytest.raises(SizeLimitError):
        next(permutations(4))


# ---------------------------------------------------------------- decorated permutations

def test_decorated_perms_n2():
    got = {str(p) for p in decorated_perms(2)}
    assert got == {"00", "10", "02", "12", "21"}


def test_decorated_perms_n0_is_theta():
    got = list(decorated_perms(0))
    assert len(got) == 1 and got[0].is_theta()


@pytest.mark.parametrize("n", range(0, 6))
def test_decorated_count_matches_brute_force(n):
    want = len(oracles.decorated_perms(n))
    assert decorated_count(n) == want == len(list(decorated_perms(n)))


def test_decorated_count_n3():
    # sum_k C(3,k) k! = 1 + 3 + 6 + 6
    assert decorated_count(3) == 16


def test_decorated_rejects_bad_support():
    with pytest.raises(InvalidArgument):
        DecoratedPermutation((2, 0))


# ---------------------------------------------------------------- word statistics

def test_inv_examples():
    assert inv((0, 0, 0)) == 0
    assert inv((2, 1, 0, 0, 5)) == 5
    w = (1, 1, 3, 2, 0, 2, 3, 1, 2)
    assert inv(w) == oracles.inv(w) == 12


def test_maj_examples():
    assert maj((1, 2, 3)) == 0
    assert maj((2, 1)) == 1
    assert maj((3, 2, 1)) == 3


@given(st.lists(st.integers(0, 4), max_size=8))
def test_word_stats_match_oracle(w):
    assert inv(w) == oracles.inv(w)
    assert maj(w) == oracles.maj(w)
    assert list(des_set(w)) == oracles.descents(w)


def test_infinity_is_the_largest_letter():
    inf = float("inf")
    assert inv((inf, 0)) == 1
    assert maj((0, inf)) == 0


def test_excedance_examples():
    assert exc(Permutation.identity(4)) == 0
    assert list(exc_set(Permutation.identity(4))) == []
    assert exc(DecoratedPermutation.theta(5)) == -1
    assert list(exc_set(DecoratedPermutation((2, 1, 0, 0, 5)))) == [1]


def test_perm_maj_theta():
    assert perm_maj(DecoratedPermutation.theta(3)) - exc(DecoratedPermutation.theta(3)) == 0


def test_barred_order():
    assert BARRED.key(Bar(5)) < BARRED.key(1)
    with pytest.raises(TypeError):
        PLAIN.key(Bar(1))
    with pytest.raises(TypeError):
        BARRED.key(0)


def test_dex_examples():
    assert len(dex(Permutation.identity(5))) == 0
    assert len(dex(Permutation((2, 1)))) == 0
    assert len(dex_decorated(DecoratedPermutation.theta(4))) == 0
    p = DecoratedPermutation((2, 1))
    assert len(dex_decorated(p)) == 0
    assert perm_maj(p) - exc(p) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_dex_sum_is_maj_minus_exc(n):
    for p in permutations(n):
        assert sum(dex(p)) == oracles.maj(p.images) - oracles.exc(p.images)


@pytest.mark.parametrize("n", range(1, 6))
def test_dex_decorated_sum(n):
    for p in decorated_perms(n):
        want = 0 if p.is_theta() else oracles.maj(p.images) - oracles.exc(p.images)
        assert sum(dex_decorated(p)) == want


def test_shuffles():
    assert list(shuffles("ab", "")) == [("a", "b")]
    assert len(list(shuffles((1, 2), (3,)))) == 3


@given(st.lists(st.integers(1, 3), max_size=4), st.lists(st.integers(4, 6), max_size=3))
def test_shuffle_count_is_binomial(u, v):
    from math import comb
    assert len(list(shuffles(u, v))) == comb(len(u) + len(v), len(u))


# ---------------------------------------------------------------- polynomials

@settings(max_examples=60)
@given(small_poly, small_poly, small_poly)
def test_unipoly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(small_poly, st.integers(1, 6))
def test_exact_division_roundtrip(a, d):
    phi = cyclotomic(d)
    assert (a * phi).exact_div(phi) == a


def test_exact_div_raises_on_remainder():
    with pytest.raises(InternalError):
        UniPoly({0: 1, 1: 1}).exact_div(UniPoly({0: 1, 2: 1}))


def test_q_multinomial_examples():
    assert q_multinomial([4]) == UniPoly({0: 1})
    assert q_multinomial([1, 1]) == UniPoly({0: 1, 1: 1})
    assert q_multinomial([2, 1]) == UniPoly({0: 1, 1: 1, 2: 1})


@pytest.mark.parametrize("parts", [(1,), (2, 1), (2, 2), (3, 1, 1), (2, 2, 2), (4, 3)])
def test_q_multinomial_is_inv_distribution(parts):
    want = oracles.q_multinomial_by_inv(parts)
    assert q_multinomial(parts) == UniPoly(want)


@given(st.integers(0, 9), st.integers(0, 9))
def test_q_binomial_at_one(n, k):
    from math import comb
    assert q_binomial(n, k)(1) == (comb(n, k) if k <= n else 0)


def test_q_int():
    assert q_int(0).is_zero()
    assert q_int(3) == UniPoly({0: 1, 1: 1, 2: 1})


def test_cyclotomic_examples():
    assert cyclotomic(1) == UniPoly({1: 1, 0: -1})
    assert cyclotomic(3) == UniPoly({0: 1, 1: 1, 2: 1})
    assert cyclotomic(6) == UniPoly({0: 1, 1: -1, 2: 1})


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclotomic_product(n):
    prod = UniPoly({0: 1})
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == UniPoly({n: 1, 0: -1})


def test_eval_at_root_examples():
    assert eval_at_root_of_unity(UniPoly({0: 1, 1: 1, 2: 1}), 3) == 0
    assert eval_at_root_of_unity(UniPoly({0: 2, 1: 1, 2: 1}), 3) == 1
    p = UniPoly({0: 3, 2: -1, 5: 4})
    assert eval_at_root_of_unity(p, 1) == p(1)


@settings(max_examples=60)
@given(small_poly, st.integers(1, 8))
def test_eval_matches_complex_evaluation(p, d):
    import cmath
    res = eval_at_root_of_unity(p, d)
    z = cmath.exp(2j * cmath.pi / d)
    val = sum(Fraction(c) * z ** i for i, c in enumerate(res.coeffs))
    assert abs(val - oracles.eval_complex(p.coeffs, z)) < 1e-8


def test_bipoly_specialization():
    b = BiPoly({(0, 0): 1, (1, 1): 2, (0, 1): 1})
    assert b.at_q1() == UniPoly({0: 1, 1: 3}, "t")
    assert b.t_coeff(1) == UniPoly({0: 1, 1: 2})


# ---------------------------------------------------------------- partitions

def test_partition_key_roundtrip():
    lam = Partition.of([1, 3, 2])
    assert lam.key() == "3+2+1"
    assert Partition.from_key("3+2+1") == lam


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (4, 5), (6, 11), (8, 22)])
def test_partition_counts(n, count):
    assert len(list(partitions(n))) == count


@pytest.mark.parametrize("n", range(1, 7))
def test_z_counts_centralizers(n):
    # n!/z_nu is the size of the conjugacy class of type nu
    by_type = {}
    for p in itertools.permutations(range(1, n + 1)):
        t = Permutation(p).cycle_type()
        by_type[t] = by_type.get(t, 0) + 1
    from math import factorial
    for nu, size in by_type.items():
        assert factorial(n) // nu.z() == size


def test_caps_lifted_is_scoped():
    from chowlab.errors import caps_lifted
    with pytest.raises(SizeLimitError):
        check_cap(99)
    with caps_lifted(), pytest.warns(UserWarning):
        check_cap(99)
    with pytest.raises(SizeLimitError):
        check_cap(99)
