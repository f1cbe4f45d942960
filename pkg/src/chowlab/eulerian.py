"""Eulerian and binomial Eulerian polynomials, their (q,t)-analogs, and the
combinatorial sums over permutations, decorated permutations and codes."""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .codes import codes, extended_codes, index
from .core.combinat import decorated_perms, permutations
from .core.poly import BiPoly, UniPoly, q_binomial
from .core.words import PLAIN, des, exc, inv, maj, perm_maj
from .errors import InternalError, InvalidArgument


@lru_cache(maxsize=None)
def eulerian(n: int) -> UniPoly:
    """sum over S_n of t^exc; checked against t^des on the way."""
    if n < 1:
        raise InvalidArgument("eulerian(n) needs n >= 1")
    by_exc: dict = {}
    by_des: dict = {}
    for p in permutations(n):
        e, d = exc(p), des(p.images)
        by_exc[e] = by_exc.get(e, 0) + 1
        by_des[d] = by_des.get(d, 0) + 1
    if by_exc != by_des:
        raise InternalError(f"exc and des disagree on S_{n}")
    return UniPoly(by_exc, "t")


@lru_cache(maxsize=None)
def binomial_eulerian(n: int) -> UniPoly:
    out = UniPoly({0: 1}, "t")
    for k in range(1, n + 1):
        out = out + eulerian(k).shift(1) * comb(n, k)
    return out


@lru_cache(maxsize=None)
def q_eulerian(n: int) -> BiPoly:
    """sum over S_n of q^(maj - exc) t^exc."""
    if n < 1:
        raise InvalidArgument("q_eulerian(n) needs n >= 1")
    terms = []
    for p in permutations(n):
        m, e = maj(p.images), exc(p)
        if m < e:
            raise InternalError(f"maj < exc for {p}")
        terms.append((m - e, e))
    return BiPoly.from_terms(terms)


@lru_cache(maxsize=None)
def q_binomial_eulerian(n: int) -> BiPoly:
    """1 + t sum_k [n choose k]_q A_k(q,t)."""
    out = BiPoly({(0, 0): 1})
    for k in range(1, n + 1):
        qb = BiPoly({(a, 0): c for a, c in q_binomial(n, k).items()})
        out = out + qb * q_eulerian(k) * BiPoly({(0, 1): 1})
    return out


def _word_stat(stat):
    if stat == "inv":
        return inv
    if stat == "maj":
        return maj
    raise InvalidArgument(f"stat must be 'inv' or 'maj', got {stat!r}")


def q_eulerian_from_codes(n: int, stat: str = "inv") -> BiPoly:
    f = _word_stat(stat)
    return BiPoly.from_terms((f(c.alpha, PLAIN), index(c)) for c in codes(n))


def q_binom_from_extcodes(n: int, stat: str = "inv") -> BiPoly:
    # INF is a float infinity, so it already sorts above every letter
    f = _word_stat(stat)
    return BiPoly.from_terms((f(c.alpha, PLAIN), index(c) + 1) for c in extended_codes(n))


def q_binom_from_dperms(n: int) -> BiPoly:
    terms = []
    for p in decorated_perms(n):
        m, e = perm_maj(p), exc(p)
        terms.append((m - e, e + 1))
    return BiPoly.from_terms(terms)
