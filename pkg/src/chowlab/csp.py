"""Cyclic sieving: fixed points of the rotation c_n = (1 2 ... n) against
sieving polynomials evaluated exactly at roots of unity."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, List, Optional

from .codes import codes, extended_codes, sn_act_code
from .core.combinat import DecoratedPermutation, Partition, Permutation, decorated_perms, permutations
from .core.poly import CyclotomicResidue, UniPoly, eval_at_root_of_unity
from .core.words import exc, maj
from .eulerian import q_binomial_eulerian, q_eulerian
from .errors import InternalError, InvalidArgument, SizeLimitError
from .symfun import SymH, h_to_p, nps

FAMILIES = ("codes", "extcodes", "perms_exc", "perms_cycletype", "dperms_conjecture")
FAMILY_CAPS = {"codes": 8, "perms_exc": 8, "perms_cycletype": 8, "extcodes": 7, "dperms_conjecture": 7}


def root_order(n: int, r: int) -> int:
    """Order of zeta_n^r."""
    return n // gcd(n, r)


# ---------------------------------------------------------------- actions

def rotate_code(c, r: int):
    return sn_act_code(Permutation.cycle(c.n, r), c)


def conjugate(p: Permutation, r: int) -> Permutation:
    """c^r p c^-r."""
    c = Permutation.cycle(p.n, r)
    return c * p * c.inverse()


def relabel_decorated(p: DecoratedPermutation, r: int) -> DecoratedPermutation:
    """Conjugation by c^r extended to decorated permutations with 0 fixed.

    The image sends c^r(i) to c^r(p(i)), and keeps 0 wherever p has a 0.
    """
    n = p.n
    c = Permutation.cycle(n, r)
    imgs = [0] * n
    for i, v in enumerate(p.images, 1):
        imgs[c(i) - 1] = c(v) if v else 0
    return DecoratedPermutation(tuple(imgs))


def cyclic_fixed_codes(n: int, j: int, r: int, extended: bool = False) -> int:
    """Number of codes of index j fixed by c_n^r acting on positions."""
    if not 0 <= r < max(n, 1):
        raise InvalidArgument(f"r must be in 0..{n - 1}")
    pool = extended_codes(n, j) if extended else codes(n, j)
    return sum(1 for c in pool if rotate_code(c, r) == c)


# ---------------------------------------------------------------- reports

@dataclass
class CyclicRow:
    r: int
    fixed_count: int
    poly_value: CyclotomicResidue
    match: bool

    def to_json(self):
        return {"r": self.r, "d": self.poly_value.d, "fixed_count": self.fixed_count,
                "poly_value": [str(c) for c in self.poly_value.coeffs], "match": self.match}


@dataclass
class CyclicActionReport:
    family: str
    n: int
    j: Optional[int]
    cycle_type: Optional[Partition]
    polynomial: UniPoly
    rows: List[CyclicRow] = field(default_factory=list)
    experimental: bool = False

    @property
    def passed(self) -> bool:
        return all(row.match for row in self.rows)

    @property
    def fixed_counts(self) -> List[int]:
        return [row.fixed_count for row in self.rows]

    def to_json(self):
        return {"family": self.family, "n": self.n, "j": self.j,
                "cycle_type": self.cycle_type.key() if self.cycle_type else None,
                "polynomial": {"terms": [{"q": e, "c": str(c)} for e, c in self.polynomial.items()]},
                "experimental": self.experimental, "passed": self.passed,
                "rows": [row.to_json() for row in self.rows]}


def _sieve(family, n, j, lam, poly, elements, act, experimental=False) -> CyclicActionReport:
    rep = CyclicActionReport(family, n, j, lam, poly, experimental=experimental)
    for r in range(n):
        fixed = sum(1 for x in elements if act(x, r) == x)
        val = eval_at_root_of_unity(poly, root_order(n, r))
        rep.rows.append(CyclicRow(r, fixed, val, val.is_integer_constant() and val.constant() == fixed))
    return rep


def csp_verify(family: str, n: int, j: int | None = None, cycle_type=None,
               action: Callable | None = None, override: bool = False) -> CyclicActionReport:
    """Compare fixed-point counts with the sieving polynomial at every power of c_n.

    For extcodes and dperms_conjecture, j is the t-degree of the binomial
    Eulerian coefficient, so the elements have index (or excedance) j - 1.
    action replaces the default C_n action for dperms_conjecture.
    """
    if family not in FAMILIES:
        raise InvalidArgument(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if n < 1:
        raise InvalidArgument("n must be positive")
    if n > FAMILY_CAPS[family] and not override:
        raise SizeLimitError(f"{family} is limited to n <= {FAMILY_CAPS[family]}")
    if family == "perms_cycletype":
        lam = cycle_type if isinstance(cycle_type, Partition) else Partition.of(cycle_type or ())
        if lam.weight != n:
            raise InvalidArgument(f"cycle type {lam} is not a partition of {n}")
        if j is None:
            raise InvalidArgument("perms_cycletype needs j")
        elems = [p for p in permutations(n) if p.cycle_type() == lam and exc(p) == j]
        poly = UniPoly(Counter(maj(p.images) - exc(p) for p in elems))
        return _sieve(family, n, j, lam, poly, elems, conjugate)
    if j is None:
        raise InvalidArgument(f"{family} needs j")
    if family == "codes":
        elems = codes(n, j)
        return _sieve(family, n, j, None, q_eulerian(n).t_coeff(j), elems, rotate_code)
    if family == "perms_exc":
        elems = [p for p in permutations(n) if exc(p) == j]
        return _sieve(family, n, j, None, q_eulerian(n).t_coeff(j), elems, conjugate)
    poly = q_binomial_eulerian(n).t_coeff(j)
    if family == "extcodes":
        return _sieve(family, n, j, None, poly, extended_codes(n, j - 1), rotate_code)
    elems = [p for p in decorated_perms(n) if exc(p) == j - 1]
    return _sieve(family, n, j, None, poly, elems, action or relabel_decorated, experimental=True)


def family_j_range(family: str, n: int) -> range:
    if family in ("extcodes", "dperms_conjecture"):
        return range(0, n + 1)
    return range(0, n)


# ---------------------------------------------------------------- characters

def character_via_p(F: SymH, d: int) -> int:
    """chi^F at cycle type (d^k), read from the power-sum expansion.

    Cross-checked against the normalized principal specialization at a
    primitive d-th root of unity; disagreement is an internal error.
    """
    n = F.n
    if d < 1 or n % d:
        raise InvalidArgument(f"{d} does not divide {n}")
    if any(c.degree() > 0 for c in F.coeffs.values()):
        raise InvalidArgument("character_via_p takes a single t-coefficient")
    nu = Partition((d,) * (n // d))
    coeff = h_to_p(F).coeffs.get(nu)
    chi = Fraction(coeff[0] if coeff is not None else 0) * nu.z()
    if chi.denominator != 1:
        raise InternalError(f"non-integral character value {chi}")
    chi = int(chi)
    val = eval_at_root_of_unity(nps(F).t_coeff(0), d)
    if not (val.is_integer_constant() and val.constant() == chi):
        raise InternalError(f"power-sum route gives {chi}, specialization gives {val}")
    return chi


@dataclass
class CharacterCompare:
    n: int
    j: int
    codes_character: List[int]
    conj_character: List[int]

    @property
    def passed(self):
        return self.codes_character == self.conj_character

    def to_json(self):
        return {"n": self.n, "j": self.j, "codes": self.codes_character,
                "conjugation": self.conj_character, "passed": self.passed}


def cn_character_compare(n: int, j: int) -> CharacterCompare:
    """C_n-characters of codes of index j and of S_{n,j} under conjugation."""
    if n > 8:
        raise SizeLimitError("cn_character_compare is limited to n <= 8")
    cs = codes(n, j)
    ps = [p for p in permutations(n) if exc(p) == j]
    a = [sum(1 for c in cs if rotate_code(c, r) == c) for r in range(n)]
    b = [sum(1 for p in ps if conjugate(p, r) == p) for r in range(n)]
    return CharacterCompare(n, j, a, b)
