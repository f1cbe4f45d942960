"""Exact univariate and bivariate polynomials, q-analogs and cyclotomic residues."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple

from ..errors import InternalError


def _clean(items):
    return {k: v for k, v in items if v != 0}


class UniPoly:
    """Polynomial in one variable; coefficients are ints or Fractions.

    Instances are immutable. Zero coefficients are never stored.
    """

    __slots__ = ("var", "_c", "_hash")

    def __init__(self, coeffs=None, var: str = "q"):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        for e in coeffs:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad exponent {e!r}")
        self.var = var
        self._c = _clean(coeffs.items())
        self._hash = None

    @classmethod
    def const(cls, c, var="q"):
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e, c=1, var="q"):
        return cls({e: c}, var)

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e):
        return self._c.get(e, 0)

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def is_zero(self):
        return not self._c

    def dense(self, length=None):
        d = self.degree()
        length = d + 1 if length is None else length
        return [self._c.get(i, 0) for i in range(length)]

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return UniPoly(c, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({e: -v for e, v in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: Dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return UniPoly(c, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly({0: 1}, self.var)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int):
        """Multiply by var**k."""
        return UniPoly({e + k: v for e, v in self._c.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly({0: other}, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __call__(self, x):
        return sum(v * x ** e for e, v in self._c.items())

    def divmod_monic(self, divisor: "UniPoly"):
        """Long division by a monic polynomial; integer in, integer out."""
        dd = divisor.degree()
        if dd < 0 or divisor[dd] != 1:
            raise ValueError("divisor must be monic")
        rem = dict(self._c)
        quo: Dict[int, int] = {}
        top = self.degree()
        dcoef = divisor._c
        for e in range(top, dd - 1, -1):
            c = rem.pop(e, 0)
            if c == 0:
                continue
            shift = e - dd
            quo[shift] = c
            for de, dv in dcoef.items():
                if de == dd:
                    continue
                rem[de + shift] = rem.get(de + shift, 0) - c * dv
        return UniPoly(quo, self.var), UniPoly(rem, self.var)

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        q, r = self.divmod_monic(divisor)
        if not r.is_zero():
            raise InternalError(f"inexact division of {self} by {divisor}")
        return q

    def is_palindromic(self) -> bool:
        d = self.degree()
        return all(self[i] == self[d - i] for i in range(d + 1))

    def __repr__(self):
        return f"UniPoly({self.to_str()})"

    def to_str(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            if e == 0:
                parts.append(str(v))
            else:
                mon = self.var if e == 1 else f"{self.var}^{e}"
                parts.append(mon if v == 1 else f"{v}*{mon}")
        return " + ".join(parts)


class BiPoly:
    """Polynomial in q and t with integer coefficients, keyed by (q-exp, t-exp)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Dict[Tuple[int, int], int] | None = None):
        coeffs = coeffs or {}
        for a, b in coeffs:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in {(a, b)}")
        self._c = _clean(coeffs.items())
        self._hash = None

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]]):
        """Sum of q^a t^b over an iterable of exponent pairs."""
        c: Dict[Tuple[int, int], int] = {}
        for key in terms:
            c[key] = c.get(key, 0) + 1
        return cls(c)

    @classmethod
    def from_t_coeffs(cls, coeffs: Dict[int, UniPoly]):
        c = {}
        for b, p in coeffs.items():
            for a, v in p.items():
                c[(a, b)] = v
        return cls(c)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    @property
    def coeffs(self):
        return dict(self._c)

    def __getitem__(self, key):
        return self._c.get(key, 0)

    def t_degree(self):
        return max((b for _, b in self._c), default=-1)

    def t_coeff(self, j: int) -> UniPoly:
        return UniPoly({a: v for (a, b), v in self._c.items() if b == j}, "q")

    def q_coeff(self, i: int) -> UniPoly:
        return UniPoly({b: v for (a, b), v in self._c.items() if a == i}, "t")

    def at_q1(self) -> UniPoly:
        out: Dict[int, int] = {}
        for (a, b), v in self._c.items():
            out[b] = out.get(b, 0) + v
        return UniPoly(out, "t")

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        c: Dict[Tuple[int, int], int] = {}
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                c[k] = c.get(k, 0) + v1 * v2
        return BiPoly(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"BiPoly({self.to_str()})"

    def to_str(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for j in range(self.t_degree() + 1):
            p = self.t_coeff(j)
            if p.is_zero():
                continue
            tm = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if not tm:
                parts.append(p.to_str())
            elif p == 1:
                parts.append(tm)
            else:
                parts.append(f"({p.to_str()})*{tm}")
        return " + ".join(parts)


# ---------------------------------------------------------------- q-analogs

def q_int(k: int, var="q") -> UniPoly:
    """[k]_q = 1 + q + ... + q^(k-1); [0]_q = 0."""
    return UniPoly({i: 1 for i in range(k)}, var)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> UniPoly:
    out = UniPoly({0: 1})
    for i in range(1, k + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def _q_multinomial(parts: Tuple[int, ...]) -> UniPoly:
    # divide by one [k]_q! at a time; each quotient is a polynomial
    out = q_factorial(sum(parts))
    for k in parts:
        out = out.exact_div(q_factorial(k))
    return out


def q_multinomial(parts) -> UniPoly:
    parts = tuple(parts)
    if not parts or any(k < 0 for k in parts):
        raise ValueError("parts must be a nonempty list of nonnegative ints")
    return _q_multinomial(tuple(sorted(parts)))


def q_binomial(n: int, k: int) -> UniPoly:
    if k < 0 or k > n:
        return UniPoly({})
    return q_multinomial([k, n - k])


# ---------------------------------------------------------------- cyclotomic

@lru_cache(maxsize=None)
def cyclotomic(d: int) -> UniPoly:
    if d < 1:
        raise ValueError("d must be positive")
    p = UniPoly({d: 1, 0: -1})
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


class CyclotomicResidue:
    """A polynomial reduced modulo the d-th cyclotomic polynomial.

    This is an exact stand-in for evaluating at a primitive d-th root of unity.
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Tuple):
        self.d = d
        self.coeffs = tuple(coeffs)

    def is_integer_constant(self) -> bool:
        if any(c != 0 for c in self.coeffs[1:]):
            return False
        c0 = self.coeffs[0] if self.coeffs else 0
        return Fraction(c0).denominator == 1

    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer_constant() and self.constant() == other
        if not isinstance(other, CyclotomicResidue):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __repr__(self):
        return f"CyclotomicResidue(d={self.d}, {list(self.coeffs)})"


def eval_at_root_of_unity(p: UniPoly, d: int) -> CyclotomicResidue:
    phi = cyclotomic(d)
    _, r = p.divmod_monic(phi)
    width = phi.degree()
    return CyclotomicResidue(d, r.dense(width))
