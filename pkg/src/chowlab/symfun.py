"""Quasisymmetric and symmetric functions in the F, h and p bases.

Coefficients are polynomials in t. A fundamental F_{S,n} is keyed by the
bitmask of S inside [n-1].
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple

from .codes import codes, content, extended_codes, index, orbit_key
from .core.combinat import Partition, decorated_perms, elements_of, mask_of, partitions, permutations
from .core.poly import BiPoly, UniPoly, q_int, q_multinomial
from .core.words import PLAIN, des_positions, dex, dex_decorated, exc
from .errors import InternalError, InvalidArgument

ONE_T = UniPoly({0: 1}, "t")
T = UniPoly({1: 1}, "t")


def _add_into(d: dict, key, val):
    cur = d.get(key)
    new = val if cur is None else cur + val
    if new.is_zero():
        d.pop(key, None)
    else:
        d[key] = new


class QSymF:
    """Homogeneous quasisymmetric function of degree n in the F basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Dict[int, UniPoly] | None = None):
        self.n = n
        clean = {}
        lim = 1 << max(n - 1, 0)
        for S, c in (coeffs or {}).items():
            if S < 0 or S >= lim:
                raise InvalidArgument(f"descent set {elements_of(S)} not inside [{n - 1}]")
            if not isinstance(c, UniPoly):
                c = UniPoly({0: c}, "t")
            if not c.is_zero():
                clean[S] = c
        self.coeffs = clean

    @classmethod
    def fundamental(cls, S: Iterable[int], n: int, coeff=None):
        return cls(n, {mask_of(S): coeff if coeff is not None else ONE_T})

    def __add__(self, other: "QSymF") -> "QSymF":
        if other.n != self.n:
            raise InvalidArgument("degrees differ")
        c = dict(self.coeffs)
        for S, v in other.coeffs.items():
            _add_into(c, S, v)
        return QSymF(self.n, c)

    def scale(self, p: UniPoly) -> "QSymF":
        return QSymF(self.n, {S: v * p for S, v in self.coeffs.items()})

    def __mul__(self, other: "QSymF") -> "QSymF":
        return f_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, QSymF):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def t_coeff(self, j: int) -> "QSymF":
        return QSymF(self.n, {S: UniPoly({0: v[j]}, "t") for S, v in self.coeffs.items()})

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        terms = [f"F{elements_of(S)}*({v.to_str()})" for S, v in self.items()]
        return f"QSymF(n={self.n}: " + " + ".join(terms) + ")"

    def to_json(self):
        return {"n": self.n,
                "terms": [{"S": elements_of(S), "t": e, "c": str(c)}
                          for S, v in self.items() for e, c in v.items()]}


class SymH:
    """Homogeneous symmetric function of degree n in the h basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Dict[Partition, UniPoly] | None = None):
        self.n = n
        clean = {}
        for lam, c in (coeffs or {}).items():
            if lam.weight != n:
                raise InvalidArgument(f"partition {lam} is not of {n}")
            if not isinstance(c, UniPoly):
                c = UniPoly({0: c}, "t")
            if not c.is_zero():
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def h(cls, lam, coeff=None):
        lam = lam if isinstance(lam, Partition) else Partition.of(lam)
        return cls(lam.weight, {lam: coeff if coeff is not None else ONE_T})

    def __add__(self, other: "SymH") -> "SymH":
        if other.n != self.n:
            raise InvalidArgument("degrees differ")
        c = dict(self.coeffs)
        for lam, v in other.coeffs.items():
            _add_into(c, lam, v)
        return SymH(self.n, c)

    def __sub__(self, other):
        return self + other.scale(UniPoly({0: -1}, "t"))

    def scale(self, p: UniPoly) -> "SymH":
        return SymH(self.n, {lam: v * p for lam, v in self.coeffs.items()})

    def __mul__(self, other: "SymH") -> "SymH":
        out: Dict[Partition, UniPoly] = {}
        for a, u in self.coeffs.items():
            for b, v in other.coeffs.items():
                _add_into(out, a.union(b), u * v)
        return SymH(self.n + other.n, out)

    def __eq__(self, other):
        if not isinstance(other, SymH):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def t_coeff(self, j: int) -> "SymH":
        return SymH(self.n, {lam: UniPoly({0: v[j]}, "t") for lam, v in self.coeffs.items()})

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def __repr__(self):
        return f"SymH(n={self.n}: " + " + ".join(f"h[{lam}]*({v.to_str()})" for lam, v in self.items()) + ")"

    def to_json(self):
        return {"n": self.n, "basis": "h",
                "terms": [{"lambda": lam.key(), "t": e, "c": str(c)}
                          for lam, v in self.items() for e, c in v.items()]}


class SymP:
    """Symmetric function in the power-sum basis; coefficients rational in t."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Dict[Partition, UniPoly]):
        self.n = n
        self.coeffs = {lam: c for lam, c in coeffs.items() if not c.is_zero()}

    def __eq__(self, other):
        return isinstance(other, SymP) and self.n == other.n and self.coeffs == other.coeffs

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def to_json(self):
        return {"n": self.n, "basis": "p",
                "terms": [{"lambda": lam.key(), "t": e, "c": str(c)}
                          for lam, v in self.items() for e, c in v.items()]}


def symh_one():
    return SymH(0, {Partition(()): ONE_T})


# ---------------------------------------------------------------- F-basis product

def _word_with_descents(S: int, m: int, offset: int) -> Tuple[int, ...]:
    """A permutation of offset+1..offset+m whose descent set is S.

    Positions split into runs at S; earlier runs get larger values.
    """
    cuts = [0] + elements_of(S) + [m]
    runs = [list(range(cuts[i], cuts[i + 1])) for i in range(len(cuts) - 1)]
    word = [0] * m
    nxt = offset + m
    for run in runs:
        vals = list(range(nxt - len(run) + 1, nxt + 1))
        for p, v in zip(run, vals):
            word[p] = v
        nxt -= len(run)
    return tuple(word)


@lru_cache(maxsize=None)
def _f_pair(S: int, m: int, T_: int, n: int) -> Tuple[Tuple[int, int], ...]:
    from .core.words import shuffles
    u = _word_with_descents(S, m, 0)
    v = _word_with_descents(T_, n, m)
    counts: Dict[int, int] = {}
    for w in shuffles(u, v):
        D = mask_of(des_positions(w, PLAIN))
        counts[D] = counts.get(D, 0) + 1
    return tuple(sorted(counts.items()))


def f_product(a: QSymF, b: QSymF) -> QSymF:
    out: Dict[int, UniPoly] = {}
    for S, u in a.coeffs.items():
        for T_, v in b.coeffs.items():
            uv = u * v
            for D, c in _f_pair(S, a.n, T_, b.n):
                _add_into(out, D, uv * c)
    return QSymF(a.n + b.n, out)


@lru_cache(maxsize=None)
def _h_to_f(parts: Tuple[int, ...]) -> QSymF:
    out = QSymF(0, {0: ONE_T})
    for k in parts:
        out = f_product(out, QSymF(k, {0: ONE_T}))
    return out


def h_to_f(lam) -> QSymF:
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    return _h_to_f(lam.parts)


def symh_to_qsym(H: SymH) -> QSymF:
    out = QSymF(H.n, {})
    for lam, c in H.coeffs.items():
        out = out + h_to_f(lam).scale(c)
    return out


def _solve_exact(columns, target):
    """Solve sum_i x_i columns[i] = target over Q; None if inconsistent.

    Vectors are sparse dicts. Unknowns not pinned down are set to zero.
    """
    keys = sorted(set(target).union(*[set(c) for c in columns]))
    rows = [[Fraction(c.get(k, 0)) for c in columns] + [Fraction(target.get(k, 0))] for k in keys]
    ncol = len(columns)
    pivots = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    x = [Fraction(0)] * ncol
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x


def qsym_to_symh(F: QSymF) -> SymH:
    """Recover the h-expansion of a symmetric F-expansion, one t-degree at a time.

    The h_lambda of a fixed degree are linearly independent, so the solution
    is unique. Raises InvalidArgument if F is not in their span.
    """
    n = F.n
    lams = list(partitions(n))
    cols = [{S: c[0] for S, c in h_to_f(lam).coeffs.items()} for lam in lams]
    tdeg = max((v.degree() for v in F.coeffs.values()), default=-1)
    coeffs: Dict[Partition, Dict[int, int]] = {}
    for j in range(tdeg + 1):
        x = _solve_exact(cols, {S: v[j] for S, v in F.coeffs.items() if v[j]})
        if x is None:
            raise InvalidArgument("not a symmetric function (outside the span of the h basis)")
        for lam, v in zip(lams, x):
            if v.denominator != 1:
                raise InvalidArgument("h-expansion is not integral")
            if v:
                coeffs.setdefault(lam, {})[j] = int(v)
    H = SymH(n, {lam: UniPoly(d, "t") for lam, d in coeffs.items()})
    if symh_to_qsym(H) != F:
        raise InternalError("h-expansion does not reproduce the input")
    return H


# ---------------------------------------------------------------- power sums

@lru_cache(maxsize=None)
def _hn_to_p(n: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    return tuple((nu, Fraction(1, nu.z())) for nu in partitions(n))


def h_to_p(H: SymH) -> SymP:
    out: Dict[Partition, UniPoly] = {}
    for lam, c in H.coeffs.items():
        expansion = {Partition(()): Fraction(1)}
        for k in lam.parts:
            nxt: Dict[Partition, Fraction] = {}
            for nu, a in expansion.items():
                for mu, b in _hn_to_p(k):
                    key = nu.union(mu)
                    nxt[key] = nxt.get(key, 0) + a * b
            expansion = nxt
        for nu, a in expansion.items():
            _add_into(out, nu, c * a)
    return SymP(H.n, out)


# ---------------------------------------------------------------- code modules

def frobenius_codes(n: int, extended: bool = False) -> SymH:
    """Sum over orbits of codes of h_content t^index (t^(index+1) when extended)."""
    if n == 0:
        return symh_one()
    cs = extended_codes(n) if extended else codes(n)
    seen = {}
    for c in cs:
        seen.setdefault(orbit_key(c), c)
    out: Dict[Partition, UniPoly] = {}
    shift = 1 if extended else 0
    for c in seen.values():
        _add_into(out, content(c), UniPoly({index(c) + shift: 1}, "t"))
    return SymH(n, out)


def q_nj_from_perms(n: int) -> QSymF:
    out: Dict[int, UniPoly] = {}
    for p in permutations(n):
        _add_into(out, dex(p).mask, UniPoly({exc(p): 1}, "t"))
    return QSymF(n, out)


def q_tilde_from_dperms(n: int) -> QSymF:
    out: Dict[int, UniPoly] = {}
    for p in decorated_perms(n):
        _add_into(out, dex_decorated(p).mask, UniPoly({exc(p) + 1: 1}, "t"))
    return QSymF(n, out)


def codes_des_expansion(n: int) -> QSymF:
    out: Dict[int, UniPoly] = {}
    for c in codes(n):
        _add_into(out, mask_of(des_positions(c.alpha, PLAIN)), UniPoly({index(c): 1}, "t"))
    return QSymF(n, out)


def q_tilde_from_def(n: int) -> SymH:
    """h_n + t sum_{k=1}^n h_{n-k} Q_k with Q_k taken from the code modules."""
    out = SymH.h((n,)) if n else symh_one()
    for k in range(1, n + 1):
        rest = SymH.h((n - k,)) if n - k else symh_one()
        out = out + (rest * frobenius_codes(k)).scale(T)
    return out


# ---------------------------------------------------------------- generating function

def gf_recurrence_check(N: int):
    """Check Q_n = h_n + sum_{k=1}^n t [k-1]_t h_k Q_{n-k} for n <= N.

    Clearing denominators in sum_n Q_n z^n = (1-t)H(z) / (H(tz) - tH(z))
    and dividing by (1-t) gives this recurrence, with Q_0 = 1.
    Returns (passed, first failing n or None).
    """
    Q = {0: symh_one()}
    for n in range(1, N + 1):
        rhs = SymH.h((n,))
        for k in range(1, n + 1):
            rhs = rhs + (SymH.h((k,)) * Q[n - k]).scale(T * q_int(k - 1, "t"))
        Q[n] = rhs
        if rhs != frobenius_codes(n):
            return False, n
    return True, None


def recurrence_q(n: int) -> SymH:
    Q = {0: symh_one()}
    for m in range(1, n + 1):
        rhs = SymH.h((m,))
        for k in range(1, m + 1):
            rhs = rhs + (SymH.h((k,)) * Q[m - k]).scale(T * q_int(k - 1, "t"))
        Q[m] = rhs
    return Q[n]


# ---------------------------------------------------------------- specialization

def nps(x) -> BiPoly:
    """Normalized principal specialization prod(1-q^i) ps_q, as a (q,t) polynomial."""
    out = BiPoly({})
    if isinstance(x, QSymF):
        for S, c in x.coeffs.items():
            qe = sum(elements_of(S))
            out = out + BiPoly({(qe, e): v for e, v in c.items()})
    elif isinstance(x, SymH):
        for lam, c in x.coeffs.items():
            qm = q_multinomial(lam.parts) if lam.parts else UniPoly({0: 1})
            out = out + BiPoly({(a, e): u * v for a, u in qm.items() for e, v in c.items()})
    else:
        raise InvalidArgument("nps takes a QSymF or a SymH")
    return out
