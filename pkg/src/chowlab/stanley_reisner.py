"""Graded dimensions of presented quotient rings by exact linear algebra.

A presentation is a polynomial ring with a squarefree monomial ideal and a list
of linear forms. The degree-k piece of the quotient is computed directly: the
monomials outside the monomial ideal, modulo the products of degree-(k-1)
monomials with the linear forms.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .chow import AUGMENTED, CHOW, fy_basis_augmented, fy_basis_general, fy_basis_matroid
from .core.combinat import full_mask, mask_label
from .errors import InvalidArgument, SizeLimitError
from .lattice import AtomicLattice, BuildingSet, nested_sets
from .linalg import RowEchelon
from .matroid import Matroid

MAX_VARIABLES = 64

Monomial = Tuple[int, ...]          # sorted variable indices with repetition
Poly = Dict[Monomial, int]


@dataclass
class Presentation:
    variables: List[str]
    monomial_gens: List[FrozenSet[int]]
    linear_forms: List[Dict[int, int]]
    # how to write a basis candidate as a polynomial in the variables
    candidates: Dict[int, List[Poly]] = field(default_factory=dict)

    def check_size(self, override=False):
        if len(self.variables) > MAX_VARIABLES and not override:
            raise SizeLimitError(f"{len(self.variables)} variables exceeds cap {MAX_VARIABLES}")


@dataclass(frozen=True)
class GradedDimReport:
    mode: str
    degree: int
    fy_count: int
    quotient_dim: int
    independent: bool

    @property
    def ok(self):
        return self.independent and self.fy_count == self.quotient_dim


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(sorted(m1 + m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _power_product(factors: Sequence[Tuple[Poly, int]]) -> Poly:
    out: Poly = {(): 1}
    for p, a in factors:
        for _ in range(a):
            out = _poly_mul(out, p)
    return out


# ---------------------------------------------------------------- presentations

def chow_presentation(M: Matroid) -> Presentation:
    """x_F for every nonempty flat; x_F x_G for incomparable pairs; sum_{F contains i} x_F."""
    fl = [f for f in M.flats if f]
    idx = {f: i for i, f in enumerate(fl)}
    gens = [frozenset((idx[f], idx[g])) for f, g in itertools.combinations(fl, 2)
            if f & ~g and g & ~f]
    lin = []
    for i in range(M.n):
        form = {idx[f]: 1 for f in fl if f >> i & 1}
        if form not in lin:
            lin.append(form)
    pres = Presentation([f"x_{mask_label(f)}" for f in fl], gens, lin)
    basis = fy_basis_matroid(M)
    for k, mons in basis.by_degree.items():
        pres.candidates[k] = [_power_product([({(idx[f],): 1}, a) for f, a in zip(m.flag, m.exps)])
                              for m in mons]
    return pres


def augmented_presentation(M: Matroid) -> Presentation:
    """x_F for proper flats, y_i; x_F x_G incomparable, y_i x_F for i not in F;
    linear forms y_i - sum_{F not containing i} x_F.

    Basis monomials that use the top flat are rewritten with
    x_[n] = -(sum of the proper-flat variables).
    """
    top = full_mask(M.n)
    proper = [f for f in M.flats if f != top]
    idx = {f: i for i, f in enumerate(proper)}
    nf = len(proper)
    names = [f"x_{mask_label(f)}" for f in proper] + [f"y_{i + 1}" for i in range(M.n)]
    gens = [frozenset((idx[f], idx[g])) for f, g in itertools.combinations(proper, 2)
            if f & ~g and g & ~f]
    gens += [frozenset((nf + i, idx[f])) for i in range(M.n) for f in proper if not f >> i & 1]
    lin = []
    for i in range(M.n):
        form = {nf + i: 1}
        for f in proper:
            if not f >> i & 1:
                form[idx[f]] = -1
        lin.append(form)
    pres = Presentation(names, gens, lin)
    x_top: Poly = {(i,): -1 for i in range(nf)}
    basis = fy_basis_augmented(M)
    for k, mons in basis.by_degree.items():
        polys = []
        for m in mons:
            factors = [(x_top if f == top else {(idx[f],): 1}, a) for f, a in zip(m.flag, m.exps)]
            polys.append(_power_product(factors))
        pres.candidates[k] = polys
    return pres


def _minimal_nonfaces(L: AtomicLattice, G: BuildingSet) -> List[FrozenSet[int]]:
    faces = set(nested_sets(L, G))
    out = set()
    for N in faces:
        for g in G.members:
            if g in N:
                continue
            S = N | {g}
            if S not in faces and all(S - {x} in faces for x in S):
                out.add(S)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def lattice_presentation(L: AtomicLattice, G: BuildingSet) -> Presentation:
    """The Chow ring of (L, G): nonface monomials and one linear form per atom."""
    members = G.sorted()
    idx = {g: i for i, g in enumerate(members)}
    gens = [frozenset(idx[g] for g in S) for S in _minimal_nonfaces(L, G)]
    lin = [{idx[g]: 1 for g in members if L.leq(a, g)} for a in L.atoms]
    pres = Presentation([f"x_{L.names[g]}" for g in members], gens, lin)
    basis = fy_basis_general(L, G)
    for k, mons in basis.by_degree.items():
        pres.candidates[k] = [_power_product([({(idx[g],): 1}, a) for g, a in m.terms])
                              for m in mons]
    return pres


def presentation(M: Matroid, mode: str) -> Presentation:
    if mode == CHOW:
        return chow_presentation(M)
    if mode == AUGMENTED:
        return augmented_presentation(M)
    raise InvalidArgument(f"unknown mode {mode!r}")


# ---------------------------------------------------------------- degree-k linear algebra

def _degree_data(pres: Presentation, k: int):
    nv = len(pres.variables)
    mons = list(itertools.combinations_with_replacement(range(nv), k))

    def in_ideal(m):
        s = set(m)
        return any(g <= s for g in pres.monomial_gens)

    survivors = [m for m in mons if not in_ideal(m)]
    col = {m: i for i, m in enumerate(survivors)}
    ech = RowEchelon()
    if k >= 1:
        for base in itertools.combinations_with_replacement(range(nv), k - 1):
            for form in pres.linear_forms:
                row: Dict[int, int] = {}
                for v, c in form.items():
                    m = tuple(sorted(base + (v,)))
                    j = col.get(m)
                    if j is not None:
                        row[j] = row.get(j, 0) + c
                ech.add(row)
    return survivors, col, ech


def quotient_dim(pres: Presentation, k: int, override: bool = False) -> int:
    pres.check_size(override)
    survivors, _, ech = _degree_data(pres, k)
    return len(survivors) - ech.rank


def independence_report(pres: Presentation, k: int, mode: str = "", override: bool = False) -> GradedDimReport:
    pres.check_size(override)
    survivors, col, ech = _degree_data(pres, k)
    dim = len(survivors) - ech.rank
    cands = pres.candidates.get(k, [])
    independent = True
    for poly in cands:
        row = {col[m]: c for m, c in poly.items() if m in col}
        if not ech.add(row):
            independent = False
            break
    return GradedDimReport(mode, k, len(cands), dim, independent)


def sr_quotient_dim(M: Matroid, mode: str, k: int, override: bool = False) -> int:
    return quotient_dim(presentation(M, mode), k, override)


def fy_independence_check(M: Matroid, mode: str, k: int, override: bool = False) -> bool:
    return independence_report(presentation(M, mode), k, mode, override).ok


def verify_presentation(pres: Presentation, max_degree: int, mode: str = "") -> List[GradedDimReport]:
    return [independence_report(pres, k, mode) for k in range(max_degree + 1)]
