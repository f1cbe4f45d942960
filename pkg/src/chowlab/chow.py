"""Feichtner-Yuzvinsky monomial bases of Chow rings and augmented Chow rings."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .core.combinat import Permutation, elements_of, mask_label, mask_of, popcount, relabel_mask
from .core.poly import UniPoly
from .errors import InvalidArgument
from .lattice import AtomicLattice, BuildingSet, check_geometric, nested_sets
from .matroid import Matroid

CHOW = "chow"
AUGMENTED = "augmented"


@dataclass(frozen=True, order=True)
class FYMonomial:
    """x_{F_1}^{a_1} ... x_{F_l}^{a_l} over a flag of flats given as masks."""
    flag: Tuple[int, ...]
    exps: Tuple[int, ...]
    n: int
    mode: str = CHOW
    boolean: bool = True

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def sort_key(self):
        return (len(self.flag), self.flag, self.exps)

    def __str__(self):
        if not self.flag:
            return "1"
        out = []
        for f, a in zip(self.flag, self.exps):
            out.append(f"x_{mask_label(f)}" + (f"^{a}" if a > 1 else ""))
        return " ".join(out)

    def to_json(self):
        return {"flag": [elements_of(f) for f in self.flag], "exp": list(self.exps)}


@dataclass(frozen=True)
class GradedBasis:
    by_degree: Dict[int, Tuple]

    def __len__(self):
        return sum(len(v) for v in self.by_degree.values())

    def __iter__(self):
        for k in sorted(self.by_degree):
            yield from self.by_degree[k]

    def degree_counts(self) -> List[int]:
        top = max(self.by_degree, default=-1)
        return [len(self.by_degree.get(k, ())) for k in range(top + 1)]

    def __getitem__(self, k):
        return self.by_degree.get(k, ())


def _graded(monomials: Iterable, key=lambda m: m.sort_key()) -> GradedBasis:
    by: Dict[int, list] = {}
    for m in monomials:
        by.setdefault(m.degree, []).append(m)
    return GradedBasis({k: tuple(sorted(v, key=key)) for k, v in sorted(by.items())})


# ---------------------------------------------------------------- matroid bases

def iter_fy(M: Matroid, mode: str = CHOW) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Stream (flag, exponents) pairs of FY(M) or the augmented FY basis."""
    if mode not in (CHOW, AUGMENTED):
        raise InvalidArgument(f"unknown mode {mode!r}")
    fl = [f for f in M.flats if f]
    rk = {f: M.rank(f) for f in M.flats}
    above: Dict[int, List[int]] = {0: fl}
    for f in fl:
        above[f] = [g for g in fl if g != f and f & ~g == 0 and rk[g] - rk[f] >= 2]

    flag: List[int] = []
    exps: List[int] = []

    def rec(prev):
        yield tuple(flag), tuple(exps)
        for g in above[prev]:
            gap = rk[g] - rk[prev]
            if not flag and mode == AUGMENTED:
                hi = rk[g]
            else:
                hi = gap - 1
            if hi < 1:
                continue
            flag.append(g)
            for a in range(1, hi + 1):
                exps.append(a)
                yield from rec(g)
                exps.pop()
            flag.pop()

    yield from rec(0)


def _matroid_basis(M: Matroid, mode: str) -> GradedBasis:
    b = M.is_boolean()
    return _graded(FYMonomial(f, e, M.n, mode, b) for f, e in iter_fy(M, mode))


def fy_basis_matroid(M: Matroid) -> GradedBasis:
    return _matroid_basis(M, CHOW)


def fy_basis_augmented(M: Matroid) -> GradedBasis:
    return _matroid_basis(M, AUGMENTED)


def hilbert_series(b: GradedBasis | Iterable) -> UniPoly:
    if isinstance(b, GradedBasis):
        return UniPoly({k: len(v) for k, v in b.by_degree.items()}, "t")
    counts: Dict[int, int] = {}
    for m in b:
        d = m.degree if hasattr(m, "degree") else sum(m[1])
        counts[d] = counts.get(d, 0) + 1
    return UniPoly(counts, "t")


def fy_hilbert(M: Matroid, mode: str = CHOW) -> UniPoly:
    """Hilbert series by streaming the basis without materializing it."""
    counts: Dict[int, int] = {}
    for _, exps in iter_fy(M, mode):
        d = sum(exps)
        counts[d] = counts.get(d, 0) + 1
    return UniPoly(counts, "t")


def sn_act_monomial(p: Permutation, m: FYMonomial) -> FYMonomial:
    """Relabel every flat of the flag through p (a left action)."""
    if not m.boolean:
        raise InvalidArgument("the symmetric group acts only on bases of Boolean matroids")
    if p.n != m.n:
        raise InvalidArgument("permutation and monomial sizes differ")
    flag = tuple(relabel_mask(f, p.images) for f in m.flag)
    return FYMonomial(flag, m.exps, m.n, m.mode, True)


def monomial_from_sets(n: int, flag: Sequence[Iterable[int]], exps: Sequence[int],
                       mode: str = CHOW) -> FYMonomial:
    """Build a Boolean-matroid monomial from element lists, checking the exponent bounds."""
    masks = tuple(mask_of(s) for s in flag)
    if len(masks) != len(exps):
        raise InvalidArgument("flag and exponents differ in length")
    prev = 0
    for i, (f, a) in enumerate(zip(masks, exps)):
        if f >> n or prev & ~f or f == prev:
            raise InvalidArgument("flag is not a strictly increasing chain in [n]")
        hi = popcount(f) if (i == 0 and mode == AUGMENTED) else popcount(f) - popcount(prev) - 1
        if not 1 <= a <= hi:
            raise InvalidArgument(f"exponent {a} outside 1..{hi} for {mask_label(f)}")
        prev = f
    return FYMonomial(masks, tuple(exps), n, mode, True)


# ---------------------------------------------------------------- general lattices

@dataclass(frozen=True, order=True)
class LatticeMonomial:
    """Monomial in the variables x_G, G in a building set: sorted (id, exponent) pairs."""
    terms: Tuple[Tuple[int, int], ...]

    @property
    def degree(self):
        return sum(a for _, a in self.terms)

    def sort_key(self):
        return (len(self.terms), self.terms)


def fy_basis_general(L: AtomicLattice, G: BuildingSet) -> GradedBasis:
    """Monomials prod x_G^{a_G} over nested N with a_G < rk(G) - rk(join of N below G)."""
    if not check_geometric(L):
        raise InvalidArgument("fy_basis_general is only available for geometric lattices")
    rk = L.rank
    out = []
    for N in nested_sets(L, G):
        N = sorted(N)
        ranges = []
        for g in N:
            below = L.join_all(h for h in N if h != g and L.leq(h, g))
            hi = rk[g] - rk[below] - 1
            if hi < 1:
                break
            ranges.append(range(1, hi + 1))
        else:
            for exps in itertools.product(*ranges):
                out.append(LatticeMonomial(tuple(zip(N, exps))))
    return _graded(out)


def augmented_general_as_flags(L, basis: GradedBasis) -> GradedBasis:
    """Rename x_{F*} -> x_F in a basis over the augmented lattice."""
    M = L.matroid
    out = []
    for m in basis:
        flag = []
        for x, a in m.terms:
            kind, s = L.labels[x]
            if kind != "F":
                raise InvalidArgument("monomial involves an independent-set variable")
            flag.append((popcount(s), s, a))
        flag.sort()
        out.append(FYMonomial(tuple(s for _, s, _ in flag), tuple(a for _, _, a in flag),
                              M.n, AUGMENTED, M.is_boolean()))
    return _graded(out)


def flat_lattice_general_as_flags(L, M: Matroid, basis: GradedBasis) -> GradedBasis:
    """Rename lattice ids of a flat lattice to flat masks (chow mode)."""
    out = []
    for m in basis:
        pairs = sorted((popcount(L.labels[x]), L.labels[x], a) for x, a in m.terms)
        out.append(FYMonomial(tuple(s for _, s, _ in pairs), tuple(a for _, _, a in pairs),
                              M.n, CHOW, M.is_boolean()))
    return _graded(out)
