"""Loopless matroids on [n]: rank, closure, flats, independent sets, lattice of flats."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Tuple

from .core.combinat import elements_of, full_mask, mask_label, mask_of, popcount
from .errors import MAX_GROUND, InvalidArgument, InternalError


class Matroid:
    """A loopless matroid given by kind: boolean, uniform(k) or explicit bases.

    Subsets are bitmasks (element i in bit i-1).
    """

    def __init__(self, n: int, kind: str = "boolean", k: int | None = None, bases=None):
        if not isinstance(n, int) or not 0 <= n <= MAX_GROUND:
            raise InvalidArgument(f"ground set size must be in 0..{MAX_GROUND}, got {n!r}")
        self.n = n
        self.kind = kind
        self.k = None
        self._bases: FrozenSet[int] | None = None
        if kind == "boolean":
            self.k = n
        elif kind == "uniform":
            if k is None or not 1 <= k <= n:
                # k = 0 would make every element a loop
                raise InvalidArgument(f"uniform matroid needs 1 <= k <= n, got k={k}, n={n}")
            self.k = k
        elif kind == "explicit":
            self._bases = self._check_bases(bases)
            self.k = popcount(next(iter(self._bases)))
        else:
            raise InvalidArgument(f"unknown matroid kind {kind!r}")
        if n and any(self.rank(1 << i) == 0 for i in range(n)):
            raise InvalidArgument("matroid has a loop; only loopless matroids are supported")

    # -- construction helpers
    @classmethod
    def boolean(cls, n):
        return cls(n, "boolean")

    @classmethod
    def uniform(cls, k, n):
        return cls(n, "uniform", k=k)

    @classmethod
    def from_bases(cls, n, bases):
        """bases: iterable of masks or of 1-indexed element lists."""
        masks = [b if isinstance(b, int) else mask_of(b) for b in bases]
        return cls(n, "explicit", bases=masks)

    def _check_bases(self, bases):
        if not bases:
            raise InvalidArgument("explicit matroid needs at least one basis")
        bs = frozenset(bases)
        full = full_mask(self.n)
        sizes = {popcount(b) for b in bs}
        if len(sizes) != 1:
            raise InvalidArgument("bases are not equicardinal")
        if any(b & ~full for b in bs):
            raise InvalidArgument("basis element outside the ground set")
        # basis exchange: for B1, B2 and x in B1-B2 some y in B2-B1 gives a basis
        for b1 in bs:
            for b2 in bs:
                for x in elements_of(b1 & ~b2):
                    base = b1 & ~(1 << (x - 1))
                    if not any((base | (1 << (y - 1))) in bs for y in elements_of(b2 & ~b1)):
                        raise InvalidArgument("bases violate the exchange axiom")
        return bs

    @property
    def bases(self) -> FrozenSet[int]:
        if self._bases is not None:
            return self._bases
        return frozenset(mask_of(c) for c in itertools.combinations(range(1, self.n + 1), self.k))

    def label(self) -> str:
        if self.kind == "boolean":
            return f"B{self.n}"
        if self.kind == "uniform":
            return f"U{self.k},{self.n}"
        return f"M(n={self.n}, rank={self.k})"

    def is_boolean(self) -> bool:
        return self.k == self.n

    def __repr__(self):
        return f"Matroid({self.label()})"

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    # -- rank and closure
    def is_independent(self, s: int) -> bool:
        if self.kind == "explicit":
            return any(s & ~b == 0 for b in self._bases)
        return popcount(s) <= self.k

    def rank(self, s: int) -> int:
        if self.kind == "boolean":
            return popcount(s)
        if self.kind == "uniform":
            return min(popcount(s), self.k)
        # greedy over the independence oracle
        cur = 0
        for i in elements_of(s):
            cand = cur | (1 << (i - 1))
            if self.is_independent(cand):
                cur = cand
        return popcount(cur)

    def closure(self, s: int) -> int:
        r = self.rank(s)
        out = s
        for i in range(self.n):
            bit = 1 << i
            if not s & bit and self.rank(s | bit) == r:
                out |= bit
        return out

    def is_flat(self, s: int) -> bool:
        return self.closure(s) == s

    @cached_property
    def flats(self) -> Tuple[int, ...]:
        """All flats sorted by cardinality then mask."""
        if self.kind == "boolean":
            fl = list(range(1 << self.n))
        elif self.kind == "uniform":
            fl = [mask_of(c) for r in range(self.k)
                  for c in itertools.combinations(range(1, self.n + 1), r)]
            fl.append(full_mask(self.n))
        else:
            # flats are intersections of hyperplanes; closing every subset is simpler here
            fl = sorted({self.closure(s) for s in range(1 << self.n)})
        return tuple(sorted(set(fl), key=lambda m: (popcount(m), m)))

    @cached_property
    def independent_sets(self) -> Tuple[int, ...]:
        if self.kind == "explicit":
            found = set()
            for b in self._bases:
                s = b
                while True:
                    found.add(s)
                    if s == 0:
                        break
                    s = (s - 1) & b
            ind = found
        else:
            ind = [mask_of(c) for r in range(self.k + 1)
                   for c in itertools.combinations(range(1, self.n + 1), r)]
        return tuple(sorted(ind, key=lambda m: (popcount(m), m)))

    def to_json(self) -> dict:
        if self.kind == "boolean":
            return {"kind": "boolean", "n": self.n}
        if self.kind == "uniform":
            return {"kind": "uniform", "k": self.k, "n": self.n}
        return {"kind": "bases", "n": self.n,
                "bases": sorted(elements_of(b) for b in self._bases)}


def rank(M: Matroid, s: int) -> int:
    return M.rank(s)


def closure(M: Matroid, s: int) -> int:
    return M.closure(s)


def flats(M: Matroid) -> List[int]:
    return list(M.flats)


def independent_sets(M: Matroid) -> List[int]:
    return list(M.independent_sets)


# ---------------------------------------------------------------- parsing

def matroid_from_json(obj) -> Matroid:
    if not isinstance(obj, dict) or "kind" not in obj or "n" not in obj:
        raise InvalidArgument(f"matroid JSON needs 'kind' and 'n': {obj!r}")
    kind = obj["kind"]
    n = obj["n"]
    if kind == "boolean":
        return Matroid.boolean(n)
    if kind == "uniform":
        return Matroid.uniform(obj.get("k"), n)
    if kind == "bases":
        bases = obj.get("bases")
        if not isinstance(bases, list):
            raise InvalidArgument("'bases' must be a list of element lists")
        for b in bases:
            if any(not isinstance(i, int) or not 1 <= i <= n for i in b):
                raise InvalidArgument(f"basis {b} has elements outside [1..{n}]")
        return Matroid.from_bases(n, bases)
    raise InvalidArgument(f"unknown matroid kind {kind!r}")


def parse_matroid_spec(spec: str) -> Matroid:
    """'boolean:4', 'uniform:2:4' (k then n), inline JSON, or a path to a JSON file."""
    spec = spec.strip()
    try:
        if spec.startswith("{"):
            return matroid_from_json(json.loads(spec))
        if spec.startswith("boolean:"):
            return Matroid.boolean(int(spec.split(":")[1]))
        if spec.startswith("uniform:"):
            _, k, n = spec.split(":")
            return Matroid.uniform(int(k), int(n))
    except (ValueError, json.JSONDecodeError) as exc:
        if isinstance(exc, InvalidArgument):
            raise
        raise InvalidArgument(f"cannot parse matroid spec {spec!r}: {exc}")
    try:
        with open(spec, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError:
        raise InvalidArgument(f"matroid spec {spec!r} is neither a known kind nor a readable file")
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"bad JSON in {spec}: {exc}")
    return matroid_from_json(obj)


# ---------------------------------------------------------------- lattice of flats

@dataclass(frozen=True)
class FlatLattice:
    elements: Tuple[int, ...]
    ranks: Tuple[int, ...]
    covers: Tuple[Tuple[int, ...], ...]   # covers[x] = indices of elements covered by x
    index: Dict[int, int] = field(compare=False, hash=False, repr=False)
    closure_of: object = field(compare=False, hash=False, repr=False)

    def join(self, a: int, b: int) -> int:
        """Join of two flats (as masks)."""
        return self.closure_of(a | b)

    def meet(self, a: int, b: int) -> int:
        return a & b

    @property
    def bottom(self):
        return self.elements[0]

    @property
    def top(self):
        return self.elements[-1]

    def hasse(self) -> List[Tuple[str, str]]:
        return [(mask_label(self.elements[y]), mask_label(self.elements[x]))
                for x, cov in enumerate(self.covers) for y in cov]


def lattice_of_flats(M: Matroid) -> FlatLattice:
    fl = M.flats
    index = {f: i for i, f in enumerate(fl)}
    ranks = tuple(M.rank(f) for f in fl)
    covers = []
    for i, f in enumerate(fl):
        below = [j for j in range(i) if fl[j] & ~f == 0 and fl[j] != f]
        covers.append(tuple(j for j in below if ranks[j] == ranks[i] - 1))
    if fl[0] != M.closure(0) or fl[-1] != full_mask(M.n):
        raise InternalError("lattice of flats lacks bottom or top")
    lat = FlatLattice(fl, ranks, tuple(covers), index, M.closure)
    # graded and atomic checks (geometric lattice)
    atoms = [f for f, r in zip(fl, ranks) if r == 1]
    for i, f in enumerate(fl):
        if i and not covers[i]:
            raise InternalError(f"flat {mask_label(f)} covers nothing")
        joined = 0
        for a in atoms:
            if a & ~f == 0:
                joined = M.closure(joined | a)
        if joined != f:
            raise InternalError(f"flat {mask_label(f)} is not a join of atoms")
    return lat
