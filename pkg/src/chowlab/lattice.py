"""Finite atomic lattices, building sets, nested sets and the augmented lattice.

A lattice stores its elements as ids 0..N-1 listed along a linear extension
of the order, with down-sets and up-sets as bitmasks over ids. With that
layout the join of x and y is the lowest id among common upper bounds.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .core.combinat import elements_of, full_mask, mask_label, popcount
from .errors import InternalError, InvalidArgument, SizeLimitError
from .matroid import Matroid

BUILDING_SET_CAP = 200


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class AtomicLattice:
    """A finite lattice with 0 and 1, built from labels and an order predicate.

    Labels must be listed along a linear extension (x < y implies id(x) < id(y)).
    Join and meet tables are filled eagerly so the object never mutates.
    """

    def __init__(self, labels: Sequence, leq: Callable, names: Sequence[str] | None = None,
                 require_atomic: bool = True):
        self.labels = tuple(labels)
        N = len(self.labels)
        if N == 0:
            raise InvalidArgument("empty lattice")
        self.size = N
        self.names = tuple(names) if names is not None else tuple(str(x) for x in self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        down = [0] * N
        for i in range(N):
            for j in range(i + 1):
                if leq(self.labels[j], self.labels[i]):
                    down[i] |= 1 << j
            for j in range(i + 1, N):
                if leq(self.labels[j], self.labels[i]):
                    raise InvalidArgument("labels are not listed along a linear extension")
        up = [0] * N
        for i in range(N):
            for j in _bits(down[i]):
                up[j] |= 1 << i
        self.down = tuple(down)
        self.up = tuple(up)
        self._check_order()
        self.bottom = 0
        self.top = N - 1
        if down[self.top] != full_mask(N) or up[0] != full_mask(N):
            raise InvalidArgument("poset lacks a bottom or a top element")
        self.covers = tuple(self._covers(i) for i in range(N))
        self.rank = self._ranks()
        self.atoms = tuple(i for i in range(N) if self.covers[i] == (0,))
        self._join = [[0] * N for _ in range(N)]
        self._meet = [[0] * N for _ in range(N)]
        for x in range(N):
            for y in range(x, N):
                common = up[x] & up[y]
                j = _lowest(common)
                if common & ~up[j]:
                    raise InvalidArgument(f"no join for {self.names[x]}, {self.names[y]}")
                lower = down[x] & down[y]
                m = lower.bit_length() - 1
                if lower & ~down[m]:
                    raise InvalidArgument(f"no meet for {self.names[x]}, {self.names[y]}")
                self._join[x][y] = self._join[y][x] = j
                self._meet[x][y] = self._meet[y][x] = m
        if require_atomic and not self.is_atomic():
            raise InvalidArgument("lattice is not atomic")

    def _check_order(self):
        # reflexive and transitive; antisymmetry follows from the linear extension
        for i in range(self.size):
            if not self.down[i] >> i & 1:
                raise InvalidArgument("order relation is not reflexive")
            for j in _bits(self.down[i]):
                if self.down[j] & ~self.down[i]:
                    raise InvalidArgument("order relation is not transitive")

    def _covers(self, x: int) -> Tuple[int, ...]:
        strict = self.down[x] & ~(1 << x)
        out = []
        for y in _bits(strict):
            if not (self.up[y] & ~(1 << y)) & strict:
                out.append(y)
        return tuple(out)

    def _ranks(self):
        rk = [0] * self.size
        for x in range(1, self.size):
            rk[x] = max(rk[y] for y in self.covers[x]) + 1
        return tuple(rk)

    # -- queries
    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def join(self, x: int, y: int) -> int:
        return self._join[x][y]

    def meet(self, x: int, y: int) -> int:
        return self._meet[x][y]

    def join_all(self, xs: Iterable[int]) -> int:
        out = self.bottom
        for x in xs:
            out = self._join[out][x]
        return out

    def is_graded(self) -> bool:
        return all(self.rank[x] == self.rank[y] + 1 for x in range(self.size) for y in self.covers[x])

    def is_atomic(self) -> bool:
        for x in range(self.size):
            atoms_below = [a for a in self.atoms if self.leq(a, x)]
            if self.join_all(atoms_below) != x:
                return False
        return True

    def interval_size(self, x: int) -> int:
        return popcount(self.down[x])

    def hasse(self) -> List[Tuple[str, str]]:
        return [(self.names[y], self.names[x]) for x in range(self.size) for y in self.covers[x]]

    def to_json(self) -> dict:
        return {"elements": list(self.names),
                "rank": list(self.rank),
                "covers": [[self.names[y], self.names[x]]
                           for x in range(self.size) for y in self.covers[x]]}

    def __repr__(self):
        return f"AtomicLattice({self.size} elements, rank {self.rank[self.top]})"


def boolean_lattice(n: int) -> AtomicLattice:
    """Subsets of [n]; the id of a subset is its mask."""
    return AtomicLattice(range(1 << n), lambda a, b: a & ~b == 0,
                         names=[mask_label(m) for m in range(1 << n)])


def flat_lattice(M: Matroid) -> AtomicLattice:
    fl = M.flats
    return AtomicLattice(fl, lambda a, b: a & ~b == 0, names=[mask_label(f) for f in fl])


def check_geometric(L: AtomicLattice) -> bool:
    if not L.is_graded() or not L.is_atomic():
        return False
    rk = L.rank
    for x in range(L.size):
        for y in range(x + 1, L.size):
            if rk[x] + rk[y] < rk[L.join(x, y)] + rk[L.meet(x, y)]:
                return False
    return True


# ---------------------------------------------------------------- building sets

@dataclass(frozen=True)
class BuildingSet:
    lattice: AtomicLattice
    members: FrozenSet[int]

    @property
    def mask(self) -> int:
        m = 0
        for g in self.members:
            m |= 1 << g
        return m

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def sorted(self) -> List[int]:
        return sorted(self.members)


def _maximal(L: AtomicLattice, ids: Iterable[int]) -> List[int]:
    ids = list(ids)
    return [g for g in ids if not any(h != g and L.leq(g, h) for h in ids)]


def is_building_set(L: AtomicLattice, G: Iterable[int], override: bool = False) -> bool:
    G = set(G)
    if L.bottom in G:
        raise InvalidArgument("a building set may not contain the bottom element")
    if L.size > BUILDING_SET_CAP and not override:
        raise SizeLimitError(f"building-set check capped at {BUILDING_SET_CAP} elements")
    gmask = sum(1 << g for g in G)
    for X in range(1, L.size):
        below = gmask & L.down[X]
        maxes = _maximal(L, _bits(below))
        factors = [list(_bits(L.down[g])) for g in maxes]
        size = 1
        for f in factors:
            size *= len(f)
        if size != L.interval_size(X):
            return False
        tuples = list(itertools.product(*factors))
        images = [L.join_all(t) for t in tuples]
        if len(set(images)) != len(images) or set(images) != set(_bits(L.down[X])):
            return False
        for a in range(len(tuples)):
            ta = tuples[a]
            for b in range(len(tuples)):
                tb = tuples[b]
                comp = all(L.leq(u, v) for u, v in zip(ta, tb))
                if comp != L.leq(images[a], images[b]):
                    return False
    return True


def building_set(L: AtomicLattice, G: Iterable[int], check: bool = True) -> BuildingSet:
    G = frozenset(G)
    if check and not is_building_set(L, G):
        raise InvalidArgument("not a building set")
    return BuildingSet(L, G)


def maximal_building_set(L: AtomicLattice) -> BuildingSet:
    return BuildingSet(L, frozenset(range(1, L.size)))


def is_nested(L: AtomicLattice, G: BuildingSet | Iterable[int], N: Iterable[int]) -> bool:
    gset = G.members if isinstance(G, BuildingSet) else frozenset(G)
    N = list(N)
    if any(x not in gset for x in N):
        raise InvalidArgument("nested-set candidate is not inside the building set")
    for k in range(2, len(N) + 1):
        for sub in itertools.combinations(N, k):
            if all(not L.leq(a, b) and not L.leq(b, a) for a, b in itertools.combinations(sub, 2)):
                if L.join_all(sub) in gset:
                    return False
    return True


def _extends_nested(L, gset, N: Sequence[int], g: int) -> bool:
    """Whether N + [g] is nested, given that N already is."""
    inc = [h for h in N if not L.leq(h, g) and not L.leq(g, h)]
    for k in range(1, len(inc) + 1):
        for sub in itertools.combinations(inc, k):
            if all(not L.leq(a, b) and not L.leq(b, a) for a, b in itertools.combinations(sub, 2)):
                if L.join_all(sub + (g,)) in gset:
                    return False
    return True


def nested_sets(L: AtomicLattice, G: BuildingSet, reduced: bool = False) -> Iterator[FrozenSet[int]]:
    """All nested sets (including the empty one) as frozensets of ids."""
    gset = G.members
    if reduced and L.top not in gset:
        raise InvalidArgument("reduced complex requires the top element in the building set")
    cand = sorted(g for g in gset if not (reduced and g == L.top))

    def rec(start, cur):
        yield frozenset(cur)
        for idx in range(start, len(cand)):
            g = cand[idx]
            if _extends_nested(L, gset, cur, g):
                cur.append(g)
                yield from rec(idx + 1, cur)
                cur.pop()

    yield from rec(0, [])


# ---------------------------------------------------------------- graphical building sets

def _connected(vertices: int, adj: Dict[int, int]) -> bool:
    if vertices == 0:
        return False
    start = _lowest(vertices)
    seen = 1 << start
    frontier = [start]
    while frontier:
        v = frontier.pop()
        nxt = adj[v] & vertices & ~seen
        seen |= nxt
        frontier.extend(_bits(nxt))
    return seen == vertices


def graphical_building_set(num_vertices: int, edges: Iterable[Tuple[int, int]]) -> BuildingSet:
    """Connected induced vertex subsets, inside the Boolean lattice on the vertices."""
    adj = {v: 0 for v in range(num_vertices)}
    for u, v in edges:
        if u == v or not (1 <= u <= num_vertices and 1 <= v <= num_vertices):
            raise InvalidArgument(f"bad edge {(u, v)}")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    L = boolean_lattice(num_vertices)
    members = frozenset(s for s in range(1, 1 << num_vertices) if _connected(s, adj))
    return BuildingSet(L, members)


def star_graph(n: int):
    """K_{1,n} with centre n+1."""
    return n + 1, [(i, n + 1) for i in range(1, n + 1)]


# ---------------------------------------------------------------- augmented lattice

class AugmentedLattice(AtomicLattice):
    """Independent sets of M glued below the starred lattice of flats.

    Labels are ('I', mask) for independent sets and ('F', mask) for starred flats.
    The order is the transitive closure of the three kinds of covers.
    """

    def __init__(self, M: Matroid):
        self.matroid = M
        ind = M.independent_sets
        fl = M.flats
        labels = [("I", s) for s in ind] + [("F", f) for f in fl]
        idx = {lab: i for i, lab in enumerate(labels)}
        N = len(labels)
        flat_rank = {f: M.rank(f) for f in fl}
        # generating covers
        gen = [[] for _ in range(N)]   # gen[x] = elements covered by x
        for s in ind:
            for i in elements_of(s):
                gen[idx[("I", s)]].append(idx[("I", s & ~(1 << (i - 1)))])
            gen[idx[("F", M.closure(s))]].append(idx[("I", s)])
        for f in fl:
            for g in fl:
                if g != f and g & ~f == 0 and flat_rank[g] == flat_rank[f] - 1:
                    gen[idx[("F", f)]].append(idx[("F", g)])
        down = [1 << i for i in range(N)]
        for x in range(N):   # ids follow a linear extension, so one pass closes transitively
            for y in gen[x]:
                if y >= x:
                    raise InternalError("augmented labels are not a linear extension")
                down[x] |= down[y]
        self._down_gen = down
        names = [mask_label(s) if kind == "I" else mask_label(s) + "*" for kind, s in labels]
        super().__init__(labels, lambda a, b: bool(down[idx[b]] >> idx[a] & 1), names=names)
        self.independent_ids = {s: idx[("I", s)] for s in ind}
        self.flat_ids = {f: idx[("F", f)] for f in fl}

    def rk_tilde(self, x: int) -> int:
        kind, s = self.labels[x]
        return popcount(s) if kind == "I" else self.matroid.rank(s) + 1

    def closed_form_join(self, x: int, y: int) -> int:
        """Join from the case analysis on independent/starred parts."""
        M = self.matroid
        (k1, a), (k2, b) = self.labels[x], self.labels[y]
        if k1 == "I" and k2 == "I":
            if M.is_independent(a | b):
                return self.independent_ids[a | b]
            return self.flat_ids[M.closure(M.closure(a) | M.closure(b))]
        return self.flat_ids[M.closure(a | b)]

    def closed_form_meet(self, x: int, y: int) -> int:
        (k1, a), (k2, b) = self.labels[x], self.labels[y]
        if k1 == "F" and k2 == "F":
            return self.flat_ids[a & b]
        return self.independent_ids[a & b]


def augmented_lattice(M: Matroid) -> AugmentedLattice:
    return AugmentedLattice(M)


def augmented_building_set(M: Matroid, L: AugmentedLattice | None = None) -> BuildingSet:
    L = L or augmented_lattice(M)
    members = {L.independent_ids[1 << i] for i in range(M.n)} | set(L.flat_ids.values())
    return BuildingSet(L, frozenset(members))


# ---------------------------------------------------------------- compatible pairs

@dataclass(frozen=True, order=True)
class CompatiblePair:
    """An independent set I and a flag of flats F with I inside the first flat."""
    flag: Tuple[int, ...]
    indep: int

    def __str__(self):
        flag = ",".join(mask_label(f) for f in self.flag)
        return f"{mask_label(self.indep)} <= ({flag})"

    def contains(self, other: "CompatiblePair") -> bool:
        """Face containment: other is a face of self."""
        return other.indep & ~self.indep == 0 and set(other.flag) <= set(self.flag)


def flags_of(M: Matroid, flats: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """All chains (strictly increasing) in the given collection of flats, incl. the empty one."""
    fl = sorted(flats, key=lambda m: (popcount(m), m))

    def rec(start, cur):
        yield tuple(cur)
        for i in range(start, len(fl)):
            f = fl[i]
            if not cur or (cur[-1] & ~f == 0 and cur[-1] != f):
                cur.append(f)
                yield from rec(i + 1, cur)
                cur.pop()

    yield from rec(0, [])


def compatible_pairs(M: Matroid, proper_only: bool = True) -> Iterator[CompatiblePair]:
    top = full_mask(M.n)
    fl = [f for f in M.flats if not (proper_only and f == top)]
    ind = M.independent_sets
    for flag in flags_of(M, fl):
        bound = flag[0] if flag else top
        for s in ind:
            if s & ~bound == 0:
                yield CompatiblePair(flag, s)


def nested_to_compatible_pair(L: AugmentedLattice, N: Iterable[int],
                              G: BuildingSet | None = None) -> CompatiblePair:
    N = list(N)
    G = G or augmented_building_set(L.matroid, L)
    if not is_nested(L, G, N):
        raise InvalidArgument("not a nested set of the augmented building set")
    indep = 0
    flag = []
    for x in N:
        kind, s = L.labels[x]
        if kind == "I":
            indep |= s
        else:
            flag.append(s)
    flag.sort(key=lambda m: (popcount(m), m))
    pair = CompatiblePair(tuple(flag), indep)
    if not L.matroid.is_independent(indep) or (flag and indep & ~flag[0]):
        raise InternalError(f"nested set maps to an incompatible pair {pair}")
    return pair


def compatible_pair_to_nested(L: AugmentedLattice, pair: CompatiblePair) -> FrozenSet[int]:
    out = {L.independent_ids[1 << (i - 1)] for i in elements_of(pair.indep)}
    out |= {L.flat_ids[f] for f in pair.flag}
    return frozenset(out)


# ---------------------------------------------------------------- face lattice checks

@dataclass
class FaceIsoReport:
    matroid: str
    passed: bool
    nested_count: int
    pair_count: int
    stellohedron_checked: bool = False
    counterexample: str = ""

    def to_json(self):
        return dict(self.__dict__)


def _poset_iso(objs_a, objs_b, mapping, leq_a, leq_b):
    """Check mapping is a bijection objs_a -> objs_b preserving order both ways."""
    images = [mapping(a) for a in objs_a]
    if len(set(images)) != len(images) or set(images) != set(objs_b):
        return "map is not a bijection"
    for a1, b1 in zip(objs_a, images):
        for a2, b2 in zip(objs_a, images):
            if leq_a(a1, a2) != leq_b(b1, b2):
                return f"containment not preserved between {b1} and {b2}"
    return ""


def face_iso_check(M: Matroid) -> FaceIsoReport:
    if M.n > 6:
        raise SizeLimitError("face_iso_check is limited to n <= 6")
    L = augmented_lattice(M)
    G = augmented_building_set(M, L)
    nested = list(nested_sets(L, G, reduced=True))
    pairs = list(compatible_pairs(M, proper_only=True))
    rep = FaceIsoReport(M.label(), True, len(nested), len(pairs))
    err = _poset_iso(nested, pairs, lambda N: nested_to_compatible_pair(L, N, G),
                     lambda a, b: a <= b, lambda p, q: q.contains(p))
    if not err:
        back = [compatible_pair_to_nested(L, p) for p in pairs]
        if set(back) != set(nested):
            err = "inverse map does not reproduce the nested sets"
    if not err and M.is_boolean():
        rep.stellohedron_checked = True
        err = _stellohedron_check(M.n, pairs)
    if err:
        rep.passed = False
        rep.counterexample = err
    return rep


def _stellohedron_check(n: int, pairs: List[CompatiblePair]) -> str:
    """Reduced nested sets of the star-graph building set vs compatible pairs of B_n."""
    nv, edges = star_graph(n)
    B = graphical_building_set(nv, edges)
    L = B.lattice
    star = 1 << n

    def to_pair(N):
        indep = 0
        flag = []
        for s in N:
            if s & star:
                flag.append(s & ~star)
            else:
                indep |= s
        flag.sort(key=lambda m: (popcount(m), m))
        return CompatiblePair(tuple(flag), indep)

    nested = list(nested_sets(L, B, reduced=True))
    for N in nested:
        p = to_pair(N)
        if p.flag and p.indep & ~p.flag[0]:
            return f"star-graph nested set {sorted(N)} gives incompatible {p}"
    return _poset_iso(nested, pairs, to_pair, lambda a, b: a <= b, lambda p, q: q.contains(p))
