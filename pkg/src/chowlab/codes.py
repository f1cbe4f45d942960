"""Stembridge codes, extended codes and the bijections with FY monomials.

A code is a word alpha over {0, 1, ..., m} (extended codes also use INF) in
which every value 1..m occurs at least twice, together with marks f(k) in
1..(occurrences of k) - 1. Marks are stored as integers; drawing a hat on the
(f(k)+1)-st occurrence of k is only a rendering detail.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .chow import AUGMENTED, CHOW, FYMonomial, fy_basis_augmented, fy_basis_matroid, sn_act_monomial
from .core.combinat import Partition, Permutation
from .core.words import INF
from .errors import InvalidArgument, SizeLimitError
from .matroid import Matroid

CODE_CAP = 9


@dataclass(frozen=True)
class Code:
    alpha: Tuple
    marks: Tuple[int, ...]
    extended: bool = False

    def __post_init__(self):
        alpha = tuple(INF if a == INF else a for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "marks", tuple(self.marks))
        if not self.extended and INF in alpha:
            raise InvalidArgument("plain codes may not contain infinity")
        finite = [a for a in alpha if a != INF]
        if any(not isinstance(a, int) or a < 0 for a in finite):
            raise InvalidArgument(f"bad letters in {alpha}")
        m = max(finite, default=0)
        counts = Counter(finite)
        if len(self.marks) != m:
            raise InvalidArgument(f"need {m} marks, got {len(self.marks)}")
        for k in range(1, m + 1):
            if counts[k] < 2:
                raise InvalidArgument(f"value {k} occurs fewer than twice")
            if not 1 <= self.marks[k - 1] <= counts[k] - 1:
                raise InvalidArgument(f"mark f({k})={self.marks[k - 1]} out of range")

    @property
    def n(self):
        return len(self.alpha)

    @property
    def m(self):
        return len(self.marks)

    def f(self, k: int) -> int:
        return self.marks[k - 1]

    def sort_key(self):
        return (self.alpha, self.marks)

    def __str__(self):
        return render_code(self)


def index(c: Code) -> int:
    if c.extended and all(a == INF for a in c.alpha):
        # includes the empty extended code, which corresponds to 1 in degree 0
        return -1
    return sum(c.marks)


def content(c: Code) -> Partition:
    return Partition.of(Counter(c.alpha).values())


def sn_act_code(p: Permutation, c: Code) -> Code:
    """(alpha_{p(1)}, ..., alpha_{p(n)}) with marks unchanged.

    Note this is a right action: acting by p then q equals acting by p*q.
    """
    if p.n != c.n:
        raise InvalidArgument("permutation and code lengths differ")
    return Code(tuple(c.alpha[p(i) - 1] for i in range(1, c.n + 1)), c.marks, c.extended)


# ---------------------------------------------------------------- rendering

def render_code(c: Code, mark: str = "'", inf: str = "∞") -> str:
    seen: Counter = Counter()
    out = []
    wide = any(a != INF and a >= 10 for a in c.alpha)
    for a in c.alpha:
        s = inf if a == INF else str(a)
        if a != INF and a > 0:
            seen[a] += 1
            if seen[a] == c.marks[a - 1] + 1:
                s += mark
        out.append(s)
    return (" " if wide else "").join(out)


def parse_code(text: str, extended: bool | None = None, mark: str = "'") -> Code:
    """Inverse of render_code for single-digit letters; 'i' or '∞' denote infinity."""
    alpha = []
    marked: Dict[int, int] = {}
    seen: Counter = Counter()
    for ch in text.replace(" ", ""):
        if ch == mark:
            if not alpha or alpha[-1] in (0, INF):
                raise InvalidArgument(f"misplaced mark in {text!r}")
            if alpha[-1] in marked:
                raise InvalidArgument(f"value {alpha[-1]} is marked twice in {text!r}")
            marked[alpha[-1]] = seen[alpha[-1]] - 1
        elif ch in "i∞":
            alpha.append(INF)
        elif ch.isdigit():
            v = int(ch)
            alpha.append(v)
            seen[v] += 1
        else:
            raise InvalidArgument(f"bad character {ch!r} in code {text!r}")
    m = max((a for a in alpha if a != INF), default=0)
    if set(marked) != set(range(1, m + 1)):
        raise InvalidArgument(f"every value 1..{m} needs exactly one mark in {text!r}")
    if extended is None:
        extended = INF in alpha
    return Code(tuple(alpha), tuple(marked[k] for k in range(1, m + 1)), extended)


def code_to_json(c: Code) -> dict:
    return {"alpha": ["inf" if a == INF else a for a in c.alpha],
            "marks": {str(k): c.marks[k - 1] for k in range(1, c.m + 1)}}


def code_from_json(obj: dict, extended: bool | None = None) -> Code:
    alpha = tuple(INF if a == "inf" else a for a in obj["alpha"])
    marks = obj.get("marks", {})
    m = len(marks)
    if extended is None:
        extended = INF in alpha
    return Code(alpha, tuple(marks[str(k)] for k in range(1, m + 1)), extended)


# ---------------------------------------------------------------- generation

def _block_assignments(positions: Sequence[int]) -> Iterator[List[Tuple[int, ...]]]:
    """Ordered lists of disjoint blocks (size >= 2) drawn from positions."""
    yield []
    positions = tuple(positions)
    for size in range(2, len(positions) + 1):
        for block in itertools.combinations(positions, size):
            rest = tuple(p for p in positions if p not in block)
            for tail in _block_assignments(rest):
                yield [block] + tail


def _codes_on(n: int, support: Sequence[int], extended: bool) -> Iterator[Code]:
    """Codes whose finite letters sit on support; other positions get INF."""
    base = [INF] * n
    for p in support:
        base[p] = 0
    for blocks in _block_assignments(support):
        alpha = list(base)
        for k, block in enumerate(blocks, 1):
            for p in block:
                alpha[p] = k
        alpha = tuple(alpha)
        for marks in itertools.product(*(range(1, len(b)) for b in blocks)):
            yield Code(alpha, marks, extended)


def _check(n, override):
    if n > CODE_CAP and not override:
        raise SizeLimitError(f"code enumeration capped at n={CODE_CAP}")


def codes(n: int, j: int | None = None, override: bool = False) -> List[Code]:
    """All Stembridge codes of length n (of index j if given), canonically sorted."""
    _check(n, override)
    out = [c for c in _codes_on(n, range(n), False) if j is None or index(c) == j]
    out.sort(key=Code.sort_key)
    return out


def extended_codes(n: int, j: int | None = None, override: bool = False) -> List[Code]:
    _check(n, override)
    out = []
    for k in range(n + 1):
        for support in itertools.combinations(range(n), k):
            for c in _codes_on(n, support, True):
                if j is None or index(c) == j:
                    out.append(c)
    out.sort(key=Code.sort_key)
    return out


def orbit(c: Code) -> List[Code]:
    """The symmetric-group orbit: all rearrangements of alpha, marks fixed."""
    words = sorted(set(itertools.permutations(c.alpha)))
    return [Code(w, c.marks, c.extended) for w in words]


def orbit_key(c: Code):
    return (tuple(sorted(c.alpha)), c.marks)


# ---------------------------------------------------------------- bijections

def phi(m: FYMonomial) -> Code:
    if m.mode != CHOW or not m.boolean:
        raise InvalidArgument("phi takes monomials of FY(B_n)")
    alpha = [0] * m.n
    prev = 0
    for j, f in enumerate(m.flag, 1):
        diff = f & ~prev
        for i in range(m.n):
            if diff >> i & 1:
                alpha[i] = j
        prev = f
    return Code(tuple(alpha), m.exps, False)


def phi_inv(c: Code) -> FYMonomial:
    if c.extended:
        raise InvalidArgument("phi_inv takes plain codes")
    flag = []
    for j in range(1, c.m + 1):
        flag.append(sum(1 << i for i, a in enumerate(c.alpha) if 1 <= a <= j))
    return FYMonomial(tuple(flag), c.marks, c.n, CHOW, True)


def phi_tilde(m: FYMonomial) -> Code:
    if m.mode != AUGMENTED or not m.boolean:
        raise InvalidArgument("phi_tilde takes monomials of the augmented FY basis of B_n")
    alpha = [INF] * m.n
    if not m.flag:
        return Code(tuple(alpha), (), True)
    shift = 1 if m.exps[0] == 1 else 0
    prev = 0
    for j, f in enumerate(m.flag, 1):
        diff = f & ~prev
        for i in range(m.n):
            if diff >> i & 1:
                alpha[i] = j - shift
        prev = f
    if shift:
        marks = m.exps[1:]
    else:
        marks = (m.exps[0] - 1,) + m.exps[1:]
    return Code(tuple(alpha), marks, True)


def phi_tilde_inv(c: Code) -> FYMonomial:
    if not c.extended:
        raise InvalidArgument("phi_tilde_inv takes extended codes")
    finite = [a for a in c.alpha if a != INF]
    if not finite:
        return FYMonomial((), (), c.n, AUGMENTED, True)
    if 0 in finite:
        levels = range(0, c.m + 1)
        exps = (1,) + c.marks
    else:
        levels = range(1, c.m + 1)
        exps = (c.marks[0] + 1,) + c.marks[1:]
    flag = tuple(sum(1 << i for i, a in enumerate(c.alpha) if a != INF and a <= j) for j in levels)
    return FYMonomial(flag, exps, c.n, AUGMENTED, True)


# ---------------------------------------------------------------- checks

@dataclass
class BijectionReport:
    n: int
    mode: str
    passed: bool
    size: int
    counterexample: str = ""

    def to_json(self):
        return dict(self.__dict__)


def equivariance_check(n: int, mode: str = CHOW, all_perms: bool = False) -> BijectionReport:
    """Bijectivity, degree/index relation and symmetric-group equivariance.

    Adjacent transpositions are checked by default. With all_perms every p is
    tried, in the form phi(p.m) = p^{-1}.phi(m) that matches the right action
    on codes.
    """
    if n > 8:
        raise SizeLimitError("equivariance_check is limited to n <= 8")
    M = Matroid.boolean(n)
    if mode == CHOW:
        basis, fwd, back, shift = fy_basis_matroid(M), phi, phi_inv, 0
        target = codes(n)
    else:
        basis, fwd, back, shift = fy_basis_augmented(M), phi_tilde, phi_tilde_inv, 1
        target = extended_codes(n)
    mons = list(basis)
    rep = BijectionReport(n, mode, True, len(mons))

    def fail(msg):
        rep.passed = False
        rep.counterexample = msg
        return rep

    images = {}
    for m in mons:
        c = fwd(m)
        if back(c) != m:
            return fail(f"inverse fails on {m}")
        if m.degree != index(c) + shift:
            return fail(f"degree {m.degree} vs index {index(c)} for {m}")
        images[c] = m
    if len(images) != len(mons) or set(images) != set(target):
        return fail("image is not the full set of codes")
    if all_perms:
        gens = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    else:
        gens = [Permutation.transposition(n, i, i + 1) for i in range(1, n)]
    for p in gens:
        pinv = p.inverse()
        for m in mons:
            if fwd(sn_act_monomial(p, m)) != sn_act_code(pinv, fwd(m)):
                return fail(f"equivariance fails for p={p} on {m}")
    return rep
