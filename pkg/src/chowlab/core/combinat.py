"""Subsets as bitmasks, permutations, decorated permutations and partitions.

Element i of [n] lives in bit i-1 of a mask.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..errors import MAX_GROUND, InvalidArgument, check_cap


# ---------------------------------------------------------------- subsets

def mask_of(elements: Iterable) -> int:
    m = 0
    for i in elements:
        if i < 1:
            raise InvalidArgument(f"elements are 1-indexed, got {i}")
        m |= 1 << (i - 1)
    return m


def elements_of(mask: int) -> List[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, in increasing numeric order."""
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    return reversed(out)


def mask_label(mask: int) -> str:
    els = elements_of(mask)
    if not els:
        return "∅"
    if all(e < 10 for e in els):
        return "".join(map(str, els))
    return "{" + ",".join(map(str, els)) + "}"


def relabel_mask(mask: int, images: Sequence[int]) -> int:
    """Image of a subset under i -> images[i-1]."""
    return mask_of(images[i - 1] for i in elements_of(mask))


@dataclass(frozen=True)
class Subset:
    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise InvalidArgument(f"ground set size {self.n} outside 0..{MAX_GROUND}")
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidArgument(f"mask {self.mask:b} has bits outside [{self.n}]")

    @classmethod
    def of(cls, elements, n):
        return cls(mask_of(elements), n)

    def __iter__(self):
        return iter(elements_of(self.mask))

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, i):
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __or__(self, other):
        return Subset(self.mask | other.mask, self.n)

    def __and__(self, other):
        return Subset(self.mask & other.mask, self.n)

    def __str__(self):
        return mask_label(self.mask)


# ---------------------------------------------------------------- permutations

@dataclass(frozen=True)
class Permutation:
    """One-line notation over [n]."""
    images: Tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise InvalidArgument(f"{imgs} is not a permutation")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def cycle(cls, n, shift=1):
        """The power c^shift of c = (1 2 ... n)."""
        return cls(tuple((i - 1 + shift) % n + 1 for i in range(1, n + 1)))

    @classmethod
    def transposition(cls, n, a, b):
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[b - 1] = b, a
        return cls(tuple(imgs))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> "Partition":
        seen = [False] * (self.n + 1)
        lens = []
        for i in range(1, self.n + 1):
            if not seen[i]:
                k = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = self.images[j - 1]
                    k += 1
                lens.append(k)
        return Partition(tuple(sorted(lens, reverse=True)))

    def __str__(self):
        return "".join(map(str, self.images)) if self.n < 10 else " ".join(map(str, self.images))


def permutations(n: int, override: bool = False) -> Iterator[Permutation]:
    check_cap(n, override=override)
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


@dataclass(frozen=True)
class DecoratedPermutation:
    """A bijection of a subset S of [n] onto itself, one-line with 0 off S."""
    images: Tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        n = len(imgs)
        support = [i for i, v in enumerate(imgs, 1) if v != 0]
        values = sorted(v for v in imgs if v != 0)
        if any(v < 0 or v > n for v in imgs) or values != support:
            raise InvalidArgument(f"{imgs} is not a decorated permutation")

    @classmethod
    def theta(cls, n):
        return cls((0,) * n)

    @property
    def n(self):
        return len(self.images)

    @property
    def support(self) -> Subset:
        return Subset(mask_of(i for i, v in enumerate(self.images, 1) if v), self.n)

    def is_theta(self):
        return not any(self.images)

    def __str__(self):
        return "".join(map(str, self.images))


def decorated_perms(n: int, override: bool = False) -> Iterator[DecoratedPermutation]:
    """All permutations of subsets of [n]; there are sum_k C(n,k) k! of them."""
    check_cap(n, override=override)
    for k in range(n + 1):
        for support in itertools.combinations(range(1, n + 1), k):
            for vals in itertools.permutations(support):
                imgs = [0] * n
                for pos, v in zip(support, vals):
                    imgs[pos - 1] = v
                yield DecoratedPermutation(tuple(imgs))


def decorated_count(n: int) -> int:
    return sum(comb(n, k) * factorial(k) for k in range(n + 1))


# ---------------------------------------------------------------- partitions

@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise InvalidArgument(f"{parts} is not a partition")

    @classmethod
    def of(cls, parts):
        return cls(tuple(sorted((p for p in parts if p > 0), reverse=True)))

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def union(self, other: "Partition") -> "Partition":
        return Partition.of(self.parts + other.parts)

    def z(self) -> int:
        """z_nu = prod_j j^{m_j} m_j!."""
        out = 1
        for j, m in Counter(self.parts).items():
            out *= j ** m * factorial(m)
        return out

    def key(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "0"

    @classmethod
    def from_key(cls, key: str) -> "Partition":
        if key in ("", "0"):
            return cls(())
        return cls.of(int(x) for x in key.split("+"))

    def __str__(self):
        return self.key()


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def multinomial(parts) -> int:
    out = factorial(sum(parts))
    for k in parts:
        out //= factorial(k)
    return out
