"""Word statistics over explicitly ordered alphabets, and shuffles."""
from __future__ import annotations

import math
from typing import Iterator, NamedTuple, Sequence, Tuple

from .combinat import DecoratedPermutation, Permutation, Subset, mask_of

INF = math.inf


class Bar(NamedTuple):
    """A barred letter."""
    value: int

    def __str__(self):
        return f"{self.value}̄"


class Order:
    """A total order on letters, given by a sort key."""

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return f"Order({self.name})"


def _plain_key(a):
    if isinstance(a, Bar):
        raise TypeError("barred letter in plain order")
    return a


def _barred_key(a):
    # 1bar < ... < nbar < 1 < ... < n
    if isinstance(a, Bar):
        return (0, a.value)
    if a == 0:
        raise TypeError("0 is not a letter of the barred order")
    return (1, a)


def _barred_zero_key(a):
    # 1bar < ... < nbar < 0 < 1 < ... < n
    if isinstance(a, Bar):
        return (0, a.value)
    if a == 0:
        return (1, 0)
    return (2, a)


PLAIN = Order("plain", _plain_key)
BARRED = Order("barred", _barred_key)
BARRED_ZERO = Order("barred-with-0", _barred_zero_key)


def des_positions(word: Sequence, order: Order = PLAIN) -> Tuple[int, ...]:
    keys = [order.key(a) for a in word]
    return tuple(i for i in range(1, len(keys)) if keys[i - 1] > keys[i])


def des_set(word: Sequence, order: Order = PLAIN) -> Subset:
    n = max(len(word) - 1, 0)
    return Subset(mask_of(des_positions(word, order)), n)


def des(word, order: Order = PLAIN) -> int:
    return len(des_positions(word, order))


def maj(word, order: Order = PLAIN) -> int:
    return sum(des_positions(word, order))


def inv(word, order: Order = PLAIN) -> int:
    keys = [order.key(a) for a in word]
    count = 0
    for i in range(len(keys)):
        ki = keys[i]
        for j in range(i + 1, len(keys)):
            if ki > keys[j]:
                count += 1
    return count


# ---------------------------------------------------------------- excedances

def exc_positions(p: Permutation | DecoratedPermutation) -> Tuple[int, ...]:
    return tuple(i for i, v in enumerate(p.images, 1) if v > i)


def exc_set(p) -> Subset:
    return Subset(mask_of(exc_positions(p)), p.n)


def exc(p) -> int:
    if isinstance(p, DecoratedPermutation) and p.is_theta():
        return -1
    return len(exc_positions(p))


def perm_maj(p) -> int:
    """maj of the one-line word; -1 for the empty decorated permutation."""
    if isinstance(p, DecoratedPermutation) and p.is_theta():
        return -1
    return maj(p.images)


def barred_word(p) -> tuple:
    return tuple(Bar(v) if v > i else v for i, v in enumerate(p.images, 1))


def dex(p: Permutation) -> Subset:
    return Subset(mask_of(des_positions(barred_word(p), BARRED)), max(p.n - 1, 0))


def dex_decorated(p: DecoratedPermutation) -> Subset:
    n1 = max(p.n - 1, 0)
    if p.is_theta():
        return Subset(0, n1)
    return Subset(mask_of(des_positions(barred_word(p), BARRED_ZERO)), n1)


# ---------------------------------------------------------------- shuffles

def shuffles(*words: Sequence) -> Iterator[tuple]:
    """All interleavings of the words, counted by position choice.

    Equal letters in different words still give distinct shuffles, so the
    number produced is the multinomial coefficient of the lengths.
    """
    words = [tuple(w) for w in words if len(w)]
    total = sum(len(w) for w in words)
    idx = [0] * len(words)
    buf = []

    def rec():
        if len(buf) == total:
            yield tuple(buf)
            return
        for k, w in enumerate(words):
            if idx[k] < len(w):
                buf.append(w[idx[k]])
                idx[k] += 1
                yield from rec()
                idx[k] -= 1
                buf.pop()

    yield from rec()
