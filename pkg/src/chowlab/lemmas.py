"""Exhaustive checks of the permutation and word statistic identities:
DEX sums, MacMahon equidistribution and the shuffle formulas for inv and maj."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from .core.combinat import decorated_perms, elements_of, permutations
from .core.poly import UniPoly, q_multinomial
from .core.words import PLAIN, des, dex, dex_decorated, exc, inv, maj, perm_maj


@dataclass
class LemmaReport:
    name: str
    checked: int
    passed: bool
    counterexample: str = ""

    def to_json(self):
        return dict(self.__dict__)


def _run(name, cases) -> LemmaReport:
    count = 0
    for ok, what in cases:
        count += 1
        if not ok:
            return LemmaReport(name, count, False, what)
    return LemmaReport(name, count, True)


# ---------------------------------------------------------------- DEX

def dex_perm_check(n: int) -> LemmaReport:
    """sum DEX = maj - exc, and |DEX| = des minus one unless p(1) = 1."""
    def cases():
        for p in permutations(n):
            D = elements_of(dex(p).mask)
            want = des(p.images) - (0 if p(1) == 1 else 1)
            yield sum(D) == maj(p.images) - exc(p) and len(D) == want, str(p)
    return _run(f"dex_perm[n={n}]", cases())


def dex_decorated_check(n: int) -> LemmaReport:
    """The same identities on decorated permutations, with 0 below every letter."""
    def cases():
        for p in decorated_perms(n):
            D = elements_of(dex_decorated(p).mask)
            ok = sum(D) == perm_maj(p) - exc(p)
            if not p.is_theta():
                want = des(p.images) - (0 if p.images[0] in (0, 1) else 1)
                ok = ok and len(D) == want
            yield ok, str(p)
    return _run(f"dex_decorated[n={n}]", cases())


# ---------------------------------------------------------------- words

def compositions(total: int, max_parts: int) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first, max_parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def normalized_words(k: int) -> Tuple[Tuple[int, ...], ...]:
    """Words of length k whose letter set is {1..r} for some r (one per order type)."""
    if k == 0:
        return ((),)
    out = []
    for w in normalized_words(k - 1):
        r = max(w, default=0)
        # insert a new letter value v at the end, shifting letters >= v up
        for v in range(1, r + 2):
            out.append(tuple(a + 1 if a >= v else a for a in w) + (v,))
        for v in range(1, r + 1):
            out.append(w + (v,))
    return tuple(sorted(out))


def shuffle_distribution(words: Sequence[Sequence], stat: str) -> UniPoly:
    """sum of q^stat over all shuffles, by dynamic programming on prefixes.

    Shuffles are counted by position choice, as in the shuffle product.
    """
    words = [tuple(w) for w in words]
    m = len(words)
    lens = tuple(len(w) for w in words)

    @lru_cache(maxsize=None)
    def rec(state: Tuple[int, ...], last) -> dict:
        pos = sum(state)
        if pos == sum(lens):
            return {0: 1}
        out: dict = {}
        for k in range(m):
            if state[k] == lens[k]:
                continue
            x = words[k][state[k]]
            if stat == "maj":
                add = pos if (last is not None and last > x) else 0
            else:
                add = sum(1 for i in range(m) for y in words[i][:state[i]] if y > x)
            nxt = state[:k] + (state[k] + 1,) + state[k + 1:]
            for e, c in rec(nxt, x).items():
                out[e + add] = out.get(e + add, 0) + c
        return out

    return UniPoly(rec(tuple([0] * m), None))


def _closed_form(words, stat):
    f = inv if stat == "inv" else maj
    shift = sum(f(w, PLAIN) for w in words)
    return q_multinomial(tuple(len(w) for w in words)).shift(shift)


def macmahon_check(max_len: int = 7, max_blocks: int = 3) -> LemmaReport:
    """inv and maj are both q-multinomial over rearrangements of a multiset."""
    def cases():
        for N in range(1, max_len + 1):
            for ks in compositions(N, max_blocks):
                word = tuple(i for i, k in enumerate(ks, 1) for _ in range(k))
                perms = set(itertools.permutations(word))
                qi = UniPoly({})
                qm = UniPoly({})
                for w in perms:
                    qi = qi + UniPoly({inv(w, PLAIN): 1})
                    qm = qm + UniPoly({maj(w, PLAIN): 1})
                yield qi == qm == q_multinomial(ks), f"multiset {ks}"
    return _run("macmahon", cases())


def _separated(tuples_of_words):
    """Shift each word's letters so that block i lies entirely below block i+1."""
    out = []
    off = 0
    for w in tuples_of_words:
        out.append(tuple(a + off for a in w))
        off += max(w, default=0)
    return out


def increasing_shuffle_check(max_len: int = 7, max_blocks: int = 3) -> LemmaReport:
    """Weakly increasing, separated blocks: inv and maj give the q-multinomial."""
    def cases():
        for N in range(1, max_len + 1):
            for ks in compositions(N, max_blocks):
                choices = [[w for w in normalized_words(k) if list(w) == sorted(w)] for k in ks]
                for combo in itertools.product(*choices):
                    ws = _separated(combo)
                    target = q_multinomial(ks)
                    ok = (shuffle_distribution(ws, "inv") == target
                          and shuffle_distribution(ws, "maj") == target)
                    yield ok, f"blocks {ws}"
    return _run("increasing_shuffle", cases())


def shuffle_inv_check(max_len: int = 7, max_blocks: int = 3) -> LemmaReport:
    """Separated blocks in any order: inv picks up the inversions inside each block."""
    def cases():
        for N in range(1, max_len + 1):
            for ks in compositions(N, max_blocks):
                if len(ks) == 1:
                    continue
                for combo in itertools.product(*(list(normalized_words(k)) for k in ks)):
                    ws = _separated(combo)
                    yield shuffle_distribution(ws, "inv") == _closed_form(ws, "inv"), f"blocks {ws}"
    return _run("shuffle_inv", cases())


def disjoint_letter_blocks(ks: Sequence[int]) -> Iterator[list]:
    """Tuples of words of lengths ks on pairwise disjoint letter sets, one per order type."""
    N = sum(ks)
    for w in normalized_words(N):
        blocks, i = [], 0
        for k in ks:
            blocks.append(w[i:i + k])
            i += k
        sets = [set(b) for b in blocks]
        if all(not (sets[a] & sets[b]) for a in range(len(ks)) for b in range(a + 1, len(ks))):
            yield blocks


def shuffle_maj_check(max_len: int = 7, max_blocks: int = 3) -> LemmaReport:
    """Blocks on disjoint letter sets: maj picks up the major index of each block."""
    def cases():
        for N in range(1, max_len + 1):
            for ks in compositions(N, max_blocks):
                if len(ks) == 1:
                    continue
                for ws in disjoint_letter_blocks(ks):
                    yield shuffle_distribution(ws, "maj") == _closed_form(ws, "maj"), f"blocks {ws}"
    return _run("shuffle_maj", cases())
