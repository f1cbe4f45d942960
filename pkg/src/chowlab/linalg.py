"""Sparse integer row echelon form with fraction-free elimination."""
from __future__ import annotations

from math import gcd
from typing import Dict


def _normalize(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


class RowEchelon:
    """Incremental echelon basis of a row space over the rationals.

    Rows are sparse dicts column -> int. Reduction multiplies by pivots rather
    than dividing, then strips the content, so entries stay integral.
    """

    def __init__(self):
        self.pivots: Dict[int, Dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Dict[int, int]) -> Dict[int, int]:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            a, b = row[c], piv[c]
            new = {k: b * v for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - a * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _normalize(new) if new else new
        return row

    def add(self, row: Dict[int, int]) -> bool:
        """Insert a row; True iff it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        r = _normalize(r)
        self.pivots[min(r)] = r
        return True
