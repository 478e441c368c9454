"""Incremental exact row reduction over the rationals.

Vectors are sparse dicts mapping hashable, orderable keys to Fractions.  The
basis keeps its rows fully reduced (each row owns its pivot key, the smallest
key of the row, and no other row touches that key), so membership tests and
coordinates are deterministic and independent of insertion order history.
"""
from __future__ import annotations

from fractions import Fraction


def vec_add(u: dict, v: dict, scale=1) -> dict:
    """u + scale*v as sparse dicts, dropping zeros."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + scale * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_scale(u: dict, scale) -> dict:
    if not scale:
        return {}
    return {k: scale * x for k, x in u.items()}


class IncrementalBasis:
    """A growing reduced basis supporting rank, membership, and coordinates."""

    def __init__(self, track_combinations: bool = False):
        self.rows = []  # list of (pivot, vector) with vector[pivot] == 1
        self.pivots = {}  # pivot key -> row index
        self.track = track_combinations
        self.combos = []  # per row: dict add-index -> Fraction
        self.added = 0  # count of add() calls, successful or not

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _eliminate(self, vec: dict, combo=None):
        """Reduce vec against the stored rows; mutates nothing stored."""
        vec = {k: Fraction(x) for k, x in vec.items() if x}
        while True:
            hit = None
            for k in vec:
                r = self.pivots.get(k)
                if r is not None and (hit is None or k < hit[0]):
                    hit = (k, r)
            if hit is None:
                return vec, combo
            k, r = hit
            c = vec[k]
            vec = vec_add(vec, self.rows[r][1], -c)
            if combo is not None:
                combo = vec_add(combo, self.combos[r], -c)

    def residual(self, vec: dict) -> dict:
        """vec minus its projection onto the span; empty iff vec is in it."""
        return self._eliminate(vec)[0]

    def contains(self, vec: dict) -> bool:
        return not self.residual(vec)

    def add(self, vec: dict) -> bool:
        """Insert vec; True when it enlarged the span."""
        index = self.added
        self.added += 1
        combo = {index: Fraction(1)} if self.track else None
        vec, combo = self._eliminate(vec, combo)
        if not vec:
            return False
        pivot = min(vec)
        inv = Fraction(1, 1) / vec[pivot]
        vec = vec_scale(vec, inv)
        if combo is not None:
            combo = vec_scale(combo, inv)
        for r, (p, row) in enumerate(self.rows):
            c = row.get(pivot)
            if c:
                self.rows[r] = (p, vec_add(row, vec, -c))
                if self.track:
                    self.combos[r] = vec_add(self.combos[r], combo, -c)
        self.pivots[pivot] = len(self.rows)
        self.rows.append((pivot, vec))
        if self.track:
            self.combos.append(combo)
        return True

    def coordinates(self, vec: dict):
        """Coefficients over the stored rows (row index -> Fraction), or None.

        Well-defined because the rows are linearly independent.
        """
        vec = {k: Fraction(x) for k, x in vec.items() if x}
        coords = {}
        while vec:
            k = min(vec)
            r = self.pivots.get(k)
            if r is None:
                return None
            c = vec[k]
            coords[r] = c
            vec = vec_add(vec, self.rows[r][1], -c)
        return coords

    def combination(self, vec: dict):
        """Express vec over the original add() inputs (add index -> Fraction)."""
        if not self.track:
            raise RuntimeError("basis was built without combination tracking")
        coords = self.coordinates(vec)
        if coords is None:
            return None
        out = {}
        for r, c in coords.items():
            out = vec_add(out, self.combos[r], c)
        return out
