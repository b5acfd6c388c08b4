"""Projective points with exact coordinates in canonical scaling."""
from __future__ import annotations

from fractions import Fraction


class ProjPoint:
    """Point of projective space; the first nonzero coordinate is scaled to 1."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords):
        coords = [Fraction(c) if isinstance(c, int) else c for c in coords]
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("projective point needs a nonzero coordinate")
        if lead != 1:
            inv = 1 / lead
            coords = [c * inv for c in coords]
        # rational-valued extension elements collapse to Fractions so that
        # equality and hashing do not depend on the ambient field
        self.coords = tuple(
            c.to_rational() if hasattr(c, "is_rational") and c.is_rational() else c for c in coords
        )
        self._hash = None

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def is_rational(self):
        return all(isinstance(c, Fraction) for c in self.coords)

    def transform(self, matrix):
        """Image under a matrix acting on column vectors."""
        return ProjPoint([sum((a * x for a, x in zip(row, self.coords)), Fraction(0)) for row in matrix])

    def scaled_to(self, index):
        """Coordinates rescaled so that coordinate ``index`` equals 1."""
        c = self.coords[index]
        if not c:
            raise ValueError(f"coordinate {index} vanishes")
        inv = 1 / c
        return [x * inv for x in self.coords]

    def __repr__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"

    __str__ = __repr__


def orbit(point, matrices, bound=None):
    """Closure of ``{point}`` under the given matrices (projective action)."""
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for m in matrices:
                q = p.transform(m)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if bound is not None and len(seen) > bound:
                        raise ValueError(f"orbit exceeds {bound} points")
        frontier = nxt
    return seen
