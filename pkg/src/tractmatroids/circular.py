"""Exact subsets of the rational circle.

Angles are fractions of a full turn, reduced mod 1.  A set is stored as a
finite collection of points plus open counterclockwise arcs ``(a, b)``; the
degenerate arc ``(a, a)`` denotes the whole circle minus the point ``a``.
All arithmetic is over ``fractions.Fraction``, so membership, union and
intersection are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

HALF = Fraction(1, 2)


def turn(x) -> Fraction:
    """Reduce an angle to the canonical representative in [0, 1)."""
    return Fraction(x) % 1


def _arc_contains(a: Fraction, b: Fraction, x: Fraction) -> bool:
    span = (b - a) % 1
    off = (x - a) % 1
    if span == 0:  # punctured circle
        return off != 0
    return 0 < off < span


@dataclass(frozen=True)
class CircleSet:
    """Canonical finite union of points and open arcs on the circle."""

    full: bool
    points: frozenset
    arcs: tuple

    @staticmethod
    def empty() -> "CircleSet":
        return _EMPTY

    @staticmethod
    def whole() -> "CircleSet":
        return _FULL

    @staticmethod
    def build(points, arcs) -> "CircleSet":
        """Canonicalize an arbitrary collection of points and open arcs."""
        pts = [turn(p) for p in points]
        raw = [(turn(a), turn(b)) for a, b in arcs]

        def member(x):
            return x in pts or any(_arc_contains(a, b, x) for a, b in raw)

        bounds = sorted(set(pts) | {a for a, _ in raw} | {b for _, b in raw})
        if not bounds:
            return _EMPTY
        return _from_atoms(bounds, member)

    def contains(self, x) -> bool:
        x = turn(x)
        if self.full:
            return True
        return x in self.points or any(_arc_contains(a, b, x) for a, b in self.arcs)

    def is_empty(self) -> bool:
        return not self.full and not self.points and not self.arcs

    def union(self, other: "CircleSet") -> "CircleSet":
        if self.full or other.full:
            return _FULL
        return CircleSet.build(
            tuple(self.points) + tuple(other.points), self.arcs + other.arcs
        )

    def intersect(self, other: "CircleSet") -> "CircleSet":
        if self.full:
            return other
        if other.full:
            return self
        bounds = sorted(
            set(self.points)
            | set(other.points)
            | {e for arc in self.arcs + other.arcs for e in arc}
        )
        if not bounds:
            return _EMPTY
        return _from_atoms(bounds, lambda x: self.contains(x) and other.contains(x))

    def rotate(self, d) -> "CircleSet":
        if self.full:
            return self
        d = Fraction(d)
        return CircleSet(
            False,
            frozenset(turn(p + d) for p in self.points),
            tuple(sorted((turn(a + d), turn(b + d)) for a, b in self.arcs)),
        )

    def any_point(self):
        """A deterministic member, or None when empty."""
        if self.full:
            return Fraction(0)
        if self.points:
            return min(self.points)
        if self.arcs:
            a, b = min(self.arcs)
            span = (b - a) % 1
            if span == 0:
                span = Fraction(1)
            return turn(a + span / 2)
        return None


def _from_atoms(bounds, member) -> CircleSet:
    # Atoms alternate boundary points and the open gaps between them; the
    # membership of a gap is decided at its midpoint.
    n = len(bounds)
    atoms = []  # (kind, payload, member?)
    for i, b in enumerate(bounds):
        nxt = bounds[(i + 1) % n]
        gap = (nxt - b) % 1
        if gap == 0:
            gap = Fraction(1)  # single boundary point: the gap is the rest
        mid = turn(b + gap / 2)
        atoms.append(("pt", b, member(b)))
        atoms.append(("gap", (b, nxt), member(mid)))

    if all(m for _, _, m in atoms):
        return _FULL
    if not any(m for _, _, m in atoms):
        return _EMPTY

    # Rotate so the walk starts at a non-member atom, then collect runs.
    k = next(i for i, (_, _, m) in enumerate(atoms) if not m)
    atoms = atoms[k:] + atoms[:k]
    points, arcs = [], []
    run = []
    for kind, payload, m in atoms + [("pt", None, False)]:
        if m:
            run.append((kind, payload))
            continue
        if run:
            if all(kind == "pt" for kind, _ in run):
                points.extend(p for _, p in run)
            else:
                start = run[0][1][0] if run[0][0] == "gap" else run[0][1]
                last = run[-1]
                end = last[1][1] if last[0] == "gap" else last[1]
                if run[0][0] == "pt":
                    points.append(run[0][1])
                    start = run[1][1][0]
                if last[0] == "pt":
                    points.append(last[1])
                    end = run[-2][1][1]
                arcs.append((start, end))
            run = []
    return CircleSet(False, frozenset(points), tuple(sorted(set(arcs))))


_EMPTY = CircleSet(False, frozenset(), ())
_FULL = CircleSet(True, frozenset(), ())
