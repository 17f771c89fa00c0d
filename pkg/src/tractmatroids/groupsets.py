"""Exact subsets of a tract's multiplicative group.

The axiom checkers reduce "does a scaling of this candidate circuit work?"
to intersecting per-coordinate solution sets.  Three shapes cover every
built-in tract: explicit finite sets, order downsets (tropical and
ultratriangle, where nullity only depends on the maximum), and circle sets
(phase).
"""

from __future__ import annotations

from dataclasses import dataclass

from .circular import CircleSet, turn


class GroupSubsetError(TypeError):
    pass


@dataclass(frozen=True)
class FiniteSubset:
    elems: frozenset

    def is_empty(self):
        return not self.elems

    def contains(self, tract, g):
        return g in self.elems

    def translate_left(self, tract, g):
        return FiniteSubset(frozenset(tract.gmul(g, x) for x in self.elems))

    def translate_right(self, tract, g):
        return FiniteSubset(frozenset(tract.gmul(x, g) for x in self.elems))

    def intersect(self, tract, other):
        if isinstance(other, FiniteSubset):
            return FiniteSubset(self.elems & other.elems)
        return FiniteSubset(
            frozenset(x for x in self.elems if other.contains(tract, x))
        )

    def pick(self, tract):
        return min(self.elems, key=tract.element_sort_key) if self.elems else None


@dataclass(frozen=True)
class DownSubset:
    """All group elements <= bound in the tract's total order."""

    bound: object

    def is_empty(self):
        return False

    def contains(self, tract, g):
        return g <= self.bound

    def translate_left(self, tract, g):
        return DownSubset(tract.gmul(g, self.bound))

    translate_right = translate_left

    def intersect(self, tract, other):
        if isinstance(other, DownSubset):
            return DownSubset(min(self.bound, other.bound))
        if isinstance(other, FiniteSubset):
            return other.intersect(tract, self)
        raise GroupSubsetError("incompatible solution sets")

    def pick(self, tract):
        return self.bound


@dataclass(frozen=True)
class CircleSubset:
    cs: CircleSet

    def is_empty(self):
        return self.cs.is_empty()

    def contains(self, tract, g):
        return self.cs.contains(g)

    def translate_left(self, tract, g):
        return CircleSubset(self.cs.rotate(turn(g)))

    translate_right = translate_left

    def intersect(self, tract, other):
        if isinstance(other, CircleSubset):
            return CircleSubset(self.cs.intersect(other.cs))
        if isinstance(other, FiniteSubset):
            return other.intersect(tract, self)
        raise GroupSubsetError("incompatible solution sets")

    def pick(self, tract):
        return self.cs.any_point()


EMPTY = FiniteSubset(frozenset())
