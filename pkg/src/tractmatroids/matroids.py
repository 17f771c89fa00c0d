"""Plain matroids given by their circuit supports.

Everything is exhaustive-search based and desk scale (ground sets of at most
eight or so elements); correctness and determinism win over speed.  Ground
elements are strings and are kept in lexicographic order.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable

from .results import CheckResult

__all__ = [
    "MatroidError",
    "SupportMatroid",
    "check_matroid_circuits",
    "uniform_matroid",
]


class MatroidError(ValueError):
    pass


def _freeze(circuits) -> frozenset:
    return frozenset(frozenset(c) for c in circuits)


def check_matroid_circuits(ground, circuits) -> CheckResult:
    """Nonempty, pairwise incomparable, and weak circuit elimination."""
    ground = frozenset(ground)
    circuits = _freeze(circuits)
    for c in circuits:
        if not c:
            return CheckResult.failed("empty circuit")
        if not c <= ground:
            return CheckResult.failed("circuit %s leaves the ground set" % (sorted(c),))
    for c1, c2 in itertools.combinations(circuits, 2):
        if c1 <= c2 or c2 <= c1:
            return CheckResult.failed(
                "comparable circuits %s, %s" % (sorted(c1), sorted(c2))
            )
    for c1, c2 in itertools.permutations(circuits, 2):
        for e in c1 & c2:
            rest = (c1 | c2) - {e}
            if not any(c3 <= rest for c3 in circuits):
                return CheckResult.failed(
                    "elimination fails for %s, %s at %s" % (sorted(c1), sorted(c2), e)
                )
    return CheckResult.passed()


class SupportMatroid:
    """Matroid presented by ground set and circuits."""

    def __init__(self, ground: Iterable[str], circuits: Iterable[Iterable[str]], check: bool = True):
        self.ground = tuple(sorted(set(str(e) for e in ground)))
        self.circuits = _freeze(circuits)
        self._rank_cache = {}
        if check:
            res = check_matroid_circuits(self.ground, self.circuits)
            if not res:
                raise MatroidError(res.witness)

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, SupportMatroid)
            and self.ground == other.ground
            and self.circuits == other.circuits
        )

    def __hash__(self):
        return hash((self.ground, self.circuits))

    def __repr__(self):
        return "SupportMatroid(%s; %d circuits)" % (",".join(self.ground), len(self.circuits))

    def _check_subset(self, A) -> frozenset:
        A = frozenset(A)
        if not A <= set(self.ground):
            raise MatroidError("elements %s not in ground set" % (sorted(A - set(self.ground)),))
        return A

    # -- independence and rank ---------------------------------------------
    def is_independent(self, A) -> bool:
        A = frozenset(A)
        return not any(c <= A for c in self.circuits)

    def rank(self, A=None) -> int:
        A = frozenset(self.ground) if A is None else self._check_subset(A)
        try:
            return self._rank_cache[A]
        except KeyError:
            pass
        r = 0
        for k in range(len(A), -1, -1):
            if any(self.is_independent(S) for S in itertools.combinations(sorted(A), k)):
                r = k
                break
        self._rank_cache[A] = r
        return r

    def nullity(self, A=None) -> int:
        A = frozenset(self.ground) if A is None else frozenset(A)
        return len(A) - self.rank(A)

    @cached_property
    def bases(self) -> frozenset:
        r = self.rank()
        return frozenset(
            frozenset(B)
            for B in itertools.combinations(self.ground, r)
            if self.is_independent(B)
        )

    def is_basis(self, B) -> bool:
        return frozenset(B) in self.bases

    def max_independent_subset(self, A) -> frozenset:
        """Lexicographically greedy maximal independent subset of A."""
        A = self._check_subset(A)
        out = set()
        for e in self.ground:
            if e in A and self.is_independent(out | {e}):
                out.add(e)
        return frozenset(out)

    def complete_to_basis(self, indep) -> frozenset:
        indep = self._check_subset(indep)
        if not self.is_independent(indep):
            raise MatroidError("set %s is dependent" % (sorted(indep),))
        out = set(indep)
        for e in self.ground:
            if len(out) == self.rank():
                break
            if self.is_independent(out | {e}):
                out.add(e)
        if len(out) != self.rank():
            raise MatroidError("could not complete %s to a basis" % (sorted(indep),))
        return frozenset(out)

    def spanning_completion(self, A) -> frozenset:
        """Lex-least J inside A, of minimal size, with (E - A) + J spanning."""
        A = self._check_subset(A)
        rest = frozenset(self.ground) - A
        need = self.rank() - self.rank(rest)
        for J in itertools.combinations(sorted(A), need):
            if self.rank(rest | set(J)) == self.rank():
                return frozenset(J)
        raise MatroidError("no spanning completion inside %s" % (sorted(A),))

    # -- circuits and cocircuits ---------------------------------------------
    def fundamental_circuit(self, e, B) -> frozenset:
        B = self._check_subset(B)
        if not self.is_basis(B):
            raise MatroidError("%s is not a basis" % (sorted(B),))
        if e in B:
            raise MatroidError("%s already lies in the basis" % (e,))
        cands = [c for c in self.circuits if c <= B | {e}]
        if len(cands) != 1:
            raise MatroidError("no unique circuit in %s + %s" % (sorted(B), e))
        return cands[0]

    def fundamental_cocircuit(self, e, B) -> frozenset:
        B = self._check_subset(B)
        if not self.is_basis(B):
            raise MatroidError("%s is not a basis" % (sorted(B),))
        if e not in B:
            raise MatroidError("%s is outside the basis" % (e,))
        return self.dual().fundamental_circuit(e, frozenset(self.ground) - B)

    @cached_property
    def cocircuits(self) -> frozenset:
        # minimal nonempty sets meeting every basis
        found = []
        for k in range(1, len(self.ground) + 1):
            for S in itertools.combinations(self.ground, k):
                S = frozenset(S)
                if any(T <= S for T in found):
                    continue
                if all(S & B for B in self.bases):
                    found.append(S)
        return frozenset(found)

    # -- duality and minors ---------------------------------------------------
    def dual(self) -> "SupportMatroid":
        return SupportMatroid(self.ground, self.cocircuits, check=False)

    def delete(self, A) -> "SupportMatroid":
        A = self._check_subset(A)
        keep = [e for e in self.ground if e not in A]
        return SupportMatroid(keep, [c for c in self.circuits if not c & A], check=False)

    def contract(self, A) -> "SupportMatroid":
        A = self._check_subset(A)
        keep = [e for e in self.ground if e not in A]
        traces = [c - A for c in self.circuits if c - A]
        minimal = [c for c in traces if not any(d < c for d in traces)]
        return SupportMatroid(keep, minimal, check=False)

    # -- adjacency ------------------------------------------------------------
    @cached_property
    def adjacent_bases(self) -> tuple:
        out = [
            (B, B2)
            for B in sorted(self.bases, key=sorted)
            for B2 in sorted(self.bases, key=sorted)
            if len(B - B2) == 1
        ]
        return tuple(out)

    # -- modularity -------------------------------------------------------------
    def is_modular_pair(self, C1, C2) -> bool:
        return self.is_modular_family([C1, C2])

    def is_modular_family(self, circuits) -> bool:
        circuits = [frozenset(c) for c in circuits]
        for c in circuits:
            if c not in self.circuits:
                raise MatroidError("%s is not a circuit" % (sorted(c),))
        if len(set(circuits)) != len(circuits):
            return False
        union = frozenset().union(*circuits)
        return self.nullity(union) == len(circuits)

    def lattice_height(self, A) -> int:
        """Height of A in the lattice of unions of circuits, by chain search."""
        A = self._check_subset(A)
        inside = [c for c in self.circuits if c <= A]
        if frozenset().union(frozenset(), *inside) != A:
            raise MatroidError("%s is not a union of circuits" % (sorted(A),))
        nodes = set()
        for k in range(len(inside) + 1):
            for S in itertools.combinations(inside, k):
                nodes.add(frozenset().union(frozenset(), *S))
        height = {}
        for x in sorted(nodes, key=lambda s: (len(s), sorted(s))):
            below = [height[y] for y in nodes if y < x and y in height]
            height[x] = 1 + max(below) if below else 0
        return height[A]


def uniform_matroid(r: int, labels: Iterable[str]) -> SupportMatroid:
    labels = sorted(str(x) for x in labels)
    if r >= len(labels):
        return SupportMatroid(labels, [], check=False)
    return SupportMatroid(labels, itertools.combinations(labels, r + 1), check=False)
