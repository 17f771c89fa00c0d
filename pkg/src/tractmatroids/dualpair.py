"""Orthogonality, dual pairs, cocircuit synthesis, duality and minors.

The pairing of a left vector X against a right vector Y is the formal sum
of X(e) * conj(Y(e)) over the common support, in that order; the two sided
variants reverse every product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .matroids import MatroidError, SupportMatroid
from .plucker import PluckerMap, coords_from_signature, dual_coords
from .results import CheckResult
from .signatures import (
    Side,
    Signature,
    SignatureError,
    TVector,
    check_signature,
    underlying,
)
from .tracts import FormalSum, TractError, TractValue

__all__ = [
    "dot",
    "is_orthogonal",
    "DualPair",
    "check_dual_pair",
    "cocircuits_constructive",
    "cocircuits_by_orthogonality",
    "DualBundle",
    "dual_tmatroid",
    "minors",
    "vectors",
    "covectors",
    "is_perfect_instance",
]


def dot(X: TVector, Y: TVector, reverse: bool = False) -> FormalSum:
    """Formal sum of entrywise products over the common support."""
    if X.tract != Y.tract:
        raise TractError("pairing across tracts")
    if tuple(X.ground) != tuple(Y.ground):
        raise TractError("pairing across ground sets")
    terms = []
    for e in sorted(X.support & Y.support):
        if reverse:
            terms.append(Y[e].conj() * X[e])
        else:
            terms.append(X[e] * Y[e].conj())
    return FormalSum.from_values(X.tract, terms)


def is_orthogonal(X: TVector, Y: TVector, reverse: bool = False) -> bool:
    return dot(X, Y, reverse=reverse).is_null()


@dataclass(frozen=True)
class DualPair:
    """A left signature of N together with a right signature of N*."""

    C: Signature
    D: Signature
    matroid: SupportMatroid

    def validate(self) -> CheckResult:
        if self.C.side is not Side.LEFT or self.D.side is not Side.RIGHT:
            return CheckResult.failed("sides must be (left, right)")
        res = check_signature(self.C, self.matroid)
        if not res:
            return CheckResult.failed("circuit side: %s" % res.witness)
        res = check_signature(self.D, self.matroid.dual())
        if not res:
            return CheckResult.failed("cocircuit side: %s" % res.witness)
        return CheckResult.passed()


def check_dual_pair(dp: DualPair, mode: str = "strong") -> CheckResult:
    """Full orthogonality for the strong pair, 3-orthogonality for the weak.

    Nullity of the pairing is stable under scaling each side by its own
    scalar action, so checking class representatives decides every pair.
    """
    if mode not in ("strong", "weak"):
        raise ValueError("mode must be 'strong' or 'weak'")
    res = dp.validate()
    if not res:
        return res
    for X in dp.C.reps:
        for Y in dp.D.reps:
            overlap = len(X.support & Y.support)
            if mode == "weak" and overlap > 3:
                continue
            if not is_orthogonal(X, Y):
                return CheckResult.failed(
                    "classes with supports %s and %s are not orthogonal"
                    % (sorted(X.support), sorted(Y.support))
                )
    return CheckResult.passed()


# ---------------------------------------------------------------------------
# cocircuit synthesis


def _witness_class(sig: Signature, m: SupportMatroid, A: frozenset, e, f) -> TVector:
    circuit = [c for c in m.circuits if c <= A | {e, f}]
    if len(circuit) != 1:
        raise SignatureError(
            "no unique circuit through %s, %s over %s" % (e, f, sorted(A))
        )
    X = sig.class_of(circuit[0])
    if X is None or not {e, f} <= X.support:
        raise SignatureError("missing circuit class on %s" % (sorted(circuit[0]),))
    return X


def _ratio(sig: Signature, X: TVector, e, f) -> TractValue:
    # X(e)^{-1} X(f) for left signatures, X(f) X(e)^{-1} for right ones
    if sig.side is Side.LEFT:
        return X[e].inv() * X[f]
    return X[f] * X[e].inv()


def _coratio(sig: Signature, W: TVector, e, f) -> TractValue:
    # W(e) W(f)^{-1} when the primal is left, W(f)^{-1} W(e) when right
    if sig.side is Side.LEFT:
        return W[e] * W[f].inv()
    return W[f].inv() * W[e]


def cocircuits_constructive(sig: Signature) -> Signature:
    """Cocircuit signature of the opposite side, built per cocircuit from the
    fundamental circuits over a fixed independent complement.

    The defining ratios are verified over every element pair of every
    cocircuit; an inconsistency means the input was not a weak matroid.
    """
    m = underlying(sig)
    out = []
    for D in sorted(m.dual().circuits, key=sorted):
        A = m.max_independent_subset(frozenset(m.ground) - D)
        e0 = min(D)
        entries = {e0: sig.tract.one_value()}
        for f in sorted(D - {e0}):
            X = _witness_class(sig, m, A, e0, f)
            # W(e0) W(f)^{-1} = -conj(X(e0)^{-1} X(f)) pinned at W(e0) = 1
            entries[f] = -_ratio(sig, X, f, e0).conj()
        W = TVector(sig.tract, m.ground, entries)
        for e, f in itertools.permutations(sorted(D), 2):
            X = _witness_class(sig, m, A, e, f)
            lhs = _coratio(sig, W, e, f)
            if lhs != -_ratio(sig, X, e, f).conj():
                raise SignatureError(
                    "cocircuit ratios are inconsistent on %s at (%s, %s)"
                    % (sorted(D), e, f)
                )
        out.append(W)
    return Signature(sig.tract, sig.ground, sig.side.flipped, out)


def cocircuits_by_orthogonality(sig: Signature) -> Signature:
    """Minimal-support nonzero vectors orthogonal to every circuit scaling,
    by enumeration; available on finite tracts only."""
    t = sig.tract
    elems = t.elements()
    if elems is None:
        raise TractError("orthogonality enumeration needs a finite tract")
    m = underlying(sig)
    scalings = [
        X.scaled(TractValue(t, a), sig.side) for X in sig.reps for a in elems
    ]
    reverse = sig.side is Side.RIGHT
    found = []
    for D in sorted(m.dual().circuits, key=sorted):
        for support_size in range(1, len(D) + 1):
            hits = []
            for S in itertools.combinations(sorted(D), support_size):
                for combo in itertools.product(elems, repeat=support_size):
                    Y = TVector(
                        t,
                        m.ground,
                        {e: TractValue(t, g) for e, g in zip(S, combo)},
                    )
                    if all(is_orthogonal(X, Y, reverse=reverse) for X in scalings):
                        hits.append(Y)
            if hits:
                if support_size != len(D):
                    raise SignatureError(
                        "orthogonal vector with support strictly inside %s"
                        % (sorted(D),)
                    )
                found.extend(hits)
                break
    return Signature(t, sig.ground, sig.side.flipped, found)


@dataclass(frozen=True)
class DualBundle:
    cocircuits: Signature
    coords: PluckerMap
    matroid: SupportMatroid


def dual_tmatroid(sig: Signature) -> DualBundle:
    """Dual cocircuit signature, dual coordinates and dual matroid, with the
    coordinate cross-check and the rank relation enforced."""
    m = underlying(sig)
    co = cocircuits_constructive(sig)
    pm = coords_from_signature(sig, m)
    dpm = dual_coords(pm)
    md = m.dual()
    if underlying(co) != md:
        raise SignatureError("cocircuit supports do not match the dual matroid")
    if coords_from_signature(co, md) != dpm:
        raise SignatureError("dual coordinates disagree with the cocircuit classes")
    if md.rank() != len(m.ground) - m.rank():
        raise MatroidError("dual rank relation fails")
    return DualBundle(co, dpm, md)


# ---------------------------------------------------------------------------
# minors


def minors(sig: Signature, delete=(), contract=()) -> Signature:
    """Deletion then contraction of the given disjoint label sets."""
    delete = frozenset(str(x) for x in delete)
    contract = frozenset(str(x) for x in contract)
    if delete & contract:
        raise SignatureError("delete and contract sets overlap")
    ground = [e for e in sig.ground if e not in delete]
    kept = [X.restrict(ground) for X in sig.reps if not X.support & delete]
    if contract:
        ground2 = [e for e in ground if e not in contract]
        traces = [X.restrict(ground2) for X in kept]
        traces = [X for X in traces if not X.is_zero]
        supports = {X.support for X in traces}
        minimal = [
            X
            for X in traces
            if not any(s < X.support for s in supports)
        ]
        by_support = {}
        for X in minimal:
            by_support.setdefault(X.support, []).append(X.normalized(sig.side))
        for S, group in sorted(by_support.items(), key=lambda kv: sorted(kv[0])):
            if len(set(group)) > 1:
                raise SignatureError(
                    "contraction produced conflicting classes on %s" % (sorted(S),)
                )
        kept = [group[0] for _, group in sorted(by_support.items(), key=lambda kv: sorted(kv[0]))]
        ground = ground2
    return Signature(sig.tract, ground, sig.side, kept)


# ---------------------------------------------------------------------------
# vectors, covectors, perfection


def _space(tract, ground, alphabet):
    pools = [[tract.zero()] + [TractValue(tract, g) for g in alphabet]] * len(ground)
    for combo in itertools.product(*pools):
        yield TVector(tract, ground, combo)


def _alphabet(sig: Signature, alphabet) -> tuple:
    if alphabet is not None:
        return tuple(sig.tract.validate_element(g) for g in alphabet)
    elems = sig.tract.elements()
    if elems is None:
        raise TractError(
            "vector enumeration over an infinite tract needs an explicit alphabet"
        )
    return elems


def vectors(sig: Signature, alphabet=None) -> tuple:
    """All enumerated V with V orthogonal to every cocircuit scaling."""
    t = sig.tract
    alpha = _alphabet(sig, alphabet)
    co = cocircuits_constructive(sig)
    scal = t.elements() or alpha
    cos = [Y.scaled(TractValue(t, a), co.side) for Y in co.reps for a in scal]
    reverse = sig.side is Side.RIGHT
    out = []
    for V in _space(t, sig.ground, alpha):
        if all(is_orthogonal(V, Y, reverse=reverse) for Y in cos):
            out.append(V)
    return tuple(out)


def covectors(sig: Signature, alphabet=None) -> tuple:
    """All enumerated U with every circuit scaling orthogonal to U."""
    t = sig.tract
    alpha = _alphabet(sig, alphabet)
    scal = t.elements() or alpha
    cs = [X.scaled(TractValue(t, a), sig.side) for X in sig.reps for a in scal]
    reverse = sig.side is Side.RIGHT
    out = []
    for U in _space(t, sig.ground, alpha):
        if all(is_orthogonal(X, U, reverse=reverse) for X in cs):
            out.append(U)
    return tuple(out)


def is_perfect_instance(sig: Signature, alphabet=None) -> bool:
    """Do the vector and covector sets pair to null throughout?"""
    reverse = sig.side is Side.RIGHT
    vs = vectors(sig, alphabet)
    us = covectors(sig, alphabet)
    return all(is_orthogonal(V, U, reverse=reverse) for V in vs for U in us)
