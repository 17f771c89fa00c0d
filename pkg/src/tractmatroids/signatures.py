"""Tract-valued circuit signatures and the modular elimination axioms.

A signature stores one normalized representative per projective circuit
class: for the left scalar action the representative has entry 1 at its
least support element after left scaling, for the right action after right
scaling.  The weak axiom eliminates over modular pairs, the strong axiom
over arbitrary modular families; both searches are exact, with candidate
scalings solved coordinate-wise through the tract's null-completion sets.
"""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Iterable, Optional

from .matroids import MatroidError, SupportMatroid, check_matroid_circuits
from .results import CheckResult
from .tracts import FormalSum, Tract, TractError, TractHomomorphism, TractValue

__all__ = [
    "Side",
    "TVector",
    "Signature",
    "SignatureError",
    "membership",
    "check_signature",
    "check_weak_circuits",
    "check_strong_circuits",
    "rescale",
    "pushforward",
    "underlying",
]


class SignatureError(ValueError):
    pass


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def flipped(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class TVector:
    """Total map from a ground set into a tract."""

    __slots__ = ("tract", "ground", "entries", "_supp")

    def __init__(self, tract: Tract, ground, entries):
        self.tract = tract
        self.ground = tuple(ground)
        if isinstance(entries, dict):
            vals = []
            for e in self.ground:
                v = entries.get(e, tract.zero())
                vals.append(v)
            entries = vals
        entries = tuple(entries)
        if len(entries) != len(self.ground):
            raise SignatureError("vector is not total on the ground set")
        for v in entries:
            if not isinstance(v, TractValue) or v.tract != tract:
                raise TractError("foreign entry in vector over %s" % tract.name)
        self.entries = entries
        self._supp = frozenset(
            e for e, v in zip(self.ground, entries) if not v.is_zero
        )

    def __getitem__(self, e) -> TractValue:
        return self.entries[self.ground.index(e)]

    @property
    def support(self) -> frozenset:
        return self._supp

    @property
    def is_zero(self) -> bool:
        return not self._supp

    def scale_left(self, a: TractValue) -> "TVector":
        return TVector(self.tract, self.ground, tuple(a * v for v in self.entries))

    def scale_right(self, a: TractValue) -> "TVector":
        return TVector(self.tract, self.ground, tuple(v * a for v in self.entries))

    def scaled(self, a: TractValue, side: Side) -> "TVector":
        return self.scale_left(a) if side is Side.LEFT else self.scale_right(a)

    def normalized(self, side: Side) -> "TVector":
        """Unit entry at the least support element."""
        if self.is_zero:
            raise SignatureError("cannot normalize the zero vector")
        e0 = min(self._supp)
        return self.scaled(self[e0].inv(), side)

    def conj(self) -> "TVector":
        return TVector(self.tract, self.ground, tuple(v.conj() for v in self.entries))

    def restrict(self, keep) -> "TVector":
        keep = [e for e in self.ground if e in set(keep)]
        return TVector(self.tract, keep, tuple(self[e] for e in keep))

    def push(self, hom: TractHomomorphism) -> "TVector":
        return TVector(
            hom.target, self.ground, tuple(hom.apply(v) for v in self.entries)
        )

    def __eq__(self, other):
        return (
            isinstance(other, TVector)
            and self.tract == other.tract
            and self.ground == other.ground
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.tract, self.ground, self.entries))

    def __repr__(self):
        body = ", ".join(self.tract.format_value(v) for v in self.entries)
        return "(%s)" % body


class Signature:
    """Projective circuit classes of one side over a ground set."""

    def __init__(self, tract: Tract, ground, side: Side, reps: Iterable[TVector]):
        self.tract = tract
        self.ground = tuple(sorted(set(str(e) for e in ground)))
        self.side = side
        norm = []
        for X in reps:
            if X.tract != tract:
                raise TractError("representative over a foreign tract")
            if tuple(X.ground) != self.ground:
                if any(e not in self.ground for e in X.support):
                    raise SignatureError("vector supported outside the ground set")
                X = TVector(tract, self.ground, {e: X[e] for e in X.ground})
            if X.is_zero:
                raise SignatureError("zero vector cannot be a circuit")
            norm.append(X.normalized(side))
        norm = sorted(set(norm), key=lambda X: (sorted(X.support), repr(X)))
        self.reps = tuple(norm)

    @classmethod
    def from_vectors(cls, tract, ground, side, vectors) -> "Signature":
        return cls(tract, ground, side, vectors)

    @property
    def supports(self) -> frozenset:
        return frozenset(X.support for X in self.reps)

    def class_of(self, support) -> Optional[TVector]:
        support = frozenset(support)
        for X in self.reps:
            if X.support == support:
                return X
        return None

    def __eq__(self, other):
        return (
            isinstance(other, Signature)
            and self.tract == other.tract
            and self.ground == other.ground
            and self.side == other.side
            and self.reps == other.reps
        )

    def __hash__(self):
        return hash((self.tract, self.ground, self.side, self.reps))

    def __repr__(self):
        return "Signature(%s, %s, %d classes)" % (
            self.tract.name,
            self.side.value,
            len(self.reps),
        )


def membership(sig: Signature, X: TVector) -> bool:
    """Is X a scaling (on the signature's side) of a stored class?"""
    if X.tract != sig.tract:
        raise TractError("membership test across tracts")
    if tuple(X.ground) != sig.ground or X.is_zero:
        return False
    cand = sig.class_of(X.support)
    return cand is not None and X.normalized(sig.side) == cand


def underlying(sig: Signature) -> SupportMatroid:
    """The matroid whose circuits are the class supports."""
    res = check_matroid_circuits(sig.ground, sig.supports)
    if not res:
        raise MatroidError("supports are not matroid circuits: %s" % res.witness)
    return SupportMatroid(sig.ground, sig.supports, check=False)


def check_signature(sig: Signature, m: SupportMatroid) -> CheckResult:
    """Signature axioms against a given matroid: nonzero classes, one class
    per support, supports exactly the circuits."""
    if tuple(m.ground) != sig.ground:
        return CheckResult.failed("ground sets differ")
    seen = {}
    for X in sig.reps:
        if X.is_zero:
            return CheckResult.failed("zero vector among representatives")
        if X.support in seen:
            return CheckResult.failed(
                "two classes share support %s" % (sorted(X.support),)
            )
        seen[X.support] = X
    for c1, c2 in itertools.combinations(seen, 2):
        if c1 < c2 or c2 < c1:
            return CheckResult.failed(
                "comparable supports %s, %s" % (sorted(c1), sorted(c2))
            )
    if sig.supports != m.circuits:
        missing = sorted(sorted(c) for c in m.circuits - sig.supports)
        extra = sorted(sorted(c) for c in sig.supports - m.circuits)
        return CheckResult.failed(
            "supports do not match circuits (missing %s, extra %s)" % (missing, extra)
        )
    return CheckResult.passed()


# ---------------------------------------------------------------------------
# modular elimination


def _value_terms(vectors, f):
    return [X[f] for X in vectors if not X[f].is_zero]


def _entry_solutions(tract, terms):
    """Group elements z with sum(terms) - z null, as a solution set."""
    sol = tract.null_completions(tuple(v.g for v in terms))
    eps = tract.epsilon
    if eps != tract.one:
        sol = sol.translate_left(tract, eps)  # epsilon is central
    return sol


def _eliminating_scaling(sig, Z0: TVector, vectors, relevant):
    """Scaling set for candidate class Z0 so that Z eliminates the family."""
    t = sig.tract
    sol = None
    for f in sorted(Z0.support):
        terms = _value_terms(vectors, f)
        zset = _entry_solutions(t, terms)
        g = Z0[f].g
        if sig.side is Side.LEFT:
            beta = zset.translate_right(t, t.ginv(g))
        else:
            beta = zset.translate_left(t, t.ginv(g))
        sol = beta if sol is None else sol.intersect(t, beta)
        if sol.is_empty():
            return None
    for f in sorted(relevant - Z0.support):
        if not FormalSum.from_values(t, _value_terms(vectors, f)).is_null():
            return None
    return sol


def _modular_elimination(sig: Signature, m: SupportMatroid, k_values) -> CheckResult:
    t = sig.tract
    classes = sig.reps
    supp = {X: X.support for X in classes}
    for k in k_values:
        if k + 1 > len(classes):
            break
        for x0 in classes:
            s0 = supp[x0]
            for others in itertools.combinations([c for c in classes if c is not x0], k):
                union_others = frozenset().union(*(supp[c] for c in others))
                if s0 <= union_others:
                    continue
                family_union = s0 | union_others
                if m.nullity(family_union) != k + 1:
                    continue
                admissible = []
                for i, ci in enumerate(others):
                    rest = frozenset().union(
                        frozenset(), *(supp[cj] for j, cj in enumerate(others) if j != i)
                    )
                    adm = (s0 & supp[ci]) - rest
                    admissible.append(sorted(adm))
                if any(not a for a in admissible):
                    continue
                for etuple in itertools.product(*admissible):
                    if len(set(etuple)) != len(etuple):
                        continue
                    scaled = []
                    for ci, ei in zip(others, etuple):
                        alpha = -(x0[ei] * ci[ei].inv())
                        if sig.side is Side.LEFT:
                            scaled.append(ci.scale_left(alpha))
                        else:
                            alpha = -(ci[ei].inv() * x0[ei])
                            scaled.append(ci.scale_right(alpha))
                    vectors = [x0] + scaled
                    banned = frozenset(etuple)
                    found = False
                    for zc in classes:
                        if supp[zc] & banned or not supp[zc] <= family_union:
                            continue
                        if _eliminating_scaling(sig, zc, vectors, family_union) is not None:
                            found = True
                            break
                    if not found:
                        fam = [sorted(s0)] + [sorted(supp[c]) for c in others]
                        return CheckResult.failed(
                            "no eliminating circuit for family %s at %s (scalings %s)"
                            % (
                                fam,
                                list(etuple),
                                [repr(v) for v in vectors],
                            )
                        )
    return CheckResult.passed()


def _checked_matroid(sig: Signature):
    res = check_matroid_circuits(sig.ground, sig.supports)
    if not res:
        raise MatroidError("supports are not matroid circuits: %s" % res.witness)
    m = SupportMatroid(sig.ground, sig.supports, check=False)
    base = check_signature(sig, m)
    return m, base


def check_weak_circuits(sig: Signature) -> CheckResult:
    """Modular pair elimination over every reachable scaling."""
    m, base = _checked_matroid(sig)
    if not base:
        return base
    return _modular_elimination(sig, m, [1])


def check_strong_circuits(sig: Signature, max_family: Optional[int] = None) -> CheckResult:
    """Modular family elimination; families larger than the ground nullity
    cannot be modular, so the cap is effectively nullity(E)."""
    m, base = _checked_matroid(sig)
    if not base:
        return base
    cap = max_family if max_family is not None else len(sig.ground)
    cap = min(cap, m.nullity())
    return _modular_elimination(sig, m, range(1, max(cap, 1) + 1))


# ---------------------------------------------------------------------------
# rescaling and push-forward


def rescale(sig: Signature, rho: dict, action: str = "right") -> Signature:
    """Rescale every class entrywise by the inverse of rho.

    ``action="right"`` sends X to X * rho^-1, ``action="left"`` to
    rho^-1 * X.  On a noncommutative tract only the action opposite to the
    signature's own scalar side keeps projective classes intact.
    """
    vals = {}
    for e in sig.ground:
        if e not in rho:
            raise SignatureError("rescaling is not total: missing %r" % (e,))
        v = rho[e]
        if not isinstance(v, TractValue):
            v = sig.tract.parse_value(v) if isinstance(v, str) else sig.tract.value(v)
        if v.is_zero:
            raise SignatureError("rescaling has a zero entry at %r" % (e,))
        vals[e] = v
    if not sig.tract.commutative:
        safe = (sig.side is Side.LEFT and action == "right") or (
            sig.side is Side.RIGHT and action == "left"
        )
        if not safe:
            raise SignatureError(
                "%s action on a %s signature is not class-stable over a "
                "noncommutative tract" % (action, sig.side.value)
            )
    out = []
    for X in sig.reps:
        if action == "right":
            entries = tuple(X[e] * vals[e].inv() for e in sig.ground)
        elif action == "left":
            entries = tuple(vals[e].inv() * X[e] for e in sig.ground)
        else:
            raise SignatureError("action must be 'left' or 'right'")
        out.append(TVector(sig.tract, sig.ground, entries))
    return Signature(sig.tract, sig.ground, sig.side, out)


def pushforward(hom: TractHomomorphism, sig: Signature) -> Signature:
    """Image signature under a tract homomorphism; supports are unchanged."""
    if hom.source != sig.tract:
        raise TractError("homomorphism source does not match the signature")
    out = Signature(hom.target, sig.ground, sig.side, [X.push(hom) for X in sig.reps])
    if out.supports != sig.supports:
        raise SignatureError("push-forward changed supports")  # impossible for group maps
    return out
