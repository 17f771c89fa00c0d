"""Quasi-Plucker coordinate maps on ordered adjacent-basis pairs.

The map assigns a nonzero tract value to every ordered pair of bases that
differ in one exchange.  Displayed products in the axioms multiply left to
right for left coordinates and in reversed order for right coordinates; a
single side-dispatching product helper keeps the two code paths identical.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

from .matroids import MatroidError, SupportMatroid
from .results import CheckResult
from .signatures import Side, Signature, TVector
from .tracts import FormalSum, Tract, TractError, TractValue

__all__ = [
    "PluckerMap",
    "CoordinateError",
    "coords_from_signature",
    "signature_from_coords",
    "check_coordinate_axioms",
    "check_weak_qp",
    "check_strong_qp",
    "dual_coords",
    "contract_coords",
    "delete_coords",
    "pivot_check",
]


class CoordinateError(ValueError):
    pass


def _sprod(side: Side, factors) -> TractValue:
    """Product of the displayed factors, order-reversed for right maps."""
    factors = list(factors)
    if side is Side.RIGHT:
        factors.reverse()
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def _pair_key(B, B2):
    return (frozenset(B), frozenset(B2))


class PluckerMap:
    """Total map from adjacent ordered basis pairs into nonzero tract values."""

    def __init__(self, matroid: SupportMatroid, tract: Tract, side: Side, values: dict):
        self.matroid = matroid
        self.tract = tract
        self.side = side
        table = {}
        for (B, B2), v in values.items():
            key = _pair_key(B, B2)
            if not isinstance(v, TractValue) or v.tract != tract:
                raise TractError("coordinate value over a foreign tract")
            if v.is_zero:
                raise CoordinateError("coordinate value must be nonzero at %s" % (key,))
            table[key] = v
        expected = set(_pair_key(B, B2) for B, B2 in matroid.adjacent_bases)
        if set(table) != expected:
            missing = sorted(
                (sorted(a), sorted(b)) for a, b in expected - set(table)
            )
            extra = sorted((sorted(a), sorted(b)) for a, b in set(table) - expected)
            raise CoordinateError(
                "coordinate map must be total on adjacent bases "
                "(missing %s, extra %s)" % (missing, extra)
            )
        self.values = table

    def value(self, B, B2) -> TractValue:
        return self.values[_pair_key(B, B2)]

    def items(self):
        return sorted(
            self.values.items(), key=lambda kv: (sorted(kv[0][0]), sorted(kv[0][1]))
        )

    def __eq__(self, other):
        return (
            isinstance(other, PluckerMap)
            and self.matroid == other.matroid
            and self.tract == other.tract
            and self.side == other.side
            and self.values == other.values
        )

    def __hash__(self):
        return hash(
            (
                self.matroid,
                self.tract,
                self.side,
                frozenset(self.values.items()),
            )
        )

    def __repr__(self):
        return "PluckerMap(%s, %s, %d pairs)" % (
            self.tract.name,
            self.side.value,
            len(self.values),
        )


# ---------------------------------------------------------------------------
# conversions with signatures


def coords_from_signature(sig: Signature, m: Optional[SupportMatroid] = None) -> PluckerMap:
    """[Fa, Fb] = -X(a)^{-1} X(b) for the circuit class X inside B union B'."""
    from .signatures import underlying

    if m is None:
        m = underlying(sig)
    values = {}
    for B, B2 in m.adjacent_bases:
        a = min(B - B2)
        b = min(B2 - B)
        circuit = m.fundamental_circuit(b, B)
        X = sig.class_of(circuit)
        if X is None or not {a, b} <= X.support:
            raise CoordinateError(
                "no circuit class through %s, %s inside %s" % (a, b, sorted(B | B2))
            )
        if sig.side is Side.LEFT:
            values[(B, B2)] = -(X[a].inv() * X[b])
        else:
            values[(B, B2)] = -(X[b] * X[a].inv())
    return PluckerMap(m, sig.tract, sig.side, values)


def signature_from_coords(pm: PluckerMap) -> Signature:
    """Rebuild the circuit classes; consistency over all witnessing pairs is
    verified and failures surface as CoordinateError."""
    m, t = pm.matroid, pm.tract
    reps = []
    for circuit in sorted(m.circuits, key=sorted):
        a0 = min(circuit)
        entries = {a0: t.one_value()}
        for b in sorted(circuit - {a0}):
            B = m.complete_to_basis(circuit - {b})
            F = B - {a0}
            entries[b] = -pm.value(B, F | {b})
        X = TVector(t, m.ground, entries)
        reps.append(X)
    sig = Signature(t, m.ground, pm.side, reps)
    _verify_signature_matches(sig, pm)
    return sig


def _verify_signature_matches(sig: Signature, pm: PluckerMap):
    m = pm.matroid
    for B, B2 in m.adjacent_bases:
        a = min(B - B2)
        b = min(B2 - B)
        X = sig.class_of(m.fundamental_circuit(b, B))
        if sig.side is Side.LEFT:
            lhs = X[a].inv() * X[b]
        else:
            lhs = X[b] * X[a].inv()
        if lhs != -pm.value(B, B2):
            raise CoordinateError(
                "inconsistent coordinates at (%s, %s)" % (sorted(B), sorted(B2))
            )


# ---------------------------------------------------------------------------
# axiom checkers


def _configs_lc2(m: SupportMatroid):
    r = m.rank()
    ground = m.ground
    for F in itertools.combinations(ground, r - 2):
        Fs = frozenset(F)
        rest = [e for e in ground if e not in Fs]
        for a, b, c in itertools.permutations(rest, 3):
            yield Fs, a, b, c


def _configs_quads(m: SupportMatroid):
    r = m.rank()
    ground = m.ground
    for F in itertools.combinations(ground, r - 2):
        Fs = frozenset(F)
        rest = [e for e in ground if e not in Fs]
        for a, b, c, d in itertools.permutations(rest, 4):
            yield Fs, a, b, c, d


def check_coordinate_axioms(pm: PluckerMap) -> CheckResult:
    """LC1 (inverse pairs), LC2 (triangle product is -1), LC3 (exchange
    invariance when Fab is dependent)."""
    m, t = pm.matroid, pm.tract
    one, minus_one = t.one_value(), -t.one_value()
    for B, B2 in m.adjacent_bases:
        if _sprod(pm.side, [pm.value(B, B2), pm.value(B2, B)]) != one:
            return CheckResult.failed("LC1 fails at (%s, %s)" % (sorted(B), sorted(B2)))
    bases = m.bases
    if m.rank() >= 2:
        for F, a, b, c in _configs_lc2(m):
            Fab, Fac, Fbc = F | {a, b}, F | {a, c}, F | {b, c}
            if not (Fab in bases and Fac in bases and Fbc in bases):
                continue
            prod = _sprod(
                pm.side,
                [pm.value(Fac, Fbc), pm.value(Fab, Fac), pm.value(Fbc, Fab)],
            )
            if prod != minus_one:
                return CheckResult.failed(
                    "LC2 fails at F=%s a=%s b=%s c=%s" % (sorted(F), a, b, c)
                )
        for F, a, b, c, d in _configs_quads(m):
            Fac, Fad, Fbc, Fbd = (F | {a, c}, F | {a, d}, F | {b, c}, F | {b, d})
            Fab = F | {a, b}
            if not all(x in bases for x in (Fac, Fad, Fbc, Fbd)):
                continue
            if Fab in bases:
                continue
            if pm.value(Fac, Fbc) != pm.value(Fad, Fbd):
                return CheckResult.failed(
                    "LC3 fails at F=%s a=%s b=%s c=%s d=%s" % (sorted(F), a, b, c, d)
                )
    return CheckResult.passed()


def check_weak_qp(pm: PluckerMap) -> CheckResult:
    """P1-P5: coordinate axioms plus triangle cocycle, exchange invariance
    with one dependent diagonal, and the three-term Plucker relation."""
    base = check_coordinate_axioms(pm)
    if not base:
        return base
    m, t = pm.matroid, pm.tract
    bases = m.bases
    one = t.one_value()
    if m.rank() >= 1:
        for F in itertools.combinations(m.ground, m.rank() - 1):
            Fs = frozenset(F)
            rest = [e for e in m.ground if e not in Fs]
            for a, b, c in itertools.permutations(rest, 3):
                Fa, Fb, Fc = Fs | {a}, Fs | {b}, Fs | {c}
                if not (Fa in bases and Fb in bases and Fc in bases):
                    continue
                prod = _sprod(
                    pm.side, [pm.value(Fa, Fb), pm.value(Fb, Fc), pm.value(Fc, Fa)]
                )
                if prod != one:
                    return CheckResult.failed(
                        "P3 fails at F=%s a=%s b=%s c=%s" % (sorted(Fs), a, b, c)
                    )
    if m.rank() >= 2:
        for F, a, b, c, d in _configs_quads(m):
            Fac, Fad, Fbc, Fbd = (F | {a, c}, F | {a, d}, F | {b, c}, F | {b, d})
            Fab, Fcd = F | {a, b}, F | {c, d}
            if not all(x in bases for x in (Fac, Fad, Fbc, Fbd)):
                continue
            if (Fab not in bases or Fcd not in bases) and pm.value(Fac, Fbc) != pm.value(Fad, Fbd):
                return CheckResult.failed(
                    "P4 fails at F=%s a=%s b=%s c=%s d=%s" % (sorted(F), a, b, c, d)
                )
            if all(x in bases for x in (Fab, Fcd)):
                s = FormalSum.from_values(
                    t,
                    [
                        -one,
                        _sprod(pm.side, [pm.value(Fbd, Fab), pm.value(Fac, Fcd)]),
                        _sprod(pm.side, [pm.value(Fad, Fab), pm.value(Fbc, Fcd)]),
                    ],
                )
                if not s.is_null():
                    return CheckResult.failed(
                        "P5 fails at F=%s a=%s b=%s c=%s d=%s" % (sorted(F), a, b, c, d)
                    )
    return CheckResult.passed()


def _exchange_sets(m: SupportMatroid):
    r = m.rank()
    bases = m.bases
    for I in itertools.combinations(m.ground, r + 1):
        Iset = frozenset(I)
        for J in itertools.combinations(m.ground, r - 1):
            Jset = frozenset(J)
            if len(Iset - Jset) < 3:
                continue
            I1 = sorted(
                x for x in Iset if (Iset - {x}) in bases and (Jset | {x}) in bases
            )
            yield Iset, Jset, I1


def check_strong_qp(pm: PluckerMap) -> CheckResult:
    """P1-P3 plus the exchange-set strengthenings of P4 and P5."""
    base = check_weak_qp(pm)  # P1..P3 reused; P4/P5 are special cases anyway
    if not base:
        return base
    m, t = pm.matroid, pm.tract
    one = t.one_value()
    for I, J, I1 in _exchange_sets(m):
        if len(I1) == 2:
            a, b = I1
            if pm.value(I - {a}, I - {b}) != pm.value(J | {b}, J | {a}):
                return CheckResult.failed(
                    "P4' fails at I=%s J=%s I1=%s" % (sorted(I), sorted(J), I1)
                )
        elif len(I1) >= 3:
            for z in I1:
                terms = [-one]
                for x in I1:
                    if x == z:
                        continue
                    terms.append(
                        _sprod(
                            pm.side,
                            [
                                pm.value(I - {x}, I - {z}),
                                pm.value(J | {x}, J | {z}),
                            ],
                        )
                    )
                if not FormalSum.from_values(t, terms).is_null():
                    return CheckResult.failed(
                        "P5' fails at I=%s J=%s z=%s" % (sorted(I), sorted(J), z)
                    )
    return CheckResult.passed()


# ---------------------------------------------------------------------------
# duality and minors on coordinates


def dual_coords(pm: PluckerMap) -> PluckerMap:
    """[B, B']* = -conj([E - B, E - B']) on the dual matroid, side flipped."""
    dual = pm.matroid.dual()
    E = frozenset(pm.matroid.ground)
    values = {}
    for B, B2 in dual.adjacent_bases:
        values[(B, B2)] = -pm.value(E - B, E - B2).conj()
    return PluckerMap(dual, pm.tract, pm.side.flipped, values)


def contract_coords(pm: PluckerMap, A, independent_part=None) -> PluckerMap:
    """Coordinates of N/A via [B, B']/A = [B + I_A, B' + I_A]."""
    m = pm.matroid
    A = frozenset(str(x) for x in A)
    if independent_part is None:
        I_A = m.max_independent_subset(A)
    else:
        I_A = frozenset(independent_part)
        if not I_A <= A or not m.is_independent(I_A) or len(I_A) != m.rank(A):
            raise CoordinateError("not a maximal independent subset of %s" % sorted(A))
    minor = m.contract(A)
    values = {}
    for B, B2 in minor.adjacent_bases:
        values[(B, B2)] = pm.value(B | I_A, B2 | I_A)
    return PluckerMap(minor, pm.tract, pm.side, values)


def delete_coords(pm: PluckerMap, A, spanning_part=None) -> PluckerMap:
    """Coordinates of N - A via [B, B'] \\ A = [B + J_A, B' + J_A]."""
    m = pm.matroid
    A = frozenset(str(x) for x in A)
    if spanning_part is None:
        J_A = m.spanning_completion(A)
    else:
        J_A = frozenset(spanning_part)
        rest = frozenset(m.ground) - A
        if not (
            J_A <= A
            and m.rank(rest | J_A) == m.rank()
            and len(J_A) == m.rank() - m.rank(rest)
        ):
            raise CoordinateError("not a minimal spanning completion inside %s" % sorted(A))
    minor = m.delete(A)
    values = {}
    for B, B2 in minor.adjacent_bases:
        values[(B, B2)] = pm.value(B | J_A, B2 | J_A)
    return PluckerMap(minor, pm.tract, pm.side, values)


# ---------------------------------------------------------------------------
# pivoting property


def pivot_check(pm: PluckerMap, X: Optional[TVector] = None, Y: Optional[TVector] = None) -> CheckResult:
    """Pivoting property of circuit vectors, or its dual for cocircuit vectors."""
    if (X is None) == (Y is None):
        raise CoordinateError("pass exactly one of X (circuit) or Y (cocircuit)")
    m = pm.matroid
    if X is not None:
        supp = X.support
        try:
            B = m.complete_to_basis(supp - {min(supp)})
        except MatroidError as exc:
            raise CoordinateError("cannot extend %s: %s" % (sorted(supp), exc))
        I = B | {min(supp)}
        for x in sorted(supp):
            if (I - {x}) not in m.bases:
                raise CoordinateError("extension of %s is not basis-covering" % sorted(supp))
        for x1, x2 in itertools.permutations(sorted(supp), 2):
            if pm.side is Side.LEFT:
                lhs = X[x1].inv() * X[x2]
            else:
                lhs = X[x2] * X[x1].inv()
            if lhs != -pm.value(I - {x2}, I - {x1}):
                return CheckResult.failed(
                    "pivot fails for support %s at (%s, %s)" % (sorted(supp), x1, x2)
                )
        return CheckResult.passed()

    dual = m.dual()
    supp = Y.support
    try:
        Bd = dual.complete_to_basis(supp - {min(supp)})
    except MatroidError as exc:
        raise CoordinateError("cannot extend %s in the dual: %s" % (sorted(supp), exc))
    L = Bd | {min(supp)}
    for y in sorted(supp):
        if (L - {y}) not in dual.bases:
            raise CoordinateError("dual extension of %s is not basis-covering" % sorted(supp))
    J = frozenset(m.ground) - L
    for y1, y2 in itertools.permutations(sorted(supp), 2):
        if pm.side is Side.LEFT:
            lhs = Y[y1] * Y[y2].inv()
        else:
            lhs = Y[y2].inv() * Y[y1]
        if lhs != pm.value(J | {y1}, J | {y2}).conj():
            return CheckResult.failed(
                "dual pivot fails for support %s at (%s, %s)" % (sorted(supp), y1, y2)
            )
    return CheckResult.passed()
