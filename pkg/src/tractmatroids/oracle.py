"""Independent brute-force engines for tests and ground-truth generation.

The hyperaddition evaluator iterates the set-valued addition tables
directly, so it shares no code path with the tract null predicates it
cross-checks.  Realizations produce signatures from exact matrices over
four coefficient fields; kernel vectors come from Cramer determinants, so
only ring arithmetic is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .circular import HALF, CircleSet, turn
from .matroids import SupportMatroid
from .signatures import Side, Signature, TVector
from .tracts import Tract, TractError, TractValue, make_tract

__all__ = [
    "hyperaddition_eval",
    "Realization",
    "realization_to_signature",
    "realization_matroid",
    "enumerate_vectors",
    "minimal_support",
    "phase_null_by_lp",
    "QRationals",
    "PrimeField",
    "LaurentRationals",
    "GaussianRationals",
]


# ---------------------------------------------------------------------------
# hyperaddition tables


def _finite_table_eval(add, zero, elems):
    state = {elems[0]}
    for g in elems[1:]:
        nxt = set()
        for v in state:
            nxt |= add(v, g)
        state = nxt
    return zero in state


def _krasner_add(x, y):
    if x == 0:
        return {y}
    if y == 0:
        return {x}
    return {0, 1}


def _sign_add(x, y):
    if x == 0:
        return {y}
    if y == 0:
        return {x}
    if x == y:
        return {x}
    return {0, 1, -1}


def _gf_add(p):
    return lambda x, y: {(x + y) % p}


def _maxplus_eval(elems, zero_is_bottom=True):
    # state: finite values reached, plus an optional downset bound; the
    # bottom element (the tract zero) sits below everything.
    finite = {("v", elems[0])}
    down = None
    for g in elems[1:]:
        nxt = set()
        bound = None
        for kind, v in finite:
            if kind == "z":
                nxt.add(("v", g))
            elif v == g:
                bound = g if bound is None else max(bound, g)
            else:
                nxt.add(("v", max(v, g)))
        if down is not None:
            if g <= down:
                bound = down if bound is None else max(bound, down)
            else:
                nxt.add(("v", g))
        if bound is not None:
            nxt.add(("v", bound))
            nxt.add(("z", None))
        down = bound
        finite = nxt
    return ("z", None) in finite or down is not None


def _minor_arc(u, w):
    d = turn(w - u)
    return (u, w) if d < HALF else (w, u)


def _phase_step(S: CircleSet, zero_in: bool, g):
    g = turn(g)
    anti = turn(g + HALF)
    zero_out = S.contains(anti)
    pts, arcs = [], []
    if zero_in:
        pts.append(g)
    for v in S.points:
        if v == g:
            pts.append(g)
        elif v == anti:
            pts.extend([v, g])
        else:
            arcs.append(_minor_arc(v, g))
    pos_half = CircleSet.build([], [(Fraction(0), HALF)])
    neg_half = CircleSet.build([], [(HALF, Fraction(0))])
    for a, b in S.arcs:
        rot = CircleSet.build([], [(turn(a - g), turn(b - g))])
        for x, y in rot.intersect(pos_half).arcs:
            arcs.append((g, turn(y + g)))
        for x, y in rot.intersect(neg_half).arcs:
            arcs.append((turn(x + g), g))
        if rot.contains(Fraction(0)):
            pts.append(g)
        if rot.contains(HALF):
            pts.extend([anti, g])
    return CircleSet.build(pts, arcs), zero_out


def _phase_eval(elems):
    S = CircleSet.build([elems[0]], [])
    zero = False
    for g in elems[1:]:
        S, zero = _phase_step(S, zero, g)
    return zero


def hyperaddition_eval(t: Tract, s) -> bool:
    """Is 0 in the iterated hypersum of the multiset, straight from the
    hyperaddition tables?  Supports the built-in hyperfields."""
    elems = [g.g if isinstance(g, TractValue) else t.validate_element(g) for g in s]
    if not elems:
        return True
    name = t.name
    if name == "krasner":
        return _finite_table_eval(_krasner_add, 0, elems)
    if name == "sign":
        return _finite_table_eval(_sign_add, 0, elems)
    if name.startswith("gf("):
        return _finite_table_eval(_gf_add(t.p), 0, elems)
    if name in ("tropical", "ultratriangle"):
        return _maxplus_eval(elems)
    if name == "phase":
        if len(elems) > 6:
            raise TractError("phase hyperaddition oracle is capped at 6 terms")
        return _phase_eval(elems)
    raise TractError("no hyperaddition table for %s" % name)


# ---------------------------------------------------------------------------
# coefficient fields for realizations


class QRationals:
    name = "rationals"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0


class PrimeField:
    name = "gf"

    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_zero(self, a):
        return a % self.p == 0


class LaurentRationals:
    """Laurent polynomials in one variable over the rationals; the tropical
    value of an element is minus its lowest exponent."""

    name = "rationals-with-valuation"
    zero = ()
    one = ((0, Fraction(1)),)

    def coerce(self, x):
        if isinstance(x, tuple):
            return tuple((int(e), Fraction(c)) for e, c in x if c)
        return ((0, Fraction(x)),) if x else ()

    @staticmethod
    def monomial(coeff, valuation: int):
        """c * t^(-valuation): an element of tropical value `valuation`."""
        if not coeff:
            return ()
        return ((-int(valuation), Fraction(coeff)),)

    def add(self, a, b):
        out = dict(a)
        for e, c in b:
            c2 = out.get(e, Fraction(0)) + c
            if c2:
                out[e] = c2
            else:
                out.pop(e, None)
        return tuple(sorted(out.items()))

    def neg(self, a):
        return tuple((e, -c) for e, c in a)

    def mul(self, a, b):
        out = {}
        for e1, c1 in a:
            for e2, c2 in b:
                e = e1 + e2
                c = out.get(e, Fraction(0)) + c1 * c2
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        return tuple(sorted(out.items()))

    def is_zero(self, a):
        return not a

    @staticmethod
    def tropical_value(a) -> Fraction:
        return Fraction(-min(e for e, _ in a))


class GaussianRationals:
    name = "gaussian-rationals"
    zero = (Fraction(0), Fraction(0))
    one = (Fraction(1), Fraction(0))

    def coerce(self, x):
        if isinstance(x, tuple):
            return (Fraction(x[0]), Fraction(x[1]))
        return (Fraction(x), Fraction(0))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def is_zero(self, a):
        return a[0] == 0 and a[1] == 0


_FIELDS = {
    "rationals": QRationals,
    "rationals-with-valuation": LaurentRationals,
    "gaussian-rationals": GaussianRationals,
}


def _field(name: str, p: Optional[int] = None):
    if name == "gf":
        return PrimeField(p)
    if name.startswith("gf(") and name.endswith(")"):
        return PrimeField(int(name[3:-1]))
    try:
        return _FIELDS[name]()
    except KeyError:
        raise TractError("unknown realization field %r" % (name,))


@dataclass(frozen=True)
class Realization:
    """Exact r x n matrix of full row rank over a coefficient field."""

    field_name: str
    matrix: tuple  # rows of coerced field elements
    ground: tuple

    @staticmethod
    def make(field_name: str, rows, ground=None, p: Optional[int] = None) -> "Realization":
        fld = _field(field_name, p)
        canonical = "gf(%d)" % fld.p if isinstance(fld, PrimeField) else fld.name
        coerced = tuple(tuple(fld.coerce(x) for x in row) for row in rows)
        n = len(coerced[0])
        if any(len(row) != n for row in coerced):
            raise TractError("ragged realization matrix")
        if ground is None:
            ground = tuple(str(i + 1) for i in range(n))
        ground = tuple(str(e) for e in ground)
        if _matrix_rank(fld, coerced) != len(coerced):
            raise TractError("realization matrix is not of full row rank")
        return Realization(canonical, coerced, ground)

    def field(self):
        return _field(self.field_name)


def _det(fld, rows) -> object:
    n = len(rows)
    acc = fld.zero
    for perm in itertools.permutations(range(n)):
        prod = fld.one
        for i, j in enumerate(perm):
            prod = fld.mul(prod, rows[i][j])
        sign = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        acc = fld.add(acc, fld.neg(prod) if sign % 2 else prod)
    return acc


def _columns_independent(fld, matrix, cols) -> bool:
    k = len(cols)
    for rows in itertools.combinations(range(len(matrix)), k):
        sub = [[matrix[i][j] for j in cols] for i in rows]
        if not fld.is_zero(_det(fld, sub)):
            return True
    return False


def _matrix_rank(fld, matrix) -> int:
    m = len(matrix)
    cols = range(len(matrix[0]))
    for k in range(min(m, len(matrix[0])), 0, -1):
        for cs in itertools.combinations(cols, k):
            for rows in itertools.combinations(range(m), k):
                sub = [[matrix[i][j] for j in cs] for i in rows]
                if not fld.is_zero(_det(fld, sub)):
                    return k
    return 0


def realization_matroid(real: Realization) -> SupportMatroid:
    """Column matroid: circuits are the minimal dependent column sets."""
    fld = real.field()
    n = len(real.ground)
    idx = {e: j for j, e in enumerate(real.ground)}
    circuits = []
    for k in range(1, n + 1):
        for S in itertools.combinations(real.ground, k):
            cols = [idx[e] for e in S]
            if any(set(c) <= set(S) for c in circuits):
                continue
            if not _columns_independent(fld, real.matrix, cols):
                circuits.append(frozenset(S))
    return SupportMatroid(real.ground, circuits, check=False)


def _kernel_vector(fld, matrix, cols):
    """The (projective) kernel vector of a minimally dependent column set,
    by Cramer expansion over a full-rank row choice."""
    k = len(cols)
    for rows in itertools.combinations(range(len(matrix)), k - 1):
        coeffs = []
        ok = False
        for drop in range(k):
            sub = [
                [matrix[i][cols[j]] for j in range(k) if j != drop] for i in rows
            ]
            d = _det(fld, sub) if sub else fld.one
            if drop % 2:
                d = fld.neg(d)
            coeffs.append(d)
            if not fld.is_zero(d):
                ok = True
        if ok and all(not fld.is_zero(c) for c in coeffs):
            for i in range(len(matrix)):  # exact verification
                s = fld.zero
                for j in range(k):
                    s = fld.add(s, fld.mul(matrix[i][cols[j]], coeffs[j]))
                if not fld.is_zero(s):
                    raise TractError("kernel computation failed verification")
            return coeffs
    raise TractError("no full-rank row choice for columns %s" % (cols,))


def _gaussian_angle(z) -> Fraction:
    a, b = z
    if b == 0:
        return Fraction(0) if a > 0 else HALF
    if a == 0:
        return Fraction(1, 4) if b > 0 else Fraction(3, 4)
    if abs(a) == abs(b):
        if a > 0:
            return Fraction(1, 8) if b > 0 else Fraction(7, 8)
        return Fraction(3, 8) if b > 0 else Fraction(5, 8)
    raise TractError(
        "gaussian value %s/%s is not at an eighth-turn angle; "
        "exact phase push undefined" % (a, b)
    )


def _push_value(field_name: str, target: Tract, x):
    if target.name == "sign":
        if field_name != "rationals":
            raise TractError("sign push needs a rational realization")
        return 1 if x > 0 else -1
    if target.name == "tropical":
        if field_name != "rationals-with-valuation":
            raise TractError("tropical push needs a valuation realization")
        return LaurentRationals.tropical_value(x)
    if target.name == "phase":
        if field_name != "gaussian-rationals":
            raise TractError("phase push needs a gaussian realization")
        return _gaussian_angle(x)
    if target.name.startswith("gf("):
        if field_name != "gf":
            raise TractError("gf push needs a gf realization")
        return x
    if target.name == "krasner":
        return 1
    raise TractError("no push from %s to %s" % (field_name, target.name))


def realization_to_signature(real: Realization, target: Tract) -> Signature:
    """Minimal-support kernel vectors, pushed entrywise into the target."""
    fld = real.field()
    if isinstance(fld, PrimeField):
        if target.name != "gf(%d)" % fld.p and target.name != "krasner":
            raise TractError("gf realization pushes to gf(%d) or krasner" % fld.p)
        fname = "gf"
    else:
        fname = fld.name
    m = realization_matroid(real)
    idx = {e: j for j, e in enumerate(real.ground)}
    reps = []
    for circuit in sorted(m.circuits, key=sorted):
        cols = [idx[e] for e in sorted(circuit)]
        coeffs = _kernel_vector(fld, real.matrix, cols)
        entries = {}
        for e, c in zip(sorted(circuit), coeffs):
            entries[e] = target.value(_push_value(fname, target, c))
        reps.append(TVector(target, real.ground, entries))
    return Signature(target, real.ground, Side.LEFT, reps)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_vectors(t: Tract, ground, cap: int = 10**7):
    """Every vector in T^E for a finite tract, zero vector included."""
    elems = t.elements()
    if elems is None:
        raise TractError("cannot enumerate vectors over an infinite tract")
    ground = tuple(ground)
    total = (len(elems) + 1) ** len(ground)
    if total > cap:
        raise TractError("enumeration of %d vectors exceeds the cap" % total)
    pool = [t.zero()] + [TractValue(t, g) for g in elems]
    for combo in itertools.product(pool, repeat=len(ground)):
        yield TVector(t, ground, combo)


def minimal_support(vecs: Iterable[TVector]) -> tuple:
    """Vectors whose support properly contains no other's support."""
    vecs = list(vecs)
    supports = [v.support for v in vecs]
    out = [
        v
        for v, s in zip(vecs, supports)
        if not any(s2 < s for s2 in supports)
    ]
    return tuple(out)


# ---------------------------------------------------------------------------
# floating feasibility oracle for the phase null test


def phase_null_by_lp(angles, tol: float = 1e-9) -> bool:
    """Is there a strictly positive combination of the unit vectors at the
    given turn angles summing to zero?  Solved as a linear program."""
    import math

    from scipy.optimize import linprog

    angles = [turn(a) for a in angles]
    if not angles:
        return True
    if len(angles) == 1:
        return False
    cos = [math.cos(2 * math.pi * float(a)) for a in angles]
    sin = [math.sin(2 * math.pi * float(a)) for a in angles]
    res = linprog(
        c=[0.0] * len(angles),
        A_eq=[cos, sin],
        b_eq=[0.0, 0.0],
        bounds=[(1.0, None)] * len(angles),
        method="highs",
    )
    if res.status == 0:
        x = res.x
        r = sum(xi * ci for xi, ci in zip(x, cos))
        i = sum(xi * si for xi, si in zip(x, sin))
        return abs(r) <= tol * max(1.0, sum(x)) and abs(i) <= tol * max(1.0, sum(x))
    return False
