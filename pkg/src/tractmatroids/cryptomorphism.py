"""Three-way cryptomorphism: classification and round-trip verification.

A classified object carries all three presentations (circuit signature,
coordinate map, cocircuit signature) which are rebuilt from each other and
compared; classification reports the sharpest verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .dualpair import (
    DualPair,
    check_dual_pair,
    cocircuits_by_orthogonality,
    cocircuits_constructive,
    dual_coords,
    minors,
)
from .matroids import MatroidError, SupportMatroid
from .plucker import (
    CoordinateError,
    PluckerMap,
    check_strong_qp,
    check_weak_qp,
    coords_from_signature,
    signature_from_coords,
)
from .results import CheckResult
from .signatures import (
    Side,
    Signature,
    SignatureError,
    check_strong_circuits,
    check_weak_circuits,
    underlying,
)
from .tracts import TractError

__all__ = ["Strength", "TMatroid", "ClassifyResult", "classify", "roundtrip_report"]


class Strength(Enum):
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class TMatroid:
    signature: Signature
    coords: PluckerMap
    cocircuits: Signature
    matroid: SupportMatroid
    strength: Strength


@dataclass(frozen=True)
class ClassifyResult:
    verdict: str  # "invalid" | "weak" | "strong"
    tmatroid: Optional[TMatroid]
    detail: str = ""


def _assemble(sig: Signature, strength: Strength) -> TMatroid:
    m = underlying(sig)
    pm = coords_from_signature(sig, m)
    co = cocircuits_constructive(sig)
    if signature_from_coords(pm) != sig:
        raise SignatureError("conversion cycle does not close on the signature")
    return TMatroid(sig, pm, co, m, strength)


def classify(obj: Union[Signature, PluckerMap, DualPair]) -> ClassifyResult:
    """Run the native axiom checkers (strong first), then build and
    cross-check all three presentations."""
    try:
        if isinstance(obj, Signature):
            sig = obj
            strong = check_strong_circuits(sig)
            if strong:
                return ClassifyResult("strong", _assemble(sig, Strength.STRONG))
            weak = check_weak_circuits(sig)
            if weak:
                return ClassifyResult("weak", _assemble(sig, Strength.WEAK), strong.witness or "")
            return ClassifyResult("invalid", None, weak.witness or "")
        if isinstance(obj, PluckerMap):
            strong = check_strong_qp(obj)
            if strong:
                sig = signature_from_coords(obj)
                return ClassifyResult("strong", _assemble(sig, Strength.STRONG))
            weak = check_weak_qp(obj)
            if weak:
                sig = signature_from_coords(obj)
                return ClassifyResult("weak", _assemble(sig, Strength.WEAK), strong.witness or "")
            return ClassifyResult("invalid", None, weak.witness or "")
        if isinstance(obj, DualPair):
            strong = check_dual_pair(obj, "strong")
            if strong:
                tm = _assemble(obj.C, Strength.STRONG)
                _require(tm.cocircuits == obj.D, "cocircuits disagree with the synthesized ones")
                return ClassifyResult("strong", tm)
            weak = check_dual_pair(obj, "weak")
            if weak:
                tm = _assemble(obj.C, Strength.WEAK)
                _require(tm.cocircuits == obj.D, "cocircuits disagree with the synthesized ones")
                return ClassifyResult("weak", tm, strong.witness or "")
            return ClassifyResult("invalid", None, weak.witness or "")
    except (MatroidError, SignatureError, CoordinateError, TractError) as exc:
        return ClassifyResult("invalid", None, str(exc))
    raise TypeError("cannot classify %r" % (type(obj),))


def _require(cond: bool, message: str):
    if not cond:
        raise SignatureError(message)


def roundtrip_report(tm: TMatroid) -> list:
    """Composite conversion cycles plus the duality and minor identities.

    Returns a list of (name, CheckResult) pairs; every entry must pass for a
    valid classified matroid.
    """
    out = []

    def add(name, ok, witness=""):
        out.append((name, CheckResult(bool(ok), None if ok else witness)))

    sig, pm, co, m = tm.signature, tm.coords, tm.cocircuits, tm.matroid

    add("signature->coords->signature", signature_from_coords(pm) == sig)
    add("coords->signature->coords", coords_from_signature(signature_from_coords(pm), m) == pm)

    mode = "strong" if tm.strength is Strength.STRONG else "weak"
    pair = DualPair(sig, co, m)
    res = check_dual_pair(pair, mode)
    add("signature->dualpair (%s)" % mode, res.ok, res.witness or "")

    dpm = dual_coords(pm)
    add("dual coords = coords of cocircuits", coords_from_signature(co, m.dual()) == dpm)
    add("cocircuits = signature of dual coords", signature_from_coords(dpm) == co)
    add("double dual signature", cocircuits_constructive(co) == sig)
    add("double dual coords", dual_coords(dpm) == pm)
    add("underlying commutes with duality", underlying(co) == m.dual())
    add("rank relation", m.dual().rank() == len(m.ground) - m.rank())

    if m.ground:
        e = m.ground[0]
        left = cocircuits_constructive(minors(sig, delete={e}))
        right = minors(cocircuits_constructive(sig), contract={e})
        add("deletion dualizes to contraction at %r" % e, left == right)

    if sig.tract.elements() is not None:
        add(
            "orthogonality cocircuits agree",
            cocircuits_by_orthogonality(sig) == co,
        )
    return out
