"""JSON documents for surfaces, curves, matrices and extension data.

Coefficients travel as decimal strings ("num/den" for rationals, the
least non-negative residue mod p).  ``dumps`` is the canonical form: keys
sorted, no whitespace, so documents compare as bytes.
"""

from __future__ import annotations

import json

from .exact import GF, QQ
from .forms import BinaryForm, PlaneCurve, curve_monomials
from .lines import PLUCKER_PAIRS, SurfaceMap

__all__ = [
    "DocumentError", "parse_field", "field_doc", "field_from_doc", "surface_to_doc",
    "surface_from_doc", "curve_to_doc", "curve_from_doc", "matrix_to_doc",
    "matrix_from_doc", "extension_to_doc", "extension_from_doc", "dumps", "loads",
    "BASIS",
]

BASIS = tuple(f"e{i + 1}{j + 1}" for i, j in PLUCKER_PAIRS)


class DocumentError(ValueError):
    """Malformed or inconsistent JSON document."""


def dumps(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc


def parse_field(spec):
    """'q' or 'fp:P' (command-line form)."""
    spec = spec.strip().lower()
    if spec in ("q", "qq"):
        return QQ
    if spec.startswith("fp:"):
        try:
            return GF(int(spec[3:]))
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
    raise DocumentError(f"unknown field {spec!r} (use q or fp:P)")


def field_doc(F):
    return F.to_json()


def field_from_doc(doc):
    if doc is None:
        return QQ
    if not isinstance(doc, dict) or "type" not in doc:
        raise DocumentError("field must be an object with a 'type'")
    if doc["type"] == "Q":
        return QQ
    if doc["type"] == "Fp":
        try:
            return GF(int(doc["p"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"bad prime field: {exc}") from exc
    raise DocumentError(f"unknown field type {doc['type']!r}")


def _scalar(F, x):
    if not isinstance(x, (str, int)) or isinstance(x, bool):
        raise DocumentError(f"coefficient must be a string or integer, got {x!r}")
    try:
        return F(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad coefficient {x!r}: {exc}") from exc


def _vector(F, xs, n, what):
    if not isinstance(xs, list) or len(xs) != n:
        raise DocumentError(f"{what}: expected a list of {n} coefficients")
    return [_scalar(F, x) for x in xs]


def surface_to_doc(psi):
    F = psi.field
    return {"d": psi.d, "field": field_doc(F),
            "omega": [[F.to_str(c) for c in f.coeffs] for f in psi.forms]}


def surface_from_doc(doc):
    if not isinstance(doc, dict):
        raise DocumentError("surface document must be an object")
    for key in ("d", "omega"):
        if key not in doc:
            raise DocumentError(f"surface document lacks {key!r}")
    d = doc["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise DocumentError("d must be a positive integer")
    F = field_from_doc(doc.get("field"))
    om = doc["omega"]
    if not isinstance(om, list) or len(om) != 6:
        raise DocumentError("omega must hold six forms (e12, e13, e14, e23, e24, e34)")
    rows = [_vector(F, r, d + 1, f"omega[{BASIS[i]}]") for i, r in enumerate(om)]
    psi = SurfaceMap.from_coeffs(rows, F)
    if psi.is_zero():
        raise DocumentError("zero surface map")
    return psi


def curve_to_doc(G):
    """First-nonzero-normalised curve, so equal-up-to-scalar is string equality."""
    G = G.normalized()
    F = G.field
    return {"degree": G.degree, "field": field_doc(F),
            "coeffs": [F.to_str(c) for c in G.coeffs]}


def curve_from_doc(doc):
    if not isinstance(doc, dict) or "degree" not in doc or "coeffs" not in doc:
        raise DocumentError("curve document needs 'degree' and 'coeffs'")
    k = doc["degree"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise DocumentError("degree must be a non-negative integer")
    F = field_from_doc(doc.get("field"))
    co = _vector(F, doc["coeffs"], len(curve_monomials(k)), "coeffs")
    return PlaneCurve(k, co, F)


def matrix_to_doc(M, F):
    return {"field": field_doc(F), "matrix": [[F.to_str(x) for x in r] for r in M]}


def matrix_from_doc(doc, n, F=None):
    """n x n matrix; the document's field wins unless F is given."""
    if isinstance(doc, list):
        doc = {"matrix": doc}
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise DocumentError("matrix document needs 'matrix'")
    if F is None:
        F = field_from_doc(doc.get("field"))
    M = doc["matrix"]
    if not isinstance(M, list) or len(M) != n:
        raise DocumentError(f"expected a {n} x {n} matrix")
    return [_vector(F, r, n, "matrix row") for r in M]


def extension_to_doc(E):
    F = E.field
    return {"n": E.n, "field": field_doc(F),
            "a": [[[F.to_str(c) for c in f.coeffs] for f in row] for row in E.a]}


def extension_from_doc(doc):
    from .birational import ExtensionDatum

    if not isinstance(doc, dict) or "n" not in doc or "a" not in doc:
        raise DocumentError("extension document needs 'n' and 'a'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError("n must be a positive integer")
    F = field_from_doc(doc.get("field"))
    a = doc["a"]
    if not isinstance(a, list) or len(a) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in a):
        raise DocumentError("a must be a 2 x 2 array of forms")
    rows = tuple(tuple(BinaryForm(_vector(F, f, 2 * n - 1, "a entry"), F) for f in r) for r in a)
    try:
        return ExtensionDatum(n, rows)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
