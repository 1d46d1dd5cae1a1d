"""JSON forms of algebras, arguments, kernels, measures, relations and masses.

Dense vectors and tables are written in bitmask order. Floats go through
``json``'s shortest round-trip representation, so reloading a written file
gives bit-identical arrays.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import MAX_TABLE_BITS, AlgebraSignature, Element
from .argument import (
    DEFAULT_TOL,
    Argument,
    Classification,
    Direction,
    Reconstruction,
    TransformKernel,
    Violation,
)
from .constructors import (
    CompatibilityRelation,
    ProbabilityMeasure,
    RelationMode,
    RowStochasticMatrix,
    relation_from_atom_pairs,
)
from .errors import FormatError
from .mass import MassFunction


def _field(obj: Any, name: str, kind=None):
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object", name)
    if name not in obj:
        raise FormatError("missing field", name)
    value = obj[name]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(f"expected {getattr(kind, '__name__', kind)}", name)
    return value


def _all_numbers(value) -> bool:
    if isinstance(value, list):
        return all(_all_numbers(v) for v in value)
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _numbers(value, name: str, shape: tuple[int, ...] | None = None) -> np.ndarray:
    if not _all_numbers(value):
        raise FormatError("expected numbers", name)
    try:
        arr = np.array(value, dtype=np.float64)
    except ValueError:
        raise FormatError("ragged nesting", name) from None
    if shape is not None and arr.shape != shape:
        raise FormatError(f"expected shape {shape}, got {arr.shape}", name)
    if not np.all(np.isfinite(arr)):
        raise FormatError("non-finite value", name)
    return arr


# -- algebras and elements ----------------------------------------------------


def signature_to_json(sig: AlgebraSignature) -> dict:
    return {"atoms": list(sig.atoms)}


def signature_from_json(obj, name: str = "algebra") -> AlgebraSignature:
    atoms = _field(obj, "atoms", list) if isinstance(obj, dict) else None
    if atoms is None:
        raise FormatError("expected an object with an 'atoms' list", name)
    try:
        return AlgebraSignature(tuple(atoms))
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc), f"{name}.atoms") from None


def element_to_json(el: Element) -> list[str]:
    return sorted(el.algebra.names(el.bits))


def element_from_json(names, sig: AlgebraSignature, name: str = "element") -> Element:
    if not isinstance(names, list):
        raise FormatError("expected a list of atom names", name)
    try:
        return sig.element(names)
    except ValueError as exc:
        raise FormatError(str(exc), name) from None


def violation_to_json(v: Violation) -> dict:
    return {
        "rule": v.rule,
        "witness": {role: element_to_json(el) for role, el in v.witness},
        "values": list(v.values),
        "text": v.describe(),
    }


# -- arguments and kernels ----------------------------------------------------


def argument_to_json(arg: Argument) -> dict:
    return {
        "domain": signature_to_json(arg.domain),
        "codomain": signature_to_json(arg.codomain),
        "table": arg.table.tolist(),
    }


def table_from_json(obj) -> tuple[AlgebraSignature, AlgebraSignature, np.ndarray]:
    """Signatures and the raw table of an argument or kernel payload, unvalidated."""
    domain = signature_from_json(_field(obj, "domain"), "domain")
    codomain = signature_from_json(_field(obj, "codomain"), "codomain")
    table = _numbers(_field(obj, "table", list), "table", (domain.size, codomain.size))
    return domain, codomain, table


def argument_from_json(obj, tol: float = DEFAULT_TOL, max_table_bits: int = MAX_TABLE_BITS) -> Argument:
    domain, codomain, table = table_from_json(obj)
    return Argument(domain, codomain, table, tol=tol, max_table_bits=max_table_bits)


def kernel_to_json(k: TransformKernel) -> dict:
    return {
        "direction": k.direction.value,
        "domain": signature_to_json(k.domain),
        "codomain": signature_to_json(k.codomain),
        "table": k.table.tolist(),
    }


def kernel_from_json(obj) -> TransformKernel:
    direction = _field(obj, "direction", str)
    try:
        direction = Direction(direction)
    except ValueError:
        raise FormatError("expected 'forward' or 'backward'", "direction") from None
    domain, codomain, table = table_from_json(obj)
    return TransformKernel(direction, domain, codomain, table)


def reconstruction_to_json(r: Reconstruction) -> dict:
    return {
        "domain": signature_to_json(r.domain),
        "codomain": signature_to_json(r.codomain),
        "table": np.asarray(r.table).tolist(),
        "valid": r.valid,
        "violations": [violation_to_json(v) for v in r.violations],
    }


def classification_to_json(c: Classification) -> dict:
    return c.as_dict()


# -- constructor inputs -------------------------------------------------------


def measure_to_json(p: ProbabilityMeasure) -> dict:
    return {"algebra": signature_to_json(p.algebra), "atom_probs": p.atom_probs.tolist()}


def measure_from_json(obj) -> ProbabilityMeasure:
    sig = signature_from_json(_field(obj, "algebra"), "algebra")
    probs = _numbers(_field(obj, "atom_probs", list), "atom_probs", (sig.atom_count,))
    return ProbabilityMeasure(sig, probs)


def matrix_to_json(P: RowStochasticMatrix, domain: AlgebraSignature | None = None,
                   codomain: AlgebraSignature | None = None) -> dict:
    out: dict = {"rows": P.rows.tolist()}
    if domain is not None:
        out["domain"] = signature_to_json(domain)
    if codomain is not None:
        out["codomain"] = signature_to_json(codomain)
    return out


def matrix_from_json(obj) -> tuple[RowStochasticMatrix, AlgebraSignature, AlgebraSignature]:
    """The matrix and its signatures; atoms default to ``a1..am`` and ``b1..bn``."""
    rows = _numbers(_field(obj, "rows", list), "rows")
    if rows.ndim != 2 or 0 in rows.shape:
        raise FormatError("expected a non-empty list of equal-length rows", "rows")
    P = RowStochasticMatrix(rows)
    m, n = P.shape
    domain = (signature_from_json(obj["domain"], "domain") if "domain" in obj
              else AlgebraSignature.numbered("a", m))
    codomain = (signature_from_json(obj["codomain"], "codomain") if "codomain" in obj
                else AlgebraSignature.numbered("b", n))
    if (domain.atom_count, codomain.atom_count) != (m, n):
        raise FormatError(f"matrix is {m}x{n} but algebras have "
                          f"{domain.atom_count} and {codomain.atom_count} atoms", "rows")
    return P, domain, codomain


def relation_to_json(rel: CompatibilityRelation, mode: RelationMode | None = None) -> dict:
    out = {
        "domain": signature_to_json(rel.domain),
        "codomain": signature_to_json(rel.codomain),
        "pairs": [list(p) for p in rel.element_pairs()],
    }
    if mode is not None:
        out["mode"] = RelationMode(mode).value
    return out


def relation_from_json(obj) -> tuple[CompatibilityRelation, RelationMode | None]:
    """A relation and the validation mode named in the file, if any.

    Accepts ``atom_pairs`` (0-based atom indices) or ``pairs`` (element
    bitmasks).
    """
    domain = signature_from_json(_field(obj, "domain"), "domain")
    codomain = signature_from_json(_field(obj, "codomain"), "codomain")
    mode = None
    if "mode" in obj:
        try:
            mode = RelationMode(obj["mode"])
        except ValueError:
            raise FormatError("expected 'strict' or 'generated'", "mode") from None
    if "atom_pairs" in obj:
        pairs = _pair_list(obj["atom_pairs"], "atom_pairs")
        return relation_from_atom_pairs(domain, codomain, pairs), mode
    if "pairs" in obj:
        pairs = _pair_list(obj["pairs"], "pairs")
        for a, b in pairs:
            if not (0 <= a < domain.size and 0 <= b < codomain.size):
                raise FormatError(f"element pair ({a}, {b}) out of range", "pairs")
        return CompatibilityRelation.from_element_pairs(domain, codomain, pairs), mode
    raise FormatError("missing field (need 'atom_pairs' or 'pairs')", "atom_pairs")


def _pair_list(value, name: str) -> list[tuple[int, int]]:
    if not isinstance(value, list):
        raise FormatError("expected a list of [i, j] pairs", name)
    out = []
    for p in value:
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
            raise FormatError(f"bad pair {p!r}", name)
        out.append((p[0], p[1]))
    return out


# -- masses -------------------------------------------------------------------


def mass_to_json(m: MassFunction) -> dict:
    return {"algebra": signature_to_json(m.algebra), "mass": m.mass.tolist()}


def mass_from_json(obj, tol: float = DEFAULT_TOL) -> MassFunction:
    sig = signature_from_json(_field(obj, "algebra"), "algebra")
    mass = _numbers(_field(obj, "mass", list), "mass", (sig.size,))
    return MassFunction(sig, mass, tol)


# -- files --------------------------------------------------------------------


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}",
                          str(path)) from None
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror}", str(path)) from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)
