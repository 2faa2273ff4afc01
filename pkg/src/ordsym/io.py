"""JSON descriptions of algebras and filtrations.

Schema (1-based indices on the wire):

    {
      "field": {"kind": "Q"} | {"kind": "GF", "p": 7},
      "dim": D,
      "basis": ["E11", ...],
      "unit": [c1, ..., cD],                  # optional
      "mul": [[i, j, [[k, coeff], ...]], ...],
      "filtration": [[[v...], ...], ...]      # optional, spanning vectors per stage
    }

Rational coefficients travel as "num/den" strings (plain integers allowed);
prime-field coefficients as integers.  A field override re-reads every
constant in the requested field, so one fixture can exercise both Q and a
small prime field.
"""

from __future__ import annotations

import json
from typing import Optional

from .algebra import StructureAlgebra
from .fields import Field, field_make, field_to_json, scalar_from_json, scalar_to_json
from .graded import Filtration
from .linalg import Subspace

__all__ = ["InputError", "load_description", "dump_description", "load_path"]


class InputError(ValueError):
    """Malformed description document; message carries a location."""


def _fail(where: str, msg: str) -> None:
    raise InputError(f"{where}: {msg}")


def load_description(doc: dict, field_override: Optional[Field] = None):
    """Parse a description into (StructureAlgebra, Filtration | None).

    Both come back unvalidated (schema checks only); callers decide
    whether a broken tensor or chain is a failed check or a fatal error.
    """
    if not isinstance(doc, dict):
        _fail("document", "expected a JSON object")
    try:
        field = field_make(doc.get("field", {"kind": "Q"}))
    except (ValueError, KeyError, TypeError) as e:
        _fail("field", str(e))
    if field_override is not None:
        field = field_override
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        _fail("dim", f"expected a positive integer, got {dim!r}")
    basis = doc.get("basis")
    if not isinstance(basis, list) or len(basis) != dim:
        _fail("basis", f"expected {dim} names")
    names = [str(b) for b in basis]

    def scalar(raw, where):
        try:
            return scalar_from_json(field, raw)
        except (ValueError, ZeroDivisionError) as e:
            _fail(where, str(e))

    def vector(raw, where):
        if not isinstance(raw, list) or len(raw) != dim:
            _fail(where, f"expected a vector of length {dim}")
        return [scalar(c, f"{where}[{i}]") for i, c in enumerate(raw)]

    mul_rows = doc.get("mul")
    if not isinstance(mul_rows, list):
        _fail("mul", "expected a list of [i, j, products] rows")
    mul: dict[tuple[int, int], dict[int, object]] = {}
    for r, row in enumerate(mul_rows):
        where = f"mul[{r}]"
        if not (isinstance(row, list) and len(row) == 3):
            _fail(where, "expected [i, j, [[k, coeff], ...]]")
        i, j, prods = row
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= dim and 1 <= j <= dim):
            _fail(where, f"indices must be in 1..{dim}")
        if (i - 1, j - 1) in mul:
            _fail(where, f"duplicate product entry for ({i},{j})")
        if not isinstance(prods, list):
            _fail(where, "products must be a list of [k, coeff]")
        entry: dict[int, object] = {}
        for s, pair in enumerate(prods):
            if not (isinstance(pair, list) and len(pair) == 2):
                _fail(f"{where}[{s}]", "expected [k, coeff]")
            k, c = pair
            if not (isinstance(k, int) and 1 <= k <= dim):
                _fail(f"{where}[{s}]", f"target index must be in 1..{dim}")
            entry[k - 1] = scalar(c, f"{where}[{s}]").value
        mul[(i - 1, j - 1)] = entry
    unit = None
    if doc.get("unit") is not None:
        unit = vector(doc["unit"], "unit")
    try:
        algebra = StructureAlgebra(field, names, mul, unit=unit, check=False)
    except ValueError as e:
        _fail("algebra", str(e))

    filtration = None
    if doc.get("filtration") is not None:
        raw_stages = doc["filtration"]
        if not isinstance(raw_stages, list) or not raw_stages:
            _fail("filtration", "expected a nonempty list of stages")
        stages = []
        for s, vecs in enumerate(raw_stages):
            if not isinstance(vecs, list):
                _fail(f"filtration[{s}]", "expected a list of spanning vectors")
            rows = [vector(v, f"filtration[{s}][{r}]") for r, v in enumerate(vecs)]
            stages.append(Subspace(field, dim, rows))
        filtration = Filtration(algebra, stages, check=False)
    return algebra, filtration


def dump_description(algebra: StructureAlgebra, filtration: Optional[Filtration] = None) -> dict:
    """Serialize back to the wire schema, canonically ordered."""
    doc: dict = {
        "field": field_to_json(algebra.field),
        "dim": algebra.dim,
        "basis": list(algebra.names),
    }
    if algebra.unit is not None:
        doc["unit"] = [scalar_to_json(c) for c in algebra.unit]
    rows = []
    for (i, j) in sorted(algebra.mul):
        entry = algebra.mul[(i, j)]
        prods = [[k + 1, scalar_to_json(entry[k])] for k in sorted(entry)]
        rows.append([i + 1, j + 1, prods])
    doc["mul"] = rows
    if filtration is not None:
        doc["filtration"] = [
            [[scalar_to_json(c) for c in row] for row in stage.rows]
            for stage in filtration.stages
        ]
    return doc


def load_path(path: str, field_override: Optional[Field] = None):
    """Read and parse a description file; all failures become InputError."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputError(f"{path}: {e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    return load_description(doc, field_override=field_override)
