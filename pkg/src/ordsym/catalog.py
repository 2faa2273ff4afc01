"""Built-in filtered algebras for desk-scale checks.

Each builder returns a validated (StructureAlgebra, Filtration) pair:

- upper-triangular n: all upper-triangular n x n matrix units, filtered by
  band width (diagonal first); unital.
- strictly-upper-triangular n: the nilpotent part only, F_0 = 0, stage i
  holding bands 1..i; no unit.
- truncated-polynomial n: k[t]/(t^n) with the degree filtration; unital
  and commutative.
- exterior-algebra g: 2^g-dimensional, basis indexed by subsets of the
  generators, filtered by word length; unital, signs from transposition
  counts.
"""

from __future__ import annotations

from typing import Callable

from .algebra import StructureAlgebra
from .fields import QQ, Field
from .graded import Filtration
from .linalg import Subspace

__all__ = ["builtin_example", "builtin_names", "matrix_unit_algebra"]


def _unit_vectors(field: Field, dim: int, indices: list[int]) -> list[list]:
    rows = []
    for i in indices:
        row = [field.zero()] * dim
        row[i] = field.one()
        rows.append(row)
    return rows


def matrix_unit_algebra(
    field: Field, positions: list[tuple[int, int]], unital: bool
) -> StructureAlgebra:
    """Algebra spanned by matrix units E_ij at the given (row, col) positions.

    Positions must be product-closed: E_ab * E_cd = E_ad when b = c, and
    the target position must again be in the list.
    """
    index = {pos: k for k, pos in enumerate(positions)}
    mul: dict[tuple[int, int], dict[int, int]] = {}
    for (a, b), i in index.items():
        for (c, d), j in index.items():
            if b != c:
                continue
            k = index.get((a, d))
            if k is None:
                raise ValueError(f"product E{a}{b}*E{c}{d} escapes the span")
            mul[(i, j)] = {k: 1}
    names = [f"E{a}{b}" for a, b in positions]
    unit = None
    if unital:
        unit = [0] * len(positions)
        for (a, b), k in index.items():
            if a == b:
                unit[k] = 1
    return StructureAlgebra(field, names, mul, unit=unit)


def _upper_triangular(n: int, field: Field) -> tuple[StructureAlgebra, Filtration]:
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    positions = [(i, i + band) for band in range(n) for i in range(1, n - band + 1)]
    algebra = matrix_unit_algebra(field, positions, unital=True)
    stages = []
    count = 0
    for band in range(n):
        count += n - band
        stages.append(
            Subspace.span(field, algebra.dim, _unit_vectors(field, algebra.dim, list(range(count))))
        )
    return algebra, Filtration(algebra, stages)


def _strictly_upper_triangular(n: int, field: Field) -> tuple[StructureAlgebra, Filtration]:
    if n < 2:
        raise ValueError("strictly upper-triangular algebra needs size >= 2")
    positions = [(i, i + band) for band in range(1, n) for i in range(1, n - band + 1)]
    algebra = matrix_unit_algebra(field, positions, unital=False)
    stages = [Subspace.zero(field, algebra.dim)]
    count = 0
    for band in range(1, n):
        count += n - band
        stages.append(
            Subspace.span(field, algebra.dim, _unit_vectors(field, algebra.dim, list(range(count))))
        )
    return algebra, Filtration(algebra, stages)


def _truncated_polynomial(n: int, field: Field) -> tuple[StructureAlgebra, Filtration]:
    if n < 1:
        raise ValueError("truncation order must be >= 1")
    names = ["1"] + [f"t^{i}" if i > 1 else "t" for i in range(1, n)]
    mul = {
        (i, j): {i + j: 1}
        for i in range(n)
        for j in range(n)
        if i + j < n
    }
    unit = [1] + [0] * (n - 1)
    algebra = StructureAlgebra(field, names, mul, unit=unit)
    stages = [
        Subspace.span(field, n, _unit_vectors(field, n, list(range(i + 1))))
        for i in range(n)
    ]
    return algebra, Filtration(algebra, stages)


def _exterior_algebra(g: int, field: Field) -> tuple[StructureAlgebra, Filtration]:
    if g < 1:
        raise ValueError("need at least one generator")
    subsets: list[tuple[int, ...]] = [()]
    for k in range(1, g + 1):
        subsets.extend(_k_subsets(g, k))
    index = {s: i for i, s in enumerate(subsets)}
    mul: dict[tuple[int, int], dict[int, int]] = {}
    for s, i in index.items():
        for t, j in index.items():
            if set(s) & set(t):
                continue
            sign = 1
            for a in s:
                for b in t:
                    if a > b:
                        sign = -sign
            merged = tuple(sorted(s + t))
            mul[(i, j)] = {index[merged]: sign}
    names = ["1"] + ["e" + "".join(map(str, s)) for s in subsets[1:]]
    unit = [1] + [0] * (len(subsets) - 1)
    algebra = StructureAlgebra(field, names, mul, unit=unit)
    dim = len(subsets)
    stages = []
    for size in range(g + 1):
        idx = [i for s, i in index.items() if len(s) <= size]
        stages.append(Subspace.span(field, dim, _unit_vectors(field, dim, sorted(idx))))
    return algebra, Filtration(algebra, stages)


def _k_subsets(g: int, k: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(start: int, acc: tuple[int, ...]) -> None:
        if len(acc) == k:
            out.append(acc)
            return
        for nxt in range(start, g + 1):
            grow(nxt + 1, acc + (nxt,))

    grow(1, ())
    return out


_BUILDERS: dict[str, Callable[[int, Field], tuple[StructureAlgebra, Filtration]]] = {
    "upper-triangular": _upper_triangular,
    "strictly-upper-triangular": _strictly_upper_triangular,
    "truncated-polynomial": _truncated_polynomial,
    "exterior-algebra": _exterior_algebra,
}


def builtin_names() -> list[str]:
    return sorted(_BUILDERS)


def builtin_example(name: str, param: int, field: Field = QQ) -> tuple[StructureAlgebra, Filtration]:
    """A validated builtin algebra/filtration pair by name and size parameter."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown builtin {name!r}; available: {', '.join(builtin_names())}"
        ) from None
    return builder(param, field)
