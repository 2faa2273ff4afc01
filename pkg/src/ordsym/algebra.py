"""Finite-dimensional associative algebras given by sparse structure constants.

An algebra is a basis, a field, and the coordinate vectors of every
pairwise basis product (only nonzero products stored).  Associativity is
checked eagerly on construction; a report-returning validator is exposed
for mutation testing and file input.

Evaluation of free polynomials, the degreewise spans of order-symmetric
values, nil-index and algebraicity-degree searches all live here.  The
degreewise spans are computed by the first-letter recursion

    s[profile] = sum_j  a_j * s[profile - e_j]

(proved and property-tested in the free algebra, transported here by the
evaluation homomorphism), which is exponentially cheaper than expanding
the symmetric sums word by word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Optional, Sequence

from .fields import Field, Scalar
from .freealg import FreePoly, multidegrees
from .linalg import Subspace

__all__ = [
    "ValidationReport",
    "InvalidAlgebraError",
    "StructureAlgebra",
    "AlgElement",
    "evaluate",
    "sym_values",
    "sym_span_in",
    "ChainResult",
    "sym_span_chain",
    "uniform_nil_index",
    "brute_force_nil_index",
    "algebraic_degree",
    "BoundResult",
    "uniform_algebraic_bound",
]

Coords = tuple[Scalar, ...]


@dataclass
class ValidationReport:
    ok: bool
    failures: list[dict] = dc_field(default_factory=list)

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(
            f"{f['law']} fails at {f.get('where')}" for f in self.failures
        )


class InvalidAlgebraError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(report.describe())
        self.report = report


class StructureAlgebra:
    """Associative algebra over a field, multiplication given basis-by-basis.

    mul maps a 0-based index pair (i, j) to the sparse coordinate dict of
    the product of basis elements i and j; absent pairs multiply to zero.
    """

    __slots__ = ("field", "dim", "names", "mul", "unit")

    def __init__(
        self,
        field: Field,
        names: Sequence[str],
        mul: dict[tuple[int, int], dict[int, object]],
        unit: Sequence | None = None,
        check: bool = True,
    ):
        self.field = field
        self.dim = len(names)
        self.names = tuple(names)
        clean: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), entry in mul.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"product index ({i},{j}) out of range")
            row = {}
            for k, c in entry.items():
                if not (0 <= k < self.dim):
                    raise ValueError(f"product target index {k} out of range")
                s = Scalar(field, c)
                if s:
                    row[k] = s
            if row:
                clean[(i, j)] = row
        self.mul = clean
        self.unit = None if unit is None else tuple(Scalar(field, c) for c in unit)
        if self.unit is not None and len(self.unit) != self.dim:
            raise ValueError("unit vector has wrong length")
        if check:
            report = self.validate()
            if not report.ok:
                raise InvalidAlgebraError(report)

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def multiply_coords(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Coords:
        out = [self.field.zero()] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                entry = self.mul.get((i, j))
                if not entry:
                    continue
                f = ai * bj
                for k, c in entry.items():
                    out[k] = out[k] + f * c
        return tuple(out)

    def validate(self) -> ValidationReport:
        """Associativity on all basis triples, unit laws if a unit is declared.

        Stops at the first violating triple per law, as the witnesses are
        what mutation tests need.
        """
        failures: list[dict] = []
        basis = [self.basis_element(i).coords for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.multiply_coords(basis[i], basis[j])
                for k in range(self.dim):
                    lhs = self.multiply_coords(ij, basis[k])
                    rhs = self.multiply_coords(basis[i], self.multiply_coords(basis[j], basis[k]))
                    if lhs != rhs:
                        failures.append(
                            {"law": "associativity", "where": (i, j, k),
                             "lhs": lhs, "rhs": rhs}
                        )
                        return ValidationReport(False, failures)
        if self.unit is not None:
            for i in range(self.dim):
                left = self.multiply_coords(self.unit, basis[i])
                right = self.multiply_coords(basis[i], self.unit)
                if left != basis[i] or right != basis[i]:
                    failures.append({"law": "unit", "where": i})
                    return ValidationReport(False, failures)
        return ValidationReport(True)

    def element(self, coords: Iterable) -> "AlgElement":
        return AlgElement(self, tuple(Scalar(self.field, c) for c in coords))

    def basis_element(self, i: int) -> "AlgElement":
        if not (0 <= i < self.dim):
            raise ValueError(f"basis index {i} out of range")
        coords = [self.field.zero()] * self.dim
        coords[i] = self.field.one()
        return AlgElement(self, tuple(coords))

    def basis_elements(self) -> list["AlgElement"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def zero_element(self) -> "AlgElement":
        return AlgElement(self, tuple([self.field.zero()] * self.dim))

    def unit_element(self) -> "AlgElement":
        if self.unit is None:
            raise ValueError("algebra has no unit")
        return AlgElement(self, self.unit)

    def __repr__(self) -> str:
        return f"StructureAlgebra(dim={self.dim}, field={self.field})"


class AlgElement:
    """Element of a StructureAlgebra as an exact coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: StructureAlgebra, coords: Coords):
        if len(coords) != algebra.dim:
            raise ValueError("coordinate vector has wrong length")
        self.algebra = algebra
        self.coords = coords

    def _check(self, other: "AlgElement") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            self._check(other)
            return AlgElement(self.algebra, self.algebra.multiply_coords(self.coords, other.coords))
        if isinstance(other, (Scalar, int)):
            c = Scalar(self.algebra.field, other)
            return AlgElement(self.algebra, tuple(c * a for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "AlgElement":
        if n < 1:
            if n == 0 and self.algebra.is_unital:
                return self.algebra.unit_element()
            raise ValueError("power must be >= 1 (or 0 in a unital algebra)")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def nil_index(self, cutoff: int) -> Optional[int]:
        """Least n <= cutoff with self**n = 0, or None."""
        p = self
        for n in range(1, cutoff + 1):
            if p.is_zero():
                return n
            p = p * self
        return None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgElement)
            and self.algebra is other.algebra
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        parts = [f"({c})*{self.algebra.names[i]}" for i, c in enumerate(self.coords) if c]
        return " + ".join(parts) if parts else "0"


def evaluate(p: FreePoly, assignment: Sequence[AlgElement]) -> AlgElement:
    """Image of a free polynomial under generator j -> assignment[j-1]."""
    if not assignment:
        raise ValueError("empty assignment")
    if len(assignment) != p.ngens:
        raise ValueError(f"assignment length {len(assignment)} != arity {p.ngens}")
    algebra = assignment[0].algebra
    if any(e.algebra is not algebra for e in assignment):
        raise ValueError("assignment mixes algebras")
    if p.field != algebra.field:
        raise ValueError("polynomial and algebra fields differ")
    acc = algebra.zero_element()
    for word, coeff in p.terms():
        if not word:
            term = algebra.unit_element()  # raises when the algebra has no unit
        else:
            term = assignment[word[0] - 1]
            for letter in word[1:]:
                term = term * assignment[letter - 1]
        acc = acc + coeff * term
    return acc


def sym_values(elts: Sequence[AlgElement], max_total: int) -> dict[tuple[int, ...], AlgElement]:
    """Values of every order-symmetric sum of total degree 1..max_total.

    Computed by the first-letter recursion, one algebra multiplication per
    lattice edge; agrees with evaluate(sym_poly(profile), elts) everywhere
    (tested), but stays polynomial in the degree.
    """
    if not elts:
        raise ValueError("need at least one element")
    vals: dict[tuple[int, ...], AlgElement] = {}
    level = _first_level(elts)
    vals.update(level)
    for total in range(2, max_total + 1):
        level = _level_values(elts, level, total)
        vals.update(level)
    return vals


def _level_values(
    elts: Sequence[AlgElement], level: dict[tuple[int, ...], AlgElement], total: int
) -> dict[tuple[int, ...], AlgElement]:
    """One step of the first-letter recursion: degree total-1 values -> total."""
    m = len(elts)
    nxt: dict[tuple[int, ...], AlgElement] = {}
    for md in multidegrees(total, m):
        acc = elts[0].algebra.zero_element()
        for j in range(m):
            if md[j]:
                parent = tuple(md[t] - (1 if t == j else 0) for t in range(m))
                acc = acc + elts[j] * level[parent]
        nxt[md] = acc
    return nxt


def _first_level(elts: Sequence[AlgElement]) -> dict[tuple[int, ...], AlgElement]:
    m = len(elts)
    return {
        tuple(1 if t == j else 0 for t in range(m)): elts[j] for j in range(m)
    }


def sym_span_in(elts: Sequence[AlgElement], n: int) -> Subspace:
    """Span of all degree-n order-symmetric values, in algebra coordinates.

    Once every value of some level vanishes, all later levels vanish too
    (each is a sum of element multiples of the previous one), so the walk
    short-circuits to the zero subspace; degree-N checks with N far above
    the nilpotency degree cost nothing extra.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    algebra = elts[0].algebra
    level = _first_level(elts)
    for total in range(2, n + 1):
        if all(v.is_zero() for v in level.values()):
            return Subspace.zero(algebra.field, algebra.dim)
        level = _level_values(elts, level, total)
    return Subspace(algebra.field, algebra.dim, [v.coords for v in level.values()])


@dataclass
class ChainResult:
    """Degreewise growth of the cumulative span of order-symmetric values.

    growth[i] is the dimension added at degree i+1; cumulative is the span
    of every degree computed; stabilized_at is the first degree that added
    nothing (the stopping point), or None if the hard cap hit first.
    includes_degree_zero records whether the unit seeded the span.
    """

    growth: list[int]
    cumulative: Subspace
    stabilized_at: Optional[int]
    includes_degree_zero: bool

    @property
    def cumulative_dims(self) -> list[int]:
        acc = self.cumulative.dim - sum(self.growth)
        out = []
        for g in self.growth:
            acc += g
            out.append(acc)
        return out


def sym_span_chain(
    elts: Sequence[AlgElement],
    include_degree_zero: bool = False,
    stop_at_plateau: bool = True,
    max_degree: Optional[int] = None,
) -> ChainResult:
    """Cumulative spans of order-symmetric values, degree by degree.

    Stops at the first degree whose values add nothing to the span, capped
    at the algebra dimension.  Over a field with more elements than the
    cap, the cap is provably exhaustive (every element is algebraic of
    degree at most dim+1, which pins all higher symmetric spans inside the
    cumulative one).  Over small prime fields a plateau can be deceptive:
    symmetric sums may vanish for a few degrees because the characteristic
    divides their multinomial coefficients, and reappear later, so pass
    stop_at_plateau=False (and a taller max_degree) when the tail matters;
    uniform_algebraic_bound does exactly that for its certificate.
    """
    if not elts:
        raise ValueError("need at least one element")
    algebra = elts[0].algebra
    cap = algebra.dim if max_degree is None else max_degree
    cap = max(cap, 1)
    vectors: list[Coords] = []
    if include_degree_zero:
        if not algebra.is_unital:
            raise ValueError("degree-zero component needs a unital algebra")
        vectors.append(algebra.unit)
    cum = Subspace(algebra.field, algebra.dim, vectors)
    growth: list[int] = []
    stabilized_at: Optional[int] = None
    level = _first_level(elts)
    total = 1
    while total <= cap:
        before = cum.dim
        cum = cum + Subspace(algebra.field, algebra.dim, [v.coords for v in level.values()])
        growth.append(cum.dim - before)
        if growth[-1] == 0 and stabilized_at is None:
            stabilized_at = total
            if stop_at_plateau:
                break
        if cum.dim == algebra.dim and total < cap:
            # the span is the whole algebra: every later degree adds zero
            if stabilized_at is None:
                stabilized_at = total + 1
            if stop_at_plateau:
                growth.append(0)
            else:
                growth.extend([0] * (cap - total))
            break
        total += 1
        if total <= cap:
            if all(v.is_zero() for v in level.values()):
                # an all-zero level forces all later ones to zero exactly
                growth.extend([0] * (cap - total + 1))
                break
            level = _level_values(elts, level, total)
    return ChainResult(growth, cum, stabilized_at, include_degree_zero)


def uniform_nil_index(elts: Sequence[AlgElement], cutoff: Optional[int] = None) -> Optional[int]:
    """Least n with the whole degree-n symmetric span zero, or None up to cutoff.

    A zero span at degree n certifies that every linear combination of the
    elements has n-th power zero, over any field (no field-size hypothesis
    for this direction).  Once some degree's values all vanish, so do all
    later ones, by the first-letter recursion, so the first all-zero level
    is exactly the certificate degree.
    """
    if not elts:
        raise ValueError("need at least one element")
    algebra = elts[0].algebra
    cap = algebra.dim + 1 if cutoff is None else cutoff
    # A non-nilpotent member rules out a zero span at every degree: the
    # combination picking that member alone would have to vanish.
    for e in elts:
        if e.nil_index(cap) is None:
            return None
    level = _first_level(elts)
    for n in range(1, cap + 1):
        if all(v.is_zero() for v in level.values()):
            return n
        if n < cap:
            level = _level_values(elts, level, n + 1)
    return None


def brute_force_nil_index(
    elts: Sequence[AlgElement], budget: int = 200_000
) -> Optional[int]:
    """Exhaustive oracle: max nilpotence index over every field combination.

    Only for finite fields; enumerates all |field|^m coefficient tuples and
    powers each combination directly.  None if any combination fails to
    vanish within dim+1.
    """
    if not elts:
        raise ValueError("need at least one element")
    algebra = elts[0].algebra
    f = algebra.field
    if not f.is_finite:
        raise ValueError("brute-force enumeration needs a finite field")
    total = f.p ** len(elts)
    if total > budget:
        raise ValueError(f"enumeration budget exceeded: {total} > {budget}")
    cap = algebra.dim + 1
    worst = 1
    combos = [()]
    for _ in elts:
        combos = [t + (c,) for t in combos for c in f.elements()]
    for coeffs in combos:
        v = algebra.zero_element()
        for c, e in zip(coeffs, elts):
            v = v + c * e
        idx = v.nil_index(cap)
        if idx is None:
            return None
        worst = max(worst, idx)
    return worst


def algebraic_degree(a: AlgElement, unital: bool = False) -> int:
    """Least d >= 1 with a**d in the span of lower powers.

    Non-unital by default: the span runs over a, ..., a**(d-1) only.  With
    unital=True the identity joins the span (the algebra must have one).
    Always terminates: powers live in a space of dimension at most dim, so
    d never exceeds dim + 1 (dim + 2 in the seeded-unit case).
    """
    algebra = a.algebra
    seed: list[Coords] = []
    if unital:
        seed.append(algebra.unit_element().coords)  # raises if no unit
    spanned = Subspace(algebra.field, algebra.dim, seed)
    p = a
    for d in range(1, algebra.dim + 3):
        if spanned.contains(p.coords):
            return d
        spanned = spanned + Subspace(algebra.field, algebra.dim, [p.coords])
        p = p * a
    raise RuntimeError("unreachable: powers span a bounded space")


@dataclass
class BoundResult:
    """Uniform algebraicity certificate from the stabilized span chain.

    d is the least degree with the cumulative span equal to the span of
    degrees < d; bound = C(d+m-1, m) then caps the algebraic degree of
    every linear combination of the elements.  sampled_degrees are seeded
    spot checks, each necessarily <= bound.
    """

    d: int
    bound: int
    chain: ChainResult
    sampled_degrees: list[int]


def _least_collapse_degree(chain: ChainResult) -> int:
    """Least d with the cumulative span already reached by degree d-1."""
    final = chain.cumulative.dim
    d, acc = 1, 0
    for g in chain.growth:
        if acc == final:
            break
        acc += g
        d += 1
    return d


def uniform_algebraic_bound(
    elts: Sequence[AlgElement], samples: int = 8, seed: int = 0
) -> BoundResult:
    """Certified bound on the algebraic degree of every combination of elts.

    Finds the least d with the whole symmetric span collapsed into degrees
    < d, then verifies the collapse literally up to degree C(d+m-1, m): the
    cumulative span through that degree has dimension below the bound, so
    the powers 1..bound of any combination are linearly dependent.  That
    hypothesis-checking loop makes the certificate valid over any field;
    a plateau alone is not sufficient evidence on small prime fields,
    where symmetric sums can vanish for several degrees (binomial
    coefficients divisible by the characteristic) and then reappear.
    """
    m = len(elts)
    algebra = elts[0].algebra
    horizon = algebra.dim
    while True:
        chain = sym_span_chain(elts, stop_at_plateau=False, max_degree=horizon)
        d = _least_collapse_degree(chain)
        bound = comb(d + m - 1, m)
        if chain.cumulative.dim == algebra.dim:
            break  # the span is the whole algebra; nothing can escape it
        if horizon >= bound:
            break
        horizon = bound
    rng = random.Random(seed)
    degrees: list[int] = []
    for _ in range(samples):
        v = algebra.zero_element()
        for e in elts:
            v = v + rng.randint(-3, 3) * e
        degrees.append(algebraic_degree(v))
    if any(deg > bound for deg in degrees):
        raise RuntimeError("algebraicity bound violated by a sampled element")
    return BoundResult(d, bound, chain, degrees)
