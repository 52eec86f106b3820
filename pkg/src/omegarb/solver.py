"""From an omega-Lie algebra and a constraint profile to the polynomial
ideal cutting out the corresponding operator variety, plus its analysis.

The pipeline: introduce a generic operator matrix (x_ij), expand the chosen
operator identities on all basis pairs, project onto basis vectors to get one
polynomial per (pair, coordinate), and hand the resulting ideal to the ideal
engine for Groebner bases, dimension, and component verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .algebras import OmegaAlgebra, OperatorMatrix, classify_map
from .ideals import (
    EMPTY_VARIETY,
    ComponentReport,
    Ideal,
    PrimalityCertificate,
    SplitResult,
    find_certificate,
    krull_dim,
    make_ideal,
    split_heuristic,
    verify_components,
)
from .groebner import GroebnerBasis
from .poly import Polynomial, VariableTable, grevlex_order


@dataclass(frozen=True)
class ConstraintProfile:
    """Which operator variety to carve out.

    weight: the Rota-Baxter weight; compatible adds the omega-compatibility
    identity; isometric adds the omega-isometry identity; square_zero adds
    the entries of R*R.
    """

    weight: Fraction = Fraction(0)
    compatible: bool = False
    isometric: bool = False
    square_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))


# the four named varieties used throughout the reports
PROFILES: dict[str, ConstraintProfile] = {
    "b": ConstraintProfile(weight=0),
    "bc": ConstraintProfile(weight=0, compatible=True),
    "bi1": ConstraintProfile(weight=1, isometric=True),
    "bs": ConstraintProfile(weight=0, compatible=True, square_zero=True),
}


def profile_by_name(name: str) -> ConstraintProfile:
    try:
        return PROFILES[name]
    except KeyError:
        raise KeyError(
            f"unknown profile {name!r}; expected one of {sorted(PROFILES)}"
        ) from None


def entry_name(i: int, j: int) -> str:
    """Name of the generic matrix entry in row i, column j (1-based)."""
    if i < 10 and j < 10:
        return f"x{i}{j}"
    return f"x{i}_{j}"


@dataclass(frozen=True)
class GenericOperator:
    """The symbolic n x n matrix (x_ij), row-major over its own table."""

    dim: int
    table: VariableTable
    entries: tuple[tuple[Polynomial, ...], ...]

    @classmethod
    def of_dimension(cls, n: int) -> "GenericOperator":
        names = [entry_name(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        table = VariableTable(tuple(names))
        entries = tuple(
            tuple(
                Polynomial.variable(table, entry_name(i, j)) for j in range(1, n + 1)
            )
            for i in range(1, n + 1)
        )
        return cls(n, table, entries)

    def apply_basis(self, i: int) -> tuple[Polynomial, ...]:
        """Image of e_i: coordinate polynomials."""
        return self.entries[i]

    def apply(self, coords: Sequence[Polynomial]) -> tuple[Polynomial, ...]:
        n = self.dim
        zero = Polynomial.zero(self.table)
        out = [zero] * n
        for i in range(n):
            ci = coords[i]
            if ci.is_zero():
                continue
            for j in range(n):
                if not self.entries[i][j].is_zero():
                    out[j] = out[j] + ci * self.entries[i][j]
        return tuple(out)


@dataclass(frozen=True)
class TaggedEquation:
    """One generated polynomial with its provenance tag, e.g. rb(1,2)->3."""

    tag: str
    poly: Polynomial


def _symbolic_bracket(
    L: OmegaAlgebra, u: Sequence[Polynomial], v: Sequence[Polynomial], table
) -> tuple[Polynomial, ...]:
    n = L.dim
    zero = Polynomial.zero(table)
    out = [zero] * n
    for i in range(n):
        if u[i].is_zero():
            continue
        for j in range(n):
            if v[j].is_zero():
                continue
            cij = L.c[i][j]
            prod = None
            for k in range(n):
                if cij[k]:
                    if prod is None:
                        prod = u[i] * v[j]
                    out[k] = out[k] + prod.scale(cij[k])
    return tuple(out)


def _symbolic_omega(
    L: OmegaAlgebra, u: Sequence[Polynomial], v: Sequence[Polynomial], table
) -> Polynomial:
    out = Polynomial.zero(table)
    for i in range(L.dim):
        if u[i].is_zero():
            continue
        for j in range(L.dim):
            if L.omega[i][j] and not v[j].is_zero():
                out = out + (u[i] * v[j]).scale(L.omega[i][j])
    return out


def generate_equations(
    L: OmegaAlgebra,
    profile: ConstraintProfile,
    *,
    _reverse_pairs: bool = False,
) -> tuple[GenericOperator, list[TaggedEquation]]:
    """All defining polynomials for the chosen variety, tagged for
    traceability; duplicates and zeros are pruned by generate_system."""
    R = GenericOperator.of_dimension(L.dim)
    table = R.table
    n = L.dim
    basis_polys = [
        tuple(
            Polynomial.constant(table, 1) if k == i else Polynomial.zero(table)
            for k in range(n)
        )
        for i in range(n)
    ]
    images = [R.apply_basis(i) for i in range(n)]
    out: list[TaggedEquation] = []
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if _reverse_pairs:
        pairs = [(j, i) for (i, j) in pairs]
    for i, j in pairs:
        ri, rj = images[i], images[j]
        lhs = _symbolic_bracket(L, ri, rj, table)
        inner = [
            a + b
            for a, b in zip(
                _symbolic_bracket(L, ri, basis_polys[j], table),
                _symbolic_bracket(L, basis_polys[i], rj, table),
            )
        ]
        if profile.weight != 0:
            for k in range(n):
                if L.c[i][j][k]:
                    inner[k] = inner[k] + Polynomial.constant(
                        table, profile.weight * L.c[i][j][k]
                    )
        rhs = R.apply(inner)
        for k in range(n):
            out.append(
                TaggedEquation(f"rb({i + 1},{j + 1})->{k + 1}", lhs[k] - rhs[k])
            )
        if profile.compatible:
            p = _symbolic_omega(L, ri, basis_polys[j], table) + _symbolic_omega(
                L, basis_polys[i], rj, table
            )
            out.append(TaggedEquation(f"compat({i + 1},{j + 1})", p))
        if profile.isometric:
            p = _symbolic_omega(L, ri, rj, table) - Polynomial.constant(
                table, L.omega[i][j]
            )
            out.append(TaggedEquation(f"isom({i + 1},{j + 1})", p))
    if profile.square_zero:
        for i in range(n):
            row = R.apply(images[i])
            for k in range(n):
                out.append(TaggedEquation(f"sq({i + 1})->{k + 1}", row[k]))
    return R, out


@lru_cache(maxsize=256)
def generate_system(L: OmegaAlgebra, profile: ConstraintProfile) -> Ideal:
    """The variety-defining ideal: generated equations, made primitive with
    positive leading coefficient, deduplicated, zeros dropped.

    Cached per (algebra, profile): the returned Ideal also carries the
    Groebner cache, so repeated membership tests amortize."""
    R, tagged = generate_equations(L, profile)
    order = grevlex_order(R.table)
    seen: dict[Polynomial, None] = {}
    for eq in tagged:
        if eq.poly.is_zero():
            continue
        seen.setdefault(eq.poly.primitive(order), None)
    return make_ideal(R.table, tuple(seen.keys()))


def membership_check(
    L: OmegaAlgebra, profile: ConstraintProfile, R: OperatorMatrix
) -> bool:
    """Point-on-variety test: substituting R's entries kills every
    generator.  Agrees with classify_map by construction (cross-checked in
    the test suite on random operators)."""
    I = generate_system(L, profile)
    point = {}
    for i in range(L.dim):
        for j in range(L.dim):
            point[entry_name(i + 1, j + 1)] = R.entries[i][j]
    return all(g.evaluate(point) == 0 for g in I.generators)


def profile_flags_match(
    L: OmegaAlgebra, profile: ConstraintProfile, R: OperatorMatrix
) -> bool:
    """The classification-side view of the same predicate."""
    cls = classify_map(L, R, profile.weight)
    ok = cls.is_rb
    if profile.compatible:
        ok = ok and cls.is_compatible
    if profile.isometric:
        ok = ok and cls.is_isometric
    if profile.square_zero:
        ok = ok and cls.is_square_zero
    return ok


# ---------------------------------------------------------------------------
# variety reports


@dataclass
class ExpectedCell:
    """Reference values for one (algebra, profile) cell of the published
    survey tables, with optional reconciled values for known internal
    inconsistencies (``discrepancies`` maps field -> value we compute)."""

    dim: Optional[int] = None
    n_components: Optional[int] = None
    component_dims: Optional[tuple[int, ...]] = None
    discrepancies: dict = field(default_factory=dict)


@dataclass
class VarietyReport:
    ideal: Ideal
    gb: GroebnerBasis
    dim: object  # int or EMPTY_VARIETY
    components: Optional[ComponentReport]
    component_ideals: list[Ideal]
    certificates: list[Optional[PrimalityCertificate]]
    split: Optional[SplitResult]
    expected: Optional[ExpectedCell]
    matches: dict
    discrepancy_flags: list[str]

    @property
    def n_components(self) -> int:
        return len(self.component_ideals)

    @property
    def component_dims(self) -> tuple:
        if self.components is None:
            return ()
        return self.components.dims

    @property
    def confirmed(self) -> bool:
        return self.components is not None and self.components.confirmed


def _compare_expected(report: "VarietyReport", expected: ExpectedCell) -> None:
    def check(name, computed, wanted):
        if wanted is None:
            return
        if computed == wanted:
            report.matches[name] = True
        elif name in expected.discrepancies and computed == expected.discrepancies[name]:
            report.matches[name] = True
            report.discrepancy_flags.append(
                f"{name}: published value {wanted}, computed {computed}"
                " (known internal inconsistency)"
            )
        else:
            report.matches[name] = False

    check("dim", report.dim, expected.dim)
    check("n_components", report.n_components, expected.n_components)
    if expected.component_dims is not None:
        check(
            "component_dims",
            tuple(sorted(report.component_dims, key=str)),
            tuple(sorted(expected.component_dims, key=str)),
        )


def analyze_variety(
    L: OmegaAlgebra,
    profile: ConstraintProfile,
    candidates: Optional[Sequence[tuple[Ideal, Optional[PrimalityCertificate]]]] = None,
    expected: Optional[ExpectedCell] = None,
) -> VarietyReport:
    """Groebner basis, dimension, and component verification for one cell.

    With candidates supplied they are verified as the irreducible
    components; otherwise the splitting heuristic proposes components and
    certificates are searched for automatically.
    """
    I = generate_system(L, profile)
    gb = I.groebner()
    dim = krull_dim(I)
    split = None
    if candidates is None:
        split = split_heuristic(I)
        candidates = [(J, find_certificate(J)) for J in split.ideals]
    comp = verify_components(I, candidates) if candidates else None
    report = VarietyReport(
        ideal=I,
        gb=gb,
        dim=dim,
        components=comp,
        component_ideals=[c[0] for c in candidates],
        certificates=[c[1] for c in candidates],
        split=split,
        expected=expected,
        matches={},
        discrepancy_flags=[],
    )
    if comp is not None and comp.confirmed and dim is not EMPTY_VARIETY:
        dims = [d for d in comp.dims if d is not EMPTY_VARIETY]
        if dims and max(dims) != dim:
            report.discrepancy_flags.append(
                f"component dims {comp.dims} inconsistent with total dim {dim}"
            )
    if expected is not None:
        _compare_expected(report, expected)
    return report
