"""omega-Lie algebras as exact data, and classification of linear operators.

An omega-Lie algebra is a vector space with a skew-symmetric bracket and a
skew-symmetric bilinear form omega satisfying, for all x, y, z:

    [[x,y],z] + [[y,z],x] + [[z,x],y] = omega(x,y) z + omega(y,z) x + omega(z,x) y

With omega identically zero this is exactly the Jacobi identity.  Operators
are n x n rational matrices acting by R(e_i) = sum_j entries[i][j] e_j (rows
index input basis vectors); all tables transcribed from the literature use
this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import (
    Matrix,
    Vector,
    det,
    inverse,
    is_zero_matrix,
    mat,
    mat_mul,
    nullspace,
    rref,
    vec,
    zeros,
)


class SingularOperatorError(ValueError):
    """Raised when an inverse of a singular operator is requested."""


# ---------------------------------------------------------------------------
# core types


@dataclass(frozen=True)
class OmegaAlgebra:
    """Structure constants c[i][j][k] with [e_i,e_j] = sum_k c[i][j][k] e_k,
    plus the skew form omega[i][j] = omega(e_i, e_j)."""

    dim: int
    basis_names: tuple[str, ...]
    c: tuple[tuple[Vector, ...], ...]
    omega: Matrix
    params: Optional[tuple[tuple[str, Fraction], ...]] = None

    @classmethod
    def from_brackets(
        cls,
        basis_names: Sequence[str],
        brackets: Mapping[tuple[int, int], Sequence],
        omega: Mapping[tuple[int, int], object],
        params: Optional[Mapping[str, Fraction]] = None,
    ) -> "OmegaAlgebra":
        """Build from the nonzero relations [e_i,e_j] (i<j) and omega values;
        skew-symmetry fills in the rest."""
        n = len(basis_names)
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), coeffs in brackets.items():
            if i == j:
                raise ValueError("bracket [e_i,e_i] must be zero")
            row = vec(coeffs)
            for k in range(n):
                c[i][j][k] = row[k]
                c[j][i][k] = -row[k]
        om = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), val in omega.items():
            if i == j and Fraction(val) != 0:
                raise ValueError("omega(e_i,e_i) must be zero")
            om[i][j] = Fraction(val)
            om[j][i] = -Fraction(val)
        return cls(
            n,
            tuple(basis_names),
            tuple(tuple(tuple(r) for r in layer) for layer in c),
            tuple(tuple(r) for r in om),
            tuple(sorted(params.items())) if params else None,
        )

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if v[j] == 0:
                    continue
                f = u[i] * v[j]
                cij = self.c[i][j]
                for k in range(n):
                    if cij[k]:
                        out[k] += f * cij[k]
        return tuple(out)

    def omega_value(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for i in range(self.dim):
            if u[i] == 0:
                continue
            for j in range(self.dim):
                if v[j] != 0 and self.omega[i][j] != 0:
                    total += u[i] * v[j] * self.omega[i][j]
        return total

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1 if k == i else 0) for k in range(self.dim))

    def is_lie(self) -> bool:
        return is_zero_matrix(self.omega)


@dataclass(frozen=True)
class OperatorMatrix:
    """Linear operator in the row convention R(e_i) = sum_j entries[i][j] e_j."""

    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", mat(self.entries))
        n = len(self.entries)
        if any(len(r) != n for r in self.entries):
            raise ValueError("operator matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, n: int) -> "OperatorMatrix":
        return cls(zeros(n))

    @classmethod
    def identity(cls, n: int) -> "OperatorMatrix":
        from .linalg import identity as _id

        return cls(_id(n))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        n = self.dim
        return tuple(
            sum(v[i] * self.entries[i][j] for i in range(n)) for j in range(n)
        )

    def then(self, other: "OperatorMatrix") -> "OperatorMatrix":
        """Composition 'self then other' (x -> other(self(x)))."""
        return OperatorMatrix(mat_mul(self.entries, other.entries))

    def power(self, k: int) -> "OperatorMatrix":
        out = OperatorMatrix.identity(self.dim)
        for _ in range(k):
            out = out.then(self)
        return out

    def scale(self, q) -> "OperatorMatrix":
        q = Fraction(q)
        return OperatorMatrix(tuple(tuple(q * x for x in r) for r in self.entries))

    def add(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return OperatorMatrix(
            tuple(
                tuple(x + y for x, y in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def is_zero(self) -> bool:
        return is_zero_matrix(self.entries)

    def is_invertible(self) -> bool:
        return det(self.entries) != 0

    def inverse_operator(self) -> "OperatorMatrix":
        inv = inverse(self.entries)
        if inv is None:
            raise SingularOperatorError("operator is singular")
        return OperatorMatrix(inv)


@dataclass(frozen=True)
class Subspace:
    """Subspace given by a reduced-echelon basis (canonical per subspace)."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [vec(v) for v in vectors]
        rows = [r for r in rows if any(x != 0 for x in r)]
        if not rows:
            return cls(ambient_dim, ())
        red, pivots = rref(mat(rows))
        return cls(ambient_dim, tuple(red[: len(pivots)]))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return Subspace.span(self.ambient_dim, list(self.basis) + [vec(v)]).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.ambient_dim, list(self.basis) + list(other.basis))

    def is_zero(self) -> bool:
        return not self.basis


# ---------------------------------------------------------------------------
# validation


@dataclass
class AlgebraValidation:
    ok: bool
    failures: list  # (kind, indices, residual) triples

    def __bool__(self) -> bool:
        return self.ok


def validate_algebra(L: OmegaAlgebra) -> AlgebraValidation:
    """Check skew-symmetry of the bracket and of omega, and the twisted
    Jacobi identity on all basis triples i<j<k (multilinearity plus
    skew-symmetry make this exhaustive).  Failures are reported, not thrown."""
    failures = []
    n = L.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if L.c[i][j][k] != -L.c[j][i][k]:
                    failures.append(("bracket-skew", (i, j, k), L.c[i][j][k] + L.c[j][i][k]))
            if L.omega[i][j] != -L.omega[j][i]:
                failures.append(("omega-skew", (i, j), L.omega[i][j] + L.omega[j][i]))
    if not failures:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    ei, ej, ek = (L.basis_vector(t) for t in (i, j, k))
                    lhs = [Fraction(0)] * n
                    for a, b, cvec in (
                        (i, j, ek),
                        (j, k, ei),
                        (k, i, ej),
                    ):
                        inner = L.c[a][b]
                        term = L.bracket(inner, cvec)
                        lhs = [x + y for x, y in zip(lhs, term)]
                    rhs = [Fraction(0)] * n
                    for coeff, target in (
                        (L.omega[i][j], ek),
                        (L.omega[j][k], ei),
                        (L.omega[k][i], ej),
                    ):
                        rhs = [x + coeff * y for x, y in zip(rhs, target)]
                    residual = tuple(x - y for x, y in zip(lhs, rhs))
                    if any(x != 0 for x in residual):
                        failures.append(("jacobi", (i, j, k), residual))
    return AlgebraValidation(not failures, failures)


def kernel_omega(L: OmegaAlgebra) -> Subspace:
    """{x : omega(x, y) = 0 for all y}: the null space of the omega matrix
    (omega is skew, so left and right kernels agree)."""
    return Subspace.span(L.dim, nullspace(L.omega))


# ---------------------------------------------------------------------------
# operator classification


@dataclass(frozen=True)
class MapClassification:
    weight: Fraction
    is_rb: bool
    is_compatible: bool
    is_isometric: bool
    is_derivation: bool
    is_automorphism: bool
    is_square_zero: bool
    is_invertible: bool


def classify_map(L: OmegaAlgebra, R: OperatorMatrix, weight=0) -> MapClassification:
    """Exact checks of all operator identities on basis pairs.

    Rota-Baxter of weight w: [R(x),R(y)] = R([R(x),y] + [x,R(y)] + w [x,y]);
    compatible: omega(R(x),y) + omega(x,R(y)) = 0;
    isometric: omega(R(x),R(y)) = omega(x,y).
    Derivation and automorphism use the bracket alone; bilinearity reduces
    every identity to basis pairs.
    """
    if R.dim != L.dim:
        raise ValueError("operator and algebra dimensions differ")
    w = Fraction(weight)
    n = L.dim
    images = [R.apply(L.basis_vector(i)) for i in range(n)]
    is_rb = True
    is_compat = True
    is_isom = True
    is_der = True
    is_auto_bracket = True
    for i in range(n):
        for j in range(i + 1, n):
            ei, ej = L.basis_vector(i), L.basis_vector(j)
            ri, rj = images[i], images[j]
            lhs = L.bracket(ri, rj)
            inner = tuple(
                a + b + w * c
                for a, b, c in zip(L.bracket(ri, ej), L.bracket(ei, rj), L.c[i][j])
            )
            if lhs != R.apply(inner):
                is_rb = False
            if L.omega_value(ri, ej) + L.omega_value(ei, rj) != 0:
                is_compat = False
            if L.omega_value(ri, rj) != L.omega[i][j]:
                is_isom = False
            bracket_ij = L.c[i][j]
            if R.apply(bracket_ij) != tuple(
                a + b for a, b in zip(L.bracket(ri, ej), L.bracket(ei, rj))
            ):
                is_der = False
            if R.apply(bracket_ij) != lhs:
                is_auto_bracket = False
    invertible = R.is_invertible()
    return MapClassification(
        weight=w,
        is_rb=is_rb,
        is_compatible=is_compat,
        is_isometric=is_isom,
        is_derivation=is_der,
        is_automorphism=is_auto_bracket and invertible,
        is_square_zero=R.power(2).is_zero(),
        is_invertible=invertible,
    )


def inverse_correspondence(L: OmegaAlgebra, R: OperatorMatrix) -> OperatorMatrix:
    """The bijection between invertible weight-0 Rota-Baxter operators and
    invertible derivations: R maps to its inverse."""
    return R.inverse_operator()
