"""Structures built from Rota-Baxter operators: left-symmetric algebras,
deformed omega-Lie algebras, Hom-Lie algebras, and module twists.

Every construction verifies its hypotheses before building anything and
raises :class:`PreconditionError` naming the failed hypothesis, since a
silently misused construction produces tables that violate the claimed
identities.  Outputs are validated against their defining identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebras import (
    OmegaAlgebra,
    OperatorMatrix,
    Subspace,
    classify_map,
    kernel_omega,
    validate_algebra,
)
from .linalg import Matrix, Vector, mat


class PreconditionError(ValueError):
    """A construction hypothesis failed; ``hypothesis`` names it."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        message = f"hypothesis not satisfied: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class IterationHalted(RuntimeError):
    """Deformation iteration stopped because a power of the operator is not
    a compatible Rota-Baxter operator on the current algebra."""

    def __init__(self, step: int, produced: list):
        self.step = step
        self.produced = produced
        super().__init__(
            f"iteration halted at step {step}: R^{step} is not a compatible"
            f" weight-0 Rota-Baxter operator on the previous algebra"
        )


# ---------------------------------------------------------------------------
# left-symmetric algebras


@dataclass(frozen=True)
class LeftSymmetricAlgebra:
    """Multiplication table m[i][j][k]: e_i * e_j = sum_k m[i][j][k] e_k."""

    dim: int
    basis_names: tuple[str, ...]
    m: tuple[tuple[Vector, ...], ...]

    def multiply(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if v[j] == 0:
                    continue
                f = u[i] * v[j]
                for k in range(n):
                    if self.m[i][j][k]:
                        out[k] += f * self.m[i][j][k]
        return tuple(out)


def is_left_symmetric(A: LeftSymmetricAlgebra) -> bool:
    """(xy)z - x(yz) = (yx)z - y(xz) on all basis triples."""
    n = A.dim
    basis = [tuple(Fraction(1 if t == i else 0) for t in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                lhs = tuple(
                    a - b
                    for a, b in zip(
                        A.multiply(A.multiply(x, y), z), A.multiply(x, A.multiply(y, z))
                    )
                )
                rhs = tuple(
                    a - b
                    for a, b in zip(
                        A.multiply(A.multiply(y, x), z), A.multiply(y, A.multiply(x, z))
                    )
                )
                if lhs != rhs:
                    return False
    return True


def left_symmetric_from_rb(L: OmegaAlgebra, R: OperatorMatrix) -> LeftSymmetricAlgebra:
    """x*y := [R(x), y] is left-symmetric when R is a weight-0 Rota-Baxter
    operator whose image lies in ker(omega).  Both hypotheses are checked."""
    cls = classify_map(L, R, 0)
    if not cls.is_rb:
        raise PreconditionError("R is a Rota-Baxter operator of weight 0")
    ker = kernel_omega(L)
    for i in range(L.dim):
        if not ker.contains(R.apply(L.basis_vector(i))):
            raise PreconditionError(
                "image(R) inside ker(omega)",
                f"R({L.basis_names[i]}) is outside the kernel",
            )
    n = L.dim
    images = [R.apply(L.basis_vector(i)) for i in range(n)]
    table = tuple(
        tuple(L.bracket(images[i], L.basis_vector(j)) for j in range(n))
        for i in range(n)
    )
    A = LeftSymmetricAlgebra(n, L.basis_names, table)
    if not is_left_symmetric(A):
        raise AssertionError("construction produced a non-left-symmetric table")
    return A


# ---------------------------------------------------------------------------
# deformed omega-Lie algebras


def omega_deform(L: OmegaAlgebra, R: OperatorMatrix) -> OmegaAlgebra:
    """The deformation L_R: bracket [x,y]_R = [R(x),y] + [x,R(y)] and form
    omega_R(x,y) = omega(R(x),R(y)); requires R compatible Rota-Baxter of
    weight 0.  The output is validated."""
    cls = classify_map(L, R, 0)
    if not (cls.is_rb and cls.is_compatible):
        raise PreconditionError("R is a compatible Rota-Baxter operator of weight 0")
    n = L.dim
    images = [R.apply(L.basis_vector(i)) for i in range(n)]
    brackets = {}
    omega_vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            bij = tuple(
                a + b
                for a, b in zip(
                    L.bracket(images[i], L.basis_vector(j)),
                    L.bracket(L.basis_vector(i), images[j]),
                )
            )
            brackets[(i, j)] = bij
            omega_vals[(i, j)] = L.omega_value(images[i], images[j])
    out = OmegaAlgebra.from_brackets(L.basis_names, brackets, omega_vals, params=None)
    check = validate_algebra(out)
    if not check.ok:
        raise AssertionError(f"deformation violates the defining identity: {check.failures[:3]}")
    return out


def iterate_deform(
    L: OmegaAlgebra, R: OperatorMatrix, steps: int
) -> list[OmegaAlgebra]:
    """Iterated deformation: L_0 = L and L_i deforms L_{i-1} by R^i.

    Each step verifies R^i (and R itself) is a compatible weight-0
    Rota-Baxter operator on L_{i-1}; on failure the iteration halts with
    :class:`IterationHalted` carrying the offending step and the algebras
    built so far.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    cls = classify_map(L, R, 0)
    if not (cls.is_rb and cls.is_compatible):
        raise PreconditionError("R is a compatible Rota-Baxter operator of weight 0")
    produced = [L]
    current = L
    for i in range(1, steps + 1):
        power = R.power(i)
        cls_pow = classify_map(current, power, 0)
        if not (cls_pow.is_rb and cls_pow.is_compatible):
            raise IterationHalted(i, produced)
        current = omega_deform(current, power)
        produced.append(current)
    return produced


# ---------------------------------------------------------------------------
# Hom-Lie algebras


@dataclass(frozen=True)
class HomLieAlgebra:
    """Skew bracket table with a twist map; the twisted Jacobi identity
    [[x,y],t(z)] + [[y,z],t(x)] + [[z,x],t(y)] = 0 holds on basis triples."""

    dim: int
    basis_names: tuple[str, ...]
    c: tuple[tuple[Vector, ...], ...]
    twist: OperatorMatrix

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
                for k in range(n):
                    if self.c[i][j][k]:
                        out[k] += f * self.c[i][j][k]
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1 if k == i else 0) for k in range(self.dim))


def hom_jacobi_holds(g: HomLieAlgebra) -> bool:
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = [Fraction(0)] * n
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = g.c[a][b]
                    tw = g.twist.apply(g.basis_vector(c))
                    term = g.bracket(inner, tw)
                    total = [x + y for x, y in zip(total, term)]
                if any(x != 0 for x in total):
                    return False
    return True


def homlie_from_rb(L: OmegaAlgebra, R: OperatorMatrix) -> HomLieAlgebra:
    """Hom-Lie algebra with bracket [x,y]_R and twist R, for R a compatible
    weight-0 Rota-Baxter operator with R^2 = 0.  Hypotheses and the twisted
    Jacobi identity are both checked."""
    cls = classify_map(L, R, 0)
    if not (cls.is_rb and cls.is_compatible):
        raise PreconditionError("R is a compatible Rota-Baxter operator of weight 0")
    if not cls.is_square_zero:
        raise PreconditionError("R^2 = 0")
    n = L.dim
    images = [R.apply(L.basis_vector(i)) for i in range(n)]
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c[i][j] = tuple(
                a + b
                for a, b in zip(
                    L.bracket(images[i], L.basis_vector(j)),
                    L.bracket(L.basis_vector(i), images[j]),
                )
            )
    g = HomLieAlgebra(n, L.basis_names, tuple(tuple(row) for row in c), R)
    if not hom_jacobi_holds(g):
        raise AssertionError("construction violates the twisted Jacobi identity")
    return g


# ---------------------------------------------------------------------------
# solvability / nilpotency of the bracket


@dataclass(frozen=True)
class SeriesReport:
    """Derived and lower central series of the bracket (the twist plays no
    role), with the first-vanishing indices."""

    derived_dims: tuple[int, ...]
    lower_central_dims: tuple[int, ...]
    abelian: bool
    solvable: bool
    solvable_length: Optional[int]
    nilpotent: bool
    nilpotent_class: Optional[int]

    @property
    def category(self) -> str:
        if self.abelian:
            return "abelian"
        if self.nilpotent:
            return "nilpotent"
        if self.solvable:
            return "solvable"
        return "non-solvable"


def _bracket_span(g: HomLieAlgebra, U: Subspace, W: Subspace) -> Subspace:
    vecs = [g.bracket(u, w) for u in U.basis for w in W.basis]
    return Subspace.span(g.dim, vecs)


def homlie_structure(g: HomLieAlgebra) -> SeriesReport:
    """Series dims start at the full space; length/class is the first index
    whose term vanishes (2 means [g,g] != 0 but the next term is zero)."""
    full = Subspace.span(g.dim, [g.basis_vector(i) for i in range(g.dim)])
    derived = [full]
    while not derived[-1].is_zero():
        nxt = _bracket_span(g, derived[-1], derived[-1])
        if nxt.dim == derived[-1].dim:
            break
        derived.append(nxt)
    lower = [full]
    while not lower[-1].is_zero():
        nxt = _bracket_span(g, lower[-1], full)
        if nxt.dim == lower[-1].dim:
            break
        lower.append(nxt)
    derived_dims = tuple(s.dim for s in derived)
    lower_dims = tuple(s.dim for s in lower)
    solvable = derived[-1].is_zero()
    nilpotent = lower[-1].is_zero()
    abelian = len(lower_dims) >= 2 and lower_dims[1] == 0 if g.dim else True
    return SeriesReport(
        derived_dims=derived_dims,
        lower_central_dims=lower_dims,
        abelian=abelian,
        solvable=solvable,
        solvable_length=len(derived_dims) - 1 if solvable else None,
        nilpotent=nilpotent,
        nilpotent_class=len(lower_dims) - 1 if nilpotent else None,
    )


# ---------------------------------------------------------------------------
# modules and twists


@dataclass(frozen=True)
class ModuleAction:
    """Action matrices rho[i] (column-vector convention): e_i . v = rho[i] v."""

    algebra_dim: int
    module_dim: int
    rho: tuple[Matrix, ...]

    @classmethod
    def from_matrices(cls, algebra_dim: int, matrices: Sequence) -> "ModuleAction":
        ms = tuple(mat(m) for m in matrices)
        if len(ms) != algebra_dim:
            raise ValueError("one action matrix per algebra basis vector required")
        mdim = len(ms[0]) if ms else 0
        for m in ms:
            if len(m) != mdim or any(len(r) != mdim for r in m):
                raise ValueError("action matrices must be square of equal size")
        return cls(algebra_dim, mdim, ms)

    def act_matrix(self, coords: Sequence[Fraction]) -> Matrix:
        n = self.module_dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for i, ci in enumerate(coords):
            if ci == 0:
                continue
            for r in range(n):
                for s in range(n):
                    if self.rho[i][r][s]:
                        out[r][s] += ci * self.rho[i][r][s]
        return tuple(tuple(r) for r in out)


@dataclass
class ModuleValidation:
    ok: bool
    failures: list  # (i, j, residual matrix)

    def __bool__(self) -> bool:
        return self.ok


def validate_module(L: OmegaAlgebra, V: ModuleAction) -> ModuleValidation:
    """Check the module identity [x,y].v = x.(y.v) - y.(x.v) + omega(x,y) v
    on all basis pairs."""
    if V.algebra_dim != L.dim:
        raise ValueError("module and algebra dimensions differ")
    failures = []
    m = V.module_dim
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = V.act_matrix(L.c[i][j])
            comm = _mat_sub(
                _mat_mul(V.rho[i], V.rho[j]), _mat_mul(V.rho[j], V.rho[i])
            )
            rhs = _mat_add(comm, _mat_scale_id(L.omega[i][j], m))
            if lhs != rhs:
                failures.append((i, j, _mat_sub(lhs, rhs)))
    return ModuleValidation(not failures, failures)


def _mat_mul(a, b):
    from .linalg import mat_mul

    return mat_mul(a, b)


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_scale_id(q, n):
    return tuple(
        tuple(Fraction(q) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def annihilator(L: OmegaAlgebra, V: ModuleAction) -> Subspace:
    """{x in L : x . v = 0 for all v}: solve sum_i coords_i rho_i = 0."""
    if V.module_dim == 0:
        return Subspace.span(L.dim, [L.basis_vector(i) for i in range(L.dim)])
    from .linalg import nullspace

    rows = []
    for r in range(V.module_dim):
        for s in range(V.module_dim):
            rows.append(tuple(V.rho[i][r][s] for i in range(L.dim)))
    return Subspace.span(L.dim, nullspace(mat(rows)))


def module_twist(
    L: OmegaAlgebra, V: ModuleAction, R: OperatorMatrix
) -> ModuleAction:
    """Twisted action x * v := R(x) . v.

    Requires R isometric Rota-Baxter of weight 1 and R([R(L), L]) contained
    in the annihilator of V; the twisted action is validated before being
    returned.
    """
    cls = classify_map(L, R, 1)
    if not (cls.is_rb and cls.is_isometric):
        raise PreconditionError("R is an isometric Rota-Baxter operator of weight 1")
    ann = annihilator(L, V)
    images = [R.apply(L.basis_vector(i)) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(L.dim):
            w = R.apply(L.bracket(images[i], L.basis_vector(j)))
            if not ann.contains(w):
                raise PreconditionError(
                    "R([R(L), L]) inside the annihilator of the module",
                    f"R([R({L.basis_names[i]}), {L.basis_names[j]}]) acts nontrivially",
                )
    rho = tuple(V.act_matrix(images[i]) for i in range(L.dim))
    out = ModuleAction(L.dim, V.module_dim, rho)
    check = validate_module(L, out)
    if not check.ok:
        raise AssertionError("twisted action violates the module identity")
    return out
