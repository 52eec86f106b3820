"""Computational ideal theory over Q[x1..xn].

Ideal algebra (membership, elimination, intersection, colon, saturation,
product, radical membership), Krull dimension via independent variable sets
on the leading-term ideal, certificate-checked primality, and verification
of candidate irreducible-component decompositions.

Primality is certified, never decided: the two accepted certificate shapes
are (a) a triangular set of generators each solving one designated variable
with a constant coefficient, so the quotient is a polynomial ring, and
(b) a pivot variable f with I : f = I such that after formally inverting f
every generator solves a designated variable with a unit coefficient, so the
localization is an integral domain into which the quotient embeds.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .groebner import GroebnerBasis, buchberger, exact_divide, reduce
from .poly import (
    Mono,
    MonomialOrder,
    Polynomial,
    VariableTable,
    grevlex_order,
    lex_order,
    mono_degree,
    mono_div,
    mono_support,
    parse_polynomial,
)


class CertificateError(ValueError):
    """Raised for malformed primality certificates."""


class _EmptyVariety:
    """Marker returned by :func:`krull_dim` when 1 lies in the ideal."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - repr only
        return "EMPTY_VARIETY"


EMPTY_VARIETY = _EmptyVariety()


@dataclass
class Ideal:
    """Finitely generated ideal with a per-order Groebner basis cache.

    Generators equal to zero are dropped; an empty generator tuple denotes
    the zero ideal.  Values are treated as immutable after construction; the
    cache is filled at most once per order behind a lock so concurrent
    readers observe a consistent basis.
    """

    table: VariableTable
    generators: tuple[Polynomial, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(
        default_factory=threading.Lock, repr=False, compare=False
    )

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.table != self.table:
                raise ValueError("generator over a different variable table")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)

    def default_order(self) -> MonomialOrder:
        return grevlex_order(self.table)

    def groebner(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        if order is None:
            order = self.default_order()
        with self._lock:
            gb = self._cache.get(order)
            if gb is None:
                gb = buchberger(self.generators, order)
                self._cache[order] = gb
            return gb

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def contains_one(self) -> bool:
        return self.groebner().contains_one()

    def __repr__(self) -> str:
        gens = ", ".join(g.to_text() for g in self.generators) or "0"
        return f"Ideal<{gens}>"


def make_ideal(table: VariableTable, gens: Iterable[Polynomial]) -> Ideal:
    return Ideal(table, tuple(gens))


def parse_ideal(text: str, table: VariableTable) -> Ideal:
    """One generator per line; blank lines and '#' comments are skipped."""
    gens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            gens.append(parse_polynomial(line, table))
    return make_ideal(table, gens)


def ideal_to_text(I: Ideal, order: MonomialOrder | None = None) -> str:
    return "\n".join(g.to_text(order) for g in I.generators)


# ---------------------------------------------------------------------------
# membership and equality


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    """True iff the normal form of f against a Groebner basis of I is zero."""
    if f.is_zero():
        return True
    gb = I.groebner()
    return reduce(f, gb.elements, gb.order).is_zero()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J subseteq I, by membership of each generator of J."""
    return all(ideal_membership(g, I) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Equality via coincidence of reduced Groebner bases under a common
    order (reduced bases are canonical)."""
    if I.table != J.table:
        raise ValueError("ideals over different variable tables")
    order = I.default_order()
    return I.groebner(order).elements == J.groebner(order).elements


# ---------------------------------------------------------------------------
# elimination, intersection, colon, saturation, product


def elimination(I: Ideal, keep: Iterable[str]) -> Ideal:
    """Generators of I intersected with the subring on the ``keep``
    variables, via a lex basis with the eliminated variables highest."""
    keep_set = set(keep)
    unknown = keep_set - set(I.table.names)
    if unknown:
        raise KeyError(f"unknown variables {sorted(unknown)}")
    eliminated = [n for n in I.table.names if n not in keep_set]
    if not eliminated:
        return I
    priority = eliminated + [n for n in I.table.names if n in keep_set]
    gb = I.groebner(lex_order(I.table, priority))
    keep_idx = {I.table.index(n) for n in keep_set}
    kept = [
        g
        for g in gb.elements
        if all(mono_support(m) <= keep_idx for m in g.terms)
    ]
    return make_ideal(I.table, kept)


def _with_fresh_variable(I: Ideal, stem: str) -> tuple[VariableTable, str]:
    name = I.table.fresh_name(stem)
    return I.table.extend(name), name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J via the one-tag trick: eliminate z from z*I + (1-z)*J."""
    if I.table != J.table:
        raise ValueError("ideals over different variable tables")
    if I.is_zero_ideal() or J.is_zero_ideal():
        return make_ideal(I.table, ())
    ext, zname = _with_fresh_variable(I, "t_")
    z = Polynomial.variable(ext, zname)
    one_minus_z = Polynomial.constant(ext, 1) - z
    gens = [z * g.lift(ext) for g in I.generators]
    gens += [one_minus_z * g.lift(ext) for g in J.generators]
    work = make_ideal(ext, gens)
    eliminated = elimination(work, I.table.names)
    return make_ideal(I.table, [g.restrict(I.table) for g in eliminated.generators])


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """I : f, computed as (1/f) * (I cap <f>); every generator of the
    intersection is exactly divisible by f."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if f.is_constant():
        return I
    meet = intersect(I, make_ideal(I.table, (f,)))
    order = I.default_order()
    gens = [exact_divide(g, f, order) for g in meet.generators]
    return make_ideal(I.table, gens)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^infinity (iterated colon until stabilization)."""
    current = I
    while True:
        nxt = colon(current, f)
        if ideal_equal(nxt, current):
            return current
        current = nxt


def product(I: Ideal, J: Ideal) -> Ideal:
    """Ideal generated by pairwise products of the generators."""
    if I.table != J.table:
        raise ValueError("ideals over different variable tables")
    gens = [g * h for g in I.generators for h in J.generators]
    return make_ideal(I.table, dict.fromkeys(gens))


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """f in sqrt(I), via 1 in I + <1 - t*f> in an extended ring.

    The cached basis of I lifts to a Groebner basis of the extension, so the
    extended computation only processes pairs involving the new generator.
    """
    if f.is_zero():
        raise ValueError("radical membership of the zero polynomial")
    if ideal_membership(f, I):
        return True
    ext, tname = _with_fresh_variable(I, "t_")
    t = Polynomial.variable(ext, tname)
    base = I.groebner().elements
    gens = [g.lift(ext) for g in base]
    prefix = len(gens)
    gens.append(Polynomial.constant(ext, 1) - t * f.lift(ext))
    gb = buchberger(gens, grevlex_order(ext), groebner_prefix=prefix)
    return gb.contains_one()


def radical_contains(I: Ideal, J: Ideal) -> bool:
    """Every generator of J lies in sqrt(I)."""
    return all(radical_membership(g, I) for g in J.generators)


# ---------------------------------------------------------------------------
# Krull dimension


def _min_hitting_set(supports: list[frozenset[int]]) -> int:
    """Smallest number of variables meeting every support set."""
    # keep only inclusion-minimal supports
    supports = sorted(set(supports), key=len)
    minimal: list[frozenset[int]] = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    best = len(set().union(*minimal)) if minimal else 0

    def search(remaining: list[frozenset[int]], chosen: int, best: int) -> int:
        if not remaining:
            return chosen
        if chosen + 1 >= best:
            return best
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            rest = [s for s in remaining if v not in s]
            best = min(best, search(rest, chosen + 1, best))
        return best

    return search(minimal, 0, best)


def krull_dim(I: Ideal):
    """Dimension of the affine variety of I: the largest cardinality of a
    variable subset S such that no leading monomial of a Groebner basis has
    support inside S.  Returns :data:`EMPTY_VARIETY` when 1 in I."""
    gb = I.groebner()
    if gb.contains_one():
        return EMPTY_VARIETY
    n = len(I.table)
    supports = [frozenset(mono_support(lm)) for lm in gb.leading_monomials()]
    return n - _min_hitting_set(supports)


# ---------------------------------------------------------------------------
# primality certificates


@dataclass(frozen=True)
class PrimalityCertificate:
    """Either a triangular-linear certificate (``linear_vars``) or a pivot
    localization certificate (``pivot``); pivot wins when both are set.  The
    empty linear certificate is valid only for the zero ideal (the quotient
    is the full polynomial ring)."""

    linear_vars: frozenset[str] = frozenset()
    pivot: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "linear_vars", frozenset(self.linear_vars))


def _coefficient_of_variable(g: Polynomial, vidx: int) -> Polynomial:
    """The coefficient polynomial of v^1 when deg_v(g) == 1."""
    out = {}
    for m, c in g.terms.items():
        if m[vidx] == 1:
            mm = list(m)
            mm[vidx] = 0
            out[tuple(mm)] = c
    return Polynomial(g.table, out)


def _without_variable_terms(g: Polynomial, vidx: int) -> Polynomial:
    return Polynomial(g.table, {m: c for m, c in g.terms.items() if m[vidx] == 0})


def _solve_linear_chain(
    gens: Sequence[Polynomial],
    table: VariableTable,
    allowed: Optional[frozenset[str]] = None,
) -> Optional[list[tuple[str, Polynomial]]]:
    """Repeatedly solve a variable that occurs linearly, with a constant
    coefficient, in exactly one remaining generator.  Returns the solve
    steps when every generator is consumed; None otherwise."""
    remaining = [g for g in gens if not g.is_zero()]
    todo = set(allowed) if allowed is not None else set(table.names)
    steps: list[tuple[str, Polynomial]] = []
    progress = True
    while remaining and progress:
        progress = False
        for name in sorted(todo):
            vidx = table.index(name)
            occ = [g for g in remaining if g.degree_in(name) > 0]
            if len(occ) != 1 or occ[0].degree_in(name) != 1:
                continue
            g = occ[0]
            coeff = _coefficient_of_variable(g, vidx)
            if not coeff.is_constant() or coeff.is_zero():
                continue
            c = coeff.constant_value()
            expr = _without_variable_terms(g, vidx).scale(Fraction(-1) / c)
            steps.append((name, expr))
            remaining.remove(g)
            todo.discard(name)
            progress = True
            break
    if remaining:
        return None
    return steps


def _localized_normalize(p: Polynomial, fidx: int, widx: int) -> Polynomial:
    """Rewrite modulo w*f - 1 by cancelling w against f in each term."""
    out = {}
    for m, c in p.terms.items():
        k = min(m[fidx], m[widx])
        if k:
            mm = list(m)
            mm[fidx] -= k
            mm[widx] -= k
            m = tuple(mm)
        out[m] = out.get(m, Fraction(0)) + c
    return Polynomial(p.table, out)


def _solve_localized_chain(
    p: Ideal, pivot: str
) -> Optional[tuple[VariableTable, str, list[tuple[str, Polynomial]]]]:
    """Eliminate variables with unit coefficients after inverting ``pivot``.

    Returns (extended table, inverse variable name, solve steps) when every
    generator is consumed, so the localization of the quotient at the pivot
    is a localized polynomial ring; None when the procedure gets stuck.
    """
    table = p.table
    fidx = table.index(pivot)
    ext, wname = _with_fresh_variable(p, "w_")
    widx = ext.index(wname)
    base = p.groebner().elements or p.generators
    gens = [_localized_normalize(g.lift(ext), fidx, widx) for g in base]
    gens = [g for g in gens if not g.is_zero()]
    solvable = [n for n in table.names if n != pivot]
    steps: list[tuple[str, Polynomial]] = []
    progress = True
    while gens and progress:
        progress = False
        for name in solvable:
            vidx = ext.index(name)
            candidates = [g for g in gens if g.degree_in(name) == 1]
            for g in candidates:
                coeff = _coefficient_of_variable(g, vidx)
                if coeff.num_terms() != 1:
                    continue
                (cmono, ccoef) = next(iter(coeff.terms.items()))
                if not mono_support(cmono) <= {fidx, widx}:
                    continue
                # v = -h / (c * f^a * w^b)  =  -h * w^a * f^b / c
                a, b = cmono[fidx], cmono[widx]
                inv = [0] * len(ext)
                inv[fidx], inv[widx] = b, a
                h = _without_variable_terms(g, vidx)
                expr = _localized_normalize(
                    h.mul_term(tuple(inv), Fraction(-1) / ccoef), fidx, widx
                )
                new_gens = []
                for other in gens:
                    if other is g:
                        continue
                    sub = other.substitute({name: expr})
                    sub = _localized_normalize(sub, fidx, widx)
                    if not sub.is_zero():
                        new_gens.append(sub)
                gens = new_gens
                solvable.remove(name)
                steps.append((name, expr))
                progress = True
                break
            if progress:
                break
    if gens:
        return None
    return ext, wname, steps


def check_primality(p: Ideal, cert: PrimalityCertificate) -> bool:
    """Validate a primality certificate.  False means the certificate does
    not apply (not that the ideal is composite)."""
    if not isinstance(cert, PrimalityCertificate):
        raise CertificateError(f"not a certificate: {cert!r}")
    if p.contains_one():
        return False
    if cert.pivot is not None:
        if cert.pivot not in p.table:
            raise CertificateError(f"pivot {cert.pivot!r} is not a table variable")
        f = Polynomial.variable(p.table, cert.pivot)
        if not ideal_equal(colon(p, f), p):
            return False
        return _solve_localized_chain(p, cert.pivot) is not None
    unknown = cert.linear_vars - set(p.table.names)
    if unknown:
        raise CertificateError(f"unknown certificate variables {sorted(unknown)}")
    gens = p.groebner().elements or p.generators
    return _solve_linear_chain(gens, p.table, cert.linear_vars) is not None


def find_certificate(p: Ideal) -> Optional[PrimalityCertificate]:
    """Best-effort certificate discovery: try the triangular-linear shape,
    then each support variable as a pivot."""
    if p.contains_one():
        return None
    gens = p.groebner().elements or p.generators
    steps = _solve_linear_chain(gens, p.table)
    if steps is not None:
        cert = PrimalityCertificate(linear_vars=frozenset(v for v, _ in steps))
        if check_primality(p, cert):
            return cert
    support = sorted(
        {n for g in p.generators for n in g.support_vars()},
        key=p.table.index,
    )
    for name in support:
        if _solve_localized_chain(p, name) is None:
            continue
        cert = PrimalityCertificate(pivot=name)
        if check_primality(p, cert):
            return cert
    return None


# ---------------------------------------------------------------------------
# rational points on certified components


def sample_points(
    p: Ideal,
    cert: PrimalityCertificate,
    count: int,
    rng: random.Random,
    max_attempts: int = 400,
) -> list[dict[str, Fraction]]:
    """Random rational points of V(p), derived from the certificate's solve
    chain.  Every returned point is checked against the generators."""

    def random_value() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))

    if cert.pivot is not None:
        solved = _solve_localized_chain(p, cert.pivot)
        if solved is None:
            raise CertificateError("pivot certificate does not apply")
        ext, wname, steps = solved
        fixed = {v for v, _ in steps} | {wname, cert.pivot}
        free = [n for n in ext.names if n not in fixed]
    else:
        gens = p.groebner().elements or p.generators
        steps = _solve_linear_chain(gens, p.table, cert.linear_vars)
        if steps is None:
            raise CertificateError("linear certificate does not apply")
        ext = p.table
        wname = None
        fixed = {v for v, _ in steps}
        free = [n for n in ext.names if n not in fixed]

    points: list[dict[str, Fraction]] = []
    attempts = 0
    while len(points) < count and attempts < max_attempts:
        attempts += 1
        point: dict[str, Fraction] = {n: random_value() for n in free}
        if cert.pivot is not None:
            fval = random_value()
            while fval == 0:
                fval = random_value()
            point[cert.pivot] = fval
            point[wname] = 1 / fval
        ok = True
        for name, expr in reversed(steps):
            try:
                point[name] = expr.evaluate(point)
            except ValueError:
                ok = False
                break
        if not ok:
            continue
        restricted = {n: point[n] for n in p.table.names if n in point}
        if all(g.evaluate(restricted) == 0 for g in p.generators):
            points.append(restricted)
    if len(points) < count:
        raise CertificateError(
            f"could not sample {count} points (got {len(points)})"
        )
    return points


def _solve_multi_pivot_chain(
    p: Ideal,
) -> Optional[tuple[VariableTable, dict[str, str], list[tuple[str, Polynomial]]]]:
    """Greedy parameterization of a dense open subset of V(p): solve
    variables whose coefficient is a single term, inverting the variables of
    that term on demand.  Unlike the pivot certificate this may invert
    several variables, so it proves nothing about primality; it only yields
    points (each checked against the generators by the caller)."""
    table = p.table
    ext = table
    inverses: dict[str, str] = {}
    gens = list(p.groebner().elements or p.generators)
    solved: list[tuple[str, Polynomial]] = []
    solvable = list(table.names)

    def normalize(poly: Polynomial) -> Polynomial:
        for name, wname in inverses.items():
            poly = _localized_normalize(poly, ext.index(name), ext.index(wname))
        return poly

    progress = True
    while gens and progress:
        progress = False
        for name in solvable:
            vidx = ext.index(name)
            for g in gens:
                if g.degree_in(name) != 1:
                    continue
                coeff = _coefficient_of_variable(g, vidx)
                if coeff.num_terms() != 1:
                    continue
                (cmono, ccoef) = next(iter(coeff.terms.items()))
                support_names = [ext.names[i] for i in mono_support(cmono)]
                if any(n not in solvable and n not in inverses for n in support_names):
                    continue
                if name in support_names:
                    continue
                # invert every variable of the coefficient term
                for n in support_names:
                    if n not in inverses:
                        wname = ext.fresh_name(f"w_{n}_")
                        ext = ext.extend(wname)
                        inverses[n] = wname
                        gens = [g2.lift(ext) for g2 in gens]
                        solved = [(v, e.lift(ext)) for v, e in solved]
                        if n in solvable:
                            solvable.remove(n)
                g = g.lift(ext) if g.table != ext else g
                vidx = ext.index(name)
                coeff = _coefficient_of_variable(g, vidx)
                (cmono, ccoef) = next(iter(coeff.terms.items()))
                inv = [0] * len(ext)
                for i in mono_support(cmono):
                    inv[ext.index(inverses[ext.names[i]])] = cmono[i]
                h = _without_variable_terms(g, vidx)
                expr = normalize(h.mul_term(tuple(inv), Fraction(-1) / ccoef))
                new_gens = []
                for other in gens:
                    if other == g:
                        continue
                    sub = normalize(other.substitute({name: expr}))
                    if not sub.is_zero():
                        new_gens.append(sub)
                gens = new_gens
                solvable.remove(name)
                solved.append((name, expr))
                progress = True
                break
            if progress:
                break
    if gens:
        return None
    return ext, inverses, solved


def sample_points_generic(
    p: Ideal, count: int, rng: random.Random, max_attempts: int = 800
) -> list[dict[str, Fraction]]:
    """Random rational points of V(p) from the multi-pivot parameterization;
    raises when no parameterization is found."""
    solved = _solve_multi_pivot_chain(p)
    if solved is None:
        raise CertificateError("no rational parameterization found")
    ext, inverses, steps = solved
    fixed = {v for v, _ in steps} | set(inverses.values())
    free = [n for n in ext.names if n not in fixed]

    def random_value() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))

    points: list[dict[str, Fraction]] = []
    attempts = 0
    while len(points) < count and attempts < max_attempts:
        attempts += 1
        point: dict[str, Fraction] = {}
        ok = True
        for n in free:
            if n in inverses:
                v = random_value()
                while v == 0:
                    v = random_value()
                point[n] = v
                point[inverses[n]] = 1 / v
            else:
                point[n] = random_value()
        for name, expr in reversed(steps):
            try:
                point[name] = expr.evaluate(point)
            except ValueError:
                ok = False
                break
        if not ok:
            continue
        restricted = {n: point[n] for n in p.table.names if n in point}
        if len(restricted) == len(p.table.names) and all(
            g.evaluate(restricted) == 0 for g in p.generators
        ):
            points.append(restricted)
    if len(points) < count:
        raise CertificateError(
            f"could not sample {count} generic points (got {len(points)})"
        )
    return points


# ---------------------------------------------------------------------------
# component verification


@dataclass
class CandidateReport:
    contains_ideal: bool
    certificate_status: str  # "passed" | "failed" | "unverified"
    dim: object  # int or EMPTY_VARIETY

    @property
    def ok(self) -> bool:
        return self.contains_ideal and self.certificate_status == "passed"


@dataclass
class ComponentReport:
    candidates: list[CandidateReport]
    product_in_radical: bool
    containment_matrix: dict[tuple[int, int], bool]
    irredundant: bool

    @property
    def confirmed(self) -> bool:
        return (
            all(c.ok for c in self.candidates)
            and self.product_in_radical
            and self.irredundant
        )

    @property
    def dims(self) -> tuple:
        return tuple(c.dim for c in self.candidates)


def verify_components(
    I: Ideal,
    candidates: Sequence[tuple[Ideal, Optional[PrimalityCertificate]]],
) -> ComponentReport:
    """Certify that V(I) is the union of the candidate prime varieties.

    Checks: (i) I subseteq p_i, so V(p_i) subseteq V(I); (ii) every generator
    of the product of the candidates lies in sqrt(I), so V(I) is covered;
    (iii) each primality certificate validates; (iv) no candidate contains
    another.  ``confirmed`` requires all four.
    """
    if not candidates:
        raise ValueError("no candidate components supplied")
    reports = []
    for ideal_p, cert in candidates:
        contains = ideal_contains(ideal_p, I)
        if cert is None:
            status = "unverified"
        else:
            status = "passed" if check_primality(ideal_p, cert) else "failed"
        reports.append(CandidateReport(contains, status, krull_dim(ideal_p)))
    prod = candidates[0][0]
    for ideal_p, _ in candidates[1:]:
        prod = product(prod, ideal_p)
    if len(prod.generators) > 60:
        # sqrt(product) = sqrt(intersection): test the far smaller
        # intersection generating set against sqrt(I) instead
        meet = candidates[0][0]
        for ideal_p, _ in candidates[1:]:
            meet = intersect(meet, ideal_p)
        in_radical = radical_contains(I, meet)
    else:
        in_radical = radical_contains(I, prod)
    matrix: dict[tuple[int, int], bool] = {}
    for i, (pi, _) in enumerate(candidates):
        for j, (pj, _) in enumerate(candidates):
            if i != j:
                matrix[(i, j)] = ideal_contains(pj, pi)  # p_i subseteq p_j
    irredundant = not any(matrix.values())
    return ComponentReport(reports, in_radical, matrix, irredundant)


# ---------------------------------------------------------------------------
# best-effort splitting


@dataclass
class SplitResult:
    ideals: list[Ideal]
    complete: bool


def _split_factor(I: Ideal) -> Optional[Polynomial]:
    """A variable occurring as a monomial factor of some reduced-basis
    generator; None when no generator has monomial content."""
    gb = I.groebner()
    gens = sorted(
        gb.elements, key=lambda g: (g.num_terms(), g.total_degree(), g.to_text())
    )
    for g in gens:
        content = g.monomial_content()
        if mono_degree(content) == 0:
            continue
        vidx = min(mono_support(content))
        v = Polynomial.variable(I.table, I.table.names[vidx])
        if not ideal_membership(v, I):
            return v
    return None


def split_heuristic(I: Ideal, max_depth: int = 24) -> SplitResult:
    """Cover V(I) by splitting V(I) = V(I + <v>) cup V(I : v^inf) on
    variables that factor out of a generator.  Output is advisory: not
    guaranteed minimal or prime, and must be confirmed by
    :func:`verify_components`."""
    if I.contains_one():
        return SplitResult([], True)
    leaves: list[Ideal] = []
    complete = True

    def descend(J: Ideal, depth: int) -> None:
        nonlocal complete
        if J.contains_one():
            return
        v = _split_factor(J)
        if v is None:
            leaves.append(make_ideal(J.table, J.groebner().elements))
            return
        if depth >= max_depth:
            complete = False
            leaves.append(make_ideal(J.table, J.groebner().elements))
            return
        descend(make_ideal(J.table, J.generators + (v,)), depth + 1)
        descend(saturate(J, v), depth + 1)

    descend(I, 0)
    # deduplicate, then drop leaves whose variety sits inside another leaf
    unique: list[Ideal] = []
    for J in leaves:
        if not any(ideal_equal(J, K) for K in unique):
            unique.append(J)
    kept: list[Ideal] = []
    for i, J in enumerate(unique):
        redundant = False
        for j, K in enumerate(unique):
            if i == j:
                continue
            if ideal_contains(J, K) and not ideal_contains(K, J):
                redundant = True  # K subseteq J, so V(J) subseteq V(K)
                break
            if ideal_contains(J, K) and ideal_contains(K, J) and j < i:
                redundant = True
                break
        if not redundant:
            kept.append(J)
    return SplitResult(kept, complete)
