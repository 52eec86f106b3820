"""Buchberger's algorithm and reduced Groebner bases.

Normal pair-selection strategy (smallest lcm degree first, then smallest lcm
in the monomial order), with the coprime-leading-monomial skip and the chain
criterion.  Reduction computes full normal forms deterministically: when
several basis elements' leading monomials divide the current term, the first
one in list order wins.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .poly import (
    MonomialOrder,
    Polynomial,
    mono_degree,
    mono_div,
    mono_divides,
    mono_is_coprime,
    mono_lcm,
)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic elements, no monomial of any element
    divisible by another element's leading monomial, sorted ascending by
    leading monomial."""

    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.elements)

    def is_zero_ideal(self) -> bool:
        return not self.elements

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial(self.order) for g in self.elements]


def reduce(f: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Full normal form of ``f`` modulo ``basis``.

    The returned remainder r satisfies f - r in <basis> and no monomial of r
    is divisible by any leading monomial of the basis.  Empty basis returns f.
    """
    divisors = [
        (g.leading_monomial(order), g.leading_coefficient(order), g)
        for g in basis
        if not g.is_zero()
    ]
    if not divisors:
        return f
    table = f.table
    work = dict(f.terms)
    remainder: dict = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if c == 0:
            continue
        for lm, lc, g in divisors:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = c / lc
                for gm, gc in g.terms.items():
                    t = tuple(x + y for x, y in zip(gm, shift))
                    if t == m:
                        continue
                    work[t] = work.get(t, Fraction(0)) - factor * gc
                break
        else:
            remainder[m] = c
    return Polynomial(table, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """spol(f,g) = (LC(g)*t/LM(f))*f - (LC(f)*t/LM(g))*g, t = lcm of the
    leading monomials; the leading terms cancel."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s-polynomial of the zero polynomial is undefined")
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    t = mono_lcm(mf, mg)
    left = f.mul_term(mono_div(t, mf), cg)
    right = g.mul_term(mono_div(t, mg), cf)
    return left - right


def interreduce(polys, order: MonomialOrder) -> list[Polynomial]:
    """Minimalize and fully auto-reduce a generating set (result is the
    reduced basis if the input was a Groebner basis)."""
    gens = [p for p in polys if not p.is_zero()]
    # ascending by leading monomial, so redundant elements come later
    gens.sort(key=lambda p: order.key(p.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for p in gens:
        lm = p.leading_monomial(order)
        if any(mono_divides(q.leading_monomial(order), lm) for q in minimal):
            continue
        minimal.append(p)
    # full tail reduction of each element against the rest
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            rest = minimal[:i] + minimal[i + 1 :]
            r = reduce(minimal[i], rest, order)
            if r.is_zero():
                del minimal[i]
                changed = True
                break
            if r != minimal[i]:
                minimal[i] = r
                changed = True
    return sorted(
        (p.monic(order) for p in minimal),
        key=lambda p: order.key(p.leading_monomial(order)),
    )


def buchberger(
    gens,
    order: MonomialOrder,
    *,
    coprime_criterion: bool = True,
    chain_criterion: bool = True,
    groebner_prefix: int = 0,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The result is canonical: independent of generator order and duplicates.
    An all-zero (or empty) generator list yields the empty basis for the zero
    ideal.  ``groebner_prefix=k`` asserts that the first k generators are
    already a Groebner basis under ``order``, so their mutual pairs are
    skipped (used for incremental extensions of a cached basis).
    """
    G: list[Polynomial] = []
    prefix = 0
    for pos, g in enumerate(gens):
        if not g.is_zero():
            G.append(g.primitive(order))
            if pos < groebner_prefix:
                prefix += 1
    if not G:
        return GroebnerBasis(order, ())
    one = Polynomial.constant(G[0].table, 1)
    if any(g.is_constant() for g in G):
        return GroebnerBasis(order, (one,))

    lms = [g.leading_monomial(order) for g in G]
    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()

    def push_pair(i: int, j: int) -> None:
        t = mono_lcm(lms[i], lms[j])
        heapq.heappush(heap, (mono_degree(t), order.key(t), i, j))
        pending.add((i, j))

    for i in range(len(G)):
        for j in range(max(i + 1, prefix), len(G)):
            push_pair(i, j)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.remove((i, j))
        lm_i, lm_j = lms[i], lms[j]
        if coprime_criterion and mono_is_coprime(lm_i, lm_j):
            continue
        if chain_criterion:
            t = mono_lcm(lm_i, lm_j)
            skip = False
            for k in range(len(G)):
                if k in (i, j):
                    continue
                if (
                    mono_divides(lms[k], t)
                    and (min(i, k), max(i, k)) not in pending
                    and (min(j, k), max(j, k)) not in pending
                ):
                    skip = True
                    break
            if skip:
                continue
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if not r.is_zero():
            if r.is_constant():
                return GroebnerBasis(order, (one,))
            r = r.primitive(order)
            G.append(r)
            lms.append(r.leading_monomial(order))
            new = len(G) - 1
            for k in range(new):
                push_pair(k, new)
    return GroebnerBasis(order, tuple(interreduce(G, order)))


def is_groebner_basis(polys, order: MonomialOrder) -> bool:
    """Buchberger criterion, checked directly: every s-polynomial of two
    elements reduces to zero against the set."""
    G = [p for p in polys if not p.is_zero()]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not reduce(s_polynomial(G[i], G[j], order), G, order).is_zero():
                return False
    return True


def exact_divide(f: Polynomial, divisor: Polynomial, order: MonomialOrder) -> Polynomial:
    """Quotient f / divisor when the division is exact; raises otherwise."""
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    table = f.table
    lm, lc = divisor.leading_term(order)
    work = dict(f.terms)
    quotient: dict = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if c == 0:
            continue
        if not mono_divides(lm, m):
            raise ArithmeticError("inexact polynomial division")
        shift = mono_div(m, lm)
        factor = c / lc
        quotient[shift] = quotient.get(shift, Fraction(0)) + factor
        for gm, gc in divisor.terms.items():
            t = tuple(x + y for x, y in zip(gm, shift))
            if t == m:
                continue
            work[t] = work.get(t, Fraction(0)) - factor * gc
    return Polynomial(table, quotient)
