"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial lives over a fixed :class:`VariableTable` and is stored as a
dictionary mapping monomial exponent tuples to nonzero ``Fraction``
coefficients:

    Mono = tuple[int, ...]            # one exponent per table variable
    terms = {(2, 1): Fraction(1), (0, 0): Fraction(3)}   # x^2*y + 3

The empty dict is the zero polynomial.  All arithmetic is exact; there is no
floating point anywhere.  Term order is not baked into the representation:
monomial orders (lex / grevlex with a priority permutation) are separate
values used for comparisons, leading terms, sorting and printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

Mono = tuple[int, ...]
Scalar = Union[Fraction, int]

LT, EQ, GT = -1, 0, 1


class DimensionMismatchError(ValueError):
    """Raised when values over different variable tables are combined."""


class PolyParseError(ValueError):
    """Raised on malformed polynomial text."""


# ---------------------------------------------------------------------------
# variable tables


@dataclass(frozen=True)
class VariableTable:
    """Fixed ordered list of distinct variable names."""

    names: tuple[str, ...]
    _index: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False, default=None
    )

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def of(cls, *names: str) -> "VariableTable":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} (table has {self.names})") from None

    def extend(self, *names: str) -> "VariableTable":
        """New table with extra variables appended after the existing ones."""
        for n in names:
            if n in self:
                raise ValueError(f"variable {n!r} already in table")
        return VariableTable(self.names + tuple(names))

    def fresh_name(self, stem: str) -> str:
        """A variable name based on ``stem`` that does not collide."""
        if stem not in self:
            return stem
        k = 0
        while f"{stem}{k}" in self:
            k += 1
        return f"{stem}{k}"


def _check_same_table(a: "Polynomial", b: "Polynomial") -> None:
    if a.table is not b.table and a.table != b.table:
        raise DimensionMismatchError(
            f"mixed variable tables: {a.table.names} vs {b.table.names}"
        )


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)


def mono_one(n: int) -> Mono:
    return (0,) * n


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff a | b, i.e. every exponent of a is <= that of b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_gcd(a: Mono, b: Mono) -> Mono:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a: Mono) -> int:
    return sum(a)


def mono_support(a: Mono) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(a) if e)


def mono_is_coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative monomial order: lex or grevlex over a priority
    permutation of variable indices (priority[0] is the most significant)."""

    kind: str  # "lex" | "grevlex"
    priority: tuple[int, ...]
    _keyfn: Callable[[Mono], tuple] = field(
        init=False, repr=False, compare=False, hash=False, default=None
    )

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        pr = tuple(self.priority)
        if sorted(pr) != list(range(len(pr))):
            raise ValueError(f"priority {pr!r} is not a permutation")
        object.__setattr__(self, "priority", pr)
        if self.kind == "lex":
            def keyfn(m: Mono, _pr=pr) -> tuple:
                return tuple(m[p] for p in _pr)
        else:
            rev = tuple(reversed(pr))

            def keyfn(m: Mono, _rev=rev) -> tuple:
                return (sum(m), tuple(-m[p] for p in _rev))

        object.__setattr__(self, "_keyfn", keyfn)

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def key(self, m: Mono) -> tuple:
        """Sort key: key(a) < key(b) iff a < b in this order."""
        if len(m) != len(self.priority):
            raise DimensionMismatchError(
                f"monomial has {len(m)} exponents, order expects {len(self.priority)}"
            )
        return self._keyfn(m)

    def compare(self, a: Mono, b: Mono) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ


def _resolve_priority(table: VariableTable, names: Sequence[str] | None) -> tuple[int, ...]:
    if names is None:
        return tuple(range(len(table)))
    pr = tuple(table.index(n) for n in names)
    if sorted(pr) != list(range(len(table))):
        raise ValueError("priority names must list every table variable exactly once")
    return pr


def lex_order(table: VariableTable, names: Sequence[str] | None = None) -> MonomialOrder:
    """Lex order; default priority is table order (first name largest)."""
    return MonomialOrder("lex", _resolve_priority(table, names))


def grevlex_order(table: VariableTable, names: Sequence[str] | None = None) -> MonomialOrder:
    """Graded reverse lex; default priority is table order."""
    return MonomialOrder("grevlex", _resolve_priority(table, names))


def compare_monomials(order: MonomialOrder, a: Mono, b: Mono) -> int:
    """-1 / 0 / +1 (LT / EQ / GT) comparison of two exponent tuples."""
    if len(a) != len(b):
        raise DimensionMismatchError("monomials of different lengths")
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[Mono, Scalar]):
        clean: dict[Mono, Fraction] = {}
        n = len(table)
        for mono, coeff in terms.items():
            c = Fraction(coeff)
            if c == 0:
                continue
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent tuple {mono!r} for table of size {n}")
            clean[tuple(mono)] = c
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, table: VariableTable) -> "Polynomial":
        return cls(table, {})

    @classmethod
    def constant(cls, table: VariableTable, value: Scalar) -> "Polynomial":
        return cls(table, {mono_one(len(table)): Fraction(value)})

    @classmethod
    def variable(cls, table: VariableTable, name: str) -> "Polynomial":
        e = [0] * len(table)
        e[table.index(name)] = 1
        return cls(table, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, table: VariableTable, mono: Mono, coeff: Scalar = 1) -> "Polynomial":
        return cls(table, {tuple(mono): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial (errors if non-constant)."""
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.table.index(name)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def support_vars(self) -> frozenset[str]:
        idx: set[int] = set()
        for m in self.terms:
            idx.update(mono_support(m))
        return frozenset(self.table.names[i] for i in idx)

    def num_terms(self) -> int:
        return len(self.terms)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.table, other)
        _check_same_table(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.table, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.table, other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        _check_same_table(self, other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.table)
        out: dict[Mono, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, Fraction(0)) + ca * cb
        return Polynomial(self.table, out)

    __rmul__ = __mul__

    def scale(self, q: Scalar) -> "Polynomial":
        q = Fraction(q)
        if q == 0:
            return Polynomial.zero(self.table)
        return Polynomial(self.table, {m: c * q for m, c in self.terms.items()})

    def mul_term(self, mono: Mono, coeff: Scalar) -> "Polynomial":
        """Multiply by a single term coeff * x^mono."""
        c = Fraction(coeff)
        if c == 0:
            return Polynomial.zero(self.table)
        return Polynomial(
            self.table, {mono_mul(m, mono): cc * c for m, cc in self.terms.items()}
        )

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(self.table, 1)
        for _ in range(e):
            out = out * self
        return out

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.table, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.table, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- order-dependent views ---------------------------------------------

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Mono, Fraction]]:
        """Terms in strictly descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder) -> tuple[Mono, Fraction]:
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    # -- content / normal forms --------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c having integer coprime coefficients."""
        if not self.terms:
            return Fraction(1)
        from math import gcd

        nums = [abs(c.numerator) for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, v)
        l = 1
        for v in dens:
            l = l * v // gcd(l, v)
        return Fraction(g, l)

    def monomial_content(self) -> Mono:
        """Componentwise min exponent over all terms (the monomial gcd)."""
        if not self.terms:
            return mono_one(len(self.table))
        it = iter(self.terms)
        acc = next(it)
        for m in it:
            acc = mono_gcd(acc, m)
        return acc

    def primitive(self, order: MonomialOrder) -> "Polynomial":
        """Divide out rational content; sign chosen so the leading coefficient
        under ``order`` is positive."""
        if not self.terms:
            return self
        c = self.rational_content()
        if self.leading_coefficient(order) < 0:
            c = -c
        return self.scale(1 / c)

    # -- substitution / evaluation -----------------------------------------

    def substitute(self, assignment: Mapping[str, Union[Scalar, "Polynomial"]]) -> "Polynomial":
        """Simultaneous substitution; unassigned variables survive."""
        table = self.table
        subs: dict[int, Polynomial] = {}
        for name, val in assignment.items():
            i = table.index(name)
            if isinstance(val, Polynomial):
                _check_same_table(self, val)
                subs[i] = val
            else:
                subs[i] = Polynomial.constant(table, val)
        if not subs:
            return self
        out = Polynomial.zero(table)
        for mono, coeff in self.terms.items():
            residual = list(mono)
            piece = Polynomial.constant(table, coeff)
            for i, val in subs.items():
                e = mono[i]
                if e:
                    residual[i] = 0
                    piece = piece * val**e
            piece = piece.mul_term(tuple(residual), 1)
            out = out + piece
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Full evaluation at a rational point; every support variable must
        be assigned."""
        missing = self.support_vars() - set(point)
        if missing:
            raise ValueError(f"unassigned variables {sorted(missing)}")
        total = Fraction(0)
        idx = {self.table.index(n): Fraction(v) for n, v in point.items()}
        for mono, coeff in self.terms.items():
            v = coeff
            for i, e in enumerate(mono):
                if e:
                    v *= idx[i] ** e
            total += v
        return total

    # -- table surgery -------------------------------------------------------

    def lift(self, new_table: VariableTable) -> "Polynomial":
        """Reinterpret over a larger table that starts with this table's
        variables in the same order."""
        if new_table.names[: len(self.table)] != self.table.names:
            raise DimensionMismatchError("new table must extend the old one")
        pad = len(new_table) - len(self.table)
        return Polynomial(
            new_table, {m + (0,) * pad: c for m, c in self.terms.items()}
        )

    def restrict(self, new_table: VariableTable) -> "Polynomial":
        """Inverse of :meth:`lift`; errors if the extra variables occur."""
        if self.table.names[: len(new_table)] != new_table.names:
            raise DimensionMismatchError("table is not a prefix of the current one")
        k = len(new_table)
        out: dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            if any(m[k:]):
                raise ValueError("polynomial involves variables outside the target table")
            out[m[:k]] = c
        return Polynomial(new_table, out)

    # -- printing ------------------------------------------------------------

    def to_text(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        if order is None:
            order = grevlex_order(self.table)
        parts: list[str] = []
        for i, (mono, coeff) in enumerate(self.sorted_terms(order)):
            sign = "-" if coeff < 0 else "+"
            body = _term_text(self.table, mono, abs(coeff))
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def _term_text(table: VariableTable, mono: Mono, coeff: Fraction) -> str:
    factors = []
    for i, e in enumerate(mono):
        if e == 1:
            factors.append(table.names[i])
        elif e > 1:
            factors.append(f"{table.names[i]}^{e}")
    if not factors:
        return str(coeff)
    if coeff != 1:
        factors.insert(0, str(coeff))
    return "*".join(factors)


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()]))"
)
_FLOAT_RE = re.compile(r"\d+\.\d*|\.\d+")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    if _FLOAT_RE.search(text):
        raise PolyParseError(
            "floating-point literals are not supported; use exact p/q rationals"
        )
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character {text[pos]!r} at position {pos}")
        pos = m.end()
        for kind in ("number", "name", "op"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start()))
                break
    return tokens


class _Parser:
    def __init__(self, text: str, table: VariableTable):
        self.text = text
        self.table = table
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, message: str, at: int) -> "PolyParseError":
        return PolyParseError(f"{message} at position {at} in {self.text!r}")

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, at = self.peek()
        if kind is not None:
            raise self.fail(f"unexpected token {val!r}", at)
        return p

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.next()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                acc = acc * self.factor()
            elif kind in ("number", "name") or (kind == "op" and val == "("):
                acc = acc * self.factor()  # implicit multiplication
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, val, at = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val, at = self.next()
            if kind != "number" or "/" in val:
                raise self.fail("exponent must be a nonnegative integer", at)
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, at = self.next()
        if kind == "number":
            return Polynomial.constant(self.table, Fraction(val))
        if kind == "name":
            if val not in self.table:
                raise self.fail(f"unknown variable {val!r}", at)
            return Polynomial.variable(self.table, val)
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val, at = self.next()
            if val != ")":
                raise self.fail("expected ')'", at)
            return p
        if kind == "op" and val == "-":
            return -self.atom()
        raise self.fail(f"expected a term, found {val!r}", at)


def parse_polynomial(text: str, table: VariableTable) -> Polynomial:
    """Parse ``x12*x21 + x22^2`` style text ('*' optional, '^' for powers)."""
    return _Parser(text, table).parse()


def parse_rational(text: str) -> Fraction:
    """Exact rational literal ('3', '-3/4'); rejects floats."""
    text = text.strip()
    if _FLOAT_RE.search(text):
        raise PolyParseError(f"{text!r} is not an exact rational; use p/q form")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(f"bad rational literal {text!r}") from exc
