"""Catalog of omega-Lie algebras and the structured documents the CLI reads.

Catalog files are YAML lists of entries.  A full entry carries basis names,
bracket relations like ``"[x,y] = y"``, omega values like ``"w(x,y) = 1"``,
and optionally parameter names with excluded values.  An entry with only an
``external_source`` field is a stub: its defining relations live in the
cited classification literature and must be transcribed by the user before
the entry can be used; reports mark such rows as skipped.

Every instantiation is validated against the defining identity; an entry
whose relations break it is rejected with the failing basis triple named.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Mapping, Optional, Sequence

import yaml

from .algebras import OmegaAlgebra, OperatorMatrix, validate_algebra
from .poly import PolyParseError, VariableTable, _tokenize, parse_polynomial, parse_rational


class CatalogError(ValueError):
    """Malformed catalog data; message carries entry/field diagnostics."""


# default specialization samples for parameterized families
DEFAULT_PARAMETER_SAMPLES = (Fraction(2), Fraction(-1), Fraction(1, 2))

_BRACKET_RE = re.compile(r"^\s*\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.*)$")
_OMEGA_RE = re.compile(r"^\s*w\(\s*(\w+)\s*,\s*(\w+)\s*\)\s*=\s*(.*)$")


@dataclass(frozen=True)
class ParamSpec:
    name: str
    excluded: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dim: int
    source: str
    external: bool
    basis: tuple[str, ...] = ()
    bracket_relations: tuple[str, ...] = ()
    omega_relations: tuple[str, ...] = ()
    params: tuple[ParamSpec, ...] = ()

    @property
    def has_definition(self) -> bool:
        return not self.external

    def default_param_values(self) -> dict[str, Fraction]:
        values = {}
        for spec in self.params:
            for sample in DEFAULT_PARAMETER_SAMPLES:
                if sample not in spec.excluded:
                    values[spec.name] = sample
                    break
            else:
                raise CatalogError(
                    f"{self.name}: no admissible default for parameter {spec.name}"
                )
        return values

    def instantiate(
        self, param_values: Optional[Mapping[str, Fraction]] = None
    ) -> OmegaAlgebra:
        """Build and validate the algebra at the given parameter values."""
        if self.external:
            raise CatalogError(
                f"{self.name}: definition not shipped (external source: {self.source});"
                " supply a transcribed catalog file to use this entry"
            )
        values = dict(self.default_param_values())
        if param_values:
            for k, v in param_values.items():
                if k not in {p.name for p in self.params}:
                    raise CatalogError(f"{self.name}: unknown parameter {k!r}")
                values[k] = Fraction(v)
        for spec in self.params:
            if values[spec.name] in spec.excluded:
                raise CatalogError(
                    f"{self.name}: parameter {spec.name} = {values[spec.name]}"
                    f" is excluded (constraints: != {list(spec.excluded)})"
                )
        table = VariableTable(self.basis + tuple(p.name for p in self.params))
        subs = {name: val for name, val in values.items()}
        brackets: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for rel in self.bracket_relations:
            m = _BRACKET_RE.match(rel)
            if not m:
                raise CatalogError(f"{self.name}: bad bracket relation {rel!r}")
            a, b, rhs = m.groups()
            i, j = self._basis_index(a), self._basis_index(b)
            coeffs = self._linear_coefficients(rhs, table, subs, rel)
            brackets[(i, j)] = coeffs
        omega: dict[tuple[int, int], Fraction] = {}
        for rel in self.omega_relations:
            m = _OMEGA_RE.match(rel)
            if not m:
                raise CatalogError(f"{self.name}: bad omega relation {rel!r}")
            a, b, rhs = m.groups()
            i, j = self._basis_index(a), self._basis_index(b)
            try:
                poly = parse_polynomial(rhs, table).substitute(subs)
            except PolyParseError as exc:
                raise CatalogError(f"{self.name}: {rel!r}: {exc}") from exc
            if not poly.is_constant():
                raise CatalogError(f"{self.name}: {rel!r} is not a rational value")
            omega[(i, j)] = poly.constant_value()
        algebra = OmegaAlgebra.from_brackets(
            self.basis, brackets, omega, params=values or None
        )
        check = validate_algebra(algebra)
        if not check.ok:
            kind, indices, residual = check.failures[0]
            triple = ", ".join(self.basis[i] for i in indices)
            raise CatalogError(
                f"{self.name}: defining identity fails ({kind}) on ({triple});"
                f" residual {tuple(str(r) for r in residual)}"
            )
        return algebra

    def _basis_index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise CatalogError(
                f"{self.name}: {name!r} is not a basis vector (basis: {self.basis})"
            ) from None

    def _linear_coefficients(self, rhs, table, subs, rel) -> tuple[Fraction, ...]:
        try:
            poly = parse_polynomial(rhs, table).substitute(subs)
        except PolyParseError as exc:
            raise CatalogError(f"{self.name}: {rel!r}: {exc}") from exc
        coeffs = [Fraction(0)] * len(self.basis)
        for mono, c in poly.terms.items():
            nz = [i for i, e in enumerate(mono) if e]
            if len(nz) != 1 or mono[nz[0]] != 1 or nz[0] >= len(self.basis):
                raise CatalogError(
                    f"{self.name}: {rel!r} is not a linear combination of basis vectors"
                )
            coeffs[nz[0]] = c
        return tuple(coeffs)


def _as_str_list(value, context: str) -> tuple[str, ...]:
    if value is None:
        return ()
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise CatalogError(f"{context}: expected a list of strings")
    return tuple(value)


def _parse_entry(raw, index: int) -> CatalogEntry:
    if not isinstance(raw, dict):
        raise CatalogError(f"entry #{index}: expected a mapping, got {type(raw).__name__}")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise CatalogError(f"entry #{index}: missing or invalid 'name'")
    ctx = f"entry {name!r}"
    dim = raw.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise CatalogError(f"{ctx}: missing or invalid 'dim'")
    external_source = raw.get("external_source")
    if external_source is not None:
        extra = set(raw) - {"name", "dim", "external_source", "note"}
        if extra:
            raise CatalogError(f"{ctx}: stub entries cannot carry fields {sorted(extra)}")
        return CatalogEntry(name, dim, str(external_source), external=True)
    basis = _as_str_list(raw.get("basis"), f"{ctx}: basis")
    if len(basis) != dim:
        raise CatalogError(f"{ctx}: basis has {len(basis)} names, dim is {dim}")
    params = []
    for p in raw.get("params") or []:
        if isinstance(p, str):
            params.append(ParamSpec(p))
        elif isinstance(p, dict) and "name" in p:
            excluded = tuple(
                parse_rational(str(v)) for v in (p.get("exclude") or [])
            )
            params.append(ParamSpec(str(p["name"]), excluded))
        else:
            raise CatalogError(f"{ctx}: bad parameter spec {p!r}")
    return CatalogEntry(
        name=name,
        dim=dim,
        source=str(raw.get("source", "")),
        external=False,
        basis=basis,
        bracket_relations=_as_str_list(raw.get("brackets"), f"{ctx}: brackets"),
        omega_relations=_as_str_list(raw.get("omega"), f"{ctx}: omega"),
        params=tuple(params),
    )


def parse_catalog_text(text: str) -> list[CatalogEntry]:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise CatalogError(f"catalog is not valid YAML: {exc}") from exc
    if data is None:
        return []
    if not isinstance(data, list):
        raise CatalogError("catalog must be a YAML list of entries")
    entries = [_parse_entry(raw, i) for i, raw in enumerate(data)]
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise CatalogError(f"duplicate entry names: {dupes}")
    return entries


def parse_catalog(path) -> list[CatalogEntry]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_catalog_text(fh.read())


def _builtin_text(relative: str) -> str:
    return resources.files("omegarb").joinpath(f"data/{relative}").read_text("utf-8")


def load_builtin_catalog() -> dict[str, CatalogEntry]:
    return {e.name: e for e in parse_catalog_text(_builtin_text("catalog.yaml"))}


# ---------------------------------------------------------------------------
# rational expression evaluation (operator files allow division by params)


def evaluate_rational_expression(
    text: str, bindings: Mapping[str, Fraction]
) -> Fraction:
    """Exact arithmetic expression over named rational values:
    + - * / ^ parentheses, '*' optional between factors."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, len(text))

    def advance():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def fail(msg, at):
        return PolyParseError(f"{msg} at position {at} in {text!r}")

    def expr() -> Fraction:
        kind, val, _ = peek()
        negate = False
        if kind == "op" and val in "+-":
            advance()
            negate = val == "-"
        acc = term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = peek()
            if kind == "op" and val in "+-":
                advance()
                rhs = term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term() -> Fraction:
        acc = factor()
        while True:
            kind, val, at = peek()
            if kind == "op" and val in "*/":
                advance()
                rhs = factor()
                if val == "/":
                    if rhs == 0:
                        raise fail("division by zero", at)
                    acc = acc / rhs
                else:
                    acc = acc * rhs
            elif kind in ("number", "name") or (kind == "op" and val == "("):
                acc = acc * factor()
            else:
                return acc

    def factor() -> Fraction:
        base = atom()
        kind, val, at = peek()
        if kind == "op" and val == "^":
            advance()
            kind, val, at = advance()
            if kind != "number" or "/" in val:
                raise fail("exponent must be an integer", at)
            return base ** int(val)
        return base

    def atom() -> Fraction:
        kind, val, at = advance()
        if kind == "number":
            return Fraction(val)
        if kind == "name":
            if val not in bindings:
                raise fail(f"unbound name {val!r}", at)
            return Fraction(bindings[val])
        if kind == "op" and val == "(":
            v = expr()
            kind, val, at = advance()
            if val != ")":
                raise fail("expected ')'", at)
            return v
        if kind == "op" and val == "-":
            return -atom()
        raise fail(f"expected a value, found {val!r}", at)

    out = expr()
    if pos != len(tokens):
        _, val, at = peek()
        raise fail(f"unexpected token {val!r}", at)
    return out


def parse_operator_file(
    path, overrides: Optional[Mapping[str, Fraction]] = None
) -> OperatorMatrix:
    """Operator file: YAML with ``rows`` (entry expressions over parameter
    names) and optional ``params`` defaults; overrides win."""
    with open(path, "r", encoding="utf-8") as fh:
        data = yaml.safe_load(fh.read())
    return operator_from_spec(data, overrides, context=str(path))


def operator_from_spec(
    data, overrides: Optional[Mapping[str, Fraction]] = None, context: str = "operator"
) -> OperatorMatrix:
    if not isinstance(data, dict) or "rows" not in data:
        raise CatalogError(f"{context}: expected a mapping with a 'rows' field")
    bindings = {}
    for k, v in (data.get("params") or {}).items():
        bindings[str(k)] = parse_rational(str(v))
    for k, v in (overrides or {}).items():
        bindings[str(k)] = Fraction(v)
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise CatalogError(f"{context}: 'rows' must be a list of lists")
    entries = []
    for r, row in enumerate(rows):
        out_row = []
        for c, cell in enumerate(row):
            try:
                out_row.append(evaluate_rational_expression(str(cell), bindings))
            except PolyParseError as exc:
                raise CatalogError(f"{context}: row {r + 1} column {c + 1}: {exc}") from exc
        entries.append(out_row)
    if any(len(r) != len(entries) for r in entries):
        raise CatalogError(f"{context}: operator matrix must be square")
    return OperatorMatrix(entries)


# ---------------------------------------------------------------------------
# serialization of constructed structures


def format_linear_combination(names: Sequence[str], coeffs) -> str:
    parts = []
    for name, c in zip(names, coeffs):
        if c == 0:
            continue
        if c == 1:
            parts.append(f"+ {name}")
        elif c == -1:
            parts.append(f"- {name}")
        elif c < 0:
            parts.append(f"- {-c}*{name}")
        else:
            parts.append(f"+ {c}*{name}")
    if not parts:
        return "0"
    first = parts[0]
    first = first[2:] if first.startswith("+ ") else "-" + first[2:]
    return first + ("" if len(parts) == 1 else " " + " ".join(parts[1:]))


def algebra_to_catalog_dict(L: OmegaAlgebra, name: str) -> dict:
    brackets = []
    omega = []
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            if any(L.c[i][j]):
                brackets.append(
                    f"[{L.basis_names[i]},{L.basis_names[j]}] = "
                    + format_linear_combination(L.basis_names, L.c[i][j])
                )
            if L.omega[i][j]:
                omega.append(
                    f"w({L.basis_names[i]},{L.basis_names[j]}) = {L.omega[i][j]}"
                )
    return {
        "name": name,
        "dim": n,
        "basis": list(L.basis_names),
        "brackets": brackets,
        "omega": omega,
    }


def serialize_constructed(kind: str, name: str, payload: dict, provenance: Sequence[str]) -> str:
    """Catalog-format text with a provenance comment header."""
    header = "".join(f"# {line}\n" for line in provenance)
    body = yaml.safe_dump([{"kind": kind, **payload}], sort_keys=False)
    return header + body
