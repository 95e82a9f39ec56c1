"""Sparse exact multivariate polynomials with cohomological grading.

A polynomial lives in an ambient graded ring described by a :class:`RingSpec`
(an ordered list of variable names with positive integer degrees) and is
stored as a dict mapping exponent tuples to nonzero exact coefficients::

    e1^2 + 2*e1*e2  in  Z[e1, e2]   ->   {(2, 0): 1, (1, 1): 2}

Coefficients are Python ints by default; ``fractions.Fraction`` values are
accepted wherever a field is needed (the Groebner engine) and are normalized
back to ints when the denominator is 1.  There is no floating point anywhere.

The canonical term order is graded reverse lexicographic, graded by the
cohomological degree ``sum(exp[i] * degree[i])`` with ties broken by the usual
reverse-lex rule on the exponent vector.  Printing emits terms in descending
canonical order, and :func:`parse_poly` accepts the same grammar the printer
produces (integer literals, variable names, ``+ - * ^ ( )``, with ``*``
mandatory between factors).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Coefficient",
    "ExponentOverflowError",
    "Monomial",
    "ParseError",
    "PolyError",
    "Polynomial",
    "RingMismatchError",
    "RingSpec",
    "UnmappedVariableError",
    "parse_poly",
]

# Exponents are kept far below this bound; anything at or above it is treated
# as a (deliberate) overflow so runaway computations fail loudly.
EXPONENT_LIMIT = 2**31

VAR_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_']*")

Monomial = tuple  # exponent tuple, one entry per ring variable
Coefficient = int | Fraction


class PolyError(Exception):
    """Base error for the polynomial layer."""


class RingMismatchError(PolyError):
    """Operands live in structurally different rings."""


class ExponentOverflowError(PolyError):
    """An exponent exceeded EXPONENT_LIMIT."""


class UnmappedVariableError(PolyError):
    """substitute() met a variable the caller did not map."""


class ParseError(PolyError):
    """Syntax or name error while parsing polynomial text.

    ``offset`` is the byte offset into the input where the problem starts.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class RingSpec:
    """An ordered list of graded variables defining an ambient polynomial ring.

    ``vars`` is a tuple of (name, cohomological degree) pairs.  Degrees must
    be positive; names must be unique and match ``[a-zA-Z][a-zA-Z0-9_']*``.
    ``coefficient_domain`` ("ZZ" or "QQ") records the intended coefficient
    domain; ring compatibility for arithmetic is decided on vars alone.
    """

    vars: tuple[tuple[str, int], ...]
    coefficient_domain: str = "ZZ"

    def __post_init__(self) -> None:
        names = [name for name, _ in self.vars]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name, degree in self.vars:
            if not VAR_NAME_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
            if not isinstance(degree, int) or degree < 1:
                raise ValueError(f"degree of {name} must be a positive integer, got {degree}")
        if self.coefficient_domain not in ("ZZ", "QQ"):
            raise ValueError(f"unknown coefficient domain {self.coefficient_domain!r}")
        object.__setattr__(self, "_index", {name: i for i, (name, _) in enumerate(self.vars)})
        object.__setattr__(self, "_degrees", tuple(d for _, d in self.vars))

    @staticmethod
    def make(vars: Iterable[tuple[str, int]], domain: str = "ZZ") -> RingSpec:
        return RingSpec(tuple((str(n), int(d)) for n, d in vars), domain)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.vars)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self._index[name]  # type: ignore[attr-defined]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in ring {self.names}") from None

    def compatible_with(self, other: RingSpec) -> bool:
        """Same variables in the same order with the same grading."""
        return self.vars == other.vars

    def monomial_degree(self, expo: Monomial) -> int:
        degs = self.degrees
        return sum(e * degs[i] for i, e in enumerate(expo) if e)

    def sort_key(self, expo: Monomial):
        """Ascending grevlex key: larger key = larger monomial."""
        return (self.monomial_degree(expo), tuple(-e for e in reversed(expo)))

    def with_domain(self, domain: str) -> RingSpec:
        return RingSpec(self.vars, domain)

    def monomial_text(self, expo: Monomial) -> str:
        factors = []
        for (name, _), e in zip(self.vars, expo):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


def _normalize_coeff(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")
    return c


class Polynomial:
    """Immutable sparse polynomial over a :class:`RingSpec`.

    Terms are a map from exponent tuple to nonzero coefficient; the canonical
    (printing) order is descending grevlex.  All arithmetic is exact and pure.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, Coefficient] | None = None):
        self.ring = ring
        nvars = len(ring)
        clean: dict[Monomial, Coefficient] = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != nvars:
                    raise ValueError(f"exponent tuple {expo} has wrong length for ring {ring.names}")
                for e in expo:
                    if not isinstance(e, int) or e < 0:
                        raise ValueError(f"exponents must be non-negative integers, got {expo}")
                    if e >= EXPONENT_LIMIT:
                        raise ExponentOverflowError(f"exponent {e} exceeds limit {EXPONENT_LIMIT}")
                coeff = _normalize_coeff(coeff)
                if coeff != 0:
                    clean[expo] = clean.get(expo, 0) + coeff
                    if clean[expo] == 0:
                        del clean[expo]
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: RingSpec) -> Polynomial:
        return Polynomial(ring)

    @staticmethod
    def constant(ring: RingSpec, value: Coefficient) -> Polynomial:
        return Polynomial(ring, {(0,) * len(ring): value})

    @staticmethod
    def one(ring: RingSpec) -> Polynomial:
        return Polynomial.constant(ring, 1)

    @staticmethod
    def variable(ring: RingSpec, name: str) -> Polynomial:
        expo = [0] * len(ring)
        expo[ring.index(name)] = 1
        return Polynomial(ring, {tuple(expo): 1})

    @staticmethod
    def monomial(ring: RingSpec, expo: Monomial, coeff: Coefficient = 1) -> Polynomial:
        return Polynomial(ring, {tuple(expo): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Coefficient]:
        """The term map.  Treat as read-only."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self, reverse: bool = True) -> list[tuple[Monomial, Coefficient]]:
        key = self.ring.sort_key
        return sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=reverse)

    def leading_term(self) -> tuple[Monomial, Coefficient]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.ring.sort_key
        expo = max(self._terms, key=key)
        return expo, self._terms[expo]

    def degree(self) -> int | None:
        """Maximal cohomological degree of a term, or None for zero."""
        if not self._terms:
            return None
        return max(self.ring.monomial_degree(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        """Whether all terms share one cohomological degree (zero counts)."""
        degs = {self.ring.monomial_degree(e) for e in self._terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int | None:
        """Common degree of a nonzero homogeneous polynomial, else None.

        The zero polynomial is homogeneous of every degree; it also returns
        None here, so callers wanting the three-way answer check is_zero().
        """
        degs = {self.ring.monomial_degree(e) for e in self._terms}
        if len(degs) == 1:
            return next(iter(degs))
        return None

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) for c in self._terms.values())

    def coefficient(self, expo: Monomial) -> Coefficient:
        return self._terms.get(tuple(expo), 0)

    def constant_coefficient(self) -> Coefficient:
        return self._terms.get((0,) * len(self.ring), 0)

    def variables_present(self) -> set[str]:
        names = self.ring.names
        present: set[str] = set()
        for expo in self._terms:
            for i, e in enumerate(expo):
                if e:
                    present.add(names[i])
        return present

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: Polynomial) -> None:
        if not self.ring.compatible_with(other.ring):
            raise RingMismatchError(
                f"ring mismatch: {self.ring.vars} vs {other.ring.vars}"
            )

    def _coerce(self, other: Polynomial | Coefficient) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other: Polynomial | Coefficient) -> Polynomial:
        other = self._coerce(other)
        out = dict(self._terms)
        for expo, coeff in other._terms.items():
            s = out.get(expo, 0) + coeff
            if s == 0:
                out.pop(expo, None)
            else:
                out[expo] = s
        result = Polynomial.__new__(Polynomial)
        result.ring = self.ring
        result._terms = {e: _normalize_coeff(c) for e, c in out.items()}
        result._hash = None
        return result

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        result = Polynomial.__new__(Polynomial)
        result.ring = self.ring
        result._terms = {e: -c for e, c in self._terms.items()}
        result._hash = None
        return result

    def __sub__(self, other: Polynomial | Coefficient) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Coefficient) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: Polynomial | Coefficient) -> Polynomial:
        if not isinstance(other, Polynomial):
            if other == 0:
                return Polynomial.zero(self.ring)
            result = Polynomial.__new__(Polynomial)
            result.ring = self.ring
            result._terms = {e: _normalize_coeff(c * other) for e, c in self._terms.items()}
            result._hash = None
            return result
        self._check_ring(other)
        out: dict[Monomial, Coefficient] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                expo = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(expo, 0) + ca * cb
                if s == 0:
                    out.pop(expo, None)
                else:
                    out[expo] = s
        for expo in out:
            for e in expo:
                if e >= EXPONENT_LIMIT:
                    raise ExponentOverflowError(f"exponent {e} exceeds limit {EXPONENT_LIMIT}")
        result = Polynomial.__new__(Polynomial)
        result.ring = self.ring
        result._terms = {e: _normalize_coeff(c) for e, c in out.items()}
        result._hash = None
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def map_coefficients(self, fn) -> Polynomial:
        return Polynomial(self.ring, {e: fn(c) for e, c in self._terms.items()})

    # -- substitution ------------------------------------------------------

    def substitute(
        self,
        mapping: Mapping[str, Polynomial | Coefficient],
        ring: RingSpec | None = None,
        missing: str = "error",
    ) -> Polynomial:
        """Simultaneous substitution, fully expanded.

        Every variable actually present in the polynomial must be mapped,
        unless ``missing="identity"`` in which case unmapped variables are
        sent to the same-named variable of the target ring.  The target ring
        is taken from the polynomial images, or passed explicitly (required
        when all images are constants).
        """
        if missing not in ("error", "identity"):
            raise ValueError("missing must be 'error' or 'identity'")
        target = ring
        for image in mapping.values():
            if isinstance(image, Polynomial):
                if target is None:
                    target = image.ring
                elif not target.compatible_with(image.ring):
                    raise RingMismatchError("substitution images live in different rings")
        if target is None:
            target = self.ring

        images: dict[int, Polynomial] = {}
        for name, image in mapping.items():
            idx = self.ring.index(name)
            if not isinstance(image, Polynomial):
                image = Polynomial.constant(target, image)
            images[idx] = image
        for name in sorted(self.variables_present()):
            idx = self.ring.index(name)
            if idx not in images:
                if missing == "error":
                    raise UnmappedVariableError(f"variable {name!r} present but not mapped")
                images[idx] = Polynomial.variable(target, name)

        result = Polynomial.zero(target)
        power_cache: dict[tuple[int, int], Polynomial] = {}
        for expo, coeff in self._terms.items():
            term = Polynomial.constant(target, coeff)
            for i, e in enumerate(expo):
                if not e:
                    continue
                key = (i, e)
                if key not in power_cache:
                    power_cache[key] = images[i] ** e
                term = term * power_cache[key]
            result = result + term
        return result

    def rename_into(self, ring: RingSpec, renaming: Mapping[str, str] | None = None) -> Polynomial:
        """Move the polynomial into ``ring`` by renaming variables.

        ``renaming`` maps old names to new names; unlisted names map to
        themselves.  Degrees of matched variables must agree.
        """
        renaming = dict(renaming or {})
        out: dict[Monomial, Coefficient] = {}
        old_degs = self.ring.degrees
        for expo, coeff in self._terms.items():
            new_expo = [0] * len(ring)
            for i, e in enumerate(expo):
                if not e:
                    continue
                old_name = self.ring.names[i]
                new_name = renaming.get(old_name, old_name)
                j = ring.index(new_name)
                if ring.degrees[j] != old_degs[i]:
                    raise ValueError(
                        f"degree mismatch renaming {old_name} (deg {old_degs[i]}) "
                        f"to {new_name} (deg {ring.degrees[j]})"
                    )
                new_expo[j] += e
            key = tuple(new_expo)
            out[key] = out.get(key, 0) + coeff
        return Polynomial(ring, out)

    # -- printing / equality ------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for expo, coeff in self.sorted_terms():
            mono = self.ring.monomial_text(expo)
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.compatible_with(other.ring) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.vars, frozenset(self._terms.items())))
        return self._hash

    def __iter__(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self.sorted_terms())


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9_']*)|(?P<op>[-+*^()])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser for the polynomial grammar.

    expr   := [+|-] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := base ("^" INT)?
    base   := INT | NAME | "(" expr ")"
    """

    def __init__(self, text: str, ring: RingSpec):
        self.tokens = _tokenize(text)
        self.ring = ring
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.expr()
        kind, value, offset = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value!r}", offset)
        return poly

    def expr(self) -> Polynomial:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        poly = self.term() * sign
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                nxt = self.term()
                poly = poly + (nxt if value == "+" else -nxt)
            else:
                return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> Polynomial:
        base = self.base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, offset = self.advance()
            if kind != "int":
                raise ParseError("exponent must be an integer literal", offset)
            exponent = int(value)
            if exponent < 1:
                raise ParseError("exponent must be a positive integer", offset)
            if exponent >= EXPONENT_LIMIT:
                raise ParseError(f"exponent {exponent} exceeds limit {EXPONENT_LIMIT}", offset)
            return base**exponent
        return base

    def base(self) -> Polynomial:
        kind, value, offset = self.advance()
        if kind == "int":
            return Polynomial.constant(self.ring, int(value))
        if kind == "name":
            if value not in self.ring.names:
                raise ParseError(f"unknown variable {value!r}", offset)
            return Polynomial.variable(self.ring, value)
        if kind == "op" and value == "(":
            poly = self.expr()
            kind, value, offset = self.advance()
            if not (kind == "op" and value == ")"):
                raise ParseError("expected ')'", offset)
            return poly
        raise ParseError(f"expected integer, variable or '(', got {value!r}", offset)


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse polynomial text into canonical form; parse(print(p)) == p."""
    return _Parser(text, ring).parse()
