"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in n variables is stored as a map from exponent tuples
(one nonnegative integer per variable) to nonzero Fraction coefficients.
The zero polynomial has an empty map.  All arithmetic is exact, so
polynomial identity testing is equality of term maps and can be trusted
as a proof step.

Text form: terms joined by + or -, each term an optional rational
coefficient (integer or num/den) and variable powers x<i>^<k> joined
by '*'.  Whitespace is insignificant.  Example: ``1 - 2/3*x1^2*x2 + x3``.
Variables are 1-indexed in text, 0-indexed in exponent tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction, str]


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    """Graded lexicographic sort key (total degree first, then lex)."""
    return (sum(mono), mono)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("dim", "terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Monomial, Scalar] | None = None):
        if dim < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {dim}")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != dim:
                raise ValueError(
                    f"monomial {mono} has length {len(mono)}, expected {dim}"
                )
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in monomial {mono}")
            c = _as_fraction(coeff)
            if c != 0:
                c = clean.get(mono, Fraction(0)) + c
                if c != 0:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls(dim, {})

    @classmethod
    def one(cls, dim: int) -> "Polynomial":
        return cls.constant(dim, 1)

    @classmethod
    def constant(cls, dim: int, value: Scalar) -> "Polynomial":
        return cls(dim, {(0,) * dim: _as_fraction(value)})

    @classmethod
    def variable(cls, dim: int, index: int) -> "Polynomial":
        """The polynomial x_{index+1} (0-based ``index``)."""
        if not 0 <= index < dim:
            raise ValueError(f"variable index {index} out of range for dim {dim}")
        mono = tuple(1 if i == index else 0 for i in range(dim))
        return cls(dim, {mono: 1})

    @classmethod
    def parse(cls, text: str, dim: int) -> "Polynomial":
        return parse_polynomial(text, dim)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise ValueError(
                    f"dimension mismatch: {self.dim} vs {other.dim}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.dim, other)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, Fraction(0)) + coeff
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return Polynomial(self.dim, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return Polynomial.zero(self.dim)
            return Polynomial(self.dim, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(a + b for a, b in zip(ma, mb))
                s = out.get(mono, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return Polynomial(self.dim, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.dim)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.dim, Fraction(0))

    def monomials(self) -> Iterable[Monomial]:
        return self.terms.keys()

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point (the point evaluation character)."""
        if len(point) != self.dim:
            raise ValueError(
                f"point has length {len(point)}, expected {self.dim}"
            )
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = coeff
            for base, exp in zip(pt, mono):
                if exp:
                    value *= base**exp
            total += value
        return total

    def compose_affine(
        self, center: Sequence[Scalar], scale: Scalar
    ) -> "Polynomial":
        """Substitute x_i -> (x_i - center_i) / scale and expand."""
        rho = _as_fraction(scale)
        if rho == 0:
            raise ValueError("scale must be nonzero")
        if len(center) != self.dim:
            raise ValueError(
                f"center has length {len(center)}, expected {self.dim}"
            )
        inv = Fraction(1) / rho
        subs = [
            Polynomial.variable(self.dim, i) * inv
            - _as_fraction(center[i]) * inv
            for i in range(self.dim)
        ]
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            if e == 0:
                return Polynomial.one(self.dim)
            key = (i, e)
            if key not in powers:
                powers[key] = subs[i] ** e
            return powers[key]

        result = Polynomial.zero(self.dim)
        for mono, coeff in self.terms.items():
            piece = Polynomial.constant(self.dim, coeff)
            for i, e in enumerate(mono):
                if e:
                    piece = piece * power(i, e)
            result = result + piece
        return result

    # -- equality / display ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.dim, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.dim, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono in sorted(self.terms, key=grlex_key, reverse=True):
            coeff = self.terms[mono]
            mag = abs(coeff)
            vars_ = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(mono)
                if e
            )
            if vars_:
                body = vars_ if mag == 1 else f"{mag}*{vars_}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.dim}, '{self}')"


def variables(dim: int) -> tuple[Polynomial, ...]:
    """Convenience tuple (x1, ..., xn) as polynomials."""
    return tuple(Polynomial.variable(dim, i) for i in range(dim))


def parse_polynomial(text: str, dim: int) -> Polynomial:
    """Parse text into canonical sparse form; inverse of ``str``."""
    if dim < 1:
        raise ValueError(f"ambient dimension must be >= 1, got {dim}")
    n = len(text)
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected digits", pos)
        return int(text[start:pos])

    terms: dict[Monomial, Fraction] = {}
    first = True
    skip_ws()
    if pos >= n:
        raise ParseError("empty polynomial text", pos)
    while pos < n:
        skip_ws()
        if pos >= n:
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", pos)
        skip_ws()
        coeff = Fraction(sign)
        expo = [0] * dim
        while True:
            skip_ws()
            if pos < n and text[pos].isdigit():
                num = read_int()
                if pos < n and text[pos] == "/":
                    pos += 1
                    den_pos = pos
                    den = read_int()
                    if den == 0:
                        raise ParseError("zero denominator", den_pos)
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
            elif pos < n and text[pos] in "xX":
                var_pos = pos
                pos += 1
                idx = read_int()
                if not 1 <= idx <= dim:
                    raise ParseError(
                        f"variable index x{idx} out of range for {dim} variable(s)",
                        var_pos,
                    )
                k = 1
                if pos < n and text[pos] == "^":
                    pos += 1
                    k = read_int()
                expo[idx - 1] += k
            else:
                raise ParseError("expected a coefficient or variable", pos)
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                continue
            break
        mono = tuple(expo)
        s = terms.get(mono, Fraction(0)) + coeff
        if s == 0:
            terms.pop(mono, None)
        else:
            terms[mono] = s
        first = False
    return Polynomial(dim, terms)
