"""Exact arithmetic for motivic curve computations.

Three immutable layers, all over arbitrary-precision integers:

* ``RingElem``: sparse polynomials in the Lefschetz class ``L`` and
  symmetric-power class generators ``c[model,d]``.
* ``TruncSeries``: power series in ``t`` over ``RingElem``, truncated at a
  fixed order.
* ``TPoly`` / ``RationalFn``: polynomials in ``t`` over ``RingElem`` and
  unreduced ratios of them.  Rational functions are never reduced to lowest
  terms; equality is decided by cross-multiplying numerators and
  denominators.

Canonical text form
-------------------

``str(elem)`` emits, and ``parse_elem`` accepts, the grammar::

    elem      := '0' | '-'? term ( ('+' | '-') term )*
    term      := natural ('*' monomial)? | monomial
    monomial  := factor ('*' factor)*
    factor    := generator ('^' natural)?
    generator := 'L' | 'c[' model ',' natural ']'

Generators are totally ordered with ``L`` smallest, then ``c`` classes by
``(model, degree)``.  Terms are sorted by comparing exponents on the largest
generator where two monomials differ, larger exponent first, so constants
print last: ``L^2 - L``, ``c[m,2] + c[m,1]*L + 3``.  Factors inside a
monomial print largest generator first, coefficients 1 and -1 are suppressed
next to a nonempty monomial, and ``^1`` is never written.  On canonical
output the parse is exact: ``parse_elem(str(x)) == x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Iterator, Mapping

MODEL_ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*")


@dataclass(frozen=True)
class Generator:
    """One ring generator: ``L`` (model None) or ``c[model,degree]``."""

    model: str | None = None
    degree: int = 0

    def __post_init__(self) -> None:
        if self.model is None:
            if self.degree:
                raise ValueError("the Lefschetz generator carries no degree")
        else:
            if not MODEL_ID_RE.fullmatch(self.model):
                raise ValueError(f"invalid model id: {self.model!r}")
            if self.degree < 1:
                raise ValueError("symmetric-power degree must be at least 1")

    def sort_key(self) -> tuple[int, str, int]:
        if self.model is None:
            return (0, "", 0)
        return (1, self.model, self.degree)

    def __str__(self) -> str:
        if self.model is None:
            return "L"
        return f"c[{self.model},{self.degree}]"


LEFSCHETZ_GEN = Generator()

# A monomial maps generators to positive exponents, stored as a tuple of
# (generator, exponent) pairs sorted ascending by the generator order.
Monomial = tuple[tuple[Generator, int], ...]


def _mono_sorted(items: Iterable[tuple[Generator, int]]) -> Monomial:
    return tuple(sorted(items, key=lambda pair: pair[0].sort_key()))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for gen, exp in b:
        exps[gen] = exps.get(gen, 0) + exp
    return _mono_sorted(exps.items())


def _mono_cmp(a: Monomial, b: Monomial) -> int:
    """Display order: larger exponent on the largest differing generator first."""
    gens = sorted(
        {gen for gen, _ in a} | {gen for gen, _ in b},
        key=lambda g: g.sort_key(),
        reverse=True,
    )
    da, db = dict(a), dict(b)
    for gen in gens:
        ea, eb = da.get(gen, 0), db.get(gen, 0)
        if ea != eb:
            return -1 if ea > eb else 1
    return 0


def _mono_str(mono: Monomial) -> str:
    factors = []
    for gen, exp in reversed(mono):
        factors.append(str(gen) if exp == 1 else f"{gen}^{exp}")
    return "*".join(factors)


class RingElem:
    """An element of the coefficient ring, kept in canonical sparse form.

    Instances are immutable; all operators return new elements.  Integers
    coerce on either side of ``+ - *``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        cleaned: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    cleaned[mono] = coeff
        self._terms = cleaned

    @classmethod
    def from_int(cls, value: int) -> RingElem:
        return cls({(): value})

    @classmethod
    def from_generator(cls, gen: Generator) -> RingElem:
        return cls({((gen, 1),): 1})

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_one(self) -> bool:
        return self._terms == {(): 1}

    def constant_coefficient(self) -> int:
        return self._terms.get((), 0)

    def __add__(self, other: RingElem | int) -> RingElem:
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        total = dict(self._terms)
        for mono, coeff in other._terms.items():
            total[mono] = total.get(mono, 0) + coeff
        return RingElem(total)

    __radd__ = __add__

    def __neg__(self) -> RingElem:
        return RingElem({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: RingElem | int) -> RingElem:
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> RingElem:
        return _as_elem(other) + (-self)

    def __mul__(self, other: RingElem | int) -> RingElem:
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        product: dict[Monomial, int] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in other._terms.items():
                mono = _mono_mul(mono_a, mono_b)
                product[mono] = product.get(mono, 0) + coeff_a * coeff_b
        return RingElem(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RingElem:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("ring exponent must be a nonnegative integer")
        result = one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RingElem.from_int(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        ordered = sorted(self._terms, key=cmp_to_key(_mono_cmp))
        for index, mono in enumerate(ordered):
            coeff = self._terms[mono]
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = _mono_str(mono)
            else:
                body = f"{magnitude}*{_mono_str(mono)}"
            if index == 0:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RingElem({self})"


_ZERO = RingElem()
_ONE = RingElem.from_int(1)
_L = RingElem.from_generator(LEFSCHETZ_GEN)


def zero() -> RingElem:
    return _ZERO


def one() -> RingElem:
    return _ONE


def lefschetz() -> RingElem:
    """The class of the affine line."""
    return _L


def sym_pow(model: str, degree: int) -> RingElem:
    """The symmetric-power class generator ``c[model,degree]``.

    Degree 0 is the ring unit and is never stored as a generator.
    """
    if degree == 0:
        return _ONE
    return RingElem.from_generator(Generator(model, degree))


def _as_elem(value: object) -> RingElem:
    if isinstance(value, RingElem):
        return value
    if isinstance(value, int):
        return RingElem.from_int(value)
    return NotImplemented


def sum_elems(elems: Iterable[RingElem]) -> RingElem:
    """Sum many elements with a single accumulator dict."""
    total: dict[Monomial, int] = {}
    for elem in elems:
        for mono, coeff in elem._terms.items():
            total[mono] = total.get(mono, 0) + coeff
    return RingElem(total)


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"c\[(?P<model>[A-Za-z_][A-Za-z0-9_.-]*),(?P<degree>\d+)\]"
    r"|(?P<lef>L)"
    r"|(?P<num>\d+)"
    r"|(?P<op>[*^+\-])"
    r"|(?P<space>\s+)"
)


def _tokenize(text: str) -> list[tuple[str, object]]:
    tokens: list[tuple[str, object]] = []
    pos = 0
    for match in _TOKEN_RE.finditer(text):
        if match.start() != pos:
            raise ValueError(f"unexpected character {text[pos]!r} at position {pos}")
        pos = match.end()
        if match.group("space"):
            continue
        if match.group("model") is not None:
            tokens.append(("gen", Generator(match.group("model"), int(match.group("degree")))))
        elif match.group("lef"):
            tokens.append(("gen", LEFSCHETZ_GEN))
        elif match.group("num") is not None:
            tokens.append(("num", int(match.group("num"))))
        else:
            tokens.append(("op", match.group("op")))
    if pos != len(text):
        raise ValueError(f"unexpected character {text[pos]!r} at position {pos}")
    return tokens


class _TokenCursor:
    def __init__(self, tokens: list[tuple[str, object]]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> tuple[str, object] | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def take(self) -> tuple[str, object]:
        token = self.peek()
        if token is None:
            raise ValueError("unexpected end of element text")
        self.index += 1
        return token


def parse_elem(text: str) -> RingElem:
    """Parse the canonical text form back into a ``RingElem``."""
    cursor = _TokenCursor(_tokenize(text))
    if cursor.peek() is None:
        raise ValueError("empty element text")
    total: dict[Monomial, int] = {}
    first = True
    while cursor.peek() is not None:
        sign = 1
        kind, value = cursor.peek()
        if kind == "op" and value in "+-":
            if value == "+" and first:
                raise ValueError("element text may not start with '+'")
            sign = -1 if value == "-" else 1
            cursor.take()
        elif not first:
            raise ValueError("expected '+' or '-' between terms")
        coeff, mono = _parse_term(cursor)
        total[mono] = total.get(mono, 0) + sign * coeff
        first = False
    return RingElem(total)


def _parse_term(cursor: _TokenCursor) -> tuple[int, Monomial]:
    kind, value = cursor.take()
    coeff = 1
    exps: dict[Generator, int] = {}
    if kind == "num":
        coeff = value
        nxt = cursor.peek()
        if nxt == ("op", "*"):
            cursor.take()
            _parse_factors(cursor, exps)
    elif kind == "gen":
        _parse_factors(cursor, exps, first=value)
    else:
        raise ValueError(f"expected a coefficient or generator, got {value!r}")
    return coeff, _mono_sorted(exps.items())


def _parse_factors(
    cursor: _TokenCursor, exps: dict[Generator, int], first: Generator | None = None
) -> None:
    gen = first
    while True:
        if gen is None:
            kind, value = cursor.take()
            if kind != "gen":
                raise ValueError(f"expected a generator, got {value!r}")
            gen = value
        exp = 1
        if cursor.peek() == ("op", "^"):
            cursor.take()
            kind, value = cursor.take()
            if kind != "num" or value < 1:
                raise ValueError("exponent must be a positive integer")
            exp = value
        exps[gen] = exps.get(gen, 0) + exp
        if cursor.peek() == ("op", "*"):
            cursor.take()
            gen = None
        else:
            return


# -- truncated power series ---------------------------------------------------


class TruncSeries:
    """Power series in ``t`` over ``RingElem``, truncated at a fixed order.

    A series of order ``N`` stores exactly the coefficients of ``t^0``
    through ``t^N``.  Binary operations require equal orders.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RingElem | int]):
        elems = tuple(_require_elem(c) for c in coeffs)
        if not elems:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        self._coeffs = elems

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls.from_coeffs([_ONE], order)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RingElem | int], order: int) -> TruncSeries:
        """Build a series of the given order, zero-padding or truncating."""
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        elems = [_require_elem(c) for c in coeffs][: order + 1]
        elems.extend([_ZERO] * (order + 1 - len(elems)))
        return cls(elems)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coefficients(self) -> tuple[RingElem, ...]:
        return self._coeffs

    def __getitem__(self, degree: int) -> RingElem:
        if not 0 <= degree <= self.order:
            raise IndexError(f"degree {degree} outside truncation order {self.order}")
        return self._coeffs[degree]

    def _check_order(self, other: TruncSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check_order(other)
        return TruncSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._check_order(other)
        return TruncSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        self._check_order(other)
        coeffs = [
            sum_elems(self._coeffs[i] * other._coeffs[d - i] for i in range(d + 1))
            for d in range(self.order + 1)
        ]
        return TruncSeries(coeffs)

    def __pow__(self, exponent: int) -> TruncSeries:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a nonnegative integer")
        result = TruncSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse; requires unit constant coefficient."""
        if not self._coeffs[0].is_one:
            raise ValueError(
                f"series is not invertible: constant term is {self._coeffs[0]}"
            )
        inv = [_ONE]
        for d in range(1, self.order + 1):
            acc = sum_elems(self._coeffs[i] * inv[d - i] for i in range(1, d + 1))
            inv.append(-acc)
        return TruncSeries(inv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        return _format_t_terms(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, {self})"


def _require_elem(value: object) -> RingElem:
    elem = _as_elem(value)
    if elem is NotImplemented:
        raise TypeError(f"cannot use {value!r} as a ring element")
    return elem


def _format_t_terms(coeffs: tuple[RingElem, ...]) -> str:
    parts = []
    for degree, coeff in enumerate(coeffs):
        if coeff.is_zero:
            continue
        terms = dict(coeff.terms())
        negate = all(c < 0 for c in terms.values())
        shown = -coeff if negate else coeff
        body = str(shown)
        if degree == 0:
            if len(terms) > 1:
                body = f"({body})"
        else:
            t_part = "t" if degree == 1 else f"t^{degree}"
            if shown.is_one:
                body = t_part
            elif len(terms) > 1:
                body = f"({body})*{t_part}"
            else:
                body = f"{body}*{t_part}"
        if not parts:
            parts.append(f"-{body}" if negate else body)
        else:
            parts.append(("- " if negate else "+ ") + body)
    if not parts:
        return "0"
    return " ".join(parts)


# -- polynomials in t and rational functions ----------------------------------


class TPoly:
    """Polynomial in ``t`` over ``RingElem``, trailing zeros stripped."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RingElem | int] = ()):
        elems = [_require_elem(c) for c in coeffs]
        while elems and elems[-1].is_zero:
            elems.pop()
        self._coeffs = tuple(elems)

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, degree: int) -> RingElem:
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return _ZERO

    def coefficients(self) -> tuple[RingElem, ...]:
        return self._coeffs

    def __mul__(self, other: TPoly) -> TPoly:
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return TPoly()
        out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return TPoly(out)

    def __pow__(self, exponent: int) -> TPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = TPoly([_ONE])
        for _ in range(exponent):
            result = result * self
        return result

    def series(self, order: int) -> TruncSeries:
        return TruncSeries.from_coeffs(self._coeffs, order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        return _format_t_terms(self._coeffs) if self._coeffs else "0"

    def __repr__(self) -> str:
        return f"TPoly({self})"


class RationalFn:
    """Unreduced ratio of two t-polynomials.

    The denominator must have unit constant term, so a series expansion
    always exists.  Equality is exact cross-multiplication; no gcd is ever
    computed, hence no ``__hash__``.
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        numerator: TPoly | Iterable[RingElem | int],
        denominator: TPoly | Iterable[RingElem | int] = (1,),
    ):
        num = numerator if isinstance(numerator, TPoly) else TPoly(numerator)
        den = denominator if isinstance(denominator, TPoly) else TPoly(denominator)
        if not den.coefficient(0).is_one:
            raise ValueError(
                f"denominator must have unit constant term, got {den.coefficient(0)}"
            )
        self._num = num
        self._den = den

    @property
    def numerator(self) -> TPoly:
        return self._num

    @property
    def denominator(self) -> TPoly:
        return self._den

    def __mul__(self, other: RationalFn) -> RationalFn:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(self._num * other._num, self._den * other._den)

    def __pow__(self, exponent: int) -> RationalFn:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("rational exponent must be a nonnegative integer")
        return RationalFn(self._num**exponent, self._den**exponent)

    def series(self, order: int) -> TruncSeries:
        """Truncated expansion: numerator times the denominator inverse."""
        return self._den.series(order).inverse() * self._num.series(order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self._num * other._den == other._num * self._den

    __hash__ = None  # equality is up to cross-multiplication

    def __str__(self) -> str:
        return f"({self._num}) / ({self._den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"
