"""Motivic measures: ring homomorphisms to concrete targets.

A measure fixes an integer image for the Lefschetz class and for every
symmetric-power generator of the model ids it knows about, then extends
multiplicatively and additively.  Applying a measure to an expression that
mentions a model it does not realize raises ``MeasureError`` naming the
offending generator.

* ``PointCount(q, numerators, genera)``: counting points over a field with
  q elements.  ``L`` goes to q and ``c[m,d]`` to the ``t^d`` coefficient of
  ``P_m(t) / ((1-t)(1-q t))`` for the model's Weil numerator ``P_m``.
* ``EulerCharacteristic(genera)``: ``L`` goes to 1 and ``c[m,d]`` to the
  ``t^d`` coefficient of ``(1-t)^(2g-2)``.
* ``SymbolicIdentity()``: leaves expressions unchanged.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .graph import DualGraph
from .ring import Generator, RingElem, TPoly, TruncSeries


class MeasureError(ValueError):
    """A generator has no realization under the measure."""


def weil_series(numerator: Sequence[int], q: int, order: int) -> list[int]:
    """Truncated expansion of ``P(t) / ((1-t)(1-q t))`` over the integers.

    Kept independent of the symbolic ring machinery so it can serve as an
    oracle for point counts.  ``q = 1`` is accepted for expansion checks.
    """
    numerator = list(numerator)
    if not numerator or numerator[0] != 1:
        raise ValueError("numerator must have constant term 1")
    if q < 1:
        raise ValueError("q must be a positive integer")
    # 1/((1-t)(1-qt)) has coefficient 1 + q + ... + q^d.
    base = []
    power_sum = 0
    power = 1
    for _ in range(order + 1):
        power_sum += power
        power *= q
        base.append(power_sum)
    return [
        sum(numerator[i] * base[d - i] for i in range(min(d, len(numerator) - 1) + 1))
        for d in range(order + 1)
    ]


def one_minus_t_coefficient(exponent: int, degree: int) -> int:
    """Coefficient of ``t^degree`` in ``(1-t)**exponent`` for any integer exponent."""
    if degree < 0:
        return 0
    if exponent >= 0:
        return (-1) ** degree * math.comb(exponent, degree)
    return math.comb(degree - exponent - 1, degree)


def is_prime_power(value: int) -> bool:
    if value < 2:
        return False
    factor = None
    probe = 2
    remaining = value
    while probe * probe <= remaining:
        if remaining % probe == 0:
            factor = probe
            break
        probe += 1
    if factor is None:
        return True  # value itself is prime
    while remaining % factor == 0:
        remaining //= factor
    return remaining == 1


class MotivicMeasure:
    """Base class: integer-valued ring homomorphism."""

    name = "abstract"

    def lefschetz_image(self) -> int:
        raise NotImplementedError

    def class_image(self, model: str, degree: int) -> int:
        raise NotImplementedError

    def _generator_image(self, gen: Generator) -> int:
        if gen.model is None:
            return self.lefschetz_image()
        return self.class_image(gen.model, gen.degree)

    def of_elem(self, elem: RingElem) -> int:
        total = 0
        for mono, coeff in elem.terms():
            value = coeff
            for gen, exp in mono:
                value *= self._generator_image(gen) ** exp
            total += value
        return total

    def of_series(self, series: TruncSeries) -> list[int]:
        return [self.of_elem(c) for c in series.coefficients()]

    def of_poly(self, poly: TPoly) -> list[int]:
        return [self.of_elem(c) for c in poly.coefficients()]


class SymbolicIdentity(MotivicMeasure):
    """The identity: apply is a no-op, useful as a uniform interface."""

    name = "symbolic"

    def of_elem(self, elem: RingElem) -> RingElem:
        return elem

    def of_series(self, series: TruncSeries) -> list[RingElem]:
        return list(series.coefficients())

    def of_poly(self, poly: TPoly) -> list[RingElem]:
        return list(poly.coefficients())


class EulerCharacteristic(MotivicMeasure):
    name = "euler"

    def __init__(self, genera: Mapping[str, int] | None = None):
        self._genera = dict(genera or {})

    def lefschetz_image(self) -> int:
        return 1

    def class_image(self, model: str, degree: int) -> int:
        if model not in self._genera:
            raise MeasureError(
                f"no realization for generator c[{model},{degree}] under the"
                " Euler-characteristic measure"
            )
        return one_minus_t_coefficient(2 * self._genera[model] - 2, degree)


class PointCount(MotivicMeasure):
    """Point counting over a field with ``q`` elements.

    ``numerators`` maps model ids to Weil numerator coefficient lists,
    ``genera`` to the corresponding genus, used to validate that the
    numerator has degree at most 2g and satisfies the functional equation
    when the degree is exactly 2g.
    """

    name = "point-count"

    def __init__(
        self,
        q: int,
        numerators: Mapping[str, Sequence[int]] | None = None,
        genera: Mapping[str, int] | None = None,
    ):
        if not is_prime_power(q):
            raise ValueError(f"q must be a prime power >= 2, got {q}")
        self.q = q
        self._numerators = {m: tuple(p) for m, p in (numerators or {}).items()}
        genera = dict(genera or {})
        for model, numerator in self._numerators.items():
            if model not in genera:
                raise ValueError(f"missing genus for model {model!r}")
            self._validate_numerator(model, numerator, genera[model])

    def _validate_numerator(self, model: str, numerator: tuple[int, ...], genus: int) -> None:
        if not numerator or numerator[0] != 1:
            raise ValueError(f"model {model!r}: numerator must have constant term 1")
        degree = len(numerator) - 1
        if degree > 2 * genus:
            raise ValueError(
                f"model {model!r}: numerator degree {degree} exceeds 2*genus = {2 * genus}"
            )
        if degree == 2 * genus and genus > 0:
            for j in range(genus + 1):
                if numerator[2 * genus - j] != numerator[j] * self.q ** (genus - j):
                    raise ValueError(
                        f"model {model!r}: numerator fails the functional equation"
                        f" at degree {j}"
                    )

    def lefschetz_image(self) -> int:
        return self.q

    def class_image(self, model: str, degree: int) -> int:
        if model not in self._numerators:
            raise MeasureError(
                f"no realization for generator c[{model},{degree}] under"
                f" point counting with q = {self.q}"
            )
        return weil_series(self._numerators[model], self.q, degree)[degree]


def apply_measure(value, measure: MotivicMeasure):
    """Apply a measure to a RingElem, TruncSeries, or TPoly."""
    if isinstance(value, RingElem):
        return measure.of_elem(value)
    if isinstance(value, TruncSeries):
        return measure.of_series(value)
    if isinstance(value, TPoly):
        return measure.of_poly(value)
    raise TypeError(f"cannot apply a measure to {type(value).__name__}")


def euler_for_graph(graph: DualGraph) -> EulerCharacteristic:
    """Euler measure realizing every model of the graph."""
    return EulerCharacteristic(_model_genera(graph))


def point_count_for_graph(
    graph: DualGraph,
    q: int,
    extra_numerators: Mapping[str, Iterable[int]] | None = None,
) -> PointCount:
    """Point-count measure with numerators taken from the graph's models.

    Elliptic models contribute ``1 - a t + q t^2`` and weil models their
    stored numerator; projective lines need none.  Symbolic models must be
    covered by ``extra_numerators`` to be realizable; models left without a
    numerator raise ``MeasureError`` when first applied.
    """
    genera = _model_genera(graph)
    numerators: dict[str, tuple[int, ...]] = {}
    for v in graph.vertices:
        model = v.model
        if model.kind == "elliptic":
            numerators[model.name] = (1, -model.trace, q)
        elif model.kind == "weil":
            numerators[model.name] = model.numerator
    for model_name, coeffs in (extra_numerators or {}).items():
        if model_name not in genera:
            raise ValueError(f"numerator given for unknown model {model_name!r}")
        numerators[model_name] = tuple(coeffs)
    return PointCount(q, numerators, genera)


def _model_genera(graph: DualGraph) -> dict[str, int]:
    genera: dict[str, int] = {}
    for v in graph.vertices:
        name = v.model.name
        if name in genera and genera[name] != v.model.genus:
            raise ValueError(
                f"model {name!r} is shared by vertices of different genera"
            )
        genera[name] = v.model.genus
    return genera
