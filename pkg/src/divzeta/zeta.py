"""Closed forms for the zeta functions of a stable marked curve.

With ``E`` the edge multiset, ``n`` the leg count, and ``Z_v`` the zeta
series of the normalization of the component at vertex ``v`` (including its
puncture factor), the constructors compute:

* divisorial:    ``node_factor^(|E|+n) * (1-t)^(2|E|+n) * prod_v Z_v``
* Hilbert:       ``(1 - t + L*t^2)^|E| * prod_v Z_v``       (legs ignored)
* nodal Kapranov: ``(1-t)^|E| * prod_v Z_v``
* smooth Kapranov: ``prod_v Z_v``

where ``node_factor = (1 - L*t) / (1 - L*t - t + t^2)``.  Every closed form
is available both as a truncated series and as an unreduced rational
function in ``t``.

For a symbolic (or elliptic/weil) vertex of genus g the rational form uses
the numerator ``sum_d (c_d - (L+1) c_{d-1} + L c_{d-2}) t^d`` of degree 2g
over ``(1-t)(1-L*t)``; its expansion realizes the symmetric-power recurrence
``c_d = (L+1) c_{d-1} - L c_{d-2}`` that holds for curve classes beyond
degree 2g, so it matches the free-generator series through ``t^(2g)`` and
matches it at every order under any measure that realizes the generators
through a Weil numerator of degree at most 2g.
"""

from __future__ import annotations

import enum

from .graph import CurveModel, DualGraph
from .ring import RationalFn, TPoly, TruncSeries, lefschetz, one, sym_pow, zero


class ZetaKind(enum.Enum):
    DIVISORIAL = "divisorial"
    HILBERT = "hilbert"
    KAPRANOV_NODAL = "kapranov-nodal"
    KAPRANOV_SMOOTH = "kapranov-smooth"


_L = lefschetz()
_ONE_MINUS_T = TPoly([1, -1])
# (1-t)(1-Lt) as one quadratic.
_SYM_DENOMINATOR = TPoly([one(), -(_L + 1), _L])
_HILB_FACTOR = TPoly([one(), -one(), _L])


def one_minus_t(order: int) -> TruncSeries:
    return _ONE_MINUS_T.series(order)


def node_factor_rational() -> RationalFn:
    """The per-node (and per-mark) factor (1 - L*t) / (1 - L*t - t + t^2)."""
    return RationalFn(TPoly([one(), -_L]), TPoly([one(), -(_L + 1), one()]))


def node_factor_series(order: int) -> TruncSeries:
    return node_factor_rational().series(order)


def vertex_zeta_series(model: CurveModel, punctures: int, order: int) -> TruncSeries:
    """Kapranov zeta of one normalized component, with its puncture factor.

    Symbolic, elliptic, and weil models keep free coefficients
    ``c[name,d]``; a projective line expands to ``1/((1-t)(1-L*t))``.
    Each puncture multiplies by ``(1-t)``.
    """
    if model.kind == "p1":
        base = RationalFn(TPoly([1]), _SYM_DENOMINATOR).series(order)
    else:
        coeffs = [one()] + [sym_pow(model.name, d) for d in range(1, order + 1)]
        base = TruncSeries(coeffs)
    if punctures:
        base = base * one_minus_t(order) ** punctures
    return base


def vertex_zeta_rational(model: CurveModel, punctures: int) -> RationalFn:
    numerator = TPoly([1]) if model.kind == "p1" else _sym_numerator(model)
    if punctures:
        numerator = numerator * _ONE_MINUS_T**punctures
    return RationalFn(numerator, _SYM_DENOMINATOR)


def _sym_numerator(model: CurveModel) -> TPoly:
    """Degree-2g numerator with coefficients c_d - (L+1) c_{d-1} + L c_{d-2}."""

    def coefficient(degree: int):
        if degree < 0:
            return zero()
        return sym_pow(model.name, degree)

    return TPoly(
        [
            coefficient(d) - (_L + 1) * coefficient(d - 1) + _L * coefficient(d - 2)
            for d in range(2 * model.genus + 1)
        ]
    )


def _vertex_product_series(graph: DualGraph, order: int) -> TruncSeries:
    product = TruncSeries.one(order)
    for v in graph.vertices:
        product = product * vertex_zeta_series(v.model, v.punctures, order)
    return product


def _vertex_product_rational(graph: DualGraph) -> RationalFn:
    product = RationalFn([1], [1])
    for v in graph.vertices:
        product = product * vertex_zeta_rational(v.model, v.punctures)
    return product


def divisorial_zeta_series(graph: DualGraph, order: int) -> TruncSeries:
    edges, legs = graph.num_edges, graph.num_legs
    return (
        node_factor_series(order) ** (edges + legs)
        * one_minus_t(order) ** (2 * edges + legs)
        * _vertex_product_series(graph, order)
    )


def divisorial_zeta_rational(graph: DualGraph) -> RationalFn:
    edges, legs = graph.num_edges, graph.num_legs
    scalar = RationalFn(_ONE_MINUS_T ** (2 * edges + legs), TPoly([1]))
    return (
        node_factor_rational() ** (edges + legs)
        * scalar
        * _vertex_product_rational(graph)
    )


def hilbert_zeta_series(graph: DualGraph, order: int) -> TruncSeries:
    factor = _HILB_FACTOR.series(order) ** graph.num_edges
    return factor * _vertex_product_series(graph, order)


def hilbert_zeta_rational(graph: DualGraph) -> RationalFn:
    return RationalFn(_HILB_FACTOR**graph.num_edges, TPoly([1])) * _vertex_product_rational(
        graph
    )


def nodal_zeta_series(graph: DualGraph, order: int) -> TruncSeries:
    """Kapranov zeta of the nodal curve itself."""
    return one_minus_t(order) ** graph.num_edges * _vertex_product_series(graph, order)


def nodal_zeta_rational(graph: DualGraph) -> RationalFn:
    return RationalFn(_ONE_MINUS_T**graph.num_edges, TPoly([1])) * _vertex_product_rational(
        graph
    )


def smooth_zeta_series(graph: DualGraph, order: int) -> TruncSeries:
    """Plain product of vertex zetas; the Kapranov zeta when the curve is smooth."""
    return _vertex_product_series(graph, order)


def smooth_zeta_rational(graph: DualGraph) -> RationalFn:
    return _vertex_product_rational(graph)


_SERIES = {
    ZetaKind.DIVISORIAL: divisorial_zeta_series,
    ZetaKind.HILBERT: hilbert_zeta_series,
    ZetaKind.KAPRANOV_NODAL: nodal_zeta_series,
    ZetaKind.KAPRANOV_SMOOTH: smooth_zeta_series,
}

_RATIONAL = {
    ZetaKind.DIVISORIAL: divisorial_zeta_rational,
    ZetaKind.HILBERT: hilbert_zeta_rational,
    ZetaKind.KAPRANOV_NODAL: nodal_zeta_rational,
    ZetaKind.KAPRANOV_SMOOTH: smooth_zeta_rational,
}


def zeta_series(kind: ZetaKind, graph: DualGraph, order: int) -> TruncSeries:
    return _SERIES[kind](graph, order)


def zeta_rational(kind: ZetaKind, graph: DualGraph) -> RationalFn:
    return _RATIONAL[kind](graph)
