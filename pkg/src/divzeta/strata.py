"""Brute-force enumeration of divisor strata on a dual graph.

A stratum of the degree-d divisor space is indexed by a stable pair: a
subdivision of the dual graph together with a degree assignment that is at
least 1 on every exceptional vertex.  Concretely that is a nonnegative
degree per original vertex, an ordered composition per edge (the degrees
along the chain of exceptional bubbles subdividing it, read along the
edge's stored orientation), and an ordered composition per leg (the chain
inserted between the component and the marked point, read from the
component outward).

The class of a stratum is the product of punctured symmetric-power classes
of the components with the torus symmetric-power classes of the exceptional
bubbles; summing over all stable pairs of total degree d gives the degree-d
coefficient of the divisorial zeta function, independently of its closed
form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graph import DualGraph
from .ring import RingElem, lefschetz, one, sum_elems
from .zeta import one_minus_t, vertex_zeta_series


@dataclass(frozen=True)
class StablePair:
    """One stratum: degrees on original vertices plus chain compositions.

    Entries align with ``graph.vertices``, ``graph.edges``, and
    ``graph.legs`` by position.  Chain entries are all positive.
    """

    vertex_degrees: tuple[int, ...]
    edge_chains: tuple[tuple[int, ...], ...]
    leg_chains: tuple[tuple[int, ...], ...]

    def total_degree(self) -> int:
        return (
            sum(self.vertex_degrees)
            + sum(map(sum, self.edge_chains))
            + sum(map(sum, self.leg_chains))
        )

    def sort_key(self) -> tuple:
        return (self.vertex_degrees, self.edge_chains, self.leg_chains)

    def dump(self, graph: DualGraph) -> str:
        """One-line form, e.g. ``v:{v1:2} e:{} l:{leg0:[1,1]}``."""
        vparts = [
            f"{v.id}:{deg}"
            for v, deg in zip(graph.vertices, self.vertex_degrees)
            if deg
        ]
        eparts = [
            f"e{i}:[{','.join(map(str, chain))}]"
            for i, chain in enumerate(self.edge_chains)
            if chain
        ]
        lparts = [
            f"leg{i}:[{','.join(map(str, chain))}]"
            for i, chain in enumerate(self.leg_chains)
            if chain
        ]
        return (
            f"v:{{{','.join(vparts)}}}"
            f" e:{{{','.join(eparts)}}}"
            f" l:{{{','.join(lparts)}}}"
        )


@lru_cache(maxsize=None)
def compositions(total: int) -> tuple[tuple[int, ...], ...]:
    """All ordered compositions of ``total``; only the empty one for 0."""
    if total < 0:
        raise ValueError("cannot compose a negative total")
    if total == 0:
        return ((),)
    out = []
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            out.append((first,) + rest)
    return tuple(out)


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def stable_pairs(graph: DualGraph, degree: int) -> list[StablePair]:
    """All stable pairs of the given total degree, sorted by ``sort_key``.

    The total degree is split over vertices, edges, and legs by weak
    compositions; each edge or leg share then expands into every ordered
    composition.  Chain reversal is never quotiented out.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    num_v = len(graph.vertices)
    num_e = graph.num_edges
    num_l = graph.num_legs
    pairs = []
    for split in weak_compositions(degree, num_v + num_e + num_l):
        vertex_degrees = split[:num_v]
        edge_options = [compositions(s) for s in split[num_v : num_v + num_e]]
        leg_options = [compositions(s) for s in split[num_v + num_e :]]
        for edge_chains in itertools.product(*edge_options):
            for leg_chains in itertools.product(*leg_options):
                pairs.append(StablePair(vertex_degrees, edge_chains, leg_chains))
    pairs.sort(key=StablePair.sort_key)
    return pairs


def stable_pair_count(graph: DualGraph, degree: int) -> int:
    return len(stable_pairs(graph, degree))


def torus_class(m: int) -> RingElem:
    """Class of the m-th symmetric power of the one-dimensional torus."""
    if m < 0:
        raise ValueError("symmetric-power index must be nonnegative")
    if m == 0:
        return one()
    return lefschetz() ** m - lefschetz() ** (m - 1)


@lru_cache(maxsize=None)
def punctured_sym_class(model, holes: int, degree: int) -> RingElem:
    """Class of the degree-d symmetric power of a component minus ``holes`` points.

    Coefficient of ``t^degree`` in the vertex zeta times ``(1-t)^holes``.
    """
    series = vertex_zeta_series(model, 0, degree) * one_minus_t(degree) ** holes
    return series[degree]


def stratum_class(graph: DualGraph, pair: StablePair) -> RingElem:
    """Product of component classes and torus classes over one stable pair.

    Each original vertex contributes the class of its punctured symmetric
    power, where the punctured locus removes the nodes, marked points, and
    punctures; each chain entry ``a`` contributes the torus class of index
    ``a - 1``.
    """
    result = one()
    for v, deg in zip(graph.vertices, pair.vertex_degrees):
        holes = graph.valence(v.id) + graph.legs_at(v.id) + v.punctures
        result = result * punctured_sym_class(v.model, holes, deg)
    for chain in pair.edge_chains + pair.leg_chains:
        for entry in chain:
            result = result * torus_class(entry - 1)
    return result


def divisor_class_from_strata(graph: DualGraph, degree: int) -> RingElem:
    """Class of the degree-d divisor space as a sum over strata.

    This is the brute-force counterpart of the degree-d coefficient of the
    closed-form divisorial zeta.
    """
    return sum_elems(stratum_class(graph, pair) for pair in stable_pairs(graph, degree))


def composition_torus_sum(degree: int) -> RingElem:
    """Sum over ordered compositions of ``degree`` of products of torus classes.

    Equals the ``t^degree`` coefficient of the node factor.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    total = []
    for alpha in compositions(degree):
        product = one()
        for entry in alpha:
            product = product * torus_class(entry - 1)
        total.append(product)
    return sum_elems(total)
