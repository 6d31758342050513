"""Generating functions for central colored graphs.

A subset of the arrangement's walls corresponds to a graph on [n] with an
edge {i,j} per wall x_i+x_j=1 and a color 0 or 1 on vertex v per wall x_v=0
or x_v=1.  The subset has a common point exactly when the graph is central:
its underlying uncolored part carries no odd cycle through a colored vertex
and no conflicting colors (equivalently, the stacked linear system is
consistent).  Central graphs decompose uniquely into four kinds of
components, and the generating function for all central graphs is the
product of one factor per kind:

  type 0  uncolored bipartite components (tracked by z; rank = order - 1
          per component, hence the z/x re-indexing),
  type 1  uncolored non-bipartite components,
  type 2  isolated colored vertices,
  type 3  components in which every vertex reaches a colored vertex.

In the product Gamma(x,y,z), x marks rank, y cardinality (edges plus colored
vertices) and z the number of type-0 components; the x^r y^c z^v coefficient
times (r+v)! is the number of central graphs of rank r and cardinality c
with v bipartite components on a vertex set of size r+v.

The type-1 factor exists in two variants, selected by :class:`Mode`.  The
published closed form subtracts the bipartite isolated-vertex-free series
from the all-graphs one, which counts every non-bipartite graph including
those with some bipartite components; from order 5 on (triangle plus a
disjoint edge) such graphs are also produced by the type-0 factor and the
product double-counts.  The corrected variant exponentiates the connected
non-bipartite series, so only graphs all of whose components are
non-bipartite are counted and the decomposition stays unique.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Tuple

from .graphcounts import (
    ConsistencyError,
    CountTable,
    all_graphs_series,
    bipartite_no_isolated_series,
    connected_bipartite_counts,
    connected_bipartite_series,
    graphs_no_isolated_series,
)
from .series import TruncatedSeries, TruncationCaps


class Mode(str, enum.Enum):
    """Type-1 factor variant: the published closed form, or the corrected
    unique-decomposition form (the default everywhere)."""

    PAPER = "paper"
    CORRECTED = "corrected"


def pipeline_caps(n: int) -> TruncationCaps:
    """Caps sufficient to assemble the characteristic polynomial for rank n.

    dy covers every edge plus one color wall per vertex; dz covers the
    largest possible number of bipartite components (each has at least two
    vertices, and a rank-r part with v components occupies r+v <= n labels).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return TruncationCaps(n, comb(n, 2) + n, n // 2)


def _flat(caps: TruncationCaps) -> TruncationCaps:
    return TruncationCaps(caps.dx, caps.dy, 0)


def gamma0(caps: TruncationCaps) -> TruncatedSeries:
    """Type-0 factor: exp[(connected bipartite EGF minus x) * z/x].

    The inner series is computed with the x cap raised by one so that the
    rank re-indexing (which lowers every x-degree by one) stays exact up to
    caps.dx.
    """
    inner_caps = TruncationCaps(caps.dx + 1, caps.dy, 0)
    conn = connected_bipartite_series(inner_caps)
    conn = conn - TruncatedSeries.monomial(inner_caps, (1, 0, 0))
    shifted = conn.shift_rank_marker()  # caps (caps.dx, caps.dy, 1)
    if caps.dz == 0:
        shifted = shifted.truncated(caps)
    else:
        shifted = shifted.extended_z(caps.dz)
    return shifted.exp()


def gamma1(caps: TruncationCaps, mode: Mode = Mode.CORRECTED) -> TruncatedSeries:
    """Type-1 factor in the requested variant.

    PAPER: all isolated-vertex-free graphs minus the bipartite
    isolated-vertex-free ones (counts any graph containing an odd cycle).
    CORRECTED: exp of the connected non-bipartite EGF (counts graphs all of
    whose components contain an odd cycle).  The two agree up to order 4;
    the first divergence is a triangle plus a disjoint edge at order 5.
    """
    flat = _flat(caps)
    if mode is Mode.PAPER:
        series = graphs_no_isolated_series(flat) - bipartite_no_isolated_series(flat) + 1
    elif mode is Mode.CORRECTED:
        connected_nonbip = all_graphs_series(flat).log() - connected_bipartite_series(flat)
        series = connected_nonbip.exp()
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return series.extended_z(caps.dz)


def gamma2(caps: TruncationCaps) -> TruncatedSeries:
    """Type-2 factor: isolated colored vertices, 2^r/r! x^r y^r."""
    coeffs = {
        (r, r, 0): Fraction(2**r, factorial(r))
        for r in range(0, min(caps.dx, caps.dy) + 1)
    }
    return TruncatedSeries(_flat(caps), coeffs).extended_z(caps.dz)


def gamma3_connected(caps: TruncationCaps) -> TruncatedSeries:
    """EGF of connected type-3 graphs by rank (= order) and cardinality.

    A connected type-3 graph is a connected bipartite graph on r >= 2
    vertices carrying t >= 1 colored vertices, colored consistently with the
    bipartition; there are exactly two consistent colorings of any chosen
    vertex set.  With c = edges + t this gives

        coefficient of x^r y^c  =  sum_t 2 * b(r, c-t) * C(r, t) / r!

    where b counts connected bipartite graphs by (order, size) and t runs
    over 1..min(r, c-r+1).  Single colored vertices (r = 1) belong to the
    type-2 factor, so r starts at 2.
    """
    flat = _flat(caps)
    bip = connected_bipartite_counts(flat)
    coeffs: dict[tuple[int, int, int], Fraction] = {}
    for r in range(2, caps.dx + 1):
        r_fact = factorial(r)
        for c in range(r, min(caps.dy, (r * r) // 4 + r) + 1):
            total = sum(
                2 * bip[(r, c - t)] * comb(r, t)
                for t in range(1, min(r, c - r + 1) + 1)
            )
            if total:
                coeffs[(r, c, 0)] = Fraction(total, r_fact)
    return TruncatedSeries(flat, coeffs)


def gamma3(caps: TruncationCaps) -> TruncatedSeries:
    """Type-3 factor: exp of the connected type-3 EGF."""
    return gamma3_connected(caps).exp().extended_z(caps.dz)


def gamma_product(caps: TruncationCaps, mode: Mode = Mode.CORRECTED) -> TruncatedSeries:
    """The full central-graph generating function Gamma = G0*G1*G2*G3."""
    return gamma0(caps) * gamma1(caps, mode) * gamma2(caps) * gamma3(caps)


class GammaCoefficients:
    """Central-graph counts: (rank, cardinality, bipartite components) -> int.

    The count at (r, c, v) is the number of central colored graphs on the
    vertex set {1..r+v} of rank r and cardinality c with v bipartite
    components and no unused vertex.
    """

    __slots__ = ("_entries",)

    def __init__(
        self,
        entries: Mapping[Tuple[int, int, int], int],
        *,
        check_rank_bound: bool = True,
    ):
        """check_rank_bound enforces cardinality >= rank, which every true
        central graph satisfies; the published type-1 variant violates it
        from order 5 on (it misclassifies mixed graphs as full rank), so
        paper-mode extractions disable the check."""
        stored: dict[Tuple[int, int, int], int] = {}
        for (r, c, v), count in entries.items() if isinstance(entries, Mapping) else entries:
            count = int(count)
            if count < 0:
                raise ConsistencyError(f"negative central-graph count at {(r, c, v)}")
            if count and c < r and check_rank_bound:
                raise ConsistencyError(
                    f"count at rank {r}, cardinality {c} violates c >= r"
                )
            if count:
                stored[(r, c, v)] = count
        if stored.get((0, 0, 0), 0) != 1:
            raise ConsistencyError("the empty graph must be counted exactly once")
        self._entries = stored

    def count(self, r: int, c: int, v: int) -> int:
        return self._entries.get((r, c, v), 0)

    def items(self) -> Iterable[tuple[Tuple[int, int, int], int]]:
        return self._entries.items()

    def __len__(self) -> int:
        return len(self._entries)

    def rank_cardinality_table(self, n: int) -> CountTable:
        """Counts of central graphs on [n] by (rank, cardinality).

        Vertices not used by the graph stay unconstrained, so a graph on
        r+v labels is planted into [n] in C(n, r+v) ways.
        """
        table: dict[tuple[int, int], int] = {}
        for (r, c, v), count in self._entries.items():
            if r + v <= n:
                key = (r, c)
                table[key] = table.get(key, 0) + comb(n, r + v) * count
        return CountTable(table)


def extract_counts(
    gamma: TruncatedSeries, *, check_rank_bound: bool = True
) -> GammaCoefficients:
    """Read integer central-graph counts off the product series.

    The (r, c, v) coefficient times (r+v)! must be a non-negative integer;
    anything else means the series was assembled inconsistently.  Pass
    check_rank_bound=False when extracting a paper-mode product, which
    legitimately carries c < r entries (see :class:`GammaCoefficients`).
    """
    entries: dict[tuple[int, int, int], int] = {}
    for (r, c, v), coeff in gamma.items():
        value = coeff * factorial(r + v)
        if value.denominator != 1:
            raise ConsistencyError(
                f"central-graph count at {(r, c, v)} is not an integer: {value}"
            )
        entries[(r, c, v)] = int(value)
    return GammaCoefficients(entries, check_rank_bound=check_rank_bound)
