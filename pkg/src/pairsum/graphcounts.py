"""Exact counting series for labeled graphs.

Every series here is an exponential generating function in x (order) and y
(size): the coefficient of x^n y^k multiplied by n! is a count of labeled
graphs on n vertices with k edges.  Counts are recovered from the series
through a mandatory divisibility check, so a miscapped computation fails
loudly instead of returning a wrong table.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Tuple

from .series import TruncatedSeries, TruncationCaps


class ConsistencyError(RuntimeError):
    """An exact internal invariant failed (non-integer or negative count)."""


class CountTable:
    """Exact non-negative integer counts indexed by small integer tuples.

    Absent keys count zero.  Zero entries are not stored.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Tuple[int, ...], int] = ()):
        stored: dict[Tuple[int, ...], int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for key, value in items:
            key = tuple(int(part) for part in key)
            value = int(value)
            if value < 0:
                raise ConsistencyError(f"negative count {value} at {key}")
            if value:
                stored[key] = value
        self._entries = stored

    def __getitem__(self, key) -> int:
        if isinstance(key, int):
            key = (key,)
        return self._entries.get(tuple(key), 0)

    def items(self) -> Iterable[tuple[Tuple[int, ...], int]]:
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._entries.items()))
        return f"CountTable({{{body}}})"


def default_caps(n: int) -> TruncationCaps:
    """Caps guaranteeing no needed coefficient is truncated for orders <= n.

    dy allows every edge plus one color wall per vertex, the largest
    cardinality any graph on n vertices can reach.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return TruncationCaps(n, comb(n, 2) + n, 0)


def _require_flat(caps: TruncationCaps) -> None:
    if caps.dz != 0:
        raise ValueError(f"this series has no z variable; caps.dz must be 0, got {caps.dz}")


def bicolored_series(caps: TruncationCaps) -> TruncatedSeries:
    """EGF of vertex-2-colored bipartite graphs by order (x) and size (y).

    The x^n y^k coefficient is sum over i of C(n,i)*C(i*(n-i),k) / n!: choose
    the i white vertices, then k edges across the color classes.  Each
    connected bipartite graph appears under exactly two colorings, which is
    why half of the logarithm of this series counts connected bipartite
    graphs.
    """
    _require_flat(caps)
    coeffs: dict[tuple[int, int, int], Fraction] = {(0, 0, 0): Fraction(1)}
    for n in range(1, caps.dx + 1):
        n_fact = factorial(n)
        for k in range(0, min(caps.dy, (n // 2) * ((n + 1) // 2)) + 1):
            total = sum(comb(n, i) * comb(i * (n - i), k) for i in range(n + 1))
            if total:
                coeffs[(n, k, 0)] = Fraction(total, n_fact)
    return TruncatedSeries(caps, coeffs)


def all_graphs_series(caps: TruncationCaps) -> TruncatedSeries:
    """EGF of all labeled graphs: x^n y^k coefficient C(C(n,2),k) / n!."""
    _require_flat(caps)
    coeffs: dict[tuple[int, int, int], Fraction] = {(0, 0, 0): Fraction(1)}
    for n in range(1, caps.dx + 1):
        n_fact = factorial(n)
        for k in range(0, min(caps.dy, comb(n, 2)) + 1):
            coeffs[(n, k, 0)] = Fraction(comb(comb(n, 2), k), n_fact)
    return TruncatedSeries(caps, coeffs)


def _x_term(caps: TruncationCaps) -> TruncatedSeries:
    # the single-vertex term; only representable when dx >= 1
    if caps.dx >= 1:
        return TruncatedSeries.monomial(caps, (1, 0, 0))
    return TruncatedSeries.zero(caps)


def connected_bipartite_series(caps: TruncationCaps) -> TruncatedSeries:
    """EGF of connected bipartite graphs: half the log of the bicolored EGF."""
    return bicolored_series(caps).log() * Fraction(1, 2)


def graphs_no_isolated_series(caps: TruncationCaps) -> TruncatedSeries:
    """EGF of graphs without isolated vertices: exp(log(all graphs) - x).

    Dropping the x term removes the one-vertex connected graph, so the
    exponential rebuilds exactly the graphs all of whose components have
    order at least two.
    """
    _require_flat(caps)
    return (all_graphs_series(caps).log() - _x_term(caps)).exp()


def bipartite_no_isolated_series(caps: TruncationCaps) -> TruncatedSeries:
    """EGF of bipartite graphs (all components bipartite) without isolated
    vertices: exp(connected bipartite EGF minus the single-vertex term)."""
    _require_flat(caps)
    return (connected_bipartite_series(caps) - _x_term(caps)).exp()


def counts_from_egf(series: TruncatedSeries) -> CountTable:
    """Convert an EGF to the integer table n! * [x^n y^k].

    A non-integer or negative value means the series was not a graph EGF on
    this box (usually a cap misconfiguration) and raises ConsistencyError.
    """
    entries: dict[tuple[int, int], int] = {}
    for (n, k, z), coeff in series.items():
        if z != 0:
            raise ConsistencyError("graph EGFs carry no z variable")
        value = coeff * factorial(n)
        if value.denominator != 1:
            raise ConsistencyError(
                f"count at order {n}, size {k} is not an integer: {value}"
            )
        if value < 0:
            raise ConsistencyError(f"count at order {n}, size {k} is negative: {value}")
        entries[(n, k)] = int(value)
    return CountTable(entries)


def connected_bipartite_counts(caps: TruncationCaps) -> CountTable:
    """Number of connected labeled bipartite graphs, keyed (order, size)."""
    return counts_from_egf(connected_bipartite_series(caps))


def connected_graph_counts(caps: TruncationCaps) -> CountTable:
    """Number of connected labeled graphs, keyed (order, size)."""
    return counts_from_egf(all_graphs_series(caps).log())
