"""Ordered chains: detection, certificates, the rank colorer, probabilities.

An ordered chain of length r under a vertex order is a sequence of r
edges in which consecutive edges share exactly one vertex, non-adjacent
edges are disjoint, and every vertex of an earlier edge precedes every
vertex of a later edge. Orders without long chains are exactly the
orders from which the rank colorer below extracts a proper coloring, so
the whole module revolves around one dynamic program.

The DP rests on a characterization: a sequence of edges is an ordered
chain if and only if, for every consecutive pair, the order-maximal
vertex of the earlier edge is the order-minimal vertex of the later one.
Each junction vertex then sits at the exact boundary position, which
forces the single-overlap, disjointness, and separation conditions as
consequences. That reduces chain-finding to longest-path over junction
vertices in one sweep by increasing edge maximum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import Coloring, VertexOrder


@dataclass(frozen=True)
class ChainCertificate:
    """A checkable chain witness: the edge sequence and its junctions."""

    edge_indices: tuple
    junctions: tuple

    @property
    def length(self):
        return len(self.edge_indices)

    def verify(self, H, order):
        """Re-check the witness against the literal chain definition."""
        if len(self.junctions) != max(0, len(self.edge_indices) - 1):
            return False
        if not is_ordered_chain(H, order, self.edge_indices):
            return False
        for k, j in enumerate(self.junctions):
            a = set(H.edges[self.edge_indices[k]])
            b = set(H.edges[self.edge_indices[k + 1]])
            if a & b != {j}:
                return False
        return True


@dataclass(frozen=True)
class PluharResult:
    """Outcome of the rank colorer for one vertex order.

    Either ``coloring`` is a proper coloring on the requested palette, or
    it is None and ``certificate`` is an ordered chain too long for the
    palette, proving this order cannot work. ``longest`` always reports
    the longest chain under the order.
    """

    coloring: Coloring | None
    certificate: ChainCertificate | None
    longest: int

    @property
    def succeeded(self):
        return self.coloring is not None


@dataclass(frozen=True)
class OrderStats:
    """Random-order experiment: how often no chain of the target length."""

    trials: int
    chain_free_count: int
    seed: int

    @property
    def fraction(self):
        return self.chain_free_count / self.trials if self.trials else 0.0


@dataclass(frozen=True)
class SequenceStats:
    """Random-order experiment for one fixed edge sequence."""

    trials: int
    chain_count: int
    seed: int

    @property
    def fraction(self):
        return self.chain_count / self.trials if self.trials else 0.0


def is_ordered_chain(H, order, edge_indices):
    """Literal check of the three chain conditions for an edge sequence."""
    r = len(edge_indices)
    if r < 1:
        return False
    if len(set(edge_indices)) != r:
        return False
    for idx in edge_indices:
        if not 0 <= idx < H.num_edges:
            return False
    pos = order.positions()
    sets = [set(H.edges[i]) for i in edge_indices]
    spans = [(min(pos[v] for v in s), max(pos[v] for v in s)) for s in sets]
    for i in range(r):
        for j in range(i + 1, r):
            common = sets[i] & sets[j]
            if j == i + 1:
                if len(common) != 1:
                    return False
            elif common:
                return False
            if spans[i][1] > spans[j][0]:
                return False
    return True


def _chain_dp(H, order):
    """One sweep of the junction DP.

    Returns per-edge chain lengths, predecessor indices, and each edge's
    order-maximal vertex. Edges are processed by increasing maximum
    position; a predecessor's maximum is the successor's minimum, hence
    strictly earlier in that sweep, so one pass suffices.
    """
    pos = order.positions()
    info = []
    for idx, e in enumerate(H.edges):
        vmin = min(e, key=lambda v: pos[v])
        vmax = max(e, key=lambda v: pos[v])
        info.append((pos[vmax], pos[vmin], idx, vmin, vmax))
    info.sort()

    lengths = [0] * H.num_edges
    pred = [None] * H.num_edges
    max_vertex = [None] * H.num_edges
    best_at = {}
    for _, _, idx, vmin, vmax in info:
        prev = best_at.get(vmin)
        if prev is None:
            lengths[idx] = 1
        else:
            lengths[idx] = prev[0] + 1
            pred[idx] = prev[1]
        max_vertex[idx] = vmax
        cur = best_at.get(vmax)
        if cur is None or lengths[idx] > cur[0]:
            best_at[vmax] = (lengths[idx], idx)
    return lengths, pred, max_vertex


def _certificate_from(H, pred, end_idx):
    seq = []
    cur = end_idx
    while cur is not None:
        seq.append(cur)
        cur = pred[cur]
    seq.reverse()
    junctions = []
    for a, b in zip(seq, seq[1:]):
        (shared,) = set(H.edges[a]) & set(H.edges[b])
        junctions.append(shared)
    return ChainCertificate(tuple(seq), tuple(junctions))


def longest_ordered_chain(H, order):
    """Length of the longest ordered chain plus a witness for it.

    An edgeless instance has chain length 0 and no certificate.
    """
    if H.num_edges == 0:
        return 0, None
    lengths, pred, _ = _chain_dp(H, order)
    end_idx = max(range(H.num_edges), key=lambda i: lengths[i])
    return lengths[end_idx], _certificate_from(H, pred, end_idx)


def pluhar_color(H, order, palette):
    """Derandomized chain colorer for one vertex order.

    Each vertex is colored one plus the length of the longest chain that
    ends at an edge whose order-maximal vertex it is (zero when it closes
    no edge). Inside any edge the closing vertex extends every chain
    arriving at the opening vertex, so its rank is strictly larger and
    the edge cannot be monochromatic. The palette suffices exactly when
    the longest chain has length at most palette - 1; otherwise that
    chain is returned as the refusal certificate.
    """
    if palette < 1:
        raise ValueError("palette must be >= 1")
    if H.num_edges == 0:
        return PluharResult(
            Coloring((1,) * H.num_vertices, palette) if H.num_vertices else Coloring((), palette),
            None,
            0,
        )
    lengths, pred, max_vertex = _chain_dp(H, order)
    end_idx = max(range(H.num_edges), key=lambda i: lengths[i])
    longest = lengths[end_idx]
    certificate = _certificate_from(H, pred, end_idx)
    if longest > palette - 1:
        return PluharResult(None, certificate, longest)
    rank = [0] * H.num_vertices
    for idx in range(H.num_edges):
        v = max_vertex[idx]
        if lengths[idx] > rank[v]:
            rank[v] = lengths[idx]
    coloring = Coloring(tuple(c + 1 for c in rank), palette)
    return PluharResult(coloring, certificate, longest)


def order_from_coloring(coloring):
    """Vertex order sorted by color, then index.

    Under this order any chain crosses a strictly increasing sequence of
    colors: a proper p-coloring therefore bounds every chain by p - 1
    edges, which is the converse direction of the rank colorer.
    """
    perm = sorted(range(len(coloring.colors)), key=lambda v: (coloring.colors[v], v))
    return VertexOrder(tuple(perm))


def ordered_chain_probability(n, r):
    """Exact probability that one fixed r-block chain is ordered.

    For the canonical chain on (n-1)r + 1 vertices under a uniformly
    random order: the two end blocks may permute their n - 1 free
    vertices, each middle block its n - 2, and the junction positions
    are forced.
    """
    if n < 2 or r < 2:
        raise ValueError("needs n >= 2 and r >= 2")
    numerator = factorial(n - 1) ** 2 * factorial(n - 2) ** (r - 2)
    return Fraction(numerator, factorial((n - 1) * r + 1))


def monte_carlo_order(H, r, trials, seed):
    """Sample vertex orders; count those with no ordered r-chain."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    free = 0
    for _ in range(trials):
        order = VertexOrder.shuffled(H.num_vertices, rng)
        length, _ = longest_ordered_chain(H, order)
        if length < r:
            free += 1
    return OrderStats(trials, free, seed)


def ordered_fraction_monte_carlo(H, edge_indices, trials, seed):
    """Sample vertex orders; count those making edge_indices a chain.

    Trial t uses its own generator seeded with seed + t, so any single
    trial can be replayed in isolation.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    seq = tuple(edge_indices)
    hits = 0
    for t in range(trials):
        rng = random.Random(seed + t)
        order = VertexOrder.shuffled(H.num_vertices, rng)
        if is_ordered_chain(H, order, seq):
            hits += 1
    return SequenceStats(trials, hits, seed)
