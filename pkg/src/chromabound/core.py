"""Uniform hypergraph instances and the elementary predicates on them.

The toolkit works on n-uniform hypergraphs over dense vertex indices:
an instance is a vertex count plus a family of n-element edges, n >= 2.
Instances are immutable and canonically ordered (each edge strictly
increasing, edges sorted lexicographically) so that equal instances
serialize to identical bytes. Isolated vertices are allowed; they never
affect properness.

A coloring assigns every vertex a color in {1..palette}; it is proper
when no edge is monochromatic. ``is_proper`` reports the full list of
offending edges, which the randomized colorers use as their repair queue
and the tests use as the final referee.

A vertex order is a permutation of the vertex set. Orders drive the
ordered-chain machinery: position in the permutation, not vertex index,
is what the chain conditions compare.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass

from .errors import InvalidInstanceError

# The 7-point projective plane: 7 vertices, 7 edges, every pair of edges
# meets in exactly one vertex. Smallest 3-uniform instance that needs
# three colors, which makes it the canonical witness across the suite.
FANO_EDGES = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)


def validate(n, num_vertices, edges, require_sorted=False):
    """Collect every contract violation in raw instance data.

    Returns a list of human-readable strings; empty means valid. With
    ``require_sorted`` each edge must already be strictly increasing, the
    on-disk JSON contract. Violations are data, not exceptions, so a
    loader can report all of them in one pass.
    """
    violations = []
    if not isinstance(n, int) or n < 2:
        violations.append(f"uniformity must be an integer >= 2, got {n!r}")
        return violations
    if not isinstance(num_vertices, int) or num_vertices < 0:
        violations.append(f"num_vertices must be a nonnegative integer, got {num_vertices!r}")
        return violations
    seen = set()
    for idx, edge in enumerate(edges):
        e = tuple(edge)
        if len(e) != n:
            violations.append(f"edge {idx} has {len(e)} vertices, expected {n}")
            continue
        bad = False
        for v in e:
            if not isinstance(v, int) or not 0 <= v < num_vertices:
                violations.append(f"edge {idx} vertex {v!r} outside 0..{num_vertices - 1}")
                bad = True
        if bad:
            continue
        for a, b in zip(e, e[1:]):
            if a == b:
                violations.append(f"edge {idx} has repeated vertex {a}")
                bad = True
                break
            if require_sorted and a > b:
                violations.append(f"edge {idx} is not strictly increasing")
                bad = True
                break
        if bad:
            continue
        key = tuple(sorted(e))
        if key in seen:
            violations.append(f"duplicate edge {list(key)}")
        seen.add(key)
    return violations


@dataclass(frozen=True)
class Hypergraph:
    """An immutable n-uniform hypergraph in canonical edge order."""

    n: int
    num_vertices: int
    edges: tuple

    @classmethod
    def build(cls, n, num_vertices, edges):
        """Canonicalize and validate; raises InvalidInstanceError."""
        canon = tuple(sorted(tuple(sorted(e)) for e in edges))
        violations = validate(n, num_vertices, canon)
        if violations:
            raise InvalidInstanceError(violations)
        return cls(n, num_vertices, canon)

    def validate(self):
        """Re-check the invariants of a built instance."""
        return validate(self.n, self.num_vertices, self.edges, require_sorted=True)

    @property
    def num_edges(self):
        return len(self.edges)

    def to_dict(self):
        return {
            "n": self.n,
            "num_vertices": self.num_vertices,
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        try:
            n = data["n"]
            num_vertices = data["num_vertices"]
            edges = data["edges"]
        except (TypeError, KeyError) as exc:
            raise InvalidInstanceError([f"missing instance field: {exc}"]) from exc
        violations = validate(n, num_vertices, edges, require_sorted=True)
        if violations:
            raise InvalidInstanceError(violations)
        return cls(n, num_vertices, tuple(tuple(e) for e in sorted(map(tuple, edges))))

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInstanceError([f"not valid JSON: {exc}"]) from exc
        return cls.from_dict(data)


@dataclass(frozen=True)
class Coloring:
    """Vertex colors in {1..palette}; index position is the vertex."""

    colors: tuple
    palette: int

    def __post_init__(self):
        if self.palette < 1:
            raise ValueError("palette must be >= 1")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.palette:
                raise ValueError(f"vertex {v} color {c} outside 1..{self.palette}")

    def to_dict(self):
        return {"palette": self.palette, "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data["colors"]), int(data["palette"]))


@dataclass(frozen=True)
class VertexOrder:
    """A linear order on the vertices: permutation[i] is the i-th vertex."""

    permutation: tuple

    def __post_init__(self):
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError("order must be a permutation of 0..num_vertices-1")

    @classmethod
    def natural(cls, num_vertices):
        return cls(tuple(range(num_vertices)))

    @classmethod
    def shuffled(cls, num_vertices, rng):
        perm = list(range(num_vertices))
        rng.shuffle(perm)
        return cls(tuple(perm))

    def positions(self):
        """pos[v] = rank of vertex v under this order."""
        pos = [0] * len(self.permutation)
        for rank, v in enumerate(self.permutation):
            pos[v] = rank
        return tuple(pos)


def is_proper(H, coloring):
    """Check a coloring against every edge.

    Returns (ok, monochromatic_edge_indices). A coloring of the wrong
    length is a contract violation, not a failed check.
    """
    if len(coloring.colors) != H.num_vertices:
        raise ValueError(
            f"coloring has {len(coloring.colors)} entries for {H.num_vertices} vertices"
        )
    mono = []
    cols = coloring.colors
    for idx, e in enumerate(H.edges):
        c0 = cols[e[0]]
        if all(cols[v] == c0 for v in e[1:]):
            mono.append(idx)
    return (not mono, tuple(mono))


def degrees(H):
    """Per-vertex edge membership counts."""
    deg = [0] * H.num_vertices
    for e in H.edges:
        for v in e:
            deg[v] += 1
    return tuple(deg)


def induced(H, subset):
    """Sub-hypergraph on a vertex subset, keeping edges fully inside it.

    Vertices are re-indexed densely; the returned map gives the original
    index of each new vertex, so identity is never lost.
    """
    sub = sorted(set(subset))
    for v in sub:
        if not 0 <= v < H.num_vertices:
            raise ValueError(f"vertex {v} outside 0..{H.num_vertices - 1}")
    new_index = {v: i for i, v in enumerate(sub)}
    keep = set(sub)
    edges = [
        tuple(new_index[v] for v in e) for e in H.edges if all(v in keep for v in e)
    ]
    return Hypergraph.build(H.n, len(sub), edges), tuple(sub)


def fano():
    """The 7-point plane instance."""
    return Hypergraph.build(3, 7, FANO_EDGES)


def complete(n, num_vertices):
    """All n-subsets of the vertex set as edges."""
    if n < 2:
        raise ValueError("uniformity must be >= 2")
    if num_vertices < n:
        raise ValueError("complete instance needs at least n vertices")
    return Hypergraph.build(n, num_vertices, itertools.combinations(range(num_vertices), n))


def random_uniform(n, num_vertices, num_edges, seed):
    """num_edges distinct n-subsets sampled uniformly, deterministic in seed."""
    if n < 2:
        raise ValueError("uniformity must be >= 2")
    total = math.comb(num_vertices, n)
    if num_edges < 0 or num_edges > total:
        raise ValueError(f"cannot place {num_edges} distinct edges among {total} possible")
    rng = random.Random(seed)
    if 2 * num_edges >= total:
        population = list(itertools.combinations(range(num_vertices), n))
        chosen = rng.sample(population, num_edges)
    else:
        chosen = set()
        while len(chosen) < num_edges:
            chosen.add(tuple(sorted(rng.sample(range(num_vertices), n))))
    return Hypergraph.build(n, num_vertices, chosen)


def chain_blocks(n, r):
    """Canonical r-link chain: consecutive n-blocks overlapping in one vertex.

    Returns the instance plus the edge-index sequence of the chain in
    block order. Spans (n-1)*r + 1 vertices.
    """
    if n < 2 or r < 1:
        raise ValueError("chain needs n >= 2 and r >= 1")
    num_vertices = (n - 1) * r + 1
    edges = [tuple(range(i * (n - 1), i * (n - 1) + n)) for i in range(r)]
    H = Hypergraph.build(n, num_vertices, edges)
    # block edges are already in canonical order, so indices are 0..r-1
    return H, tuple(range(r))


def generate(kind, *, n=None, num_vertices=None, num_edges=None, seed=None):
    """Dispatch for the CLI: kind in {fano, complete, random}."""
    if kind == "fano":
        return fano()
    if kind == "complete":
        if n is None or num_vertices is None:
            raise ValueError("complete needs n and num_vertices")
        return complete(n, num_vertices)
    if kind == "random":
        if n is None or num_vertices is None or num_edges is None or seed is None:
            raise ValueError("random needs n, num_vertices, num_edges, seed")
        return random_uniform(n, num_vertices, num_edges, seed)
    raise ValueError(f"unknown generator kind {kind!r}")
