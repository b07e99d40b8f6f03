"""Randomized colorers extracted from first-moment arguments.

Three constructions, each a restart loop around a randomized step whose
expected outcome is good enough that some sample must reach it:

* ``alon_recolor``: color with a deliberately short palette, then spend
  the reserved colors repairing monochromatic edges one vertex at a
  time. Succeeds with certainty (eventually) below an explicit edge
  budget.
* ``weighted_independent_set``: biased vertex sampling plus one deletion
  per surviving edge; returns an independent set whose degree sum meets
  a closed-form target.
* ``peel_color``: repeatedly carve out either one high-degree vertex or
  one heavy independent set, give it the next color, and recurse on the
  rest with one color fewer. An exact edge-count invariant guarantees
  the last color finds no edges left.

All randomness flows through ``RandomizedRunConfig``; equal seeds give
equal transcripts.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import Coloring, degrees, induced, is_proper
from .errors import RestartsExhaustedError


@dataclass(frozen=True)
class RandomizedRunConfig:
    seed: int
    max_restarts: int = 1000

    def __post_init__(self):
        if self.max_restarts < 1:
            raise ValueError("max_restarts must be >= 1")


@dataclass(frozen=True)
class AlonResult:
    coloring: Coloring
    restarts: int
    repaired: int


@dataclass(frozen=True)
class IndependentSetResult:
    vertices: tuple
    degree_sum: int
    restarts: int


@dataclass(frozen=True)
class PeelResult:
    coloring: Coloring
    rounds: tuple


def default_base_palette(n, r):
    """The short-palette size floor((n-1) r / n) used by the recolorer."""
    return ((n - 1) * r) // n


def alon_edge_limit(n, r, a=None):
    """Strict edge-count budget under which alon_recolor must succeed.

    With base palette a, a uniformly random a-coloring leaves on average
    |E| / a^(n-1) monochromatic edges, while the r - a reserved colors
    can repair (r - a)(n - 1) of them. Any instance with fewer than
    a^(n-1) (r - a)(n - 1) edges therefore has a repairable sample.
    """
    if n < 2 or r < 2:
        raise ValueError("needs n >= 2 and r >= 2")
    if a is None:
        a = default_base_palette(n, r)
    if not 1 <= a < r:
        raise ValueError(f"base palette {a} must satisfy 1 <= a < r={r}")
    return a ** (n - 1) * (r - a) * (n - 1)


def expected_monochromatic(num_edges, n, a):
    """Exact mean number of monochromatic edges under a random a-coloring."""
    return Fraction(num_edges, a ** (n - 1))


def alon_recolor(H, r, config, a=None):
    """Short palette plus repairs; raises RestartsExhaustedError on a bad run.

    Each restart draws a uniform coloring with a colors. If at most
    (r - a)(n - 1) edges come out monochromatic, the reserve colors
    a+1..r repair them: each reserve color recolors one vertex in up to
    n - 1 still-monochromatic edges, so no edge can ever become fully
    reserve-colored, and every touched edge stops being monochromatic.
    """
    n = H.n
    if a is None:
        a = default_base_palette(n, r)
    if not 1 <= a < r:
        raise ValueError(f"base palette {a} must satisfy 1 <= a < r={r}")
    capacity = (r - a) * (n - 1)
    rng = random.Random(config.seed)
    mono_counts = []
    for attempt in range(1, config.max_restarts + 1):
        colors = [rng.randint(1, a) for _ in range(H.num_vertices)]
        _, mono = is_proper(H, Coloring(tuple(colors), r))
        mono_counts.append(len(mono))
        if len(mono) > capacity:
            continue
        spare = a + 1
        used_in_spare = 0
        repaired = 0
        for idx in mono:
            e = H.edges[idx]
            if any(colors[v] != colors[e[0]] for v in e):
                continue  # an earlier repair already broke this edge
            if used_in_spare == n - 1:
                spare += 1
                used_in_spare = 0
            assert spare <= r, "repair capacity accounting is wrong"
            assert colors[e[0]] <= a, "a reserve color swallowed a whole edge"
            colors[e[0]] = spare
            used_in_spare += 1
            repaired += 1
        coloring = Coloring(tuple(colors), r)
        ok, _ = is_proper(H, coloring)
        assert ok, "repair produced an improper coloring"
        return AlonResult(coloring, attempt, repaired)
    raise RestartsExhaustedError(
        f"no repairable sample in {config.max_restarts} restarts "
        f"(capacity {capacity}, edge budget {alon_edge_limit(n, r, a)})",
        config.max_restarts,
        {"mono_counts": mono_counts},
    )


def degree_sum_target(H):
    """Guaranteed degree-sum of the sampled independent set.

    Returns (bound, need): the real-valued target
    (1 - 1/n) * sum over positive-degree v of d_v^((n-2)/(n-1))
    and its integer ceiling. The ceiling absorbs a hair of float noise
    so an exactly-integer bound is not rounded up past itself.
    """
    n = H.n
    deg = degrees(H)
    bound = (1.0 - 1.0 / n) * sum(
        d ** ((n - 2) / (n - 1)) for d in deg if d > 0
    )
    return bound, math.ceil(bound - 1e-9)


def weighted_independent_set(H, config):
    """Independent set with degree sum at least ceil of the target.

    Each vertex enters the sample independently with probability
    d_v^(-1/(n-1)); degree-zero vertices always enter and never leave.
    Every edge that survives the sampling intact loses its
    minimum-degree vertex (ties to the lowest index), which makes the
    result independent unconditionally. In expectation the kept degree
    sum meets the target, so restarts must eventually hit it.
    """
    n = H.n
    deg = degrees(H)
    bound, need = degree_sum_target(H)
    probs = [d ** (-1.0 / (n - 1)) if d > 0 else 1.0 for d in deg]
    rng = random.Random(config.seed)
    for attempt in range(1, config.max_restarts + 1):
        picked = [v for v in range(H.num_vertices) if rng.random() < probs[v] or deg[v] == 0]
        keep = set(picked)
        for e in H.edges:
            if all(v in keep for v in e):
                victim = min(e, key=lambda v: (deg[v], v))
                keep.discard(victim)
        d_sum = sum(deg[v] for v in keep)
        if d_sum >= need:
            return IndependentSetResult(tuple(sorted(keep)), d_sum, attempt)
    raise RestartsExhaustedError(
        f"degree-sum target {need} not reached in {config.max_restarts} restarts",
        config.max_restarts,
        {"target": need, "bound": bound},
    )


def peel_color(H, r, config, c=None):
    """Peel one color class per round until the last color is free.

    Requires |E| <= c * r^n with c at most n^-n (the default). Round
    with r' colors left: if some vertex has degree at least
    c * n * r'^(n-1), that vertex alone is the class (deleting it
    removes enough edges); otherwise every degree is small, the biased
    sampler's target is large relative to the live edge count, and its
    independent set is the class. Either way the live edge count drops
    from c * r'^n to c * (r'-1)^n, so color 1 inherits an edgeless
    remainder. Comparisons are exact rational arithmetic throughout.
    """
    n = H.n
    if r < 1:
        raise ValueError("palette size must be >= 1")
    c = Fraction(1, n**n) if c is None else Fraction(c)
    if not 0 < c <= Fraction(1, n**n):
        raise ValueError(f"peel constant must lie in (0, 1/{n**n}]")
    budget = c * Fraction(r) ** n
    if H.num_edges > budget:
        raise ValueError(
            f"{H.num_edges} edges exceeds the peel budget {budget} for palette {r}"
        )

    colors = [0] * H.num_vertices
    live = set(range(H.num_vertices))
    rounds = []
    for round_index, r_prime in enumerate(range(r, 1, -1)):
        live_edges = [e for e in H.edges if all(v in live for v in e)]
        assert len(live_edges) <= c * Fraction(r_prime) ** n, "peel invariant broken"
        if not live_edges:
            break
        deg = {v: 0 for v in live}
        for e in live_edges:
            for v in e:
                deg[v] += 1
        threshold = c * n * Fraction(r_prime) ** (n - 1)
        heavy = max(live, key=lambda v: (deg[v], -v))
        if deg[heavy] >= threshold:
            chosen = (heavy,)
            branch = "high-degree"
        else:
            sub, back = induced(H, live)
            inner = RandomizedRunConfig(
                config.seed + 10007 * round_index, config.max_restarts
            )
            result = weighted_independent_set(sub, inner)
            chosen = tuple(back[v] for v in result.vertices)
            branch = "sampler"
        for v in chosen:
            colors[v] = r_prime
        live.difference_update(chosen)
        rounds.append((r_prime, branch, len(chosen)))
    remaining_edges = [e for e in H.edges if all(v in live for v in e)]
    assert not remaining_edges, "peel left edges for the final color"
    for v in live:
        colors[v] = 1
    coloring = Coloring(tuple(colors), r)
    ok, _ = is_proper(H, coloring)
    assert ok, "peel produced an improper coloring"
    return PeelResult(coloring, tuple(rounds))
