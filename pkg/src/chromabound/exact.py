"""Exact reference computations: solver, enumerators, oracles.

Everything in this module is written for correctness and independence,
not speed. The backtracking solver decides r-colorability outright on
small instances. The enumerators spell out their definitions literally
(all vertex orders, all subsets, all edge sequences) so the clever
implementations elsewhere in the package can be tested against them
without sharing a line of logic.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .core import Coloring, Hypergraph, degrees
from .errors import BudgetExceededError


@dataclass(frozen=True)
class SolveBudget:
    """Caps on the backtracking search; None means unlimited."""

    max_nodes: int | None = None
    max_millis: float | None = None


@dataclass(frozen=True)
class SolveOutcome:
    """status is 'yes', 'no', or 'budget_exceeded'."""

    status: str
    coloring: Coloring | None
    nodes: int
    millis: float


class _BudgetStop(Exception):
    pass


def solve_coloring(H, r, budget=None):
    """Decide whether H has a proper r-coloring by backtracking.

    Vertices are colored in index order. Each edge is checked exactly
    once, at the moment its largest vertex receives a color. Color
    symmetry is broken by allowing vertex v only colors up to one past
    the number of colors already in use.
    """
    if r < 1:
        raise ValueError("palette size must be >= 1")
    budget = budget or SolveBudget()
    start = time.perf_counter()
    V = H.num_vertices

    closing = [[] for _ in range(V)]
    for e in H.edges:
        closing[e[-1]].append(e)

    colors = [0] * V
    state = {"nodes": 0}

    def out_of_budget():
        if budget.max_nodes is not None and state["nodes"] > budget.max_nodes:
            return True
        if budget.max_millis is not None:
            if (time.perf_counter() - start) * 1000.0 > budget.max_millis:
                return True
        return False

    def place(v, used):
        state["nodes"] += 1
        if out_of_budget():
            raise _BudgetStop()
        if v == V:
            return True
        limit = min(r, used + 1)
        for c in range(1, limit + 1):
            colors[v] = c
            ok = True
            for e in closing[v]:
                if all(colors[u] == c for u in e):
                    ok = False
                    break
            if ok and place(v + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    try:
        found = place(0, 0)
    except _BudgetStop:
        millis = (time.perf_counter() - start) * 1000.0
        return SolveOutcome("budget_exceeded", None, state["nodes"], millis)
    millis = (time.perf_counter() - start) * 1000.0
    if found:
        return SolveOutcome("yes", Coloring(tuple(colors), r), state["nodes"], millis)
    return SolveOutcome("no", None, state["nodes"], millis)


def is_r_colorable(H, r, budget=None):
    """Boolean wrapper; raises BudgetExceededError instead of guessing."""
    outcome = solve_coloring(H, r, budget)
    if outcome.status == "budget_exceeded":
        raise BudgetExceededError(
            f"undecided after {outcome.nodes} nodes / {outcome.millis:.0f} ms"
        )
    return outcome.status == "yes"


def chromatic_number(H, budget=None, r_max=None):
    """Smallest palette size admitting a proper coloring.

    With no edges the answer is 1. r_max bounds the search; running past
    it raises, since every instance is num_vertices-colorable anyway.
    """
    if H.num_edges == 0:
        return 1
    cap = r_max if r_max is not None else max(1, H.num_vertices)
    for r in range(1, cap + 1):
        if is_r_colorable(H, r, budget):
            return r
    raise ValueError(f"no proper coloring with palette up to {cap}")


def _is_chain_under_positions(H, pos, edge_indices):
    """Literal transcription of the ordered-chain conditions.

    Consecutive edges share exactly one vertex, non-consecutive edges
    are disjoint, and every vertex of an earlier edge precedes every
    vertex of a later edge in the given order.
    """
    r = len(edge_indices)
    sets = [frozenset(H.edges[i]) for i in edge_indices]
    for i in range(r):
        for j in range(i + 1, r):
            common = sets[i] & sets[j]
            if j == i + 1:
                if len(common) != 1:
                    return False
            elif common:
                return False
    for i in range(r):
        for j in range(i + 1, r):
            hi = max(pos[v] for v in sets[i])
            lo = min(pos[v] for v in sets[j])
            if not hi <= lo:
                return False
    return True


def enumerate_ordered_chains(H, order, r):
    """Every sequence of r edge indices forming an ordered chain.

    Exhaustive extension search: grow sequences one edge at a time,
    keeping a prefix only if the complete pairwise definition holds for
    it. Dropping a suffix never breaks any chain condition, so every
    chain's prefixes are chains and the search misses nothing. The
    referee the fast implementations are measured against.
    """
    if r < 1:
        return []
    pos = order.positions()
    found = []

    def grow(seq):
        if len(seq) == r:
            found.append(tuple(seq))
            return
        for j in range(H.num_edges):
            if j in seq:
                continue
            seq.append(j)
            if _is_chain_under_positions(H, pos, seq):
                grow(seq)
            seq.pop()

    grow([])
    return found


def longest_chain_by_enumeration(H, order):
    """Longest ordered chain length, by the same exhaustive extension."""
    pos = order.positions()
    best = 0

    def grow(seq):
        nonlocal best
        best = max(best, len(seq))
        for j in range(H.num_edges):
            if j in seq:
                continue
            seq.append(j)
            if _is_chain_under_positions(H, pos, seq):
                grow(seq)
            seq.pop()

    grow([])
    return best


def ordered_probability_by_enumeration(H, edge_indices):
    """Fraction of vertex orders under which edge_indices is a chain.

    Counts all num_vertices! permutations, so only viable for tiny
    instances; returns a (hits, total) pair of exact integers.
    """
    total = factorial(H.num_vertices)
    hits = 0
    for perm in itertools.permutations(range(H.num_vertices)):
        pos = [0] * H.num_vertices
        for rank, v in enumerate(perm):
            pos[v] = rank
        if _is_chain_under_positions(H, pos, edge_indices):
            hits += 1
    return hits, total


def max_degree_sum_independent_set(H, max_live_vertices=24):
    """Exact maximum of sum-of-degrees over independent (edge-free) sets.

    Vectorized subset enumeration over the non-isolated vertices:
    isolated vertices join every optimum for free, so only vertices with
    positive degree need enumerating. Bitmask chunks keep peak memory
    flat. Guarded to 2^24 subsets.
    """
    deg = degrees(H)
    live = [v for v in range(H.num_vertices) if deg[v] > 0]
    k = len(live)
    if k > max_live_vertices:
        raise ValueError(f"{k} non-isolated vertices exceeds the enumeration guard")
    if k == 0:
        return 0, tuple(range(H.num_vertices))
    slot = {v: i for i, v in enumerate(live)}
    edge_masks = np.array(
        [sum(1 << slot[v] for v in e) for e in H.edges], dtype=np.int64
    )
    weights = np.array([deg[v] for v in live], dtype=np.int64)

    best_val = -1
    best_mask = 0
    chunk = 1 << 20
    for start in range(0, 1 << k, chunk):
        masks = np.arange(start, min(start + chunk, 1 << k), dtype=np.int64)
        ok = np.ones(len(masks), dtype=bool)
        for em in edge_masks:
            ok &= (masks & em) != em
        if not ok.any():
            continue
        cand = masks[ok]
        vals = np.zeros(len(cand), dtype=np.int64)
        for i in range(k):
            vals += weights[i] * ((cand >> i) & 1)
        j = int(np.argmax(vals))
        if int(vals[j]) > best_val:
            best_val = int(vals[j])
            best_mask = int(cand[j])

    picked = [live[i] for i in range(k) if (best_mask >> i) & 1]
    picked += [v for v in range(H.num_vertices) if deg[v] == 0]
    return best_val, tuple(sorted(picked))
