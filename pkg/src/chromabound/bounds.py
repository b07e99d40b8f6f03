"""Certified numeric engine for edge-count colorability thresholds.

Everything here revolves around one quantity: m(n, r), the smallest
number of edges an n-uniform hypergraph can have and still not be
r-colorable. Its dual is f(N), the largest chromatic number reachable
with N edges; m(n, r) is the first N with f(N) > r.

``BoundTable`` holds certified integer upper bounds F(N) >= f(N). Three
sources feed it:

* exact small-case values (for 3-uniform instances, F agrees with f up
  to 26 edges; for graphs the whole table is exact);
* the recoloring bound: with a base palette of a colors and r - a in
  reserve, any instance below a^(n-1) (r-a)(n-1) edges is r-colorable,
  so F(N) is at most the first r whose budget exceeds N;
* a splitting recursion: an auxiliary coloring with p classes leaves at
  most floor(N / p^(n-1)) edges unsplit in total, so f(N) is at most the
  largest sum of table values over p budgets with that total. The
  engine evaluates this for every useful p with a threshold knapsack and
  keeps the minimum.

On top of a finished table sits the window argument: lambda = max of
F(a) / a^(1/n) over a window [M, ceil(c_n M)] with
c_n = (1 - 2^(1-n))^(-n) turns the finite table into an asymptotic
certificate m(n, r) >= c r^n with an explicit constant c = lambda^(-n)
and an explicit starting r_0. All certifying comparisons are integer or
rational; floats appear only in report columns.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chains import ordered_chain_probability
from .colorers import alon_edge_limit

# f(N) for 3-uniform instances, exact for N <= 26: one edge forces two
# colors, seven edges (the 7-point plane) force three, and 27 is the
# least edge count that can force four.
_EXACT_TRIPLE_REGION = (1,) + (2,) * 6 + (3,) * 20


def alon_lower_bound(n, r, a=None):
    """Recoloring lower bound on m(n, r); a defaults to floor((n-1)r/n)."""
    return alon_edge_limit(n, r, a)


def best_alon_lower_bound(n, r):
    """The recoloring bound at its best base palette."""
    return max(alon_edge_limit(n, r, a) for a in range(1, r))


def erdos_upper_bound(n, r):
    """Edges of the complete instance on (n-1)r + 1 vertices.

    Any r-coloring of that many vertices puts n of them in one class,
    which is an edge, so m(n, r) is at most this binomial.
    """
    if n < 2 or r < 1:
        raise ValueError("needs n >= 2 and r >= 1")
    return math.comb((n - 1) * r + 1, n)


def closed_form_bounds(n, r):
    """(lower, upper) bracket on m(n, r) from the two closed forms."""
    return alon_lower_bound(n, r), erdos_upper_bound(n, r)


def pluhar_threshold(n, r):
    """Largest edge count where random orders beat the chain census.

    An instance with m edges has fewer than 2 m^r / r! edge sequences
    that can possibly form an ordered r-chain, and each is a chain with
    probability [(n-1)!]^2 [(n-2)!]^(r-2) / ((n-1)r + 1)!. While the
    product stays below one, some order is chain-free and the rank
    colorer succeeds with r colors, so m(n, r) exceeds the threshold.
    """
    p = ordered_chain_probability(n, r)
    lhs_scale = 2 * p.numerator
    rhs = math.factorial(r) * p.denominator

    def chains_expected_below_one(m):
        return lhs_scale * m**r < rhs

    hi = 1
    while chains_expected_below_one(hi):
        hi *= 2
    lo = hi // 2  # invariant: lo passes (or 0), hi fails
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if chains_expected_below_one(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _recoloring_caps(n, limit):
    """Best recoloring budgets for r = 2, 3, ... until one exceeds limit."""
    caps = []
    r = 2
    while True:
        v = best_alon_lower_bound(n, r)
        caps.append(v)
        if v > limit:
            return np.array(caps, dtype=np.int64)
        r += 1


def recoloring_chromatic_cap(n, N):
    """Smallest r certain to color any N-edge instance, by recoloring."""
    if N < 0:
        raise ValueError("edge count must be nonnegative")
    if N == 0:
        return 1
    caps = _recoloring_caps(n, N)
    return int(np.searchsorted(caps, N, side="right")) + 2


@dataclass(frozen=True)
class BoundTable:
    """Certified upper bounds F(N) >= f(N) for N = 0..n_max.

    provenance labels each entry "exact", "closed-form", or "recursion".
    """

    n: int
    F: tuple
    provenance: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("uniformity must be >= 2")
        if not self.F or len(self.F) != len(self.provenance):
            raise ValueError("table and provenance must align and be non-empty")
        if self.F[0] != 1:
            raise ValueError("zero edges are always one-colorable; F(0) must be 1")
        if any(v < 1 for v in self.F):
            raise ValueError("table values must be positive")
        if self.n == 3:
            for N in range(min(len(self.F), 27)):
                if self.F[N] != _EXACT_TRIPLE_REGION[N]:
                    raise ValueError(
                        f"3-uniform table disagrees with the exact value at N={N}"
                    )

    @property
    def n_max(self):
        return len(self.F) - 1


def value_thresholds(table):
    """First edge count at which the table reaches each value.

    Returns {s: N} for every s the (envelope of the) table attains.
    """
    out = {}
    running = 0
    for N, v in enumerate(table.F):
        if v > running:
            for s in range(running + 1, v + 1):
                out[s] = N
            running = v
    return out


def table_m_lower_bound(table, r):
    """Certified m(n, r) lower bound read off the table, or None.

    The first N with F(N) >= r + 1 bounds m(n, r) from below, since all
    earlier N have f(N) <= F(N) <= r. None means the table never reaches
    r + 1, so it certifies nothing at this r.
    """
    if r < 1:
        raise ValueError("palette size must be >= 1")
    for N, v in enumerate(table.F):
        if v >= r + 1:
            return N
    return None


def check_table_soundness(table):
    """Audit a table against everything cheaply recomputable.

    Returns a list of violation strings, empty when the audit passes.
    """
    problems = []
    F = table.F
    for N in range(1, len(F)):
        if F[N] < F[N - 1]:
            problems.append(f"table decreases between N={N - 1} and N={N}")
    if table.n == 2:
        for N, v in enumerate(F):
            k = 1
            while (k + 1) * k // 2 <= N:
                k += 1
            if v != k:
                problems.append(f"graph table wrong at N={N}: {v} instead of {k}")
    if table.n >= 3 and len(F) > 1:
        caps = _recoloring_caps(table.n, len(F) - 1)
        for N in range(1, len(F)):
            cap = int(np.searchsorted(caps, N, side="right")) + 2
            if F[N] > cap:
                problems.append(
                    f"entry at N={N} is {F[N]}, looser than the recoloring cap {cap}"
                )
    return problems


def seed_table(n, n_max):
    """Starter table from exact values and the recoloring caps alone."""
    if n < 2:
        raise ValueError("uniformity must be >= 2")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n == 2:
        F = []
        for N in range(n_max + 1):
            k = 1
            while (k + 1) * k // 2 <= N:
                k += 1
            F.append(k)
        return BoundTable(2, tuple(F), ("exact",) * (n_max + 1))
    F = [1]
    provenance = ["exact"]
    if n == 3:
        exact_end = min(n_max, 26)
        F = list(_EXACT_TRIPLE_REGION[: exact_end + 1])
        provenance = ["exact"] * (exact_end + 1)
    if n_max >= len(F):
        caps = _recoloring_caps(n, n_max)
        rest = np.arange(len(F), n_max + 1, dtype=np.int64)
        vals = np.searchsorted(caps, rest, side="right") + 2
        F.extend(int(v) for v in vals)
        provenance.extend(["closed-form"] * len(rest))
    return BoundTable(n, tuple(F), tuple(provenance))


def max_composition_bound(table, p, budget):
    """Reference evaluation of the splitting payload: the largest sum of
    p envelope values whose budgets total at most the given budget.

    Quadratic in the budget; meant for verification, not for the fast
    extension path.
    """
    if p < 1:
        raise ValueError("needs at least one part")
    if not 0 <= budget <= table.n_max:
        raise ValueError("budget must lie inside the table")
    env = []
    running = 0
    for v in table.F[: budget + 1]:
        running = max(running, v)
        env.append(running)
    best = list(env)
    for _ in range(2, p + 1):
        nxt = [0] * (budget + 1)
        for b in range(budget + 1):
            nxt[b] = max(best[b - a] + env[a] for a in range(b + 1))
        best = nxt
    return best[budget]


def extend_table(table, new_n_max):
    """Grow a table to new_n_max with the splitting recursion.

    Entries appear in geometric blocks: values through T certify every
    N up to (T+1) 2^(n-1) - 1, because the p = 2 budget floor(N / 2^(n-1))
    then stays inside the known range. Within a block, each p's
    contribution is a step function of N recovered from a minimal-budget
    knapsack over the envelope's value thresholds, and the entry is the
    minimum over p and the recoloring cap. A final monotone repair pass
    is sound because f never decreases (it is a no-op on canonical
    tables).
    """
    if table.n == 2:
        raise ValueError("graph tables are exact at every size; build a longer seed")
    if new_n_max <= table.n_max:
        return table
    n = table.n
    F = list(table.F)
    provenance = list(table.provenance)
    P2 = 2 ** (n - 1)
    caps = _recoloring_caps(n, new_n_max)

    while len(F) - 1 < new_n_max:
        T = len(F) - 1
        target = min(new_n_max, (T + 1) * P2 - 1)
        block = np.arange(T + 1, target + 1, dtype=np.int64)
        best = np.searchsorted(caps, block, side="right").astype(np.int64) + 2

        env = np.maximum.accumulate(np.array(F, dtype=np.int64))
        vmax = int(env[-1])
        # t[s-1] = least budget whose envelope value reaches s
        thresholds = np.searchsorted(env, np.arange(1, vmax + 1), side="left")

        # D[s] = least total budget with which p parts can claim total
        # value s (a part may claim anything up to its envelope value;
        # claiming v costs thresholds[v-1], claiming 0 is free).
        INF = 1 << 60
        D = np.zeros(vmax + 1, dtype=np.int64)
        D[1:] = thresholds
        p = 2
        while True:
            P = p ** (n - 1)
            size = p * vmax + 1
            cur = np.full(size, INF, dtype=np.int64)
            cur[: len(D)] = D
            for v in range(1, vmax + 1):
                cost = int(thresholds[v - 1])
                hi = min(size - 1, len(D) - 1 + v)
                np.minimum(
                    cur[v : hi + 1], D[: hi - v + 1] + cost, out=cur[v : hi + 1]
                )
            budgets = block // P
            cand = np.searchsorted(cur, budgets, side="right") - 1
            np.minimum(best, cand, out=best)
            D = cur
            if P > target:
                break
            p += 1

        F.extend(int(v) for v in best)
        provenance.extend(["recursion"] * len(block))

    for N in range(len(F) - 1, 0, -1):
        if F[N] < F[N - 1]:
            F[N - 1] = F[N]
    return BoundTable(n, tuple(F), tuple(provenance))


def build_table(n, n_max):
    """Canonical pipeline: seed the small range, then run the recursion."""
    if n == 2:
        return seed_table(2, n_max)
    seed_end = 26 if n == 3 else 31
    seed = seed_table(n, min(seed_end, n_max))
    if n_max > seed.n_max:
        return extend_table(seed, n_max)
    return seed


@dataclass(frozen=True)
class WindowConstant:
    """Asymptotic certificate m(n, r) >= c_lower r^n for all r >= r0.

    Derived from one finite window of the table: lam is the largest
    F(a) / a^(1/n) over a in [M, window_end] (attained at best_a with
    value best_value), c_lower its exact inverse n-th power, and r0 the
    first palette size whose claimed region starts inside the window.
    """

    n: int
    M: int
    window_end: int
    c_n: Fraction
    best_a: int
    best_value: int
    c_lower: Fraction
    lam: float
    r0: int

    def m_lower(self, r):
        if r < self.r0:
            raise ValueError(f"certified only for palettes >= {self.r0}")
        return math.floor(self.c_lower * r**self.n) + 1


def window_constant(table, M):
    """Evaluate the window argument at one window start M."""
    n = table.n
    if n == 2:
        raise ValueError("the window argument needs uniformity >= 3")
    if M < 1:
        raise ValueError("window start must be >= 1")
    c_n = Fraction(2 ** (n - 1), 2 ** (n - 1) - 1) ** n
    window_end = math.ceil(c_n * M)
    if window_end > table.n_max:
        raise ValueError(
            f"window [{M}, {window_end}] needs a table through {window_end}, "
            f"have {table.n_max}"
        )
    best_a, best_v = M, table.F[M]
    for a in range(M + 1, window_end + 1):
        v = table.F[a]
        if v**n * best_a > best_v**n * a:
            best_a, best_v = a, v
    c_lower = Fraction(best_a, best_v**n)
    lam = best_v / best_a ** (1.0 / n)
    r0 = 1
    while r0**n * best_a < best_v**n * M:
        r0 += 1
    return WindowConstant(n, M, window_end, c_n, best_a, best_v, c_lower, lam, r0)


def scan_window_constant(table, m_range=None):
    """Best window constant over all feasible window starts.

    Inside any window the maximizer of F(a)^n / a sits either at the
    window start or where the (non-decreasing) table steps up, so only
    those positions are compared; the winning M is then re-evaluated in
    full. Ties go to the smallest M.
    """
    n = table.n
    if n == 2:
        raise ValueError("the window argument needs uniformity >= 3")
    F = table.F
    for N in range(1, len(F)):
        if F[N] < F[N - 1]:
            raise ValueError("scan requires a non-decreasing table")
    c_n = Fraction(2 ** (n - 1), 2 ** (n - 1) - 1) ** n
    if m_range is None:
        m_hi = (table.n_max * c_n.denominator) // c_n.numerator
        while m_hi >= 1 and math.ceil(c_n * m_hi) > table.n_max:
            m_hi -= 1
        if m_hi < 1:
            raise ValueError("table too short for any window")
        m_range = range(1, m_hi + 1)
    jumps = [N for N in range(1, len(F)) if F[N] > F[N - 1]]
    best_M = None
    best_c = None
    for M in m_range:
        if M < 1:
            raise ValueError("window start must be >= 1")
        end = math.ceil(c_n * M)
        if end > table.n_max:
            continue
        a_star, v_star = M, F[M]
        lo = bisect.bisect_right(jumps, M)
        hi = bisect.bisect_right(jumps, end)
        for a in jumps[lo:hi]:
            v = F[a]
            if v**n * a_star > v_star**n * a:
                a_star, v_star = a, v
        c_lower = Fraction(a_star, v_star**n)
        if best_c is None or c_lower > best_c:
            best_M, best_c = M, c_lower
    if best_M is None:
        raise ValueError("no feasible window start in the given range")
    return window_constant(table, best_M)


def bound_report(n, n_max, r_max=10, M=None):
    """JSON-ready comparison of every bound the package can certify.

    Builds the canonical table, runs the window argument (scanning for
    the best window unless M pins one), and tabulates per-palette lower
    bounds next to the complete-instance upper bound. The headline
    lower bound for each palette is the best certified one.
    """
    if n < 3:
        raise ValueError("reports need uniformity >= 3")
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    table = build_table(n, n_max)
    window = window_constant(table, M) if M is not None else scan_window_constant(table)
    rows = []
    for r in range(2, r_max + 1):
        alon = alon_lower_bound(n, r)
        pluhar = pluhar_threshold(n, r) + 1
        table_lb = table_m_lower_bound(table, r)
        window_lb = window.m_lower(r) if r >= window.r0 else None
        candidates = [alon, pluhar]
        if table_lb is not None:
            candidates.append(table_lb)
        if window_lb is not None:
            candidates.append(window_lb)
        rows.append(
            {
                "r": r,
                "recoloring_lb": alon,
                "chain_lb": pluhar,
                "table_lb": table_lb,
                "window_lb": window_lb,
                "best_lb": max(candidates),
                "complete_ub": erdos_upper_bound(n, r),
            }
        )
    return {
        "n": n,
        "n_max": n_max,
        "window": {
            "M": window.M,
            "window_end": window.window_end,
            "best_a": window.best_a,
            "best_value": window.best_value,
            "c_lower": f"{window.c_lower.numerator}/{window.c_lower.denominator}",
            "c_lower_float": float(window.c_lower),
            "lambda": window.lam,
            "r0": window.r0,
        },
        "rows": rows,
    }
