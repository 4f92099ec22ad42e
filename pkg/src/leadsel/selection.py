"""Optimal leader selection.

Four routes to the same question "which m nodes should lead":

* exhaustive_select  - enumerate all m-subsets, objective from joint
  centrality (noise-free; gain for m <= 2) or the trace oracle (gain, m > 2);
* oracle_select      - same enumeration, objective always from the dense
  trace oracle (the slow, trusted route);
* greedy_select      - grow the set one node at a time by exact oracle
  improvement (a baseline; provably suboptimal on some cycles);
* closed forms       - uniform placements on cycles, antipodal pairs on even
  cycles, and the two-leader rounding formula on paths.

Ties within a relative tolerance are enumerated, not broken: symmetric
graphs have orbit-sized optimal families and hiding them would make the
results unverifiable.
"""

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import graphs
from .graphs import Gain, Graph, GraphError, LeaderSet, NOISE_FREE, NoiseFree
from .joint import joint_centrality, joint_centrality_two_gain, single_leader_error
from .kernels import compute_kernels, oracle_error_gain, oracle_error_noise_free

TIE_TOL = 1e-9
DEFAULT_BUDGET = 10_000_000
_CHUNK = 4096


class BudgetError(RuntimeError):
    """The requested enumeration exceeds the evaluation budget."""


class ClosedFormError(GraphError):
    """The closed-form solution does not apply to the requested instance."""


@dataclass(frozen=True)
class Objective:
    rho: float
    total_error: float


@dataclass(frozen=True)
class SelectionResult:
    optimal_sets: tuple
    objective: Objective
    method: str
    evaluated_count: int
    m: int
    notes: tuple = field(default=())


def worker_count(threads=None) -> int:
    """Resolve a thread count: explicit arg, else LEADSEL_THREADS, else cores."""
    if threads is None:
        env = os.environ.get("LEADSEL_THREADS")
        if env is not None:
            threads = int(env)
        else:
            threads = os.cpu_count() or 1
    return max(1, int(threads))


def _mode_error_fn(g, mode, m, sigma, kernels):
    """Per-set total-error callable for the exhaustive objective."""
    if isinstance(mode, NoiseFree):
        if m == 1:
            return lambda s: single_leader_error(kernels, s[0], mode, sigma)
        return lambda s: joint_centrality(kernels, s, sigma=sigma).implied_total_error
    if isinstance(mode, Gain):
        if m == 1:
            return lambda s: single_leader_error(kernels, s[0], mode, sigma)
        if m == 2:
            return lambda s: joint_centrality_two_gain(
                kernels, s[0], s[1], mode.k, sigma
            ).implied_total_error
        return lambda s: oracle_error_gain(g, LeaderSet(s, mode), sigma).total_error
    raise GraphError(f"mode must be NoiseFree or Gain, got {mode!r}")


def _oracle_error_fn(g, mode, sigma):
    if isinstance(mode, NoiseFree):
        return lambda s: oracle_error_noise_free(g, LeaderSet(s, mode), sigma).total_error
    if isinstance(mode, Gain):
        return lambda s: oracle_error_gain(g, LeaderSet(s, mode), sigma).total_error
    raise GraphError(f"mode must be NoiseFree or Gain, got {mode!r}")


def _chunked(iterable, size):
    it = iter(iterable)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def _scan_chunk(chunk, error_fn):
    """Best error in a chunk plus every candidate within a safety margin."""
    best = math.inf
    near = []
    for s in chunk:
        err = error_fn(s)
        if err < best:
            best = err
            near = [(ss, ee) for ss, ee in near if ee <= best * (1.0 + 10.0 * TIE_TOL)]
        if err <= best * (1.0 + 10.0 * TIE_TOL):
            near.append((s, err))
    return best, near


def _search(g, m, error_fn, method, *, budget, threads, sigma, notes=()):
    if not 1 <= m < g.n:
        raise GraphError(f"need 1 <= m < n, got m={m}, n={g.n}")
    count = math.comb(g.n, m)
    if count > budget:
        raise BudgetError(
            f"C({g.n}, {m}) = {count} subsets exceeds the budget of {budget}; "
            "consider greedy_select"
        )
    combos = itertools.combinations(range(g.n), m)
    workers = worker_count(threads)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _scan_chunk(c, error_fn), _chunked(combos, _CHUNK)))
    else:
        results = [_scan_chunk(c, error_fn) for c in _chunked(combos, _CHUNK)]
    best = min(r[0] for r in results)
    ties = sorted(
        s for _, near in results for s, e in near if e <= best * (1.0 + TIE_TOL)
    )
    best = float(best)
    rho = g.n * sigma * sigma / (2.0 * best)
    return SelectionResult(
        optimal_sets=tuple(ties),
        objective=Objective(rho=rho, total_error=best),
        method=method,
        evaluated_count=count,
        m=m,
        notes=tuple(notes),
    )


def exhaustive_select(
    g: Graph,
    m: int,
    mode=NOISE_FREE,
    *,
    sigma: float = 1.0,
    budget: int = DEFAULT_BUDGET,
    threads=1,
    kernels=None,
) -> SelectionResult:
    """All argmin-error (equivalently argmax-rho) m-subsets by enumeration."""
    if kernels is None:
        kernels = compute_kernels(g)
    error_fn = _mode_error_fn(g, mode, m, sigma, kernels)
    return _search(g, m, error_fn, "exhaustive", budget=budget, threads=threads, sigma=sigma)


def oracle_select(
    g: Graph,
    m: int,
    mode=NOISE_FREE,
    *,
    sigma: float = 1.0,
    budget: int = DEFAULT_BUDGET,
    threads=1,
) -> SelectionResult:
    """Enumeration with the dense trace oracle as the objective."""
    return _search(
        g, m, _oracle_error_fn(g, mode, sigma), "oracle", budget=budget, threads=threads, sigma=sigma
    )


def greedy_select(g: Graph, m: int, mode=NOISE_FREE, *, sigma: float = 1.0) -> SelectionResult:
    """Grow the leader set one node at a time by exact oracle improvement.

    The first step picks the node of maximal information centrality; ties are
    broken toward the lowest node id. Matches the optimum on cycles only when
    m is a power of two.
    """
    if not 1 <= m < g.n:
        raise GraphError(f"need 1 <= m < n, got m={m}, n={g.n}")
    error_fn = _oracle_error_fn(g, mode, sigma)
    current = []
    evaluated = 0
    err = math.inf
    for _ in range(m):
        scores = []
        for v in range(g.n):
            if v in current:
                continue
            scores.append((error_fn(tuple(current + [v])), v))
            evaluated += 1
        best = min(e for e, _ in scores)
        pick = min(v for e, v in scores if e <= best * (1.0 + TIE_TOL))
        current.append(pick)
        err = float(best)
    final = tuple(sorted(current))
    return SelectionResult(
        optimal_sets=(final,),
        objective=Objective(rho=g.n * sigma * sigma / (2.0 * err), total_error=err),
        method="greedy",
        evaluated_count=evaluated,
        m=m,
    )


def closed_form_cycle(n: int, m: int, *, sigma: float = 1.0) -> SelectionResult:
    """Optimal m noise-free leaders on a cycle: uniform spacing p = n/m.

    Only defined when n/m is an integer. Returns the canonical placement
    {0, p, 2p, ...}; every rotation of it ties, as noted on the result.
    """
    if m < 1 or m >= n:
        raise GraphError(f"need 1 <= m < n, got m={m}, n={n}")
    if n % m != 0:
        raise ClosedFormError(
            f"uniform placement needs integer spacing: n={n} not divisible by m={m}"
        )
    p = n // m
    canonical = tuple(range(0, n, p))
    err = oracle_error_noise_free(graphs.cycle(n), LeaderSet(canonical), sigma).total_error
    return SelectionResult(
        optimal_sets=(canonical,),
        objective=Objective(rho=n * sigma * sigma / (2.0 * err), total_error=err),
        method="closed-form-cycle",
        evaluated_count=1,
        m=m,
        notes=(f"all {p} rotations of the uniform placement are exact ties",),
    )


def closed_form_cycle_two(n: int, mode=NOISE_FREE, *, sigma: float = 1.0) -> SelectionResult:
    """Optimal two leaders on an even cycle: any antipodal pair.

    Holds for noise-free and for any finite-gain leaders; all n/2 antipodal
    pairs are returned as ties.
    """
    if n < 4 or n % 2 != 0:
        raise ClosedFormError(f"antipodal pairs need an even cycle with n >= 4, got n={n}")
    half = n // 2
    pairs = tuple((i, i + half) for i in range(half))
    g = graphs.cycle(n)
    if isinstance(mode, NoiseFree):
        err = oracle_error_noise_free(g, LeaderSet(pairs[0], mode), sigma).total_error
    else:
        err = oracle_error_gain(g, LeaderSet(pairs[0], mode), sigma).total_error
    return SelectionResult(
        optimal_sets=pairs,
        objective=Objective(rho=n * sigma * sigma / (2.0 * err), total_error=err),
        method="closed-form-cycle-two",
        evaluated_count=1,
        m=2,
        notes=("every antipodal pair has maximal resistance distance n/4",),
    )


def _round_half_away(x: float) -> int:
    return math.floor(x + 0.5)


def closed_form_path_two(n: int, *, sigma: float = 1.0) -> SelectionResult:
    """Optimal two noise-free leaders on a path by the rounding formula.

    In 1-indexed coordinates s1 = rnd(n/5 + 1/2), s2 = rnd(4n/5 + 1/2) with
    rounding half away from zero; returned 0-indexed. The mirror image of the
    pair is an exact tie whenever it is distinct (this happens when n is a
    multiple of 5 and the formula lands on a half-integer).
    """
    if n < 3:
        raise ClosedFormError(f"two leaders on a path need n >= 3, got n={n}")
    s1 = _round_half_away(n / 5 + 0.5)
    s2 = _round_half_away(4 * n / 5 + 0.5)
    pair = (s1 - 1, s2 - 1)
    mirror = tuple(sorted((n - s2, n - s1)))
    sets = tuple(sorted({pair, mirror}))
    err = oracle_error_noise_free(graphs.path(n), LeaderSet(pair), sigma).total_error
    notes = ()
    if mirror != pair:
        notes = ("rounding tie: the mirror pair is equally optimal",)
    return SelectionResult(
        optimal_sets=sets,
        objective=Objective(rho=n * sigma * sigma / (2.0 * err), total_error=err),
        method="closed-form-path-two",
        evaluated_count=1,
        m=2,
        notes=notes,
    )


@dataclass(frozen=True)
class PairSweep:
    """Two-leader joint centrality for a collection of node pairs."""

    n: int
    pairs: tuple
    rho: np.ndarray

    def matrix(self) -> np.ndarray:
        """Upper-triangular n x n table; unswept entries are NaN, diagonal 0."""
        out = np.full((self.n, self.n), np.nan)
        np.fill_diagonal(out, 0.0)
        for (i, j), r in zip(self.pairs, self.rho):
            out[i, j] = r
        return out

    def histogram(self, bins: int = 10):
        """(counts, bin_edges) of the rho values.

        A degenerate (single-valued) distribution gets a padded range so the
        histogram still has well-formed bins with one of them occupied.
        """
        span = float(np.ptp(self.rho))
        if span <= abs(float(self.rho.max())) * 1e-12:
            center = float(self.rho.mean())
            pad = max(abs(center), 1.0) * 1e-6
            return np.histogram(self.rho, bins=bins, range=(center - pad, center + pad))
        return np.histogram(self.rho, bins=bins)

    def argmax_pairs(self, tie_tol: float = TIE_TOL):
        top = self.rho.max()
        return [p for p, r in zip(self.pairs, self.rho) if r >= top * (1.0 - tie_tol)]


def pairwise_sweep(g: Graph, pairs=None, *, budget: int = DEFAULT_BUDGET, kernels=None) -> PairSweep:
    """Two-leader joint centrality for every pair (or a given pair list).

    Vectorised over the whole L+ / (L^2)+ tables; errors out when the number
    of pairs exceeds the evaluation budget.
    """
    if kernels is None:
        kernels = compute_kernels(g)
    n = g.n
    if pairs is None:
        if math.comb(n, 2) > budget:
            raise BudgetError(f"C({n}, 2) = {math.comb(n, 2)} pairs exceeds budget {budget}")
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    else:
        pairs = [tuple(sorted((int(i), int(j)))) for i, j in pairs]
        if len(pairs) > budget:
            raise BudgetError(f"{len(pairs)} pairs exceeds budget {budget}")
        for i, j in pairs:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"invalid node pair ({i}, {j})")
    lp = kernels.lplus
    l2p = kernels.l2plus
    d = np.diag(lp)
    d2 = np.diag(l2p)
    ii = np.array([p[0] for p in pairs])
    jj = np.array([p[1] for p in pairs])
    r = d[ii] + d[jj] - 2.0 * lp[ii, jj]
    gamma = d2[ii] + d2[jj] - 2.0 * l2p[ii, jj]
    minor = d[ii] * d[jj] - lp[ii, jj] ** 2
    n_over_rho = kernels.kirchhoff / n + (n * minor - gamma) / r
    return PairSweep(n=n, pairs=tuple(pairs), rho=n / n_over_rho)


def tridiagonal_chain_trace(w: int) -> float:
    """Trace of the inverse of the w x w tridiagonal (-1, 2, -1) matrix.

    Closed form w (w + 2) / 6; this is the error contribution of a chain of w
    followers strung between two pinned leaders on a cycle.
    """
    if w < 1:
        raise ValueError(f"chain length must be positive, got {w}")
    return w * (w + 2) / 6
