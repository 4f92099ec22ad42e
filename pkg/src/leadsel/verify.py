"""Identity checks: joint-centrality-implied error against the trace oracles.

For every leader set up to a size cap, the error implied by rho
((sigma^2/2) * n / rho) must match the grounded-Laplacian oracle; for every
pair and each gain k, the error implied by the gain-dependent rho must match
the dense (L + K)^-1 trace. These are two genuinely independent computation
routes, so agreement is strong evidence of correctness.
"""

import itertools
from dataclasses import dataclass

from .graphs import Gain, Graph, LeaderSet, NOISE_FREE
from .joint import joint_centrality, joint_centrality_two_gain
from .kernels import compute_kernels, oracle_error_gain, oracle_error_noise_free
from .suites import connected_graph_atlas, random_connected_graphs

DEFAULT_K_VALUES = (0.1, 1.0, 10.0, 100.0)
DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class IdentityViolation:
    graph_label: str
    members: tuple
    k: float | None
    rel_dev: float


@dataclass(frozen=True)
class VerifyReport:
    max_rel_dev_noise_free: float
    max_rel_dev_gain: float
    checks: int
    violations: tuple
    tolerance: float

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_graph(
    g: Graph,
    *,
    label: str = "graph",
    m_max: int = 3,
    k_values=DEFAULT_K_VALUES,
    tol: float = DEFAULT_TOL,
    sigma: float = 1.0,
) -> VerifyReport:
    """Check both identities on every leader set of g with m <= m_max."""
    kernels = compute_kernels(g)
    worst_nf = 0.0
    worst_gain = 0.0
    checks = 0
    violations = []
    for m in range(1, min(m_max, g.n - 1) + 1):
        for members in itertools.combinations(range(g.n), m):
            implied = joint_centrality(kernels, members, sigma=sigma).implied_total_error
            oracle = oracle_error_noise_free(g, LeaderSet(members, NOISE_FREE), sigma).total_error
            dev = abs(implied - oracle) / oracle
            worst_nf = max(worst_nf, dev)
            checks += 1
            if dev > tol:
                violations.append(IdentityViolation(label, members, None, dev))
    if g.n >= 3:
        for s1, s2 in itertools.combinations(range(g.n), 2):
            for k in k_values:
                implied = joint_centrality_two_gain(kernels, s1, s2, k, sigma).implied_total_error
                oracle = oracle_error_gain(g, LeaderSet((s1, s2), Gain(k)), sigma).total_error
                dev = abs(implied - oracle) / oracle
                worst_gain = max(worst_gain, dev)
                checks += 1
                if dev > tol:
                    violations.append(IdentityViolation(label, (s1, s2), k, dev))
    return VerifyReport(worst_nf, worst_gain, checks, tuple(violations), tol)


def _merge(reports, tol):
    return VerifyReport(
        max_rel_dev_noise_free=max((r.max_rel_dev_noise_free for r in reports), default=0.0),
        max_rel_dev_gain=max((r.max_rel_dev_gain for r in reports), default=0.0),
        checks=sum(r.checks for r in reports),
        violations=tuple(v for r in reports for v in r.violations),
        tolerance=tol,
    )


def verify_small_suite(*, tol: float = DEFAULT_TOL, k_values=DEFAULT_K_VALUES) -> VerifyReport:
    """Every connected graph on 4 and 5 nodes (up to isomorphism)."""
    reports = []
    for n in (4, 5):
        for idx, g in enumerate(connected_graph_atlas(n)):
            reports.append(
                verify_graph(g, label=f"atlas-n{n}-{idx}", tol=tol, k_values=k_values)
            )
    return _merge(reports, tol)


def verify_random_suite(
    count: int = 20,
    n_max: int = 10,
    seed: int = 1,
    *,
    tol: float = DEFAULT_TOL,
    k_values=DEFAULT_K_VALUES,
) -> VerifyReport:
    """A reproducible batch of random connected graphs, half of them weighted."""
    graphs_plain = random_connected_graphs(count - count // 2, 4, n_max, seed)
    graphs_weighted = random_connected_graphs(count // 2, 4, n_max, seed + 1, weighted=True)
    reports = []
    for idx, g in enumerate(graphs_plain + graphs_weighted):
        reports.append(verify_graph(g, label=f"random-{seed}-{idx}", tol=tol, k_values=k_values))
    return _merge(reports, tol)
