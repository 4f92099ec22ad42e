"""Joint centrality of a node set and its specializations.

The joint centrality rho of a leader set S is defined so that the total
steady-state tracking error with noise-free leaders equals
(sigma^2 / 2) * (n / rho). It is assembled from entries of L+ relative to a
pivot member l1 of S: a grounded Gram matrix G over S \\ {l1}, the principal
submatrix L+_S, and biharmonic-distance couplings between the pivot and the
rest of the set.

rho is computed from the explicit double sum over all n nodes (the grounded
expansion); the equivalent compact matrix form
    n / rho = K_f/n + n det(G) det(L+_S) + Tr(Q)/2 - 1^T Q e_l1,
with Q = Gbar * Gamma_S, is evaluated alongside and reported in ``terms``.
Both routes agree to rounding; tests enforce it.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .graphs import Gain, GraphError, NoiseFree
from .kernels import GraphKernels

log = logging.getLogger(__name__)

# |det| below this fraction of its Hadamard bound marks a suspect product
_DET_WARN = 1e-12


class NumericalDegeneracyError(RuntimeError):
    """A matrix that is nonsingular in exact arithmetic degenerated numerically."""


@dataclass(frozen=True)
class JointCentralityResult:
    """Joint centrality rho plus the intermediate terms of its compact form."""

    rho: float
    implied_total_error: float
    terms: dict
    pivot_used: int
    warnings: tuple = ()


def n_inverse_entries(kernels: GraphKernels, pivot: int) -> np.ndarray:
    """Pivot-grounded Gram matrix of L+.

    Entry (i, j) = L+[i, j] - L+[i, l1] - L+[j, l1] + L+[l1, l1], equivalently
    (r[i, l1] + r[j, l1] - r[i, j]) / 2. The diagonal holds resistance
    distances to the pivot; the pivot row and column are identically zero.
    """
    lp = kernels.lplus
    col = lp[:, pivot]
    return lp - col[:, None] - col[None, :] + lp[pivot, pivot]


def _validate_members(kernels, members):
    members = tuple(int(v) for v in members)
    if len(set(members)) != len(members):
        raise GraphError(f"leader set {members} has repeated nodes")
    if any(not 0 <= v < kernels.n for v in members):
        raise GraphError(f"leader set {members} outside node range 0..{kernels.n - 1}")
    if not 1 <= len(members) < kernels.n:
        raise GraphError(f"need 1 <= m < n, got m={len(members)}, n={kernels.n}")
    return members


def joint_centrality(kernels: GraphKernels, members, pivot=None, sigma: float = 1.0) -> JointCentralityResult:
    """Joint centrality of an arbitrary leader set (1 <= m < n).

    ``pivot`` defaults to the first member; the value of rho does not depend
    on the choice. For m = 1 the grounded block is empty and the conventions
    det(empty) = 1, Q = 0 make rho equal the node's information centrality.
    """
    members = _validate_members(kernels, members)
    if pivot is None:
        pivot = members[0]
    pivot = int(pivot)
    if pivot not in members:
        raise GraphError(f"pivot {pivot} not in leader set {members}")
    lp = kernels.lplus
    n = kernels.n
    kf_over_n = kernels.kirchhoff / n
    rest = [v for v in members if v != pivot]
    warnings = []

    if not rest:
        det_g = 1.0
        det_lplus_s = float(lp[pivot, pivot])
        trace_q = 0.0
        q_pivot = 0.0
        n_over_rho = kf_over_n + n * lp[pivot, pivot]
    else:
        grounded = n_inverse_entries(kernels, pivot)[np.ix_(rest, rest)]
        det_grounded = float(np.linalg.det(grounded))
        if not (math.isfinite(det_grounded) and det_grounded > 0.0):
            raise NumericalDegeneracyError(
                f"grounded Gram matrix of {members} (pivot {pivot}) is numerically singular"
            )
        gmat = np.linalg.inv(grounded)

        # explicit double sum over leader pairs and all n nodes
        diffs = lp[:, [pivot]] - lp[:, rest]  # column a: L+[:, pivot] - L+[:, a]
        row = lp[pivot]
        acc = 0.0
        for ia in range(len(rest)):
            da = diffs[:, ia]
            for ib in range(len(rest)):
                db = diffs[:, ib]
                a, b = rest[ia], rest[ib]
                x_ab = row[pivot] * (row[pivot] - row[a] - row[b]) + row[a] * row[b]
                half = 0.5 * float(np.sum(da * da + db * db - (da - db) ** 2))
                acc += gmat[ia, ib] * (n * x_ab + half)
        n_over_rho = kf_over_n + n * lp[pivot, pivot] - acc

        # compact matrix form, reported alongside
        order = [pivot] + rest
        lp_s = lp[np.ix_(order, order)]
        det_g = 1.0 / det_grounded
        det_lplus_s = float(np.linalg.det(lp_s))
        d2 = np.diag(kernels.l2plus)
        gamma_s = (
            d2[order][:, None] + d2[order][None, :] - 2.0 * kernels.l2plus[np.ix_(order, order)]
        )
        np.fill_diagonal(gamma_s, 0.0)
        gbar = np.zeros((len(order), len(order)))
        gbar[1:, 1:] = gmat
        q = gbar @ gamma_s
        trace_q = float(np.trace(q))
        q_pivot = float(q[:, 0].sum())
        log.debug("trace_Q=%.6g for set %s (pivot %s)", trace_q, members, pivot)

        if abs(det_grounded) < _DET_WARN * float(np.prod(np.abs(np.diag(grounded)))):
            warnings.append("det of the grounded Gram matrix is far below its natural scale")
        if abs(det_lplus_s) < _DET_WARN * float(np.prod(np.abs(np.diag(lp_s)))):
            warnings.append("det of L+_S is far below its natural scale")

    n_over_rho = float(n_over_rho)
    if not (math.isfinite(n_over_rho) and n_over_rho > 0.0):
        raise NumericalDegeneracyError(
            f"nonpositive inverse joint centrality {n_over_rho} for set {members}"
        )
    return JointCentralityResult(
        rho=n / n_over_rho,
        implied_total_error=0.5 * sigma * sigma * n_over_rho,
        terms={
            "kirchhoff_over_n": kf_over_n,
            "det_G": det_g,
            "det_LplusS": det_lplus_s,
            "trace_Q": trace_q,
            "q_pivot": q_pivot,
        },
        pivot_used=pivot,
        warnings=tuple(warnings),
    )


def _pair_ingredients(kernels, s1, s2):
    lp = kernels.lplus
    l2p = kernels.l2plus
    r = float(lp[s1, s1] + lp[s2, s2] - 2.0 * lp[s1, s2])
    gamma = float(l2p[s1, s1] + l2p[s2, s2] - 2.0 * l2p[s1, s2])
    return r, gamma


def joint_centrality_two(kernels: GraphKernels, s1: int, s2: int, sigma: float = 1.0) -> JointCentralityResult:
    """Two-leader joint centrality in closed form.

    n / rho = K_f/n + (n L+[s1,s1] L+[s2,s2] - n L+[s1,s2]^2 - gamma) / r;
    agrees with the general-m routine.
    """
    s1, s2 = _validate_members(kernels, (s1, s2))
    lp = kernels.lplus
    n = kernels.n
    kf_over_n = kernels.kirchhoff / n
    r, gamma = _pair_ingredients(kernels, s1, s2)
    minor = float(lp[s1, s1] * lp[s2, s2] - lp[s1, s2] ** 2)
    n_over_rho = float(kf_over_n + (n * minor - gamma) / r)
    return JointCentralityResult(
        rho=n / n_over_rho,
        implied_total_error=0.5 * sigma * sigma * n_over_rho,
        terms={
            "kirchhoff_over_n": kf_over_n,
            "det_G": 1.0 / r,
            "det_LplusS": minor,
            "trace_Q": 0.0,
            "q_pivot": gamma / r,
        },
        pivot_used=s1,
        warnings=(),
    )


def joint_centrality_two_gain(
    kernels: GraphKernels, s1: int, s2: int, k: float, sigma: float = 1.0
) -> JointCentralityResult:
    """Gain-dependent joint centrality of two noise-corrupted leaders.

    n / rho_k = K_f/n + [n (1 + k (L+[s1,s1] + L+[s2,s2]))
                         + n k^2 (L+[s1,s1] L+[s2,s2] - L+[s1,s2]^2)
                         - k^2 gamma] / (k (2 + k r)).
    Approaches the noise-free two-leader value as k grows.
    """
    s1, s2 = _validate_members(kernels, (s1, s2))
    if not (math.isfinite(k) and k > 0.0):
        raise GraphError(f"gain k must be finite and positive, got {k}")
    lp = kernels.lplus
    n = kernels.n
    kf_over_n = kernels.kirchhoff / n
    r, gamma = _pair_ingredients(kernels, s1, s2)
    minor = float(lp[s1, s1] * lp[s2, s2] - lp[s1, s2] ** 2)
    den = k * (2.0 + k * r)
    n_over_rho = float(
        kf_over_n
        + n * (1.0 + k * (lp[s1, s1] + lp[s2, s2])) / den
        + (n * k * k * minor - k * k * gamma) / den
    )
    return JointCentralityResult(
        rho=n / n_over_rho,
        implied_total_error=0.5 * sigma * sigma * n_over_rho,
        terms={
            "kirchhoff_over_n": kf_over_n,
            "det_G": 1.0 / r,
            "det_LplusS": minor,
            "trace_Q": 0.0,
            "q_pivot": gamma / r,
            "gain_k": k,
        },
        pivot_used=s1,
        warnings=(),
    )


def single_leader_error(kernels: GraphKernels, s: int, mode=None, sigma: float = 1.0) -> float:
    """Total tracking error with a single leader s.

    Noise-free: (n sigma^2 / 2) / c_s. Finite gain k:
    (n sigma^2 / 2) (1/k + 1/c_s). Either way the best single leader is the
    node with maximal information centrality.
    """
    (s,) = _validate_members(kernels, (s,))
    if mode is None:
        mode = NoiseFree()
    lp = kernels.lplus
    row_r = lp[s, s] + np.diag(lp) - 2.0 * lp[:, s]
    inv_c = float(row_r.sum()) / kernels.n  # 1/c_s
    half_n_sigma2 = 0.5 * kernels.n * sigma * sigma
    if isinstance(mode, NoiseFree):
        return float(half_n_sigma2 * inv_c)
    if isinstance(mode, Gain):
        return float(half_n_sigma2 * (1.0 / mode.k + inv_c))
    raise GraphError(f"mode must be NoiseFree or Gain, got {mode!r}")
