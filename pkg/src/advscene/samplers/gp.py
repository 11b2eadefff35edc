"""Exact Gaussian-process regression with a squared-exponential kernel,
plus the expected-improvement acquisition (maximization convention).

Hyperparameters are fixed (config-overridable); there is no marginal-
likelihood optimization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_solve, solve_triangular
from scipy.special import erf

_JITTERS = (0.0, 1e-10, 1e-8, 1e-6)
_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


class GpFitError(ValueError):
    pass


@dataclass(frozen=True)
class GpConfig:
    length_scale: float = 0.2  # per dim, normalized units
    signal_variance: float = 1.0
    noise: float = 1e-4

    def __post_init__(self):
        if self.length_scale <= 0 or self.signal_variance <= 0 or self.noise < 0:
            raise ValueError("length_scale and signal_variance must be > 0, noise >= 0")


@dataclass(frozen=True)
class GpSurrogate:
    x: np.ndarray  # (n, D)
    y: np.ndarray  # (n,)
    config: GpConfig
    chol: np.ndarray  # lower Cholesky factor of K + (noise + jitter) I
    alpha: np.ndarray  # solve(K + ..., y)
    jitter: float

    @property
    def prior_mean(self) -> float:
        return 0.0

    @property
    def prior_variance(self) -> float:
        return self.config.signal_variance


def _kernel(cfg: GpConfig, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    sq = np.sum((a[:, None, :] - b[None, :, :]) ** 2, axis=-1)
    return cfg.signal_variance * np.exp(-0.5 * sq / cfg.length_scale**2)


def gp_fit(points, scores, config: GpConfig | None = None) -> GpSurrogate:
    """Fit the exact GP posterior; escalating jitter handles near-singular
    kernels (e.g. duplicate points) instead of crashing."""
    cfg = config or GpConfig()
    x = np.asarray([getattr(p, "coords", p) for p in points], dtype=float)
    y = np.asarray(list(scores), dtype=float)
    if x.ndim != 2 or len(x) == 0:
        raise GpFitError("need at least one training point")
    if len(x) != len(y):
        raise GpFitError("points and scores differ in length")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise GpFitError("training data must be finite")

    k = _kernel(cfg, x, x)
    eye = np.eye(len(x))
    last_err: Exception | None = None
    for jitter in _JITTERS:
        try:
            chol = np.linalg.cholesky(k + (cfg.noise + jitter) * eye)
        except np.linalg.LinAlgError as err:
            last_err = err
            continue
        alpha = cho_solve((chol, True), y)
        return GpSurrogate(x=x, y=y, config=cfg, chol=chol, alpha=alpha, jitter=jitter)
    raise GpFitError(f"kernel matrix not positive definite even with jitter: {last_err}")


def gp_predict_batch(gp: GpSurrogate, queries: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Posterior (means, variances) of the latent function at query points."""
    q = np.atleast_2d(np.asarray(queries, dtype=float))
    k_star = _kernel(gp.config, q, gp.x)  # (m, n)
    means = k_star @ gp.alpha
    v = solve_triangular(gp.chol, k_star.T, lower=True)  # (n, m)
    variances = gp.config.signal_variance - np.sum(v * v, axis=0)
    return means, np.maximum(variances, 0.0)


def gp_predict(gp: GpSurrogate, x) -> tuple[float, float]:
    coords = np.asarray(getattr(x, "coords", x), dtype=float)
    means, variances = gp_predict_batch(gp, coords[None, :])
    return float(means[0]), float(variances[0])


def _norm_cdf(z: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + erf(z / _SQRT2))


def expected_improvement_batch(
    gp: GpSurrogate, queries: np.ndarray, incumbent: float
) -> np.ndarray:
    means, variances = gp_predict_batch(gp, queries)
    sigma = np.sqrt(variances)
    improve = means - incumbent
    ei = np.where(sigma > 0.0, 0.0, np.maximum(improve, 0.0))
    mask = sigma > 0.0
    if np.any(mask):
        z = improve[mask] / sigma[mask]
        ei_pos = improve[mask] * _norm_cdf(z) + sigma[mask] * (
            _INV_SQRT_2PI * np.exp(-0.5 * z * z)
        )
        ei = ei.copy()
        ei[mask] = ei_pos
    return np.maximum(ei, 0.0)


def expected_improvement(gp: GpSurrogate, x, incumbent: float) -> float:
    """EI for maximization: (mu - f*) Phi(z) + sigma phi(z); 0 uncertainty
    degrades to max(mu - f*, 0). Never negative."""
    coords = np.asarray(getattr(x, "coords", x), dtype=float)
    return float(expected_improvement_batch(gp, coords[None, :], incumbent)[0])
