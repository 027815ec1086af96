"""ARIMA(p,d,q) with optional drift, fitted by conditional sum of squares.

Coefficients minimize the CSS objective (pre-sample innovations zero) via
Nelder-Mead from an all-zero start, kept inside |coef| <= 0.99 by a
quadratic penalty.  Orders are compared by small-sample-corrected AIC over
a grid of p, q in 0..5 with drift as a searchable flag.  Forecasts iterate
the ARMA recursion on the differenced scale with future innovations set to
zero, then re-integrate from the retained training tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import minimize
from scipy.signal import lfilter

from .errors import NonConvergentError, SelectionFailedError, SeriesTooShortError
from .series import MonthlyTimeSeries, MonthStamp

MAX_P = 5
MAX_Q = 5
MAX_D = 2
COEF_BOUND = 0.99
_PENALTY = 1e12
_EVALS_PER_DIM = 200
_ACF1_STATIONARY = 0.9


@dataclass(frozen=True)
class ArimaOrder:
    """Model order: AR lags, differences, MA lags, optional drift."""

    p: int
    d: int
    q: int
    drift: bool = False

    def __post_init__(self):
        if not 0 <= self.p <= MAX_P:
            raise ValueError(f"p must be in 0..{MAX_P}, got {self.p}")
        if not 0 <= self.q <= MAX_Q:
            raise ValueError(f"q must be in 0..{MAX_Q}, got {self.q}")
        if not 0 <= self.d <= MAX_D:
            raise ValueError(f"d must be in 0..{MAX_D}, got {self.d}")
        if self.drift and self.d < 1:
            raise ValueError("drift requires d >= 1; with d=0 the mean term "
                             "is estimated instead")


@dataclass(frozen=True)
class TrainTail:
    """State retained from fitting so forecasts can start immediately.

    ``demeaned_diffs`` and ``residuals`` are aligned tails of the
    d-times-differenced (and mean-removed) training series;
    ``level_tails[k]`` is the last value of the k-times-differenced series,
    k = 0..d-1, used to re-integrate forecasts.
    """

    demeaned_diffs: tuple[float, ...]
    residuals: tuple[float, ...]
    level_tails: tuple[float, ...]


@dataclass(frozen=True)
class ArimaModel:
    """Fitted coefficients, innovation variance, and fit diagnostics.

    ``drift_value`` is the per-step mean on the differenced scale: the mean
    of the differenced series when drift is enabled, the estimated mean
    term when d = 0, and zero otherwise.
    """

    order: ArimaOrder
    ar_coeffs: tuple[float, ...]
    ma_coeffs: tuple[float, ...]
    drift_value: float
    sigma2: float
    css: float
    aicc: float
    train_tail: TrainTail
    train_span: tuple[MonthStamp, MonthStamp]

    def summary(self) -> str:
        o = self.order
        lines = [
            f"order=({o.p},{o.d},{o.q})",
            f"drift={self.drift_value!r}" if (o.drift or o.d == 0) else "drift=0.0",
            "ar=" + ",".join(repr(v) for v in self.ar_coeffs),
            "ma=" + ",".join(repr(v) for v in self.ma_coeffs),
            f"sigma2={self.sigma2!r}",
            f"aicc={self.aicc!r}",
        ]
        return "\n".join(lines)


def difference(values: Sequence[float], d: int) -> tuple[float, ...]:
    """Apply first differencing d times; output shrinks by d."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if len(values) <= d:
        raise SeriesTooShortError(
            f"cannot difference {len(values)} values {d} times")
    out = np.asarray(values, dtype=float)
    if d:
        out = np.diff(out, n=d)
    return tuple(float(v) for v in out)


def integrate(deltas: Sequence[float], anchors: Sequence[float]) -> tuple[float, ...]:
    """Undo differencing forward from known values.

    ``anchors[k]`` is the most recent value of the k-times-differenced
    series (k = 0 .. d-1, outermost first); ``deltas`` continue the
    d-times-differenced series.  Returns the continuation on the original
    scale.  With no anchors the deltas are returned unchanged.
    """
    out = np.asarray(deltas, dtype=float)
    for anchor in reversed(list(anchors)):
        out = anchor + np.cumsum(out)
    return tuple(float(v) for v in out)


def _residuals(diffed: np.ndarray, p: int, q: int, ar, ma, mu: float) -> np.ndarray:
    """CSS residuals e_t for t = p..len(diffed)-1, pre-sample e treated as 0."""
    w = diffed - mu
    n = len(w)
    x = w[p:].copy()
    for i in range(1, p + 1):
        x -= ar[i - 1] * w[p - i:n - i]
    if q:
        return lfilter([1.0], np.concatenate(([1.0], ma[:q])), x)
    return x


def css_objective(diffed: Sequence[float], order: ArimaOrder,
                  ar: Sequence[float], ma: Sequence[float], mu: float) -> float:
    """Conditional sum of squared residuals of an ARMA(p,q) on `diffed`."""
    if len(ar) != order.p or len(ma) != order.q:
        raise ValueError(f"coefficient lengths {len(ar)},{len(ma)} do not "
                         f"match order ({order.p},{order.d},{order.q})")
    e = _residuals(np.asarray(diffed, dtype=float), order.p, order.q,
                   np.asarray(ar, dtype=float), np.asarray(ma, dtype=float), mu)
    return float(e @ e)


def _optimize_css(z: np.ndarray, p: int, q: int, mu_fixed: float | None):
    """Minimize CSS over (ar, ma[, mu]) by Nelder-Mead from the origin.

    mu is fixed for d >= 1 models and estimated jointly when mu_fixed is
    None (the d = 0 mean term, started at the sample mean).
    """
    joint_mean = mu_fixed is None
    dim = p + q + (1 if joint_mean else 0)

    def split(x):
        coef = np.clip(x[:p + q], -COEF_BOUND, COEF_BOUND)
        mu = x[p + q] if joint_mean else mu_fixed
        return coef[:p], coef[p:], mu

    def objective(x):
        ar, ma, mu = split(x)
        e = _residuals(z, p, q, ar, ma, mu)
        excess = (np.abs(x[:p + q]) - COEF_BOUND).clip(0.0)
        return float(e @ e) + _PENALTY * float(excess @ excess)

    if dim == 0:
        e = _residuals(z, p, q, np.empty(0), np.empty(0), mu_fixed)
        return np.empty(0), np.empty(0), mu_fixed, float(e @ e)

    x0 = np.zeros(dim)
    if joint_mean:
        x0[p + q] = z.mean()
    f0 = objective(x0)
    budget = _EVALS_PER_DIM * dim
    result = minimize(objective, x0, method="Nelder-Mead",
                      options=dict(xatol=1e-4, fatol=1e-9 * (1.0 + abs(f0)),
                                   maxfev=budget, maxiter=budget))
    raw = result.x[:p + q]
    if np.any(np.abs(raw) > COEF_BOUND + 1e-6):
        raise NonConvergentError(
            f"optimizer left |coef| <= {COEF_BOUND} box for ARMA({p},{q})")
    ar, ma, mu = split(result.x)
    e = _residuals(z, p, q, ar, ma, mu)
    return ar, ma, mu, float(e @ e)


def fit_arima(series: MonthlyTimeSeries, order: ArimaOrder) -> ArimaModel:
    """Estimate coefficients for a fixed order by CSS minimization."""
    n = len(series)
    if n - order.d < 10 + order.p + order.q:
        raise SeriesTooShortError(
            f"need at least {10 + order.p + order.q + order.d} months for "
            f"order ({order.p},{order.d},{order.q}), got {n}")
    diffed = np.asarray(difference(series.values, order.d))
    if order.d == 0:
        ar, ma, mu, css = _optimize_css(diffed, order.p, order.q, None)
        has_mean = True
    else:
        mu = float(diffed.mean()) if order.drift else 0.0
        ar, ma, mu, css = _optimize_css(diffed, order.p, order.q, mu)
        has_mean = order.drift
    m = len(diffed) - order.p
    sigma2 = css / m
    k = order.p + order.q + (1 if has_mean else 0) + 1
    if m - k - 1 <= 0:
        aicc = math.inf
    else:
        aicc = m * math.log(max(sigma2, 1e-300)) + 2 * k + 2 * k * (k + 1) / (m - k - 1)

    resid = _residuals(diffed, order.p, order.q, ar, ma, mu)
    tail_len = max(order.p, order.q, 1)
    z = diffed - mu
    resid_aligned = np.concatenate((np.zeros(order.p), resid))
    level_tails = []
    cur = np.asarray(series.values, dtype=float)
    for _ in range(order.d):
        level_tails.append(float(cur[-1]))
        cur = np.diff(cur)
    tail = TrainTail(
        demeaned_diffs=tuple(float(v) for v in z[-tail_len:]),
        residuals=tuple(float(v) for v in resid_aligned[-tail_len:]),
        level_tails=tuple(level_tails),
    )
    return ArimaModel(order=order,
                      ar_coeffs=tuple(float(v) for v in ar),
                      ma_coeffs=tuple(float(v) for v in ma),
                      drift_value=float(mu),
                      sigma2=float(sigma2),
                      css=float(css),
                      aicc=float(aicc),
                      train_tail=tail,
                      train_span=(series.start, series.end))


def _stationary_enough(w: np.ndarray) -> bool:
    """Lag-1 autocorrelation below 0.9 and no variance payoff from one more
    difference."""
    if len(w) < 2:
        return True
    centered = w - w.mean()
    denom = float(centered @ centered)
    acf1 = 0.0 if denom == 0.0 else float(centered[1:] @ centered[:-1]) / denom
    return acf1 < _ACF1_STATIONARY and np.var(np.diff(w)) >= np.var(w)


def choose_difference_order(series: MonthlyTimeSeries) -> int:
    """Smallest d in 0..2 whose differenced series looks stationary."""
    values = np.asarray(series.values, dtype=float)
    for d in range(MAX_D + 1):
        w = values if d == 0 else np.diff(values, n=d)
        if _stationary_enough(w):
            return d
    return MAX_D


def select_order(series: MonthlyTimeSeries) -> ArimaOrder:
    """Pick (p,d,q,drift) by minimum AICc over the candidate grid.

    d comes from the stationarity heuristic; p and q range over 0..5 with
    drift searchable when d = 1.  Ties break toward smaller p+q, then
    smaller p.  Candidates whose optimizer fails are skipped.
    """
    if len(series) < 24:
        raise SeriesTooShortError(
            f"order selection needs at least 24 months, got {len(series)}")
    d = choose_difference_order(series)
    drift_options = (False, True) if d == 1 else (False,)
    best_key = None
    best_order = None
    for drift in drift_options:
        for p in range(MAX_P + 1):
            for q in range(MAX_Q + 1):
                order = ArimaOrder(p, d, q, drift)
                try:
                    model = fit_arima(series, order)
                except (NonConvergentError, SeriesTooShortError):
                    continue
                if math.isnan(model.aicc):
                    continue
                key = (model.aicc, p + q, p, q, drift)
                if best_key is None or key < best_key:
                    best_key, best_order = key, order
    if best_order is None:
        raise SelectionFailedError("no candidate order produced a usable fit")
    return best_order


def forecast_arima(model: ArimaModel, horizon: int) -> tuple[float, ...]:
    """Forecast `horizon` months ahead on the original scale.

    The ARMA recursion runs on the differenced scale with future
    innovations zero (known residuals feed the first q steps), the drift or
    mean is added back per step, and the path is integrated d times from
    the training tail.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    p, q = model.order.p, model.order.q
    z = list(model.train_tail.demeaned_diffs)
    resid = list(model.train_tail.residuals)
    diff_fc = []
    for _ in range(horizon):
        acc = 0.0
        for i in range(1, p + 1):
            acc += model.ar_coeffs[i - 1] * z[-i]
        for j in range(1, q + 1):
            acc += model.ma_coeffs[j - 1] * resid[-j]
        z.append(acc)
        resid.append(0.0)
        diff_fc.append(acc + model.drift_value)
    return integrate(diff_fc, model.train_tail.level_tails)
