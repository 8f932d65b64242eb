"""Chebyshev and Jacobi polynomial evaluation, orthogonality weights, and
adaptive quadrature with declared singularities.

This module is the oracle layer: everything here is independent of the
recurrence/spectral machinery so it can be used to cross-check it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import DomainError, NumericalError


def chebyshev_T(k, x):
    """Chebyshev polynomial of the first kind, T_k(x).

    Evaluated by the three-term recurrence; works for real or complex
    scalars and for numpy arrays.
    """
    if k < 0:
        raise DomainError("Chebyshev degree must be >= 0, got %r" % (k,))
    x = x + 0.0
    if k == 0:
        return x * 0 + 1.0
    t_prev, t_cur = x * 0 + 1.0, x
    for _ in range(k - 1):
        t_prev, t_cur = t_cur, 2.0 * x * t_cur - t_prev
    return t_cur


def chebyshev_U(k, x):
    """Chebyshev polynomial of the second kind, U_k(x)."""
    if k < 0:
        raise DomainError("Chebyshev degree must be >= 0, got %r" % (k,))
    x = x + 0.0
    if k == 0:
        return x * 0 + 1.0
    u_prev, u_cur = x * 0 + 1.0, 2.0 * x
    for _ in range(k - 1):
        u_prev, u_cur = u_cur, 2.0 * x * u_cur - u_prev
    return u_cur


def tk_zeros(k: int) -> np.ndarray:
    """The k zeros of T_k, ascending: cos((2j-1)pi/(2k)), j = 1..k."""
    if k < 1:
        raise DomainError("need k >= 1")
    j = np.arange(1, k + 1)
    return np.sort(np.cos((2 * j - 1) * np.pi / (2 * k)))


def uk1_zeros(k: int) -> np.ndarray:
    """The k-1 zeros of U_{k-1}, ascending: cos(j*pi/k), j = 1..k-1."""
    if k < 1:
        raise DomainError("need k >= 1")
    j = np.arange(1, k)
    return np.sort(np.cos(j * np.pi / k))


def jacobi_P(n: int, a: float, b: float, t):
    """Jacobi polynomial P_n^{(a,b)}(t) via the standard three-term recurrence.

    Accepts real or complex ``t`` (scalar or array); requires a, b > -1.
    """
    if n < 0:
        raise DomainError("Jacobi degree must be >= 0")
    if a <= -1 or b <= -1:
        raise DomainError("Jacobi parameters must satisfy a, b > -1")
    t = t + 0.0
    p_prev = t * 0 + 1.0
    if n == 0:
        return p_prev
    p_cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * t
    for m in range(2, n + 1):
        s = 2.0 * m + a + b
        c1 = 2.0 * m * (m + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s
        p_prev, p_cur = p_cur, ((c2 + c3 * t) * p_cur - c4 * p_prev) / c1
    return p_cur


@dataclass(frozen=True)
class WeightFunction:
    """One of the four orthogonality weights, without normalization constant.

    kind:
      ``hermite_gen``  |x|^g exp(-x^2)            on (-inf, inf)
      ``ultra_gen``    |x|^g (1-x^2)^(a-1/2)      on (-1, 1)
      ``sieved_w1``    (1-x^2)^(a-1/2) |U_{k-1}|^(2a) |T_k|^g   on (-1, 1)
      ``sieved_w2``    (1-x^2)^(a+1/2) |U_{k-1}|^(2a) |T_k|^g   on (-1, 1)
    """

    kind: str
    gamma: float
    alpha: float | None = None
    k: int = 1

    _KINDS = ("hermite_gen", "ultra_gen", "sieved_w1", "sieved_w2")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise DomainError("unknown weight kind %r" % (self.kind,))
        if not self.gamma > -1:
            raise DomainError("weight exponent gamma must be > -1")
        if self.kind != "hermite_gen":
            if self.alpha is None or not self.alpha > -0.5:
                raise DomainError("weight exponent alpha must be > -1/2")
        if self.kind in ("sieved_w1", "sieved_w2") and self.k < 1:
            raise DomainError("sieve order k must be >= 1")

    @property
    def support(self) -> tuple[float, float]:
        if self.kind == "hermite_gen":
            return (-math.inf, math.inf)
        return (-1.0, 1.0)

    def singular_points(self) -> tuple[float, ...]:
        """Interior points where the weight can vanish or blow up."""
        if self.kind in ("sieved_w1", "sieved_w2"):
            pts = np.concatenate([tk_zeros(self.k), uk1_zeros(self.k)])
            return tuple(np.sort(pts))
        return (0.0,)

    def __call__(self, x):
        x = np.asarray(x, dtype=float) + 0.0
        g = self.gamma
        if self.kind == "hermite_gen":
            return np.abs(x) ** g * np.exp(-x * x)
        a = self.alpha
        if self.kind == "ultra_gen":
            return np.abs(x) ** g * (1.0 - x * x) ** (a - 0.5)
        u = np.abs(chebyshev_U(self.k - 1, x))
        t = np.abs(chebyshev_T(self.k, x))
        expo = a - 0.5 if self.kind == "sieved_w1" else a + 0.5
        return (1.0 - x * x) ** expo * u ** (2.0 * a) * t ** g


def weight_for(spec) -> WeightFunction:
    """WeightFunction of a family spec (anything with kind/gamma/alpha/k)."""
    table = {
        "gen-hermite": "hermite_gen",
        "gen-ultraspherical": "ultra_gen",
        "sieved-first": "sieved_w1",
        "sieved-second": "sieved_w2",
    }
    if spec.kind not in table:
        raise DomainError("no weight for family %r" % (spec.kind,))
    return WeightFunction(table[spec.kind], spec.gamma, spec.alpha, spec.k)


def weight_eval(w: WeightFunction, x):
    """Pointwise weight value (no normalization)."""
    return w(x)


def adaptive_integrate(f, interval, singular_points=(), rel_tol=1e-10) -> float:
    """Integrate ``f`` over ``interval``, splitting at declared singularities.

    Each declared interior singular point becomes a panel endpoint, where
    the QUADPACK extrapolation handles integrable algebraic singularities.
    Infinite endpoints are allowed.  Raises NumericalError if the reported
    error estimate is not comfortably below the target.
    """
    lo, hi = interval
    if not lo < hi:
        raise DomainError("empty integration interval %r" % (interval,))
    cuts = sorted({float(s) for s in singular_points if lo < s < hi})
    # drop cuts indistinguishable from their neighbor
    edges = [lo]
    for s in cuts:
        if s - edges[-1] > 1e-13:
            edges.append(s)
    if hi - edges[-1] > 1e-13:
        edges.append(hi)
    else:
        edges[-1] = hi

    total = 0.0
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        out = integrate.quad(f, a, b, epsabs=1e-13, epsrel=rel_tol,
                             limit=300, full_output=1)
        total += out[0]
        err += out[1]
    if err > 1e-7 * max(1.0, abs(total)):
        raise NumericalError(
            "quadrature did not converge: estimated error %.3e on %r"
            % (err, interval))
    return total
