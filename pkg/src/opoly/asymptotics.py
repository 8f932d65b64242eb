"""Limiting zero distributions when degree and parameters grow together.

For the sieved families with parameter slopes a and c the limiting zero
counting measure is absolutely continuous with density

    (2a+c+2)/(2 pi) * sqrt(4 mu - (T_k^2(x) - kappa)^2)
                      / (|U_{k-1}(x)| |T_k(x)| (1 - x^2))

on the region E_k(kappa, mu) = {x : (T_k^2(x) - kappa)^2 < 4 mu}, where

    kappa = ((2a+1)(c+2) + c(c+1)) / (2a+c+2)^2,
    mu    = (2a+1)(c+1)(2a+c+1) / (2a+c+2)^4.

For the Hermite-type family with slope c (zeros rescaled by 1/sqrt(l)) the
density is sqrt((c+1) - (x^2 - c/2 - 1)^2) / (pi |x|) on
{|x^2 - c/2 - 1| < sqrt(c+1)}.

The general two-level chain measure with parameters (g, h, k) has the same
shape of absolutely continuous part, prefactor 1/(2 pi h), plus a discrete
part at +-1 and zeros of U_{k-1} when g+h > 1 and at zeros of T_k when
h > g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cfrac import kappa_mu
from .errors import DomainError, NumericalError
from .polycore import (CoefficientSequence, FamilySpec, degree_dependent_coeffs,
                       hermite_coeffs)
from .specfun import adaptive_integrate, chebyshev_T, chebyshev_U, tk_zeros, \
    uk1_zeros
from .spectral import zeros_only

# Gauss-Legendre rule reused for the gridded CDF evaluation.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)


@dataclass(frozen=True)
class SupportRegion:
    """E_k(kappa, mu) = {x in [-1, 1] : (T_k^2(x) - kappa)^2 < 4 mu}."""

    k: int
    kappa: float
    mu: float

    def contains(self, x) -> bool:
        t2 = chebyshev_T(self.k, float(x)) ** 2
        return (t2 - self.kappa) ** 2 < 4.0 * self.mu

    def intervals(self, merge_tol: float = 1e-13) -> tuple[tuple[float, float], ...]:
        """Closed component intervals of the closure, ascending."""
        smu = math.sqrt(self.mu)
        s_lo = math.sqrt(min(max(self.kappa - 2.0 * smu, 0.0), 1.0))
        s_hi = math.sqrt(min(max(self.kappa + 2.0 * smu, 0.0), 1.0))
        a1 = math.acos(s_hi)            # both in [0, pi/2]
        a2 = math.acos(s_lo)
        raw = []
        for j in range(self.k):
            raw.append((j * math.pi + a1, j * math.pi + a2))
            raw.append(((j + 1) * math.pi - a2, (j + 1) * math.pi - a1))
        xiv = sorted((math.cos(v / self.k), math.cos(u / self.k))
                     for u, v in raw)
        merged = [list(xiv[0])]
        for lo, hi in xiv[1:]:
            if lo - merged[-1][1] <= merge_tol:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return tuple((lo, hi) for lo, hi in merged)


@dataclass(frozen=True)
class LimitDensity:
    """Sieved limit law with parameter slopes a, c >= 0 and sieve order k."""

    a: float
    c: float
    k: int

    def __post_init__(self):
        if self.a < 0 or self.c < 0:
            raise DomainError("slopes a, c must be >= 0")
        if not (isinstance(self.k, int) and self.k >= 1):
            raise DomainError("sieve order k must be an integer >= 1")

    @property
    def kappa(self) -> float:
        a, c = self.a, self.c
        return ((2 * a + 1) * (c + 2) + c * (c + 1)) / (2 * a + c + 2) ** 2

    @property
    def mu(self) -> float:
        a, c = self.a, self.c
        return ((2 * a + 1) * (c + 1) * (2 * a + c + 1)
                / (2 * a + c + 2) ** 4)

    @property
    def g(self) -> float:
        return (self.c + 1.0) / (2.0 * self.a + self.c + 2.0)

    @property
    def h(self) -> float:
        return 1.0 / (2.0 * self.a + self.c + 2.0)

    @property
    def prefactor(self) -> float:
        return (2.0 * self.a + self.c + 2.0) / (2.0 * math.pi)

    @property
    def support(self) -> SupportRegion:
        return SupportRegion(self.k, self.kappa, self.mu)


@dataclass(frozen=True)
class HermiteLimit:
    """Hermite-type limit law with slope c >= 0 (zeros rescaled by sqrt(l))."""

    c: float

    def __post_init__(self):
        if self.c < 0:
            raise DomainError("slope c must be >= 0")

    @property
    def inner_edge(self) -> float:
        return math.sqrt(max(self.c / 2 + 1 - math.sqrt(self.c + 1), 0.0))

    @property
    def outer_edge(self) -> float:
        return math.sqrt(self.c / 2 + 1 + math.sqrt(self.c + 1))

    def intervals(self) -> tuple[tuple[float, float], ...]:
        i, o = self.inner_edge, self.outer_edge
        return ((-o, -i), (i, o))


def _ac_sieved_vec(x, k, kappa, mu, pref):
    """Vectorized absolutely continuous density; 0 outside the region."""
    x = np.asarray(x, dtype=float)
    t = chebyshev_T(k, x)
    u = chebyshev_U(k - 1, x)
    rad = 4.0 * mu - (t * t - kappa) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        val = pref * np.sqrt(np.maximum(rad, 0.0)) / (
            np.abs(u) * np.abs(t) * (1.0 - x * x))
    return np.where(rad > 0.0, val, 0.0)


def _ac_hermite_vec(x, c):
    x = np.asarray(x, dtype=float)
    rad = (c + 1.0) - (x * x - c / 2.0 - 1.0) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        val = np.sqrt(np.maximum(rad, 0.0)) / (math.pi * np.abs(x))
    return np.where(rad > 0.0, val, 0.0)


def _sieved_scalar(x, k, kappa, mu, pref) -> float:
    x = float(x)
    if abs(x) > 1.0:
        return 0.0
    t = chebyshev_T(k, x)
    u = chebyshev_U(k - 1, x)
    rad = 4.0 * mu - (t * t - kappa) ** 2
    if t == 0.0 or u == 0.0 or abs(x) == 1.0:
        if rad >= 0.0:
            raise NumericalError("density evaluated exactly at a singular "
                                 "point x=%r" % (x,))
        return 0.0
    if rad <= 0.0:
        return 0.0
    return pref * math.sqrt(rad) / (abs(u) * abs(t) * (1.0 - x * x))


def density_sieved(x, d: LimitDensity) -> float:
    """Limit density at x; zero outside the support region.

    Raises NumericalError at points of the closed region where the
    formula degenerates (zeros of T_k U_{k-1} (1-x^2)).
    """
    return _sieved_scalar(x, d.k, d.kappa, d.mu, d.prefactor)


def density_hermite(x, c: float) -> float:
    """Hermite-type limit density at x (after the sqrt(l) rescaling)."""
    if c < 0:
        raise DomainError("slope c must be >= 0")
    x = float(x)
    rad = (c + 1.0) - (x * x - c / 2.0 - 1.0) ** 2
    if x == 0.0:
        if rad >= 0.0:
            raise NumericalError("density evaluated at the singular origin")
        return 0.0
    if rad <= 0.0:
        return 0.0
    return math.sqrt(rad) / (math.pi * abs(x))


def discrete_part(g: float, h: float, k: int
                  ) -> tuple[tuple[float, float], ...]:
    """Point masses of the (g, h, k) chain measure as (point, mass) pairs.

    Masses (g+h-1)/(2hk) at +-1 and (g+h-1)/(hk) at zeros of U_{k-1}
    when g+h > 1; masses (h-g)/(hk) at zeros of T_k when h > g.
    """
    kappa_mu(g, h)       # validates the domain
    if k < 1:
        raise DomainError("sieve order k must be >= 1")
    entries: list[tuple[float, float]] = []
    if g + h > 1.0:
        r_edge = (g + h - 1.0) / (2.0 * h * k)
        entries += [(-1.0, r_edge), (1.0, r_edge)]
        r_u = (g + h - 1.0) / (h * k)
        entries += [(float(s), r_u) for s in uk1_zeros(k)]
    if h > g:
        r_t = (h - g) / (h * k)
        entries += [(float(s), r_t) for s in tk_zeros(k)]
    return tuple(sorted(entries))


def general_density(g: float, h: float, k: int, x
                    ) -> tuple[float, tuple[tuple[float, float], ...]]:
    """Absolutely continuous density value at x plus the discrete catalog
    of the (g, h, k) chain measure."""
    kap, mu = kappa_mu(g, h)
    ac = _sieved_scalar(x, k, kap, mu, 1.0 / (2.0 * math.pi * h))
    return ac, discrete_part(g, h, k)


def _machinery(d):
    """(intervals, interior breakpoints, scalar density, vector density)."""
    if isinstance(d, LimitDensity):
        k, kap, mu, pref = d.k, d.kappa, d.mu, d.prefactor
        ivs = d.support.intervals()
        breaks = np.sort(np.concatenate([tk_zeros(k), uk1_zeros(k), [0.0]]))
        return (ivs, breaks,
                lambda x: _sieved_scalar(x, k, kap, mu, pref),
                lambda x: _ac_sieved_vec(x, k, kap, mu, pref))
    if isinstance(d, HermiteLimit):
        c = d.c
        return (d.intervals(), np.array([0.0]),
                lambda x: _ac_hermite_vec(np.asarray([x]), c)[0],
                lambda x: _ac_hermite_vec(x, c))
    raise TypeError("expected LimitDensity or HermiteLimit, got %r"
                    % (type(d),))


def _general_machinery(g, h, k):
    kap, mu = kappa_mu(g, h)
    pref = 1.0 / (2.0 * math.pi * h)
    ivs = SupportRegion(k, kap, mu).intervals()
    breaks = np.sort(np.concatenate([tk_zeros(k), uk1_zeros(k), [0.0]]))
    return (ivs, breaks,
            lambda x: _sieved_scalar(x, k, kap, mu, pref),
            lambda x: _ac_sieved_vec(x, k, kap, mu, pref))


def _cdf_scalar(machinery, y: float) -> float:
    intervals, breaks, fscalar, _ = machinery
    total = 0.0
    for lo, hi in intervals:
        if y <= lo:
            break
        hi_eff = min(hi, float(y))
        if hi_eff - lo <= 0:
            continue
        cuts = [s for s in breaks if lo < s < hi_eff]
        total += adaptive_integrate(fscalar, (lo, hi_eff), cuts)
    return total


def limit_cdf(d, y) -> float:
    """CDF of the absolutely continuous limit law at y, by adaptive
    quadrature split at the density's singular points."""
    return _cdf_scalar(_machinery(d), float(y))


def general_continuous_cdf(g: float, h: float, k: int, y) -> float:
    """CDF of the absolutely continuous part of the (g, h, k) measure."""
    return _cdf_scalar(_general_machinery(g, h, k), float(y))


def _cdf_grid(machinery, ys: np.ndarray) -> np.ndarray:
    """Cumulative integrals of the density at each point of the sorted grid
    ``ys``.  Segments are delimited by interval edges, interior breakpoints
    and the grid itself; square-root edges get a quadratic substitution so
    a fixed Gauss rule is accurate on every segment."""
    intervals, breaks, _, fvec = machinery
    ys = np.asarray(ys, dtype=float)
    if np.any(np.diff(ys) < 0):
        raise DomainError("grid must be ascending")

    nodes_all: list[np.ndarray] = []
    weights_all: list[np.ndarray] = []
    seg_hi: list[float] = []
    sizes: list[int] = []

    def add_plain(p, q):
        half = 0.5 * (q - p)
        nodes_all.append(0.5 * (p + q) + half * _GL_NODES)
        weights_all.append(half * _GL_WEIGHTS)
        seg_hi.append(q)
        sizes.append(len(_GL_NODES))

    def add_left_edge(e, p, q):     # x = e + u^2, integrand 2 u f
        uhi = math.sqrt(q - e)
        ulo = math.sqrt(max(p - e, 0.0))
        half = 0.5 * (uhi - ulo)
        u = 0.5 * (ulo + uhi) + half * _GL_NODES
        nodes_all.append(e + u * u)
        weights_all.append(half * _GL_WEIGHTS * 2.0 * u)
        seg_hi.append(q)
        sizes.append(len(_GL_NODES))

    def add_right_edge(e, p, q):    # x = e - u^2
        uhi = math.sqrt(e - p)
        ulo = math.sqrt(max(e - q, 0.0))
        half = 0.5 * (uhi - ulo)
        u = 0.5 * (ulo + uhi) + half * _GL_NODES
        nodes_all.append(e - u * u)
        weights_all.append(half * _GL_WEIGHTS * 2.0 * u)
        seg_hi.append(q)
        sizes.append(len(_GL_NODES))

    for lo, hi in intervals:
        inner = [float(s) for s in breaks if lo < s < hi]
        inner += [float(y) for y in ys if lo < y < hi]
        bounds = np.unique(np.concatenate([[lo, hi], inner]))
        for p, q in zip(bounds[:-1], bounds[1:]):
            if q - p <= 0:
                continue
            at_left = (p == lo)
            at_right = (q == hi)
            if at_left and at_right:
                mid = 0.5 * (p + q)
                add_left_edge(lo, p, mid)
                add_right_edge(hi, mid, q)
            elif at_left:
                add_left_edge(lo, p, q)
            elif at_right:
                add_right_edge(hi, p, q)
            else:
                add_plain(p, q)

    if not nodes_all:
        return np.zeros_like(ys)
    values = fvec(np.concatenate(nodes_all)) * np.concatenate(weights_all)
    splits = np.cumsum(sizes)[:-1]
    seg_integrals = np.array([s.sum() for s in np.split(values, splits)])

    order = np.argsort(seg_hi, kind="stable")
    his = np.asarray(seg_hi)[order]
    cum = np.concatenate([[0.0], np.cumsum(seg_integrals[order])])
    return cum[np.searchsorted(his, ys, side="right")]


def limit_cdf_grid(d, ys) -> np.ndarray:
    """CDF of the limit law on an ascending grid (fast vectorized path;
    agrees with pointwise ``limit_cdf``)."""
    return _cdf_grid(_machinery(d), np.asarray(ys, dtype=float))


def general_continuous_cdf_grid(g: float, h: float, k: int, ys) -> np.ndarray:
    return _cdf_grid(_general_machinery(g, h, k), np.asarray(ys, dtype=float))


@dataclass(frozen=True)
class EmpiricalCDF:
    """Right-continuous zero-counting function y -> N(y)/degree."""

    zeros: np.ndarray
    degree: int

    def __post_init__(self):
        z = np.sort(np.asarray(self.zeros, dtype=float))
        if len(z) != self.degree:
            raise DomainError("expected %d zeros, got %d"
                              % (self.degree, len(z)))
        z.setflags(write=False)
        object.__setattr__(self, "zeros", z)

    def evaluate(self, y) -> np.ndarray:
        return np.searchsorted(self.zeros, y, side="right") / self.degree

    def __call__(self, y) -> float:
        return float(self.evaluate(float(y)))


def linear_schedule(slope: float, upto: int) -> np.ndarray:
    """The schedule slope * n for n = 0..upto (inclusive)."""
    if upto < 0:
        raise DomainError("need upto >= 0")
    return slope * np.arange(upto + 1, dtype=float)


def empirical_cdf(spec: FamilySpec, l: int, *, alpha_schedule=None,
                  gamma_schedule=None, rescale: float | None = None
                  ) -> EmpiricalCDF:
    """Zero-counting function of the degree-l family polynomial.

    Hermite-type zeros are divided by sqrt(l) unless ``rescale`` overrides;
    with a ``gamma_schedule`` the parameter gamma_l = schedule[l] is used.
    Sieved families take both schedules (frozen at index floor((l-1)/k));
    without schedules the spec's constant parameters apply.  Intended for
    degrees up to a few thousand.
    """
    if l < 1:
        raise DomainError("need degree l >= 1")
    if spec.kind == "gen-hermite":
        gamma_l = spec.gamma if gamma_schedule is None else float(
            gamma_schedule[l])
        coeffs = hermite_coeffs(gamma_l, l - 1)
        scale = 1.0 / math.sqrt(l) if rescale is None else float(rescale)
    elif alpha_schedule is not None or gamma_schedule is not None:
        if alpha_schedule is None or gamma_schedule is None:
            raise DomainError("sieved schedules must be given in pairs")
        coeffs = degree_dependent_coeffs(spec, alpha_schedule,
                                         gamma_schedule, l)
        scale = 1.0 if rescale is None else float(rescale)
    else:
        coeffs = spec.coefficients(l - 1)
        scale = 1.0 if rescale is None else float(rescale)
    return EmpiricalCDF(zeros_only(coeffs) * scale, l)


@dataclass(frozen=True)
class CDFReport:
    """Sup distance between an empirical and a limit CDF on a uniform grid,
    with the worst discrepancy per support interval."""

    sup_distance: float
    at: float
    grid_points: int
    interval_table: tuple[tuple[float, float, float], ...]

    def lines(self) -> list[str]:
        out = ["sup distance %.6f at y = %.6f (grid %d)"
               % (self.sup_distance, self.at, self.grid_points)]
        for lo, hi, disc in self.interval_table:
            out.append("  interval [%.6f, %.6f]: max discrepancy %.6f"
                       % (lo, hi, disc))
        return out


def compare(e: EmpiricalCDF, d, grid_points: int = 2001) -> CDFReport:
    """Grid sup distance between the empirical and limit CDFs over the
    hull of both supports."""
    if grid_points < 2:
        raise DomainError("need at least 2 grid points")
    intervals = _machinery(d)[0]
    lo = min(float(e.zeros[0]), intervals[0][0])
    hi = max(float(e.zeros[-1]), intervals[-1][1])
    grid = np.linspace(lo, hi, grid_points)
    limit_vals = limit_cdf_grid(d, grid)
    emp_vals = e.evaluate(grid)
    diff = np.abs(emp_vals - limit_vals)
    imax = int(np.argmax(diff))
    table = []
    for ilo, ihi in intervals:
        mask = (grid >= ilo) & (grid <= ihi)
        disc = float(np.max(diff[mask])) if np.any(mask) else float("nan")
        table.append((ilo, ihi, disc))
    return CDFReport(float(diff[imax]), float(grid[imax]), grid_points,
                     tuple(table))
