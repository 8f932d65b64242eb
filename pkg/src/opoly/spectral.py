"""Spectral measures of terminated fractions: support points (zeros of the
denominator polynomial), Gauss-Christoffel masses, an independent residue
route to the same masses, and the equal-mass pattern checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError, NumericalError, PatternError
from .polycore import CoefficientSequence, FamilySpec
from .specfun import tk_zeros, uk1_zeros


@dataclass(frozen=True)
class JacobiMatrix:
    """Symmetric tridiagonal matrix with diagonal b_i and off-diagonal
    sqrt(a_i); its eigenvalues are the support points, the squared first
    eigenvector components the masses."""

    diag: np.ndarray
    offdiag: np.ndarray

    @classmethod
    def from_coefficients(cls, coeffs: CoefficientSequence) -> "JacobiMatrix":
        return cls(np.array(coeffs.b), np.sqrt(coeffs.a))


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite measure: strictly increasing simple points with positive
    masses summing to one."""

    points: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        ms = np.asarray(self.masses, dtype=float)
        if pts.shape != ms.shape or pts.ndim != 1 or len(pts) == 0:
            raise DomainError("points and masses must be matching 1-d arrays")
        if np.any(np.diff(pts) <= 0):
            raise DomainError("support points must be strictly increasing")
        if np.any(ms <= 0) or np.any(ms > 1 + 1e-9):
            raise DomainError("masses must lie in (0, 1]")
        if abs(ms.sum() - 1.0) > 1e-12:
            raise DomainError("masses must sum to 1, got %.17g" % ms.sum())
        pts.setflags(write=False)
        ms.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "masses", ms)

    def __len__(self) -> int:
        return len(self.points)

    def stieltjes(self, z) -> complex:
        """Partial-fraction sum: sum_j m_j / (z - x_j)."""
        z = complex(z)
        return complex(np.sum(self.masses / (z - self.points)))

    def moment(self, j: int) -> float:
        return float(np.sum(self.masses * self.points ** j))


def zeros_only(coeffs: CoefficientSequence) -> np.ndarray:
    """Ascending support points without masses (cheaper)."""
    jm = JacobiMatrix.from_coefficients(coeffs)
    try:
        return scipy.linalg.eigh_tridiagonal(jm.diag, jm.offdiag,
                                             eigvals_only=True)
    except (scipy.linalg.LinAlgError, np.linalg.LinAlgError) as exc:
        raise NumericalError("tridiagonal eigensolver failed: %s" % exc)


def zeros_and_masses(coeffs: CoefficientSequence) -> DiscreteMeasure:
    """Support points and Gauss-Christoffel masses of the terminated
    fraction with the given coefficients."""
    jm = JacobiMatrix.from_coefficients(coeffs)
    try:
        w, v = scipy.linalg.eigh_tridiagonal(jm.diag, jm.offdiag)
    except (scipy.linalg.LinAlgError, np.linalg.LinAlgError) as exc:
        raise NumericalError("tridiagonal eigensolver failed: %s" % exc)
    return DiscreteMeasure(w, v[0] ** 2)


def residue_masses(coeffs: CoefficientSequence) -> DiscreteMeasure:
    """Masses via the residue formula numerator(x_j)/denominator'(x_j).

    The denominator is the monic degree-(n+1) polynomial of the recurrence,
    the numerator its first associated polynomial; both are evaluated by
    their three-term recurrences at the support points.  Independent of the
    eigenvector route in ``zeros_and_masses``.
    """
    x = zeros_only(coeffs)
    b, a = coeffs.b, coeffs.a
    p_prev = np.ones_like(x)
    p_cur = x - b[0]
    dp_prev = np.zeros_like(x)
    dp_cur = np.ones_like(x)
    q_prev = np.zeros_like(x)
    q_cur = np.ones_like(x)
    for i in range(len(a)):
        shift = x - b[i + 1]
        p_prev, p_cur = p_cur, shift * p_cur - a[i] * p_prev
        dp_prev, dp_cur = dp_cur, p_prev + shift * dp_cur - a[i] * dp_prev
        q_prev, q_cur = q_cur, shift * q_cur - a[i] * q_prev
    if np.any(np.abs(dp_cur) < 1e-12):
        raise NumericalError("denominator derivative below 1e-12 at a zero: "
                             "near-multiple root or degenerate parameters")
    return DiscreteMeasure(x, q_cur / dp_cur)


@dataclass(frozen=True)
class MassGroup:
    """A support-point group and its relative mass.

    descriptor: 'tk_zeros' (zeros of T_k), 'uk1_zeros' (zeros of U_{k-1}),
    'origin' (the point 0), or 'rest' (all remaining points).
    """

    descriptor: str
    ratio: float

    _DESCRIPTORS = ("tk_zeros", "uk1_zeros", "origin", "rest")

    def __post_init__(self):
        if self.descriptor not in self._DESCRIPTORS:
            raise DomainError("unknown group descriptor %r"
                              % (self.descriptor,))
        if not self.ratio > 0:
            raise DomainError("relative mass must be positive")


@dataclass(frozen=True)
class MassPattern:
    groups: tuple[MassGroup, ...]
    k: int = 1

    def __post_init__(self):
        seen = [g.descriptor for g in self.groups]
        if len(set(seen)) != len(seen):
            raise DomainError("group descriptors must be disjoint")


@dataclass(frozen=True)
class GroupReport:
    descriptor: str
    ratio: float
    count: int
    expected_mass: float
    mean_mass: float
    max_deviation: float     # max |mass - expected| over the group
    spread: float            # max - min mass within the group


@dataclass(frozen=True)
class PatternReport:
    groups: tuple[GroupReport, ...]
    tol: float
    passed: bool

    @property
    def max_deviation(self) -> float:
        return max(g.max_deviation for g in self.groups)

    def measured_ratios(self) -> dict[str, float]:
        """Mean group masses relative to the smallest-ratio group."""
        base = min(self.groups, key=lambda g: g.ratio)
        if base.mean_mass == 0:
            return {g.descriptor: float("nan") for g in self.groups}
        return {g.descriptor: g.mean_mass / base.mean_mass
                for g in self.groups}

    def lines(self) -> list[str]:
        out = ["%-10s %5s %10s %22s %22s %10s"
               % ("group", "count", "ratio", "expected_mass", "mean_mass",
                  "max_dev")]
        for g in self.groups:
            out.append("%-10s %5d %10.6g %22.15e %22.15e %10.3e"
                       % (g.descriptor, g.count, g.ratio, g.expected_mass,
                          g.mean_mass, g.max_deviation))
        out.append("result: %s (tol %.1e)"
                   % ("PASS" if self.passed else "FAIL", self.tol))
        return out


def _group_points(descriptor: str, k: int) -> np.ndarray:
    if descriptor == "tk_zeros":
        return tk_zeros(k)
    if descriptor == "uk1_zeros":
        return uk1_zeros(k)
    if descriptor == "origin":
        return np.array([0.0])
    raise DomainError("no analytic points for %r" % (descriptor,))


def check_pattern(measure: DiscreteMeasure, pattern: MassPattern,
                  tol: float = 1e-9, tol_point: float = 1e-8
                  ) -> PatternReport:
    """Check a measure against an expected equal-mass pattern.

    Points are assigned to groups by matching the groups' analytic
    locations within ``tol_point``; leftovers go to the 'rest' group.
    Passes iff every mass deviates from its group's expected value by
    less than ``tol``.
    """
    pts, ms = measure.points, measure.masses
    assigned = np.full(len(pts), -1, dtype=int)
    counts: list[int] = []
    for gi, group in enumerate(pattern.groups):
        if group.descriptor == "rest":
            counts.append(0)   # filled below
            continue
        targets = _group_points(group.descriptor, pattern.k)
        n_matched = 0
        for s in targets:
            j = int(np.argmin(np.abs(pts - s)))
            if abs(pts[j] - s) > tol_point:
                raise PatternError(
                    "no support point within %.1e of the %s location %.17g"
                    % (tol_point, group.descriptor, s))
            if assigned[j] != -1:
                raise PatternError("support point %.17g claimed by two "
                                   "groups" % (pts[j],))
            assigned[j] = gi
            n_matched += 1
        counts.append(n_matched)
    rest_idx = next((i for i, g in enumerate(pattern.groups)
                     if g.descriptor == "rest"), None)
    leftovers = np.nonzero(assigned == -1)[0]
    if rest_idx is None:
        if len(leftovers):
            raise PatternError("%d support points not covered by any group"
                               % (len(leftovers),))
    else:
        assigned[leftovers] = rest_idx
        counts[rest_idx] = len(leftovers)

    denom = sum(g.ratio * c for g, c in zip(pattern.groups, counts))
    if denom <= 0:
        raise PatternError("pattern matches no support points")
    unit = 1.0 / denom

    reports = []
    ok = True
    for gi, (group, count) in enumerate(zip(pattern.groups, counts)):
        expected = group.ratio * unit
        sel = ms[assigned == gi]
        if count == 0:
            reports.append(GroupReport(group.descriptor, group.ratio, 0,
                                       expected, float("nan"), 0.0, 0.0))
            continue
        dev = float(np.max(np.abs(sel - expected)))
        reports.append(GroupReport(group.descriptor, group.ratio, count,
                                   expected, float(np.mean(sel)), dev,
                                   float(np.max(sel) - np.min(sel))))
        ok = ok and dev < tol
    return PatternReport(tuple(reports), tol, ok)


def pattern_catalog(spec: FamilySpec, n: int) -> MassPattern:
    """Expected mass pattern of the reversed measure at index n.

    gen-hermite: uniform for odd n; origin carries the extra factor
    gamma+1 for even n.  gen-ultraspherical: even n only, same ratios.
    sieved-first (n+1 = k*nu): T_k zeros carry gamma+1 for odd nu,
    uniform for even nu.  sieved-second (n+2 = k*nu): U_{k-1} zeros carry
    2 alpha + 1, and for even nu the T_k zeros additionally carry
    gamma+1.  Raises DomainError when n fits no schedule.
    """
    if n < 0:
        raise DomainError("need n >= 0")
    g1 = spec.gamma + 1.0

    if spec.kind == "gen-hermite":
        if n % 2 == 1:
            return MassPattern((MassGroup("rest", 1.0),))
        groups = [MassGroup("origin", g1)]
        if n > 0:
            groups.append(MassGroup("rest", 1.0))
        return MassPattern(tuple(groups))

    if spec.kind == "gen-ultraspherical":
        if n % 2 == 1:
            raise DomainError("no uniform pattern for odd indices of the "
                              "generalized ultraspherical family")
        groups = [MassGroup("origin", g1)]
        if n > 0:
            groups.append(MassGroup("rest", 1.0))
        return MassPattern(tuple(groups))

    k = spec.k
    a1 = 2.0 * spec.alpha + 1.0
    if spec.kind == "sieved-first":
        if (n + 1) % k != 0:
            raise DomainError("sieved-first patterns need n+1 divisible by "
                              "k, got n=%d, k=%d" % (n, k))
        nu = (n + 1) // k
        if nu % 2 == 1:
            groups = [MassGroup("tk_zeros", g1)]
            if nu > 1:
                groups.append(MassGroup("rest", 1.0))
            return MassPattern(tuple(groups), k)
        return MassPattern((MassGroup("rest", 1.0),), k)

    # sieved-second
    if (n + 2) % k != 0:
        raise DomainError("sieved-second patterns need n+2 divisible by k, "
                          "got n=%d, k=%d" % (n, k))
    nu = (n + 2) // k
    groups = []
    if k > 1:
        groups.append(MassGroup("uk1_zeros", a1))
    if nu % 2 == 0:
        groups.append(MassGroup("tk_zeros", g1))
        if nu > 2:
            groups.append(MassGroup("rest", 1.0))
    else:
        if nu > 1:
            groups.append(MassGroup("rest", 1.0))
    if not groups:
        raise DomainError("pattern is empty for n=%d, k=%d" % (n, k))
    return MassPattern(tuple(groups), k)
