"""Recurrence coefficients and chain sequences for the four polynomial
families: generalized Hermite, generalized ultraspherical, and the sieved
ultraspherical families of the first and second kind.

Everything works on the monic normalization
    P_{n+1}(x) = (x - b_{n+1}) P_n(x) - a_n P_{n-1}(x),
so a coefficient sequence is the pair (b_1..b_{n+1}, a_1..a_n).  Symmetric
measures on [-1, 1] are equivalently described by their minimal chain
sequence p_2, p_4, ..., with a_i = (1 - p_{2i-2}) p_{2i} and p_0 = 0.

All coefficients are evaluated in double precision straight from the
closed forms; nothing is accumulated recursively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_FAMILY_KINDS = ("gen-hermite", "gen-ultraspherical", "sieved-first",
                 "sieved-second")


def _frozen_array(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CoefficientSequence:
    """Monic three-term recurrence data: diagonal b (n+1 terms) and
    off-diagonal products a (n terms, all positive)."""

    b: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        b = _frozen_array(self.b)
        a = _frozen_array(self.a)
        if b.ndim != 1 or a.ndim != 1:
            raise DomainError("coefficient sequences must be 1-d")
        if len(b) != len(a) + 1:
            raise DomainError(
                "need len(b) == len(a) + 1, got %d and %d" % (len(b), len(a)))
        if len(a) and not np.all(a > 0):
            raise DomainError("all off-diagonal products a_i must be > 0")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a", a)

    @classmethod
    def symmetric(cls, a) -> "CoefficientSequence":
        a = np.asarray(a, dtype=float)
        return cls(np.zeros(len(a) + 1), a)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def is_symmetric(self) -> bool:
        return bool(np.all(self.b == 0.0))

    def truncated(self, n: int) -> "CoefficientSequence":
        if not 0 <= n <= self.n:
            raise DomainError("cannot truncate length-%d sequence to %d"
                              % (self.n, n))
        return CoefficientSequence(self.b[: n + 1], self.a[:n])

    def to_chain(self, tol: float = 1e-12) -> "ChainSequence":
        """Minimal chain sequence of a symmetric sequence on [-1, 1]."""
        if len(self.b) and np.max(np.abs(self.b)) > tol:
            raise DomainError("chain form requires a zero diagonal")
        p = np.empty(self.n)
        prev = 0.0
        for i, ai in enumerate(self.a):
            p[i] = ai / (1.0 - prev)
            prev = p[i]
        return ChainSequence(p)


@dataclass(frozen=True)
class ChainSequence:
    """Minimal chain parameters p_2, p_4, ..., p_{2n} of a symmetric
    measure on [-1, 1]; every entry lies in (0, 1)."""

    p: np.ndarray

    def __post_init__(self):
        p = _frozen_array(self.p)
        if p.ndim != 1:
            raise DomainError("chain sequence must be 1-d")
        if len(p) and not (np.all(p > 0.0) and np.all(p < 1.0)):
            raise DomainError("chain parameters must lie strictly in (0, 1)")
        object.__setattr__(self, "p", p)

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def q(self) -> np.ndarray:
        return 1.0 - self.p

    def to_coefficients(self) -> CoefficientSequence:
        """Products a_i = q_{2i-2} p_{2i} (with q_0 = 1) in monic form."""
        a = np.array(self.p)
        a[1:] *= 1.0 - self.p[:-1]
        return CoefficientSequence.symmetric(a)

    @classmethod
    def from_coefficients(cls, coeffs: CoefficientSequence,
                          tol: float = 1e-12) -> "ChainSequence":
        return coeffs.to_chain(tol)


@dataclass(frozen=True)
class FamilySpec:
    """Which polynomial family, plus its parameters.

    gamma > -1 always; alpha > -1/2 for the families on [-1, 1];
    k >= 1 is the sieve order (1 for the non-sieved families).
    """

    kind: str
    gamma: float
    alpha: float | None = None
    k: int = 1

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise DomainError("unknown family %r" % (self.kind,))
        if not self.gamma > -1:
            raise DomainError("gamma must be > -1, got %r" % (self.gamma,))
        if self.kind == "gen-hermite":
            if self.alpha is not None:
                raise DomainError("gen-hermite takes no alpha")
        else:
            if self.alpha is None or not self.alpha > -0.5:
                raise DomainError("alpha must be > -1/2, got %r"
                                  % (self.alpha,))
        if not (isinstance(self.k, int) and self.k >= 1):
            raise DomainError("sieve order k must be an integer >= 1")
        if self.kind in ("gen-hermite", "gen-ultraspherical") and self.k != 1:
            raise DomainError("k is only meaningful for sieved families")

    @classmethod
    def gen_hermite(cls, gamma: float) -> "FamilySpec":
        return cls("gen-hermite", gamma)

    @classmethod
    def ultraspherical(cls, alpha: float, gamma: float) -> "FamilySpec":
        return cls("gen-ultraspherical", gamma, alpha)

    @classmethod
    def sieved_first(cls, alpha: float, gamma: float, k: int) -> "FamilySpec":
        return cls("sieved-first", gamma, alpha, k)

    @classmethod
    def sieved_second(cls, alpha: float, gamma: float, k: int) -> "FamilySpec":
        return cls("sieved-second", gamma, alpha, k)

    @property
    def on_unit_interval(self) -> bool:
        return self.kind != "gen-hermite"

    def coefficients(self, n: int) -> CoefficientSequence:
        """Monic recurrence coefficients a_1..a_n (b_i = 0 throughout)."""
        if self.kind == "gen-hermite":
            return hermite_coeffs(self.gamma, n)
        if self.kind == "gen-ultraspherical":
            return ultraspherical_coeffs(self.alpha, self.gamma, n)
        kind = "first" if self.kind == "sieved-first" else "second"
        need = _sieved_An_count(kind, self.k, n)
        A = [sieved_ultraspherical_An(self.alpha, self.gamma, j)
             for j in range(need)]
        return sieved_coeffs(kind, A, self.k, n)

    def chain(self, n: int) -> ChainSequence:
        if not self.on_unit_interval:
            raise DomainError("gen-hermite has no chain sequence")
        return self.coefficients(n).to_chain()


def hermite_coeffs(gamma: float, n: int) -> CoefficientSequence:
    """Recurrence products of the weight |x|^gamma exp(-x^2):
    a_j = j/2 for even j and (j + gamma)/2 for odd j."""
    if not gamma > -1:
        raise DomainError("gamma must be > -1, got %r" % (gamma,))
    if n < 0:
        raise DomainError("need n >= 0")
    j = np.arange(1, n + 1, dtype=float)
    a = np.where(j % 2 == 0, j / 2.0, (j + gamma) / 2.0)
    return CoefficientSequence.symmetric(a)


def ultraspherical_chain(alpha: float, gamma: float, n: int) -> ChainSequence:
    """Minimal chain of the weight |x|^gamma (1-x^2)^(alpha-1/2):
    p_{2j} = j/(2 alpha + gamma + 2j) for even j and
    (j + gamma)/(2 alpha + gamma + 2j) for odd j."""
    _check_ultra(alpha, gamma)
    if n < 0:
        raise DomainError("need n >= 0")
    j = np.arange(1, n + 1, dtype=float)
    num = np.where(j % 2 == 0, j, j + gamma)
    return ChainSequence(num / (2.0 * alpha + gamma + 2.0 * j))


def ultraspherical_coeffs(alpha: float, gamma: float,
                          n: int) -> CoefficientSequence:
    """Recurrence products for |x|^gamma (1-x^2)^(alpha-1/2), from the
    two-case closed form (even/odd index), not from the chain."""
    _check_ultra(alpha, gamma)
    if n < 0:
        raise DomainError("need n >= 0")
    s = 2.0 * alpha + gamma
    a = np.empty(n)
    for i in range(1, n + 1):
        if (i + 1) % 2 == 0:                      # a_i with i+1 = 2m
            m = (i + 1) // 2
            a[i - 1] = ((2 * m - 1 + gamma) * (2 * m - 2 + s)
                        / ((4 * m - 4 + s) * (4 * m - 2 + s)))
        else:                                     # a_i with i+1 = 2m+1
            m = i // 2
            a[i - 1] = (2 * m * (2 * m + 2 * alpha - 1)
                        / ((4 * m - 2 + s) * (4 * m + s)))
    return CoefficientSequence.symmetric(a)


def sieved_ultraspherical_An(alpha: float, gamma: float, j: int) -> float:
    """Random-walk parameter A_j of the sieved construction:
    (j+1+gamma)/(2j+2 alpha+gamma+2) for even j, (j+1)/(...) for odd j."""
    _check_ultra(alpha, gamma)
    if j < 0:
        raise DomainError("need j >= 0")
    den = 2.0 * j + 2.0 * alpha + gamma + 2.0
    num = j + 1.0 + gamma if j % 2 == 0 else j + 1.0
    return num / den


def sieved_chain(A, k: int, n: int) -> ChainSequence:
    """First-kind sieved chain: p_{2i} = 1/2 except p_{2mk} = A_{m-1}."""
    if k < 1:
        raise DomainError("sieve order k must be >= 1")
    if n < 0:
        raise DomainError("need n >= 0")
    A = [float(x) for x in A]
    if any(not 0.0 < x < 1.0 for x in A):
        raise DomainError("random-walk parameters must lie in (0, 1)")
    need = n // k
    if len(A) < need:
        raise DomainError("need %d random-walk parameters, got %d"
                          % (need, len(A)))
    p = np.full(n, 0.5)
    for m in range(1, need + 1):
        p[m * k - 1] = A[m - 1]
    return ChainSequence(p)


def _sieved_An_count(kind: str, k: int, n_max: int) -> int:
    return n_max // k if kind == "first" else (n_max + 1) // k


def sieved_coeffs(kind: str, A, k: int, n_max: int) -> CoefficientSequence:
    """Monic recurrence products of the sieved random-walk polynomials.

    ``A`` lists the random-walk parameters A_0, A_1, ... (B_j = 1 - A_j).
    First kind: the chain has p_{2i} = 1/2 off the k-grid and
    p_{2mk} = A_{m-1}.  Second kind: a_n = r_{n-1} (1 - r_n) where
    r_j = 1/2 except r_{mk-1} = A_{m-1}.
    """
    if kind not in ("first", "second"):
        raise DomainError("kind must be 'first' or 'second'")
    if k < 1:
        raise DomainError("sieve order k must be >= 1")
    if n_max < 0:
        raise DomainError("need n_max >= 0")
    A = [float(x) for x in A]
    if any(not 0.0 < x < 1.0 for x in A):
        raise DomainError("random-walk parameters must lie in (0, 1)")
    need = _sieved_An_count(kind, k, n_max)
    if len(A) < need:
        raise DomainError("need %d random-walk parameters for n_max=%d, "
                          "got %d" % (need, n_max, len(A)))

    if kind == "first":
        return sieved_chain(A, k, n_max).to_coefficients()

    def r(j: int) -> float:       # walk coefficient at level j
        if (j + 1) % k == 0:
            return A[(j + 1) // k - 1]
        return 0.5

    a = np.array([r(i - 1) * (1.0 - r(i)) for i in range(1, n_max + 1)])
    return CoefficientSequence.symmetric(a)


def degree_dependent_coeffs(spec: FamilySpec, alpha_schedule, gamma_schedule,
                            l: int) -> CoefficientSequence:
    """Coefficients of the degree-l sieved polynomial whose parameters are
    frozen at schedule index floor((l-1)/k)."""
    if spec.kind not in ("sieved-first", "sieved-second"):
        raise DomainError("degree-dependent parameters apply to the sieved "
                          "families only")
    if l < 1:
        raise DomainError("need degree l >= 1")
    idx = (l - 1) // spec.k
    if len(alpha_schedule) <= idx or len(gamma_schedule) <= idx:
        raise DomainError("schedule too short: need index %d" % (idx,))
    alpha_l = float(alpha_schedule[idx])
    gamma_l = float(gamma_schedule[idx])
    _check_ultra(alpha_l, gamma_l)
    kind = "first" if spec.kind == "sieved-first" else "second"
    need = _sieved_An_count(kind, spec.k, l - 1)
    A = [sieved_ultraspherical_An(alpha_l, gamma_l, j) for j in range(need)]
    return sieved_coeffs(kind, A, spec.k, l - 1)


def _check_ultra(alpha: float, gamma: float) -> None:
    if not gamma > -1:
        raise DomainError("gamma must be > -1, got %r" % (gamma,))
    if not alpha > -0.5:
        raise DomainError("alpha must be > -1/2, got %r" % (alpha,))
