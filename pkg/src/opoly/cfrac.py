"""Terminated J-fractions: evaluation, reversal, sieve contraction, and the
closed-form transform of the two-level sieved chain with its branch rule.

A terminated fraction with coefficients (b_1..b_{n+1}, a_1..a_n) is

    Phi_n(z) = 1 / (z - b_1 - a_1 / (z - b_2 - ... - a_n / (z - b_{n+1}))),

the Stieltjes transform of a discrete probability measure supported on the
zeros of the degree-(n+1) denominator polynomial.

Two reversal notions coexist and are *not* the same measure:

* reversing the recurrence coefficients (b and a orders flipped), the
  natural notion for measures on the whole line;
* reversing the chain parameters p_2..p_{2n} of a symmetric measure on
  [-1, 1], which keeps the support but redistributes masses differently.

``reverse`` dispatches on the argument type accordingly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, OnCutError, PatternError, PoleError
from .polycore import ChainSequence, CoefficientSequence
from .specfun import chebyshev_T, chebyshev_U

_POLE_FLOOR = 1e-300


@dataclass(frozen=True)
class JFraction:
    """A coefficient sequence together with the number of retained a-terms."""

    coeffs: CoefficientSequence
    n: int | None = None

    def __post_init__(self):
        n = self.coeffs.n if self.n is None else self.n
        if not 0 <= n <= self.coeffs.n:
            raise DomainError("cannot retain %d of %d terms"
                              % (n, self.coeffs.n))
        object.__setattr__(self, "n", n)

    @property
    def effective(self) -> CoefficientSequence:
        return self.coeffs.truncated(self.n)


def _coeffs_of(f) -> CoefficientSequence:
    if isinstance(f, JFraction):
        return f.effective
    if isinstance(f, CoefficientSequence):
        return f
    if isinstance(f, ChainSequence):
        return f.to_coefficients()
    raise TypeError("expected JFraction, CoefficientSequence or "
                    "ChainSequence, got %r" % (type(f),))


def eval_terminated(f, z) -> complex:
    """Evaluate the terminated fraction at z by backward recurrence.

    Raises PoleError when an intermediate denominator underflows, which
    happens when z collides with a support point.
    """
    c = _coeffs_of(f)
    b, a = c.b, c.a
    z = complex(z)
    d = z - b[-1]
    for j in range(len(a) - 1, -1, -1):
        if abs(d) < _POLE_FLOOR:
            raise PoleError("denominator underflow at level %d" % (j + 1,))
        d = z - b[j] - a[j] / d
    if abs(d) < _POLE_FLOOR:
        raise PoleError("evaluation at a pole of the fraction")
    return 1.0 / d


def reverse(f):
    """Reverse a fraction.

    CoefficientSequence / JFraction: flips the b- and a-orders.
    ChainSequence: flips the chain parameter order (the symmetric-measure
    notion; same support points, different masses).
    """
    if isinstance(f, JFraction):
        return JFraction(reverse(f.effective))
    if isinstance(f, CoefficientSequence):
        return CoefficientSequence(f.b[::-1], f.a[::-1])
    if isinstance(f, ChainSequence):
        return ChainSequence(f.p[::-1])
    raise TypeError("cannot reverse %r" % (type(f),))


def sieve_contract(p: ChainSequence, k: int, tol: float = 1e-12
                   ) -> ChainSequence:
    """Contract a sieved chain (p_{2i} = 1/2 off the k-grid) to the chain
    (p_{2k}, p_{4k}, ...) of the measure mu* with
    Phi(z) = U_{k-1}(z) * Phi*(T_k(z))."""
    if k < 1:
        raise DomainError("sieve order k must be >= 1")
    if k == 1:
        return p
    off_grid = [p.p[i - 1] for i in range(1, p.n + 1) if i % k != 0]
    if any(abs(x - 0.5) > tol for x in off_grid):
        raise PatternError("chain is not sieved with order %d: off-grid "
                           "parameters differ from 1/2" % (k,))
    return ChainSequence(p.p[k - 1::k])


def kappa_mu(g: float, h: float) -> tuple[float, float]:
    """kappa = g(1-h) + h(1-g) and mu = g(1-g)h(1-h); symmetric in (g, h)."""
    if not (0.0 < g < 1.0 and 0.0 < h < 1.0):
        raise DomainError("need g, h in (0, 1)")
    return g * (1.0 - h) + h * (1.0 - g), g * (1.0 - g) * h * (1.0 - h)


@dataclass(frozen=True)
class BranchedSqrt:
    """A square root sqrt(w^2 - 1) selected so that |w + root| > 1."""

    argument: complex
    root: complex


def branched_sqrt(w) -> BranchedSqrt:
    """Pick the root of r^2 = w^2 - 1 with |w + r| > 1.

    Since |w + r| * |w - r| = 1, exactly one sign qualifies unless both
    moduli equal 1, i.e. w lies on [-1, 1]; that raises OnCutError.
    """
    w = complex(w)
    r = cmath.sqrt(w * w - 1.0)
    plus = abs(w + r)
    minus = abs(w - r)
    if abs(plus - 1.0) < 1e-12 and abs(minus - 1.0) < 1e-12:
        raise OnCutError("branch point ambiguity: argument on the cut")
    return BranchedSqrt(w, r if plus > 1.0 else -r)


def phi_star(z, g: float, h: float, k: int) -> complex:
    """Closed-form Stieltjes transform of the symmetric measure whose chain
    is 1/2 off the k-grid and alternates g, h on it:

        (1/(2h)) [ (1-2h) T_k^2(z) + (h-g) - sqrt((T_k^2(z)-kappa)^2 - 4 mu) ]
        / [ U_{k-1}(z) T_k(z) (1 - z^2) ],

    with the square root branch chosen by |w + sqrt(w^2-1)| > 1 for
    w = (T_k^2(z) - kappa)/(2 sqrt(mu)).
    """
    if k < 1:
        raise DomainError("sieve order k must be >= 1")
    kap, mu = kappa_mu(g, h)
    z = complex(z)
    t = chebyshev_T(k, z)
    u = chebyshev_U(k - 1, z)
    t2 = t * t
    two_sqrt_mu = 2.0 * math.sqrt(mu)
    w = (t2 - kap) / two_sqrt_mu
    s = two_sqrt_mu * branched_sqrt(w).root
    den = 2.0 * h * u * t * (1.0 - z * z)
    if abs(den) < _POLE_FLOOR:
        raise PoleError("evaluation at a zero of U_{k-1} T_k (1 - z^2)")
    return ((1.0 - 2.0 * h) * t2 + (h - g) - s) / den
