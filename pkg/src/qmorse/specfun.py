"""Real-domain error functions and a formal complex evaluator.

Every closed-form thermodynamic expression in this package reduces to
combinations of erf/erfc on the real axis and the imaginary error function

    erfi(x) = -i erf(i x) = (2/sqrt(pi)) * integral_0^x exp(t^2) dt,

which appears whenever a Boltzmann sum over a quadratic-in-n spectrum is
approximated by an integral.  erfi grows like exp(x^2)/(x sqrt(pi)), so the
scaled variant

    erfi_scaled(x) = exp(-x^2) * erfi(x)

is provided for ratio expressions (entropy, internal energy) that would
otherwise overflow.

Evaluation strategy
-------------------
* ``erf``/``erfc`` delegate to the C library (double precision, safe against
  cancellation for large arguments) behind the domain checks this package
  guarantees.
* ``erfi`` uses its Maclaurin series for |x| <= 6 (all terms positive, no
  cancellation) and exp(x^2) * asymptotic-series-of-the-scaled-function
  above.  The asymptotic tail reaches double precision only for x >~ 5.5,
  which fixes the crossover; at x = 6 both branches agree to ~1e-14.
* ``erfc_formal`` covers exactly the region the thermodynamic formulas
  visit: the real axis, the imaginary axis (via erfc(iy) = 1 - i erfi(y)),
  and small |z| through the Maclaurin series of erf.
"""

from __future__ import annotations

import math

from .errors import DomainError, RangeError

SQRT_PI = math.sqrt(math.pi)
TWO_OVER_SQRT_PI = 2.0 / SQRT_PI

# exp(x^2) overflows IEEE doubles just past x = 26.5; both erfi(x) and
# erfc(x) (underflow side) become unrepresentable there.
ERFI_XMAX = 26.5

_SERIES_CROSSOVER = 6.0
_COMPLEX_SERIES_RADIUS = 4.0


def _require_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def erf(x: float) -> float:
    """Error function; odd, strictly increasing, |erf| < 1."""
    return math.erf(_require_finite(x, "x"))


def erfc(x: float) -> float:
    """Complementary error function 1 - erf(x), cancellation-safe for x > 6.

    Raises RangeError for x > 26.5 where the result underflows below the
    smallest normal double and the strict-positivity contract would break.
    """
    x = _require_finite(x, "x")
    if x > ERFI_XMAX:
        raise RangeError(
            f"erfc({x}) underflows double precision (threshold {ERFI_XMAX})",
            value=x, threshold=ERFI_XMAX)
    return math.erfc(x)


def _erfi_series(x: float) -> float:
    # sum_k x^(2k+1) / (k! (2k+1)); positive terms, stable at any x that
    # does not overflow.  Convergence needs k >~ x^2 terms.
    x2 = x * x
    power = x          # x^(2k+1) / k!
    total = x
    k = 0
    while True:
        k += 1
        power *= x2 / k
        term = power / (2 * k + 1)
        total += term
        if abs(term) <= abs(total) * 1e-17:
            return total * TWO_OVER_SQRT_PI
        if k > 5000:  # pragma: no cover - unreachable for |x| <= 26.5
            raise RangeError("erfi series failed to converge", value=x)


def _erfi_scaled_asymptotic(x: float) -> float:
    # exp(-x^2) erfi(x) ~ (1/(x sqrt(pi))) sum_k (2k-1)!! / (2x^2)^k,
    # truncated at the smallest term.  Floor ~ exp(-x^2): eps-level for x > 6.
    inv2x2 = 1.0 / (2.0 * x * x)
    term = 1.0
    total = 1.0
    k = 0
    while True:
        k += 1
        nxt = term * (2 * k - 1) * inv2x2
        if nxt >= term or nxt <= total * 1e-17:
            if nxt < term:
                total += nxt
            break
        term = nxt
        total += term
    return total / (x * SQRT_PI)


def erfi(x: float) -> float:
    """Imaginary error function -i erf(ix); odd, defined for |x| <= 26.5."""
    x = _require_finite(x, "x")
    ax = abs(x)
    if ax > ERFI_XMAX:
        raise RangeError(
            f"erfi({x}) overflows double precision (threshold {ERFI_XMAX})",
            value=x, threshold=ERFI_XMAX)
    if ax <= _SERIES_CROSSOVER:
        return _erfi_series(x)
    value = math.exp(ax * ax) * _erfi_scaled_asymptotic(ax)
    return math.copysign(value, x)


def erfi_scaled(x: float) -> float:
    """exp(-x^2) * erfi(x) for x >= 0, representable for every finite x.

    Tends to 1/(x sqrt(pi)) * (1 + 1/(2x^2) + ...) as x grows, which keeps
    ratios like u * exp(u^2) / erfi(u) finite far beyond the erfi range.
    """
    x = _require_finite(x, "x")
    if x < 0.0:
        raise DomainError(f"erfi_scaled requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if x <= _SERIES_CROSSOVER:
        return math.exp(-x * x) * _erfi_series(x)
    return _erfi_scaled_asymptotic(x)


def _erf_series_complex(z: complex) -> complex:
    z2 = z * z
    power = z
    total = z
    k = 0
    while True:
        k += 1
        power *= -z2 / k
        term = power / (2 * k + 1)
        total += term
        if abs(term) <= (abs(total) + 1.0) * 1e-17 or k > 200:
            return total * TWO_OVER_SQRT_PI


def erfc_formal(z: complex) -> complex:
    """Complex erfc on the region the closed forms require.

    Supports the real axis, the imaginary axis (erfc(iy) = 1 - i erfi(y),
    principal branch), and |z| <= 4 via the Maclaurin series.  Arguments
    outside that region raise RangeError; the thermodynamic formulas never
    produce them.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"erfc_formal requires finite components, got {z!r}")
    if z.imag == 0.0:
        return complex(erfc(z.real), 0.0)
    if z.real == 0.0:
        return complex(1.0, -erfi(z.imag))
    if abs(z) <= _COMPLEX_SERIES_RADIUS:
        return 1.0 - _erf_series_complex(z)
    raise RangeError(
        f"erfc_formal({z}) outside the supported region "
        f"(axes or |z| <= {_COMPLEX_SERIES_RADIUS})",
        value=abs(z), threshold=_COMPLEX_SERIES_RADIUS)
