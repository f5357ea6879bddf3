"""Special functions needed by the decoherence integrals.

Three entry points: ``gamma``, the confluent hypergeometric ``hyp1f1`` and
the single generalized hypergeometric instance ``hyp2f2_11_32_2``.  The
hypergeometric series alternate violently for large negative arguments, so
both use cancellation-safe evaluation paths (Kummer transformation for
1F1, a decimal extended-precision accumulator for 2F2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext


class SpecialFunctionError(Exception):
    """Base class for special-function evaluation failures."""


class PoleError(SpecialFunctionError, ValueError):
    """Evaluation requested at a pole of the function or a parameter pole."""


class ConvergenceError(SpecialFunctionError, ArithmeticError):
    """Series did not reach the requested tolerance within the term budget."""


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for hypergeometric series summation."""

    rel_tol: float = 1e-14
    max_terms: int = 10_000

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0):
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_CONTROL = SeriesControl()

# Compensated double summation is accurate to ~2e-14 for the 2F2 series up
# to |z| = 10; beyond that the alternating cancellation outruns double
# precision and the decimal accumulator takes over.
_HYP2F2_DOUBLE_LIMIT = 10.0


def _is_nonpositive_integer(x: float, tol: float = 0.0) -> bool:
    if x > 0:
        return False
    n = round(x)
    return n <= 0 and abs(x - n) <= tol


def _sinpi(x: float) -> float:
    """sin(pi*x) with argument reduction done in exact arithmetic."""
    n = round(x)
    r = x - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def gamma(x: float) -> float:
    """Gamma function on the real line, poles excluded.

    Positive arguments go through the platform implementation; negative
    ones through the reflection formula Gamma(x)Gamma(1-x) = pi/sin(pi*x).
    """
    if not math.isfinite(x):
        raise ValueError(f"gamma requires a finite argument, got {x}")
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at non-positive integer {x}")
    if x > 0:
        return math.gamma(x)
    return math.pi / (_sinpi(x) * math.gamma(1.0 - x))


def _kahan_series(term_ratio, control: SeriesControl, z_scale: float) -> float:
    """Sum 1 + sum_k t_k with Neumaier compensation.

    ``term_ratio(k)`` returns t_{k+1}/t_k.  Termination requires the tail
    to be past the term-magnitude hump (k > z_scale) and two consecutive
    terms below rel_tol relative to the running sum.
    """
    total = 1.0
    comp = 0.0
    term = 1.0
    small_streak = 0
    for k in range(control.max_terms):
        term *= term_ratio(k)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        if abs(term) <= control.rel_tol * abs(total + comp):
            small_streak += 1
            if small_streak >= 2 and k >= z_scale:
                return total + comp
        else:
            small_streak = 0
        if term == 0.0:
            return total + comp
    raise ConvergenceError(
        f"series did not converge within {control.max_terms} terms"
    )


def _hyp1f1_series(a: float, b: float, z: float, control: SeriesControl) -> float:
    if z == 0.0:
        return 1.0
    # A terminating series (a a non-positive integer) is summed exactly.
    return _kahan_series(
        lambda k: (a + k) / (b + k) * z / (k + 1), control, abs(z)
    )


def hyp1f1(a: float, b: float, z: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Confluent hypergeometric 1F1(a; b; z) for real arguments.

    For z < -1 the Kummer transformation 1F1(a;b;z) = e^z 1F1(b-a;b;-z)
    is applied so the series is summed with same-sign terms.
    """
    if _is_nonpositive_integer(b):
        raise PoleError(f"hyp1f1 parameter pole: b = {b} is a non-positive integer")
    if not math.isfinite(z):
        raise ValueError(f"hyp1f1 requires finite z, got {z}")
    if z < -1.0 and not _is_nonpositive_integer(a):
        return math.exp(z) * _hyp1f1_series(b - a, b, -z, control)
    return _hyp1f1_series(a, b, z, control)


def _hyp2f2_decimal(z: float, control: SeriesControl) -> float:
    # Largest term grows like e^{|z|} / |z|^2, so the working precision
    # has to scale with |z| to survive the cancellation.
    digits = 35 + int(0.45 * abs(z))
    with localcontext() as ctx:
        ctx.prec = digits
        zd = Decimal(z)
        term = Decimal(1)
        total = Decimal(1)
        tol = Decimal(10) ** (-(digits - 5))
        for k in range(control.max_terms):
            term = term * zd * (k + 1) / ((2 * k + 3) * (k + 2)) * 2
            total += term
            if abs(term) <= tol * abs(total) and k >= abs(z):
                return float(total)
        raise ConvergenceError(
            f"2F2 series did not converge within {control.max_terms} terms"
        )


def hyp2f2_11_32_2(z: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """2F2({1,1}; {3/2,2}; z), the fixed-parameter case used at s = 1."""
    if not math.isfinite(z):
        raise ValueError(f"hyp2f2_11_32_2 requires finite z, got {z}")
    if z == 0.0:
        return 1.0
    if z >= -_HYP2F2_DOUBLE_LIMIT:
        return _kahan_series(
            lambda k: (k + 1) * z / ((k + 1.5) * (k + 2)), control, abs(z)
        )
    return _hyp2f2_decimal(z, control)
