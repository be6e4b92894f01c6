"""Dequantization of the nonnegative reals onto the max-plus algebra.

The change of variables u = h * ln(x), h > 0, carries ordinary (+, *)
arithmetic onto a deformed algebra with multiplication u + v and the
deformed addition

    u (+)_h v = h * ln(exp(u / h) + exp(v / h)),

which tends to max(u, v) as h -> 0 from above (and to min(u, v) for
h < 0).  The limits themselves are not represented here; callers switch
to the exact max-plus / min-plus instances in :mod:`tropos.semiring`.

All formulas are evaluated in overflow-safe log-sum-exp form: the
textbook expression exp(u / h) overflows double precision as soon as
u / h exceeds about 709, and small h is the whole point.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .semiring import NEG_INF, POS_INF

__all__ = [
    "phi_h",
    "add_h",
    "dequantize_complex",
    "deformation_residual",
    "residual_bound",
]

_LN2 = math.log(2.0)


def _check_h(h: float, positive_only=False):
    if not isinstance(h, (int, float)) or isinstance(h, bool) or not math.isfinite(h) or h == 0:
        raise DomainError(f"deformation parameter must be a nonzero finite real, got {h!r}")
    if positive_only and h < 0:
        raise DomainError(f"deformation parameter must be positive here, got {h!r}")


def phi_h(x: float, h: float):
    """Coordinate change x -> h * ln(x) from the nonnegative reals, h > 0.

    Maps 0 to the max-plus zero (the -inf marker) and 1 to the unit 0.
    """
    _check_h(h, positive_only=True)
    if not isinstance(x, (int, float)) or isinstance(x, bool) or math.isnan(x):
        raise DomainError(f"expected a nonnegative real, got {x!r}")
    if x < 0:
        raise DomainError(f"phi_h is undefined for negative x, got {x!r}")
    if x == 0:
        return NEG_INF
    return h * math.log(x)


def _zero_marker(h: float):
    return NEG_INF if h > 0 else POS_INF


def add_h(u, v, h: float):
    """Deformed addition u (+)_h v, computed stably.

    For h > 0 this is max(u, v) + h * ln(1 + exp(-|u - v| / h)); the sign
    flips around min(u, v) for h < 0.  The semiring zero of the targeted
    limit (-inf for h > 0, +inf for h < 0) is absorbed exactly.
    """
    _check_h(h)
    zero = _zero_marker(h)
    if u is zero and v is zero:
        return zero
    if u is zero:
        return _check_operand(v, h)
    if v is zero:
        return _check_operand(u, h)
    _check_operand(u, h)
    _check_operand(v, h)
    g = abs(h)
    bump = g * math.log1p(math.exp(-abs(u - v) / g))
    if h > 0:
        return (u if u >= v else v) + bump
    return (u if u <= v else v) - bump


def _check_operand(x, h: float):
    if isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x):
        return x
    raise DomainError(
        f"add_h operand must be finite or the semiring zero for sign(h)={'+' if h > 0 else '-'}, "
        f"got {x!r}"
    )


def dequantize_complex(z: complex, h: float):
    """Log-modulus route from the complex numbers: z -> phi_h(|z|).

    z = 0 maps to the max-plus zero.
    """
    _check_h(h, positive_only=True)
    return phi_h(abs(complex(z)), h)


def deformation_residual(u: float, v: float, h: float) -> float:
    """Gap between the deformed and the limiting addition.

    For h > 0 this is add_h(u, v, h) - max(u, v), computed in closed form
    as |h| * ln(1 + exp(-|u - v| / |h|)) to avoid the cancellation of the
    add-then-subtract route; for h < 0 it is min(u, v) - add_h(u, v, h),
    which is the same expression.  Always lies in [0, |h| * ln 2].
    """
    _check_h(h)
    _check_operand(u, h)
    _check_operand(v, h)
    g = abs(h)
    return g * math.log1p(math.exp(-abs(u - v) / g))


def residual_bound(h: float) -> float:
    """Worst-case residual |h| * ln 2, attained at u = v."""
    _check_h(h)
    return abs(h) * _LN2
