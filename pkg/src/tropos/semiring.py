"""Idempotent semiring instances behind one small abstract interface.

Every solver in this package is written once against :class:`Semiring`;
swapping the algebra (max-plus, min-plus, Boolean, ...) changes what a
computation means, never how it is coded.

Carrier values are plain Python payloads: ints/floats for real carriers,
``bool`` for the Boolean semiring, and the tagged markers :data:`NEG_INF`
and :data:`POS_INF` for the infinite endpoints.  The markers support no
arithmetic on purpose: absorption ``0 * x = 0`` is enforced by rule, so
expressions that would be indeterminate in float arithmetic (such as
``-inf + inf``) can never produce a NaN.
"""

from __future__ import annotations

import math

from .errors import (
    CapabilityError,
    NoInverseError,
    ParseError,
    SemiringMismatchError,
)

__all__ = [
    "NEG_INF",
    "POS_INF",
    "Semiring",
    "MAXPLUS",
    "MINPLUS",
    "MAXMIN",
    "BOOLEAN",
    "UNITMAXMIN",
    "NONNEG",
    "semiring",
    "order_key",
]


class _Extreme:
    """Tagged infinity used as a carrier endpoint."""

    __slots__ = ("_label", "_key")

    def __init__(self, label: str, key: float):
        self._label = label
        self._key = key

    def __repr__(self) -> str:
        return self._label


NEG_INF = _Extreme("-inf", -math.inf)
POS_INF = _Extreme("+inf", math.inf)


def order_key(x) -> float:
    """Conventional numeric order key; the markers sort as IEEE infinities."""
    return x._key if isinstance(x, _Extreme) else x


def _is_real(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


class Semiring:
    """A concrete semiring: carrier, zero, one, operations, capability flags.

    Instances are immutable and stateless; all operations are pure, so one
    instance may be shared freely across threads.
    """

    name: str = ""
    zero = None
    one = None
    is_idempotent = True
    is_semifield = False
    is_radicable = False

    def contains(self, x) -> bool:
        """True iff ``x`` is a member of this semiring's carrier."""
        raise NotImplementedError

    def check(self, x):
        if not self.contains(x):
            raise SemiringMismatchError(f"{x!r} is not a {self.name} value")
        return x

    def add(self, a, b):
        """a ⊕ b"""
        raise NotImplementedError

    def mul(self, a, b):
        """a ⊙ b"""
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        """Standard partial order: a ⪯ b iff a ⊕ b = b.

        For min-plus this is the reverse of the conventional numeric order.
        """
        if not self.is_idempotent:
            raise CapabilityError(f"{self.name} is not idempotent: no standard order")
        return self.add(a, b) == b

    def inv(self, a):
        """Multiplicative inverse of a nonzero element (semifields only)."""
        if not self.is_semifield:
            raise CapabilityError(f"{self.name} is not a semifield")
        self.check(a)
        if a == self.zero:
            raise NoInverseError(f"the {self.name} zero has no inverse")
        return self._invert(a)

    def nth_root(self, a, n: int):
        """A solution x of x ⊙ ... ⊙ x (n factors) = a (radicable semirings only)."""
        if not self.is_radicable:
            raise CapabilityError(f"{self.name} is not radicable")
        if n < 1:
            raise ValueError(f"root index must be a positive integer, got {n}")
        self.check(a)
        return self._root(a, n)

    def _invert(self, a):
        raise NotImplementedError

    def _root(self, a, n: int):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<semiring {self.name}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, Semiring) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)


class _MaxPlus(Semiring):
    """Reals with -inf; ⊕ = max, ⊙ = +, zero = -inf, one = 0."""

    name = "maxplus"
    zero = NEG_INF
    one = 0
    is_idempotent = True
    is_semifield = True
    is_radicable = True

    def contains(self, x):
        return x is NEG_INF or _is_real(x)

    def add(self, a, b):
        self.check(a)
        self.check(b)
        if a is NEG_INF:
            return b
        if b is NEG_INF:
            return a
        return a if a >= b else b

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        if a is NEG_INF or b is NEG_INF:
            return NEG_INF
        return a + b

    def _invert(self, a):
        return -a

    def _root(self, a, n):
        return NEG_INF if a is NEG_INF else a / n


class _MinPlus(Semiring):
    """Reals with +inf; ⊕ = min, ⊙ = +, zero = +inf, one = 0."""

    name = "minplus"
    zero = POS_INF
    one = 0
    is_idempotent = True
    is_semifield = True
    is_radicable = True

    def contains(self, x):
        return x is POS_INF or _is_real(x)

    def add(self, a, b):
        self.check(a)
        self.check(b)
        if a is POS_INF:
            return b
        if b is POS_INF:
            return a
        return a if a <= b else b

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        if a is POS_INF or b is POS_INF:
            return POS_INF
        return a + b

    def _invert(self, a):
        return -a

    def _root(self, a, n):
        return POS_INF if a is POS_INF else a / n


class _MaxMin(Semiring):
    """Reals with both infinities; ⊕ = max, ⊙ = min (the bottleneck algebra)."""

    name = "maxmin"
    zero = NEG_INF
    one = POS_INF
    is_idempotent = True
    is_semifield = False
    # x ⊙ x = x, so x^n = a always has the solution x = a.
    is_radicable = True

    def contains(self, x):
        return x is NEG_INF or x is POS_INF or _is_real(x)

    def add(self, a, b):
        self.check(a)
        self.check(b)
        return a if order_key(a) >= order_key(b) else b

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        return a if order_key(a) <= order_key(b) else b

    def _root(self, a, n):
        return a


class _Boolean(Semiring):
    """{0, 1} with ⊕ = or, ⊙ = and."""

    name = "boolean"
    zero = False
    one = True
    is_idempotent = True
    is_semifield = True
    is_radicable = True

    def contains(self, x):
        return isinstance(x, bool)

    def add(self, a, b):
        self.check(a)
        self.check(b)
        return a or b

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        return a and b

    def _invert(self, a):
        return a

    def _root(self, a, n):
        return a


class _UnitMaxMin(Semiring):
    """The segment [0, 1] with ⊕ = max, ⊙ = min (Zadeh fuzzy operations)."""

    name = "unitmaxmin"
    zero = 0.0
    one = 1.0
    is_idempotent = True
    is_semifield = False
    is_radicable = True

    def contains(self, x):
        return _is_real(x) and 0 <= x <= 1

    def add(self, a, b):
        self.check(a)
        self.check(b)
        return a if a >= b else b

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        return a if a <= b else b

    def _root(self, a, n):
        return a


class _NonNegPlusTimes(Semiring):
    """Nonnegative reals with ordinary + and ×; the non-idempotent reference."""

    name = "nonneg"
    zero = 0.0
    one = 1.0
    is_idempotent = False
    is_semifield = True
    is_radicable = True

    def contains(self, x):
        return _is_real(x) and x >= 0

    def add(self, a, b):
        self.check(a)
        self.check(b)
        return a + b

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        return a * b

    def _invert(self, a):
        return 1 / a

    def _root(self, a, n):
        return a ** (1.0 / n)


MAXPLUS = _MaxPlus()
MINPLUS = _MinPlus()
MAXMIN = _MaxMin()
BOOLEAN = _Boolean()
UNITMAXMIN = _UnitMaxMin()
NONNEG = _NonNegPlusTimes()

_BASE = {s.name: s for s in (MAXPLUS, MINPLUS, MAXMIN, BOOLEAN, UNITMAXMIN, NONNEG)}

_INTERVAL_PREFIX = "interval:"


def semiring(name: str) -> Semiring:
    """Look up a semiring by canonical lowercase name.

    Base names: ``maxplus``, ``minplus``, ``maxmin``, ``boolean``,
    ``unitmaxmin``, ``nonneg``.  ``interval:<inner>`` builds the weak
    interval extension of an inner semiring, recursively.
    """
    if name.startswith(_INTERVAL_PREFIX):
        from .interval import IntervalSemiring

        return IntervalSemiring(semiring(name[len(_INTERVAL_PREFIX):]))
    try:
        return _BASE[name]
    except KeyError:
        raise ParseError(f"unknown semiring name: {name!r}") from None
