"""Weak interval extension I(S) of an idempotent semiring.

An interval is closed in the *standard* order a ⪯ b iff a ⊕ b = b.  For
max-plus that order agrees with the numeric one, but for min-plus it is
reversed: the set of numbers between 2 and 5 is the interval with lower
bound 5 and upper bound 2.  Constructors are strict about this; the CLI
layer normalizes friendlier "lo..hi" literals before they get here.

Operations act endpointwise, which makes I(S) an idempotent semiring in
its own right, and makes interval Bellman systems solvable at the cost of
exactly two scalar solves (one per endpoint).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import CapabilityError, DivergenceError, DomainError, SemiringMismatchError
from .matrix import ClosureReport, SemiringMatrix, solve_bellman_jacobi
from .semiring import Semiring

__all__ = ["Interval", "IntervalSemiring", "interval_bellman_solve"]


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with lo ⪯ hi in the inner standard order."""

    lo: Any
    hi: Any

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


class IntervalSemiring(Semiring):
    """Intervals over an idempotent inner semiring, with endpointwise ⊕ and ⊙."""

    is_semifield = False
    is_radicable = False

    def __init__(self, inner: Semiring):
        if not inner.is_idempotent:
            raise CapabilityError(
                f"interval extension needs an idempotent inner semiring, got {inner.name}"
            )
        self.inner = inner
        self.name = f"interval:{inner.name}"
        self.zero = Interval(inner.zero, inner.zero)
        self.one = Interval(inner.one, inner.one)
        self.is_idempotent = inner.is_idempotent

    def interval(self, lo, hi) -> Interval:
        """Validated constructor; rejects endpoints out of standard order."""
        self.inner.check(lo)
        self.inner.check(hi)
        if not self.inner.leq(lo, hi):
            raise DomainError(
                f"not a {self.name} interval: {lo!r} does not precede {hi!r} "
                "in the standard order"
            )
        return Interval(lo, hi)

    def contains(self, x) -> bool:
        return (
            isinstance(x, Interval)
            and self.inner.contains(x.lo)
            and self.inner.contains(x.hi)
            and self.inner.leq(x.lo, x.hi)
        )

    def _operand(self, x):
        # Endpoint payloads are checked by the inner operations; monotonicity
        # of ⊕ and ⊙ keeps lo ⪯ hi valid, so only the shape needs checking here.
        if not isinstance(x, Interval):
            raise SemiringMismatchError(f"{x!r} is not a {self.name} value")
        return x

    def add(self, a, b):
        self._operand(a)
        self._operand(b)
        return Interval(self.inner.add(a.lo, b.lo), self.inner.add(a.hi, b.hi))

    def mul(self, a, b):
        self._operand(a)
        self._operand(b)
        return Interval(self.inner.mul(a.lo, b.lo), self.inner.mul(a.hi, b.hi))

    def contains_value(self, x: Interval, a) -> bool:
        """True iff the inner element a lies in the interval x (standard order)."""
        self.check(x)
        self.inner.check(a)
        return self.inner.leq(x.lo, a) and self.inner.leq(a, x.hi)


def _endpoint_matrix(m: SemiringMatrix, which: str) -> SemiringMatrix:
    inner = m.semiring.inner
    entries = [getattr(e, which) for e in m.entries]
    return SemiringMatrix(m.rows, m.cols, entries, inner, validate=False)


def interval_bellman_solve(
    H: SemiringMatrix, F: SemiringMatrix, max_iter: int | None = None
) -> SemiringMatrix:
    """Exact interval solution of X = H ⊙ X ⊕ F by endpoint decomposition.

    Solves the lower-endpoint and upper-endpoint scalar systems separately
    and recombines; every scalar solution of a pointwise selection
    H' ∈ H, F' ∈ F lies entrywise inside the result.
    """
    sr = H.semiring
    if not isinstance(sr, IntervalSemiring):
        raise CapabilityError(f"interval solve needs an interval semiring, got {sr.name}")
    if F.semiring != sr:
        raise SemiringMismatchError(f"semiring mismatch: {sr.name} vs {F.semiring.name}")
    solutions = {}
    for which in ("lo", "hi"):
        try:
            report: ClosureReport = solve_bellman_jacobi(
                _endpoint_matrix(H, which), _endpoint_matrix(F, which), max_iter
            )
        except DivergenceError as exc:
            endpoint = "lower" if which == "lo" else "upper"
            raise DivergenceError(
                f"{endpoint}-endpoint system diverged: {exc}",
                last_iterate=exc.last_iterate,
                endpoint=endpoint,
            ) from exc
        solutions[which] = report.result
    entries = [
        Interval(lo, hi)
        for lo, hi in zip(solutions["lo"].entries, solutions["hi"].entries)
    ]
    return SemiringMatrix(F.rows, F.cols, entries, sr)
