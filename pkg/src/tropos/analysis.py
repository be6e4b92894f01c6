"""Finite models of semiring-valued function spaces.

A :class:`GridFunction` is a function on a finite sample set with values
in one semiring.  On such domains the idempotent integral is an exact
⊕-fold (a sup in the standard order), measures are densities, kernel
operators are matrices, and the Legendre transform plays the role the
Fourier transform plays for ordinary convolution algebras.

With the unit-interval max-min instance, grid functions are classical
fuzzy sets and the pointwise operations are Zadeh union and intersection;
over a general semiring they model generalized fuzzy sets.  Every kernel
operator built here is linear over its semiring; whether every linear
operator arises from a kernel is not checked at this finite scale.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import CapabilityError, DomainError, SemiringMismatchError, ShapeMismatchError
from .matrix import SemiringMatrix
from .semiring import MAXPLUS, Semiring, _is_real

__all__ = [
    "GridFunction",
    "integrate",
    "measure_integrate",
    "scalar_product",
    "kernel_apply",
    "legendre_transform",
    "pointwise_add",
    "pointwise_mul",
    "pointwise_scale",
]


class GridFunction:
    """Finite sample of a function X -> S: points plus one value per point."""

    __slots__ = ("domain", "values", "semiring")

    def __init__(self, domain: Sequence, values: Sequence, semiring: Semiring):
        domain = list(domain)
        values = list(values)
        if not domain:
            raise DomainError("grid function needs a nonempty domain")
        if len(domain) != len(values):
            raise ShapeMismatchError(
                f"{len(domain)} points but {len(values)} values"
            )
        for v in values:
            semiring.check(v)
        self.domain = domain
        self.values = values
        self.semiring = semiring

    @classmethod
    def constant(cls, domain: Sequence, value, semiring: Semiring) -> "GridFunction":
        domain = list(domain)
        return cls(domain, [value] * len(domain), semiring)

    def __len__(self) -> int:
        return len(self.domain)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GridFunction)
            and self.semiring == other.semiring
            and self.domain == other.domain
            and self.values == other.values
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"GridFunction({len(self.domain)} points, {self.semiring.name})"


def _require_compatible(f: GridFunction, g: GridFunction):
    if f.semiring != g.semiring:
        raise SemiringMismatchError(
            f"semiring mismatch: {f.semiring.name} vs {g.semiring.name}"
        )
    if f.domain != g.domain:
        raise ShapeMismatchError("grid functions are defined on different domains")


def integrate(f: GridFunction):
    """Idempotent integral: the ⊕-fold of all values, i.e. the standard-order
    sup (which is the conventional inf over a min-plus carrier)."""
    sr = f.semiring
    if not sr.is_idempotent:
        raise CapabilityError(f"idempotent integral needs an idempotent semiring, got {sr.name}")
    acc = f.values[0]
    for v in f.values[1:]:
        acc = sr.add(acc, v)
    return acc


def measure_integrate(f: GridFunction, density: GridFunction):
    """Integral against the measure with the given density:
    the ⊕-fold of f(x) ⊙ density(x)."""
    _require_compatible(f, density)
    return integrate(pointwise_mul(f, density))


def scalar_product(f: GridFunction, g: GridFunction):
    """⟨f, g⟩ = ⊕-fold of f(x) ⊙ g(x); symmetric whenever ⊙ commutes."""
    return measure_integrate(f, g)


def kernel_apply(K: SemiringMatrix, f: GridFunction) -> GridFunction:
    """Kernel operator (K f)(x) = ⊕_y K(x, y) ⊙ f(y).

    The output is indexed by K's rows.  Linear over the semiring in f.
    """
    if K.semiring != f.semiring:
        raise SemiringMismatchError(
            f"semiring mismatch: {K.semiring.name} vs {f.semiring.name}"
        )
    if K.cols != len(f.domain):
        raise ShapeMismatchError(
            f"kernel has {K.cols} columns but the function has {len(f.domain)} points"
        )
    sr = f.semiring
    add, mul, zero = sr.add, sr.mul, sr.zero
    out = []
    for i in range(K.rows):
        acc = zero
        for k, v in zip(K.row(i), f.values):
            acc = add(acc, mul(k, v))
        out.append(acc)
    return GridFunction(list(range(K.rows)), out, sr)


def pointwise_add(f: GridFunction, g: GridFunction) -> GridFunction:
    """Entrywise ⊕; fuzzy union over the unit max-min instance."""
    _require_compatible(f, g)
    add = f.semiring.add
    return GridFunction(
        f.domain, [add(a, b) for a, b in zip(f.values, g.values)], f.semiring
    )


def pointwise_mul(f: GridFunction, g: GridFunction) -> GridFunction:
    """Entrywise ⊙; fuzzy intersection over the unit max-min instance."""
    _require_compatible(f, g)
    mul = f.semiring.mul
    return GridFunction(
        f.domain, [mul(a, b) for a, b in zip(f.values, g.values)], f.semiring
    )


def pointwise_scale(lam, f: GridFunction) -> GridFunction:
    """Entrywise λ ⊙ f(x)."""
    sr = f.semiring
    sr.check(lam)
    return GridFunction(f.domain, [sr.mul(lam, v) for v in f.values], sr)


def legendre_transform(f: GridFunction, slope_grid: Sequence[float]) -> GridFunction:
    """Discrete Legendre transform (L f)(p) = sup_x (p * x - f(x)).

    f must be a finite real-valued max-plus grid function on a 1-D real
    grid; the caller supplies the slope grid explicitly.  Order-reversing:
    f <= g pointwise implies L f >= L g pointwise.
    """
    if f.semiring != MAXPLUS:
        raise CapabilityError(
            f"Legendre transform is defined over maxplus, got {f.semiring.name}"
        )
    slopes = [float(p) for p in slope_grid]
    if not slopes:
        raise DomainError("empty slope grid")
    if not all(_is_real(x) for x in f.domain):
        raise DomainError("Legendre transform needs a real 1-D domain")
    if not all(_is_real(v) for v in f.values):
        raise DomainError("Legendre transform needs finite real values")
    xs = np.asarray(f.domain, dtype=float)
    vals = np.asarray(f.values, dtype=float)
    ps = np.asarray(slopes, dtype=float)
    out = np.max(ps[:, None] * xs[None, :] - vals[None, :], axis=1)
    return GridFunction(slopes, [float(v) for v in out], MAXPLUS)
