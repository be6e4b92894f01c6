"""Tropical polynomials, corner loci, and sampled amoebas of plane curves.

A tropical polynomial is a max of affine forms <a_i, x> + c_i.  Its
corner locus (the set where the max is attained at least twice) is a
piecewise-linear variety; the amoeba of a complex curve is its image
under the coordinatewise log-modulus map, scaled by h.  As h shrinks,
the scaled amoeba collapses onto the corner locus in the Hausdorff
metric; :func:`convergence_experiment` measures that collapse.

Scope is deliberately desk-sized: curves in the 2-torus only, sampled by
fixing the first coordinate on a random circle and solving for the
second with companion-matrix rootfinding.  Coefficient deformation is
supported only in the unit-modulus case, where it is constant; general
deformations are rejected rather than guessed.  The construction is
coordinate-dependent by nature and no canonicalization is attempted.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .errors import CapabilityError, DomainError, ShapeMismatchError

__all__ = [
    "TropicalPolynomial",
    "ComplexCurveSpec",
    "PointCloud",
    "trop_eval",
    "corner_locus_sample",
    "amoeba_sample",
    "amoeba_contains",
    "solve_second_coordinate",
    "hausdorff_distance",
    "convergence_experiment",
]


@dataclass(frozen=True)
class TropicalPolynomial:
    """Terms (exponent vector, coefficient) of a max of affine forms."""

    terms: tuple

    def __post_init__(self):
        terms = tuple((tuple(int(e) for e in a), float(c)) for a, c in self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) < 2:
            raise DomainError("a tropical polynomial needs at least 2 terms")
        dims = {len(a) for a, _ in terms}
        if len(dims) != 1:
            raise ShapeMismatchError("terms have inconsistent exponent dimensions")
        exps = [a for a, _ in terms]
        if len(set(exps)) != len(exps):
            raise DomainError("exponent vectors must be distinct")

    @property
    def dimension(self) -> int:
        return len(self.terms[0][0])


@dataclass(frozen=True)
class ComplexCurveSpec:
    """Laurent polynomial on the complex 2-torus, as (exponents, coefficient) monomials."""

    monomials: tuple

    def __post_init__(self):
        monos = tuple(
            (tuple(int(e) for e in a), complex(c)) for a, c in self.monomials
        )
        object.__setattr__(self, "monomials", monos)
        if not monos:
            raise DomainError("empty polynomial")
        if any(len(a) != 2 for a, _ in monos):
            raise ShapeMismatchError("curve monomials must be 2-dimensional")
        live = [(a, c) for a, c in monos if c != 0]
        if not live:
            raise DomainError("zero polynomial does not define a curve")
        if all(a == (0, 0) for a, _ in live):
            raise DomainError("constant polynomial does not define a curve")

    @property
    def dimension(self) -> int:
        return 2


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Finite set of real points with a label; `skipped` counts degenerate
    samples discarded while the cloud was built."""

    points: np.ndarray
    tag: str = ""
    skipped: int = field(default=0)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2:
            pts = pts.reshape(len(pts), -1) if len(pts) else pts.reshape(0, 0)
        object.__setattr__(self, "points", pts)

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return len(self.points)


def trop_eval(p: TropicalPolynomial, x: Sequence[float], eps: float = 1e-9):
    """Value of the max of affine forms at x, plus the indices of all terms
    attaining the max within eps."""
    x = tuple(float(c) for c in x)
    if len(x) != p.dimension:
        raise ShapeMismatchError(
            f"point has dimension {len(x)}, polynomial has {p.dimension}"
        )
    forms = [sum(a_i * x_i for a_i, x_i in zip(a, x)) + c for a, c in p.terms]
    value = max(forms)
    witnesses = tuple(i for i, f in enumerate(forms) if value - f <= eps)
    return value, witnesses


def _axis_grid(lo: float, hi: float, step: float) -> np.ndarray:
    if hi < lo:
        raise DomainError(f"empty box axis [{lo}, {hi}]")
    count = max(int(round((hi - lo) / step)) + 1, 1)
    return np.linspace(lo, hi, count) if count > 1 else np.array([lo])


def corner_locus_sample(
    p: TropicalPolynomial,
    region: Sequence,
    grid_step: float,
    eps: float | None = None,
) -> PointCloud:
    """Grid points of the region where at least two terms attain the max
    within eps: a sampling of the corner locus (tropical variety).

    eps defaults to grid_step / 2, the plotting-grade tie tolerance; an
    empty result just means the region misses the variety.
    """
    if grid_step <= 0:
        raise DomainError(f"grid step must be positive, got {grid_step}")
    region = [(float(lo), float(hi)) for lo, hi in region]
    if len(region) != p.dimension:
        raise ShapeMismatchError(
            f"region has dimension {len(region)}, polynomial has {p.dimension}"
        )
    if eps is None:
        eps = grid_step / 2
    if eps <= 0:
        raise DomainError(f"witness tolerance must be positive, got {eps}")
    axes = [_axis_grid(lo, hi, grid_step) for lo, hi in region]
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    exps = np.array([a for a, _ in p.terms], dtype=float)
    coeffs = np.array([c for _, c in p.terms])
    forms = pts @ exps.T + coeffs
    best = forms.max(axis=1)
    ties = (best[:, None] - forms) <= eps
    mask = ties.sum(axis=1) >= 2
    return PointCloud(pts[mask], tag="corner-locus")


def _univariate_coefficients(f: ComplexCurveSpec, z1: complex) -> np.ndarray:
    """Coefficients (highest degree first) of f(z1, .) as a polynomial in the
    second coordinate, after clearing any negative Laurent exponents."""
    e2s = [a[1] for a, _ in f.monomials]
    shift = min(e2s)
    deg = max(e2s) - shift
    coeffs = np.zeros(deg + 1, dtype=complex)
    for (e1, e2), c in f.monomials:
        coeffs[e2 - shift] += c * z1 ** e1
    return coeffs[::-1]


def solve_second_coordinate(f: ComplexCurveSpec, z1: complex) -> list:
    """Nonzero torus solutions z2 of f(z1, z2) = 0, by companion-matrix
    rootfinding; empty when the slice is degenerate."""
    if z1 == 0:
        raise DomainError("the torus excludes z1 = 0")
    coeffs = _univariate_coefficients(f, z1)
    if not np.any(coeffs != 0):
        return []
    roots = np.roots(coeffs)
    return [complex(r) for r in roots if r != 0]


def _sample_one(f: ComplexCurveSpec, h: float, seed: int, index: int, log_radius: float):
    rng = np.random.default_rng((seed, index))
    u = rng.uniform(-log_radius, log_radius)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    z1 = complex(math.exp(u) * math.cos(theta), math.exp(u) * math.sin(theta))
    roots = solve_second_coordinate(f, z1)
    return [(h * u, h * math.log(abs(r))) for r in roots]


def amoeba_sample(
    f: ComplexCurveSpec,
    h: float,
    n_samples: int,
    seed: int,
    log_radius: float = 4.0,
    workers: int = 1,
) -> PointCloud:
    """Sample the h-scaled amoeba of the curve f.

    Fixes the first torus coordinate on a log-uniform circle-times-radius
    sample (radius exponent uniform in [-log_radius, log_radius]), solves
    for the second coordinate, and returns the log-modulus images scaled
    by h.  Deterministic for a fixed seed: the seed is split per sample
    index, so serial and parallel runs build identical clouds.  Degenerate
    slices are skipped and counted in the cloud's `skipped` field.
    """
    if h <= 0:
        raise DomainError(f"h must be positive, got {h}")
    if n_samples < 1:
        raise DomainError(f"need at least one sample, got {n_samples}")
    indices = range(n_samples)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_sample = list(
                pool.map(lambda i: _sample_one(f, h, seed, i, log_radius), indices)
            )
    else:
        per_sample = [_sample_one(f, h, seed, i, log_radius) for i in indices]
    points = [pt for sample in per_sample for pt in sample]
    skipped = sum(1 for sample in per_sample if not sample)
    if not points:
        raise DomainError(
            f"all {n_samples} samples were degenerate: no amoeba points found"
        )
    return PointCloud(np.array(points), tag=f"amoeba h={h}", skipped=skipped)


def amoeba_contains(
    f: ComplexCurveSpec,
    point: Sequence[float],
    h: float = 1.0,
    n_theta: int = 256,
    tol: float = 1e-6,
) -> bool:
    """Membership test by rootfinding: scan the circle |z1| = exp(x / h) and
    report whether some root's log-modulus matches the y coordinate."""
    if h <= 0:
        raise DomainError(f"h must be positive, got {h}")
    x, y = (float(c) for c in point)
    r1 = math.exp(x / h)
    for k in range(n_theta):
        theta = 2.0 * math.pi * k / n_theta
        z1 = complex(r1 * math.cos(theta), r1 * math.sin(theta))
        for root in solve_second_coordinate(f, z1):
            if abs(h * math.log(abs(root)) - y) <= tol:
                return True
    return False


def hausdorff_distance(a: PointCloud, b: PointCloud) -> float:
    """Symmetric Hausdorff distance between two finite point sets
    (max over both directed nearest-neighbor sup-distances, Euclidean)."""
    if len(a) == 0 or len(b) == 0:
        raise DomainError("Hausdorff distance needs nonempty clouds")
    if a.dimension != b.dimension:
        raise ShapeMismatchError(
            f"dimension mismatch: {a.dimension} vs {b.dimension}"
        )
    d_ab = cKDTree(b.points).query(a.points)[0].max()
    d_ba = cKDTree(a.points).query(b.points)[0].max()
    return float(max(d_ab, d_ba))


def _unit_modulus(f: ComplexCurveSpec, tol: float = 1e-12) -> bool:
    return all(abs(abs(c) - 1.0) <= tol for _, c in f.monomials if c != 0)


def convergence_experiment(
    f: ComplexCurveSpec,
    p: TropicalPolynomial,
    h_list: Sequence[float],
    n_samples: int,
    seed: int,
    grid_resolution: int = 160,
    workers: int = 1,
) -> list:
    """Hausdorff distance between the h-scaled amoeba and the corner locus,
    for each h, both clipped to the amoeba's (inflated) bounding box.

    Requires unit-modulus coefficients, the case in which the coefficient
    deformation is constant in h.  The corner-locus grid step scales with
    the bounding box, so the discretization error shrinks with h and the
    distance column tracks the amoeba's collapse onto the skeleton.
    Returns a list of (h, distance) rows, in h_list order.
    """
    if not _unit_modulus(f):
        raise CapabilityError(
            "coefficient deformation is only supported for unit-modulus "
            "coefficients, where it is constant"
        )
    if p.dimension != 2:
        raise ShapeMismatchError("the experiment is planar: polynomial must be 2-D")
    rows = []
    for h in h_list:
        cloud = amoeba_sample(f, h, n_samples, seed, workers=workers)
        lo = cloud.points.min(axis=0)
        hi = cloud.points.max(axis=0)
        step = float(max(hi - lo) / grid_resolution)
        if step <= 0:
            raise DomainError("amoeba cloud is a single point; cannot build a box")
        box = [(lo[d] - step, hi[d] + step) for d in range(2)]
        skel = corner_locus_sample(p, box, step)
        if len(skel) == 0:
            raise DomainError(
                f"corner locus misses the amoeba bounding box at h={h}"
            )
        rows.append((float(h), hausdorff_distance(cloud, skel)))
    return rows
