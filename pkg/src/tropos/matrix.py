"""Dense matrices over a semiring; closure and Bellman fixpoint solvers.

The Kleene closure A* = I ⊕ A ⊕ A² ⊕ ... yields the least solution
X = A* ⊙ F of the discrete stationary Bellman equation X = A ⊙ X ⊕ F.
Over min-plus this is the all-pairs shortest path problem; the Jacobi
and Gauss-Seidel solvers below are the semiring forms of the Bellman
and Ford single-source algorithms.

Everything here is written against the abstract semiring interface and
works unchanged for any idempotent instance.  Stopping is an exact
fixpoint test, never an epsilon: ⊕ is a selection in every idempotent
instance, so iterates stabilize bit-exactly when they stabilize at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    CapabilityError,
    DivergenceError,
    NoCycleError,
    SemiringMismatchError,
    ShapeMismatchError,
)
from .semiring import NEG_INF, POS_INF, Semiring

__all__ = [
    "SemiringMatrix",
    "ClosureReport",
    "mat_add",
    "mat_mul",
    "mat_closure",
    "solve_bellman_jacobi",
    "solve_bellman_gauss_seidel",
    "cycle_mean_eigenvalue",
]


class SemiringMatrix:
    """Rectangular array of semiring values, stored dense and row-major."""

    __slots__ = ("rows", "cols", "semiring", "entries")

    def __init__(self, rows: int, cols: int, entries, semiring: Semiring, validate=True):
        if rows < 1 or cols < 1:
            raise ShapeMismatchError(f"matrix shape must be positive, got {rows}x{cols}")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        if validate:
            for e in entries:
                semiring.check(e)
        self.rows = rows
        self.cols = cols
        self.semiring = semiring
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_of_values, semiring: Semiring) -> "SemiringMatrix":
        rows_of_values = [list(r) for r in rows_of_values]
        nrows = len(rows_of_values)
        ncols = len(rows_of_values[0]) if nrows else 0
        if any(len(r) != ncols for r in rows_of_values):
            raise ShapeMismatchError("ragged rows")
        flat = [v for row in rows_of_values for v in row]
        return cls(nrows, ncols, flat, semiring)

    @classmethod
    def zeros(cls, rows: int, cols: int, semiring: Semiring) -> "SemiringMatrix":
        return cls(rows, cols, [semiring.zero] * (rows * cols), semiring, validate=False)

    @classmethod
    def identity(cls, n: int, semiring: Semiring) -> "SemiringMatrix":
        m = cls.zeros(n, n, semiring)
        for i in range(n):
            m.entries[i * n + i] = semiring.one
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> list:
        return self.entries[j :: self.cols]

    def transpose(self) -> "SemiringMatrix":
        entries = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return SemiringMatrix(self.cols, self.rows, entries, self.semiring, validate=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SemiringMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.semiring == other.semiring
            and self.entries == other.entries
        )

    __hash__ = None

    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"SemiringMatrix({self.rows}x{self.cols}, {self.semiring.name})"


@dataclass(frozen=True)
class ClosureReport:
    """Converged iteration result, with the sweep count that reached it."""

    result: SemiringMatrix
    iterations: int
    converged: bool = field(default=True)


def _require_same_semiring(A: SemiringMatrix, B: SemiringMatrix):
    if A.semiring != B.semiring:
        raise SemiringMismatchError(
            f"semiring mismatch: {A.semiring.name} vs {B.semiring.name}"
        )


def mat_add(A: SemiringMatrix, B: SemiringMatrix) -> SemiringMatrix:
    """Entrywise ⊕."""
    _require_same_semiring(A, B)
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise ShapeMismatchError(
            f"shape mismatch for add: {A.rows}x{A.cols} vs {B.rows}x{B.cols}"
        )
    add = A.semiring.add
    entries = [add(a, b) for a, b in zip(A.entries, B.entries)]
    return SemiringMatrix(A.rows, A.cols, entries, A.semiring, validate=False)


def mat_mul(A: SemiringMatrix, B: SemiringMatrix) -> SemiringMatrix:
    """Matrix product with ⊕ as sum and ⊙ as product."""
    _require_same_semiring(A, B)
    if A.cols != B.rows:
        raise ShapeMismatchError(
            f"shape mismatch for mul: {A.rows}x{A.cols} times {B.rows}x{B.cols}"
        )
    sr = A.semiring
    add, mul, zero = sr.add, sr.mul, sr.zero
    bcols = B.cols
    bentries = B.entries
    out = []
    for i in range(A.rows):
        arow = A.row(i)
        for k in range(bcols):
            acc = zero
            idx = k
            for a in arow:
                acc = add(acc, mul(a, bentries[idx]))
                idx += bcols
            out.append(acc)
    return SemiringMatrix(A.rows, bcols, out, sr, validate=False)


def _require_idempotent(sr: Semiring, what: str):
    if not sr.is_idempotent:
        raise CapabilityError(f"{what} needs an idempotent semiring, got {sr.name}")


def mat_closure(A: SemiringMatrix, max_iter: int | None = None) -> ClosureReport:
    """Kleene closure A* = I ⊕ A ⊕ A² ⊕ ... by exact partial-sum stabilization.

    Iterates S ← I ⊕ A ⊙ S until two successive partial sums are equal.
    Raises DivergenceError (carrying the last iterate) if the sums fail to
    stabilize within max_iter sweeps, e.g. for a max-plus matrix with a
    positive-weight cycle.  Default budget is 2n sweeps; n - 1 suffice
    whenever the closure exists.
    """
    if A.rows != A.cols:
        raise ShapeMismatchError(f"closure needs a square matrix, got {A.rows}x{A.cols}")
    _require_idempotent(A.semiring, "closure")
    if max_iter is None:
        max_iter = 2 * A.rows
    eye = SemiringMatrix.identity(A.rows, A.semiring)
    S = eye
    for it in range(1, max_iter + 1):
        S_next = mat_add(eye, mat_mul(A, S))
        if S_next == S:
            return ClosureReport(S, it)
        S = S_next
    raise DivergenceError(
        f"closure did not stabilize within {max_iter} iterations",
        last_iterate=S,
    )


def _solver_preconditions(H: SemiringMatrix, F: SemiringMatrix):
    _require_same_semiring(H, F)
    if H.rows != H.cols:
        raise ShapeMismatchError(f"H must be square, got {H.rows}x{H.cols}")
    if F.rows != H.rows:
        raise ShapeMismatchError(
            f"F must have {H.rows} rows to match H, got {F.rows}"
        )
    _require_idempotent(H.semiring, "Bellman solve")


def solve_bellman_jacobi(
    H: SemiringMatrix, F: SemiringMatrix, max_iter: int | None = None
) -> ClosureReport:
    """Least solution of X = H ⊙ X ⊕ F by whole-vector (Jacobi) iteration.

    Starts at X = F and recomputes every component from the previous
    iterate.  After k sweeps the iterate equals the best over paths of at
    most k edges; on convergence X = closure(H) ⊙ F.

    (H ⊙ X)_i accumulates along row i, so for single-source distances
    *from* node s over min-plus, pass the transposed edge adjacency as H
    and the unit column at s as F.
    """
    _solver_preconditions(H, F)
    if max_iter is None:
        max_iter = 2 * H.rows
    X = F
    for it in range(1, max_iter + 1):
        X_next = mat_add(mat_mul(H, X), F)
        if X_next == X:
            return ClosureReport(X, it)
        X = X_next
    raise DivergenceError(
        f"Jacobi iteration did not stabilize within {max_iter} sweeps",
        last_iterate=X,
    )


def solve_bellman_gauss_seidel(
    H: SemiringMatrix, F: SemiringMatrix, max_iter: int | None = None
) -> ClosureReport:
    """Same fixpoint as the Jacobi solver, but each component update inside a
    sweep already uses the components updated earlier in that sweep."""
    _solver_preconditions(H, F)
    if max_iter is None:
        max_iter = 2 * H.rows
    sr = H.semiring
    add, mul = sr.add, sr.mul
    n, k = H.rows, F.cols
    X = list(F.entries)
    for sweep in range(1, max_iter + 1):
        changed = False
        for i in range(n):
            hrow = H.row(i)
            base = i * k
            for c in range(k):
                acc = F.entries[base + c]
                idx = c
                for h in hrow:
                    acc = add(acc, mul(h, X[idx]))
                    idx += k
                if acc != X[base + c]:
                    changed = True
                    X[base + c] = acc
        if not changed:
            return ClosureReport(SemiringMatrix(n, k, X, sr, validate=False), sweep)
    raise DivergenceError(
        f"Gauss-Seidel iteration did not stabilize within {max_iter} sweeps",
        last_iterate=SemiringMatrix(n, k, X, sr, validate=False),
    )


def _karp_min_cycle_mean(w, n: int):
    """Minimum cycle mean of an n-node weight table by Karp's recurrence.

    w[i][j] is a finite edge weight or +inf for a missing edge.  Uses the
    all-sources form D[0][v] = 0 (equivalent to an added super-source), so
    strong connectivity is not required.  Returns None for an acyclic table.
    """
    inf = math.inf
    D = [[0] * n]
    for _ in range(n):
        prev = D[-1]
        cur = [inf] * n
        for u in range(n):
            du = prev[u]
            if du == inf:
                continue
            wu = w[u]
            for v in range(n):
                cand = du + wu[v]
                if cand < cur[v]:
                    cur[v] = cand
        D.append(cur)
    best = None
    Dn = D[n]
    for v in range(n):
        if Dn[v] == inf:
            continue
        worst = None
        for k in range(n):
            if D[k][v] == inf:
                continue
            val = (Dn[v] - D[k][v]) / (n - k)
            if worst is None or val > worst:
                worst = val
        if worst is not None and (best is None or worst < best):
            best = worst
    return best


def cycle_mean_eigenvalue(A: SemiringMatrix) -> float:
    """Optimal cycle mean of a max-plus or min-plus matrix (Karp's algorithm).

    Returns the maximum (max-plus) or minimum (min-plus) over all directed
    cycles of cycle weight divided by cycle length: the matrix eigenvalue
    of A in the corresponding algebra.
    """
    sr = A.semiring
    if sr.name not in ("maxplus", "minplus"):
        raise CapabilityError(f"cycle mean needs maxplus or minplus, got {sr.name}")
    if A.rows != A.cols:
        raise ShapeMismatchError(f"cycle mean needs a square matrix, got {A.rows}x{A.cols}")
    n = A.rows
    maximize = sr.name == "maxplus"
    missing = NEG_INF if maximize else POS_INF
    w = []
    has_edge = False
    for i in range(n):
        row = []
        for e in A.row(i):
            if e is missing:
                row.append(math.inf)
            else:
                has_edge = True
                row.append(-e if maximize else e)
        w.append(row)
    if not has_edge:
        raise NoCycleError("matrix has no edges, so no cycles")
    mu = _karp_min_cycle_mean(w, n)
    if mu is None:
        raise NoCycleError("matrix has no cycles: eigenvalue undefined")
    return -mu if maximize else mu
