"""Shared test utilities: element samplers, law checkers, brute-force oracles."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from tropos import NEG_INF, POS_INF, Interval
from tropos.interval import IntervalSemiring

BASE_NAMES = ("maxplus", "minplus", "maxmin", "boolean", "unitmaxmin", "nonneg")

# Instances whose multiplication is a selection, so ⊙-chains reassociate
# bit-exactly; the others accumulate float rounding and get a tolerance.
_SELECTIVE_MUL = {"maxmin", "unitmaxmin", "boolean"}


def mul_chain_tol(sr) -> float:
    name = sr.inner.name if isinstance(sr, IntervalSemiring) else sr.name
    return 0.0 if name in _SELECTIVE_MUL else 1e-12


def sample_element(sr, rng):
    name = sr.name
    if isinstance(sr, IntervalSemiring):
        a = sample_element(sr.inner, rng)
        b = sample_element(sr.inner, rng)
        return Interval(a, b) if sr.inner.leq(a, b) else Interval(b, a)
    if name == "maxplus":
        if rng.random() < 0.1:
            return NEG_INF
        return rng.randrange(-10, 11) if rng.random() < 0.3 else rng.uniform(-10, 10)
    if name == "minplus":
        if rng.random() < 0.1:
            return POS_INF
        return rng.randrange(-10, 11) if rng.random() < 0.3 else rng.uniform(-10, 10)
    if name == "maxmin":
        r = rng.random()
        if r < 0.08:
            return NEG_INF
        if r < 0.16:
            return POS_INF
        return rng.uniform(-10, 10)
    if name == "boolean":
        return rng.random() < 0.5
    if name == "unitmaxmin":
        r = rng.random()
        if r < 0.05:
            return 0.0
        if r < 0.1:
            return 1.0
        return rng.random()
    if name == "nonneg":
        return 0.0 if rng.random() < 0.05 else rng.uniform(0, 10)
    raise AssertionError(f"no sampler for {name}")


def values_close(a, b, tol: float) -> bool:
    """Equality for semiring payloads; tol = 0 demands bit-exactness."""
    if isinstance(a, Interval) or isinstance(b, Interval):
        return (
            isinstance(a, Interval)
            and isinstance(b, Interval)
            and values_close(a.lo, b.lo, tol)
            and values_close(a.hi, b.hi, tol)
        )
    if a is NEG_INF or a is POS_INF or b is NEG_INF or b is POS_INF:
        return a is b
    if isinstance(a, bool) or isinstance(b, bool):
        return a == b
    if tol == 0.0:
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def check_axioms(sr, rng, n_checks: int):
    """Assert all semiring laws on n_checks random triples; returns n_checks."""
    add, mul, zero, one = sr.add, sr.mul, sr.zero, sr.one
    tol = mul_chain_tol(sr)
    assert not values_close(zero, one, 0.0), f"{sr.name}: zero equals one"
    for _ in range(n_checks):
        x = sample_element(sr, rng)
        y = sample_element(sr, rng)
        z = sample_element(sr, rng)
        add_exact = 0.0 if sr.is_idempotent else tol
        assert values_close(add(add(x, y), z), add(x, add(y, z)), add_exact)
        assert values_close(add(x, y), add(y, x), 0.0)
        assert values_close(mul(mul(x, y), z), mul(x, mul(y, z)), tol)
        assert values_close(mul(x, add(y, z)), add(mul(x, y), mul(x, z)), tol)
        assert values_close(mul(add(x, y), z), add(mul(x, z), mul(y, z)), tol)
        assert values_close(add(zero, x), x, 0.0)
        assert values_close(mul(one, x), x, 0.0)
        assert values_close(mul(x, one), x, 0.0)
        assert values_close(mul(zero, x), zero, 0.0)
        assert values_close(mul(x, zero), zero, 0.0)
        if sr.is_idempotent:
            assert values_close(add(x, x), x, 0.0)
    return n_checks


def random_digraph(rng, n, weight_range, edge_prob=0.5, allow_self_loops=True):
    """Random integer-weight edge dict {(i, j): w}."""
    edges = {}
    for i in range(n):
        for j in range(n):
            if i == j and not allow_self_loops:
                continue
            if rng.random() < edge_prob:
                edges[(i, j)] = rng.randrange(*weight_range)
    return edges


def edges_to_matrix(edges, n, sr):
    from tropos import SemiringMatrix

    m = SemiringMatrix.zeros(n, n, sr)
    for (i, j), w in edges.items():
        m.entries[i * n + j] = w
    return m


def brute_force_best_paths(edges, n, source, max_edges):
    """Min path weight from source to every node over simple paths with at
    most max_edges edges, by explicit enumeration.  inf means unreachable.
    For nonnegative weights this equals the min over arbitrary walks."""
    best = [math.inf] * n
    best[source] = 0

    def extend(node, used, weight, depth):
        if depth == max_edges:
            return
        for nxt in range(n):
            if nxt in used or (node, nxt) not in edges:
                continue
            w = weight + edges[(node, nxt)]
            if w < best[nxt]:
                best[nxt] = w
            extend(nxt, used | {nxt}, w, depth + 1)

    extend(source, {source}, 0, 0)
    return best


def brute_force_all_pairs(edges, n):
    """Closure oracle: min simple-path weight between all ordered pairs,
    with 0 on the diagonal (the empty path)."""
    out = []
    for s in range(n):
        row = brute_force_best_paths(edges, n, s, n - 1)
        row[s] = min(row[s], 0)
        out.append(row)
    return out


def enumerate_simple_cycles(edges, n):
    """All simple directed cycles as (total_weight, length) pairs."""
    cycles = []
    for size in range(1, n + 1):
        for nodes in itertools.permutations(range(n), size):
            # canonical rotation: smallest node first, so each cycle counts once
            if nodes[0] != min(nodes):
                continue
            ring = nodes + (nodes[0],)
            weight = 0
            ok = True
            for a, b in zip(ring, ring[1:]):
                if (a, b) not in edges:
                    ok = False
                    break
                weight += edges[(a, b)]
            if ok:
                cycles.append((weight, size))
    return cycles


def best_cycle_mean(edges, n, maximize=True):
    """Exact optimal cycle mean as a Fraction, or None if acyclic."""
    cycles = enumerate_simple_cycles(edges, n)
    if not cycles:
        return None
    means = [Fraction(w, length) for w, length in cycles]
    return max(means) if maximize else min(means)


def random_interval_minplus_instance(rng, n):
    """Random interval min-plus Bellman instance (H, F) with integer-endpoint
    intervals; F holds the unit interval at node 0."""
    from tropos import SemiringMatrix, semiring

    isr = semiring("interval:minplus")
    H = SemiringMatrix.zeros(n, n, isr)
    for i in range(n):
        for j in range(n):
            if rng.random() < 0.5:
                a = rng.randrange(0, 10)
                b = a + rng.randrange(0, 5)
                H.entries[i * n + j] = Interval(b, a)
    F = SemiringMatrix.zeros(n, 1, isr)
    for i in range(1, n):
        if rng.random() < 0.5:
            c = rng.randrange(0, 10)
            d = c + rng.randrange(0, 5)
            F.entries[i] = Interval(d, c)
    F.entries[0] = isr.one
    return H, F


def random_selection(rng, m, inner):
    """Pointwise scalar selection from an interval matrix (standard-order
    intervals; the conventional range of a min-plus interval is [hi, lo])."""
    from tropos import SemiringMatrix

    entries = []
    for iv in m.entries:
        if iv.lo is POS_INF or iv.lo == iv.hi:
            entries.append(iv.lo)
        elif rng.random() < 0.3:
            entries.append(rng.choice((iv.lo, iv.hi)))
        else:
            entries.append(rng.uniform(iv.hi, iv.lo))
    return SemiringMatrix(m.rows, m.cols, entries, inner)
