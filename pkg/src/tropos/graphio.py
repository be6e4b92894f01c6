"""Text formats: weight literals, edge lists, grid functions, polynomials.

Weight literals follow the semiring: numbers, "-inf" / "+inf" for the
infinite endpoints, "0"/"1"/"true"/"false" for Booleans, and "a..b" for
intervals.  Interval literals are accepted in either endpoint order and
normalized to the standard order of the inner semiring (min-plus users
write the natural "1..2" and get the standard-order interval [2, 1]);
the strict constructors stay order-checked for programmatic use.

All numeric output uses the shortest round-trip decimal representation,
so emitted files are diff-stable.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ParseError
from .interval import Interval, IntervalSemiring
from .matrix import SemiringMatrix
from .analysis import GridFunction
from .semiring import NEG_INF, POS_INF, Semiring, order_key, semiring
from .tropical import ComplexCurveSpec, TropicalPolynomial

__all__ = [
    "GraphSpec",
    "parse_weight",
    "format_weight",
    "parse_graph",
    "serialize_graph",
    "graph_matrix",
    "unit_column",
    "parse_grid_function",
    "serialize_grid_function",
    "parse_tropical_polynomial",
    "parse_complex_curve",
]

MAX_NODES = 10_000


def _parse_scalar(text: str, sr: Semiring, line=None):
    if text == "-inf":
        value = NEG_INF
    elif text == "+inf" or text == "inf":
        value = POS_INF
    elif sr.name == "boolean":
        lowered = text.lower()
        if lowered in ("1", "true"):
            value = True
        elif lowered in ("0", "false"):
            value = False
        else:
            raise ParseError(f"bad boolean literal {text!r}", line)
    else:
        try:
            value = int(text)
        except ValueError:
            try:
                value = float(text)
            except ValueError:
                raise ParseError(f"bad numeric literal {text!r}", line) from None
    if not sr.contains(value):
        raise ParseError(f"{text!r} is not a {sr.name} value", line)
    return value


def parse_weight(text: str, sr: Semiring, line=None):
    """Parse one weight literal in the given semiring."""
    text = text.strip()
    if isinstance(sr, IntervalSemiring):
        parts = text.split("..")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(f"bad interval literal {text!r} (want 'a..b')", line)
        a = _parse_scalar(parts[0], sr.inner, line)
        b = _parse_scalar(parts[1], sr.inner, line)
        if sr.inner.leq(a, b):
            return Interval(a, b)
        if sr.inner.leq(b, a):
            return Interval(b, a)
        raise ParseError(f"interval endpoints {text!r} are incomparable", line)
    return _parse_scalar(text, sr, line)


def _format_scalar(x) -> str:
    if x is NEG_INF:
        return "-inf"
    if x is POS_INF:
        return "+inf"
    if isinstance(x, bool):
        return "1" if x else "0"
    return repr(x)


def format_weight(x, sr: Semiring) -> str:
    """Inverse of parse_weight, emitting intervals in conventional order."""
    if isinstance(sr, IntervalSemiring):
        a, b = sorted((x.lo, x.hi), key=order_key)
        return f"{_format_scalar(a)}..{_format_scalar(b)}"
    return _format_scalar(x)


@dataclass
class GraphSpec:
    """Edge list with parsed weights over one named semiring."""

    nodes: list
    edges: list
    semiring: Semiring

    def node_index(self) -> dict:
        return {label: i for i, label in enumerate(self.nodes)}


def _split_semiring_header(line: str):
    body = line.lstrip("#").strip()
    if body.startswith("semiring:"):
        return body[len("semiring:"):].strip()
    return None


def parse_graph(text: str, default_semiring: str = "minplus") -> GraphSpec:
    """Parse an edge list: one "src dst weight" line per edge, optional
    "# semiring: <name>" header (default min-plus).

    Nodes appear in first-appearance order; duplicate edges keep the last
    weight and emit a warning.
    """
    sr = None
    edges = {}
    order = []
    nodes = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            name = _split_semiring_header(line)
            if name is not None:
                if edges:
                    raise ParseError("semiring header must precede the edges", lineno)
                sr = semiring(name)
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(
                f"expected 'src dst weight', got {len(parts)} fields", lineno
            )
        if sr is None:
            sr = semiring(default_semiring)
        src, dst, literal = parts
        weight = parse_weight(literal, sr, lineno)
        for label in (src, dst):
            if label not in seen:
                seen.add(label)
                nodes.append(label)
        if (src, dst) in edges:
            warnings.warn(
                f"duplicate edge {src}->{dst} at line {lineno}; last weight wins",
                stacklevel=2,
            )
        else:
            order.append((src, dst))
        edges[(src, dst)] = weight
    if not edges:
        raise ParseError("no edges")
    if len(nodes) > MAX_NODES:
        raise ParseError(
            f"graph has {len(nodes)} nodes; this desk-scale tool accepts at most {MAX_NODES}"
        )
    edge_list = [(s, d, edges[(s, d)]) for s, d in order]
    return GraphSpec(nodes, edge_list, sr)


def serialize_graph(g: GraphSpec) -> str:
    lines = [f"# semiring: {g.semiring.name}"]
    for src, dst, w in g.edges:
        lines.append(f"{src}\t{dst}\t{format_weight(w, g.semiring)}")
    return "\n".join(lines) + "\n"


def graph_matrix(g: GraphSpec) -> SemiringMatrix:
    """Dense adjacency matrix, absent edges padded with the semiring zero."""
    n = len(g.nodes)
    index = g.node_index()
    m = SemiringMatrix.zeros(n, n, g.semiring)
    for src, dst, w in g.edges:
        m.entries[index[src] * n + index[dst]] = w
    return m


def unit_column(g: GraphSpec, source: str) -> SemiringMatrix:
    """Column vector with the semiring one at the source node, zero elsewhere."""
    index = g.node_index()
    if source not in index:
        raise ParseError(f"unknown source node {source!r}")
    col = SemiringMatrix.zeros(len(g.nodes), 1, g.semiring)
    col.entries[index[source]] = g.semiring.one
    return col


def parse_grid_function(text: str, default_semiring: str = "maxplus") -> GridFunction:
    """Parse a two-column "point value" TSV, optional semiring header."""
    sr = None
    domain = []
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            name = _split_semiring_header(line)
            if name is not None:
                sr = semiring(name)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'point value', got {len(parts)} fields", lineno)
        if sr is None:
            sr = semiring(default_semiring)
        point_text, value_text = parts
        try:
            point = float(point_text)
        except ValueError:
            point = point_text
        domain.append(point)
        values.append(parse_weight(value_text, sr, lineno))
    if not domain:
        raise ParseError("no sample points")
    return GridFunction(domain, values, sr)


def serialize_grid_function(f: GridFunction) -> str:
    lines = [f"# semiring: {f.semiring.name}"]
    for x, v in zip(f.domain, f.values):
        point = repr(x) if isinstance(x, (int, float)) else str(x)
        lines.append(f"{point}\t{format_weight(v, f.semiring)}")
    return "\n".join(lines) + "\n"


def _term_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_tropical_polynomial(text: str) -> TropicalPolynomial:
    """One term per line: "coeff exp1 ... expn"."""
    terms = []
    for lineno, parts in _term_lines(text):
        if len(parts) < 2:
            raise ParseError("expected 'coeff exp1 [exp2 ...]'", lineno)
        try:
            coeff = float(parts[0])
            exps = tuple(int(p) for p in parts[1:])
        except ValueError:
            raise ParseError(f"bad term {' '.join(parts)!r}", lineno) from None
        terms.append((exps, coeff))
    if not terms:
        raise ParseError("no terms")
    return TropicalPolynomial(tuple(terms))


def parse_complex_curve(text: str) -> ComplexCurveSpec:
    """One monomial per line: "coeff_re coeff_im exp1 exp2"."""
    monomials = []
    for lineno, parts in _term_lines(text):
        if len(parts) != 4:
            raise ParseError("expected 'coeff_re coeff_im exp1 exp2'", lineno)
        try:
            re, im = float(parts[0]), float(parts[1])
            exps = (int(parts[2]), int(parts[3]))
        except ValueError:
            raise ParseError(f"bad monomial {' '.join(parts)!r}", lineno) from None
        monomials.append((exps, complex(re, im)))
    if not monomials:
        raise ParseError("no monomials")
    return ComplexCurveSpec(tuple(monomials))
