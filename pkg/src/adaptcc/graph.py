"""Undirected graphs as edge lists: parsing, writing, generation and statistics.

Edge records are kept exactly as they were read or generated. Nothing is
symmetrized or deduplicated on load; duplicate edges and self-loops are
harmless to every kernel, and keeping them preserves the benchmark workload.
Use :func:`normalize` when a canonical simple graph is needed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import IO, Iterable

import numpy as np

VERTEX_DTYPE = np.int64


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Vertex count plus an ordered edge list of shape ``(m, 2)``.

    Edge order is significant: segment plans index into it.
    """

    n: int
    edges: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = np.ascontiguousarray(self.edges, dtype=VERTEX_DTYPE).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= self.n):
            bad = int(np.flatnonzero(((edges < 0) | (edges >= self.n)).any(axis=1))[0])
            raise ValueError(
                f"edge {bad} ({edges[bad, 0]}, {edges[bad, 1]}) has an endpoint outside [0, {self.n})"
            )
        edges.flags.writeable = False
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, np.array(list(pairs), dtype=VERTEX_DTYPE).reshape(-1, 2))

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.edges.tolist()]

    @cached_property
    def stats(self) -> "GraphStats":
        return compute_stats(self)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphStats:
    n: int
    m_stored: int
    avg_degree: Fraction | float
    max_degree: int
    m_unique: int | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m_stored": self.m_stored,
            "m_unique": self.m_unique,
            "avg_degree": float(self.avg_degree),
            "max_degree": self.max_degree,
        }


def normalize(graph: Graph) -> Graph:
    """Drop self-loops and duplicates; each edge becomes ``(min, max)``, sorted."""
    e = graph.edges
    if e.size == 0:
        return Graph(graph.n, e)
    lo = np.minimum(e[:, 0], e[:, 1])
    hi = np.maximum(e[:, 0], e[:, 1])
    keep = lo != hi
    if graph.n <= 1 << 31:
        key = np.unique(lo[keep] * graph.n + hi[keep])
        canon = np.stack([key // graph.n, key % graph.n], axis=1)
    else:
        canon = np.unique(np.stack([lo[keep], hi[keep]], axis=1), axis=0)
    return Graph(graph.n, canon)


def compute_stats(graph: Graph) -> GraphStats:
    """Average and max degree over unique undirected adjacencies, self-loops excluded."""
    simple = normalize(graph)
    m_unique = simple.m
    if graph.n == 0:
        return GraphStats(0, graph.m, Fraction(0), 0, m_unique)
    degree = np.bincount(simple.edges.ravel(), minlength=graph.n)
    max_degree = int(degree.max()) if degree.size else 0
    return GraphStats(graph.n, graph.m, Fraction(2 * m_unique, graph.n), max_degree, m_unique)


# -- parsers ------------------------------------------------------------------


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", lineno) from None


def parse_edge_list(stream: IO[str], header: bool = False) -> Graph:
    """Parse ``u v`` lines (0-indexed); ``#`` lines are comments.

    With ``header=True`` the first non-comment line is ``n m``.
    """
    n = None
    edges = []
    expect_header = header
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 fields, got {len(tokens)}", lineno)
        a, b = _int(tokens[0], lineno), _int(tokens[1], lineno)
        if expect_header:
            if a < 0 or b < 0:
                raise GraphFormatError("header values must be non-negative", lineno)
            n, expect_header = a, False
            continue
        if a < 0 or b < 0:
            raise GraphFormatError("negative vertex index", lineno)
        if n is not None and (a >= n or b >= n):
            raise GraphFormatError(f"endpoint >= declared vertex count {n}", lineno)
        edges.append((a, b))
    if n is None:
        n = 1 + max(max(e) for e in edges) if edges else 0
    return Graph.from_pairs(n, edges)


def parse_dimacs(stream: IO[str]) -> Graph:
    """Parse the DIMACS shortest-path format (``p sp n m`` / ``a u v w``, 1-indexed)."""
    n = None
    edges = []
    for lineno, line in enumerate(stream, 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "sp":
                raise GraphFormatError("expected 'p sp <n> <m>'", lineno)
            n = _int(tokens[2], lineno)
            _int(tokens[3], lineno)
        elif kind == "a":
            if n is None:
                raise GraphFormatError("arc before problem line", lineno)
            if len(tokens) not in (3, 4):
                raise GraphFormatError("expected 'a <u> <v> <w>'", lineno)
            u, v = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint out of range [1, {n}]", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph.from_pairs(n, edges)


_MM_HEADER = re.compile(
    r"%%MatrixMarket\s+matrix\s+coordinate\s+(pattern|real|integer|double)\s+(general|symmetric)\s*$",
    re.IGNORECASE,
)


def parse_matrix_market(stream: IO[str]) -> Graph:
    """Parse a MatrixMarket coordinate file. Symmetric entries are stored once, not mirrored."""
    lines = enumerate(stream, 1)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise GraphFormatError("empty stream") from None
    if not _MM_HEADER.match(first.strip()):
        raise GraphFormatError(f"unsupported header {first.strip()!r}", lineno)

    size = None
    edges = []
    for lineno, line in lines:
        text = line.strip()
        if not text or text.startswith("%"):
            continue
        tokens = text.split()
        if size is None:
            if len(tokens) != 3:
                raise GraphFormatError("expected size line 'rows cols nnz'", lineno)
            size = [_int(t, lineno) for t in tokens]
            continue
        if len(tokens) < 2:
            raise GraphFormatError("expected an entry 'i j [value]'", lineno)
        i, j = _int(tokens[0], lineno), _int(tokens[1], lineno)
        if not (1 <= i <= size[0] and 1 <= j <= size[1]):
            raise GraphFormatError(f"index ({i}, {j}) outside {size[0]}x{size[1]}", lineno)
        edges.append((i - 1, j - 1))
    if size is None:
        raise GraphFormatError("missing size line")
    if len(edges) != size[2]:
        raise GraphFormatError(f"declared {size[2]} entries, found {len(edges)}")
    return Graph.from_pairs(max(size[0], size[1]), edges)


FORMATS = {
    "edgelist": parse_edge_list,
    "dimacs": parse_dimacs,
    "mtx": parse_matrix_market,
}


def load(path, fmt: str = "edgelist") -> Graph:
    try:
        parser = FORMATS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(FORMATS)}") from None
    with open(path) as f:
        return parser(f)


# -- writers ------------------------------------------------------------------


def write_edge_list(graph: Graph, stream: IO[str], header: bool = False) -> None:
    if header:
        stream.write(f"{graph.n} {graph.m}\n")
    if graph.m:
        np.savetxt(stream, graph.edges, fmt="%d")


def write_dimacs(graph: Graph, stream: IO[str]) -> None:
    """Arcs get unit weight; the format has no weight-free variant."""
    stream.write(f"p sp {graph.n} {graph.m}\n")
    if graph.m:
        arcs = np.column_stack([graph.edges + 1, np.ones(graph.m, dtype=VERTEX_DTYPE)])
        np.savetxt(stream, arcs, fmt="a %d %d %d")


def write_matrix_market(graph: Graph, stream: IO[str]) -> None:
    stream.write("%%MatrixMarket matrix coordinate pattern general\n")
    stream.write(f"{graph.n} {graph.n} {graph.m}\n")
    if graph.m:
        np.savetxt(stream, graph.edges + 1, fmt="%d")


# -- generators ---------------------------------------------------------------


def erdos_renyi(n: int, m: int, seed: int = 0) -> Graph:
    """``m`` edges with both endpoints uniform on ``[0, n)``, sampled with replacement."""
    if n <= 0:
        raise ValueError("erdos_renyi needs at least one vertex")
    if m < 0:
        raise ValueError("edge count must be non-negative")
    rng = np.random.default_rng(seed)
    return Graph(n, rng.integers(0, n, size=(m, 2), dtype=VERTEX_DTYPE))


def rmat(scale: int, edge_factor: int = 16, a: float = 0.57, b: float = 0.19,
         c: float = 0.19, d: float = 0.05, seed: int = 0) -> Graph:
    """Recursive-matrix generator on ``2**scale`` vertices with ``edge_factor * 2**scale`` edges.

    Quadrant probabilities are applied unperturbed at every level and vertex
    ids are not permuted, so low ids carry the highest degrees.
    """
    if scale < 0 or scale > 40:
        raise ValueError("scale must be in [0, 40]")
    if edge_factor <= 0:
        raise ValueError("edge_factor must be positive")
    probs = np.array([a, b, c, d], dtype=float)
    if (probs < 0).any() or abs(probs.sum() - 1.0) > 1e-9:
        raise ValueError(f"rmat probabilities must be non-negative and sum to 1, got {probs.sum()!r}")
    n = 1 << scale
    m = edge_factor * n
    rng = np.random.default_rng(seed)
    src = np.zeros(m, dtype=VERTEX_DTYPE)
    dst = np.zeros(m, dtype=VERTEX_DTYPE)
    ab, abc = a + b, a + b + c
    for _ in range(scale):
        r = rng.random(m)
        # quadrants: a=(0,0) b=(0,1) c=(1,0) d=(1,1)
        src <<= 1
        dst <<= 1
        src += r >= ab
        dst += ((r >= a) & (r < ab)) | (r >= abc)
    return Graph(n, np.stack([src, dst], axis=1))


def grid(rows: int, cols: int) -> Graph:
    """4-neighbour lattice, row-major ids; all row edges first, then column edges."""
    if rows <= 0 or cols <= 0:
        raise ValueError("grid dimensions must be positive")
    ids = np.arange(rows * cols, dtype=VERTEX_DTYPE).reshape(rows, cols)
    horizontal = np.stack([ids[:, :-1].ravel(), ids[:, 1:].ravel()], axis=1)
    vertical = np.stack([ids[:-1, :].ravel(), ids[1:, :].ravel()], axis=1)
    return Graph(rows * cols, np.concatenate([horizontal, vertical]))


def _parse_kv(body: str) -> dict[str, str]:
    out = {}
    for item in filter(None, body.split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def generate(spec: str, seed: int = 0) -> Graph:
    """Build a graph from a generator spec string.

    ``grid:RxC``, ``er:n=N,m=M[,seed=S]`` or
    ``rmat:scale=K[,ef=F][,a=..,b=..,c=..,d=..][,seed=S]``.
    ``seed`` is used when the spec carries none.
    """
    kind, _, body = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "grid":
            r, _, c = body.lower().partition("x")
            return grid(int(r), int(c))
        kv = _parse_kv(body)
        s = int(kv.pop("seed", seed))
        if kind in ("er", "erdos_renyi"):
            g = erdos_renyi(int(kv.pop("n")), int(kv.pop("m")), seed=s)
        elif kind == "rmat":
            g = rmat(
                int(kv.pop("scale")),
                int(kv.pop("ef", kv.pop("edge_factor", 16))),
                *(float(kv.pop(k, dflt)) for k, dflt in zip("abcd", (0.57, 0.19, 0.19, 0.05))),
                seed=s,
            )
        else:
            raise ValueError(f"unknown generator {kind!r}")
    except KeyError as exc:
        raise ValueError(f"generator spec {spec!r} is missing {exc.args[0]!r}") from None
    if kv:
        raise ValueError(f"unused generator parameters: {sorted(kv)}")
    return g
