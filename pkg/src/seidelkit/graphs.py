"""Dense undirected graphs, the graph6 codec, and twin blow-up constructions.

Graphs are stored as dense 0/1 adjacency matrices with a canonical vertex
order.  Loops are carried on the diagonal and gated by an explicit flag, so
the loop-adding / loop-stripping operators stay honest.  Everything here is
a pure function over immutable values; ``Graph`` instances can be shared
freely between workers.

The two product constructions replace every vertex by m "twin" copies:

* ``blowup(g, m)``        -- twins form independent sets; the adjacency
                             matrix is the Kronecker product J_m (x) A.
* ``clique_blowup(g, m)`` -- twins form cliques; the adjacency matrix is
                             J_m (x) (A + I) - I.

Both return simple graphs on m*n vertices.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_MAX_DIM",
    "Graph",
    "Graph6Error",
    "graph_from_graph6",
    "graph_to_graph6",
    "complement",
    "add_loops",
    "remove_loops",
    "kronecker",
    "blowup",
    "clique_blowup",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "graph_from_edges",
]

# Hard cap on the order of any constructed matrix/graph.  Dense storage is
# quadratic, so this bounds memory at ~100 MB for int8 adjacency.
DEFAULT_MAX_DIM = 10_000

# Largest order representable in the 3-byte graph6 size field: the first
# 6-bit chunk may not be 63 (byte 126 is the long-size escape).
_GRAPH6_MAX_ORDER = 258_047

_GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True, eq=False)
class Graph:
    """Dense undirected graph on vertices 0..n-1.

    ``adj`` is a symmetric 0/1 matrix; diagonal entries mark loops and are
    only permitted when ``loops_allowed`` is set.  The array is copied and
    frozen at construction.
    """

    adj: np.ndarray
    loops_allowed: bool = False

    def __post_init__(self):
        a = np.asarray(self.adj)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if a.shape[0] == 0:
            raise ValueError("graph must have at least one vertex")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if not self.loops_allowed and a.diagonal().any():
            raise ValueError("loops present but loops_allowed is false")
        a = a.astype(np.int8, copy=True)
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def edge_count(self) -> int:
        off = int(self.adj.sum() - self.adj.diagonal().sum()) // 2
        return off + int(self.adj.diagonal().sum())

    def is_simple(self) -> bool:
        return not self.adj.diagonal().any()

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.loops_allowed == other.loops_allowed
                and np.array_equal(self.adj, other.adj))

    def __hash__(self):
        return hash((self.n, self.loops_allowed, self.adj.tobytes()))

    def __repr__(self):
        kind = "graph" if self.is_simple() else "looped graph"
        return f"Graph({kind}, n={self.n}, edges={self.edge_count})"


def _require_simple(g: Graph, what: str) -> None:
    if not g.is_simple():
        raise ValueError(f"{what} requires a loop-free graph")


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------
#
# Standard format: a size field N(n) followed by the upper triangle of the
# adjacency matrix in column-major order -- bits (0,1), (0,2), (1,2), (0,3),
# ... -- packed big-endian into 6-bit chunks, each chunk stored as one ASCII
# byte chunk+63.  Sizes: one byte for n <= 62, escape byte 126 plus three
# bytes (18 bits) for 63 <= n <= 258047.  Lines may carry the optional
# ">>graph6<<" prefix.  sparse6 (':') and digraph6 ('&') are rejected.


def _payload_bits(data: bytes, start: int, nbits: int) -> np.ndarray:
    """Decode 6-bit chunks from data[start:] into a flat 0/1 array."""
    nbytes = (nbits + 5) // 6
    end = start + nbytes
    if len(data) < end:
        raise Graph6Error("truncated bit payload", len(data))
    if len(data) > end:
        raise Graph6Error("trailing garbage after bit payload", end)
    vals = np.frombuffer(data, dtype=np.uint8, count=nbytes, offset=start)
    bad = np.where((vals < 63) | (vals > 126))[0]
    if bad.size:
        raise Graph6Error("payload byte out of graph6 range", start + int(bad[0]))
    bits = np.unpackbits((vals - 63).reshape(-1, 1), axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        first_bad = nbits + int(np.argmax(bits[nbits:]))
        raise Graph6Error("nonzero padding bits", start + first_bad // 6)
    return bits[:nbits]


def _decode_order(data: bytes) -> tuple[int, int]:
    """Read the size field; return (n, bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    b0 = data[0]
    if b0 == 58:  # ':'
        raise Graph6Error("sparse6 input not supported", 0)
    if b0 == 38:  # '&'
        raise Graph6Error("digraph6 input not supported", 0)
    if b0 < 63 or b0 > 126:
        raise Graph6Error("size byte out of graph6 range", 0)
    if b0 != 126:
        return b0 - 63, 1
    # long form: 126 then 18 bits in three bytes
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("graph order beyond supported long form", 1)
    if len(data) < 4:
        raise Graph6Error("truncated long-form size field", len(data))
    n = 0
    for i in (1, 2, 3):
        b = data[i]
        if b < 63 or b > 126:
            raise Graph6Error("size byte out of graph6 range", i)
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise Graph6Error("non-canonical long-form size field", 1)
    return n, 4


def graph_from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line into a simple :class:`Graph`.

    Raises :class:`Graph6Error` (with byte offset) on malformed headers,
    out-of-range bytes, truncated or oversized payloads, and nonzero
    padding bits.
    """
    if isinstance(text, str):
        for i, ch in enumerate(text):
            if ord(ch) > 126:
                raise Graph6Error("non-ASCII character", i)
        data = text.encode("ascii")
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(_GRAPH6_HEADER.encode()):
        data = data[len(_GRAPH6_HEADER):]
    elif data.startswith(b">>"):
        raise Graph6Error("unrecognized format header", 0)

    n, start = _decode_order(data)
    if n == 0:
        raise Graph6Error("order-zero graph not supported", 0)
    nbits = n * (n - 1) // 2
    bits = _payload_bits(data, start, nbits)

    adj = np.zeros((n, n), dtype=np.int8)
    k = 0
    for j in range(1, n):
        adj[:j, j] = bits[k:k + j]
        k += j
    adj |= adj.T
    return Graph(adj)


def graph_to_graph6(g: Graph) -> str:
    """Encode a simple graph as its canonical graph6 line (no trailing newline)."""
    _require_simple(g, "graph6 encoding")
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= _GRAPH6_MAX_ORDER:
        head = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise ValueError(f"graph order {n} exceeds graph6 long form")
    if n > 1:
        bits = np.concatenate([g.adj[:j, j] for j in range(1, n)]).astype(np.uint8)
    else:
        bits = np.zeros(0, dtype=np.uint8)
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    chunks = bits.reshape(-1, 6) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)
    return bytes(head + list((chunks + 63).astype(np.uint8))).decode("ascii")


# ---------------------------------------------------------------------------
# Complement and loop operators
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    """Edge-complement of a simple graph (an involution; diagonal stays zero)."""
    _require_simple(g, "complement")
    n = g.n
    adj = np.ones((n, n), dtype=np.int8) - np.eye(n, dtype=np.int8) - g.adj
    return Graph(adj)


def add_loops(g: Graph) -> Graph:
    """Attach a loop to every vertex: adjacency becomes A + I."""
    _require_simple(g, "add_loops")
    return Graph(g.adj + np.eye(g.n, dtype=np.int8), loops_allowed=True)


def remove_loops(g: Graph) -> Graph:
    """Strip all loops (zero the diagonal); no-op on simple graphs."""
    adj = np.array(g.adj)
    np.fill_diagonal(adj, 0)
    return Graph(adj)


# ---------------------------------------------------------------------------
# Kronecker product and the blow-up constructions
# ---------------------------------------------------------------------------


def kronecker(a: np.ndarray, b: np.ndarray,
              max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Kronecker (tensor) product of two square integer matrices.

    Block index convention: entry ((i,u),(j,v)) = a[i,j]*b[u,v] with the
    pair (i,u) flattened to i*len(b)+u.  The eigenvalues of the result are
    all pairwise products of the factors' eigenvalues.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("first factor must be square")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError("second factor must be square")
    for factor in (a, b):
        if not issubclass(factor.dtype.type, np.integer):
            raise ValueError("kronecker expects integer matrices")
    out_dim = a.shape[0] * b.shape[0]
    if out_dim > max_dim:
        raise ValueError(
            f"kronecker product dimension {out_dim} exceeds cap {max_dim}")
    return np.kron(a.astype(np.int64), b.astype(np.int64))


def _check_blowup_args(g: Graph, m: int, max_dim: int) -> None:
    _require_simple(g, "blow-up construction")
    if m < 2:
        raise ValueError(f"blow-up multiplicity must be >= 2, got {m}")
    if m * g.n > max_dim:
        raise ValueError(
            f"blow-up order {m * g.n} exceeds dimension cap {max_dim}")


def blowup(g: Graph, m: int, max_dim: int = DEFAULT_MAX_DIM) -> Graph:
    """Replace every vertex by m independent twins.

    The result has adjacency J_m (x) A(g): copies (i,u) and (j,v) are
    adjacent exactly when uv is an edge of g, so every original edge turns
    into a complete bipartite block on the two twin classes and twin
    classes themselves stay independent.  Simple, on m*n vertices.
    """
    _check_blowup_args(g, m, max_dim)
    ones = np.ones((m, m), dtype=np.int64)
    adj = kronecker(ones, g.adj, max_dim=max_dim)
    assert not adj.diagonal().any()
    return Graph(adj)


def clique_blowup(g: Graph, m: int, max_dim: int = DEFAULT_MAX_DIM) -> Graph:
    """Replace every vertex by m mutually adjacent twins.

    The result has adjacency J_m (x) (A(g) + I) - I: edges of g become
    complete bipartite blocks and each twin class forms a clique.  Simple,
    on m*n vertices.
    """
    _check_blowup_args(g, m, max_dim)
    ones = np.ones((m, m), dtype=np.int64)
    closed = g.adj.astype(np.int64) + np.eye(g.n, dtype=np.int64)
    adj = kronecker(ones, closed, max_dim=max_dim) - np.eye(m * g.n, dtype=np.int64)
    assert not adj.diagonal().any()
    return Graph(adj)


# ---------------------------------------------------------------------------
# Small named graphs (test and CLI conveniences)
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(np.zeros((n, n), dtype=np.int8))


def complete_graph(n: int) -> Graph:
    return Graph(np.ones((n, n), dtype=np.int8) - np.eye(n, dtype=np.int8))


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def graph_from_edges(n: int, edges) -> Graph:
    adj = np.zeros((n, n), dtype=np.int8)
    for u, v in edges:
        if u == v:
            raise ValueError("loops not supported by graph_from_edges")
        adj[u, v] = adj[v, u] = 1
    return Graph(adj)
