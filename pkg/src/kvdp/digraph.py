"""Dense simple digraphs on vertices ``0..n-1`` and their structural predicates.

Adjacency is held as one out-neighbour and one in-neighbour bitmask per
vertex, so every adjacency query is a shift and a mask.  Paths are plain
tuples of vertex ids.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError, ParseError

Path = tuple  # tuple[int, ...], nonempty, distinct vertices


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertex ids in ``mask``, ascending."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


class Digraph:
    """Loop-free digraph without parallel edges; antiparallel pairs allowed.

    Instances are immutable after construction.
    """

    __slots__ = ("n", "edges", "out_mask", "in_mask", "_paths_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidInputError(f"vertex count must be nonnegative, got {n}")
        out_mask = [0] * n
        in_mask = [0] * n
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"loop at vertex {u}")
            edge_set.add((u, v))
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        self.n = n
        self.edges = frozenset(edge_set)
        self.out_mask = tuple(out_mask)
        self.in_mask = tuple(in_mask)
        self._paths_cache = {}

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]]) -> "Digraph":
        n = len(matrix)
        return cls(n, ((u, v) for u in range(n) for v in range(n) if matrix[u][v]))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def successors(self, u: int) -> list[int]:
        return members(self.out_mask[u])

    def predecessors(self, v: int) -> list[int]:
        return members(self.in_mask[v])

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph(self.n, self.edges | set(extra))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Digraph(n={self.n}, edges={sorted(self.edges)})"

    def simple_paths(self, max_vertices: int) -> tuple[Path, ...]:
        """All directed paths with at most ``max_vertices`` vertices, lexicographic.

        Cached per graph; rail enumeration asks for the same bound repeatedly.
        """
        max_vertices = min(max_vertices, self.n)
        cached = self._paths_cache.get(max_vertices)
        if cached is None:
            cached = tuple(sorted(_dfs_paths(self, max_vertices)))
            self._paths_cache[max_vertices] = cached
        return cached


def _dfs_paths(G: Digraph, max_vertices: int) -> Iterator[Path]:
    if max_vertices < 1:
        return
    out = G.out_mask
    stack = [((v,), 1 << v) for v in range(G.n)]
    while stack:
        path, used = stack.pop()
        yield path
        if len(path) == max_vertices:
            continue
        nxt = out[path[-1]] & ~used
        while nxt:
            low = nxt & -nxt
            w = low.bit_length() - 1
            stack.append((path + (w,), used | low))
            nxt ^= low


def is_path(G: Digraph, P: Sequence[int]) -> bool:
    if not P:
        return False
    if any(not 0 <= v < G.n for v in P):
        return False
    if len(set(P)) != len(P):
        return False
    return all(G.out_mask[a] >> b & 1 for a, b in zip(P, P[1:]))


def require_path(G: Digraph, P: Sequence[int]) -> None:
    if not is_path(G, P):
        raise InvalidInputError(f"{tuple(P)} is not a path of the digraph")


def is_semicomplete(G: Digraph) -> bool:
    full = G.full_mask
    for v in range(G.n):
        if (G.out_mask[v] | G.in_mask[v] | 1 << v) != full:
            return False
    return True


def is_minimal_path(G: Digraph, P: Sequence[int]) -> bool:
    """True iff no edge of ``G`` jumps forward over a vertex of ``P``."""
    require_path(G, P)
    return _is_minimal(G, P)


def _is_minimal(G: Digraph, P: Sequence[int]) -> bool:
    for i, u in enumerate(P):
        ahead = mask_of(P[i + 2:])
        if G.out_mask[u] & ahead:
            return False
    return True


def is_d_path_dominant(G: Digraph, d: int) -> bool:
    if d < 1:
        raise InvalidInputError(f"d must be at least 1, got {d}")
    full = G.full_mask
    out, inn = G.out_mask, G.in_mask
    for P in G.simple_paths(d):
        if len(P) != d or not _is_minimal(G, P):
            continue
        covered = 0
        for v in P:
            covered |= 1 << v | out[v] | inn[v]
        if covered != full:
            return False
    return True


def _check_outside(F: Iterable[int], v: int) -> int:
    fmask = mask_of(F)
    if fmask >> v & 1:
        raise InvalidInputError(f"vertex {v} belongs to F")
    return fmask


def is_inward(G: Digraph, F: Iterable[int], v: int) -> bool:
    """No vertex of ``F`` has an edge into ``v``.  Vacuously true for empty ``F``."""
    fmask = _check_outside(F, v)
    return not G.in_mask[v] & fmask


def is_outward(G: Digraph, F: Iterable[int], v: int) -> bool:
    """``v`` has no edge into any vertex of ``F``.  Vacuously true for empty ``F``."""
    fmask = _check_outside(F, v)
    return not G.out_mask[v] & fmask


# -- text format -------------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _tokens(raw: str):
    """(column, token) pairs, 1-based columns."""
    col = 0
    for tok in raw.split():
        col = raw.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def parse_int(tok: str, lineno: int, col: int, source=None) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno, col, source) from None


def parse_graph(text: str, source: str | None = None) -> Digraph:
    lines = _content_lines(text)
    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise ParseError("empty graph file: missing vertex count", 1, 1, source) from None
    toks = list(_tokens(raw))
    if len(toks) != 1:
        raise ParseError("first line must hold only the vertex count", lineno, toks[-1][0], source)
    col, tok = toks[0]
    n = parse_int(tok, lineno, col, source)
    if n < 0:
        raise ParseError("vertex count must be nonnegative", lineno, col, source)

    edges = []
    seen = {}
    for lineno, raw in lines:
        toks = list(_tokens(raw))
        if len(toks) != 2:
            col = toks[2][0] if len(toks) > 2 else len(raw.rstrip()) + 1
            raise ParseError("edge line must be 'u v'", lineno, col, source)
        (cu, tu), (cv, tv) = toks
        u = parse_int(tu, lineno, cu, source)
        v = parse_int(tv, lineno, cv, source)
        for val, col in ((u, cu), (v, cv)):
            if not 0 <= val < n:
                raise ParseError(f"vertex {val} out of range 0..{n - 1}", lineno, col, source)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, cu, source)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v} (first on line {seen[(u, v)]})", lineno, cu, source)
        seen[(u, v)] = lineno
        edges.append((u, v))
    return Digraph(n, edges)


def format_graph(G: Digraph) -> str:
    lines = [str(G.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(G.edges))
    return "\n".join(lines) + "\n"
