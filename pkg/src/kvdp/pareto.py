"""Vector-valued shortest paths under component-wise domination.

Labels live in ``K_n``: k-tuples of nonnegative integers with sum at most
``n``.  Anything that would leave ``K_n`` is dropped, which bounds every
label set by ``(n + 1) ** k`` vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInputError, NotFoundError

Vector = tuple  # tuple[int, ...]


def _check_arity(x, y):
    if len(x) != len(y):
        raise InvalidInputError(f"arity mismatch: {len(x)} vs {len(y)}")


def dominated(x: Sequence[int], y: Sequence[int]) -> bool:
    """``x <= y`` component-wise."""
    _check_arity(x, y)
    return all(a <= b for a, b in zip(x, y))


def strictly_dominated(x: Sequence[int], y: Sequence[int]) -> bool:
    """``x < y``: dominated and different."""
    return dominated(x, y) and tuple(x) != tuple(y)


def _leq(x, y):
    for a, b in zip(x, y):
        if a > b:
            return False
    return True


class ParetoSet:
    """Antichain of vectors, iterated in lexicographic order."""

    __slots__ = ("vectors",)

    def __init__(self, vectors: Iterable[Sequence[int]] = ()):
        self.vectors = tuple(sorted(tuple(v) for v in vectors))

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __bool__(self):
        return bool(self.vectors)

    def __contains__(self, v):
        return tuple(v) in self.vectors

    def __eq__(self, other):
        if isinstance(other, ParetoSet):
            return self.vectors == other.vectors
        if isinstance(other, (set, frozenset)):
            return set(self.vectors) == {tuple(v) for v in other}
        return NotImplemented

    def __hash__(self):
        return hash(self.vectors)

    def __repr__(self):
        return f"ParetoSet({list(self.vectors)})"

    def covers(self, x: Sequence[int]) -> bool:
        """Some member is ``<= x``."""
        return any(_leq(v, x) for v in self.vectors)


def minimal_set(vs: Iterable[Sequence[int]]) -> ParetoSet:
    vs = {tuple(v) for v in vs}
    if len({len(v) for v in vs}) > 1:
        raise InvalidInputError("vectors of mixed arity")
    # lexicographic order puts every dominator before what it dominates
    keep: list[Vector] = []
    for v in sorted(vs):
        if not any(_leq(u, v) for u in keep):
            keep.append(v)
    return ParetoSet(keep)


@dataclass
class WeightedDigraph:
    """Plain vector-weighted digraph with a designated source and sink."""

    vertex_count: int
    source: int
    sink: int
    k: int
    weights: dict = field(default_factory=dict)  # (u, v) -> vector

    def out_edges(self) -> list[list[tuple[int, Vector]]]:
        adj = [[] for _ in range(self.vertex_count)]
        for (u, v), w in sorted(self.weights.items()):
            adj[u].append((v, tuple(w)))
        return adj


def check_weights(weights: Mapping, k: int, n: int) -> None:
    for e, w in weights.items():
        if len(w) != k:
            raise InvalidInputError(f"edge {e} weight {w} has arity {len(w)}, expected {k}")
        if any(x < 0 for x in w) or sum(w) > n:
            raise InvalidInputError(f"edge {e} weight {w} lies outside K_{n}")


@dataclass
class LabelSearch:
    """Outcome of the label iteration: final labels and one predecessor per label."""

    labels: list[tuple[Vector, ...]]
    pred: dict  # (v, vector) -> (u, vector) ; absent for the source's zero label
    rounds: int
    source: int
    sink: int


def _adjacency(graph):
    if hasattr(graph, "out_edges"):
        return graph.out_edges()
    raise InvalidInputError("graph must provide out_edges()")


def label_rounds(graph, n: int) -> Iterator[list[tuple[Vector, ...]]]:
    """Yield ``Q_0, Q_1, ...`` (one label tuple per vertex) until they stop changing."""
    history: list = []
    _search(graph, n, history.append)
    yield from history


def _search(graph, n: int, on_round=None) -> LabelSearch:
    check_weights(graph.weights, graph.k, n)
    V = graph.vertex_count
    adj = _adjacency(graph)
    zero = (0,) * graph.k
    labels: list[list[Vector]] = [[] for _ in range(V)]
    labels[graph.source] = [zero]
    pred: dict = {}
    fresh = {graph.source: [zero]}
    if on_round:
        on_round([tuple(sorted(q)) for q in labels])
    rounds = 0
    for _ in range(V):
        if not fresh:
            break
        rounds += 1
        candidates: dict[int, list] = {}
        for u in sorted(fresh):
            xs = sorted(fresh[u])
            for v, w in adj[u]:
                bucket = candidates.setdefault(v, [])
                for x in xs:
                    y = tuple(a + b for a, b in zip(x, w))
                    if sum(y) <= n:
                        bucket.append((y, u, x))
        fresh = {}
        for v in sorted(candidates):
            current = labels[v]
            added = []
            for y, u, x in candidates[v]:
                if any(_leq(z, y) for z in current):
                    continue
                current = [z for z in current if not _leq(y, z)]
                current.append(y)
                added.append(y)
                pred.setdefault((v, y), (u, x))
            if added:
                labels[v] = current
                survivors = [y for y in added if y in current]
                if survivors:
                    fresh[v] = survivors
        if on_round:
            on_round([tuple(sorted(q)) for q in labels])
    return LabelSearch([tuple(sorted(q)) for q in labels], pred, rounds, graph.source, graph.sink)


def vector_shortest_paths(graph, n: int) -> ParetoSet:
    """Minimal edge-weight sums over all source-to-sink paths, restricted to ``K_n``."""
    result = _search(graph, n)
    return ParetoSet(result.labels[graph.sink])


def run_labels(graph, n: int) -> LabelSearch:
    return _search(graph, n)


def reconstruct_witness(graph, target: Sequence[int], n: int | None = None,
                        search: LabelSearch | None = None) -> list[int]:
    """A simple source-to-sink path whose weight sum is exactly ``target``."""
    target = tuple(target)
    if search is None:
        if n is None:
            n = sum(target)
        search = _search(graph, n)
    sink = search.sink
    if target not in search.labels[sink]:
        raise NotFoundError(f"{target} is not a minimal label at the sink")
    path = [sink]
    v, x = sink, target
    while (v, x) in search.pred:
        v, x = search.pred[(v, x)]
        path.append(v)
    if v != search.source:
        raise NotFoundError(f"predecessor chain for {target} does not reach the source")
    path.reverse()
    return path


def path_weight(graph, path: Sequence[int]) -> Vector:
    total = [0] * graph.k
    for u, v in zip(path, path[1:]):
        w = graph.weights[(u, v)]
        for i, a in enumerate(w):
            total[i] += a
    return tuple(total)
