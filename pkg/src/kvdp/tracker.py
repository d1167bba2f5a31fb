"""The tracker digraph: rails plus a source and sink, joined by the arrow relation.

Tracker vertex ``i`` is rail ``i``; the source and sink take the two ids
after the last rail.  Each edge carries the vector of vertices it adds to
every member path, so a source-to-sink path sums to the vertex counts of
the linkage it traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .digraph import members
from .errors import InvalidInputError, InvariantViolation
from .rails import LinkageRecord, ProblemInstance, Rail, linkage_defect, linkage_records


@dataclass
class Tracker:
    instance: ProblemInstance
    m: int
    c: int
    rails: list[Rail]
    weights: dict = field(default_factory=dict)  # (u, v) -> vector, sorted by (u, v)

    @property
    def k(self) -> int:
        return self.instance.k

    @property
    def source(self) -> int:
        return len(self.rails)

    @property
    def sink(self) -> int:
        return len(self.rails) + 1

    @property
    def vertex_count(self) -> int:
        return len(self.rails) + 2

    @property
    def edges(self):
        return self.weights.keys()

    def out_edges(self) -> list[list[tuple[int, tuple]]]:
        adj = [[] for _ in range(self.vertex_count)]
        for (u, v), w in self.weights.items():
            adj[u].append((v, w))
        return adj

    def label(self, v: int) -> str:
        if v == self.source:
            return "s0"
        if v == self.sink:
            return "t0"
        return f"r{v}"


def _successor_pairs(records: list[LinkageRecord]):
    """Yield ``(rec, rec2, weight)`` for linkage pairs meeting the path-union and containment bullets.

    Candidates are looked up by the tuple of their members' first vertices;
    a successor's j-th member must start somewhere on the j-th member of
    the predecessor.
    """
    index: dict[tuple, list[LinkageRecord]] = {}
    for rec in records:
        index.setdefault(tuple(P[0] for P in rec.paths), []).append(rec)
    for rec in records:
        paths = rec.paths
        for starts in product(*(range(len(P)) for P in paths)):
            key = tuple(P[i] for P, i in zip(paths, starts))
            bucket = index.get(key)
            if not bucket:
                continue
            tails = [P[i:] for P, i in zip(paths, starts)]
            tail_masks = 0
            for P, i in zip(paths, starts):
                for v in P[i:]:
                    tail_masks |= 1 << v
            for rec2 in bucket:
                if rec2.vmask & rec.vmask != tail_masks:
                    continue
                ok = True
                for P2, tail in zip(rec2.paths, tails):
                    if len(P2) < len(tail) or P2[:len(tail)] != tail:
                        ok = False
                        break
                if ok:
                    weight = tuple(len(P2) - len(tail) for P2, tail in zip(rec2.paths, tails))
                    yield rec, rec2, weight


def build_tracker(inst: ProblemInstance, m: int, c: int) -> Tracker:
    records = linkage_records(inst, m, c)
    rails = [r for rec in records for r in rec.rails]
    T = Tracker(inst, m, c, rails)
    s0, t0 = T.source, T.sink
    k = inst.k
    sources, sinks = inst.sources, inst.sinks
    weights = {}
    for rec in records:
        if all(P[0] == s for P, s in zip(rec.paths, sources)):
            w = tuple(len(P) for P in rec.paths)
            for r in rec.rails:
                weights[(s0, r.id)] = w
        if all(P[-1] == t for P, t in zip(rec.paths, sinks)):
            for r in rec.rails:
                weights[(r.id, t0)] = (0,) * k

    for rec, rec2, w in _successor_pairs(records):
        new = rec2.vmask & ~rec.vmask
        dropped = rec.vmask & ~rec2.vmask
        union1 = rec.union_mask
        union2 = rec2.union_mask
        heads = [r for r in rec.rails if not new & ~r.x_mask and not r.y_mask & ~union2]
        if not heads:
            continue
        tails = [r for r in rec2.rails if not dropped & ~r.y_mask and not r.x_mask & ~union1]
        for r in heads:
            for r2 in tails:
                if r2.x_mask & r.y_mask or r.id == r2.id:
                    continue
                weights[(r.id, r2.id)] = w
    T.weights = dict(sorted(weights.items()))
    return T


def trace_path(inst: ProblemInstance, T: Tracker, P: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Merge the rails along a source-to-sink tracker path into a linkage for ``inst``."""
    P = list(P)
    if len(P) < 3 or P[0] != T.source or P[-1] != T.sink:
        raise InvalidInputError("tracker path must run from s0 to t0 through at least one rail")
    if len(set(P)) != len(P):
        raise InvalidInputError("tracker path repeats a vertex")
    for u, v in zip(P, P[1:]):
        if (u, v) not in T.weights:
            raise InvalidInputError(f"({T.label(u)}, {T.label(v)}) is not a tracker edge")
    merged = [list(M) for M in T.rails[P[1]].paths]
    for prev, rid in zip(P[1:-2], P[2:-1]):
        for j, (M0, M) in enumerate(zip(T.rails[prev].paths, T.rails[rid].paths)):
            # M begins with the part it shares with the previous rail's member
            shared = len(set(M0) & set(M))
            merged[j].extend(M[shared:])
    L = tuple(tuple(M) for M in merged)
    problem = linkage_defect(inst, L, for_instance=True)
    if problem is not None:
        raise InvariantViolation(f"traced union is not a linkage for the instance: {problem}")
    return L


def dump_tracker(T: Tracker) -> str:
    """Deterministic plain-text listing of rails and weighted edges."""
    def fmt_set(mask):
        return "{" + ",".join(str(v) for v in members(mask)) + "}"

    inst = T.instance
    lines = [
        f"tracker k={inst.k} m={T.m} c={T.c} n={inst.n}",
        "terminals " + " ".join(f"{s}->{t}" for s, t in inst.terminals),
        f"rails {len(T.rails)}",
    ]
    for r in T.rails:
        paths = " | ".join("-".join(str(v) for v in M) for M in r.paths)
        lines.append(f"r{r.id} paths [{paths}] X {fmt_set(r.x_mask)} Y {fmt_set(r.y_mask)}")
    lines.append(f"edges {len(T.weights)}")
    for (u, v), w in T.weights.items():
        lines.append(f"{T.label(u)} -> {T.label(v)} ({' '.join(str(x) for x in w)})")
    return "\n".join(lines) + "\n"
