"""Exponential-time ground truth.

Everything here is computed straight from the definitions over the raw
edge set, deliberately sharing no code with the rail, tracker or label
machinery it is used to check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator, Sequence

from .digraph import Digraph
from .errors import BudgetExceeded
from .pareto import ParetoSet
from .rails import ProblemInstance


@dataclass
class OracleBudget:
    max_vertices: int = 9
    max_linkage_size: int = 50_000_000  # total vertices placed across all partial linkages
    time_limit: float | None = None  # seconds

    def meter(self) -> "_Meter":
        return _Meter(self)


@dataclass
class _Meter:
    budget: OracleBudget
    placed: int = 0
    started: float = field(default_factory=time.monotonic)

    def check_graph(self, n: int) -> None:
        if n > self.budget.max_vertices:
            raise BudgetExceeded(f"{n} vertices exceeds oracle cap {self.budget.max_vertices}")

    def tick(self, count: int = 1) -> None:
        self.placed += count
        if self.placed > self.budget.max_linkage_size:
            raise BudgetExceeded(f"enumerated more than {self.budget.max_linkage_size} vertices")
        if self.budget.time_limit is not None and self.placed % 1024 == 0:
            if time.monotonic() - self.started > self.budget.time_limit:
                raise BudgetExceeded(f"oracle exceeded {self.budget.time_limit}s")


def _meter(budget):
    return (budget or OracleBudget()).meter()


def _minimal(vectors) -> ParetoSet:
    vectors = set(vectors)
    return ParetoSet(
        x for x in vectors
        if not any(y != x and all(a <= b for a, b in zip(y, x)) for y in vectors)
    )


def _paths_between(edges, n, s, t, blocked, meter) -> Iterator[tuple]:
    """Every directed path from ``s`` to ``t`` avoiding ``blocked``."""
    if s in blocked or t in blocked:
        return
    if s == t:
        yield (s,)
        return

    def walk(path, seen):
        meter.tick()
        u = path[-1]
        for v in range(n):
            if (u, v) in edges and v not in seen and v not in blocked:
                if v == t:
                    yield path + (v,)
                else:
                    yield from walk(path + (v,), seen | {v})

    yield from walk((s,), {s})


def oracle_linkages(inst: ProblemInstance, budget: OracleBudget | None = None) -> Iterator[tuple]:
    """All linkages for the instance, by depth-first extension."""
    meter = _meter(budget)
    G = inst.graph
    meter.check_graph(G.n)
    terminals = inst.terminals
    all_terms = {v for pair in terminals for v in pair}

    def extend(i, used, chosen):
        if i == len(terminals):
            yield tuple(chosen)
            return
        s, t = terminals[i]
        # later terminals cannot be used as interior vertices of earlier paths
        blocked = used | (all_terms - {s, t})
        for P in _paths_between(G.edges, G.n, s, t, blocked, meter):
            yield from extend(i + 1, used | set(P), chosen + [P])

    yield from extend(0, set(), [])


def oracle_key_linkages(inst: ProblemInstance, budget: OracleBudget | None = None) -> dict:
    """Key quality -> every linkage realising it (the retained evidence)."""
    by_quality: dict = {}
    for L in oracle_linkages(inst, budget):
        by_quality.setdefault(tuple(len(P) for P in L), []).append(L)
    keys = _minimal(by_quality)
    return {x: by_quality[x] for x in keys}


def oracle_key_qualities(inst: ProblemInstance, budget: OracleBudget | None = None) -> ParetoSet:
    return ParetoSet(oracle_key_linkages(inst, budget))


def oracle_pareto_paths(graph, budget: OracleBudget | None = None, n: int | None = None) -> ParetoSet:
    """Minimal weight sums over all simple source-to-sink paths.

    With ``n`` given, sums outside ``K_n`` are dropped first; the minimal
    elements that remain are the same either way restricted to ``K_n``.
    """
    meter = _meter(budget)
    succ: dict = {}
    for (u, v), w in graph.weights.items():
        succ.setdefault(u, []).append((v, w))
    sums = set()
    zero = (0,) * graph.k

    def walk(u, seen, acc):
        meter.tick()
        if u == graph.sink:
            sums.add(acc)
            return
        for v, w in succ.get(u, ()):
            if v not in seen:
                walk(v, seen | {v}, tuple(a + b for a, b in zip(acc, w)))

    walk(graph.source, {graph.source}, zero)
    if n is not None:
        sums = {x for x in sums if sum(x) <= n}
    return _minimal(sums)


def oracle_max_planar_matching(G: Digraph, Q: Sequence[int], R: Sequence[int], L,
                               budget: OracleBudget | None = None, limit: int | None = None) -> int:
    """Largest planar (Q, R)-matching internally disjoint from ``L``.

    Members are ``q -> r`` edges or ``q -> w -> r`` with ``w`` off ``V(L)``;
    sources advance along ``Q``, targets along ``R``, middles never repeat.
    Stops early once ``limit`` members are found.
    """
    meter = _meter(budget)
    edges = G.edges
    in_L = {v for P in L for v in P}
    middles = [w for w in range(G.n) if w not in in_L]
    Q, R = tuple(Q), tuple(R)
    best = 0

    def search(qi, rj, used, size):
        nonlocal best
        meter.tick()
        if size > best:
            best = size
        if limit is not None and best >= limit:
            return True
        if size + min(len(Q) - qi, len(R) - rj) <= best:
            return False
        for a in range(qi, len(Q)):
            q = Q[a]
            for b in range(rj, len(R)):
                r = R[b]
                if (q, r) in edges:
                    if search(a + 1, b + 1, used, size + 1):
                        return True
                for w in middles:
                    if w not in used and (q, w) in edges and (w, r) in edges:
                        if search(a + 1, b + 1, used | {w}, size + 1):
                            return True
        return False

    search(0, 0, frozenset(), 0)
    return best


# -- definition-level rails and tracker ------------------------------------------

def oracle_a_b(inst: ProblemInstance, L) -> tuple[frozenset, frozenset]:
    G = inst.graph
    edges = G.edges
    in_L = {v for P in L for v in P}
    A, B = set(), set()
    for v in range(G.n):
        if v in in_L:
            continue
        for P, (s, t) in zip(L, inst.terminals):
            if P[-1] != t and not any((u, v) in edges for u in P[:-1]):
                A.add(v)
            if P[0] != s and not any((v, u) in edges for u in P[1:]):
                B.add(v)
    return frozenset(A), frozenset(B)


def _is_path(edges, seq) -> bool:
    return len(set(seq)) == len(seq) and all((a, b) in edges for a, b in zip(seq, seq[1:]))


def _subsets(items):
    items = sorted(items)
    for flags in product((False, True), repeat=len(items)):
        yield frozenset(v for v, f in zip(items, flags) if f)


def oracle_rails(inst: ProblemInstance, m: int, c: int, budget: OracleBudget | None = None) -> set:
    """All rails as ``(paths, X, Y)`` triples, from tuples of distinct vertices."""
    meter = _meter(budget)
    G = inst.graph
    meter.check_graph(G.n)
    edges = G.edges
    seqs = []
    for size in range(1, min(2 * m, G.n) + 1):
        for seq in permutations(range(G.n), size):
            meter.tick(size)
            if _is_path(edges, seq):
                seqs.append(seq)
    rails = set()
    for L in product(seqs, repeat=inst.k):
        flat = [v for P in L for v in P]
        if len(set(flat)) != len(flat):
            continue
        if any(len(P) < 2 * m and P[0] != s and P[-1] != t for P, (s, t) in zip(L, inst.terminals)):
            continue
        A, B = oracle_a_b(inst, L)
        if len(A & B) > c:
            continue
        for X in _subsets(A):
            Y = (A | B) - X
            if Y <= B:
                rails.add((tuple(L), X, frozenset(Y)))
    return rails


def _union_is_path(edges_p, edges_q, verts, start, end) -> bool:
    union = set(edges_p) | set(edges_q)
    if len(union) != len(verts) - 1:
        return False
    nxt = {}
    for a, b in union:
        if a in nxt:
            return False
        nxt[a] = b
    seen = [start]
    while seen[-1] in nxt:
        seen.append(nxt[seen[-1]])
        if len(seen) > len(verts):
            return False
    return len(seen) == len(verts) and set(seen) == set(verts) and seen[-1] == end


def oracle_rail_arrow(r1, r2) -> bool:
    """The three arrow bullets, checked literally on ``(paths, X, Y)`` triples."""
    (L1, X1, Y1), (L2, X2, Y2) = r1, r2
    if (L1, X1, Y1) == (L2, X2, Y2):
        return False
    for P, P2 in zip(L1, L2):
        verts = set(P) | set(P2)
        if not _union_is_path(zip(P, P[1:]), zip(P2, P2[1:]), verts, P[0], P2[-1]):
            return False
        if not set(P2) <= set(P) | X1 or not set(P) <= set(P2) | Y2:
            return False
    return X2 <= X1 and Y1 <= Y2


def oracle_tracker(inst: ProblemInstance, m: int, c: int, budget: OracleBudget | None = None) -> dict:
    """Tracker edges keyed by rail triples (with ``'s0'``/``'t0'``), mapped to weights."""
    rails = sorted(oracle_rails(inst, m, c, budget), key=lambda r: (r[0], sorted(r[1]), sorted(r[2])))
    k = inst.k
    H = {}
    for r in rails:
        L = r[0]
        if all(P[0] == s for P, (s, _) in zip(L, inst.terminals)):
            H[("s0", r)] = tuple(len(P) for P in L)
        if all(P[-1] == t for P, (_, t) in zip(L, inst.terminals)):
            H[(r, "t0")] = (0,) * k
    for r1 in rails:
        for r2 in rails:
            if oracle_rail_arrow(r1, r2):
                H[(r1, r2)] = tuple(len(set(P2) - set(P)) for P, P2 in zip(r1[0], r2[0]))
    return H
