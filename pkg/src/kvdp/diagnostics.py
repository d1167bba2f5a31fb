"""Empirical checks of the acceptable-set structure on concrete linkages.

None of this feeds the solver.  It instantiates the existence statements
behind the rail window sizes on linkages produced by the oracle, using the
exact (exponential) planar-matching search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError
from .oracle import OracleBudget, oracle_max_planar_matching
from .rails import ProblemInstance
from .solver import matching_threshold


@dataclass
class AcceptabilityReport:
    B: frozenset
    prefix_closed: bool
    violating_pair: tuple | None  # (i, j, matching size), 0-based path indices
    threshold: int

    @property
    def acceptable(self) -> bool:
        return self.prefix_closed and self.violating_pair is None


@dataclass
class EnumerationReport:
    order: tuple
    stuck: frozenset | None = None

    @property
    def success(self) -> bool:
        return self.stuck is None


def _restrict(P, keep):
    return tuple(v for v in P if v in keep)


def is_acceptable(inst: ProblemInstance, L, B, budget: OracleBudget | None = None) -> AcceptabilityReport:
    B = frozenset(B)
    V_L = {v for P in L for v in P}
    if not B <= V_L:
        raise InvalidInputError(f"B contains vertices off the linkage: {sorted(B - V_L)}")
    threshold = matching_threshold(inst.k, inst.d)
    closed = all(u in B for P in L for u, v in zip(P, P[1:]) if v in B)
    if not closed:
        return AcceptabilityReport(B, False, None, threshold)
    outside = set(range(inst.n)) - B
    for i, Pi in enumerate(L):
        Q = _restrict(Pi, B)
        if not Q:
            continue
        for j, Pj in enumerate(L):
            R = _restrict(Pj, outside)
            if not R:
                continue
            size = oracle_max_planar_matching(inst.graph, Q, R, L, budget, limit=threshold)
            if size >= threshold:
                return AcceptabilityReport(B, True, (i, j, size), threshold)
    return AcceptabilityReport(B, True, None, threshold)


def acceptable_enumeration(inst: ProblemInstance, L, budget: OracleBudget | None = None) -> EnumerationReport:
    """Grow an acceptable set one vertex at a time, least id first."""
    V_L = sorted({v for P in L for v in P})
    B: set = set()
    order = []
    while len(B) < len(V_L):
        for v in V_L:
            if v not in B and is_acceptable(inst, L, B | {v}, budget).acceptable:
                B.add(v)
                order.append(v)
                break
        else:
            return EnumerationReport(tuple(order), frozenset(B))
    return EnumerationReport(tuple(order))


def _windows(P, size):
    return [P[i:i + size] for i in range(len(P) - size + 1)] if size >= 1 else []


def enumeration_bound_violations(inst: ProblemInstance, L, order: Sequence[int]) -> list[tuple]:
    """Every ``(p, Q, R, count)`` whose outward-and-inward count exceeds ``c(2k + 1)``."""
    V_L = {v for P in L for v in P}
    if len(order) != len(V_L) or set(order) != V_L:
        raise InvalidInputError("order is not an enumeration of the linkage's vertices")
    pos = {v: i for i, v in enumerate(order)}
    for P in L:
        for u, v in zip(P, P[1:]):
            if pos[u] > pos[v]:
                raise InvalidInputError(f"order puts {v} before its predecessor {u}")
    G = inst.graph
    c = matching_threshold(inst.k, inst.d)
    window = c * inst.d
    bound = c * (2 * inst.k + 1)
    out, inn = G.out_mask, G.in_mask
    bad = []
    for p in range(len(order) + 1):
        head = set(order[:p])
        tail = V_L - head
        Qs = [w for P in L for w in _windows(_restrict(P, head), window)]
        Rs = [w for P in L for w in _windows(_restrict(P, tail), window)]
        for Q in Qs:
            for R in Rs:
                on = set(Q) | set(R)
                count = sum(
                    1 for v in range(G.n)
                    if v not in on
                    and not any(out[v] >> q & 1 for q in Q)
                    and not any(inn[v] >> r & 1 for r in R)
                )
                if count > bound:
                    bad.append((p, Q, R, count))
    return bad


def check_enumeration_bound(inst: ProblemInstance, L, order: Sequence[int]) -> bool:
    return not enumeration_bound_violations(inst, L, order)


def linkage_report(inst: ProblemInstance, L, budget: OracleBudget | None = None) -> str:
    paths = " | ".join("-".join(str(v) for v in P) for P in L)
    lines = [f"linkage [{paths}] quality {' '.join(str(len(P)) for P in L)}"]
    enum = acceptable_enumeration(inst, L, budget)
    if enum.success:
        lines.append("enumeration " + " ".join(str(v) for v in enum.order))
        ok = check_enumeration_bound(inst, L, enum.order)
        lines.append(f"bound {'ok' if ok else 'VIOLATED'}")
    else:
        lines.append("enumeration FAILED stuck at {" + ",".join(str(v) for v in sorted(enum.stuck)) + "}")
    return "\n".join(lines)
