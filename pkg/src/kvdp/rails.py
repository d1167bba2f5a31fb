"""Problem instances, linkages and (k, m, c)-rails.

A rail is a window onto a partial linkage: ``k`` short vertex-disjoint paths
together with a split ``(X, Y)`` of the vertices that could still be claimed
going forward (``A``) or that were already passed (``B``).  Vertex sets are
stored as int bitmasks internally and exposed as frozensets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .digraph import Digraph, _content_lines, _tokens, is_path, mask_of, members, parse_int
from .errors import InvalidInputError, ParseError, PreconditionError

Linkage = tuple  # tuple of paths


@dataclass(frozen=True)
class ProblemInstance:
    graph: Digraph
    terminals: tuple[tuple[int, int], ...]
    d: int = 1

    def __post_init__(self):
        terms = tuple((int(s), int(t)) for s, t in self.terminals)
        object.__setattr__(self, "terminals", terms)
        n = self.graph.n
        if self.d < 1:
            raise InvalidInputError(f"d must be at least 1, got {self.d}")
        for i, (s, t) in enumerate(terms):
            for v in (s, t):
                if not 0 <= v < n:
                    raise PreconditionError(f"terminal {v} of pair {i + 1} is not a vertex (n={n})")
        for i, (si, ti) in enumerate(terms):
            for j, (sj, tj) in enumerate(terms):
                if i != j and len({si, ti} & {sj, tj}):
                    raise PreconditionError(
                        f"terminal pairs {i + 1} and {j + 1} share a vertex; "
                        "paths for distinct pairs must be vertex-disjoint"
                    )

    @property
    def k(self) -> int:
        return len(self.terminals)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.terminals)

    @property
    def sinks(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.terminals)


def linkage_defect(inst: ProblemInstance, paths: Sequence[Sequence[int]], for_instance: bool = False) -> str | None:
    """Describe the first way ``paths`` fails to be a linkage, or None if it is one."""
    G = inst.graph
    if len(paths) != inst.k:
        return f"expected {inst.k} paths, got {len(paths)}"
    used = 0
    for i, P in enumerate(paths):
        if not is_path(G, P):
            return f"member {i + 1} {tuple(P)} is not a path"
        pm = mask_of(P)
        if used & pm:
            return f"member {i + 1} shares a vertex with an earlier member"
        used |= pm
        if for_instance:
            s, t = inst.terminals[i]
            if P[0] != s:
                return f"member {i + 1} starts at {P[0]}, not {s}"
            if P[-1] != t:
                return f"member {i + 1} ends at {P[-1]}, not {t}"
    return None


def validate_linkage(inst: ProblemInstance, paths: Sequence[Sequence[int]], for_instance: bool = False) -> bool:
    return linkage_defect(inst, paths, for_instance) is None


def quality(L: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(len(P) for P in L)


def _ab_masks(inst: ProblemInstance, L: Sequence[Sequence[int]], vmask: int) -> tuple[int, int]:
    G = inst.graph
    out, inn = G.out_mask, G.in_mask
    outside = G.full_mask & ~vmask
    a = b = 0
    for P, (s, t) in zip(L, inst.terminals):
        if P[-1] != t:
            reached = 0
            for u in P[:-1]:
                reached |= out[u]
            a |= outside & ~reached
        if P[0] != s:
            reaching = 0
            for u in P[1:]:
                reaching |= inn[u]
            b |= outside & ~reaching
    return a, b


def _require_linkage(inst, L):
    problem = linkage_defect(inst, L)
    if problem is not None:
        raise InvalidInputError(problem)


def compute_A(inst: ProblemInstance, L: Sequence[Sequence[int]]) -> frozenset[int]:
    _require_linkage(inst, L)
    vmask = mask_of(v for P in L for v in P)
    return frozenset(members(_ab_masks(inst, L, vmask)[0]))


def compute_B(inst: ProblemInstance, L: Sequence[Sequence[int]]) -> frozenset[int]:
    _require_linkage(inst, L)
    vmask = mask_of(v for P in L for v in P)
    return frozenset(members(_ab_masks(inst, L, vmask)[1]))


def confusion(inst: ProblemInstance, L: Sequence[Sequence[int]]) -> int:
    _require_linkage(inst, L)
    vmask = mask_of(v for P in L for v in P)
    a, b = _ab_masks(inst, L, vmask)
    return (a & b).bit_count()


@dataclass(frozen=True)
class Rail:
    paths: tuple[tuple[int, ...], ...]
    x_mask: int
    y_mask: int
    id: int = field(default=-1, compare=False)
    instance: ProblemInstance | None = field(default=None, compare=False, repr=False)

    @property
    def X(self) -> frozenset[int]:
        return frozenset(members(self.x_mask))

    @property
    def Y(self) -> frozenset[int]:
        return frozenset(members(self.y_mask))

    @property
    def vertex_mask(self) -> int:
        return mask_of(v for P in self.paths for v in P)

    @property
    def sizes(self) -> tuple[int, ...]:
        return quality(self.paths)


@dataclass
class LinkageRecord:
    """One surviving linkage and the rails built on it (one per colouring)."""

    paths: tuple[tuple[int, ...], ...]
    vmask: int
    path_masks: tuple[int, ...]
    a_mask: int
    b_mask: int
    rails: list[Rail]

    @property
    def union_mask(self) -> int:
        return self.a_mask | self.b_mask


def _subsets(mask: int):
    """All submasks of ``mask``, ordered by the binary counter over its bits."""
    bits = members(mask)
    for code in range(1 << len(bits)):
        sub = 0
        for i, v in enumerate(bits):
            if code >> i & 1:
                sub |= 1 << v
        yield sub


def linkage_records(inst: ProblemInstance, m: int, c: int) -> list[LinkageRecord]:
    """Rails grouped by their linkage, in tuple-lexicographic linkage order."""
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    if c < 0:
        raise InvalidInputError(f"c must be nonnegative, got {c}")
    G = inst.graph
    window = 2 * m
    all_paths = G.simple_paths(window)
    slots = []
    for s, t in inst.terminals:
        slots.append([(P, mask_of(P)) for P in all_paths
                      if len(P) == window or P[0] == s or P[-1] == t])

    records: list[LinkageRecord] = []
    next_id = 0
    k = inst.k

    def emit(chosen):
        nonlocal next_id
        paths = tuple(P for P, _ in chosen)
        pmasks = tuple(pm for _, pm in chosen)
        vmask = 0
        for pm in pmasks:
            vmask |= pm
        a, b = _ab_masks(inst, paths, vmask)
        both = a & b
        if both.bit_count() > c:
            return
        only_a = a & ~b
        union = a | b
        rails = []
        for sub in _subsets(both):
            x = only_a | sub
            rails.append(Rail(paths, x, union & ~x, next_id, inst))
            next_id += 1
        records.append(LinkageRecord(paths, vmask, pmasks, a, b, rails))

    def extend(j, used, chosen):
        if j == k:
            emit(chosen)
            return
        for P, pm in slots[j]:
            if not used & pm:
                chosen.append((P, pm))
                extend(j + 1, used | pm, chosen)
                chosen.pop()

    extend(0, 0, [])
    return records


def enumerate_rails(inst: ProblemInstance, m: int, c: int) -> list[Rail]:
    """Every (k, m, c)-rail exactly once; ``rails[i].id == i``."""
    return [r for rec in linkage_records(inst, m, c) for r in rec.rails]


def rail_count_bound(n: int, k: int, m: int, c: int) -> int:
    return 2 ** c * n ** (2 * k * m) * (2 * k * m) ** k


def path_union_ok(P: Sequence[int], Q: Sequence[int]) -> bool:
    """Whether the union of paths ``P`` and ``Q`` is a path from ``P[0]`` to ``Q[-1]``.

    Holds exactly when the shared vertices form a suffix of ``P`` that is
    also a prefix of ``Q``, in the same order.
    """
    overlap = len(set(P) & set(Q))
    if overlap == 0:
        return False
    return tuple(P[len(P) - overlap:]) == tuple(Q[:overlap])


def rail_arrow(inst: ProblemInstance, r1: Rail, r2: Rail) -> bool:
    for r in (r1, r2):
        if r.instance is not None and r.instance is not inst and r.instance != inst:
            raise InvalidInputError("rail belongs to a different problem instance")
    if r1 == r2:
        return False
    if len(r1.paths) != len(r2.paths):
        raise InvalidInputError("rails have different cardinalities")
    for P, P2 in zip(r1.paths, r2.paths):
        if not path_union_ok(P, P2):
            return False
    for P, P2 in zip(r1.paths, r2.paths):
        if mask_of(P2) & ~(mask_of(P) | r1.x_mask):
            return False
        if mask_of(P) & ~(mask_of(P2) | r2.y_mask):
            return False
    return not (r2.x_mask & ~r1.x_mask) and not (r1.y_mask & ~r2.y_mask)


# -- instance text format -----------------------------------------------------

def parse_instance(text: str, graph: Digraph, source: str | None = None):
    """Parse an instance file against ``graph``; returns ``(instance, bounds or None)``."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty instance file: missing 'k d' line", 1, 1, source)
    lineno, raw = lines[0]
    toks = list(_tokens(raw))
    if len(toks) != 2:
        raise ParseError("first line must be 'k d'", lineno, toks[0][0] if toks else 1, source)
    k = parse_int(toks[0][1], lineno, toks[0][0], source)
    d = parse_int(toks[1][1], lineno, toks[1][0], source)
    if k < 0:
        raise ParseError("k must be nonnegative", lineno, toks[0][0], source)
    if d < 1:
        raise ParseError("d must be at least 1", lineno, toks[1][0], source)
    if len(lines) < 1 + k:
        last = lines[-1][0]
        raise ParseError(f"expected {k} terminal lines, found {len(lines) - 1}", last + 1, 1, source)
    terminals = []
    for lineno, raw in lines[1:1 + k]:
        toks = list(_tokens(raw))
        if len(toks) != 2:
            raise ParseError("terminal line must be 's t'", lineno, toks[0][0] if toks else 1, source)
        pair = []
        for col, tok in toks:
            v = parse_int(tok, lineno, col, source)
            if not 0 <= v < graph.n:
                raise ParseError(f"terminal {v} out of range 0..{graph.n - 1}", lineno, col, source)
            pair.append(v)
        terminals.append(tuple(pair))
    bounds = None
    rest = lines[1 + k:]
    if rest:
        lineno, raw = rest[0]
        toks = list(_tokens(raw))
        if toks[0][1] != "bounds":
            raise ParseError("unexpected line; only 'bounds x_1 .. x_k' may follow", lineno, toks[0][0], source)
        if len(toks) != 1 + k:
            raise ParseError(f"bounds line needs {k} values", lineno, toks[0][0], source)
        bounds = []
        for col, tok in toks[1:]:
            x = parse_int(tok, lineno, col, source)
            if x < 1:
                raise ParseError("bounds must be positive", lineno, col, source)
            bounds.append(x)
        bounds = tuple(bounds)
        if len(rest) > 1:
            raise ParseError("trailing content after bounds line", rest[1][0], 1, source)
    return ProblemInstance(graph, tuple(terminals), d), bounds


def format_instance(inst: ProblemInstance, bounds: Sequence[int] | None = None) -> str:
    lines = [f"{inst.k} {inst.d}"]
    lines.extend(f"{s} {t}" for s, t in inst.terminals)
    if bounds is not None:
        lines.append("bounds " + " ".join(str(x) for x in bounds))
    return "\n".join(lines) + "\n"
