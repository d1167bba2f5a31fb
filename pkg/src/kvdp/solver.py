"""Key qualities and the decision problems built on them.

Rails -> tracker -> label search, then every output vector is backed by a
traced witness linkage that is re-validated before it is returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .digraph import is_d_path_dominant
from .errors import InvalidInputError, InvariantViolation, PreconditionError
from .pareto import ParetoSet, _leq, run_labels, reconstruct_witness
from .rails import ProblemInstance, linkage_defect, quality
from .tracker import Tracker, build_tracker, trace_path

log = logging.getLogger(__name__)


def matching_threshold(k: int, d: int) -> int:
    return (k - 1) * d + k * k + 2


def default_c(k: int, d: int) -> int:
    return matching_threshold(k, d) * (2 * k + 1) * k * k


def default_m(k: int, d: int) -> int:
    return matching_threshold(k, d) * d + 1


def runtime_exponent(k: int, d: int) -> int:
    return 6 * k * k * d * (k + d) + 13 * k


@dataclass
class SolverParams:
    k: int
    d: int = 1
    m: int | None = None
    c: int | None = None
    emit_witness: bool = False
    check_dominance: bool = True

    def __post_init__(self):
        if self.k < 0 or self.d < 1:
            raise InvalidInputError(f"need k >= 0 and d >= 1, got k={self.k}, d={self.d}")
        self.heuristic = self.m is not None or self.c is not None
        if self.m is None:
            self.m = default_m(self.k, self.d)
        if self.c is None:
            self.c = default_c(self.k, self.d)
        if self.m < 1 or self.c < 0:
            raise InvalidInputError(f"need m >= 1 and c >= 0, got m={self.m}, c={self.c}")

    @classmethod
    def for_instance(cls, inst: ProblemInstance, **kw) -> "SolverParams":
        return cls(k=inst.k, d=inst.d, **kw)


@dataclass
class SolveResult:
    key_qualities: ParetoSet
    witnesses: dict | None = None
    heuristic: bool = False
    sound_only: bool = False
    tracker: Tracker | None = field(default=None, repr=False)
    tracker_paths: dict = field(default_factory=dict, repr=False)

    @property
    def solvable(self) -> bool:
        return bool(self.key_qualities)


def _check(inst: ProblemInstance, params: SolverParams) -> None:
    if params.k != inst.k or params.d != inst.d:
        raise InvalidInputError(
            f"params (k={params.k}, d={params.d}) do not match instance (k={inst.k}, d={inst.d})")
    if params.check_dominance and not is_d_path_dominant(inst.graph, inst.d):
        raise PreconditionError(f"digraph is not {inst.d}-path-dominant")


def key_qualities(inst: ProblemInstance, params: SolverParams | None = None,
                  keep_tracker: bool = False) -> SolveResult:
    if params is None:
        params = SolverParams.for_instance(inst)
    _check(inst, params)
    log.debug("k=%d d=%d m=%d c=%d; asymptotic exponent %d",
              inst.k, inst.d, params.m, params.c, runtime_exponent(inst.k, inst.d))

    T = build_tracker(inst, params.m, params.c)
    search = run_labels(T, inst.n)
    keys = ParetoSet(search.labels[T.sink])

    witnesses = {}
    tracker_paths = {}
    for x in keys:
        P = reconstruct_witness(T, x, search=search)
        L = trace_path(inst, T, P)
        if quality(L) != x:
            raise InvariantViolation(f"witness for {x} has quality {quality(L)}")
        witnesses[x] = L
        tracker_paths[x] = P
    if any(_leq(a, b) for a in keys for b in keys if a != b):
        raise InvariantViolation("label search returned a non-antichain")

    return SolveResult(
        keys,
        witnesses if params.emit_witness else None,
        heuristic=params.heuristic,
        sound_only=params.heuristic or not params.check_dominance,
        tracker=T if keep_tracker else None,
        tracker_paths=tracker_paths if keep_tracker else {},
    )


def has_linkage(inst: ProblemInstance, params: SolverParams | None = None) -> bool:
    return key_qualities(inst, params).solvable


def has_bounded_linkage(inst: ProblemInstance, params: SolverParams | None,
                        bounds: Sequence[int]) -> bool:
    """Whether some linkage has its i-th path using at most ``bounds[i]`` vertices."""
    if len(bounds) != inst.k:
        raise InvalidInputError(f"need {inst.k} bounds, got {len(bounds)}")
    if any(x < 1 for x in bounds):
        raise InvalidInputError("bounds must be positive")
    return key_qualities(inst, params).key_qualities.covers(bounds)


def check_witness(inst: ProblemInstance, x: Sequence[int], L) -> bool:
    return linkage_defect(inst, L, for_instance=True) is None and quality(L) == tuple(x)
