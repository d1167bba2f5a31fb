"""Seeded random tournaments, d-path-dominant candidates and instances.

All randomness comes from one ``random.Random(seed)`` (CPython's MT19937,
seeded from the integer via ``init_by_array`` over its 32-bit words).
Pairs ``u < v`` are visited in lexicographic order and each draw is a
single ``getrandbits(1)`` or ``random()`` call, so the stream is easy to
replay in any language that implements the same generator.
"""

from __future__ import annotations

import random

from .digraph import Digraph, is_d_path_dominant
from .errors import InvalidInputError, PreconditionError
from .rails import ProblemInstance


def random_tournament(n: int, rng: random.Random) -> Digraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if rng.getrandbits(1) else (v, u))
    return Digraph(n, edges)


def random_digraph(n: int, rng: random.Random, p: float = 0.5) -> Digraph:
    """Each ordered pair becomes an edge independently with probability ``p``."""
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_dominant_candidate(n: int, d: int, rng: random.Random, gap: float = 0.2,
                              max_tries: int = 10_000) -> Digraph:
    """Rejection-sample a d-path-dominant digraph.

    Each unordered pair is left non-adjacent with probability ``gap``,
    otherwise oriented one way, the other, or both with equal odds.
    """
    for _ in range(max_tries):
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < gap:
                    continue
                kind = rng.randrange(3)
                if kind != 1:
                    edges.append((u, v))
                if kind != 0:
                    edges.append((v, u))
        G = Digraph(n, edges)
        if is_d_path_dominant(G, d):
            return G
    raise PreconditionError(f"no {d}-path-dominant digraph found in {max_tries} tries")


def random_instance(G: Digraph, k: int, rng: random.Random, d: int = 1) -> ProblemInstance:
    if 2 * k > G.n:
        raise InvalidInputError(f"{k} pairs of distinct terminals need at least {2 * k} vertices")
    picks = rng.sample(range(G.n), 2 * k)
    return ProblemInstance(G, tuple((picks[2 * i], picks[2 * i + 1]) for i in range(k)), d)
