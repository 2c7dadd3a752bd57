"""The r-neighbor bootstrap percolation process.

Starting from a seed set, each synchronous round infects every uninfected
vertex that has at least r infected neighbors; infected vertices stay
infected.  The process is monotone, so it reaches a fixpoint (the closure)
in at most |V| - |seeds| rounds.  An asynchronous single-activation variant
is provided as a confluence oracle: for a monotone rule every activation
schedule reaches the same fixpoint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .grid import Grid, Vertex, VertexSet, _bits


@dataclass(frozen=True)
class ClosureResult:
    """Final infected set plus the round each vertex entered.

    round_of maps vertex -> round (0 for seeds); vertices never infected are
    absent.  rounds is the number of productive update steps.
    """

    infected: VertexSet
    round_of: Mapping[Vertex, int]
    rounds: int


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"infection threshold must be >= 1, got {r}")


def close_mask(g: Grid, r: int, mask: int) -> int:
    """Fixpoint of the update rule on a raw bitmask (fast path)."""
    while True:
        nxt = mask | g.count_at_least(mask, r)
        if nxt == mask:
            return mask
        mask = nxt


def step(g: Grid, r: int, infected: VertexSet) -> VertexSet:
    """One synchronous update: infected plus every vertex with >= r infected neighbors."""
    _check_r(r)
    g._check_same(infected)
    return VertexSet(g, infected.mask | g.count_at_least(infected.mask, r))


def closure(g: Grid, r: int, seeds: VertexSet) -> ClosureResult:
    """Iterate the update rule to its fixpoint, recording infection rounds."""
    _check_r(r)
    g._check_same(seeds)
    mask = seeds.mask
    round_of = {g.vertex_at(i): 0 for i in _bits(mask)}
    rounds = 0
    while True:
        nxt = mask | g.count_at_least(mask, r)
        new = nxt & ~mask
        if not new:
            break
        rounds += 1
        for i in _bits(new):
            round_of[g.vertex_at(i)] = rounds
        mask = nxt
    return ClosureResult(VertexSet(g, mask), MappingProxyType(round_of), rounds)


def percolates(g: Grid, r: int, seeds: VertexSet) -> bool:
    """True iff the closure of seeds is the whole vertex set."""
    _check_r(r)
    g._check_same(seeds)
    return close_mask(g, r, seeds.mask) == g.full_mask


def async_closure(g: Grid, r: int, seeds: VertexSet, order: int) -> VertexSet:
    """Sequential single-vertex activation under a seeded random priority.

    Vertices are scanned in a permutation drawn from ``order``; any scanned
    vertex with at least r infected neighbors is activated immediately.
    Passes repeat until one adds nothing.  The result equals the synchronous
    closure (confluence of monotone rules), which tests assert.
    """
    _check_r(r)
    g._check_same(seeds)
    perm = list(range(g.size))
    random.Random(order).shuffle(perm)
    nbr = g._nbr_masks
    mask = seeds.mask
    changed = True
    while changed:
        changed = False
        for i in perm:
            if mask >> i & 1:
                continue
            if (nbr[i] & mask).bit_count() >= r:
                mask |= 1 << i
                changed = True
    return VertexSet(g, mask)
