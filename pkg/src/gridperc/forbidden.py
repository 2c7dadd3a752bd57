"""Forbidden subgraphs and lower bounds for 3-neighbor percolation on grids.

A vertex set H is r-forbidden when every vertex of H has fewer than r
neighbors outside H.  No percolation process seeded entirely outside H can
ever infect the first vertex of H, so every percolating set must intersect
H.  A family of pairwise disjoint forbidden sets therefore lower-bounds the
minimum percolating set size by its cardinality.

For r = 3 the grid catalog collects the cheap shapes: adjacent boundary
pairs, full row/column fibers, unit squares, induced boundary-to-boundary
paths up to a length cap, and short cycles.  Closed-form bounds for widths
3, 4 and 5 are exposed separately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import Grid, VertexSet


@dataclass(frozen=True)
class ForbiddenSubgraph:
    """A certified forbidden vertex set together with its catalog shape."""

    support: VertexSet
    kind: str  # boundary-pair | fiber | four-cycle | boundary-path | cycle | custom


@dataclass(frozen=True)
class PackingCertificate:
    """Pairwise disjoint forbidden sets; len(members) lower-bounds m(G, r)."""

    members: tuple[ForbiddenSubgraph, ...]
    bound: int


def is_forbidden(g: Grid, r: int, support: VertexSet) -> bool:
    """True iff every vertex of the (nonempty) support has < r neighbors outside it."""
    g._check_same(support)
    if not support.mask:
        raise ValueError("forbidden-subgraph check needs a nonempty support")
    outside = g.full_mask & ~support.mask
    # a support vertex with >= r outside-neighbors violates the condition
    return g.count_at_least(outside, r) & support.mask == 0


def _boundary_pairs(g: Grid) -> list[int]:
    out = []
    b = g.boundary_mask
    for i in range(g.size):
        if not (b >> i & 1):
            continue
        for j in (i + 1, i + g.cols):
            if j < g.size and (b >> j & 1) and g._nbr_masks[i] >> j & 1:
                out.append(1 << i | 1 << j)
    return out


def _fibers(g: Grid) -> list[int]:
    out = []
    row_mask = (1 << g.cols) - 1
    for r in range(g.rows):
        out.append(row_mask << (r * g.cols))
    col_mask = 0
    for r in range(g.rows):
        col_mask |= 1 << (r * g.cols)
    for c in range(g.cols):
        out.append(col_mask << c)
    return out


def _unit_squares(g: Grid) -> list[int]:
    out = []
    for r in range(g.rows - 1):
        for c in range(g.cols - 1):
            i = r * g.cols + c
            out.append(1 << i | 1 << (i + 1) | 1 << (i + g.cols) | 1 << (i + g.cols + 1))
    return out


def _boundary_paths(g: Grid, max_len: int) -> list[int]:
    """Induced paths with both endpoints on the boundary, up to max_len vertices."""
    found: set[int] = set()
    nbr = g._nbr_masks
    bnd = g.boundary_mask

    def extend(path: list[int], mask: int) -> None:
        last = path[-1]
        if len(path) >= 2 and (bnd >> last & 1) and path[0] < last:
            found.add(mask)
        if len(path) == max_len:
            return
        for j in _mask_bits(nbr[last] & ~mask):
            # induced: the new vertex may touch only the current endpoint
            if nbr[j] & mask != 1 << last:
                continue
            path.append(j)
            extend(path, mask | 1 << j)
            path.pop()

    for i in _mask_bits(bnd):
        extend([i], 1 << i)
    return sorted(found)


def _cycles(g: Grid, max_len: int = 8) -> list[int]:
    """Vertex sets of cycles up to max_len vertices (smallest index first,
    direction canonicalized by second < last)."""
    found: set[int] = set()
    nbr = g._nbr_masks

    def extend(start: int, path: list[int], mask: int) -> None:
        last = path[-1]
        if len(path) >= 4 and (nbr[last] >> start & 1) and path[1] < last:
            found.add(mask)
        if len(path) == max_len:
            return
        for j in _mask_bits(nbr[last] & ~mask):
            if j <= start:
                continue
            path.append(j)
            extend(start, path, mask | 1 << j)
            path.pop()

    for i in range(g.size):
        extend(i, [i], 1 << i)
    return sorted(found)


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_catalog(g: Grid, r: int = 3, max_path_len: int = 6) -> list[ForbiddenSubgraph]:
    """The standard r=3 forbidden-subgraph catalog of a grid.

    Supports are deduplicated across families; the first family to emit a
    support decides its kind (pairs, then fibers, squares, paths, cycles).
    """
    if r != 3:
        raise ValueError("the grid catalog is specific to r = 3")
    if g.rows < 2 or g.cols < 2:
        raise ValueError("catalog needs rows >= 2 and cols >= 2")
    items: list[ForbiddenSubgraph] = []
    seen: set[int] = set()

    def emit(masks: list[int], kind: str) -> None:
        for m in masks:
            if m not in seen:
                seen.add(m)
                items.append(ForbiddenSubgraph(VertexSet(g, m), kind))

    emit(_boundary_pairs(g), "boundary-pair")
    emit(_fibers(g), "fiber")
    emit(_unit_squares(g), "four-cycle")
    emit(_boundary_paths(g, max_path_len), "boundary-path")
    emit(_cycles(g), "cycle")
    return items


def disjoint_packing_bound(g: Grid, catalog: list[ForbiddenSubgraph]) -> PackingCertificate:
    """Greedy first-fit disjoint subfamily, smallest supports first.

    Every member must contain a seed of any percolating set, so the family
    size is a valid lower bound on m(G, r).
    """
    order = sorted(
        catalog,
        key=lambda f: (len(f.support), f.support.mask & -f.support.mask, f.support.mask),
    )
    chosen: list[ForbiddenSubgraph] = []
    used = 0
    for f in order:
        g._check_same(f.support)
        if f.support.mask & used == 0:
            chosen.append(f)
            used |= f.support.mask
    return PackingCertificate(tuple(chosen), len(chosen))


def width3_value(m: int) -> int:
    """Exact minimum 3-percolating set size of a 3 x m grid, m >= 3."""
    if m % 2:
        return 3 * (m + 1) // 2 - 1
    return 3 * m // 2 + 1


def width5_value(m: int) -> int:
    """Exact minimum 3-percolating set size of a 5 x m grid, m >= 5."""
    return 2 * m + 2 if m % 2 else 2 * m + 3


def width4_window(m: int) -> tuple[int, int]:
    """Two-value window for a 4 x m grid, m >= 4: optimum is lo or lo + 1."""
    lo = 5 * (m + 1) // 3 + 1
    return lo, lo + 1


def formula_lower_bound(rows: int, cols: int) -> int | None:
    """Closed-form lower bound on m(G, 3) for widths 3, 4, 5 (None elsewhere).

    For width 3 the returned value is exact; for width 5 it is exact as
    well; for width 4 it is the floor of the two-value window.
    """
    if rows == 3 and cols >= 3:
        return width3_value(cols)
    if rows == 4 and cols >= 4:
        return width4_window(cols)[0]
    if rows == 5 and cols >= 5:
        return width5_value(cols)
    return None
