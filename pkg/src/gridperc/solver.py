"""Exact minimum percolating sets via iterative deepening over hitting sets.

Every percolating set must intersect every forbidden subgraph, so the search
branches on the vertices of the smallest forbidden set not yet hit; once all
catalog members are hit, it falls back to branching on the uninfected
remainder (adding an already-infected vertex can never grow the closure).
Deepening starts at the best available lower bound (closed form, disjoint
packing, or the forced-vertex count) and each exhausted depth certifies that
no smaller percolating set exists.

Pruning inside a depth-k pass:

* packing: if the seeds placed so far plus a greedy count of disjoint unhit
  forbidden sets exceed k, the node is dead;
* dominance: a node whose closure was already reached with no more seeds,
  no more boundary seeds, and no more exclusions cannot do better;
* rim normalization (r = 3, both dimensions >= 3): some minimum set never
  places three seeds u-v-z consecutively along the boundary with the middle
  vertex of degree >= 3 (swap the middle for its inward neighbor), so such
  placements are skipped.  Thin grids are exempt: with both dimensions < 3
  the inward-swap argument has no interior vertex to swap to, and minimum
  sets genuinely need rim triples there.

Vertices whose degree is below r can never be infected and are pre-placed.
A brute-force subset enumerator doubles as an independent oracle.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass
from itertools import combinations, islice

from .forbidden import (
    ForbiddenSubgraph,
    disjoint_packing_bound,
    enumerate_catalog,
    formula_lower_bound,
)
from .grid import Grid, VertexSet, _bits
from .percolation import ClosureResult, close_mask


class BudgetExhausted(RuntimeError):
    """Search stopped by the node budget; optimum is certified >= lower_bound."""

    def __init__(self, lower_bound: int, nodes: int):
        super().__init__(f"budget exhausted at depth {lower_bound} after {nodes} nodes")
        self.lower_bound = lower_bound
        self.nodes = nodes


@dataclass
class SolveOptions:
    normalize_boundary: bool = True
    use_catalog: bool = True
    max_path_len: int = 6
    node_budget: int | None = None
    parallel: bool = False


@dataclass
class SolveReport:
    optimum: int
    witness: VertexSet
    lower_bound: int
    lower_bound_source: str  # formula | packing | forced-count
    nodes_explored: int
    wall_time: float


def forced_seeds(g: Grid, r: int) -> VertexSet:
    """Vertices of degree < r: never infectable, hence in every percolating set."""
    mask = 0
    for i, d in enumerate(g._degrees):
        if d < r:
            mask |= 1 << i
    return VertexSet(g, mask)


def brute_force_min(g: Grid, r: int, k_max: int) -> SolveReport | None:
    """Smallest percolating set of size <= k_max by subset enumeration.

    Forced vertices are pre-placed to shrink the enumeration.  Returns None
    when no percolating set of size <= k_max exists.  Rejects instances where
    full enumeration is clearly infeasible (|V| > 20 and k_max > 8).
    """
    if g.size > 20 and k_max > 8:
        raise ValueError(
            f"brute force rejected: {g.size} vertices with k_max={k_max} "
            "is beyond exhaustive enumeration"
        )
    t0 = time.perf_counter()
    forced = forced_seeds(g, r).mask
    base = forced.bit_count()
    candidates = [i for i in range(g.size) if not forced >> i & 1]
    tested = 0
    for k in range(base, k_max + 1):
        for combo in combinations(candidates, k - base):
            mask = forced
            for i in combo:
                mask |= 1 << i
            tested += 1
            if close_mask(g, r, mask) == g.full_mask:
                return SolveReport(
                    optimum=k,
                    witness=VertexSet(g, mask),
                    lower_bound=base,
                    lower_bound_source="forced-count",
                    nodes_explored=tested,
                    wall_time=time.perf_counter() - t0,
                )
    return None


def branch_witness(
    g: Grid,
    r: int,
    partial: VertexSet,
    closed: ClosureResult,
    catalog: list[ForbiddenSubgraph],
) -> VertexSet:
    """A set that every percolating superset of partial must intersect anew.

    Prefers the smallest catalog member disjoint from partial and not inside
    the closure; falls back to the uninfected remainder.
    """
    infected = closed.infected.mask
    if infected == g.full_mask:
        raise ValueError("closure is already complete; nothing to branch on")
    best = None
    best_key = None
    for f in catalog:
        m = f.support.mask
        if m & partial.mask:
            continue
        if m & ~infected == 0:
            continue
        key = (m.bit_count(), (m & -m).bit_length())
        if best_key is None or key < best_key:
            best, best_key = m, key
    if best is not None:
        return VertexSet(g, best)
    return VertexSet(g, g.full_mask & ~infected)


def _minimal_masks(masks: list[int]) -> list[int]:
    """Drop any mask that strictly contains another (implied hitting constraint)."""
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(s & m == s for s in kept):
            kept.append(m)
    return kept


class _BudgetTripped(Exception):
    pass


class _Search:
    """Depth-limited hitting-set DFS over one grid; reused across depths."""

    MEMO_CAP = 1 << 20

    def __init__(self, g: Grid, r: int, members: list[int], normalize: bool,
                 budget: int | None):
        self.g = g
        self.r = r
        self.members = members
        self.normalize = normalize
        self.budget = budget
        self.nodes = 0
        self.memo: dict[int, list[tuple[int, int, int]]] = {}
        if normalize:
            bnd = g.boundary_mask
            self.bnbr = tuple(m & bnd for m in g._nbr_masks)
            self.deg = g._degrees
            self.bnd = bnd

    def _creates_rim_triple(self, partial: int, v: int) -> bool:
        bnd = self.bnd
        if not bnd >> v & 1:
            return False
        pb = partial & bnd
        near = self.bnbr[v] & pb
        # v as the middle of a boundary path u-v-z
        if self.deg[v] >= 3 and near.bit_count() >= 2:
            return True
        # v as an endpoint: a seeded boundary neighbor u becomes the middle
        for u in _bits(near):
            if self.deg[u] >= 3 and self.bnbr[u] & pb & ~(1 << v):
                return True
        return False

    def dfs(self, partial: int, excl: int, count: int, k: int) -> int | None:
        self.nodes += 1
        if self.budget is not None:
            self.budget -= 1
            if self.budget < 0:
                raise _BudgetTripped
        g = self.g
        closed = close_mask(g, self.r, partial)
        if closed == g.full_mask:
            return partial
        if count >= k:
            return None

        pb = partial & g.boundary_mask if self.normalize else 0
        for c1, b1, e1 in self.memo.get(closed, ()):
            if c1 <= count and b1 & ~pb == 0 and e1 & ~excl == 0:
                return None

        branch = None
        cover = 0
        disjoint = 0
        budget_left = k - count
        for m in self.members:
            if m & partial:
                continue
            if m & ~excl == 0:
                return None  # member can no longer be hit
            if branch is None:
                branch = m
            if m & cover == 0:
                cover |= m
                disjoint += 1
                if disjoint > budget_left:
                    return None  # disjoint unhit members exceed remaining seeds

        if branch is None:
            w = g.full_mask & ~closed & ~excl
            if w == 0:
                return None
        else:
            w = branch & ~excl

        running_excl = excl
        for i in _bits(w):
            bit = 1 << i
            if self.normalize and self._creates_rim_triple(partial, i):
                running_excl |= bit
                continue
            found = self.dfs(partial | bit, running_excl, count + 1, k)
            if found is not None:
                return found
            running_excl |= bit

        entries = self.memo.setdefault(closed, [])
        entries.append((count, pb, excl))
        if len(self.memo) > self.MEMO_CAP:
            for key in list(islice(iter(self.memo), self.MEMO_CAP // 4)):
                del self.memo[key]
        return None


def _root_children(search: _Search, partial: int, excl: int, k: int):
    """Root branch vertices with their inherited exclusion masks."""
    g = search.g
    closed = close_mask(g, search.r, partial)
    branch = None
    for m in search.members:
        if m & partial:
            continue
        if m & ~excl == 0:
            return []
        if branch is None:
            branch = m
    w = (branch if branch is not None else g.full_mask & ~closed) & ~excl
    out = []
    running_excl = excl
    for i in _bits(w):
        bit = 1 << i
        if search.normalize and search._creates_rim_triple(partial, i):
            running_excl |= bit
            continue
        out.append((partial | bit, running_excl))
        running_excl |= bit
    return out


def _subtree_worker(args):
    rows, cols, r, k, partial, excl, normalize, members, budget = args
    search = _Search(Grid(rows, cols), r, members, normalize, budget)
    try:
        found = search.dfs(partial, excl, partial.bit_count(), k)
    except _BudgetTripped:
        return "budget", None, search.nodes
    return ("found" if found is not None else "done"), found, search.nodes


def solve_min(g: Grid, r: int, opts: SolveOptions | None = None) -> SolveReport:
    """Exact r-percolation number with witness and lower-bound certificate.

    Iterative deepening: depth k is searched only after depth k-1 has been
    exhausted (or ruled out by the root lower bound), so the first witness
    found is minimum.  Raises BudgetExhausted when the node budget trips;
    the exception carries the depth certified so far.
    """
    if r < 1:
        raise ValueError(f"infection threshold must be >= 1, got {r}")
    opts = opts or SolveOptions()
    t0 = time.perf_counter()

    forced = forced_seeds(g, r)
    bounds = [(len(forced), "forced-count")]

    catalog: list[ForbiddenSubgraph] = []
    if opts.use_catalog and r == 3 and g.rows >= 2 and g.cols >= 2:
        catalog = enumerate_catalog(g, 3, opts.max_path_len)
        bounds.append((disjoint_packing_bound(g, catalog).bound, "packing"))
    if r == 3:
        for rows, cols in ((g.rows, g.cols), (g.cols, g.rows)):
            fb = formula_lower_bound(rows, cols)
            if fb is not None:
                bounds.append((fb, "formula"))

    priority = {"formula": 0, "packing": 1, "forced-count": 2}
    lb, lb_source = max(bounds, key=lambda b: (b[0], -priority[b[1]]))

    if close_mask(g, r, forced.mask) == g.full_mask:
        return SolveReport(
            optimum=len(forced),
            witness=forced,
            lower_bound=len(forced),
            lower_bound_source="forced-count",
            nodes_explored=1,
            wall_time=time.perf_counter() - t0,
        )

    normalize = opts.normalize_boundary and r == 3 and min(g.rows, g.cols) >= 3
    if opts.normalize_boundary and r != 3:
        warnings.warn("rim normalization applies only to r = 3; ignored", stacklevel=2)

    members = _minimal_masks([f.support.mask for f in catalog])
    total_nodes = 0
    budget_left = opts.node_budget

    for k in range(max(lb, len(forced)), g.size + 1):
        search = _Search(g, r, members, normalize, budget_left)
        try:
            if opts.parallel:
                found, nodes = _solve_parallel(search, forced.mask, k)
                search.nodes += nodes
            else:
                found = search.dfs(forced.mask, 0, len(forced), k)
        except _BudgetTripped:
            raise BudgetExhausted(k, total_nodes + search.nodes) from None
        total_nodes += search.nodes
        if budget_left is not None:
            budget_left = search.budget
        if found is not None:
            return SolveReport(
                optimum=found.bit_count(),
                witness=VertexSet(g, found),
                lower_bound=lb,
                lower_bound_source=lb_source,
                nodes_explored=total_nodes,
                wall_time=time.perf_counter() - t0,
            )
    raise RuntimeError("search exhausted all depths without a witness")


def _solve_parallel(search: _Search, root: int, k: int) -> tuple[int | None, int]:
    """Fan the root branch out to worker processes; children share nothing.

    The optimum is unchanged: the children partition the root's search space
    and each child runs the same exhaustive procedure.  A node budget is
    split evenly across children.
    """
    from concurrent.futures import ProcessPoolExecutor

    g = search.g
    closed = close_mask(g, search.r, root)
    if closed == g.full_mask:
        return root, 1
    children = _root_children(search, root, 0, k)
    if len(children) <= 1 or root.bit_count() >= k:
        found = search.dfs(root, 0, root.bit_count(), k)
        return found, 0

    share = None
    if search.budget is not None:
        share = max(search.budget // len(children), 1)
    jobs = [
        (g.rows, g.cols, search.r, k, partial, excl, search.normalize, search.members, share)
        for partial, excl in children
    ]
    nodes = 1
    witness = None
    tripped = False
    with ProcessPoolExecutor() as pool:
        for status, found, n in pool.map(_subtree_worker, jobs):
            nodes += n
            if status == "found" and witness is None:
                witness = found
            elif status == "budget":
                tripped = True
    if witness is None and tripped:
        if search.budget is not None:
            search.budget = -1
        raise _BudgetTripped
    if search.budget is not None:
        search.budget = max(search.budget - nodes, 0)
    return witness, nodes


def phi(m: int, opts: SolveOptions | None = None) -> int:
    """The additive constant for 4 x m grids: exact optimum minus the window floor."""
    if m < 4:
        raise ValueError(f"width-4 constant needs m >= 4, got {m}")
    report = solve_min(Grid(4, m), 3, opts)
    value = report.optimum - (5 * (m + 1)) // 3
    if value not in (1, 2):
        raise RuntimeError(f"width-4 optimum {report.optimum} falls outside the known window")
    return value
