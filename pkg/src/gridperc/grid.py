"""Rectangular grid graphs and dense vertex sets.

A grid is the Cartesian product of two paths: ``rows x cols`` vertices,
4-neighbor adjacency, no wraparound.  Vertices are (row, col) pairs with
0-based indices; internally a vertex maps to bit ``row * cols + col`` of a
Python int, so set algebra and neighbor counting are plain integer ops.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Vertex = tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Grid:
    """An immutable rows x cols grid graph with precomputed bit tables."""

    __slots__ = (
        "rows",
        "cols",
        "size",
        "full_mask",
        "boundary_mask",
        "_not_col0",
        "_not_collast",
        "_nbr_masks",
        "_degrees",
    )

    def __init__(self, rows: int, cols: int):
        if rows < 1 or cols < 1:
            raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.size = rows * cols
        self.full_mask = (1 << self.size) - 1

        row_not_first = ((1 << cols) - 1) & ~1
        row_not_last = (1 << (cols - 1)) - 1
        not_col0 = 0
        not_collast = 0
        for r in range(rows):
            not_col0 |= row_not_first << (r * cols)
            not_collast |= row_not_last << (r * cols)
        self._not_col0 = not_col0
        self._not_collast = not_collast

        nbr = []
        for i in range(self.size):
            r, c = divmod(i, cols)
            m = 0
            if r > 0:
                m |= 1 << (i - cols)
            if r < rows - 1:
                m |= 1 << (i + cols)
            if c > 0:
                m |= 1 << (i - 1)
            if c < cols - 1:
                m |= 1 << (i + 1)
            nbr.append(m)
        self._nbr_masks = tuple(nbr)
        self._degrees = tuple(m.bit_count() for m in nbr)

        boundary = 0
        for i in range(self.size):
            r, c = divmod(i, cols)
            if r == 0 or r == rows - 1 or c == 0 or c == cols - 1:
                boundary |= 1 << i
        self.boundary_mask = boundary

    # -- basic counts -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self.size

    @property
    def edge_count(self) -> int:
        return self.rows * (self.cols - 1) + self.cols * (self.rows - 1)

    # -- vertex <-> bit index -----------------------------------------

    def index(self, v: Vertex) -> int:
        r, c = v
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise ValueError(f"vertex {v} outside {self.rows}x{self.cols} grid")
        return r * self.cols + c

    def vertex_at(self, i: int) -> Vertex:
        return divmod(i, self.cols)

    def contains(self, v: Vertex) -> bool:
        r, c = v
        return 0 <= r < self.rows and 0 <= c < self.cols

    # -- queries -------------------------------------------------------

    def neighbors(self, v: Vertex) -> "VertexSet":
        """Open neighborhood of v (2 to 4 lattice neighbors)."""
        return VertexSet(self, self._nbr_masks[self.index(v)])

    def degree(self, v: Vertex) -> int:
        return self._degrees[self.index(v)]

    def is_boundary(self, v: Vertex) -> bool:
        """True iff v lies on the outer rectangle, equivalently degree <= 3."""
        return bool(self.boundary_mask >> self.index(v) & 1)

    def degree_into(self, v: Vertex, members: "VertexSet") -> int:
        """Number of neighbors of v inside the given set."""
        self._check_same(members)
        return (self._nbr_masks[self.index(v)] & members.mask).bit_count()

    # -- set constructors ----------------------------------------------

    def empty_set(self) -> "VertexSet":
        return VertexSet(self, 0)

    def full_set(self) -> "VertexSet":
        return VertexSet(self, self.full_mask)

    def vertex_set(self, vertices: Iterable[Vertex] = ()) -> "VertexSet":
        mask = 0
        for v in vertices:
            mask |= 1 << self.index(v)
        return VertexSet(self, mask)

    # -- bit-parallel neighbor counting ---------------------------------

    def count_at_least(self, mask: int, r: int) -> int:
        """Bitmask of vertices having at least r neighbors inside mask.

        Counts the four directional neighbor indicators with a carry-save
        adder, so one call costs a fixed number of big-int operations.
        """
        if r > 4:
            return 0
        e = (mask >> 1) & self._not_collast
        w = (mask << 1) & self._not_col0
        n = mask >> self.cols
        s = (mask << self.cols) & self.full_mask
        if r == 1:
            return e | w | n | s
        sh, ch = e ^ w, e & w
        sv, cv = n ^ s, n & s
        ones = sh ^ sv
        pair = sh & sv
        twos = ch ^ cv ^ pair
        fours = ch & cv
        if r == 2:
            return fours | twos
        if r == 3:
            return fours | (twos & ones)
        return fours

    def _check_same(self, vs: "VertexSet") -> None:
        g = vs.grid
        if g.rows != self.rows or g.cols != self.cols:
            raise ValueError(
                f"vertex set belongs to a {g.rows}x{g.cols} grid, expected "
                f"{self.rows}x{self.cols}"
            )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Grid)
            and other.rows == self.rows
            and other.cols == self.cols
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols))

    def __repr__(self) -> str:
        return f"Grid({self.rows}, {self.cols})"


class VertexSet:
    """Immutable dense set of grid vertices backed by one int bitmask."""

    __slots__ = ("grid", "mask")

    def __init__(self, grid: Grid, mask: int = 0):
        if mask < 0 or mask & ~grid.full_mask:
            raise ValueError("mask has bits outside the grid")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("VertexSet is immutable")

    # -- membership and iteration ---------------------------------------

    def __contains__(self, v: Vertex) -> bool:
        return self.grid.contains(v) and bool(self.mask >> self.grid.index(v) & 1)

    def __iter__(self) -> Iterator[Vertex]:
        cols = self.grid.cols
        for i in _bits(self.mask):
            yield divmod(i, cols)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def vertices(self) -> list[Vertex]:
        return list(self)

    # -- algebra ---------------------------------------------------------

    def _binary(self, other: "VertexSet") -> int:
        self.grid._check_same(other)
        return other.mask

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.grid, self.mask | self._binary(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.grid, self.mask & self._binary(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.grid, self.mask & ~self._binary(other))

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~self._binary(other) == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexSet)
            and other.grid == self.grid
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((self.grid.rows, self.grid.cols, self.mask))

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & self._binary(other) == 0

    def complement(self) -> "VertexSet":
        return VertexSet(self.grid, self.grid.full_mask & ~self.mask)

    def with_vertex(self, v: Vertex) -> "VertexSet":
        return VertexSet(self.grid, self.mask | 1 << self.grid.index(v))

    def __repr__(self) -> str:
        return f"VertexSet({self.grid!r}, {sorted(self)})"


def make_grid(rows: int, cols: int) -> Grid:
    """Build a rows x cols grid graph; dimensions must be at least 1."""
    return Grid(rows, cols)
