"""Instance files and ASCII rendering.

An instance is a JSON object {"rows": n, "cols": m, "r": k, "seeds":
[[i, j], ...]} with 0-based coordinates.  The canonical serialization is
byte-stable: fixed key order, seeds sorted lexicographically, compact
separators.  parse followed by serialize is the identity on canonical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .grid import Grid, Vertex, VertexSet, make_grid
from .percolation import ClosureResult


class InstanceError(ValueError):
    """Base class for instance-file problems (CLI exit code 2)."""


class InstanceFormatError(InstanceError):
    """Malformed JSON or wrong object shape."""


class CoordinateRangeError(InstanceError):
    """A seed coordinate lies outside the grid."""


class DuplicateSeedError(InstanceError):
    """The same seed appears more than once."""


@dataclass(frozen=True)
class Instance:
    rows: int
    cols: int
    r: int
    seeds: tuple[Vertex, ...]

    def grid(self) -> Grid:
        return make_grid(self.rows, self.cols)

    def seed_set(self, g: Grid | None = None) -> VertexSet:
        return (g or self.grid()).vertex_set(self.seeds)


def _expect_positive_int(obj: dict, key: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InstanceFormatError(f"field {key!r} must be a positive integer")
    return value


def parse_instance(text: bytes | str) -> Instance:
    """Parse and validate an instance; raises a named InstanceError subclass."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InstanceFormatError("instance must be a JSON object")
    unknown = set(obj) - {"rows", "cols", "r", "seeds"}
    if unknown:
        raise InstanceFormatError(f"unknown fields: {sorted(unknown)}")
    rows = _expect_positive_int(obj, "rows")
    cols = _expect_positive_int(obj, "cols")
    r = _expect_positive_int(obj, "r")
    raw = obj.get("seeds")
    if not isinstance(raw, list):
        raise InstanceFormatError("field 'seeds' must be a list of [row, col] pairs")
    seeds: list[Vertex] = []
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise InstanceFormatError(f"seed {entry!r} is not an integer [row, col] pair")
        i, j = entry
        if not (0 <= i < rows and 0 <= j < cols):
            raise CoordinateRangeError(f"seed [{i}, {j}] outside a {rows}x{cols} grid")
        seeds.append((i, j))
    if len(set(seeds)) != len(seeds):
        dupes = sorted({s for s in seeds if seeds.count(s) > 1})
        raise DuplicateSeedError(f"duplicate seeds: {[list(d) for d in dupes]}")
    return Instance(rows, cols, r, tuple(sorted(seeds)))


def serialize_instance(inst: Instance) -> str:
    """Canonical byte-stable form: fixed key order, sorted seeds, no spaces."""
    obj = {
        "rows": inst.rows,
        "cols": inst.cols,
        "r": inst.r,
        "seeds": [[i, j] for i, j in sorted(inst.seeds)],
    }
    return json.dumps(obj, separators=(",", ":"))


def render_ascii(g: Grid, result: ClosureResult) -> str:
    """Grid picture of a closure, one text line per grid row, row 0 at the bottom.

    Glyphs: '#' seed, digits 1-9 the infection round, '+' rounds beyond 9,
    '.' never infected.
    """
    g._check_same(result.infected)
    lines = []
    for r in range(g.rows - 1, -1, -1):
        cells = []
        for c in range(g.cols):
            t = result.round_of.get((r, c))
            if t is None:
                cells.append(".")
            elif t == 0:
                cells.append("#")
            elif t <= 9:
                cells.append(str(t))
            else:
                cells.append("+")
        lines.append("".join(cells))
    return "\n".join(lines)
