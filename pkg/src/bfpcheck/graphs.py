"""Bipartite graphs, degree sequences, and the named near-complete families.

A graph is stored by its biadjacency matrix: ``p`` rows (the X part), ``q``
columns (the Y part), entry (i, j) = 1 exactly when x_i y_j is an edge.
Internally each row is an integer bitmask with bit j standing for column j;
the matrix view is available through :attr:`BipartiteGraph.biadjacency`.

The module also builds the graph families used throughout the package:

* ``complete_bipartite(p, q)`` -- every edge present.
* ``row_deficient(p, q, e)`` -- complete minus ``pq - e`` edges removed at a
  single row vertex (CLI family kind ``upperE``).
* ``column_deficient(p, q, e)`` -- the same with the removals at a single
  column vertex (kind ``lowerE``).
* ``pendant_shift(p, q)`` -- delete one edge of the complete graph and spend
  it on a new pendant column vertex attached to a different row vertex
  (kind ``pm``); the result lives in parts (p, q+1) and keeps all pq edges.

Graphs compare lexicographically via :meth:`BipartiteGraph.lex_sorted`,
which sorts columns then rows in descending order; this canonical form is
enough to identify the left-justified (Ferrers-type) graphs handled here.
Full isomorphism handling lives in :mod:`bfpcheck.extremal`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DegreeSequence",
    "BipartiteGraph",
    "FerrersDiagram",
    "parse_degrees",
    "build_ferrers",
    "build_family",
    "complete_bipartite",
    "row_deficient",
    "column_deficient",
    "pendant_shift",
    "is_complete_bipartite",
]

_DEGREE_TERM = re.compile(r"^(\d+)(?:\^\[?(\d+)\]?)?$")


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing sequence of positive vertex degrees d_1 >= ... >= d_p >= 1."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(d) for d in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("degree sequence must be non-empty")
        if any(d < 1 for d in entries):
            raise ValueError(f"degree sequence entries must be >= 1, got {entries}")
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"degree sequence must be nonincreasing, got {entries}")

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def largest(self) -> int:
        return self.entries[0]

    @property
    def total(self) -> int:
        """Edge count of the associated graph."""
        return sum(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        """Compact form with run-length exponents, e.g. ``6,5^2,4``."""
        parts = []
        i = 0
        while i < len(self.entries):
            j = i
            while j < len(self.entries) and self.entries[j] == self.entries[i]:
                j += 1
            run = j - i
            parts.append(str(self.entries[i]) if run == 1 else f"{self.entries[i]}^{run}")
            i = j
        return ",".join(parts)


def parse_degrees(text: str) -> DegreeSequence:
    """Parse a comma-separated degree list; ``6,5^2,4`` means (6, 5, 5, 4)."""
    entries: list[int] = []
    for term in text.split(","):
        term = term.strip()
        m = _DEGREE_TERM.match(term)
        if m is None:
            raise ValueError(f"cannot parse degree term {term!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if count < 1:
            raise ValueError(f"repeat count must be >= 1 in {term!r}")
        entries.extend([value] * count)
    return DegreeSequence(tuple(entries))


class BipartiteGraph:
    """Immutable bipartite graph on parts of sizes ``p`` and ``q``."""

    __slots__ = ("p", "q", "masks")

    def __init__(self, matrix: Iterable[Iterable[int]]):
        rows = [tuple(int(v) for v in row) for row in matrix]
        if not rows:
            raise ValueError("biadjacency matrix must have at least one row")
        q = len(rows[0])
        if q < 1:
            raise ValueError("biadjacency matrix must have at least one column")
        masks = []
        for row in rows:
            if len(row) != q:
                raise ValueError("biadjacency rows must have equal length")
            if any(v not in (0, 1) for v in row):
                raise ValueError("biadjacency entries must be 0 or 1")
            masks.append(sum(1 << j for j, v in enumerate(row) if v))
        object.__setattr__(self, "p", len(rows))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_masks(cls, q: int, masks: Sequence[int]) -> "BipartiteGraph":
        """Fast constructor from row bitmasks (bit j = column j)."""
        self = object.__new__(cls)
        object.__setattr__(self, "p", len(masks))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "masks", tuple(masks))
        return self

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("BipartiteGraph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.p, self.q, self.masks) == (other.p, other.q, other.masks)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.masks))

    def __repr__(self) -> str:
        return f"BipartiteGraph(p={self.p}, q={self.q}, e={self.edge_count})"

    @property
    def biadjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple((mask >> j) & 1 for j in range(self.q)) for mask in self.masks
        )

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.masks)

    @property
    def row_degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.masks)

    @property
    def col_degrees(self) -> tuple[int, ...]:
        return tuple(
            sum((mask >> j) & 1 for mask in self.masks) for j in range(self.q)
        )

    def has_no_isolated_vertices(self) -> bool:
        """True when every row and every column carries at least one edge."""
        if any(mask == 0 for mask in self.masks):
            return False
        union = 0
        for mask in self.masks:
            union |= mask
        return union == (1 << self.q) - 1

    def transpose(self) -> "BipartiteGraph":
        masks = [0] * self.q
        for i, mask in enumerate(self.masks):
            bit = 1 << i
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                masks[j] |= bit
                m &= m - 1
        return BipartiteGraph.from_masks(self.p, masks)

    def trimmed(self) -> "BipartiteGraph":
        """Drop empty rows and columns (the graph restricted to its support)."""
        masks = [m for m in self.masks if m]
        if not masks:
            raise ValueError("cannot trim a graph with no edges")
        union = 0
        for m in masks:
            union |= m
        if union == (1 << self.q) - 1:
            return BipartiteGraph.from_masks(self.q, masks)
        cols = [j for j in range(self.q) if (union >> j) & 1]
        remap = {old: new for new, old in enumerate(cols)}
        new_masks = []
        for m in masks:
            nm = 0
            mm = m
            while mm:
                j = (mm & -mm).bit_length() - 1
                nm |= 1 << remap[j]
                mm &= mm - 1
            new_masks.append(nm)
        return BipartiteGraph.from_masks(len(cols), new_masks)

    def is_connected(self) -> bool:
        """Connectivity over vertices of positive degree only."""
        rows = [i for i, m in enumerate(self.masks) if m]
        if not rows:
            return False
        reached_rows = 1 << rows[0]
        reached_cols = self.masks[rows[0]]
        changed = True
        while changed:
            changed = False
            for i in rows:
                if not (reached_rows >> i) & 1 and self.masks[i] & reached_cols:
                    reached_rows |= 1 << i
                    reached_cols |= self.masks[i]
                    changed = True
        union = 0
        for i in rows:
            union |= self.masks[i]
        return all((reached_rows >> i) & 1 for i in rows) and reached_cols == union

    def lex_sorted(self) -> "BipartiteGraph":
        """Canonical comparison form: columns then rows sorted descending."""
        cols = sorted(
            (tuple((mask >> j) & 1 for mask in self.masks) for j in range(self.q)),
            reverse=True,
        )
        rows = sorted(
            (tuple(col[i] for col in cols) for i in range(self.p)), reverse=True
        )
        return BipartiteGraph(rows)

    def to_text(self) -> str:
        """Serialize as ``"p q"`` followed by p rows of 0/1 characters."""
        lines = [f"{self.p} {self.q}"]
        for mask in self.masks:
            lines.append("".join("1" if (mask >> j) & 1 else "0" for j in range(self.q)))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "BipartiteGraph":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if not lines:
            raise ValueError("empty graph text")
        try:
            p, q = (int(tok) for tok in lines[0].split())
        except Exception as exc:
            raise ValueError(f"bad graph header {lines[0]!r}") from exc
        if len(lines) != p + 1:
            raise ValueError(f"expected {p} rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            if len(ln) != q or any(ch not in "01" for ch in ln):
                raise ValueError(f"bad biadjacency row {ln!r}")
            rows.append([int(ch) for ch in ln])
        return cls(rows)


class FerrersDiagram(BipartiteGraph):
    """Left-justified graph: row i holds its first ``d_i`` columns."""

    __slots__ = ("degrees",)

    def __init__(self, degrees: DegreeSequence, q: int):
        if q < degrees.largest:
            raise ValueError(
                f"part size q={q} is smaller than the largest degree {degrees.largest}"
            )
        masks = tuple((1 << d) - 1 for d in degrees)
        object.__setattr__(self, "p", degrees.p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "masks", masks)
        object.__setattr__(self, "degrees", degrees)


def build_ferrers(degrees: DegreeSequence | Sequence[int], q: int | None = None) -> FerrersDiagram:
    """Left-justified graph of a degree sequence; ``q`` defaults to d_1."""
    if not isinstance(degrees, DegreeSequence):
        degrees = DegreeSequence(tuple(degrees))
    if q is None:
        q = degrees.largest
    return FerrersDiagram(degrees, q)


def complete_bipartite(p: int, q: int) -> FerrersDiagram:
    if p < 1 or q < 1:
        raise ValueError("complete bipartite graph needs p >= 1 and q >= 1")
    return build_ferrers([q] * p, q)


def row_deficient(p: int, q: int, e: int) -> FerrersDiagram:
    """Complete graph minus ``pq - e`` edges at one row vertex.

    Exists (with no isolated vertex and at least one missing edge) only for
    pq - q < e < pq; the deficient vertex keeps e - (p-1)q neighbours.
    """
    if p < 1 or q < 1:
        raise ValueError("row_deficient needs p >= 1 and q >= 1")
    if e <= p * q - q:
        raise ValueError(f"row_deficient requires e > pq-q, got e={e}, pq-q={p * q - q}")
    if e >= p * q:
        raise ValueError(f"row_deficient requires e < pq, got e={e}, pq={p * q}")
    return build_ferrers([q] * (p - 1) + [e - (p - 1) * q], q)


def column_deficient(p: int, q: int, e: int) -> BipartiteGraph:
    """Complete graph minus ``pq - e`` edges at one column vertex.

    Stored in the same (p, q) orientation: every column full except the last,
    which keeps e - (q-1)p entries at the top.  Exists for pq - p < e < pq.
    """
    if p < 1 or q < 1:
        raise ValueError("column_deficient needs p >= 1 and q >= 1")
    if e <= p * q - p:
        raise ValueError(f"column_deficient requires e > pq-p, got e={e}, pq-p={p * q - p}")
    if e >= p * q:
        raise ValueError(f"column_deficient requires e < pq, got e={e}, pq={p * q}")
    kept = e - (q - 1) * p
    base = (1 << (q - 1)) - 1
    last = 1 << (q - 1)
    masks = [base | last if i < kept else base for i in range(p)]
    return BipartiteGraph.from_masks(q, masks)


def pendant_shift(p: int, q: int) -> FerrersDiagram:
    """Move one edge of the complete (p, q) graph onto a new pendant vertex.

    One edge x_p y_q is deleted and a new column vertex is attached to x_1,
    giving parts (p, q+1), degree sequence (q+1, q^(p-2), q-1) and pq edges.
    """
    if p < 2 or q < 2:
        raise ValueError("pendant_shift requires p >= 2 and q >= 2")
    return build_ferrers([q + 1] + [q] * (p - 2) + [q - 1], q + 1)


_FAMILY_BUILDERS = {
    "complete": lambda p, q, e: complete_bipartite(p, q),
    "upperE": lambda p, q, e: row_deficient(p, q, e),
    "lowerE": lambda p, q, e: column_deficient(p, q, e),
    "pm": lambda p, q, e: pendant_shift(p, q),
}


def build_family(kind: str, p: int, q: int, e: int | None = None) -> BipartiteGraph:
    """Dispatch on the family kind: ``upperE``, ``lowerE``, ``pm`` or ``complete``.

    ``upperE`` and ``lowerE`` require the edge count ``e``; ``pm`` takes the
    base part size ``q`` and returns a graph in parts (p, q+1).
    """
    try:
        builder = _FAMILY_BUILDERS[kind]
    except KeyError:
        raise ValueError(f"unknown family kind {kind!r}; expected one of "
                         f"{sorted(_FAMILY_BUILDERS)}") from None
    if kind in ("upperE", "lowerE") and e is None:
        raise ValueError(f"family {kind!r} requires the edge count e")
    return builder(p, q, e)


def is_complete_bipartite(graph: BipartiteGraph) -> bool:
    """True when the graph restricted to its support is one complete block.

    Disconnected unions of complete blocks return False: their present rows
    differ, so they stay inside the searched family.
    """
    present = {mask for mask in graph.masks if mask}
    return len(present) == 1
