"""Partitions, skew shapes and their geometry.

Rows and columns are 1-based throughout.  A skew shape is kept in normal
form: the inner boundary is weakly decreasing with last entry zero, every
row is nonempty, and every column 1..m holds at least one box.  Shapes that
lose rows or columns mid-computation are rebuilt through :func:`normalize`,
which drops empty lines, reindexes and splits into connected components.
The empty shape is a valid degenerate value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def conjugate_parts(parts: Sequence[int], length: int | None = None) -> tuple[int, ...]:
    """Conjugate of a weakly decreasing sequence: entry j counts parts >= j."""
    if length is None:
        length = parts[0] if parts else 0
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, length + 1))


def _weakly_decreasing(seq: Sequence[int]) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive integer parts."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        object.__setattr__(self, "parts", tuple(parts))
        if not all(isinstance(p, int) and p >= 1 for p in self.parts):
            raise ValueError(f"partition parts must be positive integers: {self.parts}")
        if not _weakly_decreasing(self.parts):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(conjugate_parts(self.parts))


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram lam/mu with box set {(i,j) : mu_i+1 <= j <= lam_i}."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __init__(self, lam: Iterable[int], mu: Iterable[int] | None = None):
        lam = tuple(lam)
        mu = tuple(mu) if mu is not None else (0,) * len(lam)
        if len(mu) < len(lam):
            mu = mu + (0,) * (len(lam) - len(mu))
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        self._validate()

    def _validate(self) -> None:
        lam, mu = self.lam, self.mu
        if len(lam) != len(mu):
            raise ValueError("inner shape longer than outer shape")
        if not lam:
            return
        if not all(isinstance(p, int) and p >= 1 for p in lam) or not _weakly_decreasing(lam):
            raise ValueError(f"outer shape must be weakly decreasing positive: {lam}")
        if not all(isinstance(p, int) and p >= 0 for p in mu) or not _weakly_decreasing(mu):
            raise ValueError(f"inner shape must be weakly decreasing nonnegative: {mu}")
        if mu[-1] != 0:
            raise ValueError(f"not in normal form: last inner part {mu[-1]} != 0")
        if any(l <= m for l, m in zip(lam, mu)):
            raise ValueError(f"empty row in {lam}/{mu}")
        lamc = conjugate_parts(lam, lam[0])
        muc = conjugate_parts(mu, lam[0])
        for j, (lj, mj) in enumerate(zip(lamc, muc), start=1):
            if lj <= mj:
                raise ValueError(f"empty column {j} in {lam}/{mu}")

    # -- basic geometry -------------------------------------------------

    @property
    def n(self) -> int:
        """Number of rows."""
        return len(self.lam)

    @property
    def m(self) -> int:
        """Number of columns (= lam_1)."""
        return self.lam[0] if self.lam else 0

    @property
    def is_empty(self) -> bool:
        return not self.lam

    @property
    def box_count(self) -> int:
        return sum(l - m for l, m in zip(self.lam, self.mu))

    def row_interval(self, i: int) -> tuple[int, int]:
        """Inclusive column interval (mu_i+1, lam_i) of row i."""
        return self.mu[i - 1] + 1, self.lam[i - 1]

    def col_interval(self, j: int) -> tuple[int, int]:
        """Inclusive row interval (mu'_j+1, lam'_j) of column j."""
        return self.mu_conj()[j - 1] + 1, self.lam_conj()[j - 1]

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.n and self.mu[i - 1] < j <= self.lam[i - 1]

    def boxes(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1)
                for j in range(self.mu[i - 1] + 1, self.lam[i - 1] + 1)]

    def lam_conj(self) -> tuple[int, ...]:
        return conjugate_parts(self.lam, self.m)

    def mu_conj(self) -> tuple[int, ...]:
        return conjugate_parts(self.mu, self.m)

    # -- symmetries ------------------------------------------------------

    def conjugate(self) -> "SkewShape":
        """Transpose: box (i,j) -> (j,i)."""
        if self.is_empty:
            return self
        return SkewShape(self.lam_conj(), self.mu_conj())

    def rotate180(self) -> "SkewShape":
        """Half turn: box (i,j) -> (n+1-i, m+1-j)."""
        if self.is_empty:
            return self
        n, m = self.n, self.m
        lam = tuple(m - self.mu[n - 1 - k] for k in range(n))
        mu = tuple(m - self.lam[n - 1 - k] for k in range(n))
        return SkewShape(lam, mu)

    def anti_transpose(self) -> "SkewShape":
        """Reflection along the anti-diagonal: box (i,j) -> (m+1-j, n+1-i)."""
        return self.rotate180().conjugate()

    # -- connectivity ----------------------------------------------------

    def is_connected(self) -> bool:
        """True iff mu_{i-1} <= lam_i - 1 for all 2 <= i <= n."""
        return all(self.mu[i - 1] <= self.lam[i] - 1 for i in range(1, self.n))

    def components(self) -> list["Component"]:
        """Connected components, each a normal-form shape with index maps."""
        if self.is_empty:
            return []
        comps = []
        start = 0
        for i in range(1, self.n + 1):
            if i == self.n or self.mu[i - 1] >= self.lam[i]:
                rows = range(start, i)
                shift = self.mu[i - 1]
                lam = tuple(self.lam[r] - shift for r in rows)
                mu = tuple(self.mu[r] - shift for r in rows)
                comps.append(Component(
                    shape=SkewShape(lam, mu),
                    row_map=tuple(r + 1 for r in rows),
                    col_map=tuple(range(shift + 1, self.lam[start] + 1)),
                ))
                start = i
        return comps

    # -- serialization / rendering ----------------------------------------

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_dict(cls, data: dict) -> "SkewShape":
        if "lambda" not in data:
            raise ValueError("shape JSON must have a 'lambda' key")
        return cls(data["lambda"], data.get("mu"))

    def __str__(self) -> str:
        return f"{list(self.lam)}/{list(self.mu)}"


@dataclass(frozen=True)
class Component:
    """A connected piece of an ambient shape plus maps back into it."""

    shape: SkewShape
    row_map: tuple[int, ...]  # component row i -> ambient row row_map[i-1]
    col_map: tuple[int, ...]  # component col j -> ambient col col_map[j-1]

    def to_ambient(self, i: int, j: int) -> tuple[int, int]:
        return self.row_map[i - 1], self.col_map[j - 1]


def normalize(rows: Sequence, row_ids: Sequence[int] | None = None,
              col_ids: Sequence[int] | None = None) -> list[Component]:
    """Rebuild normal-form components from leftover row contents.

    Each entry of ``rows`` is the surviving column content of one row:
    ``None`` or empty for a dead row, a pair ``(lo, hi)`` for an inclusive
    interval, or an explicit collection of column indices.  Empty rows are
    dropped, globally empty columns deleted, indices compacted, and the
    result split into connected components.  Rows that are not contiguous
    after column deletion are rejected.
    """
    cols_per_row: list[set[int]] = []
    for content in rows:
        if content is None:
            cols_per_row.append(set())
        elif isinstance(content, tuple) and len(content) == 2:
            lo, hi = content
            cols_per_row.append(set(range(lo, hi + 1)))
        else:
            cols_per_row.append(set(content))
    if row_ids is None:
        row_ids = range(1, len(cols_per_row) + 1)
    row_ids = list(row_ids)

    used_cols = sorted(set().union(*cols_per_row)) if cols_per_row else []
    if col_ids is None:
        col_index = {c: c for c in used_cols}
    else:
        col_index = {c: col_ids[c - 1] for c in used_cols}
    new_col = {c: k + 1 for k, c in enumerate(used_cols)}

    intervals: list[tuple[int, int]] = []
    kept_rows: list[int] = []
    for rid, content in zip(row_ids, cols_per_row):
        if not content:
            continue
        cols = sorted(new_col[c] for c in content)
        if cols[-1] - cols[0] + 1 != len(cols):
            raise ValueError(f"row {rid} is not a contiguous interval: {sorted(content)}")
        intervals.append((cols[0], cols[-1]))
        kept_rows.append(rid)

    if not intervals:
        return []
    for k in range(len(intervals) - 1):
        if intervals[k][0] < intervals[k + 1][0] or intervals[k][1] < intervals[k + 1][1]:
            raise ValueError("rows do not come from a skew shape (intervals not nested)")

    # split where consecutive intervals do not even touch a common column
    comps: list[Component] = []
    start = 0
    for k in range(1, len(intervals) + 1):
        if k == len(intervals) or intervals[k][1] < intervals[k - 1][0]:
            chunk = intervals[start:k]
            shift = chunk[-1][0] - 1
            lam = tuple(hi - shift for _, hi in chunk)
            mu = tuple(lo - 1 - shift for lo, _ in chunk)
            cmap = tuple(col_index[used_cols[shift + t]] for t in range(chunk[0][1] - shift))
            comps.append(Component(
                shape=SkewShape(lam, mu),
                row_map=tuple(kept_rows[start:k]),
                col_map=cmap,
            ))
            start = k
    return comps


def delete_rows_cols(s: SkewShape, rows: Iterable[int] = (),
                     cols: Iterable[int] = ()) -> list[Component]:
    """Remove whole rows/columns and renormalize; maps refer to ``s``."""
    dead_rows = set(rows)
    dead_cols = set(cols)
    if not all(1 <= r <= s.n for r in dead_rows) or not all(1 <= c <= s.m for c in dead_cols):
        raise ValueError("row/column index out of range")
    contents = []
    for i in range(1, s.n + 1):
        if i in dead_rows:
            contents.append(None)
        else:
            lo, hi = s.row_interval(i)
            contents.append(set(range(lo, hi + 1)) - dead_cols)
    return normalize(contents)


def conjugate(s: SkewShape) -> SkewShape:
    return s.conjugate()


def anti_transpose_shape(s: SkewShape) -> SkewShape:
    return s.anti_transpose()


def is_connected(s: SkewShape) -> bool:
    return s.is_connected()


# -- block grid ----------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """Maximal rectangle of the band grid; bands are inclusive intervals."""

    rows: tuple[int, int]
    cols: tuple[int, int]
    corner: bool

    @property
    def height(self) -> int:
        return self.rows[1] - self.rows[0] + 1

    @property
    def width(self) -> int:
        return self.cols[1] - self.cols[0] + 1

    @property
    def size(self) -> int:
        return min(self.height, self.width)

    @property
    def is_square(self) -> bool:
        return self.height == self.width

    def boxes(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j)
                         for i in range(self.rows[0], self.rows[1] + 1)
                         for j in range(self.cols[0], self.cols[1] + 1))


def _runs(values: Sequence) -> list[tuple[int, int]]:
    """Maximal runs of equal consecutive values, as 1-based inclusive intervals."""
    runs = []
    start = 0
    for k in range(1, len(values) + 1):
        if k == len(values) or values[k] != values[start]:
            runs.append((start + 1, k))
            start = k
    return runs


def blocks(s: SkewShape) -> list[Block]:
    """Band grid of a connected shape.

    Rows are cut where (lam_i, mu_i) changes, columns where the conjugate
    pair changes; a block is a band product lying inside the shape, and a
    corner block has no block immediately to its right or below.
    """
    if s.is_empty:
        return []
    if not s.is_connected():
        raise ValueError("blocks are defined for connected shapes")
    row_bands = _runs(list(zip(s.lam, s.mu)))
    col_bands = _runs(list(zip(s.lam_conj(), s.mu_conj())))

    def inside(rb: int, cb: int) -> bool:
        if not (0 <= rb < len(row_bands) and 0 <= cb < len(col_bands)):
            return False
        return s.contains(row_bands[rb][0], col_bands[cb][0])

    out = []
    for rb in range(len(row_bands)):
        for cb in range(len(col_bands)):
            if inside(rb, cb):
                corner = not inside(rb, cb + 1) and not inside(rb + 1, cb)
                out.append(Block(rows=row_bands[rb], cols=col_bands[cb], corner=corner))
    return out


def block_containing(s: SkewShape, box: tuple[int, int]) -> Block:
    for b in blocks(s):
        if b.rows[0] <= box[0] <= b.rows[1] and b.cols[0] <= box[1] <= b.cols[1]:
            return b
    raise ValueError(f"box {box} not in shape")


# -- rendering -----------------------------------------------------------

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def render(s: SkewShape, weights: dict[tuple[int, int], int] | None = None) -> str:
    """ASCII diagram: '.' outside the shape, '#' or the weight digit inside."""
    if s.is_empty:
        return "(empty shape)"
    lines = []
    for i in range(1, s.n + 1):
        chars = []
        for j in range(1, s.m + 1):
            if not s.contains(i, j):
                chars.append(".")
            elif weights is None:
                chars.append("#")
            else:
                w = weights[(i, j)]
                chars.append(_DIGITS[w] if w < len(_DIGITS) else "+")
        lines.append(" ".join(chars))
    return "\n".join(lines)
