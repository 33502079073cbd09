"""Combinatorial classifiers for unweighted skew Ferrers shapes.

``is_scm_skew`` runs the four-case deletion recursion for the sequentially
Cohen-Macaulay property; ``unmixed_decomposition`` peels a connected shape
into alternating prime unmixed pieces glued along shared extremal blocks,
returning a checkable certificate either way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .shapes import (Partition, SkewShape, block_containing, blocks,
                     delete_rows_cols)


# -- saturation (Ferrers case) ------------------------------------------------


def is_saturated(p: Partition | Iterable[int]) -> bool:
    """Strictly decreasing, or the parts contain the full staircase below
    the first repeated part."""
    parts = tuple(p.parts if isinstance(p, Partition) else p)
    for i in range(len(parts) - 1):
        if parts[i] == parts[i + 1]:
            return set(range(1, parts[i] + 1)) <= set(parts)
    return True


def is_scm_ferrers(p: Partition | Iterable[int]) -> bool:
    """A Ferrers ideal is sequentially Cohen-Macaulay iff its partition is
    saturated."""
    return is_saturated(p)


# -- SCM recursion -------------------------------------------------------------


_scm_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}


def scm_pivots(s: SkewShape) -> list[dict]:
    """Deletion pivots for the SCM recursion of a connected shape.

    A pivot is a row or column owning a pendant neighbor: a column j some of
    whose rows consist of the single box (i, j), or a row i some of whose
    columns consist of the single box (i, j).  The recursion deletes the
    pivot line, or the pivot line together with all lines meeting it.
    Pendants at rows 1/n and columns 1/m give the four boundary cases
    (labeled 1-4 in traces); interior pendants are needed as well, e.g. for
    (3,3,2,2,2)/(1,1,1,0,0), whose only pendant row sits at column 2.
    """
    lam, mu = s.lam, s.mu
    lamc, muc = s.lam_conj(), s.mu_conj()
    col_pivots = sorted({lam[i] for i in range(s.n) if lam[i] - mu[i] == 1})
    row_pivots = sorted({lamc[j] for j in range(s.m) if lamc[j] - muc[j] == 1})

    def row_pivot(i: int) -> dict:
        case = {1: 1, s.n: 4}.get(i) if i in (1, s.n) else None
        if i == 1 and i == s.n:
            case = 1
        return {"pivot": ("row", i), "boundary_case": case,
                "d1": ({i}, set()),
                "d2": ({i}, set(range(mu[i - 1] + 1, lam[i - 1] + 1)))}

    def col_pivot(j: int) -> dict:
        case = {s.m: 2, 1: 3}.get(j) if j in (1, s.m) else None
        if j == 1 and j == s.m:
            case = 2
        return {"pivot": ("col", j), "boundary_case": case,
                "d1": (set(), {j}),
                "d2": (set(range(muc[j - 1] + 1, lamc[j - 1] + 1)), {j})}

    boundary, interior = [], []
    for i in row_pivots:
        (boundary if i in (1, s.n) else interior).append(row_pivot(i))
    for j in col_pivots:
        (boundary if j in (1, s.m) else interior).append(col_pivot(j))
    boundary.sort(key=lambda p: p["boundary_case"])
    return boundary + interior


def is_scm_skew(s: SkewShape) -> bool:
    """Sequentially Cohen-Macaulay test by the pendant-pivot recursion.

    Empty shapes are vacuously true; disconnected shapes are conjunctions
    over their components (mixed sums).  A connected shape succeeds iff some
    pivot has both of its deleted shapes sequentially Cohen-Macaulay.
    Memoized on the normalized pair, with conjugate lookup.
    """
    if s.is_empty:
        return True
    comps = s.components()
    if len(comps) > 1:
        return all(is_scm_skew(c.shape) for c in comps)
    return _scm_connected(s)


def _scm_connected(s: SkewShape) -> bool:
    key = (s.lam, s.mu)
    hit = _scm_cache.get(key)
    if hit is not None:
        return hit
    conj = s.conjugate()
    hit = _scm_cache.get((conj.lam, conj.mu))
    if hit is not None:
        return hit

    result = False
    for piv in scm_pivots(s):
        ok = True
        for rows, cols in (piv["d1"], piv["d2"]):
            parts = delete_rows_cols(s, rows, cols)
            if not all(is_scm_skew(c.shape) for c in parts):
                ok = False
                break
        if ok:
            result = True
            break
    _scm_cache[key] = result
    _scm_cache[(conj.lam, conj.mu)] = result
    return result


def explain_scm(s: SkewShape) -> dict:
    """Decision-tree trace of the SCM recursion, JSON-ready."""
    node: dict = {"shape": s.to_dict(), "scm": is_scm_skew(s)}
    if s.is_empty:
        node["empty"] = True
        return node
    comps = s.components()
    if len(comps) > 1:
        node["components"] = [explain_scm(c.shape) for c in comps]
        return node
    pivots = scm_pivots(s)
    node["pivots"] = [list(p["pivot"]) for p in pivots]
    if not node["scm"]:
        return node
    for piv in pivots:
        sub1 = [c.shape for c in delete_rows_cols(s, *piv["d1"])]
        sub2 = [c.shape for c in delete_rows_cols(s, *piv["d2"])]
        if all(is_scm_skew(t) for t in sub1 + sub2):
            node["pivot"] = list(piv["pivot"])
            if piv["boundary_case"] is not None:
                node["case"] = piv["boundary_case"]
            node["deletions"] = [[explain_scm(t) for t in sub1],
                                 [explain_scm(t) for t in sub2]]
            break
    return node


# -- unmixed decomposition ------------------------------------------------------


BoxSet = frozenset[tuple[int, int]]


@dataclass(frozen=True)
class PrimeShapePiece:
    """One prime unmixed piece, in ambient coordinates.

    Upper pieces are partition diagrams flush against the top-left of their
    bounding box; lower pieces are half-turned partition diagrams, flush
    bottom-right.  The entry block contains the piece's top-right box, the
    exit block its bottom-left box; consecutive pieces share exit = entry.
    """

    orientation: str  # "upper" | "lower"
    boxes: BoxSet
    blocks: tuple[BoxSet, ...]
    entry_block: BoxSet
    exit_block: BoxSet

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation,
            "boxes": sorted(self.boxes),
            "blocks": [sorted(b) for b in self.blocks],
            "entry_block": sorted(self.entry_block),
            "exit_block": sorted(self.exit_block),
        }


@dataclass(frozen=True)
class UnmixedCertificate:
    ok: bool
    pieces: tuple[PrimeShapePiece, ...] = ()
    reason: str = ""
    witness: dict | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        if self.ok:
            return {"unmixed": True, "pieces": [p.to_dict() for p in self.pieces]}
        return {"unmixed": False, "reason": self.reason, "witness": self.witness}


class _DecompFail(Exception):
    def __init__(self, reason: str, witness: dict | None = None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness or {}


@dataclass(frozen=True)
class _Frame:
    """A working sub-shape plus the map of its boxes back to ambient ones."""

    shape: SkewShape
    amb_rows: tuple[int, ...]
    amb_cols: tuple[int, ...]
    swap: bool

    def to_ambient(self, i: int, j: int) -> tuple[int, int]:
        if self.swap:
            return self.amb_rows[j - 1], self.amb_cols[i - 1]
        return self.amb_rows[i - 1], self.amb_cols[j - 1]

    def boxset(self, boxes: Iterable[tuple[int, int]]) -> BoxSet:
        return frozenset(self.to_ambient(i, j) for i, j in boxes)


def _flip(f: _Frame) -> _Frame:
    return _Frame(f.shape.anti_transpose(),
                  tuple(reversed(f.amb_rows)),
                  tuple(reversed(f.amb_cols)),
                  not f.swap)


def _peel_top(f: _Frame, drop: int) -> _Frame:
    s = f.shape
    lam, mu = s.lam[drop:], s.mu[drop:]
    sub = SkewShape(lam, mu)
    if not f.swap:
        return _Frame(sub, f.amb_rows[drop:], f.amb_cols[:sub.m], False)
    return _Frame(sub, f.amb_rows[:sub.m], f.amb_cols[drop:], True)


def _partition_piece_data(nu: tuple[int, ...], mu1: int, frame: _Frame):
    """Blocks/corners of the partition piece occupying the frame's top rows.

    Returns (ambient block boxsets ordered by band, entry, exit, defect)
    where defect is a nonsquare corner block's ambient boxes or None.
    """
    diag = SkewShape(nu)
    entry = exit_ = defect = None
    amb_blocks = []
    k, top = len(nu), nu[0]
    for blk in blocks(diag):
        boxes = frame.boxset((i, j + mu1) for i, j in blk.boxes())
        amb_blocks.append(boxes)
        if blk.corner and not blk.is_square and defect is None:
            defect = boxes
        if blk.rows[0] == 1 and blk.cols[1] == top:
            entry = boxes
        if blk.rows[1] == k and blk.cols[0] == 1:
            exit_ = boxes
    return amb_blocks, entry, exit_, defect


def _extract_piece(frame: _Frame, entering: BoxSet | None):
    """Take the top prime piece off the frame's shape (upper in local
    coordinates).  Returns (piece, next_frame, next_entering)."""
    s = frame.shape
    if s.n != s.m:
        raise _DecompFail("piece has a different number of rows and columns",
                          {"rows": s.n, "cols": s.m})
    mu1 = s.mu[0]
    k = 1
    while k < s.n and s.mu[k] == mu1:
        k += 1
    nu = tuple(l - mu1 for l in s.lam[:k])
    amb_blocks, entry, exit_, defect = _partition_piece_data(nu, mu1, frame)
    if defect is not None:
        raise _DecompFail("nonsquare corner block", {"block": sorted(defect)})
    orientation = "lower" if frame.swap else "upper"
    piece_boxes = frame.boxset((i, j) for i in range(1, k + 1)
                               for j in range(mu1 + 1, s.lam[i - 1] + 1))
    piece = PrimeShapePiece(orientation=orientation, boxes=piece_boxes,
                            blocks=tuple(amb_blocks), entry_block=entry,
                            exit_block=exit_)
    if entering is not None and entry != entering:
        raise _DecompFail("pieces do not glue along a shared extremal block",
                          {"expected": sorted(entering), "found": sorted(entry)})
    square = len(nu) == nu[0] and nu[-1] == nu[0]
    if k == s.n:
        if square and entering is not None:
            raise _DecompFail("square piece inside a multi-piece chain", {})
        return piece, None, None
    if square:
        raise _DecompFail("square piece with boxes left over",
                          {"piece": sorted(piece_boxes)})
    w = nu[-1]
    b = sum(1 for v in nu if v == w)
    if s.lam[k] > mu1 + w:
        raise _DecompFail("boxes extend past the shared block",
                          {"shared_block": sorted(exit_)})
    return piece, _peel_top(frame, k - b), exit_


def unmixed_decomposition(s: SkewShape) -> UnmixedCertificate:
    """Alternating prime-piece decomposition of a connected shape.

    Succeeds exactly when the skew Ferrers ideal is unmixed; otherwise the
    certificate carries the first violated condition as a witness.
    """
    if s.is_empty:
        return UnmixedCertificate(ok=True)
    if not s.is_connected():
        raise ValueError("unmixed_decomposition needs a connected shape")
    if s.n != s.m:
        return UnmixedCertificate(ok=False,
                                  reason="shape has a different number of rows and columns",
                                  witness={"rows": s.n, "cols": s.m})
    frame = _Frame(s, tuple(range(1, s.n + 1)), tuple(range(1, s.m + 1)), False)
    top_right = block_containing(s, (1, s.m))
    below = top_right.rows[1] < s.n and s.contains(top_right.rows[1] + 1, top_right.cols[0])
    left = top_right.cols[0] > 1 and s.contains(top_right.rows[0], top_right.cols[0] - 1)
    if below and left:
        return UnmixedCertificate(
            ok=False,
            reason="top-right corner block has blocks both below and to its left",
            witness={"block": sorted(top_right.boxes())})
    if below:
        frame = _flip(frame)
    pieces = []
    entering: BoxSet | None = None
    while True:
        try:
            piece, nxt, entering = _extract_piece(frame, entering)
        except _DecompFail as err:
            return UnmixedCertificate(ok=False, reason=err.reason, witness=err.witness)
        pieces.append(piece)
        if nxt is None:
            return UnmixedCertificate(ok=True, pieces=tuple(pieces))
        frame = _flip(nxt)


def is_unmixed_skew(s: SkewShape) -> bool:
    """Unmixedness: all components admit a prime-piece decomposition."""
    if s.is_empty:
        return True
    return all(unmixed_decomposition(c.shape).ok for c in s.components())


# -- certificate validation ------------------------------------------------------


def _piece_as_partition(piece: PrimeShapePiece):
    """Interpret a piece's box set as a flush partition diagram.

    Returns (nu, to_ambient) where nu is the partition read in the piece's
    own orientation and to_ambient maps diagram coordinates back to ambient
    boxes, or raises ValueError if the box set is not of the stated form.
    """
    boxes = piece.boxes
    rows = sorted({i for i, _ in boxes})
    cols = sorted({j for _, j in boxes})
    r0, r1, c0, c1 = rows[0], rows[-1], cols[0], cols[-1]
    if rows != list(range(r0, r1 + 1)):
        raise ValueError("piece rows are not consecutive")

    per_row = {i: sorted(j for x, j in boxes if x == i) for i in rows}
    for i, js in per_row.items():
        if js != list(range(js[0], js[-1] + 1)):
            raise ValueError("piece row is not contiguous")

    if piece.orientation == "upper":
        if any(per_row[i][0] != c0 for i in rows):
            raise ValueError("upper piece is not flush left")
        nu = tuple(len(per_row[i]) for i in rows)
        if any(nu[t] < nu[t + 1] for t in range(len(nu) - 1)):
            raise ValueError("upper piece rows do not weakly decrease")

        def to_ambient(i: int, j: int) -> tuple[int, int]:
            return r0 + i - 1, c0 + j - 1
    elif piece.orientation == "lower":
        if any(per_row[i][-1] != c1 for i in rows):
            raise ValueError("lower piece is not flush right")
        nu = tuple(len(per_row[i]) for i in reversed(rows))
        if any(nu[t] < nu[t + 1] for t in range(len(nu) - 1)):
            raise ValueError("lower piece rows do not weakly decrease upward")

        def to_ambient(i: int, j: int) -> tuple[int, int]:
            return r1 - i + 1, c1 - j + 1
    else:
        raise ValueError(f"unknown orientation {piece.orientation}")
    return nu, to_ambient


def validate_certificate(s: SkewShape, cert: UnmixedCertificate) -> tuple[bool, str]:
    """Independent check of a successful decomposition certificate."""
    if not cert.ok:
        return False, "certificate is a failure witness"
    all_boxes = set(s.boxes())
    if s.is_empty:
        return (not cert.pieces, "empty shape")
    union = set()
    total = 0
    for piece in cert.pieces:
        union |= piece.boxes
        total += len(piece.boxes)
    shared = sum(len(cert.pieces[k].exit_block) for k in range(len(cert.pieces) - 1))
    if union != all_boxes:
        return False, "pieces do not cover the box set"
    if total - shared != len(all_boxes):
        return False, "pieces overlap outside the shared extremal blocks"
    for k in range(len(cert.pieces) - 1):
        a, b = cert.pieces[k], cert.pieces[k + 1]
        if a.orientation == b.orientation:
            return False, "orientations do not alternate"
        if a.exit_block != b.entry_block:
            return False, "exit and entry blocks differ"
        if a.boxes & b.boxes != a.exit_block:
            return False, "consecutive pieces do not meet exactly in the shared block"
    first, last = cert.pieces[0], cert.pieces[-1]
    if (1, s.m) not in first.entry_block or (s.n, 1) not in last.exit_block:
        return False, "chain does not run from the top-right to the bottom-left corner"
    for piece in cert.pieces:
        try:
            nu, to_ambient = _piece_as_partition(piece)
        except ValueError as err:
            return False, str(err)
        diag_blocks = blocks(SkewShape(nu))
        if any(blk.corner and not blk.is_square for blk in diag_blocks):
            return False, "piece is not an unmixed partition diagram"
        k, top = len(nu), nu[0]
        for blk in diag_blocks:
            boxes = frozenset(to_ambient(i, j) for i, j in blk.boxes())
            if blk.rows[0] == 1 and blk.cols[1] == top:
                tr = boxes
            if blk.rows[1] == k and blk.cols[0] == 1:
                bl = boxes
        entry, exit_ = (tr, bl) if piece.orientation == "upper" else (bl, tr)
        if entry != piece.entry_block or exit_ != piece.exit_block:
            return False, "entry/exit blocks are not the piece's extremal blocks"
    return True, "ok"


# -- combined flags ----------------------------------------------------------------


@dataclass(frozen=True)
class ShapeFlags:
    unmixed: bool
    scm: bool
    cm: bool
    buchsbaum: bool
    gcm: bool
    vacuous: bool = False

    def to_dict(self) -> dict:
        out = {"unmixed": self.unmixed, "scm": self.scm, "cm": self.cm,
               "buchsbaum": self.buchsbaum, "gcm": self.gcm}
        if self.vacuous:
            out["vacuous"] = True
        return out


def _is_full_square(s: SkewShape) -> bool:
    return (not s.is_empty and s.n == s.m
            and all(l == s.m for l in s.lam) and all(v == 0 for v in s.mu))


def classify_shape(s: SkewShape) -> ShapeFlags:
    """All five flags.  cm = unmixed and scm; Buchsbaum and generalized CM
    coincide and add only the full square with empty inner shape."""
    if s.is_empty:
        return ShapeFlags(True, True, True, True, True, vacuous=True)
    comps = s.components()
    if len(comps) > 1:
        parts = [classify_shape(c.shape) for c in comps]
        return ShapeFlags(
            unmixed=all(p.unmixed for p in parts),
            scm=all(p.scm for p in parts),
            cm=all(p.cm for p in parts),
            buchsbaum=all(p.buchsbaum for p in parts),
            gcm=all(p.gcm for p in parts),
        )
    unmixed = unmixed_decomposition(s).ok
    scm = is_scm_skew(s)
    cm = unmixed and scm
    bb = cm or _is_full_square(s)
    return ShapeFlags(unmixed=unmixed, scm=scm, cm=cm, buchsbaum=bb, gcm=bb)


def clear_caches() -> None:
    _scm_cache.clear()
