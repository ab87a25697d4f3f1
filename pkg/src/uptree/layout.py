"""Grid drawings of rooted trees.

Three constructions, all strictly upward and planar:

* ``draw_unordered`` -- straight-line, width = rooted pathwidth, height n.
  Children may be permuted (the size cost of order is avoided by moving
  the rpw-heaviest child flush under its parent).
* ``draw_ordered`` -- order-preserving poly-line of width = rank, at most
  3 bends per edge, height at most 2n-1.  Built from the corner witness
  stored by :func:`uptree.rank.rank`.
* ``reduce_bends`` -- order-preserving rebuild with at most 1 bend per
  edge and the same width; rows are spread out (exponentially in the
  worst case) to buy the missing bends, so only the *number* of occupied
  rows stays small, not their span.

Coordinates are integer (column, row) pairs with columns starting at 1
and the root on the highest row.  Internally everything is assembled
top-down (row 0 at the top) and flipped once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from typing import Optional

from .rank import RankAnnotation, rank
from .tree import Tree
from .widths import RpwAnnotation, rooted_pathwidth

__all__ = [
    "Drawing",
    "LayoutStats",
    "draw_unordered",
    "draw_ordered",
    "reduce_bends",
    "layout_stats",
    "drawing_to_json",
    "drawing_from_json",
]


@dataclass
class Drawing:
    """Node positions plus one poly-line per edge.

    ``pos`` maps node id to (x, y); ``edges`` maps (parent, child) to the
    poly-line from the parent's position to the child's, bends included.
    ``mode`` records which construction produced it: "unordered",
    "ordered3" or "ordered1".
    """

    mode: str
    pos: dict
    edges: dict


@dataclass(frozen=True)
class LayoutStats:
    width: int
    height: int
    max_bends_per_edge: int
    root_corner: str


class _Canvas:
    """Assembly frame for one subtree: row 0 is the top, the subtree root
    sits alone on row 0 in column ``root_col`` (always 1 or ``width``)."""

    __slots__ = ("pos", "edges", "width", "height", "root_col")

    def __init__(self, pos, edges, width, height, root_col):
        self.pos = pos
        self.edges = edges
        self.width = width
        self.height = height
        self.root_col = root_col


def _leaf(v) -> _Canvas:
    return _Canvas({v: (1, 0)}, {}, 1, 1, 1)


def _paste(pos, edges, sub: _Canvas, dcol, drow):
    for u, (c, r) in sub.pos.items():
        pos[u] = (c + dcol, r + drow)
    for key, pts in sub.edges.items():
        edges[key] = [(c + dcol, r + drow) for c, r in pts]


def _flip(c: _Canvas) -> _Canvas:
    w = c.width
    pos = {u: (w + 1 - x, r) for u, (x, r) in c.pos.items()}
    edges = {k: [(w + 1 - x, r) for x, r in pts] for k, pts in c.edges.items()}
    return _Canvas(pos, edges, w, c.height, w + 1 - c.root_col)


def _finalize(c: _Canvas, mode: str) -> Drawing:
    # flip rows to y-up: the root (row 0) gets the maximal y = height
    h = c.height
    pos = {u: (x, h - r) for u, (x, r) in c.pos.items()}
    edges = {k: [(x, h - r) for x, r in pts] for k, pts in c.edges.items()}
    return Drawing(mode=mode, pos=pos, edges=edges)


# ------------------------------------------------------------- unordered


def draw_unordered(t: Tree, ann: Optional[RpwAnnotation] = None) -> Drawing:
    """Straight-line drawing of width rpw(T) and height exactly n.

    Every node gets its own row.  At each node the non-heavy subtrees are
    stacked under the root, shifted one column right, last child on top;
    the rpw-heaviest subtree goes at the bottom, flush with column 1, so
    its width is not paid twice.
    """
    if ann is None:
        ann = rooted_pathwidth(t)
    canv: dict = {}
    for v in t.bottom_up():
        kids = t.children(v)
        if not kids:
            canv[v] = _leaf(v)
            continue
        heavy = ann.heavy_child[v]
        pos = {v: (1, 0)}
        edges: dict = {}
        row = 1
        width = 1
        for c in reversed([k for k in kids if k != heavy]):
            sub = canv.pop(c)
            _paste(pos, edges, sub, 1, row)
            edges[(v, c)] = [(1, 0), (2, row)]
            width = max(width, sub.width + 1)
            row += sub.height
        sub = canv.pop(heavy)
        _paste(pos, edges, sub, 0, row)
        edges[(v, heavy)] = [(1, 0), (1, row)]
        width = max(width, sub.width)
        canv[v] = _Canvas(pos, edges, width, row + sub.height, 1)
    return _finalize(canv[t.root], "unordered")


# --------------------------------------------------------------- ordered


def _assemble3(v, kids, subs, cw) -> _Canvas:
    """Left-witness assembly, dense rows, at most 3 bends per edge."""
    d = len(kids)
    W = cw.W
    wof = {i: w for w, i in cw.sigma.items()}  # child index -> chain value
    root = (1, 0)
    pos = {v: root}
    edges: dict = {}
    prefix: dict = {}
    raycol: dict = {}
    cur = 0  # allocation cursor: next bend row is cur + 1
    deep = 0  # deepest used row, including shifted second bends

    for j in range(d, 1, -1):
        b1 = (2, cur + 1)
        if j in wof:
            w = wof[j]
            if w == 2:
                prefix[j] = [root, b1]
            else:
                # second bend one row below the first, inside the ray;
                # that row is shared with whatever comes next
                prefix[j] = [root, b1, (w, cur + 2)]
                deep = max(deep, cur + 2)
            raycol[j] = 2 if w == 2 else w
            cur += 1
        else:
            sub = subs[j - 1]
            top = cur + 2
            _paste(pos, edges, sub, 1, top)
            edges[(v, kids[j - 1])] = [root, b1, (sub.root_col + 1, top)]
            cur = top + sub.height - 1
        deep = max(deep, cur)

    if 1 in wof:
        prefix[1] = [root]
        raycol[1] = 1
    else:
        sub = subs[0]
        top = cur + 1
        _paste(pos, edges, sub, 0, top)
        rx = sub.root_col
        if rx == 1:
            edges[(v, kids[0])] = [root, (1, top)]
        elif top == 1:
            edges[(v, kids[0])] = [root, (rx, top)]
        else:
            edges[(v, kids[0])] = [root, (1, top - 1), (rx, top)]
        deep = max(deep, top + sub.height - 1)

    base = deep
    for w in range(cw.Wprime, W + 1):
        j = cw.sigma[w]
        sub = subs[j - 1]
        top = base + 1
        _paste(pos, edges, sub, 0, top)
        rx = sub.root_col
        rc = raycol[j]
        pts = list(prefix[j])
        if rx == rc:
            pts.append((rc, top))
        else:
            bend = (rc, top - 1)
            if pts[-1] != bend:
                pts.append(bend)
            pts.append((rx, top))
        edges[(v, kids[j - 1])] = pts
        base = top + sub.height - 1

    return _Canvas(pos, edges, W, max(base, deep) + 1, 1)


def _assemble1(v, kids, subs, cw) -> _Canvas:
    """Left-witness assembly with at most 1 bend per edge.

    Same child layout as ``_assemble3``, but each edge gets a single
    anchor bend instead of a column-2 staircase.  The edge to a big child
    leaves the root with integer slope m and anchors at (w, m*(w-1)) in
    its ray column; placing later content below ``slope * width`` keeps
    those long straight segments above everything they must clear.
    Blocks reached by a slanted final segment are pushed down
    geometrically for the same reason.  Heights explode; widths don't.
    """
    d = len(kids)
    W = cw.W
    wof = {i: w for w, i in cw.sigma.items()}
    root = (1, 0)
    pos = {v: root}
    edges: dict = {}
    prefix: dict = {}
    cur = 0  # deepest placed canvas row
    amax = 0  # deepest anchor row
    slope = 0  # last used slope; strictly increases right to left
    mbig = 0  # steepest big-edge slope so far

    for j in range(d, 1, -1):
        if j in wof:
            w = wof[j]
            m = max(slope + 1, cur + 1)
            prefix[j] = [root, (w, m * (w - 1))]
            slope = m
            mbig = max(mbig, m)
            amax = max(amax, m * (w - 1))
        else:
            sub = subs[j - 1]
            r = sub.width
            s = max(slope + 1, cur + 1, mbig * r + 1)
            top = s + 1
            _paste(pos, edges, sub, 1, top)
            edges[(v, kids[j - 1])] = [root, (2, s), (sub.root_col + 1, top)]
            slope = s
            cur = top + sub.height - 1

    if 1 in wof:
        prefix[1] = [root]
    else:
        sub = subs[0]
        r = sub.width
        top = max(cur + 1, mbig * max(r - 1, 0) + 1)
        _paste(pos, edges, sub, 0, top)
        rx = sub.root_col
        if rx == 1:
            edges[(v, kids[0])] = [root, (1, top)]
        elif top == 1:
            edges[(v, kids[0])] = [root, (rx, top)]
        else:
            edges[(v, kids[0])] = [root, (1, top - 1), (rx, top)]
        cur = top + sub.height - 1

    base = max(cur, amax)
    for w in range(cw.Wprime, W + 1):
        j = cw.sigma[w]
        sub = subs[j - 1]
        rx = sub.root_col
        if j == 1:
            z = base + 1
            pts = [root]
            if rx != 1:
                bend = (1, z - 1)
                if bend != root:
                    pts.append(bend)
            pts.append((rx, z))
        elif rx == w:
            # ray column; drop straight down from the anchor
            z = base + 1
            pts = prefix[j] + [(w, z)]
        else:
            # final segment slants across columns 1..w; push the block far
            # enough down that the slant clears everything above it
            z = max(base + 1, (W + 1) * (base + 2))
            pts = prefix[j] + [(rx, z)]
        _paste(pos, edges, sub, 0, z)
        edges[(v, kids[j - 1])] = pts
        base = z + sub.height - 1

    return _Canvas(pos, edges, W, max(base, amax, cur) + 1, 1)


def _build_ordered(t: Tree, ann: RankAnnotation, assemble) -> _Canvas:
    canv: dict = {}
    for v in t.bottom_up():
        kids = t.children(v)
        if not kids:
            canv[v] = _leaf(v)
            continue
        cw = ann.corner[v]
        subs = [canv.pop(c) for c in kids]
        if cw.side == "right":
            d = len(kids)
            mirrored = type(cw)(
                side="left",
                W=cw.W,
                Wprime=cw.Wprime,
                sigma={w: d + 1 - i for w, i in cw.sigma.items()},
            )
            c = assemble(v, list(reversed(kids)), [_flip(s) for s in reversed(subs)], mirrored)
            canv[v] = _flip(c)
        else:
            canv[v] = assemble(v, list(kids), subs, cw)
    return canv[t.root]


def draw_ordered(
    t: Tree, ann: Optional[RankAnnotation] = None, prune_collinear: bool = False
) -> Drawing:
    """Order-preserving drawing of width rank(T), <= 3 bends, height <= 2n-1.

    Each node is assembled from its corner witness: small children hang
    off a column-2 bend in right-to-left order, big children get a
    reserved vertical ray in their chain column and their subtrees are
    stacked at the bottom, flush left.  A right witness mirrors the whole
    assembly, putting the root at the top-right corner.

    Bends are emitted even where the poly-line happens to be straight so
    the construction is uniform; pass ``prune_collinear=True`` to drop
    the degenerate ones.
    """
    if ann is None:
        ann = rank(t)
    out = _finalize(_build_ordered(t, ann, _assemble3), "ordered3")
    if prune_collinear:
        out.edges = {k: _prune(pts) for k, pts in out.edges.items()}
    return out


def reduce_bends(d: Drawing, t: Tree) -> Drawing:
    """Rebuild an ordered3 drawing with at most 1 bend per edge.

    Width and child order are preserved; the dense rows are given up.
    The input drawing fixes what is being improved; the tree is re-ranked
    so the same corner witnesses drive both constructions.
    """
    if d.mode != "ordered3":
        raise ValueError(f"reduce_bends needs an ordered3 drawing, got {d.mode!r}")
    if set(d.pos) != set(t.preorder()):
        raise ValueError("drawing and tree disagree on node ids")
    return _finalize(_build_ordered(t, rank(t), _assemble1), "ordered1")


# ----------------------------------------------------------------- stats


def _prune(pts):
    """Drop repeated points and interior points that sit on a straight run."""
    pts = [p for i, p in enumerate(pts) if i == 0 or p != pts[i - 1]]
    if len(pts) < 3:
        return pts
    out = [pts[0]]
    for q, r in zip(pts[1:-1], pts[2:]):
        a = out[-1]
        if (q[0] - a[0]) * (r[1] - q[1]) != (q[1] - a[1]) * (r[0] - q[0]):
            out.append(q)
    out.append(pts[-1])
    return out


def layout_stats(d: Drawing) -> LayoutStats:
    """Width, occupied-row count, true bend count, and where the root sits.

    Height counts distinct occupied rows, not the coordinate span, so it
    stays meaningful for the stretched ordered1 drawings.
    """
    xs = [x for x, _ in d.pos.values()]
    ys = {y for _, y in d.pos.values()}
    for pts in d.edges.values():
        xs.extend(x for x, _ in pts)
        ys.update(y for _, y in pts)
    lo, hi = min(xs), max(xs)
    bends = 0
    for pts in d.edges.values():
        bends = max(bends, len(_prune(pts)) - 2)
    root = max(d.pos, key=lambda u: d.pos[u][1])
    rx = d.pos[root][0]
    if rx == lo:
        corner = "top-left"
    elif rx == hi:
        corner = "top-right"
    else:
        corner = "interior"
    return LayoutStats(
        width=hi - lo + 1,
        height=len(ys),
        max_bends_per_edge=bends,
        root_corner=corner,
    )


# ------------------------------------------------------------------ json


def drawing_to_json(d: Drawing) -> dict:
    return {
        "mode": d.mode,
        "positions": {str(u): [x, y] for u, (x, y) in sorted(d.pos.items())},
        "edges": [
            {"from": p, "to": c, "points": [[x, y] for x, y in pts]}
            for (p, c), pts in sorted(d.edges.items())
        ],
    }


def drawing_from_json(obj) -> Drawing:
    if not isinstance(obj, dict):
        raise ValueError("drawing JSON must be an object")
    try:
        mode = obj["mode"]
        pos = {int(u): (int(x), int(y)) for u, (x, y) in obj["positions"].items()}
        edges = {
            (int(e["from"]), int(e["to"])): [(int(x), int(y)) for x, y in e["points"]]
            for e in obj["edges"]
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed drawing JSON: {exc}") from exc
    if mode not in ("unordered", "ordered3", "ordered1"):
        raise ValueError(f"unknown drawing mode {mode!r}")
    return Drawing(mode=mode, pos=pos, edges=edges)
