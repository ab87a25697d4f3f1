"""Independent checking of drawings, and witness extraction from them.

``check_drawing`` re-derives every claimed property of a drawing from its
coordinates alone: planarity, (strict) upwardness, order preservation,
straight-lineness, plus width/height/bend statistics.  All geometry is
exact -- integers and ``Fraction`` -- so the verdicts carry no epsilon.

Planarity is not tested pairwise.  Segments are swept through vertical
strips between consecutive "interesting" x-coordinates: inside a strip
every candidate segment runs wall to wall (endpoints sit on integer x),
so two segments cross there iff their wall orders strictly invert, which
an O(m log m) scan finds.  Touches *on* a wall are grouped by exact
position and judged by one rule: a shared point must be a segment
endpoint of everything meeting it, and if more than one edge is
involved, the point must be the position of a tree node incident to all
of them.  This is the whole legality of tree drawings -- fans at a
parent, chains through a node -- in one place.

``extract_rank_witness`` goes the other way: it reads a valid drawing
and reconstructs the width certificate its geometry implies.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .layout import Drawing, _prune
from .rank import RankWitness, rank, validate_rank_witness
from .tree import Tree

__all__ = [
    "DrawingMismatch",
    "VerifyReport",
    "check_drawing",
    "reorder_children_by_drawing",
    "extract_rank_witness",
]

PROPERTIES = ("planar", "upward", "strictly_upward", "order_preserving", "straight_line")


class DrawingMismatch(ValueError):
    """The drawing does not structurally describe the given tree."""


@dataclass
class VerifyReport:
    planar: bool
    upward: bool
    strictly_upward: bool
    order_preserving: bool
    straight_line: bool
    width: int
    height: int
    max_bends: int
    violations: list
    ok: bool


def _dedup(pts):
    out = [tuple(p) for p in pts[:1]]
    for p in pts[1:]:
        q = tuple(p)
        if q != out[-1]:
            out.append(q)
    return out


def _structural(t: Tree, d: Drawing):
    """Raise DrawingMismatch unless d is *about* t.

    Returns (pos, lines): positions as plain int tuples and polylines
    deduplicated the same way, so downstream code can hash and compare.
    """
    if set(d.pos) != set(range(t.n)):
        raise DrawingMismatch("drawing and tree disagree on node ids")
    pos = {}
    for u, p in d.pos.items():
        if len(tuple(p)) != 2 or not all(isinstance(c, int) for c in p):
            raise DrawingMismatch(f"position of node {u} is not an integer pair")
        pos[u] = tuple(p)
    want = {(t.parent(c), c) for c in range(1, t.n)}
    if set(d.edges) != want:
        missing = want - set(d.edges)
        extra = set(d.edges) - want
        raise DrawingMismatch(f"edge set mismatch (missing {sorted(missing)[:3]}, extra {sorted(extra)[:3]})")
    lines = {}
    for key, pts in d.edges.items():
        if len(pts) < 2:
            raise DrawingMismatch(f"edge {key} has fewer than two points")
        for p in pts:
            if len(tuple(p)) != 2 or not all(isinstance(c, int) for c in p):
                raise DrawingMismatch(f"edge {key} has a non-integer point")
        p, c = key
        clean = _dedup(pts)
        if clean[0] != pos[p] or clean[-1] != pos[c]:
            raise DrawingMismatch(f"edge {key} does not run from its parent to its child")
        lines[key] = clean
    return pos, lines


def _departure(lines, key):
    """Direction class of the first segment: sortable clockwise key."""
    pts = lines[key]
    if len(pts) < 2:
        return None
    dx = pts[1][0] - pts[0][0]
    dy = pts[1][1] - pts[0][1]
    if dy > 0:
        return None  # leaves upward; not classifiable
    if dy == 0:
        return (0, 0) if dx < 0 else (2, 0)
    return (1, Fraction(dx, -dy))


def _planarity(t, pos, lines, violations):
    """Append planarity violations (at most a handful; we stop digging at
    the first few per category -- the report is a verdict, not a census)."""
    posmap = {}
    for u in sorted(pos):
        p = pos[u]
        if p in posmap:
            violations.append(f"planar: nodes {posmap[p]} and {u} share position {p}")
        else:
            posmap[p] = u
    if any(v.startswith("planar:") for v in violations):
        return  # coordinates are junk; fine-grained sweep would mislabel

    segs = []  # (key, index, a, b)
    last = {}
    for key, pts in lines.items():
        for i, (a, b) in enumerate(zip(pts, pts[1:])):
            segs.append((key, i, a, b))
        last[key] = len(pts) - 2  # index of the final segment
    if not segs:
        return

    vert = {}  # column -> [(ylo, yhi, sid)]
    nv = []  # (x1, x2, y1, y2, sid), x1 < x2
    for sid, (key, i, a, b) in enumerate(segs):
        if a[0] == b[0]:
            vert.setdefault(a[0], []).append((min(a[1], b[1]), max(a[1], b[1]), sid))
        else:
            (x1, y1), (x2, y2) = (a, b) if a[0] < b[0] else (b, a)
            nv.append((x1, x2, y1, y2, sid))

    def name(sid):
        key, i, _, _ = segs[sid]
        return f"edge {key} segment {i}"

    # vertical / vertical: per column the intervals must be disjoint
    col_ok = {}
    for x, ivs in vert.items():
        ivs.sort()
        ok = True
        hi, hid = ivs[0][1], ivs[0][2]
        for ylo, yhi, sid in ivs[1:]:
            if ylo < hi:
                violations.append(f"planar: {name(sid)} overlaps {name(hid)} in column {x}")
                ok = False
                break
            if yhi > hi:
                hi, hid = yhi, sid
        col_ok[x] = ok

    walls = sorted(set([x1 for x1, *_ in nv] + [x2 for _, x2, *_ in nv] + list(vert)))

    # wall groups: every point where a segment meets an interesting column
    groups = {x: {} for x in walls}
    strips = [[] for _ in range(max(len(walls) - 1, 0))]
    for x1, x2, y1, y2, sid in nv:
        slope = Fraction(y2 - y1, x2 - x1)
        i1 = bisect_left(walls, x1)
        i2 = bisect_left(walls, x2)
        for k in range(i1, i2 + 1):
            x = walls[k]
            y = y1 + slope * (x - x1)
            groups[x].setdefault(y, []).append((sid, x == x1 or x == x2))
            if k < i2:
                ynext = y1 + slope * (walls[k + 1] - x1)
                strips[k].append((y, ynext, sid))
    for x, ivs in vert.items():
        for ylo, yhi, sid in ivs:
            groups[x].setdefault(Fraction(ylo), []).append((sid, True))
            groups[x].setdefault(Fraction(yhi), []).append((sid, True))

    # proper crossings inside a strip = strict inversion between the walls
    for k, cand in enumerate(strips):
        if len(cand) < 2:
            continue
        cand.sort()
        best_r, best_sid = None, None
        j = 0
        while j < len(cand):
            j2 = j
            while j2 < len(cand) and cand[j2][0] == cand[j][0]:
                j2 += 1
            for yl, yr, sid in cand[j:j2]:
                if best_r is not None and yr < best_r:
                    violations.append(
                        f"planar: {name(sid)} crosses {name(best_sid)} between x={walls[k]} and x={walls[k + 1]}"
                    )
                    if len(violations) > 8:
                        return
            for yl, yr, sid in cand[j:j2]:
                if best_r is None or yr > best_r:
                    best_r, best_sid = yr, sid
            j = j2
        for (al, ar, asid), (bl, br, bsid) in zip(cand, cand[1:]):
            if al == bl and ar == br:
                violations.append(f"planar: {name(asid)} and {name(bsid)} are collinear and overlap")
                if len(violations) > 8:
                    return

    # shared points on walls
    def is_terminal(sid, p):
        key, i, a, b = segs[sid]
        pts = lines[key]
        return (i == 0 and p == pts[0]) or (i == last[key] and p == pts[-1])

    for x in walls:
        ivs = vert.get(x, [])
        los = [iv[0] for iv in ivs]
        for y, members in groups[x].items():
            # a vertical interval swallowing this point joins as an interior member
            if ivs and col_ok.get(x, True):
                j = bisect_right(los, y) - 1
                if j >= 0:
                    ylo, yhi, sid = ivs[j]
                    if ylo < y < yhi:
                        members = members + [(sid, False)]
            node = None
            if y.denominator == 1:
                node = posmap.get((x, int(y)))
            if node is not None:
                for sid, is_end in members:
                    key = segs[sid][0]
                    if not is_end:
                        violations.append(f"planar: node {node} lies inside {name(sid)}")
                    elif node not in key:
                        violations.append(f"planar: {name(sid)} touches node {node} at {(x, int(y))}")
                    elif not is_terminal(sid, (x, int(y))):
                        violations.append(f"planar: edge {key} bends at node {node}")
            elif len(members) > 1:
                if any(not is_end for _, is_end in members):
                    a = members[0][0]
                    b = next(s for s, e in members if not e)
                    if a == b:
                        b = members[1][0]
                    violations.append(f"planar: {name(a)} touches {name(b)} at x={x}, y={y}")
                else:
                    by_key = {}
                    for sid, _ in members:
                        by_key.setdefault(segs[sid][0], []).append(sid)
                    if len(by_key) > 1:
                        k1, k2 = sorted(by_key)[:2]
                        violations.append(
                            f"planar: edges {k1} and {k2} touch at x={x}, y={y} away from any node"
                        )
                    else:
                        (key, sids), = by_key.items()
                        sids.sort(key=lambda s: segs[s][1])
                        idx = [segs[s][1] for s in sids]
                        if len(idx) != 2 or idx[1] != idx[0] + 1:
                            violations.append(f"planar: edge {key} touches itself at x={x}, y={y}")
            if len(violations) > 8:
                return


def check_drawing(t: Tree, d: Drawing, require=("planar", "upward")) -> VerifyReport:
    """Re-derive the drawing's properties from coordinates; judge `require`.

    Structural problems (wrong node set, broken polylines) raise
    DrawingMismatch; everything else is reported, not raised.  ``ok`` is
    the conjunction of the required property flags.
    """
    for prop in require:
        if prop not in PROPERTIES:
            raise ValueError(f"unknown property {prop!r}; choose from {PROPERTIES}")
    pos, lines = _structural(t, d)
    violations: list = []

    upward = True
    strictly = True
    for key, pts in lines.items():
        for a, b in zip(pts, pts[1:]):
            if b[1] > a[1]:
                upward = strictly = False
                violations.append(f"upward: edge {key} climbs from {a} to {b}")
                break
            if b[1] == a[1] and strictly:
                strictly = False
                violations.append(f"strictly_upward: edge {key} runs level at y={a[1]}")

    straight = all(len(_prune(pts)) == 2 for pts in lines.values()) if lines else True
    if not straight:
        violations.append("straight_line: some edge bends")

    ordered = True
    for v in range(t.n):
        kids = t.children(v)
        if len(kids) < 2:
            continue
        keys = [_departure(lines, (v, c)) for c in kids]
        if any(k is None for k in keys):
            ordered = False
            violations.append(f"order_preserving: an edge at node {v} leaves upward")
            continue
        for a, b in zip(keys, keys[1:]):
            if not a < b:
                ordered = False
                violations.append(f"order_preserving: children of node {v} appear out of order")
                break

    before = len(violations)
    _planarity(t, pos, lines, violations)
    planar = len(violations) == before

    xs = [p[0] for p in pos.values()]
    ys = {p[1] for p in pos.values()}
    for pts in lines.values():
        xs.extend(x for x, _ in pts)
        ys.update(y for _, y in pts)
    bends = max((len(_prune(pts)) - 2 for pts in lines.values()), default=0)

    report = VerifyReport(
        planar=planar,
        upward=upward,
        strictly_upward=strictly,
        order_preserving=ordered,
        straight_line=straight,
        width=max(xs) - min(xs) + 1,
        height=len(ys),
        max_bends=max(bends, 0),
        violations=violations,
        ok=True,
    )
    report.ok = all(getattr(report, prop) for prop in require)
    return report


def reorder_children_by_drawing(t: Tree, d: Drawing):
    """Permute children to match the drawn clockwise order; renumber preorder.

    Returns (tree, drawing) with fresh ids.  The drawing must be upward
    (no edge may leave its parent climbing) and fan directions must be
    distinct; otherwise ValueError.
    """
    pos, lines = _structural(t, d)
    order = {}
    for v in range(t.n):
        kids = t.children(v)
        keys = []
        for c in kids:
            k = _departure(lines, (v, c))
            if k is None:
                raise ValueError(f"edge ({v}, {c}) leaves its parent upward")
            keys.append((k, c))
        keys.sort()
        for (a, _), (b, _) in zip(keys, keys[1:]):
            if a == b:
                raise ValueError(f"coincident edge directions at node {v}")
        order[v] = [c for _, c in keys]

    mapping = {}
    trail = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        mapping[v] = len(trail)
        trail.append(v)
        stack.extend(reversed(order[v]))
    children = [[] for _ in range(t.n)]
    for v in trail:
        children[mapping[v]] = [mapping[c] for c in order[v]]
    labels = {mapping[v]: t.label(v) for v in range(t.n) if t.label(v) is not None}
    t2 = Tree(children, labels)
    d2 = Drawing(
        mode=d.mode,
        pos={mapping[u]: p for u, p in d.pos.items()},
        edges={(mapping[p], mapping[c]): list(pts) for (p, c), pts in d.edges.items()},
    )
    return t2, d2


def extract_rank_witness(t: Tree, d: Drawing) -> Optional[RankWitness]:
    """Read a width certificate for the root off a valid drawing.

    The drawing must be planar, upward, and order-preserving (reorder
    first if it is not).  Children whose drawn region meets the root's
    column are big; the one reaching highest is the vertical child; the
    injective bounds come from how deep each region descends, deepest
    first.  Returns None when the drawing fails the precheck or the
    resulting witness does not validate.
    """
    if t.n < 2:
        return None
    rep = check_drawing(t, d, require=("planar", "upward", "order_preserving"))
    if not rep.ok:
        return None
    pos, lines = _structural(t, d)
    xs = [p[0] for p in pos.values()]
    for pts in lines.values():
        xs.extend(x for x, _ in pts)
    x0, y0 = pos[t.root]
    W = max(xs) - min(xs) + 1
    X = x0 - min(xs) + 1

    # nodes of each root subtree
    owner = {}
    for i, c in enumerate(t.children(t.root), start=1):
        owner[c] = i
    for v in range(1, t.n):
        if v not in owner:
            owner[v] = owner[t.parent(v)]

    lo: dict = {}
    hi: dict = {}

    def touch(i, ylo, yhi):
        if i in lo:
            lo[i] = min(lo[i], ylo)
            hi[i] = max(hi[i], yhi)
        else:
            lo[i], hi[i] = ylo, yhi

    for u, (x, y) in pos.items():
        if u != t.root and x == x0:
            touch(owner[u], Fraction(y), Fraction(y))
    for (p, c), pts in lines.items():
        i = owner[c]
        for a, b in zip(pts, pts[1:]):
            if a[0] == b[0]:
                if a[0] == x0:
                    ya, yb = sorted((a[1], b[1]))
                    if (x0, yb) == (x0, y0):
                        # initial vertical run: open at the root point but
                        # still reaching it; keep the sentinel top
                        touch(i, Fraction(ya), Fraction(y0))
                    else:
                        touch(i, Fraction(ya), Fraction(yb))
            else:
                (x1, y1), (x2, y2) = (a, b) if a[0] < b[0] else (b, a)
                if x1 <= x0 <= x2:
                    y = y1 + Fraction(y2 - y1, x2 - x1) * (x0 - x1)
                    if (x0, y) != (x0, Fraction(y0)):
                        touch(i, y, y)

    big = frozenset(lo)
    if not big:
        return None
    v = max(big, key=lambda i: hi[i])
    bounds = {}
    for k, i in enumerate(sorted(big, key=lambda i: lo[i])):
        bounds[i] = W - k
    w = RankWitness(W=W, X=X, v=v, big=big, rank_bounds=bounds)
    ranks = rank(t).rank
    child_ranks = [ranks[c] for c in t.children(t.root)]
    if validate_rank_witness(child_ranks, w):
        return None
    return w
