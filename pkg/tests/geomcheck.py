"""Brute-force exact geometry checker used as an in-test oracle.

Deliberately independent of uptree.verify: every segment pair is
intersected with Fraction arithmetic, O(m^2), no sweeps, no shortcuts.
Slow and boring on purpose so the fast checker has something honest to
be compared against.
"""

from fractions import Fraction


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def isect(a, b, c, d):
    """None | ("point", P) | "overlap" for closed segments ab, cd."""
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    denom = r[0] * s[1] - r[1] * s[0]
    qp = (c[0] - a[0], c[1] - a[1])
    if denom == 0:
        if qp[0] * r[1] != qp[1] * r[0]:
            return None  # parallel, not collinear
        ax = 0 if abs(r[0]) >= abs(r[1]) else 1
        if r[ax] == 0:
            ax = 0 if abs(s[0]) >= abs(s[1]) else 1
        i1 = sorted((a[ax], b[ax]))
        i2 = sorted((c[ax], d[ax]))
        lo, hi = max(i1[0], i2[0]), min(i1[1], i2[1])
        if lo > hi:
            return None
        if lo == hi:
            # single shared point; it is an endpoint of at least one segment
            for p in (a, b, c, d):
                if p[ax] == lo:
                    return ("point", p)
        return "overlap"
    t = Fraction(qp[0] * s[1] - qp[1] * s[0], denom)
    u = Fraction(qp[0] * r[1] - qp[1] * r[0], denom)
    if 0 <= t <= 1 and 0 <= u <= 1:
        return ("point", (a[0] + t * r[0], a[1] + t * r[1]))
    return None


def check(t, d, ordered):
    """All violations of t's drawing d, [] when clean.

    Checks structure, strict downwardness, pairwise planarity (touches
    legal only at a shared node), nodes clear of foreign segments, and,
    when ordered=True, left-to-right child order at every fork.
    """
    bad = []
    pos = {v: tuple(p) for v, p in d.pos.items()}
    if set(pos) != set(t.preorder()):
        return ["node set mismatch"]
    edges = {k: [tuple(p) for p in pts] for k, pts in d.edges.items()}
    for (p, c), pts in edges.items():
        if c <= 0 or c >= t.n or t.parent(c) != p:
            bad.append(f"edge {(p, c)} not a tree edge")
            continue
        if pts[0] != pos[p] or pts[-1] != pos[c]:
            bad.append(f"edge {(p, c)} endpoints wrong")
        for q, r in zip(pts, pts[1:]):
            if not r[1] < q[1]:
                bad.append(f"edge {(p, c)} not strictly downward at {q}->{r}")
    for v in t.preorder():
        for c in t.children(v):
            if (v, c) not in edges:
                bad.append(f"missing edge {(v, c)}")
    if bad:
        return bad

    segs = []
    for key, pts in edges.items():
        for i, (a, b) in enumerate(zip(pts, pts[1:])):
            if a == b:
                bad.append(f"zero-length segment in {key}")
            segs.append((key, i, a, b))

    for i in range(len(segs)):
        k1, i1, a, b = segs[i]
        for j in range(i + 1, len(segs)):
            k2, i2, c, d2 = segs[j]
            res = isect(a, b, c, d2)
            if res is None:
                continue
            if res == "overlap":
                bad.append(f"overlap {k1}#{i1} {k2}#{i2}")
                continue
            pt = res[1]
            ep1 = pt == a or pt == b
            ep2 = pt == c or pt == d2
            if k1 == k2:
                if i2 == i1 + 1 and ep1 and ep2:
                    continue  # consecutive segments meeting at their bend
                bad.append(f"self-touch {k1} segs {i1},{i2} at {pt}")
                continue
            if not (ep1 and ep2):
                bad.append(f"crossing {k1}#{i1} x {k2}#{i2} at {pt}")
                continue
            shared = set(k1) & set(k2)
            if not any(pt == pos[u] for u in shared):
                bad.append(f"illegal touch {k1} {k2} at {pt}")

    for u in t.preorder():
        pu = pos[u]
        for key, i, a, b in segs:
            if u in key:
                continue
            if (min(a[0], b[0]) <= pu[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= pu[1] <= max(a[1], b[1])
                    and cross(a, b, pu) == 0):
                bad.append(f"node {u} on segment {key}#{i}")

    if ordered:
        for v in t.preorder():
            kids = t.children(v)
            if len(kids) < 2:
                continue
            keys = []
            for c in kids:
                pts = edges[(v, c)]
                dx = pts[1][0] - pts[0][0]
                dy = pts[1][1] - pts[0][1]
                if dy >= 0:
                    bad.append(f"edge {(v, c)} departs upward")
                    dy = -1
                keys.append(Fraction(dx, -dy))
            for p, q in zip(keys, keys[1:]):
                if not p < q:
                    bad.append(f"order violated at node {v}")
                    break
    return bad
