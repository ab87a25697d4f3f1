"""The rank of an ordered rooted tree, with witnesses.

The rank equals the optimum width of an order-preserving strictly-upward
poly-line drawing.  It is computed bottom-up in linear time: a node whose
children have maximum rank W either admits a corner-W-witness (found by
``test_left``/``test_right``, each a single scan of the child ranks) and
gets rank W, or gets rank W + 1 with the vacuous witness.

Two witness kinds appear throughout:

* ``RankWitness`` -- classification of children into big/small, root
  coordinate X, vertical-child index v, and injective rank-bounds on the
  big children (conditions R1l, R1r, R2l, R2r, R3).
* ``CornerWitness`` -- one-sided normal form: a threshold W' and a
  monotone index sequence sigma(W'), ..., sigma(W) picking children of
  exactly those ranks, everything between them being low-rank (C1, C2).

Child indices are 1-based everywhere, matching the c_1..c_d convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .tree import Tree

__all__ = [
    "CornerWitness",
    "TestFailure",
    "RankWitness",
    "RankAnnotation",
    "test_left",
    "test_right",
    "rank",
    "validate_rank_witness",
    "validate_corner_witness",
    "push_to_corner",
    "corner_witness_to_json",
    "corner_witness_from_json",
    "rank_witness_to_json",
    "rank_witness_from_json",
]


@dataclass(frozen=True, eq=True)
class CornerWitness:
    """One-sided witness: sigma maps w in {Wprime..W} to a child index.

    Wprime = W + 1 is the vacuous form (empty sigma, all children of
    rank <= W - 1).  W >= 1: rooted-path nodes carry honest
    corner-1-witnesses rather than being special-cased.
    """

    side: str  # "left" | "right"
    W: int
    Wprime: int
    sigma: dict = field(compare=True)

    def is_vacuous(self) -> bool:
        return self.Wprime == self.W + 1


@dataclass(frozen=True)
class TestFailure:
    """Where and why a corner-witness scan gave up."""

    index: int  # 1-based child index at which the scan failed
    w: int
    reason: str


@dataclass(frozen=True)
class RankWitness:
    W: int
    X: int
    v: int
    big: frozenset
    rank_bounds: dict


@dataclass(frozen=True)
class RankAnnotation:
    """Per-node rank, and a corner witness for every internal node."""

    rank: dict
    corner: dict

    def root_rank(self) -> int:
        return self.rank[0]


def test_left(child_ranks: Sequence[int], W: int) -> Union[CornerWitness, TestFailure]:
    """Scan for a left-corner-W-witness, right to left.

    Returns the witness on success, a TestFailure (a value, not an
    exception) otherwise.  Runs in one pass over the child ranks.
    """
    d = len(child_ranks)
    if d < 1:
        raise ValueError("need at least one child rank")
    if W < 1:
        raise ValueError("W must be >= 1")
    i = 0
    for k in range(d, 0, -1):
        if child_ranks[k - 1] >= W:
            i = k
            break
    if i == 0:
        # all children of rank <= W-1: vacuous witness
        return CornerWitness("left", W, W + 1, {})
    if child_ranks[i - 1] > W:
        return TestFailure(i, W, f"child {i} has rank {child_ranks[i - 1]} > W")
    # c_i is the rightmost child of rank exactly W
    sigma = {W: i}
    w = W
    i -= 1
    while True:
        while i > 0 and child_ranks[i - 1] <= w - 2:
            i -= 1
        if i == 0:
            return CornerWitness("left", W, w, sigma)
        if child_ranks[i - 1] >= w:
            return TestFailure(
                i, w, f"child {i} has rank {child_ranks[i - 1]} >= {w}, no slot left"
            )
        sigma[w - 1] = i
        w -= 1
        i -= 1


def test_right(child_ranks: Sequence[int], W: int) -> Union[CornerWitness, TestFailure]:
    """Mirror scan for a right-corner-W-witness, left to right."""
    d = len(child_ranks)
    if d < 1:
        raise ValueError("need at least one child rank")
    if W < 1:
        raise ValueError("W must be >= 1")
    i = 0
    for k in range(1, d + 1):
        if child_ranks[k - 1] >= W:
            i = k
            break
    if i == 0:
        return CornerWitness("right", W, W + 1, {})
    if child_ranks[i - 1] > W:
        return TestFailure(i, W, f"child {i} has rank {child_ranks[i - 1]} > W")
    # c_i is the leftmost child of rank exactly W
    sigma = {W: i}
    w = W
    i += 1
    while True:
        while i <= d and child_ranks[i - 1] <= w - 2:
            i += 1
        if i == d + 1:
            return CornerWitness("right", W, w, sigma)
        if child_ranks[i - 1] >= w:
            return TestFailure(
                i, w, f"child {i} has rank {child_ranks[i - 1]} >= {w}, no slot left"
            )
        sigma[w - 1] = i
        w -= 1
        i += 1


def rank(t: Tree) -> RankAnnotation:
    """Rank of every subtree plus one corner witness per internal node.

    Bottom-up over preorder ids; each node costs O(degree), so O(n)
    total.  When both one-sided tests succeed the left witness is kept,
    so repeated runs draw identically.
    """
    rk: dict = {}
    corner: dict = {}
    for v in t.bottom_up():
        kids = t.children(v)
        if not kids:
            rk[v] = 1
            continue
        ranks = [rk[c] for c in kids]
        W = max(ranks)
        res = test_left(ranks, W)
        if isinstance(res, TestFailure):
            res = test_right(ranks, W)
        if isinstance(res, TestFailure):
            # rank W+1, witness vacuous since all children have rank <= W
            rk[v] = W + 1
            corner[v] = CornerWitness("left", W + 1, W + 2, {})
        else:
            rk[v] = W
            corner[v] = res
    return RankAnnotation(rank=rk, corner=corner)


def validate_rank_witness(child_ranks: Sequence[int], w: RankWitness) -> list:
    """Check R1l/R1r/R2l/R2r/R3; return a list of violation strings.

    An empty list means the witness is valid for these child ranks.
    Malformed witnesses (coordinate out of range, vertical child not
    big, bad rank-bounds) are reported as violations, not exceptions.
    """
    out = []
    d = len(child_ranks)
    if w.W < 1:
        out.append(f"malformed: W={w.W} < 1")
        return out
    if not (1 <= w.X <= w.W):
        out.append(f"malformed: X={w.X} not in [1, {w.W}]")
    if not (1 <= w.v <= d):
        out.append(f"malformed: v={w.v} not in [1, {d}]")
        return out
    if any(not (1 <= i <= d) for i in w.big):
        out.append("malformed: big-child index out of range")
        return out
    if w.v not in w.big:
        out.append(f"malformed: vertical child c_{w.v} is not big")
    if set(w.rank_bounds) != set(w.big):
        out.append("malformed: rank_bounds keys differ from the big set")
        return out

    big = w.big
    # R1l / R1r: counts of big children on either side of the vertical child
    left_of_v = sum(1 for i in big if i < w.v)
    right_of_v = sum(1 for i in big if i > w.v)
    if left_of_v > w.X - 1:
        out.append(f"R1l: {left_of_v} big children left of c_{w.v}, allowed {w.X - 1}")
    if right_of_v > w.W - w.X:
        out.append(f"R1r: {right_of_v} big children right of c_{w.v}, allowed {w.W - w.X}")
    # R2l / R2r: small children must fit between the big ones
    for i in range(1, d + 1):
        if i in big:
            continue
        r_i = child_ranks[i - 1]
        if i < w.v:
            ell = sum(1 for j in big if j < i)
            if r_i > w.X - 1 - ell:
                out.append(f"R2l: small c_{i} has rank {r_i} > {w.X - 1 - ell}")
        elif i > w.v:
            rr = sum(1 for j in big if j > i)
            if r_i > w.W - w.X - rr:
                out.append(f"R2r: small c_{i} has rank {r_i} > {w.W - w.X - rr}")
    # R3: given rank-bounds must be injective, in range, and dominate
    seen = set()
    for i in sorted(big):
        pi = w.rank_bounds[i]
        if not (isinstance(pi, int) and 1 <= pi <= w.W):
            out.append(f"R3: rank-bound {pi!r} of c_{i} not in 1..{w.W}")
            continue
        if pi in seen:
            out.append(f"R3: rank-bound {pi} used twice")
        seen.add(pi)
        if child_ranks[i - 1] > pi:
            out.append(f"R3: c_{i} has rank {child_ranks[i - 1]} > bound {pi}")
    return out


def validate_corner_witness(child_ranks: Sequence[int], cw: CornerWitness) -> list:
    """Check monotonicity plus C1/C2 (with sentinels); list of violations."""
    out = []
    d = len(child_ranks)
    if cw.side not in ("left", "right"):
        out.append(f"malformed: side {cw.side!r}")
        return out
    if cw.W < 1:
        out.append(f"malformed: W={cw.W} < 1")
        return out
    if not (1 <= cw.Wprime <= cw.W + 1):
        out.append(f"malformed: Wprime={cw.Wprime} not in [1, {cw.W + 1}]")
        return out
    ws = list(range(cw.Wprime, cw.W + 1))
    if set(cw.sigma) != set(ws):
        out.append(f"malformed: sigma keys {sorted(cw.sigma)} != {ws}")
        return out
    if any(not (1 <= cw.sigma[w] <= d) for w in ws):
        out.append("malformed: sigma value out of range")
        return out
    if cw.side == "left":
        # sigma(W') < ... < sigma(W); sentinels 0 on the left, d+1 on the right
        seq = [0] + [cw.sigma[w] for w in ws] + [d + 1]
    else:
        # sigma(W) < ... < sigma(W'), i.e. sigma grows as w falls
        seq = [0] + [cw.sigma[w] for w in reversed(ws)] + [d + 1]
    for a, b in zip(seq, seq[1:]):
        if a >= b:
            out.append(f"malformed: sigma not strictly monotone ({a} !< {b})")
            return out
    for w in ws:
        got = child_ranks[cw.sigma[w] - 1]
        if got != w:
            out.append(f"C1: child c_{cw.sigma[w]} has rank {got}, needs {w}")
    # C2 per gap k: children strictly between seq[k] and seq[k+1] need
    # rank <= gap_bound[k].  Walking seq from the vertical-child side
    # outward, the gap just inside sigma(w) allows w-2, and the outermost
    # gap (beyond sigma(W)) allows W-1.
    if cw.side == "left":
        gap_bound = [w - 2 for w in ws] + [cw.W - 1]
    else:
        gap_bound = [cw.W - 1] + [w - 2 for w in reversed(ws)]
    for k in range(len(seq) - 1):
        for i in range(seq[k] + 1, seq[k + 1]):
            got = child_ranks[i - 1]
            if got > gap_bound[k]:
                out.append(
                    f"C2: child c_{i} has rank {got} > {gap_bound[k]} in gap {k}"
                )
    return out


def push_to_corner(child_ranks: Sequence[int], w: RankWitness) -> RankWitness:
    """Move a valid rank-W-witness's coordinate to X = 1 or X = W.

    Input must be valid and have W >= 2; raises ValueError otherwise.
    If X is already extremal the witness is returned unchanged.  The new
    witness uses at most two big children, picked by where the (unique)
    rank-W child sits relative to the at-most-one rank-(W-1) child.
    """
    problems = validate_rank_witness(child_ranks, w)
    if problems:
        raise ValueError(f"input witness invalid: {problems[0]}")
    if w.W < 2:
        raise ValueError("push_to_corner needs W >= 2")
    if w.X in (1, w.W):
        return w
    d = len(child_ranks)
    W = w.W
    tops = [i for i in range(1, d + 1) if child_ranks[i - 1] == W]
    if not tops:
        # every child fits below W: c_1 big, everything else small
        return RankWitness(W=W, X=1, v=1, big=frozenset({1}), rank_bounds={1: W})
    m = tops[0]
    seconds = [i for i in range(1, d + 1) if child_ranks[i - 1] == W - 1]
    if not seconds or seconds[0] > m:
        big = frozenset({1, m})
        bounds = {m: W} if m == 1 else {1: W - 1, m: W}
        return RankWitness(W=W, X=1, v=1, big=big, rank_bounds=bounds)
    big = frozenset({m, d})
    bounds = {m: W} if m == d else {d: W - 1, m: W}
    return RankWitness(W=W, X=W, v=d, big=big, rank_bounds=bounds)


def corner_witness_to_json(cw: CornerWitness) -> dict:
    return {
        "side": cw.side,
        "W": cw.W,
        "Wprime": cw.Wprime,
        "sigma": {str(w): i for w, i in sorted(cw.sigma.items())},
    }


def corner_witness_from_json(obj: dict) -> CornerWitness:
    return CornerWitness(
        side=obj["side"],
        W=int(obj["W"]),
        Wprime=int(obj["Wprime"]),
        sigma={int(k): int(v) for k, v in obj.get("sigma", {}).items()},
    )


def rank_witness_to_json(w: RankWitness) -> dict:
    return {
        "W": w.W,
        "X": w.X,
        "v": w.v,
        "big": sorted(w.big),
        "pi": {str(i): b for i, b in sorted(w.rank_bounds.items())},
    }


def rank_witness_from_json(obj: dict) -> RankWitness:
    return RankWitness(
        W=int(obj["W"]),
        X=int(obj["X"]),
        v=int(obj["v"]),
        big=frozenset(int(i) for i in obj.get("big", [])),
        rank_bounds={int(k): int(v) for k, v in obj.get("pi", {}).items()},
    )
