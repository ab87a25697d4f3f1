"""Exponential ground-truth computations for small trees.

Everything here recomputes results from first principles so the fast
implementations elsewhere have something independent to disagree with:

* ``rank_bruteforce`` -- least W admitting a width witness, found by
  enumerating every big/small split, anchor position, and column.
* ``min_nodes_for_rank`` -- exhaustive search for the smallest tree of a
  given rank.
* ``equivalence_suite`` -- checks that five different phrasings of
  "a width-W witness exists" agree on every small tree.

The brute-force path never calls the linear-time engine in
:mod:`uptree.rank`; the only import of it lives inside
``equivalence_suite``, where the scans are the thing being tested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .tree import Tree, parse_tree, serialize_tree

__all__ = [
    "OracleConfig",
    "NWRecord",
    "enumerate_trees",
    "rank_bruteforce",
    "rank_witness_exists_brute",
    "corner_witness_exists_brute",
    "min_nodes_for_rank",
    "equivalence_suite",
]

# Catalan(14) is already 2.6 million trees; past that enumeration is a typo.
_ENUM_CAP = 15


def _dyck_words(pairs: int) -> Iterator[str]:
    """All balanced paren strings with `pairs` pairs, lexicographic ('(' < ')')."""
    buf: list = []

    def go(opened: int, closed: int):
        if len(buf) == 2 * pairs:
            yield "".join(buf)
            return
        if opened < pairs:
            buf.append("(")
            yield from go(opened + 1, closed)
            buf.pop()
        if closed < opened:
            buf.append(")")
            yield from go(opened, closed + 1)
            buf.pop()

    return go(0, 0)


def enumerate_trees(n: int, max_n: int = _ENUM_CAP) -> Iterator[Tree]:
    """Yield every ordered rooted tree with exactly n nodes.

    Deterministic order: lexicographic in the paren serialization.  There
    are Catalan(n-1) of them, hence the cap.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise ValueError(f"n={n} exceeds enumeration cap {max_n}")
    for word in _dyck_words(n - 1):
        yield parse_tree("(" + word + ")")


def _pi_feasible(big_ranks: Sequence[int], W: int) -> bool:
    # Injective pi: big -> {1..W} with pi >= rank.  Intervals are nested
    # ([r, W]), so greedy top-down assignment is exact: the k-th largest
    # demand must fit in slot W-k.
    for k, r in enumerate(sorted(big_ranks, reverse=True)):
        if r > W - k:
            return False
    return True


def rank_witness_exists_brute(
    child_ranks: Sequence[int], W: int, restrict: Optional[str] = None
) -> bool:
    """Does a width-W witness exist over these child ranks?

    Checks exactly the conditions of ``rank.validate_rank_witness``, by
    trying every big/small classification (bitmask), every big anchor
    index v, and every column X.  ``restrict`` narrows the search:
    ``"corner_X"`` keeps only X in {1, W}, ``"corner_v"`` only v in
    {1, d}.  Exponential in the number of children -- oracle use only.
    """
    d = len(child_ranks)
    if d < 1 or W < 1:
        raise ValueError("need at least one child and W >= 1")
    if restrict not in (None, "corner_X", "corner_v"):
        raise ValueError(f"unknown restriction {restrict!r}")
    xs = (1, W) if restrict == "corner_X" else tuple(range(1, W + 1))
    for mask in range(1, 1 << d):
        big = [i + 1 for i in range(d) if mask >> i & 1]
        if not _pi_feasible([child_ranks[i - 1] for i in big], W):
            continue
        bigset = frozenset(big)
        # nleft[i] / nright[i]: big children strictly left / right of c_i
        nleft = [0] * (d + 1)
        run = 0
        for i in range(1, d + 1):
            nleft[i] = run
            if i in bigset:
                run += 1
        nright = [run - nleft[i] - (1 if i in bigset else 0) for i in range(d + 1)]
        for v in big:
            if restrict == "corner_v" and v not in (1, d):
                continue
            for X in xs:
                if nleft[v] > X - 1 or nright[v] > W - X:
                    continue
                ok = True
                for i in range(1, d + 1):
                    if i in bigset:
                        continue
                    r = child_ranks[i - 1]
                    if i < v:
                        ok = r <= X - 1 - nleft[i]
                    else:
                        ok = r <= W - X - nright[i]
                    if not ok:
                        break
                if ok:
                    return True
    return False


def corner_witness_exists_brute(child_ranks: Sequence[int], W: int, side: str) -> bool:
    """Does a corner witness exist?  Direct enumeration of every chain.

    Tries every start value W' and every strictly increasing index tuple,
    checking the same chain/gap conditions as
    ``rank.validate_corner_witness``.  Left chains carry ascending values
    W'..W, right chains the same values descending.
    """
    d = len(child_ranks)
    if d < 1 or W < 1:
        raise ValueError("need at least one child and W >= 1")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    for wprime in range(1, W + 2):
        vals = list(range(wprime, W + 1))
        if side == "right":
            vals.reverse()
        for idx in itertools.combinations(range(1, d + 1), len(vals)):
            if all(child_ranks[i - 1] == w for i, w in zip(idx, vals)):
                if _gaps_ok(child_ranks, W, wprime, idx, side):
                    return True
    return False


def _gaps_ok(child_ranks, W, wprime, idx, side) -> bool:
    # Children strictly between consecutive chain indices (sentinels 0 and
    # d+1) must sit below the bound of their gap.
    d = len(child_ranks)
    seq = (0,) + tuple(idx) + (d + 1,)
    if side == "left":
        bounds = [w - 2 for w in range(wprime, W + 1)] + [W - 1]
    else:
        bounds = [W - 1] + [w - 2 for w in range(W, wprime - 1, -1)]
    for g in range(len(seq) - 1):
        for i in range(seq[g] + 1, seq[g + 1]):
            if child_ranks[i - 1] > bounds[g]:
                return False
    return True


# rank per ordered shape (nested tuples); shared by every oracle entry point
_rank_memo: dict = {(): 1}


def _shapes(t: Tree) -> list:
    out = [None] * t.n
    for v in t.bottom_up():
        out[v] = tuple(out[c] for c in t.children(v))
    return out


def _rank_of_shape(shape) -> int:
    got = _rank_memo.get(shape)
    if got is not None:
        return got
    ranks = [_rank_of_shape(c) for c in shape]
    W = 1
    while not rank_witness_exists_brute(ranks, W):
        W += 1
        # one past the max child rank always admits a witness (big = {c_1});
        # running past it means the enumeration itself is broken
        assert W <= max(ranks) + 1, "brute witness search ran away"
    _rank_memo[shape] = W
    return W


def rank_bruteforce(t: Tree, max_n: int = 11) -> int:
    """Least W with a width-W witness at every node, 1 for a single node.

    Child ranks are computed recursively by the same enumeration, memoized
    on the ordered shape.  The default cap guards against the per-node
    2^degree blowup; raise it only for trees known to have small degrees.
    """
    if t.n > max_n:
        raise ValueError(f"tree has {t.n} nodes, oracle cap is {max_n}")
    return _rank_of_shape(_shapes(t)[t.root])


@dataclass(frozen=True)
class NWRecord:
    """Outcome of a minimal-nodes-for-rank search."""

    W: int
    min_nodes_found: Optional[int]
    search_bound: int

    def to_json(self) -> dict:
        return {
            "W": self.W,
            "min_nodes_found": self.min_nodes_found,
            "search_bound": self.search_bound,
        }


def min_nodes_for_rank(W: int, n_max: int) -> NWRecord:
    """Smallest node count of an ordered tree with rank exactly W.

    Enumerates all trees with n <= n_max in size order; ``min_nodes_found``
    is None when no tree of rank W exists within the bound.  Every found
    value must be >= 2^(W-1); empirically the minima match 2^W - 1, which
    we report but do not assert.
    """
    if W < 1 or W > 4:
        raise ValueError("W must be in 1..4 (search space explodes beyond)")
    if n_max < 1 or n_max > _ENUM_CAP:
        raise ValueError(f"n_max must be in 1..{_ENUM_CAP}")
    for n in range(1, n_max + 1):
        for t in enumerate_trees(n):
            if rank_bruteforce(t, max_n=n_max) == W:
                assert n >= 2 ** (W - 1), f"rank-{W} tree with {n} nodes"
                return NWRecord(W=W, min_nodes_found=n, search_bound=n_max)
    return NWRecord(W=W, min_nodes_found=None, search_bound=n_max)


@dataclass(frozen=True)
class OracleConfig:
    """Bounds for the equivalence suite."""

    max_n: int = 11
    max_W: int = 6
    seed: int = 0

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")


def equivalence_suite(cfg: OracleConfig) -> dict:
    """Cross-check five phrasings of witness existence on every small tree.

    For every ordered tree with 2 <= n <= cfg.max_n and every W in
    1..cfg.max_W, evaluates over the root's child ranks:

    * ``witness``        -- some width-W witness exists (brute),
    * ``corner_X``       -- one exists with X in {1, W},
    * ``corner_v``       -- one exists with v in {1, d},
    * ``scan``           -- test_left or test_right succeeds,
    * ``corner_witness`` -- a left or right corner witness exists (brute).

    All five must agree everywhere; any disagreement lands in the report,
    smallest trees first.  The seed is echoed into the report so runs are
    identifiable; the sweep itself is exhaustive and deterministic.
    """
    # the one deliberate contact with the engine: the scans are the subject
    from .rank import CornerWitness, test_left, test_right

    trees = 0
    pairs = 0
    n_disagree = 0
    disagreements: list = []
    for n in range(2, cfg.max_n + 1):
        for t in enumerate_trees(n, max_n=cfg.max_n):
            ranks = [_rank_of_shape(s) for s in _shapes(t)[t.root]]
            trees += 1
            for W in range(1, cfg.max_W + 1):
                pairs += 1
                votes = {
                    "witness": rank_witness_exists_brute(ranks, W),
                    "corner_X": rank_witness_exists_brute(ranks, W, restrict="corner_X"),
                    "corner_v": rank_witness_exists_brute(ranks, W, restrict="corner_v"),
                    "scan": isinstance(test_left(ranks, W), CornerWitness)
                    or isinstance(test_right(ranks, W), CornerWitness),
                    "corner_witness": corner_witness_exists_brute(ranks, W, "left")
                    or corner_witness_exists_brute(ranks, W, "right"),
                }
                if len(set(votes.values())) > 1:
                    n_disagree += 1
                    if len(disagreements) < 50:
                        entry = {"n": n, "tree": serialize_tree(t), "W": W}
                        entry.update(votes)
                        disagreements.append(entry)
    return {
        "max_n": cfg.max_n,
        "max_W": cfg.max_W,
        "seed": cfg.seed,
        "trees_checked": trees,
        "pairs_checked": pairs,
        "disagreement_count": n_disagree,
        "disagreements": disagreements,
        "agree": n_disagree == 0,
    }
