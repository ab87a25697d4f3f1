"""Rooted ordered trees: representation, text format, JSON, and generators.

Trees are immutable after construction.  Node ids are preorder indices
(root = 0), which makes ``reversed(range(n))`` a valid bottom-up order:
every child id is strictly larger than its parent's, so all dynamic
programming over subtrees is a plain loop with no recursion.  That is
load-bearing, not style: some generated families contain paths far deeper
than CPython's default recursion limit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "Tree",
    "NodeRecord",
    "ParseError",
    "parse_tree",
    "serialize_tree",
    "tree_to_json",
    "tree_from_json",
    "gen_complete_binary",
    "gen_path",
    "gen_quintary_family",
    "gen_hpd_family",
    "gen_random_tree",
]


class ParseError(ValueError):
    """Raised on malformed tree text or JSON; carries a character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class NodeRecord:
    id: int
    parent: Optional[int]
    children: tuple
    label: Optional[str] = None


class Tree:
    """Rooted ordered tree with preorder node ids.

    Parameters
    ----------
    children : sequence of sequences of int
        ``children[v]`` lists v's children left to right.  The implied
        numbering must be preorder with root 0; anything else raises
        ``ValueError``.
    labels : dict, optional
        Sparse map node-id -> label text.  Ignored by all algorithms.
    """

    __slots__ = ("_children", "_parent", "_labels")

    def __init__(self, children: Sequence[Sequence[int]], labels=None):
        n = len(children)
        if n < 1:
            raise ValueError("tree must have at least one node")
        kids = tuple(tuple(c) for c in children)
        parent = [-1] * n
        # Preorder walk; the visit sequence must be exactly 0, 1, ..., n-1.
        # This single pass also establishes connectivity and acyclicity.
        seen = 0
        stack = [0]
        while stack:
            v = stack.pop()
            if v != seen:
                raise ValueError(
                    f"children lists are not in preorder: expected node {seen}, walked to {v}"
                )
            seen += 1
            row = kids[v]
            for c in row:
                if not (0 <= c < n):
                    raise ValueError(f"child id {c} out of range at node {v}")
                if parent[c] != -1 or c == 0:
                    raise ValueError(f"node {c} has more than one parent")
                parent[c] = v
            stack.extend(reversed(row))
        if seen != n:
            raise ValueError(f"tree is not connected: reached {seen} of {n} nodes")
        self._children = kids
        self._parent = tuple(parent)
        self._labels = dict(labels) if labels else {}

    @property
    def n(self) -> int:
        return len(self._children)

    @property
    def root(self) -> int:
        return 0

    def children(self, v: int) -> tuple:
        return self._children[v]

    def parent(self, v: int) -> Optional[int]:
        p = self._parent[v]
        return None if p < 0 else p

    def degree(self, v: int) -> int:
        return len(self._children[v])

    def is_leaf(self, v: int) -> bool:
        return not self._children[v]

    def label(self, v: int) -> Optional[str]:
        return self._labels.get(v)

    def node(self, v: int) -> NodeRecord:
        if not (0 <= v < self.n):
            raise IndexError(f"no node {v}")
        return NodeRecord(v, self.parent(v), self._children[v], self._labels.get(v))

    def preorder(self) -> range:
        return range(self.n)

    def bottom_up(self) -> Iterable[int]:
        """Node ids in an order where every child precedes its parent."""
        return reversed(range(self.n))

    def __eq__(self, other):
        # Structural equality; labels are presentation only.
        if not isinstance(other, Tree):
            return NotImplemented
        return self._children == other._children

    def __hash__(self):
        return hash(self._children)

    def __repr__(self):
        return f"Tree(n={self.n}, {serialize_tree(self)!r})"


def parse_tree(text: str) -> Tree:
    """Parse canonical parenthesis text into a Tree.

    Grammar: ``node := label? '(' node* ')'`` where a label is a maximal
    run of non-parenthesis, non-whitespace characters placed immediately
    before its '('.  Whitespace between nodes is ignored.

    Raises
    ------
    ParseError
        On empty input, unbalanced parentheses, or trailing garbage,
        with the character offset of the problem.
    """
    children: list[list[int]] = []
    labels: dict[int, str] = {}
    stack: list[int] = []
    i = 0
    end = len(text)
    root_closed = False
    while i < end:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if root_closed:
            raise ParseError("trailing garbage after tree", i)
        if ch == ")":
            if not stack:
                raise ParseError("unbalanced ')'", i)
            stack.pop()
            if not stack:
                root_closed = True
            i += 1
            continue
        label = None
        if ch != "(":
            j = i
            while j < end and text[j] not in "()" and not text[j].isspace():
                j += 1
            label = text[i:j]
            if j >= end or text[j] != "(":
                raise ParseError("expected '(' after label", j)
            i = j
        nid = len(children)
        children.append([])
        if label is not None:
            labels[nid] = label
        if stack:
            children[stack[-1]].append(nid)
        stack.append(nid)
        i += 1
    if stack:
        raise ParseError("unbalanced '(': input ended with open nodes", end)
    if not children:
        raise ParseError("empty input", 0)
    return Tree(children, labels)


def serialize_tree(t: Tree) -> str:
    """Canonical label-free parenthesis form; inverse of parse_tree on structures."""
    out = []
    stack = [(t.root, False)]
    while stack:
        v, closing = stack.pop()
        if closing:
            out.append(")")
            continue
        out.append("(")
        stack.append((v, True))
        for c in reversed(t.children(v)):
            stack.append((c, False))
    return "".join(out)


def tree_to_json(t: Tree) -> dict:
    nodes = []
    for v in range(t.n):
        rec: dict = {"id": v, "children": list(t.children(v))}
        lab = t.label(v)
        if lab is not None:
            rec["label"] = lab
        nodes.append(rec)
    return {"root": t.root, "nodes": nodes}


def tree_from_json(obj) -> Tree:
    """Build a Tree from {"root": id, "nodes": [{"id", "children", "label"?}]}.

    Node ids may be arbitrary integers; the result is renumbered to
    canonical preorder ids.  Structural problems (duplicate ids, several
    parents, unreachable nodes) raise ParseError.
    """
    if not isinstance(obj, dict) or "root" not in obj or "nodes" not in obj:
        raise ParseError("tree JSON must have 'root' and 'nodes'", 0)
    raw = obj["nodes"]
    if not isinstance(raw, list) or not raw:
        raise ParseError("'nodes' must be a non-empty list", 0)
    kids = {}
    labels_raw = {}
    for rec in raw:
        if not isinstance(rec, dict) or "id" not in rec:
            raise ParseError("each node needs an 'id'", 0)
        nid = rec["id"]
        if not isinstance(nid, int) or isinstance(nid, bool):
            raise ParseError(f"node id {nid!r} is not an integer", 0)
        if nid in kids:
            raise ParseError(f"duplicate node id {nid}", 0)
        cs = rec.get("children", [])
        if not isinstance(cs, list):
            raise ParseError(f"children of {nid} must be a list", 0)
        kids[nid] = cs
        if "label" in rec and rec["label"] is not None:
            labels_raw[nid] = str(rec["label"])
    root = obj["root"]
    if root not in kids:
        raise ParseError(f"root {root!r} is not among the nodes", 0)
    seen_child = set()
    for v, cs in kids.items():
        for c in cs:
            if c not in kids:
                raise ParseError(f"unknown child id {c} under {v}", 0)
            if c in seen_child or c == root:
                raise ParseError(f"node {c} has more than one parent", 0)
            seen_child.add(c)
    # Renumber in preorder.
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(kids[v]))
    if len(order) != len(kids):
        raise ParseError("tree JSON is not connected", 0)
    newid = {v: i for i, v in enumerate(order)}
    children = [[newid[c] for c in kids[v]] for v in order]
    labels = {newid[v]: s for v, s in labels_raw.items()}
    return Tree(children, labels)


def gen_path(k: int) -> Tree:
    """Rooted path of k nodes."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Tree([[v + 1] if v + 1 < k else [] for v in range(k)])


def gen_complete_binary(h: int) -> Tree:
    """Complete binary tree of height h (a single node has height 1); n = 2^h - 1."""
    if h < 1:
        raise ValueError("h must be >= 1")
    n = 2**h - 1
    children: list = [()] * n
    stack = [(0, h)]
    while stack:
        v, ht = stack.pop()
        if ht == 1:
            continue
        # Left subtree occupies the next 2^(ht-1)-1 preorder slots.
        left = v + 1
        right = v + 2 ** (ht - 1)
        children[v] = (left, right)
        stack.append((left, ht - 1))
        stack.append((right, ht - 1))
    return Tree(children)


def _quintary_sizes(i: int) -> list:
    # s(1) = 1, s(i) = 6*s(i-1) + 2: six copies of the previous level
    # (four direct children plus two under the middle child) plus two nodes.
    sizes = [0, 1]
    for _ in range(2, i + 1):
        sizes.append(6 * sizes[-1] + 2)
    return sizes


def gen_quintary_family(i: int) -> Tree:
    """Level-i member of the degree-5 family.

    T_1 is a single node; T_i has five children
    [T_{i-1}, T_{i-1}, X, T_{i-1}, T_{i-1}] where X itself has two
    T_{i-1} children.  Sizes follow |T_i| = 6|T_{i-1}| + 2.
    """
    if not (1 <= i <= 12):
        raise ValueError("i must be in 1..12")
    sizes = _quintary_sizes(i)
    n = sizes[i]
    children: list = [()] * n
    stack = [(0, i)]
    while stack:
        v, lev = stack.pop()
        if lev == 1:
            continue
        s = sizes[lev - 1]
        c1 = v + 1
        c2 = c1 + s
        x = c2 + s
        x1 = x + 1
        x2 = x1 + s
        c4 = x + 1 + 2 * s
        c5 = c4 + s
        children[v] = (c1, c2, x, c4, c5)
        children[x] = (x1, x2)
        for w in (c1, c2, x1, x2, c4, c5):
            stack.append((w, lev - 1))
    return Tree(children)


def gen_hpd_family(i: int) -> Tree:
    """Level-i member of the long-right-path family.

    T_1 is a single node; T_i has a left subtree T_{i-1} and a right
    subtree that is a rooted path of |T_{i-1}| + 1 nodes, so
    |T_i| = 2|T_{i-1}| + 2 = (3/2)*2^i - 2.
    """
    if not (1 <= i <= 20):
        raise ValueError("i must be in 1..20")
    sizes = [0, 1]
    for _ in range(2, i + 1):
        sizes.append(2 * sizes[-1] + 2)
    n = sizes[i]
    children: list = [()] * n
    stack = [(0, i)]
    while stack:
        v, lev = stack.pop()
        if lev == 1:
            continue
        s = sizes[lev - 1]
        left = v + 1
        p0 = v + 1 + s
        children[v] = (left, p0)
        # Right subtree: a rooted path of s+1 nodes, p0 .. p0+s.
        for q in range(p0, p0 + s):
            children[q] = (q + 1,)
        stack.append((left, lev - 1))
    return Tree(children)


_REJECTION_ATTEMPTS = 10000


def gen_random_tree(n: int, seed: int, max_degree: Optional[int] = None) -> Tree:
    """Uniformly random ordered rooted tree with n nodes.

    Uses the cycle-lemma construction: shuffle n up-steps and n-1
    down-steps, rotate to the unique cyclic shift with all prefix sums
    positive, drop the leading up-step; the remainder is a uniform
    random balanced-parenthesis word.  Deterministic per (n, seed,
    max_degree).  With max_degree set, rejection-samples up to a bounded
    number of attempts.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    attempts = _REJECTION_ATTEMPTS if max_degree is not None else 1
    for _ in range(attempts):
        t = _random_tree_once(n, rng)
        if max_degree is None or max(len(t.children(v)) for v in range(n)) <= max_degree:
            return t
    raise ValueError(
        f"could not generate a tree with n={n}, max_degree={max_degree} "
        f"after {attempts} attempts"
    )


def _random_tree_once(n: int, rng) -> Tree:
    if n == 1:
        return Tree([[]])
    m = n - 1
    steps = [1] * (m + 1) + [-1] * m
    rng.shuffle(steps)
    # Cut just after the last minimum of the prefix sums; the rotation
    # starting there has all prefix sums positive (cycle lemma).
    total = 0
    best = 1  # sums start at 0, first prefix is at most 1, so any real min wins
    cut = 0
    for k, step in enumerate(steps):
        total += step
        if total <= best:
            best = total
            cut = k + 1
    word = steps[cut:] + steps[:cut]
    # word[0] is an up-step for the root; the rest walks the tree.
    children: list[list[int]] = [[]]
    stack = [0]
    for step in word[1:]:
        if step == 1:
            nid = len(children)
            children.append([])
            children[stack[-1]].append(nid)
            stack.append(nid)
        else:
            stack.pop()
    return Tree(children)
