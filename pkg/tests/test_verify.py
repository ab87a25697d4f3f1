"""check_drawing against the exact pairwise oracle, plus mutations,
hand-built pathological drawings, reordering, and witness extraction."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomcheck import check as pairwise
from uptree.layout import (
    Drawing,
    draw_ordered,
    draw_unordered,
    layout_stats,
    reduce_bends,
)
from uptree.rank import rank, validate_rank_witness
from uptree.tree import (
    gen_complete_binary,
    gen_path,
    gen_quintary_family,
    gen_random_tree,
    parse_tree,
)
from uptree.verify import (
    DrawingMismatch,
    check_drawing,
    extract_rank_witness,
    reorder_children_by_drawing,
)

EXAMPLE = "(()()(()()))"


def bin_s(h):
    return "()" if h == 1 else "(" + bin_s(h - 1) * 2 + ")"


def with_ranks(rs):
    return parse_tree("(" + "".join(bin_s(r) for r in rs) + ")")


def clone(d):
    return Drawing(mode=d.mode, pos=dict(d.pos),
                   edges={k: [tuple(p) for p in v] for k, v in d.edges.items()})


FIXED = [
    "()", "(())", "(()())", EXAMPLE,
    "((" + bin_s(3) + "())())",
    "(()((" + bin_s(4) + "())" + bin_s(2) + "))",
]


def tree_pool():
    pool = [parse_tree(s) for s in FIXED]
    pool += [gen_path(5), gen_complete_binary(3), gen_quintary_family(2),
             with_ranks([2, 3]), with_ranks([1, 1, 3]), with_ranks([1, 4, 1, 2])]
    for seed in range(12):
        pool.append(gen_random_tree(random.Random(seed).randint(2, 30), seed=seed))
    return pool


# ----------------------------------------------- agreement with the oracle


@pytest.mark.parametrize("mode", ["unordered", "ordered3", "ordered1"])
def test_agrees_with_pairwise_oracle(mode):
    for t in tree_pool():
        if mode == "unordered":
            d = draw_unordered(t)
        elif mode == "ordered3":
            d = draw_ordered(t)
        else:
            d = reduce_bends(draw_ordered(t), t)
        rep = check_drawing(t, d, require=("planar", "upward", "strictly_upward"))
        assert rep.ok, (t.n, mode, rep.violations[:4])
        assert pairwise(t, d, ordered=mode != "unordered") == []
        if mode != "unordered":
            assert rep.order_preserving
        else:
            assert rep.straight_line
        s = layout_stats(d)
        assert (s.width, s.height, s.max_bends_per_edge) == (
            rep.width, rep.height, rep.max_bends)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(2, 30), seed=st.integers(0, 10**6),
       mode=st.sampled_from(["unordered", "ordered3", "ordered1"]))
def test_constructions_verify_clean(n, seed, mode):
    t = gen_random_tree(n, seed=seed)
    if mode == "unordered":
        d = draw_unordered(t)
    elif mode == "ordered3":
        d = draw_ordered(t)
    else:
        d = reduce_bends(draw_ordered(t), t)
    rep = check_drawing(
        t, d, require=("planar", "upward", "strictly_upward"))
    assert rep.ok, rep.violations[:4]


# ----------------------------------------------------------- mutations


@pytest.fixture
def example_drawing():
    t = parse_tree(EXAMPLE)
    return t, draw_ordered(t)


def test_node_on_node(example_drawing):
    t, base = example_drawing
    m = clone(base)
    victim, other = t.children(t.root)[:2]
    m.pos[victim] = m.pos[other]
    m.edges[(t.root, victim)] = [m.edges[(t.root, victim)][0], m.pos[other]]
    rep = check_drawing(t, m, require=("planar",))
    assert not rep.ok and not rep.planar
    assert pairwise(t, m, ordered=False) != []


def test_climbing_edge_not_upward(example_drawing):
    t, base = example_drawing
    m = clone(base)
    c0 = t.children(t.root)[0]
    m.edges[(t.root, c0)] = [m.edges[(t.root, c0)][0],
                             (m.pos[c0][0], m.pos[c0][1] + 20), m.pos[c0]]
    rep = check_drawing(t, m, require=("upward",))
    assert not rep.upward and not rep.strictly_upward and not rep.ok


def test_sibling_swap_breaks_order(example_drawing):
    t, base = example_drawing
    m = clone(base)
    a, b = t.children(t.root)[:2]
    m.pos[a], m.pos[b] = m.pos[b], m.pos[a]
    m.edges[(t.root, a)] = [m.edges[(t.root, a)][0], m.pos[a]]
    m.edges[(t.root, b)] = [m.edges[(t.root, b)][0], m.pos[b]]
    rep = check_drawing(t, m, require=("order_preserving",))
    assert not rep.order_preserving and not rep.ok


def test_collinear_overlap(example_drawing):
    t, base = example_drawing
    m = clone(base)
    c0, c1 = t.children(t.root)[:2]
    rootp = m.pos[t.root]
    m.edges[(t.root, c0)] = [rootp, m.pos[c1],
                             (m.pos[c1][0], m.pos[c1][1] - 1), m.pos[c0]]
    rep = check_drawing(t, m, require=("planar",))
    assert not rep.planar
    assert pairwise(t, m, ordered=False) != []


def test_missing_node_raises(example_drawing):
    t, base = example_drawing
    m = clone(base)
    del m.pos[t.n - 1]
    with pytest.raises(DrawingMismatch):
        check_drawing(t, m)


def test_wrong_endpoint_raises(example_drawing):
    t, base = example_drawing
    m = clone(base)
    c0 = t.children(t.root)[0]
    pts = m.edges[(t.root, c0)]
    m.edges[(t.root, c0)] = pts[:-1] + [(pts[-1][0] + 1, pts[-1][1])]
    with pytest.raises(DrawingMismatch):
        check_drawing(t, m)


def test_unknown_require_name_rejected(example_drawing):
    t, base = example_drawing
    with pytest.raises(ValueError):
        check_drawing(t, base, require=("planar", "acyclic"))


# ------------------------------------------- hand-built corner geometries

P3 = gen_path(3)


def p3_drawing(pos, edges):
    return Drawing(mode="ordered3", pos=pos, edges=edges)


def test_straight_vertical_path_chains_legally():
    d = p3_drawing({0: (1, 5), 1: (1, 3), 2: (1, 1)},
                   {(0, 1): [(1, 5), (1, 3)], (1, 2): [(1, 3), (1, 1)]})
    rep = check_drawing(P3, d, require=("planar", "strictly_upward"))
    assert rep.ok, rep.violations


def test_zigzag_through_shared_column():
    d = p3_drawing({0: (1, 5), 1: (1, 3), 2: (1, 1)},
                   {(0, 1): [(1, 5), (2, 4), (1, 3)],
                    (1, 2): [(1, 3), (2, 2), (1, 1)]})
    assert check_drawing(P3, d, require=("planar",)).planar


def test_bend_vertically_above_child():
    d = p3_drawing({0: (1, 5), 1: (2, 2), 2: (1, 1)},
                   {(0, 1): [(1, 5), (1, 2), (2, 2)],
                    (1, 2): [(2, 2), (1, 1)]})
    assert check_drawing(P3, d, require=("planar",)).planar


def test_climbing_polyline_planar_but_not_upward():
    d = p3_drawing({0: (1, 5), 1: (1, 2), 2: (1, 1)},
                   {(0, 1): [(1, 5), (1, 2)],
                    (1, 2): [(1, 2), (3, 4), (1, 1)]})
    rep = check_drawing(P3, d, require=("planar", "upward"))
    assert rep.planar and not rep.upward


def test_polyline_crosses_vertical():
    d = p3_drawing({0: (1, 5), 1: (1, 2), 2: (1, 1)},
                   {(0, 1): [(1, 5), (1, 2)],
                    (1, 2): [(1, 2), (0, 3), (2, 4), (1, 1)]})
    rep = check_drawing(P3, d, require=("planar",))
    assert not rep.planar
    assert pairwise(P3, d, ordered=False) != []


def test_straight_line_crossing_at_rational_point():
    tx = parse_tree("(()(()))")
    dx = Drawing(mode="unordered",
                 pos={0: (2, 5), 1: (1, 1), 2: (3, 3), 3: (1, 2)},
                 edges={(0, 1): [(2, 5), (1, 1)],
                        (0, 2): [(2, 5), (3, 3)],
                        (2, 3): [(3, 3), (1, 2)]})
    rep = check_drawing(tx, dx, require=("planar",))
    assert not rep.planar
    assert any("crosses" in v for v in rep.violations)
    assert pairwise(tx, dx, ordered=False) != []


def test_edge_through_foreign_node():
    t = parse_tree("(()())")
    d = Drawing(mode="unordered",
                pos={0: (2, 5), 1: (1, 1), 2: (3, 3)},
                edges={(0, 1): [(2, 5), (4, 4), (1, 1)],
                       (0, 2): [(2, 5), (3, 3)]})
    # segment (4,4)->(1,1) passes straight through node 2 at (3,3)
    rep = check_drawing(t, d, require=("planar",))
    assert not rep.planar
    assert pairwise(t, d, ordered=False) != []


# -------------------------------------------------- reorder + extraction


def subtree_sizes(t):
    size = [1] * t.n
    for v in t.bottom_up():
        for c in t.children(v):
            size[v] += size[c]
    return size


def test_reorder_matches_drawing_order():
    t = gen_quintary_family(2)
    d = draw_unordered(t)
    t2, d2 = reorder_children_by_drawing(t, d)
    rep = check_drawing(t2, d2, require=("planar", "strictly_upward",
                                         "order_preserving"))
    assert rep.ok, rep.violations[:4]
    assert t2.n == t.n
    # same multiset of root-subtree sizes, possibly permuted
    s1, s2 = subtree_sizes(t), subtree_sizes(t2)
    assert sorted(s2[c] for c in t2.children(t2.root)) == \
        sorted(s1[c] for c in t.children(t.root))


def test_extracted_witness_validates_everywhere():
    for t in tree_pool():
        if t.n < 2:
            continue
        rk = rank(t)
        ranks = [rk.rank[c] for c in t.children(t.root)]
        d = draw_ordered(t)
        w = extract_rank_witness(t, d)
        assert w is not None, t.n
        assert w.W == rk.root_rank()
        assert validate_rank_witness(ranks, w) == []
        d1 = reduce_bends(d, t)
        w1 = extract_rank_witness(t, d1)
        assert w1 is not None and w1.W == rk.root_rank()


def test_extraction_after_reorder():
    for t in tree_pool():
        if t.n < 2:
            continue
        t2, d2 = reorder_children_by_drawing(t, draw_unordered(t))
        w = extract_rank_witness(t2, d2)
        assert w is not None, t.n
        ranks = [rank(t2).rank[c] for c in t2.children(t2.root)]
        assert validate_rank_witness(ranks, w) == []


def test_extraction_frozen_value():
    t = with_ranks([1, 3, 1])
    w = extract_rank_witness(t, draw_ordered(t))
    assert w is not None
    assert (w.W, w.X, w.v) == (3, 1, 1)
    assert w.big == frozenset({1, 2})
    assert w.rank_bounds == {1: 2, 2: 3}


def test_extraction_single_node_is_none():
    t = parse_tree("()")
    assert extract_rank_witness(t, draw_unordered(t)) is None


def test_extraction_refuses_broken_drawing(example_drawing):
    t, base = example_drawing
    m = clone(base)
    victim, other = t.children(t.root)[:2]
    m.pos[victim] = m.pos[other]
    m.edges[(t.root, victim)] = [m.edges[(t.root, victim)][0], m.pos[other]]
    assert extract_rank_witness(t, m) is None
