"""One tree, three drawings: unordered, ordered (<=3 bends), 1-bend.

Run:  python3 demos/drawing_gallery.py
"""

from uptree import (
    check_drawing,
    draw_ordered,
    draw_unordered,
    layout_stats,
    parse_tree,
    reduce_bends,
    serialize_tree,
)
from uptree.render import render_ascii

t = parse_tree("(()()(()()))")
print("tree:", serialize_tree(t))

drawings = [
    ("unordered (width = rpw, straight lines)", draw_unordered(t)),
    ("ordered (width = rank, <= 3 bends)", draw_ordered(t)),
    ("ordered, 1 bend", reduce_bends(draw_ordered(t), t)),
]

for title, d in drawings:
    s = layout_stats(d)
    rep = check_drawing(t, d)
    print()
    print(f"--- {title}")
    print(f"    width {s.width}, height {s.height}, "
          f"max bends {s.max_bends_per_edge}, planar: {rep.planar}")
    print(render_ascii(d))
