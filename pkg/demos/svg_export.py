"""Write SVG drawings for a few trees into demos/out/.

Run:  python3 demos/svg_export.py
"""

from pathlib import Path

from uptree import draw_ordered, draw_unordered, gen_quintary_family, parse_tree
from uptree.render import render_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

jobs = {
    "example_unordered.svg": draw_unordered(parse_tree("(()()(()()))")),
    "example_ordered.svg": draw_ordered(parse_tree("(()()(()()))")),
    "quintary2_unordered.svg": draw_unordered(gen_quintary_family(2)),
    "quintary2_ordered.svg": draw_ordered(gen_quintary_family(2)),
}

for name, d in jobs.items():
    path = out / name
    path.write_text(render_svg(d))
    print(f"wrote {path}")
