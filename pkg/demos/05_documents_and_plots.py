"""Walkthrough: rule-base documents and SVG rendering.

Rule bases live in a small JSON format (see fixtures/ for the nine shipped
examples). Arrays may hold 1, 3 or 4 numbers: singleton, triangle or
trapezoid.

Run from the repository root:  python demos/05_documents_and_plots.py
"""
from pathlib import Path

from fri_lab import (
    GradedPointList,
    kh_characteristic_points,
    load_document,
    render_interpolation_svg,
    save_document,
    select_flanking,
    to_rulebase,
)

text = """
{
  "version": "1",
  "dimension": 1,
  "metadata": {"name": "demo base"},
  "rules": [
    {"antecedents": [[1, 2, 3]], "consequent": [2]},
    {"antecedents": [[7, 8, 9]], "consequent": [8]}
  ],
  "observation": [[4, 5, 5, 6]]
}
"""

doc = load_document(text)
print("loaded:", doc.metadata["name"], "with", len(doc.rules), "rules")
print("triangle antecedent canonicalised to:", doc.rules[0].antecedents[0].points())

# Saving reproduces the arities the file was written with.
print("round-tripped text:")
print(save_document(doc).decode())

rulebase, observation = to_rulebase(doc)
lower, upper = select_flanking(rulebase, observation)
points = kh_characteristic_points(lower, upper, observation)
print("conclusion points:", points.as_tuple())

# Render the configuration; the conclusion polyline is drawn from the raw
# points, so an abnormal conclusion shows up as a polyline doubling back.
y = points.as_tuple()
graded = GradedPointList(((y[0], 0.0), (y[1], 1.0), (y[2], 1.0), (y[3], 0.0)))
svg = render_interpolation_svg(lower, upper, observation, graded)
out = Path("demo_interpolation.svg")
out.write_text(svg)
print(f"wrote {out} ({len(svg)} bytes)")
