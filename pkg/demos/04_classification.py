#!/usr/bin/env python3
"""Classifying unmixed structure, with certificates that rebuild the input.

Run:  python3 demos/04_classification.py
"""

from polymat import (
    classify_unmixed_polymatroidal,
    emit_report,
    height_bounds_report,
    hypergraph_profile,
    is_cohen_macaulay,
    is_connected_in_codim_one,
    parse_ideal,
    reconstruct,
)

EXAMPLES = {
    "power of the full ideal": ("x1^2, x1*x2, x2^2", 2),
    "disjoint prime powers": (
        "x1^2*x3, x1^2*x4, x2^2*x3, x2^2*x4, x1*x2*x3, x1*x2*x4", 4
    ),
    "prime power times squarefree factor": (
        "x1^2*x3*x4, x1^2*x3*x5, x1^2*x4*x5, x2^2*x3*x4, x2^2*x3*x5, "
        "x2^2*x4*x5, x1*x2*x3*x4, x1*x2*x3*x5, x1*x2*x4*x5", 5
    ),
    "squarefree with overlapping primes": (
        "x1*x3, x1*x4, x1*x5, x1*x6, x2*x3, x2*x4, x2*x5, x2*x6, "
        "x3*x5, x3*x6, x4*x5, x4*x6", 6
    ),
    "mixed input": ("x1^2, x1*x2", 2),
}

for label, (text, ambient) in EXAMPLES.items():
    ideal = parse_ideal(text, ambient)
    outcome = classify_unmixed_polymatroidal(ideal)
    print(f"=== {label} ===")
    print(emit_report(outcome, "human", ideal=ideal))
    rebuilt = reconstruct(outcome, ideal.ambient)
    if rebuilt is not None:
        assert rebuilt == ideal
    print()

# An unmixed squarefree ideal that is NOT a complete multipartite edge ideal:
# (x1,x2) times a triangle. Its blocks are unbalanced and its profile is
# incomplete, yet every associated prime has height 2. Unmixedness does not
# force the complete balanced shape.
surprise = parse_ideal(
    "x1*x3*x4, x1*x3*x5, x1*x4*x5, x2*x3*x4, x2*x3*x5, x2*x4*x5", 5
)
print("=== unmixed but not complete multipartite ===")
profile = hypergraph_profile(surprise)
print("blocks:", [sorted(b) for b in profile.blocks.blocks],
      "complete:", profile.complete, "balanced:", profile.balanced)
print(emit_report(classify_unmixed_polymatroidal(surprise), "human", ideal=surprise))
print()

# Cohen-Macaulay shape test and connectivity in codimension one agree on
# unmixed inputs.
for label, (text, ambient) in [
    ("triangle", ("x1*x2, x1*x3, x2*x3", 3)),
    ("disjoint prime powers", EXAMPLES["disjoint prime powers"]),
]:
    ideal = parse_ideal(text, ambient)
    print(f"{label}: cm={is_cohen_macaulay(ideal)} "
          f"codim1-connected={is_connected_in_codim_one(ideal)}")

# Height bounds for unmixed squarefree inputs, with equality tags.
edges = parse_ideal(
    "x1*x3*x5, x1*x3*x6, x1*x4*x5, x1*x4*x6, "
    "x2*x3*x5, x2*x3*x6, x2*x4*x5, x2*x4*x6", 6
)
print("\ntripartite height bounds:", emit_report(height_bounds_report(edges), "human"))
