#!/usr/bin/env python3
"""Structured families: capped-degree ideals, multipartite edge ideals,
prime-power products, and the exchange condition that unites them.

Run:  python3 demos/03_structured_families.py
"""

from polymat import (
    Monomial,
    VariablePrime,
    VeroneseTypeSpec,
    colon,
    colon_equivalence_blocks,
    construct_multipartite_edge_ideal,
    construct_prime_power_product,
    construct_veronese_type,
    is_matroidal,
    is_polymatroidal,
    parse_ideal,
    support,
)
from polymat.polymatroid import BlockPartition

# Capped-degree family: degree-2 monomials with exponent caps (2, 1, 1).
capped = construct_veronese_type(VeroneseTypeSpec(2, (2, 1, 1)), 3)
print("degree 2, caps (2,1,1):", capped)
print("exchange condition holds:", is_polymatroidal(capped))

# All caps equal to the degree removes the constraint entirely.
full_cube = construct_veronese_type(VeroneseTypeSpec(3, (3, 3, 3)), 3)
print("\ndegree 3, caps (3,3,3): all", len(full_cube.generators),
      "degree-3 monomials")

# Complete multipartite edge ideal: pick d distinct blocks, one variable each.
blocks = BlockPartition((frozenset({1, 2}), frozenset({3, 4}), frozenset({5, 6})))
edges = construct_multipartite_edge_ideal(blocks, 3)
print("\ncomplete 3-uniform tripartite, blocks of two:", edges)
print("squarefree with exchange:", is_matroidal(edges))

# The block partition is recoverable from colon equality: x and y share a
# block exactly when (I : x) = (I : y), equivalently x*y divides no generator.
recovered = colon_equivalence_blocks(edges)
print("blocks recovered from colons:", [sorted(b) for b in recovered.blocks])
x1, x2, x3 = (Monomial.variable(i, 6) for i in (1, 2, 3))
print("(I:x1) == (I:x2):", colon(edges, x1) == colon(edges, x2))
print("(I:x1) == (I:x3):", colon(edges, x1) == colon(edges, x3))
print("support of (I:x1):", sorted(support(colon(edges, x1))))

# Prime-power products with disjoint supports, optionally times a squarefree
# factor on the remaining variables.
triangle = parse_ideal("x3*x4, x3*x5, x4*x5", 5)
product = construct_prime_power_product(
    [(VariablePrime.of(1, 2), 2)], triangle, 5
)
print("\n(x1,x2)^2 times a triangle:", product)
print("exchange condition holds:", is_polymatroidal(product))
