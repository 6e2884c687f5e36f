#!/usr/bin/env python3
"""Tour of the core arithmetic: normal forms, colon, product, intersection.

Run:  python3 demos/01_ideal_arithmetic.py
"""

from polymat import (
    Monomial,
    colon,
    equigenerated_degree,
    intersect,
    minimalize,
    multiply,
    parse_ideal,
    support,
)

# Ideals parse from a small text grammar; construction always reduces to the
# unique minimal generating set in a deterministic order.
ideal = parse_ideal("x1, x1*x2, x2^2", 2)
print("minimal generators of (x1, x1*x2, x2^2):", ideal)

# The same ideal given by redundant generators lands on the same value.
same = parse_ideal("x1, x1^3*x2, x2^2, x2^3", 2)
print("same ideal from redundant input:", same == ideal)

# The running example used throughout: (x1,x2)^2 * (x3,x4) on four variables.
square_times_prime = parse_ideal(
    "x1^2*x3, x1^2*x4, x2^2*x3, x2^2*x4, x1*x2*x3, x1*x2*x4", 4
)
print("\nsix-generator product ideal:", square_times_prime)
print("generation degree:", equigenerated_degree(square_times_prime))
print("support:", sorted(support(square_times_prime)))

# Colon by x3 strips the (x3,x4) factor, leaving (x1,x2)^2.
x3 = Monomial.variable(3, 4)
print("\ncolon by x3:", colon(square_times_prime, x3))

# The product and intersection routes agree on this ideal.
p_squared = parse_ideal("x1^2, x1*x2, x2^2", 4)
q = parse_ideal("x3, x4", 4)
print("product route:     ", multiply(p_squared, q) == square_times_prime)
print("intersection route:", intersect(p_squared, q) == square_times_prime)

# Colon is adjoint to multiplication: v lies in (I : u) iff v*u lies in I.
u = Monomial.from_powers({1: 1, 3: 1}, 4)
v = Monomial.from_powers({2: 1}, 4)
print("\nadjunction check for u = x1*x3, v = x2:")
print("  v in (I : u):", colon(square_times_prime, u).contains(v))
print("  v*u in I:    ", square_times_prime.contains(v.times(u)))
