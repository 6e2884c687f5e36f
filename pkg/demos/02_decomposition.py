#!/usr/bin/env python3
"""Primary decomposition: irreducible components, associated primes, oracles.

Run:  python3 demos/02_decomposition.py
"""

from polymat import (
    associated_primes,
    brute_force_ass,
    emit_report,
    height,
    irreducible_decomposition,
    is_unmixed,
    parse_ideal,
    prime_power_decomposition,
)

# A small mixed ideal: x1 * (x1, x2).
mixed = parse_ideal("x1^2, x1*x2", 2)
print("ideal:", mixed)
print("irreducible components:")
print(emit_report(irreducible_decomposition(mixed), "human"))
print("associated primes:", sorted(str(p) for p in associated_primes(mixed)))
print("height:", height(mixed), " unmixed:", is_unmixed(mixed))

# The brute-force oracle scans all divisors of the generator lcm and collects
# the colon ideals that are variable primes. Same answer, different path.
print("oracle agrees:", brute_force_ass(mixed) == associated_primes(mixed))

# An unmixed product decomposes into prime powers that rebuild it exactly.
square_times_prime = parse_ideal(
    "x1^2*x3, x1^2*x4, x2^2*x3, x2^2*x4, x1*x2*x3, x1*x2*x4", 4
)
print("\nideal:", square_times_prime)
decomposition = prime_power_decomposition(square_times_prime)
print("prime power form:")
print(emit_report(decomposition, "human"))
print("exact reconstruction:",
      decomposition.intersection_ideal(4) == square_times_prime)

# Degree-4 example with a squarefree residual part: (x1,x2)^2 * triangle.
square_times_triangle = parse_ideal(
    "x1^2*x3*x4, x1^2*x3*x5, x1^2*x4*x5, x2^2*x3*x4, x2^2*x3*x5, x2^2*x4*x5, "
    "x1*x2*x3*x4, x1*x2*x3*x5, x1*x2*x4*x5",
    5,
)
print("\nideal:", square_times_triangle)
print("associated primes:",
      sorted(str(p) for p in associated_primes(square_times_triangle)))
print("prime power form:")
print(emit_report(prime_power_decomposition(square_times_triangle), "human"))
