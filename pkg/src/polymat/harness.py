"""Exhaustive enumeration and seeded sampling harnesses.

These turn the structural claims implemented in `classify` into falsifiable
desk-scale experiments: enumerate every squarefree exchange-closed ideal in a
small window and check a claimed equivalence on each, or draw seeded random
ideals from a grammar of closed constructions and check certificates and
round trips. Counterexamples are collected, never swallowed: an empty
counterexample list is exactly the statement that the claim held on the
universe scanned.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, product as iter_product
from typing import Iterator, Optional

from .classify import (
    NotUnmixed,
    classify_unmixed_polymatroidal,
    hypergraph_profile,
    reconstruct,
)
from .config import default_budget
from .decomposition import associated_primes, brute_force_ass, is_unmixed
from .errors import BudgetExceeded, ClassificationIncomplete, VerificationFailed
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariablePrime,
    colon,
    equigenerated_degree,
    multiply,
    restrict_to_support,
)
from .polymatroid import (
    VeroneseTypeSpec,
    construct_prime_power_product,
    construct_veronese_type,
    is_polymatroidal,
)

__all__ = [
    "EnumerationSpec",
    "VerificationReport",
    "enumerate_matroidal",
    "verify_unmixed_profile_equivalence",
    "verify_classification_cases",
    "verify_closure_properties",
    "cross_check_ass",
    "sample_polymatroidal",
    "reference_cases",
]


@dataclass(frozen=True, slots=True)
class EnumerationSpec:
    """Window for the exhaustive scan over degree-d generator sets on n variables."""

    ambient: int
    degree: int
    fully_supported: bool = False
    cap: Optional[int] = None


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Outcome of one verification run.

    `params` echoes the run parameters (including any seed) as sorted pairs;
    `counterexamples` pairs each offending ideal with a tag naming the claim
    it violates. The report is empty of counterexamples exactly when the
    targeted claim held everywhere it was checked.
    """

    target: str
    params: tuple[tuple[str, object], ...]
    universe_size: int
    matroidal_count: int
    unmixed_count: int
    counterexamples: tuple[tuple[MonomialIdeal, str], ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _params(**kwargs) -> tuple[tuple[str, object], ...]:
    return tuple(sorted(kwargs.items()))


def enumerate_matroidal(spec: EnumerationSpec) -> Iterator[MonomialIdeal]:
    """Every squarefree exchange-closed ideal generated in one degree.

    Scans all nonempty collections of degree-d squarefree monomials on the
    ambient variables, in ascending bitmask order over the candidate list
    (itself in lexicographic order), keeping exactly the collections that
    satisfy the exchange condition. Distinct equal-degree squarefree sets are
    automatically minimal generating sets, so each emitted ideal is distinct.

    The exchange test runs on precomputed per-pair witness bitmasks with an
    early exit on the first violating pair.
    """
    n, d = spec.ambient, spec.degree
    if d < 1 or d > n:
        return
    candidates = list(combinations(range(n), d))
    count = len(candidates)
    budget = spec.cap if spec.cap is not None else default_budget()
    if (1 << count) - 1 > budget:
        raise BudgetExceeded(
            f"{(1 << count) - 1} candidate sets exceed the budget of {budget}"
        )
    index_of = {c: k for k, c in enumerate(candidates)}
    var_mask = [sum(1 << v for v in c) for c in candidates]
    full_mask = (1 << n) - 1

    # witnesses[a][b]: for each variable in u_a missing from u_b, a bitmask of
    # candidate indices that repair the exchange u_a -> u_b at that variable.
    witnesses: list[list[tuple[int, ...]]] = [[()] * count for _ in range(count)]
    for a, ua in enumerate(candidates):
        sa = set(ua)
        for b, ub in enumerate(candidates):
            if a == b:
                continue
            sb = set(ub)
            per_variable = []
            for i in sa - sb:
                mask = 0
                for j in sb - sa:
                    mask |= 1 << index_of[tuple(sorted((sa - {i}) | {j}))]
                per_variable.append(mask)
            witnesses[a][b] = tuple(per_variable)

    # Split lookup tables make the support check O(1) per subset.
    lo_bits = count // 2
    lo_size = 1 << lo_bits
    supp_lo = [0] * lo_size
    for bits in range(1, lo_size):
        low = bits & -bits
        supp_lo[bits] = supp_lo[bits ^ low] | var_mask[low.bit_length() - 1]
    hi_size = 1 << (count - lo_bits)
    supp_hi = [0] * hi_size
    for bits in range(1, hi_size):
        low = bits & -bits
        supp_hi[bits] = supp_hi[bits ^ low] | var_mask[low.bit_length() - 1 + lo_bits]

    need_full = spec.fully_supported
    lo_mask = lo_size - 1
    for bits in range(1, 1 << count):
        if need_full:
            if supp_lo[bits & lo_mask] | supp_hi[bits >> lo_bits] != full_mask:
                continue
        members = []
        rest = bits
        while rest:
            low = rest & -rest
            members.append(low.bit_length() - 1)
            rest ^= low
        ok = True
        for a in members:
            row = witnesses[a]
            for b in members:
                if a == b:
                    continue
                for w in row[b]:
                    if not w & bits:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            gens = tuple(
                Monomial.from_powers({v + 1: 1 for v in candidates[k]}, n)
                for k in members
            )
            yield MonomialIdeal(n, gens)


def verify_unmixed_profile_equivalence(spec: EnumerationSpec) -> VerificationReport:
    """Sweep: unmixed if and only if the block profile is complete and balanced.

    Ideals enumerated without the full-support flag are restricted to their
    support before profiling, since the block structure is only meaningful on
    supported variables.
    """
    universe = 0
    matroidal = 0
    unmixed_count = 0
    bad: list[tuple[MonomialIdeal, str]] = []
    n, d = spec.ambient, spec.degree
    if 1 <= d <= n:
        universe = (1 << math.comb(n, d)) - 1
    for ideal in enumerate_matroidal(spec):
        matroidal += 1
        supported = ideal if ideal.is_fully_supported else restrict_to_support(ideal)
        unmixed = is_unmixed(supported)
        profile = hypergraph_profile(supported)
        if unmixed:
            unmixed_count += 1
        if unmixed != (profile.complete and profile.balanced):
            tag = (
                "unmixed-but-profile-not-complete-balanced"
                if unmixed
                else "complete-balanced-but-mixed"
            )
            bad.append((ideal, tag))
    return VerificationReport(
        target="t1",
        params=_params(
            ambient=spec.ambient,
            degree=spec.degree,
            fully_supported=spec.fully_supported,
        ),
        universe_size=universe,
        matroidal_count=matroidal,
        unmixed_count=unmixed_count,
        counterexamples=tuple(bad),
    )


def verify_classification_cases(
    ambient: int, degree: int, samples: int, seed: int
) -> VerificationReport:
    """Sample exchange-closed ideals and check the four-case classification.

    Every sampled ideal (restricted to its support) must either produce a
    mixed witness with genuinely different heights, or certify exactly one
    case whose certificate rebuilds the input exactly.
    """
    rng = random.Random(seed)
    stream = list(reference_cases())
    for _ in range(samples):
        stream.append(sample_polymatroidal(rng, ambient, degree))
    matroidal = 0
    unmixed_count = 0
    bad: list[tuple[MonomialIdeal, str]] = []
    for ideal in stream:
        supported = ideal if ideal.is_fully_supported else restrict_to_support(ideal)
        if supported.is_squarefree:
            matroidal += 1
        try:
            outcome = classify_unmixed_polymatroidal(supported)
        except ClassificationIncomplete:
            bad.append((supported, "classification-incomplete"))
            continue
        except VerificationFailed:
            bad.append((supported, "prime-power-reconstruction-failed"))
            continue
        if isinstance(outcome, NotUnmixed):
            p, q = outcome.witness
            if p.height == q.height:
                bad.append((supported, "mixed-witness-heights-equal"))
            continue
        unmixed_count += 1
        if reconstruct(outcome, supported.ambient) != supported:
            bad.append((supported, "certificate-reconstruction-differs"))
    return VerificationReport(
        target="t3",
        params=_params(ambient=ambient, degree=degree, samples=samples, seed=seed),
        universe_size=len(stream),
        matroidal_count=matroidal,
        unmixed_count=unmixed_count,
        counterexamples=tuple(bad),
    )


def verify_closure_properties(samples: int, seed: int) -> VerificationReport:
    """Products and colons of sampled ideals stay exchange-closed.

    Checks `samples` random product pairs and `samples` random colons; a
    variable colon of a degree-d ideal must be exchange-closed of degree d-1
    whenever it is proper.
    """
    rng = random.Random(seed)
    bad: list[tuple[MonomialIdeal, str]] = []
    checked = 0
    for _ in range(samples):
        n = rng.randint(2, 6)
        a = sample_polymatroidal(rng, n, rng.randint(1, 3))
        b = sample_polymatroidal(rng, n, rng.randint(1, 3))
        product = multiply(a, b)
        checked += 1
        if not is_polymatroidal(product):
            bad.append((product, "product-not-exchange-closed"))
    for _ in range(samples):
        n = rng.randint(2, 6)
        d = rng.randint(2, 4)
        a = sample_polymatroidal(rng, n, d)
        i = rng.randint(1, n)
        quotient = colon(a, Monomial.variable(i, n))
        checked += 1
        if i not in a.support():
            # A variable outside the support must leave the ideal unchanged.
            if quotient != a:
                bad.append((quotient, "colon-by-unused-variable-changed-ideal"))
            continue
        if quotient.is_unit:
            continue
        degree_before = equigenerated_degree(a)
        degree_after = equigenerated_degree(quotient)
        if not is_polymatroidal(quotient):
            bad.append((quotient, "colon-not-exchange-closed"))
        elif degree_before is not None and degree_after != degree_before - 1:
            bad.append((quotient, "colon-degree-did-not-drop-by-one"))
    return VerificationReport(
        target="closure",
        params=_params(samples=samples, seed=seed),
        universe_size=checked,
        matroidal_count=0,
        unmixed_count=0,
        counterexamples=tuple(bad),
    )


def cross_check_ass(spec: EnumerationSpec) -> VerificationReport:
    """Associated primes from the decomposition path equal the brute-force oracle."""
    universe = 0
    matroidal = 0
    bad: list[tuple[MonomialIdeal, str]] = []
    for ideal in enumerate_matroidal(spec):
        matroidal += 1
        universe += 1
        if associated_primes(ideal) != brute_force_ass(ideal):
            bad.append((ideal, "associated-primes-mismatch"))
    return VerificationReport(
        target="ass",
        params=_params(
            ambient=spec.ambient,
            degree=spec.degree,
            fully_supported=spec.fully_supported,
        ),
        universe_size=universe,
        matroidal_count=matroidal,
        unmixed_count=0,
        counterexamples=tuple(bad),
    )


def reference_cases() -> tuple[MonomialIdeal, ...]:
    """Three fixed inputs exercising the main classification outcomes.

    A square of a prime times a disjoint prime, the same square times a
    disjoint triangle edge ideal, and a mixed principal-times-prime product.
    """
    square_times_prime = construct_prime_power_product(
        [(VariablePrime.of(1, 2), 2), (VariablePrime.of(3, 4), 1)], None, 4
    )
    triangle = MonomialIdeal(
        5,
        (
            Monomial.from_powers({3: 1, 4: 1}, 5),
            Monomial.from_powers({3: 1, 5: 1}, 5),
            Monomial.from_powers({4: 1, 5: 1}, 5),
        ),
    )
    square_times_triangle = construct_prime_power_product(
        [(VariablePrime.of(1, 2), 2)], triangle, 5
    )
    mixed = MonomialIdeal(
        2,
        (
            Monomial.from_powers({1: 2}, 2),
            Monomial.from_powers({1: 1, 2: 1}, 2),
        ),
    )
    return (square_times_prime, square_times_triangle, mixed)


def _random_partition(rng: random.Random, items: list[int], parts: int) -> list[set[int]]:
    """Partition `items` into exactly `parts` nonempty sets."""
    assert 1 <= parts <= len(items)
    shuffled = list(items)
    rng.shuffle(shuffled)
    blocks: list[set[int]] = [set() for _ in range(parts)]
    for k in range(parts):
        blocks[k].add(shuffled[k])
    for item in shuffled[parts:]:
        blocks[rng.randrange(parts)].add(item)
    return blocks


def _random_veronese(rng: random.Random, ambient: int, degree: int) -> MonomialIdeal:
    caps = [rng.randint(1, degree) for _ in range(ambient)]
    while sum(caps) < degree:
        caps[rng.randrange(ambient)] = degree
    return construct_veronese_type(VeroneseTypeSpec(degree, tuple(caps)), ambient)


def _random_prime_product(
    rng: random.Random, ambient: int, degree: int
) -> MonomialIdeal:
    """Disjoint prime powers covering the variables, optionally with a
    complete multipartite tail on a reserved sub-partition."""
    variables = list(range(1, ambient + 1))
    tail_degree = 0
    tail = None
    tail_vars: list[int] = []
    if degree >= 2 and ambient >= 3 and rng.random() < 0.5:
        tail_degree = rng.randint(1, degree - 1)
        most = len(variables) - 1
        if tail_degree <= most:
            take = rng.randint(tail_degree, most)
            tail_vars = sorted(rng.sample(variables, take))
    head_degree = degree - tail_degree if tail_vars else degree
    head_vars = [v for v in variables if v not in tail_vars]
    t = rng.randint(1, min(len(head_vars), head_degree))
    head_blocks = _random_partition(rng, head_vars, t)
    exponents = [1] * t
    for _ in range(head_degree - t):
        exponents[rng.randrange(t)] += 1
    factors = [
        (VariablePrime(frozenset(block)), e) for block, e in zip(head_blocks, exponents)
    ]
    if tail_vars:
        m = rng.randint(tail_degree, len(tail_vars))
        tail_blocks = _random_partition(rng, tail_vars, m)
        gens = []
        for chosen in combinations(tail_blocks, tail_degree):
            for vs in iter_product(*(sorted(b) for b in chosen)):
                gens.append(Monomial.from_powers({v: 1 for v in vs}, ambient))
        tail = MonomialIdeal(ambient, tuple(gens))
    return construct_prime_power_product(factors, tail, ambient)


def sample_polymatroidal(
    rng: random.Random, ambient: int, degree: int
) -> MonomialIdeal:
    """Draw one exchange-closed ideal from a grammar of closed constructions.

    Base draws are capped-degree families, powers of the full variable prime,
    and disjoint prime-power products with optional complete multipartite
    tails; combinators are products of two smaller draws and colons of a
    higher-degree draw by a variable. All of these provably preserve the
    exchange condition, so every sample is a valid test input by construction.
    """
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    roll = rng.random()
    if degree >= 2 and roll < 0.25:
        split = rng.randint(1, degree - 1)
        return multiply(
            sample_polymatroidal(rng, ambient, split),
            sample_polymatroidal(rng, ambient, degree - split),
        )
    if degree <= 5 and roll < 0.40:
        bigger = sample_polymatroidal(rng, ambient, degree + 1)
        quotient = colon(bigger, Monomial.variable(rng.randint(1, ambient), ambient))
        if not quotient.is_unit and equigenerated_degree(quotient) == degree:
            return quotient
        # A rare improper colon falls through to a base draw.
    base = rng.random()
    if base < 0.40:
        return _random_veronese(rng, ambient, degree)
    if base < 0.55:
        full = VariablePrime(frozenset(range(1, ambient + 1)))
        return full.power(degree, ambient)
    return _random_prime_product(rng, ambient, degree)
