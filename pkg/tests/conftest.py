"""Shared fixtures: small structured ideals used across the suite."""

from __future__ import annotations

import pytest

from polymat import (
    EnumerationSpec,
    MonomialIdeal,
    VariablePrime,
    VeroneseTypeSpec,
    construct_multipartite_edge_ideal,
    construct_prime_power_product,
    construct_veronese_type,
    enumerate_matroidal,
    parse_ideal,
)
from polymat.polymatroid import BlockPartition


@pytest.fixture(scope="session")
def square_times_prime() -> MonomialIdeal:
    """(x1,x2)^2 * (x3,x4) on four variables, degree 3."""
    return parse_ideal(
        "x1^2*x3, x1^2*x4, x2^2*x3, x2^2*x4, x1*x2*x3, x1*x2*x4", 4
    )


@pytest.fixture(scope="session")
def triangle_on_345() -> MonomialIdeal:
    """Edge ideal of the triangle on x3, x4, x5, inside five variables."""
    return parse_ideal("x3*x4, x3*x5, x4*x5", 5)


@pytest.fixture(scope="session")
def square_times_triangle(triangle_on_345) -> MonomialIdeal:
    """(x1,x2)^2 * (x3x4, x3x5, x4x5) on five variables, degree 4."""
    return construct_prime_power_product(
        [(VariablePrime.of(1, 2), 2)], triangle_on_345, 5
    )


@pytest.fixture(scope="session")
def prime_times_triangle() -> MonomialIdeal:
    """(x1,x2) * (x3x4, x3x5, x4x5): unmixed yet not complete multipartite."""
    return parse_ideal(
        "x1*x3*x4, x1*x3*x5, x1*x4*x5, x2*x3*x4, x2*x3*x5, x2*x4*x5", 5
    )


@pytest.fixture(scope="session")
def mixed_principal_times_prime() -> MonomialIdeal:
    """x1 * (x1,x2): associated primes of heights 1 and 2."""
    return parse_ideal("x1^2, x1*x2", 2)


@pytest.fixture(scope="session")
def blocks_2_2_2() -> BlockPartition:
    return BlockPartition((frozenset({1, 2}), frozenset({3, 4}), frozenset({5, 6})))


@pytest.fixture(scope="session")
def tripartite_d3(blocks_2_2_2) -> MonomialIdeal:
    """Complete 3-uniform tripartite edge ideal, blocks of size 2 (8 generators)."""
    return construct_multipartite_edge_ideal(blocks_2_2_2, 3)


@pytest.fixture(scope="session")
def tripartite_d2(blocks_2_2_2) -> MonomialIdeal:
    """Complete graph-case tripartite edge ideal, blocks of size 2 (12 generators)."""
    return construct_multipartite_edge_ideal(blocks_2_2_2, 2)


@pytest.fixture(scope="session")
def tripartite_9_d3() -> MonomialIdeal:
    """Complete 3-uniform tripartite edge ideal on nine variables (27 generators)."""
    blocks = BlockPartition(
        (frozenset({1, 2, 3}), frozenset({4, 5, 6}), frozenset({7, 8, 9}))
    )
    return construct_multipartite_edge_ideal(blocks, 3)


@pytest.fixture(scope="session")
def squarefree_veronese_4_2() -> MonomialIdeal:
    return construct_veronese_type(VeroneseTypeSpec(2, (1, 1, 1, 1)), 4)


@pytest.fixture(scope="session")
def triangle() -> MonomialIdeal:
    """Edge ideal of the triangle on three variables."""
    return parse_ideal("x1*x2, x1*x3, x2*x3", 3)


# Exhaustive universes, enumerated once per session. Keys are (n, d); all
# fully supported.
_UNIVERSE_WINDOWS = ((3, 2), (4, 2), (5, 2), (4, 3), (5, 3), (6, 3))


@pytest.fixture(scope="session")
def small_universes() -> dict[tuple[int, int], list[MonomialIdeal]]:
    """Fully supported exchange-closed squarefree ideals for n <= 5 windows."""
    return {
        (n, d): list(enumerate_matroidal(EnumerationSpec(n, d, fully_supported=True)))
        for (n, d) in _UNIVERSE_WINDOWS
        if n <= 5
    }


@pytest.fixture(scope="session")
def all_universes(small_universes) -> dict[tuple[int, int], list[MonomialIdeal]]:
    """All acceptance windows including the large (6, 3) scan."""
    out = dict(small_universes)
    out[(6, 3)] = list(
        enumerate_matroidal(EnumerationSpec(6, 3, fully_supported=True))
    )
    return out
