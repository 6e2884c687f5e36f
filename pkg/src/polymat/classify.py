"""Classifiers for unmixed structure: hypergraph profiles, the four-case
certificate for unmixed exchange-closed ideals, the Cohen-Macaulay shape test,
codimension-one connectivity, and height bound reports.

Every classification carries a certificate from which the input can be
rebuilt; `reconstruct` performs that rebuild and the classifier verifies it
before returning, so a returned certificate is always exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .decomposition import (
    associated_primes,
    height,
    minimal_primes,
    prime_power_decomposition,
)
from .errors import (
    ClassificationIncomplete,
    Mixed,
    NotFullySupported,
    NotMatroidal,
    NotPolymatroidal,
    NotProper,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariablePrime,
    colon,
    equigenerated_degree,
    intersect,
    restrict_to_support,
)
from .polymatroid import (
    BlockPartition,
    VeroneseTypeSpec,
    colon_equivalence_blocks,
    construct_multipartite_edge_ideal,
    construct_prime_power_product,
    construct_veronese_type,
    is_matroidal,
    is_polymatroidal,
)

__all__ = [
    "HypergraphProfile",
    "Classification",
    "MaximalPower",
    "PrimePowerProduct",
    "PrimePowerTimesMatroidal",
    "UnmixedMatroidal",
    "NotUnmixed",
    "hypergraph_profile",
    "classify_unmixed_polymatroidal",
    "reconstruct",
    "cm_shape",
    "is_cohen_macaulay",
    "is_connected_in_codim_one",
    "HeightBoundsReport",
    "height_bounds_report",
]


@dataclass(frozen=True, slots=True)
class HypergraphProfile:
    """Multipartite structure of a squarefree exchange-closed ideal.

    `complete` records whether every choice of `degree` distinct blocks and
    one variable from each yields a generator; `block_size` is present only
    when all blocks share a cardinality.
    """

    degree: int
    block_count: int
    block_size: Optional[int]
    blocks: BlockPartition
    complete: bool
    balanced: bool


def hypergraph_profile(ideal: MonomialIdeal) -> HypergraphProfile:
    """Blocks from colon equivalence plus completeness and balance flags."""
    blocks = colon_equivalence_blocks(ideal)
    d = equigenerated_degree(ideal)
    assert d is not None
    complete = ideal == construct_multipartite_edge_ideal(blocks, d)
    sizes = {len(b) for b in blocks.blocks}
    balanced = len(sizes) == 1
    return HypergraphProfile(
        degree=d,
        block_count=blocks.block_count,
        block_size=sizes.pop() if balanced else None,
        blocks=blocks,
        complete=complete,
        balanced=balanced,
    )


class Classification:
    """Base class for classification outcomes; see the concrete variants."""

    tag: str = "unclassified"


@dataclass(frozen=True, slots=True)
class MaximalPower(Classification):
    """Case (i): the d-th power of the ideal of all variables."""

    degree: int

    tag = "maximal-power"


@dataclass(frozen=True, slots=True)
class PrimePowerProduct(Classification):
    """Case (ii): a product of powers of variable primes with pairwise
    disjoint supports, all of one height."""

    factors: tuple[tuple[VariablePrime, int], ...]

    tag = "prime-power-product"


@dataclass(frozen=True, slots=True)
class PrimePowerTimesMatroidal(Classification):
    """Case (iii): disjoint prime powers times a residual squarefree
    exchange-closed factor of the same height."""

    factors: tuple[tuple[VariablePrime, int], ...]
    tail: MonomialIdeal

    tag = "prime-power-times-matroidal"


@dataclass(frozen=True, slots=True)
class UnmixedMatroidal(Classification):
    """Case (iv): the ideal itself is squarefree and exchange-closed.

    The canonical generators are part of the certificate: the profile alone
    does not determine the ideal when the block hypergraph is not complete,
    and such unmixed ideals do exist.
    """

    profile: HypergraphProfile
    ideal: MonomialIdeal

    tag = "unmixed-matroidal"


@dataclass(frozen=True, slots=True)
class NotUnmixed(Classification):
    """Witness pair of associated primes with different heights."""

    witness: tuple[VariablePrime, VariablePrime]

    tag = "not-unmixed"


def reconstruct(classification: Classification, ambient: int) -> Optional[MonomialIdeal]:
    """Rebuild the ideal a certificate describes; None for a mixed witness."""
    if isinstance(classification, MaximalPower):
        full = VariablePrime(frozenset(range(1, ambient + 1)))
        return full.power(classification.degree, ambient)
    if isinstance(classification, PrimePowerProduct):
        return construct_prime_power_product(classification.factors, None, ambient)
    if isinstance(classification, PrimePowerTimesMatroidal):
        return construct_prime_power_product(
            classification.factors, classification.tail, ambient
        )
    if isinstance(classification, UnmixedMatroidal):
        if classification.profile.complete:
            return construct_multipartite_edge_ideal(
                classification.profile.blocks, classification.profile.degree
            )
        return classification.ideal
    if isinstance(classification, NotUnmixed):
        return None
    raise TypeError(f"unknown classification {classification!r}")


def _overlap_components(
    primes: list[VariablePrime],
) -> list[list[VariablePrime]]:
    """Connected components under 'supports intersect'."""
    remaining = list(primes)
    components = []
    while remaining:
        seed = remaining.pop()
        group = [seed]
        grown = True
        while grown:
            grown = False
            for p in list(remaining):
                if any(p.variables & q.variables for q in group):
                    group.append(p)
                    remaining.remove(p)
                    grown = True
        components.append(sorted(group, key=lambda p: p.sorted_variables))
    return components


def _checked(classification: Classification, ideal: MonomialIdeal) -> Classification:
    rebuilt = reconstruct(classification, ideal.ambient)
    if rebuilt != ideal:
        raise ClassificationIncomplete(
            f"certificate {classification!r} rebuilds {rebuilt!r}, not the input"
        )
    return classification


def classify_unmixed_polymatroidal(ideal: MonomialIdeal) -> Classification:
    """Decide which structural case an exchange-closed ideal falls into.

    Mixed inputs get a NotUnmixed witness. Unmixed inputs are certified, in
    order of precedence: (i) a power of the ideal of all variables; (ii) a
    product of disjoint prime powers; (iii) disjoint prime powers times a
    squarefree residual factor, recovered as a colon by a monomial supported
    off it; (iv) the ideal itself squarefree. The certificate is verified by
    exact reconstruction before it is returned; an unmixed input that fits no
    case raises ClassificationIncomplete, which signals a bug or a genuine
    counterexample to the case analysis.
    """
    if not is_polymatroidal(ideal):
        raise NotPolymatroidal(f"exchange condition fails: {ideal!r}")
    if not ideal.is_fully_supported:
        raise NotFullySupported(
            f"support {sorted(ideal.support())} misses some of 1..{ideal.ambient}"
        )
    d = equigenerated_degree(ideal)
    assert d is not None
    ass = sorted(associated_primes(ideal), key=lambda p: p.sorted_variables)
    heights = {p.height for p in ass}
    if len(heights) > 1:
        by_height = sorted(ass, key=lambda p: (p.height, p.sorted_variables))
        return NotUnmixed(witness=(by_height[0], by_height[-1]))

    full = VariablePrime(frozenset(range(1, ideal.ambient + 1)))
    if ass == [full]:
        return _checked(MaximalPower(degree=d), ideal)

    decomposition = prime_power_decomposition(ideal)
    exponent = dict(decomposition.components)
    groups = _overlap_components(ass)
    single_factors = tuple(
        sorted(
            ((group[0], exponent[group[0]]) for group in groups if len(group) == 1),
            key=lambda pa: pa[0].sorted_variables,
        )
    )
    tail_primes = sorted(
        (p for group in groups if len(group) > 1 for p in group),
        key=lambda p: p.sorted_variables,
    )

    if not tail_primes:
        if sum(a for _, a in single_factors) != d:
            raise ClassificationIncomplete(
                f"disjoint prime exponents do not sum to the degree for {ideal!r}"
            )
        return _checked(PrimePowerProduct(factors=single_factors), ideal)

    if any(exponent[p] != 1 for p in tail_primes):
        raise ClassificationIncomplete(
            f"an overlapping prime carries exponent > 1 in {ideal!r}"
        )

    if not single_factors:
        # Radical throughout with overlapping supports: the ideal itself is
        # the squarefree case.
        if not ideal.is_squarefree or not is_matroidal(ideal):
            raise ClassificationIncomplete(
                f"radical decomposition but not squarefree exchange-closed: {ideal!r}"
            )
        return _checked(
            UnmixedMatroidal(profile=hypergraph_profile(ideal), ideal=ideal), ideal
        )

    # Mixed shape: recover the residual factor as a colon by a monomial
    # supported entirely on the standalone primes.
    off = Monomial.one(ideal.ambient)
    for prime, a in single_factors:
        off = off.times(
            Monomial.from_powers({min(prime.variables): a}, ideal.ambient)
        )
    tail = colon(ideal, off)
    # Cross-check the colon route against the intersection of the radical part.
    crosscheck = MonomialIdeal.unit(ideal.ambient)
    for p in tail_primes:
        crosscheck = intersect(crosscheck, p.as_ideal(ideal.ambient))
    if tail != crosscheck:
        raise ClassificationIncomplete(
            f"colon-recovered factor disagrees with the radical intersection for {ideal!r}"
        )
    tail_degree = equigenerated_degree(tail)
    if tail_degree is None or not is_matroidal(tail):
        raise ClassificationIncomplete(
            f"residual factor is not squarefree exchange-closed for {ideal!r}"
        )
    if sum(a for _, a in single_factors) + tail_degree != d:
        raise ClassificationIncomplete(
            f"factor degrees do not sum to the generation degree for {ideal!r}"
        )
    return _checked(
        PrimePowerTimesMatroidal(factors=single_factors, tail=tail), ideal
    )


def cm_shape(ideal: MonomialIdeal) -> Optional[str]:
    """Which Cohen-Macaulay shape the ideal matches on its support, if any.

    Returns 'principal', 'veronese', or 'squarefree-veronese'; None otherwise.
    The comparison happens on the support variables, since unused ambient
    variables do not affect the quotient's structure.
    """
    if not is_polymatroidal(ideal):
        raise NotPolymatroidal(f"exchange condition fails: {ideal!r}")
    if len(ideal.generators) == 1:
        return "principal"
    small = restrict_to_support(ideal)
    d = equigenerated_degree(small)
    assert d is not None
    full = VariablePrime(frozenset(range(1, small.ambient + 1)))
    if small == full.power(d, small.ambient):
        return "veronese"
    if d <= small.ambient:
        squarefree_veronese = construct_veronese_type(
            VeroneseTypeSpec(degree=d, caps=(1,) * small.ambient), small.ambient
        )
        if small == squarefree_veronese:
            return "squarefree-veronese"
    return None


def is_cohen_macaulay(ideal: MonomialIdeal) -> bool:
    """Cohen-Macaulay test via the shape classification for exchange-closed ideals."""
    return cm_shape(ideal) is not None


def is_connected_in_codim_one(ideal: MonomialIdeal) -> bool:
    """Connectivity of the minimal primes under the height-plus-one union relation.

    False unless all minimal primes share one height h. Otherwise two minimal
    primes are adjacent when their union has h + 1 variables (equivalently,
    their intersection has h - 1), and the result is whether that graph is
    connected.
    """
    if ideal.is_zero or ideal.is_unit:
        raise NotProper("expected a nonzero proper ideal")
    mins = sorted(minimal_primes(ideal), key=lambda p: p.sorted_variables)
    heights = {p.height for p in mins}
    if len(heights) > 1:
        return False
    h = heights.pop()
    adjacency: dict[VariablePrime, list[VariablePrime]] = {p: [] for p in mins}
    for i, p in enumerate(mins):
        for q in mins[i + 1 :]:
            union_size = len(p.variables | q.variables)
            meet_size = len(p.variables & q.variables)
            if union_size == h + 1:
                assert meet_size == h - 1
                adjacency[p].append(q)
                adjacency[q].append(p)
    reached = {mins[0]}
    frontier = [mins[0]]
    while frontier:
        for q in adjacency[frontier.pop()]:
            if q not in reached:
                reached.add(q)
                frontier.append(q)
    return len(reached) == len(mins)


@dataclass(frozen=True, slots=True)
class HeightBoundsReport:
    """Height of an unmixed squarefree exchange-closed ideal against its bounds.

    lower = n/d and upper = n-d+1 bracket the height; `predicted` is the
    block formula k*(m-d+1), present when the block partition is balanced;
    `equality_case` tags which bound is attained ('lower', 'upper', 'both',
    or None).
    """

    lower: Fraction
    upper: int
    actual: int
    predicted: Optional[int]
    equality_case: Optional[str]


def height_bounds_report(ideal: MonomialIdeal) -> HeightBoundsReport:
    if not is_matroidal(ideal):
        raise NotMatroidal(f"not a squarefree exchange-closed ideal: {ideal!r}")
    if not ideal.is_fully_supported:
        raise NotFullySupported(
            f"support {sorted(ideal.support())} misses some of 1..{ideal.ambient}"
        )
    ass = associated_primes(ideal)
    if len({p.height for p in ass}) > 1:
        raise Mixed(f"associated primes have unequal heights for {ideal!r}")
    n = ideal.ambient
    d = equigenerated_degree(ideal)
    assert d is not None
    actual = height(ideal)
    profile = hypergraph_profile(ideal)
    predicted = None
    if profile.balanced:
        assert profile.block_size is not None
        predicted = profile.block_size * (profile.block_count - d + 1)
    lower = Fraction(n, d)
    upper = n - d + 1
    at_lower = Fraction(actual) == lower
    at_upper = actual == upper
    if at_lower and at_upper:
        case = "both"
    elif at_upper:
        case = "upper"
    elif at_lower:
        case = "lower"
    else:
        case = None
    return HeightBoundsReport(
        lower=lower, upper=upper, actual=actual, predicted=predicted, equality_case=case
    )
