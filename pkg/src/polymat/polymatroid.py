"""Exchange-property checks and constructors for the structured ideal families.

The central predicate is the exchange condition on an equigenerated ideal: for
generators u, v and any variable x_i with a strictly larger exponent in u than
in v, some variable x_j with a strictly smaller exponent in u than in v makes
x_j * u / x_i a generator again. Generators satisfying it are the bases of a
discrete polymatroid; the squarefree case is a matroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as iter_product
from typing import Iterable, Optional, Sequence

from .errors import (
    DegreeTooLarge,
    EmptyFamily,
    InvalidAmbient,
    NotFullySupported,
    NotMatroidal,
    NotProper,
    SupportOverlap,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariablePrime,
    colon,
    equigenerated_degree,
    multiply,
)

__all__ = [
    "VeroneseTypeSpec",
    "BlockPartition",
    "is_polymatroidal",
    "is_matroidal",
    "construct_veronese_type",
    "construct_multipartite_edge_ideal",
    "construct_prime_power_product",
    "colon_equivalence_blocks",
]


def _require_nonzero_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero or ideal.is_unit:
        raise NotProper("expected a nonzero proper ideal")


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Exhaustive check of the exchange condition over all generator pairs.

    Cost is O(|G|^2 * n^2) in the worst case, which is fine at the scale this
    package targets; the double loop short-circuits on the first violation.
    """
    _require_nonzero_proper(ideal)
    if equigenerated_degree(ideal) is None:
        return False
    gens = [g.exponents for g in ideal.generators]
    genset = set(gens)
    n = ideal.ambient
    for u in gens:
        for v in gens:
            if u is v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                # u has extra x_{i+1}: look for a compensating swap target.
                lowered = list(u)
                lowered[i] -= 1
                for j in range(n):
                    if u[j] < v[j]:
                        lowered[j] += 1
                        if tuple(lowered) in genset:
                            break
                        lowered[j] -= 1
                else:
                    return False
    return True


def is_matroidal(ideal: MonomialIdeal) -> bool:
    """Squarefree and polymatroidal."""
    _require_nonzero_proper(ideal)
    return ideal.is_squarefree and is_polymatroidal(ideal)


@dataclass(frozen=True, slots=True)
class VeroneseTypeSpec:
    """Degree d and per-variable exponent caps for a capped-degree family.

    Caps attach to variables positionally. Sorting them ascending is a
    notational convention elsewhere, not a semantic requirement, so any order
    is accepted here.
    """

    degree: int
    caps: tuple[int, ...]

    def __post_init__(self):
        caps = tuple(int(a) for a in self.caps)
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if any(a < 1 or a > self.degree for a in caps):
            raise ValueError(f"caps must lie in [1, degree], got {caps}")
        object.__setattr__(self, "caps", caps)


def _capped_compositions(total: int, caps: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All exponent vectors summing to `total` with entry-wise caps."""
    if not caps:
        if total == 0:
            yield ()
        return
    head_cap = min(caps[0], total)
    tail = caps[1:]
    tail_room = sum(tail)
    for e in range(head_cap + 1):
        if total - e > tail_room:
            continue
        for rest in _capped_compositions(total - e, tail):
            yield (e,) + rest


def construct_veronese_type(spec: VeroneseTypeSpec, ambient: int) -> MonomialIdeal:
    """All monomials of the given degree whose exponents respect the caps."""
    if len(spec.caps) != ambient:
        raise InvalidAmbient(
            f"{len(spec.caps)} caps for ambient {ambient}"
        )
    if sum(spec.caps) < spec.degree:
        raise EmptyFamily(
            f"caps sum to {sum(spec.caps)} < degree {spec.degree}: no generators exist"
        )
    gens = tuple(Monomial(e) for e in _capped_compositions(spec.degree, spec.caps))
    return MonomialIdeal(ambient, gens)


@dataclass(frozen=True, slots=True)
class BlockPartition:
    """A partition of the variables [1..n] into disjoint nonempty blocks."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        if not blocks:
            raise ValueError("a partition needs at least one block")
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        blocks = tuple(sorted(blocks, key=min))
        everything: set[int] = set()
        total = 0
        for b in blocks:
            everything |= b
            total += len(b)
        if len(everything) != total:
            raise ValueError("blocks must be pairwise disjoint")
        n = max(everything)
        if everything != set(range(1, n + 1)):
            raise ValueError(f"blocks must cover 1..{n} without gaps")
        object.__setattr__(self, "blocks", blocks)

    @property
    def ambient(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def is_balanced(self) -> bool:
        return len({len(b) for b in self.blocks}) == 1

    def block_of(self, variable: int) -> frozenset[int]:
        for b in self.blocks:
            if variable in b:
                return b
        raise KeyError(variable)


def construct_multipartite_edge_ideal(
    blocks: BlockPartition, degree: int
) -> MonomialIdeal:
    """Edge ideal of the complete degree-uniform multipartite hypergraph.

    Generators are all squarefree monomials picking `degree` distinct blocks
    and one variable from each chosen block.
    """
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    if degree > blocks.block_count:
        raise DegreeTooLarge(
            f"degree {degree} exceeds the {blocks.block_count} available blocks"
        )
    n = blocks.ambient
    gens = []
    for chosen in combinations(blocks.blocks, degree):
        for vs in iter_product(*(sorted(b) for b in chosen)):
            gens.append(Monomial.from_powers({v: 1 for v in vs}, n))
    return MonomialIdeal(n, tuple(gens))


def construct_prime_power_product(
    factors: Sequence[tuple[VariablePrime, int]],
    tail: Optional[MonomialIdeal],
    ambient: int,
) -> MonomialIdeal:
    """Product of prime powers, optionally times a further ideal.

    The prime supports must be pairwise disjoint, and disjoint from the tail's
    support when a tail is given.
    """
    seen: set[int] = set()
    for prime, a in factors:
        if a < 1:
            raise ValueError(f"exponents must be positive, got {a}")
        if max(prime.variables) > ambient:
            raise InvalidAmbient(f"prime {prime} exceeds ambient {ambient}")
        if seen & prime.variables:
            raise SupportOverlap(f"prime {prime} overlaps an earlier factor")
        seen |= prime.variables
    if tail is not None:
        if tail.ambient != ambient:
            raise InvalidAmbient(f"tail ambient {tail.ambient} != {ambient}")
        if seen & tail.support():
            raise SupportOverlap("tail support overlaps a prime factor")
    result = MonomialIdeal.unit(ambient)
    for prime, a in factors:
        result = multiply(result, prime.power(a, ambient))
    if tail is not None:
        result = multiply(result, tail)
    return result


def colon_equivalence_blocks(
    ideal: MonomialIdeal, *, unchecked: bool = False
) -> BlockPartition:
    """Partition the variables by equality of the colon ideals (I : x).

    For a matroidal ideal two variables land in the same block exactly when
    their product divides no generator, so the blocks realize the multipartite
    structure of the generators. Pass unchecked=True to compute the partition
    for a non-matroidal ideal; it is still well defined but carries no
    structural guarantee.
    """
    _require_nonzero_proper(ideal)
    if not unchecked and not is_matroidal(ideal):
        raise NotMatroidal(f"not a squarefree exchange-closed ideal: {ideal!r}")
    if not ideal.is_fully_supported:
        raise NotFullySupported(
            f"support {sorted(ideal.support())} misses some of 1..{ideal.ambient}"
        )
    classes: dict[MonomialIdeal, set[int]] = {}
    for i in range(1, ideal.ambient + 1):
        key = colon(ideal, Monomial.variable(i, ideal.ambient))
        classes.setdefault(key, set()).add(i)
    return BlockPartition(tuple(frozenset(c) for c in classes.values()))
