"""Primary decomposition machinery: irreducible components, associated primes,
height, unmixedness, and verified prime-power intersection forms.

The irreducible decomposition uses the classical splitting identity
(J, u*v) = (J, u) cap (J, v) for coprime monomials u, v, applied until every
component is generated by pure variable powers, followed by an irredundancy
filter. For squarefree ideals the irredundant components are exactly the
minimal vertex covers of the generator hypergraph, and a direct cover scan is
used instead; both paths return identical values and are cross-checked in the
test suite, alongside an independent brute-force oracle over the divisor
lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .config import default_budget
from .errors import NotProper, OracleBudgetExceeded, VerificationFailed
from .monomials import Monomial, MonomialIdeal, VariablePrime, colon, intersect

__all__ = [
    "IrreducibleComponent",
    "PrimePowerDecomposition",
    "irreducible_decomposition",
    "associated_primes",
    "minimal_primes",
    "height",
    "is_unmixed",
    "prime_power_decomposition",
    "brute_force_ass",
]

# Above this many variables the squarefree cover scan (2^n subsets) is not
# attempted and the splitting path is used for everything.
_COVER_SCAN_LIMIT = 16


def _require_nonzero_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise NotProper("the zero ideal is not accepted here")
    if ideal.is_unit:
        raise NotProper("the unit ideal is not accepted here")


@dataclass(frozen=True, slots=True)
class IrreducibleComponent:
    """An irreducible monomial ideal (x_i^{e_i} : i in its key set).

    `powers` is sorted by variable index; exponents are positive.
    """

    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple(sorted((int(v), int(e)) for v, e in self.powers))
        if not entries:
            raise ValueError("an irreducible component needs at least one variable power")
        if any(e < 1 for _, e in entries):
            raise ValueError(f"exponents must be positive, got {entries}")
        object.__setattr__(self, "powers", entries)

    @property
    def radical(self) -> VariablePrime:
        return VariablePrime(frozenset(v for v, _ in self.powers))

    def as_ideal(self, ambient: int) -> MonomialIdeal:
        gens = tuple(Monomial.from_powers({v: e}, ambient) for v, e in self.powers)
        return MonomialIdeal(ambient, gens)

    def contains(self, other: IrreducibleComponent) -> bool:
        """Ideal containment other <= self.

        A pure power x_v^b lies in this component exactly when v is among its
        keys with exponent at most b, so containment holds when every key of
        `other` appears here with an exponent bounded by other's.
        """
        mine = dict(self.powers)
        return all(v in mine and mine[v] <= e for v, e in other.powers)


def _split_once(ideal: MonomialIdeal) -> tuple[MonomialIdeal, MonomialIdeal] | None:
    """Split at the first generator with at least two distinct variables.

    Returns None when every generator is a pure variable power.
    """
    for k, g in enumerate(ideal.generators):
        supp = sorted(g.support())
        if len(supp) >= 2:
            pivot = supp[0]
            a = g.exponent(pivot)
            rest = tuple(ideal.generators[:k] + ideal.generators[k + 1 :])
            left = Monomial.from_powers({pivot: a}, ideal.ambient)
            right = g.colon(left)
            return (
                MonomialIdeal(ideal.ambient, rest + (left,)),
                MonomialIdeal(ideal.ambient, rest + (right,)),
            )
    return None


def _component_of_pure_powers(ideal: MonomialIdeal) -> IrreducibleComponent:
    powers = []
    for g in ideal.generators:
        (v,) = g.support()
        powers.append((v, g.exponent(v)))
    return IrreducibleComponent(tuple(powers))


def _drop_redundant(components: set[IrreducibleComponent]) -> tuple[IrreducibleComponent, ...]:
    # A component is redundant exactly when it contains another one: an
    # intersection of monomial ideals lies inside an irreducible monomial
    # ideal only if one of them does.
    kept = [
        c
        for c in components
        if not any(o is not c and c.contains(o) for o in components)
    ]
    return tuple(sorted(kept, key=lambda c: c.powers))


def irreducible_decomposition(ideal: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """The irredundant irreducible decomposition, via recursive splitting."""
    _require_nonzero_proper(ideal)
    components: set[IrreducibleComponent] = set()
    seen = {ideal}
    stack = [ideal]
    while stack:
        current = stack.pop()
        split = _split_once(current)
        if split is None:
            components.add(_component_of_pure_powers(current))
            continue
        for child in split:
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return _drop_redundant(components)


def _minimal_cover_primes(ideal: MonomialIdeal) -> frozenset[VariablePrime]:
    """Minimal vertex covers of a squarefree ideal's generator hypergraph."""
    edges = [sum(1 << (v - 1) for v in g.support()) for g in ideal.generators]
    relevant = 0
    for e in edges:
        relevant |= e
    vars_present = [i for i in range(ideal.ambient) if relevant >> i & 1]
    covers = []
    for mask_bits in iter_product((0, 1), repeat=len(vars_present)):
        mask = sum(1 << v for v, b in zip(vars_present, mask_bits) if b)
        if all(mask & e for e in edges):
            covers.append(mask)
    minimal = [
        c for c in covers if not any(o != c and o & c == o for o in covers)
    ]
    return frozenset(
        VariablePrime(frozenset(i + 1 for i in range(ideal.ambient) if c >> i & 1))
        for c in minimal
    )


def associated_primes(ideal: MonomialIdeal) -> frozenset[VariablePrime]:
    """The associated primes: radicals of the irredundant irreducible components.

    Squarefree ideals take a direct minimal-cover scan (the components of a
    squarefree ideal are exactly the minimal cover primes); everything else
    goes through the splitting decomposition.
    """
    _require_nonzero_proper(ideal)
    if ideal.is_squarefree and ideal.ambient <= _COVER_SCAN_LIMIT:
        return _minimal_cover_primes(ideal)
    return frozenset(c.radical for c in irreducible_decomposition(ideal))


def minimal_primes(ideal: MonomialIdeal) -> frozenset[VariablePrime]:
    """Inclusion-minimal associated primes."""
    ass = associated_primes(ideal)
    return frozenset(
        p for p in ass if not any(q is not p and q.variables < p.variables for q in ass)
    )


def height(ideal: MonomialIdeal) -> int:
    """Minimum cardinality of an associated prime."""
    return min(p.height for p in associated_primes(ideal))


def is_unmixed(ideal: MonomialIdeal) -> bool:
    """True when all associated primes have equal cardinality."""
    return len({p.height for p in associated_primes(ideal)}) == 1


@dataclass(frozen=True, slots=True)
class PrimePowerDecomposition:
    """A verified presentation I = intersection of p_i^{a_i} over Ass(I)."""

    components: tuple[tuple[VariablePrime, int], ...]

    def __post_init__(self):
        comps = tuple(
            sorted(self.components, key=lambda pa: (pa[0].sorted_variables, pa[1]))
        )
        primes = [p for p, _ in comps]
        if len(set(primes)) != len(primes):
            raise ValueError("primes must be pairwise distinct")
        if any(a < 1 for _, a in comps):
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "components", comps)

    def intersection_ideal(self, ambient: int) -> MonomialIdeal:
        result = MonomialIdeal.unit(ambient)
        for prime, a in self.components:
            result = intersect(result, prime.power(a, ambient))
        return result


def prime_power_decomposition(ideal: MonomialIdeal) -> PrimePowerDecomposition:
    """Express the ideal as an intersection of prime powers over its associated primes.

    For each associated prime p the exponent is the minimum, over the minimal
    generators, of the total degree in p's variables. This is the largest
    exponent vector for which the intersection can still contain the ideal, so
    it must succeed whenever any exponent choice does. The reconstruction is
    verified exactly; a mismatch raises VerificationFailed, signalling either
    a non-polymatroidal input or a bug.
    """
    _require_nonzero_proper(ideal)
    components = []
    for p in sorted(associated_primes(ideal), key=lambda q: q.sorted_variables):
        a = min(g.degree_on(p.variables) for g in ideal.generators)
        components.append((p, a))
    decomposition = PrimePowerDecomposition(tuple(components))
    if decomposition.intersection_ideal(ideal.ambient) != ideal:
        raise VerificationFailed(
            f"prime powers do not intersect back to the input for {ideal!r}"
        )
    return decomposition


def brute_force_ass(
    ideal: MonomialIdeal, cap: int | None = None
) -> frozenset[VariablePrime]:
    """Independent oracle for associated primes via an exhaustive divisor scan.

    Scans every monomial u dividing lcm(G(I)) with u not in I and collects the
    colon ideals (I : u) that are variable primes. The restriction of
    witnesses to the divisor lattice is an oracle assumption, cross-validated
    against the decomposition path on every test instance.
    """
    _require_nonzero_proper(ideal)
    if cap is None:
        cap = default_budget()
    lcm_exps = [0] * ideal.ambient
    for g in ideal.generators:
        lcm_exps = [max(a, b) for a, b in zip(lcm_exps, g.exponents)]
    lattice_size = 1
    for e in lcm_exps:
        lattice_size *= e + 1
        if lattice_size > cap:
            raise OracleBudgetExceeded(
                f"divisor lattice exceeds the budget of {cap} monomials"
            )
    found: set[VariablePrime] = set()
    for exps in iter_product(*(range(e + 1) for e in lcm_exps)):
        u = Monomial(exps)
        if ideal.contains(u):
            continue
        q = colon(ideal, u)
        if not q.is_zero and all(g.degree == 1 for g in q.generators):
            found.add(VariablePrime(q.support()))
    return frozenset(found)
