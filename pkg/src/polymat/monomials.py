"""Exact arithmetic on monomials and monomial ideals over a fixed variable set.

A monomial is an exponent vector over variables x1..xn; variable indices are
1-based everywhere in the public API. A MonomialIdeal is always held in
canonical normal form: the unique minimal generating set (an antichain under
divisibility), ordered by total degree and then lexicographically by exponent
vector. Two generator lists spanning the same ideal therefore construct equal
values.

All values are immutable after construction and every operation is a pure
function of its inputs, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .errors import EmptyIdeal, InvalidAmbient

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "VariablePrime",
    "minimalize",
    "colon",
    "multiply",
    "intersect",
    "support",
    "equigenerated_degree",
    "restrict_to_support",
]


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial x1^e1 * ... * xn^en, stored as its exponent vector."""

    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"exponents must be nonnegative, got {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    @classmethod
    def one(cls, ambient: int) -> Monomial:
        return cls((0,) * ambient)

    @classmethod
    def variable(cls, index: int, ambient: int) -> Monomial:
        return cls.from_powers({index: 1}, ambient)

    @classmethod
    def from_powers(cls, powers: Mapping[int, int], ambient: int) -> Monomial:
        """Build from a {variable index: exponent} mapping (1-based indices)."""
        exps = [0] * ambient
        for i, e in powers.items():
            if not 1 <= i <= ambient:
                raise InvalidAmbient(f"variable x{i} outside ambient [1..{ambient}]")
            exps[i - 1] = e
        return cls(tuple(exps))

    @property
    def ambient(self) -> int:
        return len(self.exponents)

    def exponent(self, index: int) -> int:
        """Exponent of x<index> (1-based)."""
        return self.exponents[index - 1]

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: Monomial) -> Monomial:
        """self / gcd(self, other), the generator contributed to a colon ideal."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def degree_on(self, variables: Iterable[int]) -> int:
        """Total exponent over a set of variable indices."""
        return sum(self.exponents[i - 1] for i in variables)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # Graded lexicographic: total degree first, then descending on the
        # exponent vector, so x1-heavy monomials list first within a degree.
        return (self.degree, tuple(-e for e in self.exponents))

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _minimal_antichain(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Deduplicate and drop every monomial divisible by another one."""
    unique = sorted(set(gens), key=lambda m: m.sort_key)
    if not unique:
        return ()
    if unique[0].degree == unique[-1].degree:
        # Distinct monomials of equal degree never divide each other.
        return tuple(unique)
    kept: list[Monomial] = []
    for m in unique:
        # Ascending degree, so only earlier entries can divide m.
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal, normalized to its unique minimal generating set.

    The zero ideal is the empty generator list; the unit ideal is generated
    by the monomial 1. Construction minimalizes, so equality of values is
    equality of ideals.
    """

    ambient: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.ambient < 1:
            raise InvalidAmbient(f"ambient must be positive, got {self.ambient}")
        gens = tuple(self.generators)
        for g in gens:
            if g.ambient != self.ambient:
                raise InvalidAmbient(
                    f"generator {g} has {g.ambient} exponents, ambient is {self.ambient}"
                )
        object.__setattr__(self, "generators", _minimal_antichain(gens))

    @classmethod
    def zero(cls, ambient: int) -> MonomialIdeal:
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: int) -> MonomialIdeal:
        return cls(ambient, (Monomial.one(ambient),))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: some minimal generator divides m."""
        return any(g.divides(m) for g in self.generators)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(self.contains(g) for g in other.generators)

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.generators:
            out |= g.support()
        return frozenset(out)

    @property
    def is_fully_supported(self) -> bool:
        return len(self.support()) == self.ambient

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def __str__(self) -> str:
        return ", ".join(str(g) for g in self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.ambient}: {self})"


@dataclass(frozen=True, slots=True)
class VariablePrime:
    """A monomial prime ideal, i.e. the ideal generated by a set of variables."""

    variables: frozenset[int]

    def __post_init__(self):
        vs = frozenset(int(v) for v in self.variables)
        if not vs:
            raise ValueError("a variable prime needs at least one variable")
        if any(v < 1 for v in vs):
            raise ValueError(f"variable indices are 1-based, got {sorted(vs)}")
        object.__setattr__(self, "variables", vs)

    @classmethod
    def of(cls, *variables: int) -> VariablePrime:
        return cls(frozenset(variables))

    @property
    def height(self) -> int:
        return len(self.variables)

    @property
    def sorted_variables(self) -> tuple[int, ...]:
        return tuple(sorted(self.variables))

    def as_ideal(self, ambient: int) -> MonomialIdeal:
        return MonomialIdeal(
            ambient, tuple(Monomial.variable(i, ambient) for i in self.sorted_variables)
        )

    def power(self, exponent: int, ambient: int) -> MonomialIdeal:
        """The ideal of all degree-`exponent` monomials in this prime's variables."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if exponent == 0:
            return MonomialIdeal.unit(ambient)
        from itertools import combinations_with_replacement

        gens = []
        for combo in combinations_with_replacement(self.sorted_variables, exponent):
            powers: dict[int, int] = {}
            for v in combo:
                powers[v] = powers.get(v, 0) + 1
            gens.append(Monomial.from_powers(powers, ambient))
        return MonomialIdeal(ambient, tuple(gens))

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" for i in self.sorted_variables) + ")"

    def __repr__(self) -> str:
        return f"VariablePrime{self}"


def minimalize(gens: Iterable[Monomial], ambient: int) -> MonomialIdeal:
    """The ideal spanned by `gens`, reduced to its minimal generating set.

    Membership is preserved: a monomial is divisible by some element of
    `gens` exactly when it is divisible by some minimal generator.
    """
    return MonomialIdeal(ambient, tuple(gens))


def _check_same_ambient(a: MonomialIdeal, b: Union[MonomialIdeal, Monomial]) -> None:
    if a.ambient != b.ambient:
        raise InvalidAmbient(f"ambient mismatch: {a.ambient} vs {b.ambient}")


def colon(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal (I : u) = { v : v * u in I }."""
    _check_same_ambient(ideal, u)
    return MonomialIdeal(ideal.ambient, tuple(g.colon(u) for g in ideal.generators))


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The product ideal, minimalized."""
    _check_same_ambient(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.ambient)
    gens = tuple(g.times(h) for g in a.generators for h in b.generators)
    return MonomialIdeal(a.ambient, gens)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The intersection, via pairwise least common multiples of generators."""
    _check_same_ambient(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.ambient)
    gens = tuple(g.lcm(h) for g in a.generators for h in b.generators)
    return MonomialIdeal(a.ambient, gens)


def support(value: Union[MonomialIdeal, Monomial]) -> frozenset[int]:
    """Variables dividing some minimal generator (or the single monomial)."""
    return value.support()


def equigenerated_degree(ideal: MonomialIdeal) -> int | None:
    """The common degree of the minimal generators, or None if degrees differ.

    Raises EmptyIdeal on the zero ideal.
    """
    if ideal.is_zero:
        raise EmptyIdeal("the zero ideal has no generation degree")
    degrees = {g.degree for g in ideal.generators}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def restrict_to_support(ideal: MonomialIdeal) -> MonomialIdeal:
    """Re-embed the ideal into the polynomial ring on exactly its support.

    Variables are renumbered 1..k preserving their order. This is an explicit
    re-indexing step; operations that require full support reject rather than
    doing this silently.
    """
    supp = sorted(ideal.support())
    if not supp:
        raise EmptyIdeal("cannot restrict an ideal with empty support")
    positions = [i - 1 for i in supp]
    gens = tuple(
        Monomial(tuple(g.exponents[p] for p in positions)) for g in ideal.generators
    )
    return MonomialIdeal(len(supp), gens)
