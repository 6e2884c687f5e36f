"""Text grammar for ideals and report serialization.

Grammar: generators are separated by commas or newlines; a monomial is a
'*'-joined sequence of factors `x<k>` with an optional `^<e>` (e >= 1);
whitespace is insignificant. `1` denotes the unit monomial and is accepted
only where a single monomial is expected, never as an ideal generator.
Compact juxtaposition (`x1x2`) is rejected so indices stay unambiguous past
nine variables. Repeated factors accumulate (`x1*x1` means `x1^2`).

Reports serialize either as human-readable text or as a versioned,
JSON-formatted structured document with deterministic key order.
"""

from __future__ import annotations

import json
import warnings
from typing import Optional, Sequence, Union

from .classify import (
    Classification,
    HeightBoundsReport,
    HypergraphProfile,
    MaximalPower,
    NotUnmixed,
    PrimePowerProduct,
    PrimePowerTimesMatroidal,
    UnmixedMatroidal,
    reconstruct,
)
from .config import VERSION
from .decomposition import (
    IrreducibleComponent,
    PrimePowerDecomposition,
    associated_primes,
)
from .errors import (
    AmbientInferredWarning,
    EmptyInput,
    IdealSyntaxError,
    IndexOutOfRange,
)
from .harness import VerificationReport
from .monomials import Monomial, MonomialIdeal, VariablePrime

__all__ = [
    "parse_ideal",
    "parse_monomial",
    "emit_report",
    "SCHEMA",
]

SCHEMA = "polymat.report/1"

_CASE_LABELS = {
    "maximal-power": "(i)",
    "prime-power-product": "(ii)",
    "prime-power-times-matroidal": "(iii)",
    "unmixed-matroidal": "(iv)",
}


def _parse_powers(
    chunk: str, line: int, col0: int, *, allow_unit: bool
) -> dict[int, int]:
    """Parse one monomial into a {variable index: exponent} mapping."""
    i = 0
    size = len(chunk)

    def column() -> int:
        return col0 + i + 1

    def skip_ws() -> None:
        nonlocal i
        while i < size and chunk[i] in " \t":
            i += 1

    def read_number(what: str) -> int:
        nonlocal i
        start = i
        while i < size and chunk[i].isdigit():
            i += 1
        if start == i:
            raise IdealSyntaxError(f"expected {what}", line, column())
        return int(chunk[start:i])

    powers: dict[int, int] = {}
    skip_ws()
    if i >= size:
        raise IdealSyntaxError("empty monomial", line, column())
    if chunk[i] == "1":
        one_col = column()
        i += 1
        skip_ws()
        if i < size:
            raise IdealSyntaxError("unexpected text after '1'", line, column())
        if not allow_unit:
            raise IdealSyntaxError(
                "'1' is not allowed as an ideal generator", line, one_col
            )
        return powers
    while True:
        skip_ws()
        if i >= size or chunk[i] != "x":
            raise IdealSyntaxError("expected a factor like x3 or x3^2", line, column())
        i += 1
        index_col = column()
        index = read_number("a variable index after 'x'")
        if index < 1:
            raise IdealSyntaxError("variable indices start at 1", line, index_col)
        exponent = 1
        skip_ws()
        if i < size and chunk[i] == "^":
            i += 1
            skip_ws()
            exp_col = column()
            exponent = read_number("an exponent after '^'")
            if exponent < 1:
                raise IdealSyntaxError("exponents must be at least 1", line, exp_col)
        powers[index] = powers.get(index, 0) + exponent
        skip_ws()
        if i >= size:
            return powers
        if chunk[i] == "*":
            i += 1
            continue
        if chunk[i] == "x":
            raise IdealSyntaxError("missing '*' between factors", line, column())
        raise IdealSyntaxError(f"unexpected character {chunk[i]!r}", line, column())


def _chunks(text: str):
    """Yield (chunk, line number, column offset) for each comma/newline-separated piece."""
    for line_no, line_text in enumerate(text.splitlines(), start=1):
        offset = 0
        for piece in line_text.split(","):
            yield piece, line_no, offset
            offset += len(piece) + 1


def _resolve_ambient(
    powers_list: Sequence[dict[int, int]], ambient: Optional[int]
) -> int:
    largest = max((max(p) for p in powers_list if p), default=0)
    if ambient is None:
        if largest == 0:
            raise EmptyInput("cannot infer the variable count from '1' alone")
        warnings.warn(
            f"variable count inferred as {largest} from the largest index present",
            AmbientInferredWarning,
            stacklevel=3,
        )
        return largest
    if largest > ambient:
        raise IndexOutOfRange(
            f"variable x{largest} exceeds the declared count of {ambient}"
        )
    return ambient


def parse_ideal(text: str, ambient: Optional[int] = None) -> MonomialIdeal:
    """Parse ideal text into canonical form.

    With `ambient` omitted the variable count is inferred as the largest index
    present (with a warning, since trailing unused variables are semantic).
    """
    powers_list = []
    for chunk, line_no, col0 in _chunks(text):
        if not chunk.strip():
            continue
        powers_list.append(_parse_powers(chunk, line_no, col0, allow_unit=False))
    if not powers_list:
        raise EmptyInput("no generators found")
    n = _resolve_ambient(powers_list, ambient)
    return MonomialIdeal(n, tuple(Monomial.from_powers(p, n) for p in powers_list))


def parse_monomial(text: str, ambient: Optional[int] = None) -> Monomial:
    """Parse a single monomial; '1' is accepted here."""
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("no monomial found")
    if "," in stripped or "\n" in stripped:
        raise IdealSyntaxError(
            "expected a single monomial", 1, stripped.index(",") + 1
        )
    powers = _parse_powers(stripped, 1, 0, allow_unit=True)
    n = _resolve_ambient([powers], ambient)
    return Monomial.from_powers(powers, n)


def _prime_payload(prime: VariablePrime) -> dict:
    return {"variables": list(prime.sorted_variables), "height": prime.height}


def _profile_payload(profile: HypergraphProfile) -> dict:
    return {
        "degree": profile.degree,
        "block_count": profile.block_count,
        "block_size": profile.block_size,
        "blocks": [sorted(b) for b in profile.blocks.blocks],
        "complete": profile.complete,
        "balanced": profile.balanced,
    }


def _factor_text(factors, tail: Optional[MonomialIdeal]) -> str:
    parts = []
    for prime, a in factors:
        body = "(" + ", ".join(f"x{i}" for i in prime.sorted_variables) + ")"
        parts.append(body if a == 1 else f"{body}^{a}")
    if tail is not None:
        parts.append(f"({tail})")
    return " * ".join(parts)


def _classification_payload(
    outcome: Classification, ideal: Optional[MonomialIdeal]
) -> dict:
    payload: dict = {
        "schema": SCHEMA,
        "tool_version": VERSION,
        "kind": "classification",
        "tag": outcome.tag,
        "case": _CASE_LABELS.get(outcome.tag),
        "certificate": None,
        "ass_primes": None,
        "heights": None,
        "profile": None,
        "checks": None,
        "input_canonical": None,
        "ambient": None,
    }
    if isinstance(outcome, MaximalPower):
        payload["certificate"] = {"degree": outcome.degree}
    elif isinstance(outcome, PrimePowerProduct):
        payload["certificate"] = {
            "factors": [
                {"variables": list(p.sorted_variables), "exponent": a}
                for p, a in outcome.factors
            ]
        }
    elif isinstance(outcome, PrimePowerTimesMatroidal):
        payload["certificate"] = {
            "factors": [
                {"variables": list(p.sorted_variables), "exponent": a}
                for p, a in outcome.factors
            ],
            "tail": str(outcome.tail),
        }
    elif isinstance(outcome, UnmixedMatroidal):
        payload["certificate"] = {"generators": str(outcome.ideal)}
        payload["profile"] = _profile_payload(outcome.profile)
    elif isinstance(outcome, NotUnmixed):
        payload["certificate"] = {
            "witness": [_prime_payload(p) for p in outcome.witness]
        }
    if ideal is not None:
        payload["input_canonical"] = str(ideal)
        payload["ambient"] = ideal.ambient
        primes = sorted(associated_primes(ideal), key=lambda p: p.sorted_variables)
        payload["ass_primes"] = [_prime_payload(p) for p in primes]
        heights = sorted({p.height for p in primes})
        payload["heights"] = heights
        rebuilt = reconstruct(outcome, ideal.ambient)
        payload["checks"] = {
            "unmixed": len(heights) == 1,
            "reconstruction_exact": None if rebuilt is None else rebuilt == ideal,
        }
    return payload


def _classification_human(outcome: Classification, ideal: Optional[MonomialIdeal]) -> str:
    lines = []
    if ideal is not None:
        lines.append(f"ideal: {ideal} ({ideal.ambient} variables)")
    if isinstance(outcome, NotUnmixed):
        p, q = outcome.witness
        lines.append("unmixed: no")
        lines.append(
            f"witness: {p} has height {p.height}, {q} has height {q.height}"
        )
        return "\n".join(lines)
    lines.append("unmixed: yes")
    label = _CASE_LABELS[outcome.tag]
    if isinstance(outcome, MaximalPower):
        lines.append(f"case {label}: power of the full variable ideal")
        lines.append(f"certificate: (all variables)^{outcome.degree}")
    elif isinstance(outcome, PrimePowerProduct):
        lines.append(f"case {label}: product of disjoint prime powers")
        lines.append(f"certificate: {_factor_text(outcome.factors, None)}")
    elif isinstance(outcome, PrimePowerTimesMatroidal):
        lines.append(
            f"case {label}: disjoint prime powers times a squarefree factor"
        )
        lines.append(f"certificate: {_factor_text(outcome.factors, outcome.tail)}")
    elif isinstance(outcome, UnmixedMatroidal):
        p = outcome.profile
        shape = (
            f"complete={'yes' if p.complete else 'no'}, "
            f"balanced={'yes' if p.balanced else 'no'}, "
            f"blocks={[sorted(b) for b in p.blocks.blocks]}"
        )
        lines.append(f"case {label}: squarefree with exchange, degree {p.degree}")
        lines.append(f"profile: {shape}")
    if ideal is not None:
        rebuilt = reconstruct(outcome, ideal.ambient)
        lines.append(
            "reconstruction: exact" if rebuilt == ideal else "reconstruction: DIFFERS"
        )
    return "\n".join(lines)


def _verification_payload(report: VerificationReport) -> dict:
    return {
        "schema": SCHEMA,
        "tool_version": VERSION,
        "kind": "verification",
        "target": report.target,
        "params": {k: v for k, v in report.params},
        "universe_size": report.universe_size,
        "matroidal_count": report.matroidal_count,
        "unmixed_count": report.unmixed_count,
        "counterexamples": [
            {"ideal": str(ideal), "ambient": ideal.ambient, "claim": tag}
            for ideal, tag in report.counterexamples
        ],
    }


def _verification_human(report: VerificationReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in report.params)
    lines = [
        f"verification: {report.target} ({params})",
        f"universe: {report.universe_size}, matroidal: {report.matroidal_count}, "
        f"unmixed: {report.unmixed_count}",
        f"counterexamples: {len(report.counterexamples)}",
    ]
    for ideal, tag in report.counterexamples:
        lines.append(f"  - [{tag}] {ideal} (n={ideal.ambient})")
    return "\n".join(lines)


def _component_text(component: IrreducibleComponent) -> str:
    return "(" + ", ".join(
        f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in component.powers
    ) + ")"


def emit_report(
    result: Union[
        Classification,
        VerificationReport,
        PrimePowerDecomposition,
        HeightBoundsReport,
        Sequence[IrreducibleComponent],
        frozenset,
    ],
    format: str = "human",
    ideal: Optional[MonomialIdeal] = None,
) -> str:
    """Render a result as human text or as the versioned structured document.

    `ideal` optionally supplies the classified input so the report can include
    its canonical form, associated primes, heights, and reconstruction check.
    """
    if format not in ("human", "structured"):
        raise ValueError(f"unknown format {format!r}")
    structured = format == "structured"
    if isinstance(result, Classification):
        if structured:
            return json.dumps(_classification_payload(result, ideal), indent=2, sort_keys=True)
        return _classification_human(result, ideal)
    if isinstance(result, VerificationReport):
        if structured:
            return json.dumps(_verification_payload(result), indent=2, sort_keys=True)
        return _verification_human(result)
    if isinstance(result, PrimePowerDecomposition):
        if structured:
            payload = {
                "schema": SCHEMA,
                "tool_version": VERSION,
                "kind": "prime-power-decomposition",
                "components": [
                    {"variables": list(p.sorted_variables), "exponent": a}
                    for p, a in result.components
                ],
            }
            return json.dumps(payload, indent=2, sort_keys=True)
        return "\n".join(
            f"{p}^{a}" if a > 1 else str(p) for p, a in result.components
        )
    if isinstance(result, HeightBoundsReport):
        if structured:
            payload = {
                "schema": SCHEMA,
                "tool_version": VERSION,
                "kind": "height-bounds",
                "lower": [result.lower.numerator, result.lower.denominator],
                "upper": result.upper,
                "actual": result.actual,
                "predicted": result.predicted,
                "equality_case": result.equality_case,
            }
            return json.dumps(payload, indent=2, sort_keys=True)
        case = result.equality_case or "none"
        return (
            f"height {result.actual} within [{result.lower}, {result.upper}]; "
            f"predicted {result.predicted}; equality: {case}"
        )
    if isinstance(result, frozenset):
        primes = sorted(result, key=lambda p: p.sorted_variables)
        if structured:
            payload = {
                "schema": SCHEMA,
                "tool_version": VERSION,
                "kind": "associated-primes",
                "primes": [_prime_payload(p) for p in primes],
            }
            return json.dumps(payload, indent=2, sort_keys=True)
        return "\n".join(str(p) for p in primes)
    if isinstance(result, (list, tuple)) and all(
        isinstance(c, IrreducibleComponent) for c in result
    ):
        if structured:
            payload = {
                "schema": SCHEMA,
                "tool_version": VERSION,
                "kind": "irreducible-decomposition",
                "components": [
                    {"powers": [[v, e] for v, e in c.powers]} for c in result
                ],
            }
            return json.dumps(payload, indent=2, sort_keys=True)
        return "\n".join(_component_text(c) for c in result)
    raise TypeError(f"cannot serialize {type(result).__name__}")
