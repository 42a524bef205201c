"""Ground-truth engine: exhaustive subgroup enumeration and type census.

Every subgroup of Z2^alpha x Z_{2^e}^beta (desk scale only) is produced by
a breadth-first walk of the subgroup lattice, classified through
`codes.classify_type`, and tallied into a census that `verify_formula`
compares against the counting formulas profile by profile.

The walk grows layer by layer: in a finite abelian 2-group every maximal
subgroup of T has index 2, so every T is reached from some already-known S
by adjoining a single element g with 2g in S, and T = S + (S + g).  Words
are packed into integers (4 bits per coordinate) so group addition is one
add-and-mask.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from . import codes, counting
from .codes import Code, MixedWord
from .errors import AmbientTooLargeError

__all__ = [
    "TypeCensus",
    "VerifyRow",
    "VerifyReport",
    "enumerate_subgroups",
    "census",
    "formula_census",
    "verify_formula",
    "census_to_json",
]

AMBIENT_GUARD = 1 << 16  # enumeration refuses ambient groups of 2^16 words or more


class _Packed:
    """Packed-integer arithmetic for one ambient group."""

    def __init__(self, alpha: int, beta: int, e: int):
        if e not in (2, 3):
            raise ValueError(f"ring exponent must be 2 or 3, got {e}")
        if alpha < 0 or beta < 0:
            raise ValueError("dimensions must be non-negative")
        self.alpha, self.beta, self.e = alpha, beta, e
        self.size = 2**alpha * (1 << e) ** beta
        mods = [2] * alpha + [1 << e] * beta
        self.mask = 0
        for i, m in enumerate(mods):
            self.mask |= (m - 1) << (4 * i)
        self.elements = []
        for digits in product(*(range(m) for m in mods)):
            x = 0
            for i, d in enumerate(digits):
                x |= d << (4 * i)
            self.elements.append(x)
        self.double = {x: (x + x) & self.mask for x in self.elements}

    def add(self, x: int, y: int) -> int:
        return (x + y) & self.mask

    def decode(self, x: int) -> MixedWord:
        digits = [(x >> (4 * i)) & 0xF for i in range(self.alpha + self.beta)]
        return MixedWord(tuple(digits[: self.alpha]), tuple(digits[self.alpha:]), self.e)


def _check_guard(alpha: int, beta: int, e: int) -> _Packed:
    packed = _Packed(alpha, beta, e)
    if packed.size >= AMBIENT_GUARD:
        raise AmbientTooLargeError(
            f"ambient group has {packed.size} words, at or above the {AMBIENT_GUARD} guard"
        )
    return packed


def _subgroup_sets(packed: _Packed) -> list[frozenset[int]]:
    add = packed.add
    double = packed.double
    elements = packed.elements
    zero = frozenset([0])
    found: set[frozenset[int]] = {zero}
    frontier = [zero]
    while frontier:
        next_frontier = []
        for sub in frontier:
            for g in elements:
                if g in sub or double[g] not in sub:
                    continue
                enlarged = frozenset(sub | {add(s, g) for s in sub})
                if enlarged not in found:
                    found.add(enlarged)
                    next_frontier.append(enlarged)
        frontier = next_frontier
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def enumerate_subgroups(alpha: int, beta: int, e: int = 3) -> list[Code]:
    """Every distinct subgroup of Z2^alpha x Z_{2^e}^beta, exactly once.

    Ordered by size then by packed word content, so repeated runs agree.
    """
    packed = _check_guard(alpha, beta, e)
    return [
        Code((packed.decode(x) for x in sub), alpha, beta, e)
        for sub in _subgroup_sets(packed)
    ]


@dataclass(frozen=True)
class TypeCensus:
    """Exact per-type subgroup counts for one ambient group."""

    alpha: int
    beta: int
    e: int
    counts: dict[tuple[int, ...], int]  # (k0,k1,k2,k3) keys for e=3, (k0,k1,k2) for e=2
    total_subgroups: int
    provenance: str  # "enumeration" or "formula"


def census(alpha: int, beta: int, e: int = 3) -> TypeCensus:
    """Enumerate all subgroups and tally them by classified type."""
    tallies: dict[tuple[int, ...], int] = {}
    total = 0
    for code in enumerate_subgroups(alpha, beta, e):
        t = codes.classify_type(code)
        key = t.ks if e == 3 else t
        tallies[key] = tallies.get(key, 0) + 1
        total += 1
    return TypeCensus(alpha, beta, e, dict(sorted(tallies.items())), total, "enumeration")


def formula_census(alpha: int, beta: int, e: int = 3) -> TypeCensus:
    """Census predicted by the counting formulas, one entry per valid profile."""
    counts: dict[tuple[int, ...], int] = {}
    if e == 3:
        for k0 in range(alpha + 1):
            for k1 in range(beta + 1):
                for k2 in range(beta - k1 + 1):
                    for k3 in range(beta - k1 - k2 + 1):
                        profile = counting.TypeProfile(alpha, beta, k0, k1, k2, k3)
                        counts[profile.ks] = counting.count(profile)
    else:
        for k0 in range(alpha + 1):
            for k1 in range(beta + 1):
                for k2 in range(beta - k1 + 1):
                    counts[(k0, k1, k2)] = counting.count_z2z4(alpha, beta, k0, k1, k2)
    total = sum(counts.values())
    return TypeCensus(alpha, beta, e, dict(sorted(counts.items())), total, "formula")


@dataclass(frozen=True)
class VerifyRow:
    profile: tuple[int, ...]
    enumerated: int
    formula: int

    @property
    def match(self) -> bool:
        return self.enumerated == self.formula


@dataclass(frozen=True)
class VerifyReport:
    alpha: int
    beta: int
    e: int
    rows: tuple[VerifyRow, ...]
    total_enumerated: int
    total_formula: int

    @property
    def all_match(self) -> bool:
        return self.total_enumerated == self.total_formula and all(r.match for r in self.rows)


def verify_formula(alpha: int, beta: int, e: int = 3) -> VerifyReport:
    """Compare the enumerated census with the formula, profile by profile."""
    enumerated = census(alpha, beta, e)
    formula = formula_census(alpha, beta, e)
    keys = sorted(set(enumerated.counts) | set(formula.counts))
    rows = tuple(
        VerifyRow(k, enumerated.counts.get(k, 0), formula.counts.get(k, 0)) for k in keys
    )
    return VerifyReport(alpha, beta, e, rows, enumerated.total_subgroups, formula.total_subgroups)


def census_to_json(c: TypeCensus) -> str:
    """JSON with counts as decimal strings, stable profile order."""
    doc = {
        "alpha": c.alpha,
        "beta": c.beta,
        "e": c.e,
        "total": str(c.total_subgroups),
        "provenance": c.provenance,
        "counts": [
            {"profile": list(profile), "count": str(n)}
            for profile, n in sorted(c.counts.items())
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
