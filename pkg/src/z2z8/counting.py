"""Counting additive codes over Z2^alpha x Z8^beta by type.

The central quantity is the number of distinct additive codes (subgroups)
of a given type (alpha, beta; k0, k1, k2, k3), known as a Mixed Generalized
Gaussian Number.  Two independent evaluations are kept side by side: the
ordered-generator product formula and a closed form built from a power of
two and Gaussian binomials/multinomials.  `count` always runs both and
insists they agree.

Specializations cover linear codes over Z8, additive codes over Z2 x Z4,
and the classical 2-binomial coefficients, plus the duality arithmetic
relating a type to the type of its dual code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import SelfCheckError
from .qnum import q_binomial, q_multinomial

__all__ = [
    "TypeProfile",
    "CountBreakdown",
    "DeltaExponents",
    "IdentityCheck",
    "IdentityReport",
    "count",
    "count_product",
    "count_closed_form",
    "count_z8",
    "count_z2z4",
    "binary_binomial_identity",
    "delta_exponents",
    "dual_type",
    "count_dual",
    "self_dual_count_condition",
    "lemma_swap_k_l",
    "check_identities",
    "valid_profiles",
]


@dataclass(frozen=True, order=True)
class TypeProfile:
    """Type (alpha, beta; k0, k1, k2, k3) of an additive code in Z2^a x Z8^b.

    k0 counts order-2 generators seen through the binary coordinates; k1, k2,
    k3 count order-8, order-4 and order-2 generators through the Z8
    coordinates.
    """

    alpha: int
    beta: int
    k0: int
    k1: int
    k2: int
    k3: int

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "k0", "k1", "k2", "k3"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")

    @property
    def l(self) -> int:
        """Total number of generators through the Z8 part."""
        return self.k1 + self.k2 + self.k3

    @property
    def ks(self) -> tuple[int, int, int, int]:
        return (self.k0, self.k1, self.k2, self.k3)

    def is_valid(self) -> bool:
        """A profile is realizable iff k0 <= alpha and k1+k2+k3 <= beta."""
        return self.k0 <= self.alpha and self.l <= self.beta

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta};{self.k0},{self.k1},{self.k2},{self.k3})"


@dataclass(frozen=True)
class CountBreakdown:
    """The eight factors of the product formula and their exact quotient."""

    n1: int
    n2: int
    n3: int
    n4: int
    d1: int
    d2: int
    d3: int
    d4: int
    total: int

    @property
    def numerator(self) -> int:
        return self.n1 * self.n2 * self.n3 * self.n4

    @property
    def denominator(self) -> int:
        return self.d1 * self.d2 * self.d3 * self.d4


@dataclass(frozen=True)
class DeltaExponents:
    """Powers of two in the closed form (delta) and its dual (delta_bar)."""

    delta: int
    delta_bar: int


def _require_valid(profile: TypeProfile) -> None:
    if not profile.is_valid():
        raise ValueError(f"invalid type profile {profile}: needs k0 <= alpha and k1+k2+k3 <= beta")


def count_product(profile: TypeProfile) -> CountBreakdown:
    """Evaluate the ordered-generator product formula N1..N4 / D1..D4.

    Each Ni counts ordered generator choices in the whole ambient group, the
    matching Di counts them inside one code of the type; zero ki leave the
    corresponding factors at 1.  Invalid profiles yield total 0 with all
    factors 1.
    """
    if not profile.is_valid():
        return CountBreakdown(1, 1, 1, 1, 1, 1, 1, 1, 0)
    a, b = profile.alpha, profile.beta
    k0, k1, k2, k3 = profile.ks

    n1 = n2 = n3 = n4 = 1
    for i in range(k0):
        n1 *= (2**a - 2**i) * 2**b
    for i in range(k1):
        n2 *= (8**b - 4**b * 2**i) * 2**a
    for i in range(k2):
        n3 *= (4**b - 2 ** (b + k1 + i)) * 2**a
    for i in range(k3):
        n4 *= 2**b - 2 ** (k2 + k1 + i)

    d1 = d2 = d3 = d4 = 1
    for i in range(k0):
        d1 *= 2 ** (k0 + k1 + k2 + k3) - 2 ** (k1 + k2 + k3 + i)
    for i in range(k1):
        d2 *= (8**k1 - 4**k1 * 2**i) * 2 ** (k0 + 2 * k2 + k3)
    for i in range(k2):
        d3 *= (4**k2 - 2 ** (k2 + i)) * 2 ** (k0 + 2 * k1 + k3)
    for i in range(k3):
        d4 *= 2 ** (k1 + k2 + k3) - 2 ** (k1 + k2 + i)

    total, rem = divmod(n1 * n2 * n3 * n4, d1 * d2 * d3 * d4)
    if rem:
        raise SelfCheckError(f"product formula quotient not integral at {profile}")
    return CountBreakdown(n1, n2, n3, n4, d1, d2, d3, d4, total)


def delta_exponents(profile: TypeProfile) -> DeltaExponents:
    """The exponents delta and delta_bar of the closed forms (valid profiles)."""
    _require_valid(profile)
    a = profile.alpha
    b = profile.beta
    k0, k1, k2, k3 = profile.ks
    r = b - profile.l
    delta = k0 * r + k1 * (a - k0 + 2 * r + k3) + k2 * (r + (a - k0))
    delta_bar = k1 * (a - k0) + r * (k0 + 2 * k1 + k2) + k3 * (k1 + k0)
    return DeltaExponents(delta, delta_bar)


def count_closed_form(profile: TypeProfile) -> int:
    """2^delta * [alpha; k0]_2 * [beta; k1,k2,k3]_2; 0 for invalid profiles."""
    if not profile.is_valid():
        return 0
    d = delta_exponents(profile).delta
    return (
        2**d
        * q_binomial(profile.alpha, profile.k0, 2)
        * q_multinomial(profile.beta, [profile.k1, profile.k2, profile.k3], 2)
    )


def count(profile: TypeProfile) -> int:
    """Number of distinct additive codes of the given type.

    Returns the closed form after cross-checking it against the product
    formula; a disagreement raises SelfCheckError (it would mean a bug, not
    a bad input).  Invalid profiles count 0.
    """
    closed = count_closed_form(profile)
    breakdown = count_product(profile)
    if closed != breakdown.total:
        raise SelfCheckError(
            f"formula disagreement at {profile}: closed form {closed}, product {breakdown.total}"
        )
    return closed


def count_z8(n: int, k1: int, k2: int, k3: int) -> int:
    """Number of distinct linear codes of type (k1,k2,k3) over Z8^n.

    Equal to count(1, n; 1, k1, k2, k3) divided by 2^(n - k1 - k2 - k3);
    the power of two always divides exactly.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    full = count(TypeProfile(1, n, 1, k1, k2, k3))
    if full == 0:
        return 0
    r = n - (k1 + k2 + k3)
    quot, rem = divmod(full, 2**r)
    if rem:
        raise SelfCheckError(f"Z8 specialization not divisible by 2^{r} at n={n}")
    return quot


def count_z2z4(alpha: int, beta: int, k0: int, k1: int, k2: int) -> int:
    """Number of distinct additive codes of type (alpha,beta;k0,k1,k2) over Z2 x Z4.

    A Z2Z4 code of that type is a code in Z2^alpha x Z8^beta with no order-8
    generators, so the order-4 and order-2 counts land in the k2 and k3 slots.
    """
    return count(TypeProfile(alpha, beta, k0, 0, k1, k2))


def binary_binomial_identity(n: int, k: int) -> int:
    """count(n,1;k,0,0,1), checked to equal the 2-binomial [n choose k]_2."""
    value = count(TypeProfile(n, 1, k, 0, 0, 1))
    expected = q_binomial(n, k, 2)
    if value != expected:
        raise SelfCheckError(f"binary specialization broke at (n,k)=({n},{k}): {value} != {expected}")
    return value


def dual_type(profile: TypeProfile) -> TypeProfile:
    """Type of the dual code: (alpha, beta; alpha-k0, beta-l, k3, k2)."""
    _require_valid(profile)
    return TypeProfile(
        profile.alpha,
        profile.beta,
        profile.alpha - profile.k0,
        profile.beta - profile.l,
        profile.k3,
        profile.k2,
    )


def count_dual(profile: TypeProfile) -> int:
    """Number of codes whose type is the dual of the given one.

    Evaluated directly as 2^delta_bar * [alpha; alpha-k0]_2 *
    [beta; beta-l, k3, k2]_2, which agrees with count(dual_type(profile)).
    """
    _require_valid(profile)
    d = delta_exponents(profile).delta_bar
    return (
        2**d
        * q_binomial(profile.alpha, profile.alpha - profile.k0, 2)
        * q_multinomial(profile.beta, [profile.beta - profile.l, profile.k3, profile.k2], 2)
    )


def self_dual_count_condition(profile: TypeProfile) -> bool:
    """True iff alpha*k2 = k0*(k2+k3), i.e. a type and its dual are equinumerous."""
    _require_valid(profile)
    return profile.alpha * profile.k2 == profile.k0 * (profile.k2 + profile.k3)


def lemma_swap_k_l(r: int, s: int, m: int, k: int, l: int) -> bool:
    """Whether count(r,s;m,k,l,0) equals count(r,s;m,l,k,0) (requires s = k+l, m <= r)."""
    if m > r:
        raise ValueError(f"need m <= r, got m={m}, r={r}")
    if s != k + l:
        raise ValueError(f"need s = k + l, got s={s}, k+l={k + l}")
    return count(TypeProfile(r, s, m, k, l, 0)) == count(TypeProfile(r, s, m, l, k, 0))


def valid_profiles(max_alpha: int, max_beta: int) -> Iterator[TypeProfile]:
    """All valid profiles with alpha <= max_alpha and beta <= max_beta."""
    for a in range(max_alpha + 1):
        for b in range(max_beta + 1):
            for k0 in range(a + 1):
                for k1 in range(b + 1):
                    for k2 in range(b - k1 + 1):
                        for k3 in range(b - k1 - k2 + 1):
                            yield TypeProfile(a, b, k0, k1, k2, k3)


# ---------------------------------------------------------------------------
# identity checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of sweeping one identity over a bounded profile range."""

    key: str
    statement: str
    passed: bool
    expected: bool  # False marks an identity known to be misstated
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.expected


@dataclass(frozen=True)
class IdentityReport:
    max_alpha: int
    max_beta: int
    entries: tuple[IdentityCheck, ...]

    @property
    def success(self) -> bool:
        return all(e.ok for e in self.entries)

    def entry(self, key: str) -> IdentityCheck:
        for e in self.entries:
            if e.key == key:
                return e
        raise KeyError(key)


def _n(a: int, b: int, k0: int, k1: int, k2: int, k3: int) -> int:
    return count(TypeProfile(a, b, k0, k1, k2, k3))


def check_identities(max_alpha: int, max_beta: int) -> IdentityReport:
    """Sweep the known count identities over all profiles within the bounds.

    Every identity is evaluated exactly; a failing sweep records its first
    counterexample.  Two entries cover a misstated textbook relation: the
    literal reading `lemma4-literal` is expected to fail (counterexample
    (2,2;2,1,0,0): 48 vs 24) and `lemma4-corrected` carries the repaired
    factor 2^((alpha-1)(beta-l)).
    """
    if max_alpha < 1 or max_beta < 1:
        raise ValueError("bounds must be >= 1")
    entries: list[IdentityCheck] = []

    def sweep(key: str, statement: str, cases, expected: bool = True) -> None:
        failure = ""
        passed = True
        for label, lhs, rhs in cases:
            if lhs != rhs:
                passed = False
                failure = f"first counterexample {label}: {lhs} != {rhs}"
                break
        entries.append(IdentityCheck(key, statement, passed, expected, failure))

    A, B = max_alpha, max_beta

    def cases_a():
        for r in range(1, A + 1):
            for s in range(1, B + 1):
                yield (f"(r,s)=({r},{s}) k1-slot", _n(r, s, r, s, 0, 0), 1)
                yield (f"(r,s)=({r},{s}) k2-slot", _n(r, s, r, 0, s, 0), 1)
                yield (f"(r,s)=({r},{s}) k3-slot", _n(r, s, r, 0, 0, s), 1)

    sweep("a", "N(r,s;r,s,0,0) = N(r,s;r,0,s,0) = N(r,s;r,0,0,s) = 1", cases_a())

    def cases_b():
        # ratio identity, checked multiplicatively in integers
        for r in range(1, A):
            for s in range(2, B + 1):
                lhs = _n(r + 1, s, 1, 1, 1, 0) * (2**r - 1)
                rhs = 4 * (2 ** (r + 1) - 1) * _n(r, s, 1, 1, 1, 0)
                yield (f"(r,s)=({r},{s})", lhs, rhs)

    sweep("b", "N(r+1,s;1,1,1,0)/N(r,s;1,1,1,0) = 4(2^(r+1)-1)/(2^r-1)", cases_b())

    def cases_c():
        for r in range(2, B + 1):
            closed = 2 ** (4 * r - 8) * (2 ** (r - 1) - 1) * (2**r - 1)
            yield (f"r={r}", _n(1, r, 1, 1, 1, 0), closed)

    sweep("c", "N(1,r;1,1,1,0) = 2^(4r-8) (2^(r-1)-1)(2^r-1) for r >= 2", cases_c())

    def cases_d():
        for a in range(1, A):
            for r in range(2, B + 1):
                lhs = _n(a + 1, r, 1, 1, 1, 0)
                rhs = 4 * _n(a, r, 1, 1, 1, 0) + (2**r - 1) * (2 ** (r - 1) - 1) * 2 ** (
                    3 * a + 4 * (r - 2)
                )
                yield (f"(alpha,r)=({a},{r})", lhs, rhs)

    sweep("d", "N(a+1,r;1,1,1,0) = 4 N(a,r;1,1,1,0) + (2^r-1)(2^(r-1)-1) 2^(3a+4(r-2))", cases_d())

    def cases_e():
        for j in range(1, A + 1):
            for k in range(3, B + 1):
                lhs = _n(j, k, j, 1, 1, 1)
                rhs = 2 ** ((k - 3) * (j - 1)) * _n(1, k, 1, 1, 1, 1)
                yield (f"(j,k)=({j},{k})", lhs, rhs)

    sweep("e", "N(j,k;j,1,1,1) = 2^((k-3)(j-1)) N(1,k;1,1,1,1) for k >= 3", cases_e())

    def cases_f():
        for r in range(1, A + 1):
            for s in range(2, B + 1):
                target = 2**s - 1
                yield (f"(r,s)=({r},{s}) (0,1,s-1)", _n(r, s, r, 0, 1, s - 1), target)
                yield (f"(r,s)=({r},{s}) (0,s-1,1)", _n(r, s, r, 0, s - 1, 1), target)
                yield (f"(r,s)=({r},{s}) (s-1,1,0)", _n(r, s, r, s - 1, 1, 0), target)
                yield (f"(r,s)=({r},{s}) (1,s-1,0)", _n(r, s, r, 1, s - 1, 0), target)

    sweep("f", "N(r,s;r,0,1,s-1) = ... = N(r,s;r,1,s-1,0) = 2^s - 1 for s >= 2", cases_f())

    def cases_g():
        for r in range(1, A + 1):
            for s in range(1, B + 1):
                for k in range(s + 1):
                    yield (
                        f"(r,s,k)=({r},{s},{k}) middle",
                        _n(r, s, r, 0, k, s - k),
                        _n(r, s, r, s - k, k, 0),
                    )
                    yield (
                        f"(r,s,k)=({r},{s},{k}) outer",
                        _n(r, s, r, k, 0, s - k),
                        _n(r, s, r, s - k, 0, k),
                    )

    sweep("g", "N(r,s;r,0,k,s-k) = N(r,s;r,s-k,k,0) and N(r,s;r,k,0,s-k) = N(r,s;r,s-k,0,k)", cases_g())

    def cases_h():
        for p in valid_profiles(A, B):
            d = delta_exponents(p)
            yield (
                str(p),
                d.delta - d.delta_bar,
                p.alpha * p.k2 - p.k0 * (p.k2 + p.k3),
            )

    sweep("h", "delta - delta_bar = alpha*k2 - k0*(k2+k3)", cases_h())

    def cases_lemma4_literal():
        # canonical documented counterexample first, so the report names it
        if A >= 2 and B >= 2:
            yield ("(2,2;2,1,0,0)", _n(2, 2, 2, 1, 0, 0), _n(1, 2, 1, 1, 0, 0))
        for a in range(1, A + 1):
            for b in range(1, B + 1):
                for k1 in range(b + 1):
                    for k2 in range(b - k1 + 1):
                        for k3 in range(b - k1 - k2 + 1):
                            yield (
                                f"({a},{b};{a},{k1},{k2},{k3})",
                                _n(a, b, a, k1, k2, k3),
                                _n(1, b, 1, k1, k2, k3),
                            )

    sweep(
        "lemma4-literal",
        "N(a,b;a,k1,k2,k3) = N(1,b;1,k1,k2,k3) for all a >= 1 (misstated; fails)",
        cases_lemma4_literal(),
        expected=False,
    )

    def cases_lemma4_corrected():
        for a in range(1, A + 1):
            for b in range(1, B + 1):
                for k1 in range(b + 1):
                    for k2 in range(b - k1 + 1):
                        for k3 in range(b - k1 - k2 + 1):
                            factor = 2 ** ((a - 1) * (b - k1 - k2 - k3))
                            yield (
                                f"({a},{b};{a},{k1},{k2},{k3})",
                                _n(a, b, a, k1, k2, k3),
                                factor * _n(1, b, 1, k1, k2, k3),
                            )

    sweep(
        "lemma4-corrected",
        "N(a,b;a,k1,k2,k3) = 2^((a-1)(b-l)) N(1,b;1,k1,k2,k3)",
        cases_lemma4_corrected(),
    )

    def cases_self_dual():
        for p in valid_profiles(A, B):
            condition = self_dual_count_condition(p)
            equal = count(p) == count(dual_type(p))
            yield (str(p), condition, equal)

    sweep(
        "self-dual-criterion",
        "count(p) = count(dual_type(p)) exactly when alpha*k2 = k0*(k2+k3)",
        cases_self_dual(),
    )

    def cases_swap():
        for r in range(1, A + 1):
            for m in range(r + 1):
                for s in range(1, B + 1):
                    for k in range(s + 1):
                        yield (
                            f"(r,s;m,{k},{s - k},0)",
                            _n(r, s, m, k, s - k, 0),
                            _n(r, s, m, s - k, k, 0),
                        )

    sweep("swap", "N(r,s;m,k,l,0) = N(r,s;m,l,k,0) when s = k + l", cases_swap())

    # diagonal family (r,2r;r,r,0,r): the printed fourth term 13158776832
    # must agree with the diagonal reading of the two-index row
    t1_expected = [6, 560, 714240, 13158776832]
    t1_actual = [_n(r, 2 * r, r, r, 0, r) for r in range(1, 5)]
    entries.append(
        IdentityCheck(
            "t1-fourth-term",
            "diagonal family (r,2r;r,r,0,r) reproduces {6, 560, 714240, 13158776832}",
            t1_actual == t1_expected,
            True,
            "" if t1_actual == t1_expected else f"got {t1_actual}",
        )
    )

    return IdentityReport(max_alpha, max_beta, tuple(entries))
