"""Exact q-combinatorics kernel: q-integers, q-factorials, q-binomials, q-multinomials.

Everything here is plain arbitrary-precision integer arithmetic.  Division
happens only where divisibility is guaranteed and is checked at every step.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["q_integer", "q_factorial", "q_binomial", "q_multinomial"]


def _check_args(n: int, q: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q}")


def q_integer(n: int, q: int) -> int:
    """[n]_q = 1 + q + ... + q^(n-1); 0 when n = 0."""
    _check_args(n, q)
    return (q**n - 1) // (q - 1)


def q_factorial(n: int, q: int) -> int:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q; empty product 1 when n = 0."""
    _check_args(n, q)
    out = 1
    for i in range(1, n + 1):
        out *= q_integer(i, q)
    return out


def q_binomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial [n choose k]_q: number of k-dim subspaces of F_q^n.

    Computed as the telescoping product of exact integer ratios
    (q^(n-k+i) - 1) / (q^i - 1) for i = 1..k; each partial product is itself
    a Gaussian binomial, so every division is exact.  Returns 0 for k > n.
    """
    _check_args(n, q)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > n:
        return 0
    k = min(k, n - k)  # symmetry keeps the product short
    out = 1
    for i in range(1, k + 1):
        out, rem = divmod(out * (q ** (n - k + i) - 1), q**i - 1)
        if rem:  # pragma: no cover - guards an impossible state
            raise ArithmeticError(f"inexact division in q_binomial({n},{k},{q})")
    return out


def q_multinomial(n: int, parts: Sequence[int], q: int) -> int:
    """q-multinomial [n; k1,...,km]_q, counting flags of nested subspaces.

    The residual n - sum(parts) acts as an implicit final part.  Evaluated as
    the telescoping product [n;k1]_q [n-k1;k2]_q ...; 0 when sum(parts) > n.
    """
    _check_args(n, q)
    for k in parts:
        if k < 0:
            raise ValueError(f"parts must be non-negative, got {list(parts)}")
    if sum(parts) > n:
        return 0
    out = 1
    rest = n
    for k in parts:
        out *= q_binomial(rest, k, q)
        rest -= k
    return out
