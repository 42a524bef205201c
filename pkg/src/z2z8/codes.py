"""Concrete code machinery over Z2^alpha x Z_{2^e}^beta for e in {2, 3}.

Words carry a binary segment and a modular segment.  Generator matrices in
standard block form are assembled from their named free blocks, spans are
materialized explicitly, and an arbitrary subgroup can be classified back
to its type from torsion sizes alone.  The parity-check construction is
validated behaviorally against `dual_bruteforce`, which scans the ambient
group directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .counting import TypeProfile
from .errors import AmbientTooLargeError, NotASubgroupError

__all__ = [
    "MixedWord",
    "Code",
    "StandardFormMatrix",
    "ParityCheckMatrix",
    "inner_product",
    "assemble",
    "span",
    "classify_type",
    "parity_check",
    "dual_bruteforce",
    "phi_reduce",
    "random_standard_form",
    "random_standard_form_z4",
    "zero_standard_form",
    "zero_standard_form_z4",
    "ambient_words",
    "format_matrix",
    "format_words",
    "parse_words",
]

AMBIENT_GUARD_BITS = 24  # dual_bruteforce refuses ambients above 2^24 words


@dataclass(frozen=True)
class MixedWord:
    """One element of Z2^alpha x Z_{2^e}^beta."""

    bin: tuple[int, ...]
    mod: tuple[int, ...]
    e: int = 3

    def __post_init__(self) -> None:
        if self.e not in (2, 3):
            raise ValueError(f"ring exponent must be 2 or 3, got {self.e}")
        m = 1 << self.e
        if any(x not in (0, 1) for x in self.bin):
            raise ValueError(f"binary entries must be 0/1, got {self.bin}")
        if any(not 0 <= x < m for x in self.mod):
            raise ValueError(f"modular entries must lie in [0,{m}), got {self.mod}")

    @property
    def alpha(self) -> int:
        return len(self.bin)

    @property
    def beta(self) -> int:
        return len(self.mod)

    def __add__(self, other: "MixedWord") -> "MixedWord":
        _check_same_ambient(self, other)
        m = 1 << self.e
        return MixedWord(
            tuple((a + b) & 1 for a, b in zip(self.bin, other.bin)),
            tuple((a + b) % m for a, b in zip(self.mod, other.mod)),
            self.e,
        )

    def __rmul__(self, t: int) -> "MixedWord":
        m = 1 << self.e
        return MixedWord(
            tuple((t * a) & 1 for a in self.bin),
            tuple((t * a) % m for a in self.mod),
            self.e,
        )

    def __neg__(self) -> "MixedWord":
        return (-1) * self

    def is_zero(self) -> bool:
        return not any(self.bin) and not any(self.mod)

    def order(self) -> int:
        """Additive order; always a power of two dividing 2^e."""
        t, w = 1, self
        while not w.is_zero():
            w = w + w
            t *= 2
        return t

    def __str__(self) -> str:
        left = " ".join(str(x) for x in self.bin)
        right = " ".join(str(x) for x in self.mod)
        return f"{left} | {right}".strip()

    @staticmethod
    def zero(alpha: int, beta: int, e: int = 3) -> "MixedWord":
        return MixedWord((0,) * alpha, (0,) * beta, e)


def _check_same_ambient(u: MixedWord, v: MixedWord) -> None:
    if (u.alpha, u.beta, u.e) != (v.alpha, v.beta, v.e):
        raise ValueError(
            f"ambient mismatch: ({u.alpha},{u.beta},e={u.e}) vs ({v.alpha},{v.beta},e={v.e})"
        )


def inner_product(u: MixedWord, v: MixedWord) -> int:
    """2^(e-1) * (binary dot) + (modular dot), reduced mod 2^e."""
    _check_same_ambient(u, v)
    m = 1 << u.e
    b = sum(a * c for a, c in zip(u.bin, v.bin))
    z = sum(a * c for a, c in zip(u.mod, v.mod))
    return ((m // 2) * b + z) % m


def ambient_words(alpha: int, beta: int, e: int = 3) -> Iterator[MixedWord]:
    """All words of Z2^alpha x Z_{2^e}^beta, in lexicographic order."""
    for bins in product((0, 1), repeat=alpha):
        for mods in product(range(1 << e), repeat=beta):
            yield MixedWord(bins, mods, e)


# ---------------------------------------------------------------------------
# codes
# ---------------------------------------------------------------------------

class Code:
    """An explicitly materialized additive code: the set of its words."""

    def __init__(self, words: Iterable[MixedWord], alpha: int, beta: int, e: int = 3):
        self.alpha = alpha
        self.beta = beta
        self.e = e
        self.words = frozenset(words)
        for w in self.words:
            if (w.alpha, w.beta, w.e) != (alpha, beta, e):
                raise ValueError(f"word {w} does not live in ({alpha},{beta},e={e})")
        self._profile = None

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[MixedWord]:
        return iter(sorted(self.words, key=lambda w: (w.bin, w.mod)))

    def __contains__(self, w: MixedWord) -> bool:
        return w in self.words

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Code)
            and (self.alpha, self.beta, self.e) == (other.alpha, other.beta, other.e)
            and self.words == other.words
        )

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta, self.e, self.words))

    def __repr__(self) -> str:
        return f"Code(alpha={self.alpha}, beta={self.beta}, e={self.e}, size={len(self)})"

    def is_subgroup(self) -> bool:
        """Full closure check; quadratic, intended for small codes and tests."""
        z = MixedWord.zero(self.alpha, self.beta, self.e)
        if z not in self.words:
            return False
        return all(u + v in self.words for u in self.words for v in self.words)


def span(generators: Sequence[MixedWord], *, alpha: int | None = None,
         beta: int | None = None, e: int | None = None) -> Code:
    """Additive closure of the generators (ambient dims required when empty)."""
    gens = list(generators)
    if gens:
        alpha, beta, e = gens[0].alpha, gens[0].beta, gens[0].e
        for g in gens[1:]:
            _check_same_ambient(gens[0], g)
    elif alpha is None or beta is None or e is None:
        raise ValueError("empty generator list needs explicit alpha, beta, e")
    current = {MixedWord.zero(alpha, beta, e)}
    for g in gens:
        # current is a subgroup, so adjoining g unions the cosets current + j*g
        # until j*g falls back into current
        new = set(current)
        step = g
        while step not in current:
            new |= {w + step for w in current}
            step = step + g
        current = new
    return Code(current, alpha, beta, e)


def _log2_exact(n: int, what: str) -> int:
    b = n.bit_length() - 1
    if n <= 0 or 1 << b != n:
        raise NotASubgroupError(f"{what} has size {n}, not a power of two")
    return b


def classify_type(code: Code):
    """Recover the type of a subgroup from torsion sizes.

    For e = 3 returns a TypeProfile; for e = 2 returns the triple
    (k0, k1, k2).  Works on any subgroup, basis-free: the counts of elements
    killed by 2 and by 4, the total size, and the number of order <= 2
    elements with zero binary part pin the generator counts.
    """
    if code._profile is not None:
        return code._profile
    n = len(code)
    s_all = _log2_exact(n, "code")
    if MixedWord.zero(code.alpha, code.beta, code.e) not in code.words:
        raise NotASubgroupError("code does not contain the zero word")
    two_torsion = [w for w in code.words if (w + w).is_zero()]
    s1 = _log2_exact(len(two_torsion), "2-torsion")
    z = _log2_exact(len([w for w in two_torsion if not any(w.bin)]), "zero-binary 2-torsion")

    if code.e == 3:
        four_torsion = sum(1 for w in code.words if (4 * w).is_zero())
        s2 = _log2_exact(four_torsion, "4-torsion")
        k1 = s_all - s2
        k2 = s2 - s1 - k1
        k3 = z - k1 - k2
        k0 = s1 - z
        if min(k0, k1, k2, k3) < 0:
            raise NotASubgroupError(f"inconsistent torsion profile ({s1},{s2},{s_all},z={z})")
        code._profile = TypeProfile(code.alpha, code.beta, k0, k1, k2, k3)
        return code._profile

    k1 = s_all - s1
    k2 = z - k1
    k0 = s1 - z
    if min(k0, k1, k2) < 0:
        raise NotASubgroupError(f"inconsistent torsion profile ({s1},{s_all},z={z})")
    code._profile = (k0, k1, k2)
    return code._profile


# ---------------------------------------------------------------------------
# standard-form generator matrices
# ---------------------------------------------------------------------------

def _block_shapes(alpha: int, beta: int, ks: tuple[int, ...], e: int) -> dict[str, tuple[int, int, int]]:
    """name -> (rows, cols, modulus) for the free blocks of the standard form."""
    if e == 3:
        k0, k1, k2, k3 = ks
        r0 = alpha - k0
        r3 = beta - (k1 + k2 + k3)
        return {
            "Abar01": (k0, r0, 2),
            "T03": (k0, r3, 2),
            "S1": (k1, r0, 2),
            "A01": (k1, k2, 8),
            "A02": (k1, k3, 8),
            "A03": (k1, r3, 8),
            "S2": (k2, r0, 2),
            "A12": (k2, k3, 4),
            "A13": (k2, r3, 4),
            "A23": (k3, r3, 2),
        }
    k0, k1, k2 = ks
    r0 = alpha - k0
    r2 = beta - (k1 + k2)
    return {
        "Abar01": (k0, r0, 2),
        "T02": (k0, r2, 2),
        "S1": (k1, r0, 2),
        "A01": (k1, k2, 4),
        "A02": (k1, r2, 4),
        "A12": (k2, r2, 2),
    }


def _validate_ks(alpha: int, beta: int, ks: tuple[int, ...], e: int) -> None:
    expected = 4 if e == 3 else 3
    if len(ks) != expected:
        raise ValueError(f"e={e} standard form needs {expected} generator counts, got {ks}")
    if any(k < 0 for k in ks) or alpha < 0 or beta < 0:
        raise ValueError(f"negative dimensions in ({alpha},{beta};{ks})")
    if ks[0] > alpha or sum(ks[1:]) > beta:
        raise ValueError(f"profile ({alpha},{beta};{','.join(map(str, ks))}) is not realizable")


@dataclass(frozen=True)
class StandardFormMatrix:
    """Block generator matrix in standard form, stored by its free blocks.

    Blocks hold the unscaled entries; `assemble` applies the per-stripe
    identity scaling (1, 1, 2, 4 down the stripes for e = 3).
    """

    alpha: int
    beta: int
    e: int
    ks: tuple[int, ...]
    blocks: dict[str, tuple[tuple[int, ...], ...]]

    def __post_init__(self) -> None:
        _validate_ks(self.alpha, self.beta, self.ks, self.e)
        shapes = _block_shapes(self.alpha, self.beta, self.ks, self.e)
        if set(self.blocks) != set(shapes):
            raise ValueError(f"expected blocks {sorted(shapes)}, got {sorted(self.blocks)}")
        for name, (rows, cols, modulus) in shapes.items():
            blk = self.blocks[name]
            if len(blk) != rows or any(len(r) != cols for r in blk):
                raise ValueError(f"block {name} must be {rows}x{cols}")
            if any(not 0 <= x < modulus for row in blk for x in row):
                raise ValueError(f"block {name} entries must lie in [0,{modulus})")

    @property
    def profile(self) -> TypeProfile:
        if self.e != 3:
            raise ValueError("TypeProfile view only exists for e = 3")
        return TypeProfile(self.alpha, self.beta, *self.ks)


def _blockrow(m: StandardFormMatrix, name: str, i: int) -> tuple[int, ...]:
    return m.blocks[name][i]


def assemble(matrix: StandardFormMatrix) -> list[MixedWord]:
    """Generator rows of the standard form, identity blocks and scalings in place."""
    a, e = matrix.alpha, matrix.e
    mod = 1 << e
    rows: list[MixedWord] = []

    def unit(n: int, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(n))

    def scaled(v: Sequence[int], c: int) -> tuple[int, ...]:
        return tuple((c * x) % mod for x in v)

    if e == 3:
        k0, k1, k2, k3 = matrix.ks
        for i in range(k0):
            bin_part = unit(k0, i) + _blockrow(matrix, "Abar01", i)
            mod_part = (0,) * k1 + (0,) * k2 + (0,) * k3 + scaled(_blockrow(matrix, "T03", i), 4)
            rows.append(MixedWord(bin_part, mod_part, e))
        for j in range(k1):
            bin_part = (0,) * k0 + _blockrow(matrix, "S1", j)
            mod_part = unit(k1, j) + _blockrow(matrix, "A01", j) + _blockrow(matrix, "A02", j) \
                + _blockrow(matrix, "A03", j)
            rows.append(MixedWord(bin_part, mod_part, e))
        for m in range(k2):
            bin_part = (0,) * k0 + _blockrow(matrix, "S2", m)
            mod_part = (0,) * k1 + scaled(unit(k2, m), 2) + scaled(_blockrow(matrix, "A12", m), 2) \
                + scaled(_blockrow(matrix, "A13", m), 2)
            rows.append(MixedWord(bin_part, mod_part, e))
        for n in range(k3):
            bin_part = (0,) * a
            mod_part = (0,) * k1 + (0,) * k2 + scaled(unit(k3, n), 4) \
                + scaled(_blockrow(matrix, "A23", n), 4)
            rows.append(MixedWord(bin_part, mod_part, e))
        return rows

    k0, k1, k2 = matrix.ks
    for i in range(k0):
        bin_part = unit(k0, i) + _blockrow(matrix, "Abar01", i)
        mod_part = (0,) * k1 + (0,) * k2 + scaled(_blockrow(matrix, "T02", i), 2)
        rows.append(MixedWord(bin_part, mod_part, e))
    for j in range(k1):
        bin_part = (0,) * k0 + _blockrow(matrix, "S1", j)
        mod_part = unit(k1, j) + _blockrow(matrix, "A01", j) + _blockrow(matrix, "A02", j)
        rows.append(MixedWord(bin_part, mod_part, e))
    for m in range(k2):
        bin_part = (0,) * a
        mod_part = (0,) * k1 + scaled(unit(k2, m), 2) + scaled(_blockrow(matrix, "A12", m), 2)
        rows.append(MixedWord(bin_part, mod_part, e))
    return rows


def _zero_blocks(alpha: int, beta: int, ks: tuple[int, ...], e: int):
    shapes = _block_shapes(alpha, beta, ks, e)
    return {
        name: tuple((0,) * cols for _ in range(rows))
        for name, (rows, cols, _) in shapes.items()
    }


def zero_standard_form(profile: TypeProfile) -> StandardFormMatrix:
    """Standard form over Z8 columns with every free block zero."""
    ks = profile.ks
    return StandardFormMatrix(profile.alpha, profile.beta, 3, ks,
                              _zero_blocks(profile.alpha, profile.beta, ks, 3))


def zero_standard_form_z4(alpha: int, beta: int, k0: int, k1: int, k2: int) -> StandardFormMatrix:
    ks = (k0, k1, k2)
    return StandardFormMatrix(alpha, beta, 2, ks, _zero_blocks(alpha, beta, ks, 2))


def _random_blocks(alpha: int, beta: int, ks: tuple[int, ...], e: int, seed: int):
    rng = random.Random(seed)
    blocks = {}
    for name, (rows, cols, modulus) in sorted(_block_shapes(alpha, beta, ks, e).items()):
        blocks[name] = tuple(
            tuple(rng.randrange(modulus) for _ in range(cols)) for _ in range(rows)
        )
    return blocks


def random_standard_form(profile: TypeProfile, seed: int) -> StandardFormMatrix:
    """Standard form with uniformly drawn free blocks; reproducible per seed."""
    if not profile.is_valid():
        raise ValueError(f"invalid type profile {profile}")
    ks = profile.ks
    return StandardFormMatrix(profile.alpha, profile.beta, 3, ks,
                              _random_blocks(profile.alpha, profile.beta, ks, 3, seed))


def random_standard_form_z4(alpha: int, beta: int, k0: int, k1: int, k2: int,
                            seed: int) -> StandardFormMatrix:
    ks = (k0, k1, k2)
    _validate_ks(alpha, beta, ks, 2)
    return StandardFormMatrix(alpha, beta, 2, ks, _random_blocks(alpha, beta, ks, 2, seed))


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParityCheckMatrix:
    """Generator rows for the dual code, in block row stripes (a-k0, b-l, k3, k2)."""

    alpha: int
    beta: int
    e: int
    rows: tuple[MixedWord, ...]


def _transpose(blk: Sequence[Sequence[int]], rows: int, cols: int):
    # blk is rows x cols; return cols x rows as nested tuples of plain ints
    return tuple(tuple(blk[r][c] for r in range(rows)) for c in range(cols))


def _matmul(x, y, inner: int, cols: int):
    # integer matrix product with explicit shape so empty blocks keep width
    return tuple(
        tuple(sum(xr[i] * y[i][c] for i in range(inner)) for c in range(cols))
        for xr in x
    )


def _madd(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(out, m))
    return out


def _mscale(c, m):
    return tuple(tuple(c * x for x in row) for row in m)


def parity_check(matrix: StandardFormMatrix) -> ParityCheckMatrix:
    """Generator matrix of the dual of a standard-form code (e = 3 only).

    Entries are formed from transposes and products of the free blocks and
    reduced to canonical residues per column stripe (mod 2 on binary
    columns, mod 8 on Z8 columns).
    """
    if matrix.e != 3:
        raise ValueError("parity-check construction is only provided for e = 3")
    a, b = matrix.alpha, matrix.beta
    k0, k1, k2, k3 = matrix.ks
    r0 = a - k0
    r3 = b - (k1 + k2 + k3)

    abar01_t = _transpose(matrix.blocks["Abar01"], k0, r0)
    t03_t = _transpose(matrix.blocks["T03"], k0, r3)
    s1_t = _transpose(matrix.blocks["S1"], k1, r0)
    s2_t = _transpose(matrix.blocks["S2"], k2, r0)
    a01_t = _transpose(matrix.blocks["A01"], k1, k2)
    a02_t = _transpose(matrix.blocks["A02"], k1, k3)
    a03_t = _transpose(matrix.blocks["A03"], k1, r3)
    a12_t = _transpose(matrix.blocks["A12"], k2, k3)
    a13_t = _transpose(matrix.blocks["A13"], k2, r3)
    a23_t = _transpose(matrix.blocks["A23"], k3, r3)

    # the k1-wide column stack sitting over all four row stripes
    p0 = _madd(_mscale(-4, s1_t), _mscale(2, _matmul(s2_t, a01_t, k2, k1)))
    p1 = _madd(
        _mscale(-1, a03_t),
        _matmul(a13_t, a01_t, k2, k1),
        _matmul(a23_t, a02_t, k3, k1),
        _mscale(-1, _matmul(a23_t, _matmul(a12_t, a01_t, k2, k1), k3, k1)),
    )
    p2 = _madd(_mscale(-2, a02_t), _mscale(2, _matmul(a12_t, a01_t, k2, k1)))
    p3 = _mscale(-4, a01_t)

    q1 = _madd(_mscale(-1, a13_t), _matmul(a23_t, a12_t, k3, k2))  # k2 cols of stripe 1

    def unit(n: int, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(n))

    def bin2(v: Sequence[int]) -> tuple[int, ...]:
        return tuple(x % 2 for x in v)

    def mod8(v: Sequence[int]) -> tuple[int, ...]:
        return tuple(x % 8 for x in v)

    rows: list[MixedWord] = []
    for i in range(r0):
        bin_part = bin2(tuple(-x for x in abar01_t[i])) + unit(r0, i)
        mod_part = mod8(p0[i] + tuple(-2 * x for x in s2_t[i]) + (0,) * k3 + (0,) * r3)
        rows.append(MixedWord(bin_part, mod_part, 3))
    for i in range(r3):
        bin_part = bin2(tuple(-x for x in t03_t[i])) + (0,) * r0
        mod_part = mod8(p1[i] + q1[i] + tuple(-x for x in a23_t[i]) + unit(r3, i))
        rows.append(MixedWord(bin_part, mod_part, 3))
    for i in range(k3):
        bin_part = (0,) * a
        mod_part = mod8(p2[i] + tuple(-2 * x for x in a12_t[i]) + tuple(2 * x for x in unit(k3, i)) + (0,) * r3)
        rows.append(MixedWord(bin_part, mod_part, 3))
    for i in range(k2):
        bin_part = (0,) * a
        mod_part = mod8(p3[i] + tuple(4 * x for x in unit(k2, i)) + (0,) * k3 + (0,) * r3)
        rows.append(MixedWord(bin_part, mod_part, 3))
    return ParityCheckMatrix(a, b, 3, tuple(rows))


def _generating_subset(code: Code) -> list[MixedWord]:
    """A small generating set of a materialized code, found greedily."""
    gens: list[MixedWord] = []
    covered = {MixedWord.zero(code.alpha, code.beta, code.e)}
    for w in code:
        if w not in covered:
            gens.append(w)
            covered = span(gens).words
            if len(covered) == len(code):
                break
    return gens


def dual_bruteforce(code: Code) -> Code:
    """All ambient words orthogonal to every codeword, by direct scan.

    Orthogonality is checked against a generating subset; by bilinearity of
    the inner product this coincides with orthogonality to every codeword.
    """
    bits = code.alpha + code.e * code.beta
    if bits > AMBIENT_GUARD_BITS:
        raise AmbientTooLargeError(
            f"ambient 2^{bits} exceeds the 2^{AMBIENT_GUARD_BITS} brute-force guard"
        )
    gens = _generating_subset(code)
    dual = [
        v
        for v in ambient_words(code.alpha, code.beta, code.e)
        if all(inner_product(g, v) == 0 for g in gens)
    ]
    return Code(dual, code.alpha, code.beta, code.e)


def phi_reduce(code: Code) -> Code:
    """Image of a Z8-column code under entrywise mod-4 reduction of the Z8 part."""
    if code.e != 3:
        raise ValueError("phi_reduce expects a code with e = 3")
    words = {
        MixedWord(w.bin, tuple(x % 4 for x in w.mod), 2) for w in code.words
    }
    return Code(words, code.alpha, code.beta, 2)


# ---------------------------------------------------------------------------
# text serialization
# ---------------------------------------------------------------------------

def _format_word(w: MixedWord) -> str:
    left = " ".join(str(x) for x in w.bin)
    right = " ".join(str(x) for x in w.mod)
    return f"{left} | {right}".strip()


def format_matrix(alpha: int, beta: int, e: int, rows: Sequence[MixedWord]) -> str:
    """Line format: header `alpha beta e`, then one `bin | mod` row per line."""
    lines = [f"{alpha} {beta} {e}"]
    lines.extend(_format_word(w) for w in rows)
    return "\n".join(lines) + "\n"


def format_words(code: Code) -> str:
    return format_matrix(code.alpha, code.beta, code.e, list(code))


def parse_words(text: str) -> tuple[int, int, int, list[MixedWord]]:
    """Inverse of format_matrix; ignores blank and `#` comment lines."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    alpha, beta, e = (int(x) for x in lines[0].split())
    rows = []
    for ln in lines[1:]:
        left, _, right = ln.partition("|")
        bin_part = tuple(int(x) for x in left.split())
        mod_part = tuple(int(x) for x in right.split())
        if len(bin_part) != alpha or len(mod_part) != beta:
            raise ValueError(f"row {ln!r} does not match header ({alpha},{beta})")
        rows.append(MixedWord(bin_part, mod_part, e))
    return alpha, beta, e, rows
