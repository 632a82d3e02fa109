"""Arbitrary-width modular arithmetic primitives.

These mirror the hardware building blocks of the two encryption engines:
a bit-serial Montgomery multiplier, an LSB-first Montgomery exponentiator,
a plus-minus (binary extended GCD) modular divider, a modular reducer, a
small-range discrete-log scanner, and inverse-CRT recombination.

Everything here is a pure function of immutable inputs.  Cycle costs go to
an explicitly passed :class:`~dualphe.cycles.CycleLedger`, never to shared
state.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .cycles import CycleLedger, div_cycles, exp_cycles, mul_cycles
from .errors import (
    DlogNotFound,
    EvenModulus,
    InvalidParams,
    LengthMismatch,
    NotCoprime,
    NotInvertible,
    OperandOutOfRange,
    ResidueOutOfRange,
    WidthTooSmall,
)


@dataclass(frozen=True)
class MontgomeryContext:
    """Precomputed constants for arithmetic modulo an odd M with R = 2^k_bits."""

    modulus: int
    k_bits: int
    r: int          # 2^k_bits
    r_inv: int      # R^-1 mod M
    r2: int         # R^2 mod M, for domain entry
    one_bar: int    # R mod M, the Montgomery image of 1


def mont_context_new(modulus: int, k_bits: int) -> MontgomeryContext:
    """Build a context for modulus M and radix R = 2^k_bits.

    M must be odd (so R is invertible mod M) and strictly below R.
    """
    if modulus < 3:
        raise InvalidParams(f"modulus must be >= 3, got {modulus}")
    if modulus % 2 == 0:
        raise EvenModulus(f"modulus {modulus} is even")
    if k_bits < 1:
        raise WidthTooSmall("k_bits must be positive")
    r = 1 << k_bits
    if r <= modulus:
        raise WidthTooSmall(f"2^{k_bits} <= {modulus}")
    return MontgomeryContext(
        modulus=modulus,
        k_bits=k_bits,
        r=r,
        r_inv=pow(r, -1, modulus),
        r2=(r * r) % modulus,
        one_bar=r % modulus,
    )


def _check_operand(ctx: MontgomeryContext, x: int, name: str) -> None:
    if not (0 <= x < ctx.modulus):
        raise OperandOutOfRange(f"{name}={x} not in [0, {ctx.modulus})")


def _mont_mul_raw(ctx: MontgomeryContext, x: int, y: int) -> int:
    # Bit-serial add/shift loop; no trial division. Accumulator stays < 2M.
    m = ctx.modulus
    t = 0
    for i in range(ctx.k_bits):
        if (x >> i) & 1:
            t += y
        if t & 1:
            t += m
        t >>= 1
    if t >= m:
        t -= m
    return t


def mont_mul(ctx: MontgomeryContext, x: int, y: int,
             ledger: Optional[CycleLedger] = None) -> int:
    """Montgomery product X * Y * R^-1 mod M."""
    _check_operand(ctx, x, "X")
    _check_operand(ctx, y, "Y")
    if ledger is not None:
        ledger.charge("mont_mul", mul_cycles(ctx.k_bits))
    return _mont_mul_raw(ctx, x, y)


def to_mont(ctx: MontgomeryContext, x: int,
            ledger: Optional[CycleLedger] = None) -> int:
    """Enter the Montgomery domain: x -> x * R mod M, via a product with R^2."""
    _check_operand(ctx, x, "x")
    if ledger is not None:
        ledger.charge("mont_mul", mul_cycles(ctx.k_bits))
    return _mont_mul_raw(ctx, x, ctx.r2)


def from_mont(ctx: MontgomeryContext, x_bar: int,
              ledger: Optional[CycleLedger] = None) -> int:
    """Leave the Montgomery domain: x_bar -> x_bar * R^-1 mod M."""
    _check_operand(ctx, x_bar, "x_bar")
    if ledger is not None:
        ledger.charge("mont_mul", mul_cycles(ctx.k_bits))
    return _mont_mul_raw(ctx, x_bar, 1)


def mod_mul(ctx: MontgomeryContext, x: int, y: int,
            ledger: Optional[CycleLedger] = None) -> int:
    """Ordinary-domain modular product, one multiplier slot on the ledger."""
    _check_operand(ctx, x, "x")
    _check_operand(ctx, y, "y")
    if ledger is not None:
        ledger.charge("mont_mul", mul_cycles(ctx.k_bits))
    t = _mont_mul_raw(ctx, _mont_mul_raw(ctx, x, ctx.r2), _mont_mul_raw(ctx, y, ctx.r2))
    return _mont_mul_raw(ctx, t, 1)


def mont_exp(ctx: MontgomeryContext, base: int, exponent: int,
             ledger: Optional[CycleLedger] = None, multipliers: int = 2) -> int:
    """base^exponent mod M by LSB-first binary exponentiation.

    Ordinary domain in and out.  The loop runs exactly k_bits iterations
    regardless of the exponent value (data-independent, like the hardware),
    each iteration holding one square and one conditional accumulate.  With
    two multipliers those overlap; with one they serialize -- that is the
    whole cycle-count difference between the engine layouts.
    """
    _check_operand(ctx, base, "base")
    if not (0 <= exponent < ctx.r):
        raise OperandOutOfRange(f"exponent={exponent} not in [0, 2^{ctx.k_bits})")
    if ledger is not None:
        ledger.charge("mont_exp", exp_cycles(ctx.k_bits, multipliers))
    p = _mont_mul_raw(ctx, base, ctx.r2)
    z = ctx.one_bar
    for i in range(ctx.k_bits):
        if (exponent >> i) & 1:
            z = _mont_mul_raw(ctx, z, p)
        p = _mont_mul_raw(ctx, p, p)
    return _mont_mul_raw(ctx, z, 1)


def mod_div(ctx: MontgomeryContext, a: int, b: int,
            ledger: Optional[CycleLedger] = None) -> int:
    """a * b^-1 mod M by plus-minus style binary extended GCD.

    Only shifts, additions, and subtractions; validated elsewhere against
    Fermat inversion for prime M.
    """
    _check_operand(ctx, a, "a")
    _check_operand(ctx, b, "b")
    m = ctx.modulus
    if b == 0 or gcd(b, m) != 1:
        raise NotInvertible(f"gcd({b}, {m}) != 1")
    if ledger is not None:
        ledger.charge("mod_div", div_cycles(ctx.k_bits))
    u, v = b, m
    x1, x2 = a % m, 0
    while u != 1 and v != 1:
        while u % 2 == 0:
            u >>= 1
            x1 = x1 >> 1 if x1 % 2 == 0 else (x1 + m) >> 1
        while v % 2 == 0:
            v >>= 1
            x2 = x2 >> 1 if x2 % 2 == 0 else (x2 + m) >> 1
        if u >= v:
            u -= v
            x1 = (x1 - x2) % m
        else:
            v -= u
            x2 = (x2 - x1) % m
    return x1 % m if u == 1 else x2 % m


def dlog_small(ctx: MontgomeryContext, g: int, y: int, bound: int,
               ledger: Optional[CycleLedger] = None) -> int:
    """Smallest e in [0, bound) with g^e = y mod M, by incremental scan.

    One multiply per step.  Linear scan is deliberate: the CRT moduli keep
    exponents tiny, and it mirrors a minimal hardware realization.  Swap in
    baby-step/giant-step here if bounds ever grow.
    """
    _check_operand(ctx, g, "g")
    _check_operand(ctx, y, "y")
    if bound < 1:
        raise InvalidParams("bound must be >= 1")
    g_bar = _mont_mul_raw(ctx, g, ctx.r2)
    y_bar = _mont_mul_raw(ctx, y, ctx.r2)
    acc = ctx.one_bar
    for e in range(bound):
        if ledger is not None:
            ledger.charge("dlog", mul_cycles(ctx.k_bits))
        if acc == y_bar:
            return e
        acc = _mont_mul_raw(ctx, acc, g_bar)
    raise DlogNotFound(f"no exponent below {bound} maps {g} to {y} mod {ctx.modulus}")


@dataclass(frozen=True)
class CrtBasis:
    """Pairwise-coprime moduli with precomputed inverse-CRT partials.

    ``partials[i]`` holds (D/d_i, (D/d_i)^-1 mod d_i); this table is the
    software analogue of the decryption engine's CRT memory block.
    """

    moduli: tuple
    product: int
    partials: tuple

    def __len__(self) -> int:
        return len(self.moduli)


def crt_basis_new(moduli: Sequence[int]) -> CrtBasis:
    mods = tuple(int(d) for d in moduli)
    if not mods:
        raise InvalidParams("basis needs at least one modulus")
    for d in mods:
        if d < 2:
            raise InvalidParams(f"modulus {d} < 2")
    for i in range(len(mods)):
        for j in range(i + 1, len(mods)):
            if gcd(mods[i], mods[j]) != 1:
                raise NotCoprime(f"gcd({mods[i]}, {mods[j]}) != 1")
    product = 1
    for d in mods:
        product *= d
    partials = tuple(
        (product // d, pow(product // d, -1, d)) for d in mods
    )
    return CrtBasis(moduli=mods, product=product, partials=partials)


def mod_reduce_vector(m: int, basis: CrtBasis,
                      ledger: Optional[CycleLedger] = None) -> tuple:
    """Reduce m to its residue vector (m mod d_1, ..., m mod d_t)."""
    if ledger is not None:
        ledger.charge("mod_reduce", len(basis))
    return tuple(m % d for d in basis.moduli)


def crt_recombine(residues: Sequence[int], basis: CrtBasis) -> int:
    """Unique m < D with m = residue_i mod d_i, by the inverse-CRT sum."""
    if len(residues) != len(basis):
        raise LengthMismatch(f"{len(residues)} residues for {len(basis)} moduli")
    for r, d in zip(residues, basis.moduli):
        if not (0 <= r < d):
            raise ResidueOutOfRange(f"residue {r} not in [0, {d})")
    total = 0
    for r, (quotient, inv) in zip(residues, basis.partials):
        total += r * quotient * inv
    return total % basis.product
