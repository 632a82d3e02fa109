"""Multiplicative-homomorphic ElGamal over a prime field.

Encryption emits the pair (g^l, h^l * m); the component-wise product of two
ciphertexts is a valid encryption of the product of the plaintexts, which
is the one operation an untrusted evaluator gets to perform.

All arithmetic routes through the Montgomery core in :mod:`dualphe.modmath`
so the library structurally mirrors the hardware datapath and cycle
accounting stays meaningful.
"""

import random
from dataclasses import dataclass
from typing import Optional

from . import modmath
from .cycles import CycleLedger
from .errors import (
    CiphertextOutOfRange,
    InvalidParams,
    MessageOutOfRange,
)

MILLER_RABIN_ROUNDS = 64


def is_probable_prime(n: int, rounds: int = MILLER_RABIN_ROUNDS, seed: int = 0xC0FFEE) -> bool:
    """Miller-Rabin with seeded witness selection (deterministic across runs)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(seed)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class ElGamalPublicKey:
    """Deployment parameters (n, g) plus the per-key element h = g^k mod n."""

    n: int
    g: int
    h: int
    ctx: modmath.MontgomeryContext

    @property
    def k_bits(self) -> int:
        return self.ctx.k_bits


@dataclass(frozen=True)
class ElGamalSecretKey:
    k: int


@dataclass(frozen=True)
class Ciphertext:
    c1: int
    c2: int


def _check_params(n: int, g: int) -> None:
    if not is_probable_prime(n):
        raise InvalidParams(f"n={n} failed primality test")
    if not (1 < g < n):
        raise InvalidParams(f"g={g} not in (1, n)")


def make_context(n: int, k_bits: Optional[int] = None) -> modmath.MontgomeryContext:
    """Montgomery context sized to n (or to an explicit width)."""
    return modmath.mont_context_new(n, k_bits if k_bits is not None else n.bit_length())


def keygen(n: int, g: int, rng, k_bits: Optional[int] = None,
           ledger: Optional[CycleLedger] = None,
           multipliers: int = 2):
    """Draw the secret exponent from rng and derive h = g^k mod n."""
    _check_params(n, g)
    ctx = make_context(n, k_bits)
    k = rng.randrange(1, n - 1)
    h = modmath.mont_exp(ctx, g, k, ledger=ledger, multipliers=multipliers)
    return ElGamalPublicKey(n=n, g=g, h=h, ctx=ctx), ElGamalSecretKey(k=k)


def encrypt(pk: ElGamalPublicKey, m: int, rng,
            ledger: Optional[CycleLedger] = None,
            multipliers: int = 2) -> Ciphertext:
    """Fresh l per call; returns (g^l, h^l * m) mod n.

    m = 0 is rejected: it absorbs every homomorphic product and cannot be
    meaningfully decrypted in the multiplicative scheme.
    """
    if not (1 <= m < pk.n):
        raise MessageOutOfRange(f"message {m} not in [1, {pk.n})")
    l = rng.randrange(1, pk.n - 1)
    c1 = modmath.mont_exp(pk.ctx, pk.g, l, ledger=ledger, multipliers=multipliers)
    hl = modmath.mont_exp(pk.ctx, pk.h, l, ledger=ledger, multipliers=multipliers)
    c2 = modmath.mod_mul(pk.ctx, hl, m, ledger=ledger)
    return Ciphertext(c1=c1, c2=c2)


def decrypt(pk: ElGamalPublicKey, sk: ElGamalSecretKey, ct: Ciphertext,
            ledger: Optional[CycleLedger] = None) -> int:
    """m = C2 / C1^k mod n -- one exponentiator, one divider.

    The decryption exponentiator owns its internal multiplier pair, so its
    cycle cost does not depend on the engine layout.
    """
    _check_ciphertext(pk, ct)
    s = modmath.mont_exp(pk.ctx, ct.c1, sk.k, ledger=ledger, multipliers=2)
    return modmath.mod_div(pk.ctx, ct.c2, s, ledger=ledger)


def homomorphic_mul(pk: ElGamalPublicKey, a: Ciphertext, b: Ciphertext,
                    ledger: Optional[CycleLedger] = None) -> Ciphertext:
    """Component-wise product; needs no key material beyond the modulus."""
    _check_ciphertext(pk, a)
    _check_ciphertext(pk, b)
    return Ciphertext(
        c1=modmath.mod_mul(pk.ctx, a.c1, b.c1, ledger=ledger),
        c2=modmath.mod_mul(pk.ctx, a.c2, b.c2, ledger=ledger),
    )


def _check_ciphertext(pk: ElGamalPublicKey, ct: Ciphertext) -> None:
    if not (0 <= ct.c1 < pk.n and 0 <= ct.c2 < pk.n):
        raise CiphertextOutOfRange(f"({ct.c1}, {ct.c2}) outside [0, {pk.n})^2")
