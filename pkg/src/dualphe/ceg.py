"""Additive-homomorphic CRT-based ElGamal (CEG).

The message lives in the exponent, split across a pairwise-coprime basis:
each residue m_i = m mod d_i is encrypted as (g^{l_i}, h^{l_i} * g^{m_i}).
Multiplying ciphertexts component-wise adds the exponents, so decryption
is a per-residue small discrete log followed by inverse CRT.

Ciphertexts carry an ``add_count`` so decryption knows how far the
exponents may have grown; the scan bound (add_count+1)*(d_i-1) makes
failure explicit instead of looping forever.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from . import elgamal, modmath
from .cycles import CycleLedger
from .errors import CiphertextMalformed, InvalidParams, MessageOutOfRange

# Checking D < ord(g) by direct scan is linear in D; past this we trust the caller.
_ORDER_SCAN_LIMIT = 1 << 20


@dataclass(frozen=True)
class CegPublicKey:
    base: elgamal.ElGamalPublicKey
    basis: modmath.CrtBasis

    @property
    def plaintext_modulus(self) -> int:
        return self.basis.product


@dataclass(frozen=True)
class CegCiphertext:
    pairs: tuple            # one elgamal.Ciphertext per basis modulus
    add_count: int = 0      # homomorphic additions folded in


def ceg_keygen(n: int, g: int, moduli: Sequence[int], rng,
               k_bits: Optional[int] = None,
               ledger: Optional[CycleLedger] = None,
               multipliers: int = 2):
    """Same secret-key structure as plain ElGamal, plus the coprime basis."""
    basis = modmath.crt_basis_new(moduli)
    pk, sk = elgamal.keygen(n, g, rng, k_bits=k_bits, ledger=ledger,
                            multipliers=multipliers)
    _check_order(pk, basis.product)
    return CegPublicKey(base=pk, basis=basis), sk


def _check_order(pk: elgamal.ElGamalPublicKey, product: int) -> None:
    # Exponents must stay below ord(g); ord(g) > D iff no g^j = 1 for j <= D.
    if product > _ORDER_SCAN_LIMIT:
        return
    acc = pk.g
    for _ in range(product):
        if acc == 1:
            raise InvalidParams(
                f"order of g={pk.g} mod {pk.n} does not exceed D={product}")
        acc = (acc * pk.g) % pk.n


def ceg_encrypt(pk: CegPublicKey, m: int, rng,
                ledger: Optional[CycleLedger] = None,
                multipliers: int = 2) -> CegCiphertext:
    """Reduce m over the basis, then encrypt each residue in the exponent.

    0 is a valid message here (the additive identity). Each pair draws its
    own independent l_i from rng.
    """
    if not (0 <= m < pk.basis.product):
        raise MessageOutOfRange(f"message {m} not in [0, {pk.basis.product})")
    base = pk.base
    residues = modmath.mod_reduce_vector(m, pk.basis, ledger=ledger)
    pairs = []
    for m_i in residues:
        l_i = rng.randrange(1, base.n - 1)
        c1 = modmath.mont_exp(base.ctx, base.g, l_i, ledger=ledger,
                              multipliers=multipliers)
        hl = modmath.mont_exp(base.ctx, base.h, l_i, ledger=ledger,
                              multipliers=multipliers)
        gm = modmath.mont_exp(base.ctx, base.g, m_i, ledger=ledger,
                              multipliers=multipliers)
        c2 = modmath.mod_mul(base.ctx, hl, gm, ledger=ledger)
        pairs.append(elgamal.Ciphertext(c1=c1, c2=c2))
    return CegCiphertext(pairs=tuple(pairs), add_count=0)


def ceg_decrypt(pk: CegPublicKey, sk: elgamal.ElGamalSecretKey,
                ct: CegCiphertext,
                ledger: Optional[CycleLedger] = None) -> int:
    """Per pair: strip the mask, scan the small discrete log, reduce mod d_i;
    then recombine through the inverse-CRT table."""
    if len(ct.pairs) != len(pk.basis):
        raise CiphertextMalformed(
            f"{len(ct.pairs)} pairs for basis of length {len(pk.basis)}")
    base = pk.base
    residues = []
    for pair, d_i in zip(ct.pairs, pk.basis.moduli):
        elgamal._check_ciphertext(base, pair)
        s = modmath.mont_exp(base.ctx, pair.c1, sk.k, ledger=ledger, multipliers=2)
        v = modmath.mod_div(base.ctx, pair.c2, s, ledger=ledger)
        bound = (ct.add_count + 1) * (d_i - 1) + 1
        e = modmath.dlog_small(base.ctx, base.g, v, bound, ledger=ledger)
        residues.append(e % d_i)
    return modmath.crt_recombine(residues, pk.basis)


def homomorphic_add(pk: CegPublicKey, a: CegCiphertext, b: CegCiphertext,
                    ledger: Optional[CycleLedger] = None) -> CegCiphertext:
    """Component-wise pair product; adds the plaintexts mod D.

    No key material required -- this is the untrusted-IP operation.
    """
    if len(a.pairs) != len(b.pairs) or len(a.pairs) != len(pk.basis):
        raise CiphertextMalformed("basis length mismatch between ciphertexts")
    pairs = tuple(
        elgamal.homomorphic_mul(pk.base, pa, pb, ledger=ledger)
        for pa, pb in zip(a.pairs, b.pairs)
    )
    return CegCiphertext(pairs=pairs, add_count=a.add_count + b.add_count + 1)
