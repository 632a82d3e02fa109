"""Dual-circuit arithmetic engine and layout comparison.

One engine serves both schemes behind a mode switch.  The Regular layout
models two separate single-scheme engines (two multipliers available to
encryption); the Dual layout shares one engine (a single multiplier), so
the exponentiator's two per-iteration multiplies serialize and encryption
costs more cycles.  Ciphertexts are bit-identical across layouts given the
same randomness -- only the ledger differs.
"""

import enum
from dataclasses import dataclass
from typing import Optional, Union

from . import ceg, elgamal
from .cycles import CycleLedger


class EngineMode(enum.Enum):
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


class EngineLayout(enum.Enum):
    REGULAR = "regular"
    DUAL = "dual"


@dataclass(frozen=True)
class EngineConfig:
    layout: EngineLayout
    multiplier_count: int
    exponentiator_count: int

    @classmethod
    def regular(cls) -> "EngineConfig":
        return cls(layout=EngineLayout.REGULAR, multiplier_count=2,
                   exponentiator_count=2)

    @classmethod
    def dual(cls) -> "EngineConfig":
        return cls(layout=EngineLayout.DUAL, multiplier_count=1,
                   exponentiator_count=1)


@dataclass(frozen=True)
class ResourceReport:
    """Static unit inventory of a layout."""

    multipliers: int
    exponentiators: int
    dividers: int
    adders: int
    memory_blocks: int

    def as_dict(self) -> dict:
        return {
            "multipliers": self.multipliers,
            "exponentiators": self.exponentiators,
            "dividers": self.dividers,
            "adders": self.adders,
            "memory_blocks": self.memory_blocks,
        }


def resource_report(config: EngineConfig) -> ResourceReport:
    """Regular keeps two engines' worth of units; Dual shares one of each."""
    copies = 2 if config.layout is EngineLayout.REGULAR else 1
    return ResourceReport(
        multipliers=copies,
        exponentiators=copies,
        dividers=copies,
        adders=copies,
        memory_blocks=copies,
    )


def reduction_percent(regular: float, dual: float) -> float:
    """(regular - dual) / regular * 100; negative when sharing costs more."""
    if regular == 0:
        raise ZeroDivisionError("regular value must be nonzero")
    return (regular - dual) / regular * 100.0


class Engine:
    """Single-owner engine instance: a config plus its cycle ledger.

    Not thread-safe; run one engine per thread.
    """

    def __init__(self, config: EngineConfig,
                 ledger: Optional[CycleLedger] = None):
        self.config = config
        self.ledger = ledger if ledger is not None else CycleLedger()

    def keygen(self, mode: EngineMode, n: int, g: int, rng, moduli=None,
               k_bits=None):
        if mode is EngineMode.MULTIPLICATIVE:
            return elgamal.keygen(n, g, rng, k_bits=k_bits, ledger=self.ledger,
                                  multipliers=self.config.multiplier_count)
        return ceg.ceg_keygen(n, g, moduli, rng, k_bits=k_bits,
                              ledger=self.ledger,
                              multipliers=self.config.multiplier_count)

    def encrypt(self, mode: EngineMode, pk, m: int, rng
                ) -> Union[elgamal.Ciphertext, ceg.CegCiphertext]:
        if mode is EngineMode.MULTIPLICATIVE:
            return elgamal.encrypt(pk, m, rng, ledger=self.ledger,
                                   multipliers=self.config.multiplier_count)
        return ceg.ceg_encrypt(pk, m, rng, ledger=self.ledger,
                               multipliers=self.config.multiplier_count)

    def decrypt(self, mode: EngineMode, pk, sk, ct) -> int:
        if mode is EngineMode.MULTIPLICATIVE:
            return elgamal.decrypt(pk, sk, ct, ledger=self.ledger)
        return ceg.ceg_decrypt(pk, sk, ct, ledger=self.ledger)

    def evaluate(self, mode: EngineMode, pk, a, b):
        if mode is EngineMode.MULTIPLICATIVE:
            return elgamal.homomorphic_mul(pk, a, b, ledger=self.ledger)
        return ceg.homomorphic_add(pk, a, b, ledger=self.ledger)
