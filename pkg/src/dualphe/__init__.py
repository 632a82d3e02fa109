"""dualphe: partial homomorphic encryption toolkit.

Multiplicative ElGamal and additive CRT-based ElGamal over a shared
Montgomery arithmetic core, a dual-mode engine with cycle accounting, and
a blind-evaluation harness for the untrusted third-party scenario.
"""

from . import ceg, elgamal, engine, harness, modmath
from .cycles import CycleLedger

__all__ = ["ceg", "elgamal", "engine", "harness", "modmath", "CycleLedger"]
__version__ = "0.1.0"
