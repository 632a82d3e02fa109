"""Regular-vs-Dual cycle and resource benchmark.

Runs seeded encrypt/decrypt trials through both engine layouts and reports
abstract cycle totals, unit inventories, and the percentage reduction
((regular - dual) / regular * 100).  Desk-scale parameters are derived
from the requested bit width: the largest prime below 2^bits with its
smallest primitive root, and the first t odd primes as the CRT basis.
"""

from typing import Optional, Sequence

from . import ceg, elgamal
from .cycles import CycleLedger
from .engine import Engine, EngineConfig, EngineMode, reduction_percent, resource_report
from .errors import InvalidParams
from .rng import SeededSource

_MIN_BITS, _MAX_BITS = 4, 32


def _factorize(n: int) -> list:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def largest_prime_below(limit: int) -> int:
    for n in range(limit - 1, 2, -1):
        if elgamal.is_probable_prime(n):
            return n
    raise InvalidParams(f"no prime below {limit}")


def smallest_primitive_root(n: int) -> int:
    factors = _factorize(n - 1)
    for g in range(2, n):
        if all(pow(g, (n - 1) // p, n) != 1 for p in factors):
            return g
    raise InvalidParams(f"no primitive root mod {n}")


def default_basis(t: int) -> tuple:
    """First t odd primes: pairwise coprime, small enough for the dlog scan."""
    primes = []
    candidate = 3
    while len(primes) < t:
        if elgamal.is_probable_prime(candidate):
            primes.append(candidate)
        candidate += 2
    return tuple(primes)


def bench_params(bits: int, t: int) -> dict:
    if not (_MIN_BITS <= bits <= _MAX_BITS):
        raise InvalidParams(f"bits must be in [{_MIN_BITS}, {_MAX_BITS}]")
    if t < 1:
        raise InvalidParams("t must be >= 1")
    n = largest_prime_below(1 << bits)
    g = smallest_primitive_root(n)
    moduli = default_basis(t)
    product = 1
    for d in moduli:
        product *= d
    if product >= n - 1:
        raise InvalidParams(
            f"basis product {product} exceeds the group order at {bits} bits")
    return {"n": n, "g": g, "moduli": moduli, "bits": bits}


def _layout_run(config: EngineConfig, params: dict, trials: int, seed: int) -> dict:
    """Cycle totals per mode and phase for one layout.

    Key generation happens outside the measured ledgers; the same seed
    drives both layouts so decryption sees identical ciphertexts.
    """
    n, g, moduli = params["n"], params["g"], params["moduli"]
    bits = params["bits"]
    result = {}
    for mode in (EngineMode.MULTIPLICATIVE, EngineMode.ADDITIVE):
        rng = SeededSource(seed)
        if mode is EngineMode.MULTIPLICATIVE:
            pk, sk = elgamal.keygen(n, g, rng, k_bits=bits)
            space = lambda: rng.randrange(1, n)
        else:
            pk, sk = ceg.ceg_keygen(n, g, moduli, rng, k_bits=bits)
            space = lambda: rng.randrange(0, pk.basis.product)
        enc = Engine(config, CycleLedger())
        dec = Engine(config, CycleLedger())
        for _ in range(trials):
            m = space()
            ct = enc.encrypt(mode, pk, m, rng)
            dec.decrypt(mode, pk, sk, ct)
        result[mode.value] = {
            "encrypt_cycles": enc.ledger.total_cycles,
            "decrypt_cycles": dec.ledger.total_cycles,
        }
    return result


def run_bench(layout: str, bits: int = 8, t: int = 2, trials: int = 1,
              seed: int = 0) -> dict:
    """layout is "regular", "dual", or "both"."""
    if trials < 1:
        raise InvalidParams("trials must be >= 1")
    if layout not in ("regular", "dual", "both"):
        raise InvalidParams(f"unknown layout {layout!r}")
    params = bench_params(bits, t)
    configs = {}
    if layout in ("regular", "both"):
        configs["regular"] = EngineConfig.regular()
    if layout in ("dual", "both"):
        configs["dual"] = EngineConfig.dual()

    layouts = {}
    for name, config in configs.items():
        layouts[name] = {
            "cycles": _layout_run(config, params, trials, seed),
            "resources": resource_report(config).as_dict(),
        }

    report = {
        "bits": bits,
        "t": t,
        "trials": trials,
        "seed": seed,
        "n": params["n"],
        "g": params["g"],
        "moduli": list(params["moduli"]),
        "layouts": layouts,
    }
    if layout == "both":
        reg, dual = layouts["regular"], layouts["dual"]
        reductions = {"resources": {}, "cycles": {}}
        for unit, count in reg["resources"].items():
            reductions["resources"][unit] = reduction_percent(
                count, dual["resources"][unit])
        for mode, phases in reg["cycles"].items():
            reductions["cycles"][mode] = {
                phase: reduction_percent(value, dual["cycles"][mode][phase])
                for phase, value in phases.items()
            }
        report["reductions"] = reductions
    return report
