"""JSON file formats for keys and ciphertexts.

Magnitudes are minimal-length lowercase hex strings without a prefix;
serialization is canonical (sorted keys, fixed separators, trailing
newline) so fixed-seed pipelines produce byte-identical files.
"""

import json
from typing import Optional

from . import ceg, elgamal, modmath
from .errors import CiphertextMalformed, InvalidParams

SCHEME_ELGAMAL = "elgamal"
SCHEME_CEG = "ceg"


def to_hex(x: int) -> str:
    if x < 0:
        raise ValueError("negative magnitude")
    return format(x, "x")


def from_hex(s: str) -> int:
    return int(s, 16)


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# --- keys ---

def public_key_dict(scheme: str, pk) -> dict:
    if scheme == SCHEME_ELGAMAL:
        return {"scheme": scheme, "n": to_hex(pk.n), "g": to_hex(pk.g),
                "h": to_hex(pk.h)}
    if scheme == SCHEME_CEG:
        base = pk.base
        return {"scheme": scheme, "n": to_hex(base.n), "g": to_hex(base.g),
                "h": to_hex(base.h),
                "d": [to_hex(d) for d in pk.basis.moduli]}
    raise InvalidParams(f"unknown scheme {scheme!r}")


def secret_key_dict(scheme: str, pk, sk) -> dict:
    d = public_key_dict(scheme, pk)
    d["k"] = to_hex(sk.k)
    return d


def load_public_key(data: dict):
    """Returns (scheme, pk) where pk is ElGamalPublicKey or CegPublicKey."""
    scheme = data.get("scheme")
    if scheme not in (SCHEME_ELGAMAL, SCHEME_CEG):
        raise InvalidParams(f"unknown scheme {scheme!r}")
    if (scheme == SCHEME_CEG) != ("d" in data):
        raise InvalidParams("d-basis present iff scheme is ceg")
    n = from_hex(data["n"])
    g = from_hex(data["g"])
    h = from_hex(data["h"])
    base = elgamal.ElGamalPublicKey(n=n, g=g, h=h, ctx=elgamal.make_context(n))
    if scheme == SCHEME_ELGAMAL:
        return scheme, base
    basis = modmath.crt_basis_new([from_hex(d) for d in data["d"]])
    return scheme, ceg.CegPublicKey(base=base, basis=basis)


def load_secret_key(data: dict):
    """Returns (scheme, pk, sk)."""
    if "k" not in data:
        raise InvalidParams("not a secret key file")
    scheme, pk = load_public_key(data)
    return scheme, pk, elgamal.ElGamalSecretKey(k=from_hex(data["k"]))


# --- ciphertexts ---

def ciphertext_dict(scheme: str, ct) -> dict:
    if scheme == SCHEME_ELGAMAL:
        return {"scheme": scheme, "c1": to_hex(ct.c1), "c2": to_hex(ct.c2)}
    if scheme == SCHEME_CEG:
        return {"scheme": scheme,
                "pairs": [{"c1": to_hex(p.c1), "c2": to_hex(p.c2)}
                          for p in ct.pairs],
                "add_count": ct.add_count}
    raise InvalidParams(f"unknown scheme {scheme!r}")


def load_ciphertext(data: dict, expected_scheme: Optional[str] = None,
                    basis_len: Optional[int] = None):
    """Returns (scheme, ct); checks the scheme tag and the pair count."""
    scheme = data.get("scheme")
    if scheme not in (SCHEME_ELGAMAL, SCHEME_CEG):
        raise CiphertextMalformed(f"unknown scheme {scheme!r}")
    if expected_scheme is not None and scheme != expected_scheme:
        raise CiphertextMalformed(
            f"scheme tag {scheme!r} does not match key scheme {expected_scheme!r}")
    if scheme == SCHEME_ELGAMAL:
        try:
            ct = elgamal.Ciphertext(c1=from_hex(data["c1"]), c2=from_hex(data["c2"]))
        except KeyError as exc:
            raise CiphertextMalformed(f"missing field {exc}") from exc
        return scheme, ct
    try:
        pairs = tuple(elgamal.Ciphertext(c1=from_hex(p["c1"]), c2=from_hex(p["c2"]))
                      for p in data["pairs"])
        add_count = int(data["add_count"])
    except (KeyError, TypeError) as exc:
        raise CiphertextMalformed(f"malformed ceg ciphertext: {exc}") from exc
    if basis_len is not None and len(pairs) != basis_len:
        raise CiphertextMalformed(
            f"{len(pairs)} pairs for basis of length {basis_len}")
    return scheme, ceg.CegCiphertext(pairs=pairs, add_count=add_count)
