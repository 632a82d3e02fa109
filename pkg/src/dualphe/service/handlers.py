"""Service handlers: pure functions from request models to response models.

The FastAPI app routes to these; the CLI calls them directly when no
remote server is configured.  Domain errors propagate as dualphe
exceptions and are mapped to HTTP / exit codes by the callers.
"""

from .. import ceg, elgamal, fileformat, harness
from ..bench import run_bench
from ..engine import EngineMode
from ..errors import CiphertextMalformed, InvalidParams, VerificationMismatch
from ..rng import SeededSource
from .models import (
    BenchRequest,
    BenchResponse,
    CiphertextModel,
    CiphertextResponse,
    DecryptRequest,
    DecryptResponse,
    DemoRequest,
    DemoResponse,
    EncryptRequest,
    EvalRequest,
    KeygenRequest,
    KeygenResponse,
    PublicKeyModel,
    SecretKeyModel,
)

_MODE_BY_NAME = {"mul": EngineMode.MULTIPLICATIVE, "add": EngineMode.ADDITIVE}
_ADVERSARY_BY_NAME = {kind.value: kind for kind in harness.AdversaryKind}


def do_keygen(req: KeygenRequest) -> KeygenResponse:
    n = fileformat.from_hex(req.n)
    g = fileformat.from_hex(req.g)
    rng = SeededSource(req.seed)
    if req.scheme == "ceg":
        if not req.d:
            raise InvalidParams("ceg keygen needs a d-basis")
        moduli = [fileformat.from_hex(d) for d in req.d]
        pk, sk = ceg.ceg_keygen(n, g, moduli, rng)
    else:
        if req.d:
            raise InvalidParams("d-basis only valid for scheme ceg")
        pk, sk = elgamal.keygen(n, g, rng)
    return KeygenResponse(
        public=PublicKeyModel(**fileformat.public_key_dict(req.scheme, pk)),
        secret=SecretKeyModel(**fileformat.secret_key_dict(req.scheme, pk, sk)),
    )


def do_encrypt(req: EncryptRequest) -> CiphertextResponse:
    scheme, pk = fileformat.load_public_key(req.public.file_dict())
    rng = SeededSource(req.seed)
    m = int(req.message)
    if scheme == "ceg":
        ct = ceg.ceg_encrypt(pk, m, rng)
    else:
        ct = elgamal.encrypt(pk, m, rng)
    return CiphertextResponse(
        ciphertext=CiphertextModel(**fileformat.ciphertext_dict(scheme, ct)))


def do_decrypt(req: DecryptRequest) -> DecryptResponse:
    scheme, pk, sk = fileformat.load_secret_key(req.secret.file_dict())
    basis_len = len(pk.basis) if scheme == "ceg" else None
    _, ct = fileformat.load_ciphertext(req.ciphertext.file_dict(),
                                       expected_scheme=scheme,
                                       basis_len=basis_len)
    if scheme == "ceg":
        m = ceg.ceg_decrypt(pk, sk, ct)
    else:
        m = elgamal.decrypt(pk, sk, ct)
    return DecryptResponse(plaintext=str(m))


def do_eval(req: EvalRequest) -> CiphertextResponse:
    scheme, pk = fileformat.load_public_key(req.public.file_dict())
    wanted = "elgamal" if req.op == "mul" else "ceg"
    if scheme != wanted:
        raise CiphertextMalformed(
            f"op {req.op!r} requires a {wanted} key, got {scheme}")
    basis_len = len(pk.basis) if scheme == "ceg" else None
    cts = [fileformat.load_ciphertext(c.file_dict(), expected_scheme=scheme,
                                      basis_len=basis_len)[1]
           for c in req.ciphertexts]
    acc = cts[0]
    for ct in cts[1:]:
        if req.op == "mul":
            acc = elgamal.homomorphic_mul(pk, acc, ct)
        else:
            acc = ceg.homomorphic_add(pk, acc, ct)
    return CiphertextResponse(
        ciphertext=CiphertextModel(**fileformat.ciphertext_dict(scheme, acc)))


def do_bench(req: BenchRequest) -> BenchResponse:
    report = run_bench(req.layout, bits=req.bits, t=req.t,
                       trials=req.trials, seed=req.seed)
    return BenchResponse(report=report)


def do_demo(req: DemoRequest) -> DemoResponse:
    mode = _MODE_BY_NAME[req.mode]
    adversary = _ADVERSARY_BY_NAME[req.adversary]
    plaintexts = [int(v) for v in req.inputs]
    try:
        report = harness.run_scenario(mode, plaintexts, adversary=adversary,
                                      seed=req.seed)
    except VerificationMismatch as exc:
        return DemoResponse(
            mismatch=True,
            expected=str(exc.expected),
            result=None if exc.actual is None else str(exc.actual),
            transcript=exc.transcript.lines() if exc.transcript else [],
        )
    return DemoResponse(
        mismatch=False,
        expected=str(report.expected),
        result=str(report.result),
        transcript=report.transcript.lines(),
    )
