"""Blind-evaluation scenario: an untrusted IP that sees only ciphertexts.

The owner encrypts its inputs, hands the ciphertexts to a third-party
evaluator, and decrypts whatever comes back.  The evaluator interface
carries public parameters and ciphertext components only -- there is no
secret-key or plaintext input to leak, which is the whole protection
argument.  Adversarial variants show what a Trojan in the evaluator can
do (log what it saw, corrupt the result) and cannot do (read the data).

The mismatch check here recomputes the expected result from the known
plaintexts; it is a test oracle for tamper sensitivity, not a deployable
detector.
"""

import enum
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import ceg, elgamal
from .engine import EngineMode
from .errors import DlogNotFound, VerificationMismatch
from .rng import SeededSource


class AdversaryKind(enum.Enum):
    HONEST = "honest"
    LOGGER = "logger"
    TAMPERER = "tamperer"


@dataclass(frozen=True)
class TranscriptEntry:
    role: str       # "observed" or "emitted"
    value: int      # always a ciphertext component


@dataclass
class IpTranscript:
    """Everything that crossed the owner/evaluator boundary, in order."""

    entries: List[TranscriptEntry] = field(default_factory=list)

    def observed(self, value: int) -> None:
        self.entries.append(TranscriptEntry(role="observed", value=value))

    def emitted(self, value: int) -> None:
        self.entries.append(TranscriptEntry(role="emitted", value=value))

    def lines(self) -> List[str]:
        return [f"{e.role} ciphertext-component {e.value}" for e in self.entries]


class UntrustedIp:
    """Evaluator contract: fold ciphertexts under one homomorphic operation.

    The signature admits public key material and ciphertexts, nothing else.
    """

    def evaluate(self, mode: EngineMode, pk, ciphertexts: Sequence):
        acc = ciphertexts[0]
        for ct in ciphertexts[1:]:
            if mode is EngineMode.MULTIPLICATIVE:
                acc = elgamal.homomorphic_mul(pk, acc, ct)
            else:
                acc = ceg.homomorphic_add(pk, acc, ct)
        return acc


class HonestIp(UntrustedIp):
    pass


class LoggerIp(UntrustedIp):
    """Records every component it sees; demonstrates the log holds no plaintext."""

    def __init__(self):
        self.log: List[int] = []

    def evaluate(self, mode, pk, ciphertexts):
        for ct in ciphertexts:
            self.log.extend(_components(ct))
        result = super().evaluate(mode, pk, ciphertexts)
        self.log.extend(_components(result))
        return result


class TampererIp(UntrustedIp):
    """Perturbs exactly one component of its output (c2 of the first pair, +1 mod n)."""

    def evaluate(self, mode, pk, ciphertexts):
        result = super().evaluate(mode, pk, ciphertexts)
        n = pk.n if mode is EngineMode.MULTIPLICATIVE else pk.base.n
        if mode is EngineMode.MULTIPLICATIVE:
            return elgamal.Ciphertext(c1=result.c1, c2=(result.c2 + 1) % n)
        first = result.pairs[0]
        tampered = elgamal.Ciphertext(c1=first.c1, c2=(first.c2 + 1) % n)
        return ceg.CegCiphertext(pairs=(tampered,) + result.pairs[1:],
                                 add_count=result.add_count)


_IP_CLASSES = {
    AdversaryKind.HONEST: HonestIp,
    AdversaryKind.LOGGER: LoggerIp,
    AdversaryKind.TAMPERER: TampererIp,
}


def _components(ct) -> List[int]:
    if isinstance(ct, elgamal.Ciphertext):
        return [ct.c1, ct.c2]
    out = []
    for pair in ct.pairs:
        out.extend([pair.c1, pair.c2])
    return out


@dataclass
class ScenarioReport:
    result: int
    expected: int
    transcript: IpTranscript
    adversary: AdversaryKind


def run_scenario(mode: EngineMode, plaintexts: Sequence[int],
                 adversary: AdversaryKind = AdversaryKind.HONEST,
                 seed: int = 0, n: int = 23, g: int = 5,
                 moduli: Sequence[int] = (3, 5)) -> ScenarioReport:
    """Encrypt, hand off to the IP, decrypt, verify.

    Raises VerificationMismatch (with the transcript attached) when the
    decrypted result disagrees with the known-plaintext recomputation, or
    when tampering pushes decryption outside its discrete-log bound.
    """
    if not plaintexts:
        raise ValueError("need at least one plaintext")
    rng = SeededSource(seed)
    if mode is EngineMode.MULTIPLICATIVE:
        pk, sk = elgamal.keygen(n, g, rng)
        cts = [elgamal.encrypt(pk, m, rng) for m in plaintexts]
        expected = 1
        for m in plaintexts:
            expected = (expected * m) % n
    else:
        pk, sk = ceg.ceg_keygen(n, g, moduli, rng)
        cts = [ceg.ceg_encrypt(pk, m, rng) for m in plaintexts]
        expected = sum(plaintexts) % pk.basis.product

    transcript = IpTranscript()
    for ct in cts:
        for c in _components(ct):
            transcript.observed(c)

    ip = _IP_CLASSES[adversary]()
    folded = ip.evaluate(mode, pk, cts)
    for c in _components(folded):
        transcript.emitted(c)

    try:
        if mode is EngineMode.MULTIPLICATIVE:
            result = elgamal.decrypt(pk, sk, folded)
        else:
            result = ceg.ceg_decrypt(pk, sk, folded)
    except DlogNotFound:
        # Corruption pushed a residue outside its declared bound.
        raise VerificationMismatch(expected, None, transcript)
    if result != expected:
        raise VerificationMismatch(expected, result, transcript)
    return ScenarioReport(result=result, expected=expected,
                          transcript=transcript, adversary=adversary)


@dataclass
class AuditVerdict:
    ciphertext_only: bool
    collisions: List[int]   # transcript positions whose value equals a secret

    @property
    def summary(self) -> str:
        if not self.ciphertext_only:
            return "secret-typed entry present"
        if self.collisions:
            return (f"ciphertext-only; {len(self.collisions)} numeric "
                    "collision(s), not exposure")
        return "ciphertext-only"


def audit_transcript(transcript: IpTranscript, plaintexts: Sequence[int],
                     secret_key: Optional[elgamal.ElGamalSecretKey] = None
                     ) -> AuditVerdict:
    """Structural audit: every entry is a ciphertext component by type.

    Numeric equality between a component and a plaintext is reported as a
    collision, expected at desk-scale moduli, not as exposure.
    """
    secrets = set(plaintexts)
    if secret_key is not None:
        secrets.add(secret_key.k)
    ciphertext_only = all(isinstance(e, TranscriptEntry)
                          for e in transcript.entries)
    collisions = [i for i, e in enumerate(transcript.entries)
                  if e.value in secrets]
    return AuditVerdict(ciphertext_only=ciphertext_only, collisions=collisions)
