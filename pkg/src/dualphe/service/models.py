"""Pydantic request/response models -- the wire format of the service.

Key and ciphertext payloads mirror the on-disk JSON schemas exactly
(lowercase minimal hex magnitudes), so the CLI can write responses to
files verbatim.  Plaintext messages travel as decimal strings.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class PublicKeyModel(BaseModel):
    scheme: Literal["elgamal", "ceg"]
    n: str
    g: str
    h: str
    d: Optional[List[str]] = None

    def file_dict(self) -> dict:
        return self.model_dump(exclude_none=True)


class SecretKeyModel(PublicKeyModel):
    k: str


class CiphertextPairModel(BaseModel):
    c1: str
    c2: str


class CiphertextModel(BaseModel):
    scheme: Literal["elgamal", "ceg"]
    c1: Optional[str] = None
    c2: Optional[str] = None
    pairs: Optional[List[CiphertextPairModel]] = None
    add_count: Optional[int] = None

    def file_dict(self) -> dict:
        return self.model_dump(exclude_none=True)


class KeygenRequest(BaseModel):
    scheme: Literal["elgamal", "ceg"]
    n: str
    g: str
    d: Optional[List[str]] = None
    seed: int = 0


class KeygenResponse(BaseModel):
    public: PublicKeyModel
    secret: SecretKeyModel


class EncryptRequest(BaseModel):
    public: PublicKeyModel
    message: str  # decimal
    seed: int = 0


class CiphertextResponse(BaseModel):
    ciphertext: CiphertextModel


class DecryptRequest(BaseModel):
    secret: SecretKeyModel
    ciphertext: CiphertextModel


class DecryptResponse(BaseModel):
    plaintext: str  # decimal


class EvalRequest(BaseModel):
    public: PublicKeyModel
    op: Literal["mul", "add"]
    ciphertexts: List[CiphertextModel] = Field(min_length=2)


class BenchRequest(BaseModel):
    layout: Literal["regular", "dual", "both"] = "both"
    bits: int = 8
    t: int = 2
    trials: int = 1
    seed: int = 0


class BenchResponse(BaseModel):
    report: dict


class DemoRequest(BaseModel):
    mode: Literal["mul", "add"]
    inputs: List[str] = Field(min_length=1)  # decimal
    adversary: Literal["honest", "logger", "tamperer"] = "honest"
    seed: int = 0


class DemoResponse(BaseModel):
    mismatch: bool
    expected: str
    result: Optional[str] = None
    transcript: List[str]


class ErrorResponse(BaseModel):
    error: str
    detail: str
