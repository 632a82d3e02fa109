"""FastAPI wrapper around the toolkit handlers.

Domain errors become HTTP 400 with a machine-readable error name so thin
clients can map them back to exceptions / exit codes.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DualPheError
from . import handlers
from .models import (
    BenchRequest,
    BenchResponse,
    CiphertextResponse,
    DecryptRequest,
    DecryptResponse,
    DemoRequest,
    DemoResponse,
    EncryptRequest,
    EvalRequest,
    KeygenRequest,
    KeygenResponse,
)

app = FastAPI(
    title="dualphe",
    description="Partial homomorphic encryption service: multiplicative "
                "ElGamal and additive CRT-ElGamal behind one engine.",
)


@app.exception_handler(DualPheError)
async def domain_error_handler(request: Request, exc: DualPheError):
    return JSONResponse(
        status_code=400,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.post("/keygen", response_model=KeygenResponse)
def keygen(req: KeygenRequest):
    return handlers.do_keygen(req)


@app.post("/encrypt", response_model=CiphertextResponse)
def encrypt(req: EncryptRequest):
    return handlers.do_encrypt(req)


@app.post("/decrypt", response_model=DecryptResponse)
def decrypt(req: DecryptRequest):
    return handlers.do_decrypt(req)


@app.post("/eval", response_model=CiphertextResponse)
def evaluate(req: EvalRequest):
    return handlers.do_eval(req)


@app.post("/bench", response_model=BenchResponse)
def bench(req: BenchRequest):
    return handlers.do_bench(req)


@app.post("/demo", response_model=DemoResponse)
def demo(req: DemoRequest):
    return handlers.do_demo(req)
