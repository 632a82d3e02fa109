"""Command-line surface: a thin client over the service handlers.

Every command builds a request model, sends it through the service layer
(in-process by default, or to a remote server via --server), and renders
the response.  Exit codes: 0 success, 2 invalid parameters or malformed
files, 3 discrete-log search exhausted, 4 verification mismatch in the
demo (the expected outcome for the tamperer adversary).
"""

import json
import sys
from pathlib import Path

import click

from .errors import DlogNotFound, DualPheError
from . import errors as _errors
from . import fileformat
from .service import handlers
from .service.models import (
    BenchRequest,
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
    BenchResponse,
)

_LOCAL = {
    "/keygen": (handlers.do_keygen, KeygenResponse),
    "/encrypt": (handlers.do_encrypt, CiphertextResponse),
    "/decrypt": (handlers.do_decrypt, DecryptResponse),
    "/eval": (handlers.do_eval, CiphertextResponse),
    "/bench": (handlers.do_bench, BenchResponse),
    "/demo": (handlers.do_demo, DemoResponse),
}

_ERRORS_BY_NAME = {
    name: cls for name, cls in vars(_errors).items()
    if isinstance(cls, type) and issubclass(cls, DualPheError)
}


def _call(server, path, req):
    if server is None:
        handler, _ = _LOCAL[path]
        return handler(req)
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=req.model_dump(mode="json"),
                      timeout=60.0)
    if resp.status_code == 400:
        payload = resp.json()
        cls = _ERRORS_BY_NAME.get(payload.get("error"), DualPheError)
        raise cls(payload.get("detail", "remote error"))
    resp.raise_for_status()
    return _LOCAL[path][1].model_validate(resp.json())


def _fail(message: str, code: int):
    click.echo(message, err=True)
    sys.exit(code)


def _guard(fn):
    try:
        return fn()
    except DlogNotFound as exc:
        _fail(f"error: DlogNotFound: {exc}", 3)
    except (DualPheError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        _fail(f"error: {type(exc).__name__}: {exc}", 2)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Send requests to a running dualphe service instead of "
                   "executing in-process.")
@click.pass_context
def main(ctx, server):
    """Partial homomorphic encryption toolkit (multiplicative ElGamal and
    additive CRT-ElGamal).

    Exit codes: 0 success; 2 invalid parameters, malformed files, or
    scheme mismatch; 3 discrete-log search failed; 4 demo verification
    mismatch.
    """
    ctx.obj = {"server": server}


@main.command()
@click.option("--scheme", type=click.Choice(["elgamal", "ceg"]), required=True)
@click.option("--n", "n", type=int, required=True, help="Prime modulus.")
@click.option("--g", "g", type=int, required=True, help="Generator.")
@click.option("--d", "d", default=None,
              help="Comma-separated coprime moduli (ceg only).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out-prefix", required=True,
              help="Writes <prefix>.pub.json and <prefix>.sec.json.")
@click.pass_context
def keygen(ctx, scheme, n, g, d, seed, out_prefix):
    """Generate a key pair and write the public/secret key files."""
    def run():
        moduli = None
        if d is not None:
            moduli = [fileformat.to_hex(int(v)) for v in d.split(",") if v]
        req = KeygenRequest(scheme=scheme, n=fileformat.to_hex(n),
                            g=fileformat.to_hex(g), d=moduli, seed=seed)
        resp = _call(ctx.obj["server"], "/keygen", req)
        _write(f"{out_prefix}.pub.json", fileformat.dumps(resp.public.file_dict()))
        _write(f"{out_prefix}.sec.json", fileformat.dumps(resp.secret.file_dict()))
        click.echo(f"wrote {out_prefix}.pub.json and {out_prefix}.sec.json")
    _guard(run)


@main.command()
@click.option("--key", required=True, type=click.Path(exists=True),
              help="Public key file.")
@click.option("--message", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", required=True, help="Ciphertext output file.")
@click.pass_context
def encrypt(ctx, key, message, seed, out):
    """Encrypt a message under a public key."""
    def run():
        req = EncryptRequest(public=PublicKeyModel(**_load_json(key)),
                             message=str(message), seed=seed)
        resp = _call(ctx.obj["server"], "/encrypt", req)
        _write(out, fileformat.dumps(resp.ciphertext.file_dict()))
    _guard(run)


@main.command()
@click.option("--key", required=True, type=click.Path(exists=True),
              help="Secret key file.")
@click.option("--in", "in_path", required=True, type=click.Path(exists=True),
              help="Ciphertext file.")
@click.pass_context
def decrypt(ctx, key, in_path):
    """Decrypt a ciphertext file; prints the plaintext in decimal."""
    def run():
        req = DecryptRequest(secret=SecretKeyModel(**_load_json(key)),
                             ciphertext=CiphertextModel(**_load_json(in_path)))
        resp = _call(ctx.obj["server"], "/decrypt", req)
        click.echo(resp.plaintext)
    _guard(run)


@main.command(name="eval")
@click.option("--key", required=True, type=click.Path(exists=True),
              help="Public key file.")
@click.option("--op", type=click.Choice(["mul", "add"]), required=True)
@click.option("--out", required=True, help="Ciphertext output file.")
@click.argument("inputs", nargs=-1, required=True,
                type=click.Path(exists=True))
@click.pass_context
def eval_cmd(ctx, key, op, out, inputs):
    """Fold two or more ciphertext files homomorphically."""
    def run():
        if len(inputs) < 2:
            raise _errors.InvalidParams("eval needs at least two ciphertexts")
        req = EvalRequest(
            public=PublicKeyModel(**_load_json(key)),
            op=op,
            ciphertexts=[CiphertextModel(**_load_json(p)) for p in inputs],
        )
        resp = _call(ctx.obj["server"], "/eval", req)
        _write(out, fileformat.dumps(resp.ciphertext.file_dict()))
    _guard(run)


@main.command()
@click.option("--layout", type=click.Choice(["regular", "dual", "both"]),
              default="both", show_default=True)
@click.option("--bits", type=int, default=8, show_default=True)
@click.option("--t", "t", type=int, default=2, show_default=True)
@click.option("--trials", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def bench(ctx, layout, bits, t, trials, seed):
    """Compare cycle totals and resources across engine layouts."""
    def run():
        req = BenchRequest(layout=layout, bits=bits, t=t, trials=trials,
                           seed=seed)
        resp = _call(ctx.obj["server"], "/bench", req)
        _render_bench(resp.report)
    _guard(run)


def _render_bench(report: dict) -> None:
    moduli = ",".join(str(d) for d in report["moduli"])
    click.echo(f"bits={report['bits']} t={report['t']} trials={report['trials']} "
               f"seed={report['seed']} n={report['n']} g={report['g']} d={moduli}")
    click.echo(f"{'layout':<9}{'mode':<16}{'encrypt-cycles':>15}{'decrypt-cycles':>15}")
    for name, data in report["layouts"].items():
        for mode, phases in data["cycles"].items():
            click.echo(f"{name:<9}{mode:<16}{phases['encrypt_cycles']:>15}"
                       f"{phases['decrypt_cycles']:>15}")
    click.echo("resources:")
    layouts = list(report["layouts"])
    header = f"{'unit':<16}" + "".join(f"{name:>9}" for name in layouts)
    reductions = report.get("reductions")
    if reductions:
        header += f"{'reduction(%)':>14}"
    click.echo(header)
    units = report["layouts"][layouts[0]]["resources"]
    for unit in units:
        row = f"{unit:<16}" + "".join(
            f"{report['layouts'][name]['resources'][unit]:>9}" for name in layouts)
        if reductions:
            row += f"{reductions['resources'][unit]:>14.2f}"
        click.echo(row)
    if reductions:
        click.echo("cycle reduction (%):")
        click.echo(f"{'mode':<16}{'encrypt':>10}{'decrypt':>10}")
        for mode, phases in reductions["cycles"].items():
            click.echo(f"{mode:<16}{phases['encrypt_cycles']:>10.2f}"
                       f"{phases['decrypt_cycles']:>10.2f}")


@main.command()
@click.option("--mode", type=click.Choice(["mul", "add"]), required=True)
@click.option("--inputs", required=True, help="Comma-separated plaintexts.")
@click.option("--adversary", type=click.Choice(["honest", "logger", "tamperer"]),
              default="honest", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--transcript-out", default="transcript.log", show_default=True,
              help="Line-oriented log of everything the evaluator saw.")
@click.pass_context
def demo(ctx, mode, inputs, adversary, seed, transcript_out):
    """Run the blind-evaluation scenario against an untrusted evaluator."""
    def run():
        values = [str(int(v)) for v in inputs.split(",") if v]
        if not values:
            raise _errors.InvalidParams("--inputs must list at least one value")
        req = DemoRequest(mode=mode, inputs=values, adversary=adversary,
                          seed=seed)
        resp = _call(ctx.obj["server"], "/demo", req)
        _write(transcript_out, "\n".join(resp.transcript) + "\n")
        if resp.mismatch:
            click.echo(f"VERIFICATION MISMATCH (expected {resp.expected}, "
                       f"decrypted {resp.result})")
            click.echo(f"transcript: {transcript_out}")
            sys.exit(4)
        click.echo(f"result: {resp.result}")
        click.echo(f"transcript: {transcript_out}")
    _guard(run)


if __name__ == "__main__":
    main()
