"""Command-line entry point.

Exit codes: 0 success/pass, 1 verification failure (report still
written), 2 usage or domain error, 3 ambient field too small.  Errors are
also written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import designcheck
from .errors import AmbientTooSmall, QSteinerError
from .gf import Tower, build_tower
from .serialize import decode_elem, decode_subspace, encode_base, encode_block, encode_subspace
from .steiner import Block, ConstructionParams, block, classify, cover, recommended_ambient

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_AMBIENT = 0, 1, 2, 3


@dataclass
class CliConfig:
    p: int
    e: int
    t: int
    m: int
    ambient: int | None
    seed: int
    trials: int
    format: str
    output: str | None
    jobs: int
    timing: bool

    @property
    def M(self) -> int:
        return self.ambient or recommended_ambient(self.p**self.e, self.t, self.m)

    def validate(self) -> ConstructionParams:
        if min(self.e, self.t, self.m) < 1:
            raise QSteinerError("e, t and m must be positive")
        if self.trials < 0:
            raise QSteinerError("trials must be non-negative")
        if self.M % self.m:
            raise QSteinerError(f"m = {self.m} must divide the ambient degree {self.M}")
        return ConstructionParams(build_tower(self.p, self.e, self.M), self.t)


def _json_arg(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise QSteinerError(f"invalid JSON argument: {exc}") from None


def _tower_info(T: Tower, cfg: CliConfig) -> dict:
    return {
        "p": T.p, "e": T.e, "q": T.q, "M": T.M, "t": cfg.t, "m": cfg.m,
        "order": T.order,
        "h_base": list(T.h_base),
        "h_ext": [encode_base(T.base, c) for c in T.h_ext],
    }


def _block_csv(blocks: list[Block]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    t = len(blocks[0].B) if blocks else 0
    w.writerow(["label", "a", *(f"B{i + 1}" for i in range(t)), "basis"])
    for b in blocks:
        enc = encode_block(b)
        w.writerow([json.dumps(enc["label"]), json.dumps(enc["a"]),
                    *(json.dumps(x) for x in enc["B"]), json.dumps(enc["basis"])])
    return buf.getvalue()


def _dict_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if rows:
        keys = list(rows[0])
        w.writerow(keys)
        for r in rows:
            w.writerow([v if isinstance(v, (int, str)) else json.dumps(v) for v in r.values()])
    return buf.getvalue()


def _emit(cfg: CliConfig, payload, csv_text: str) -> None:
    text = csv_text if cfg.format == "csv" else json.dumps(payload) + "\n"
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="characteristic")
    common.add_argument("--e", type=int, default=1, help="q = p^e")
    common.add_argument("--t", type=int, default=1)
    common.add_argument("--m", type=int, default=2, help="inputs/enumeration live in F_(q^m)")
    common.add_argument("--ambient", type=int, default=None,
                        help="ambient degree M over F_q (default m * lcm(1..q^t))")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=designcheck.DEFAULT_TRIALS)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", default=None, help="output path (default: stdout)")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in reports")

    parser = argparse.ArgumentParser(prog="qsteiner", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("tower-info", parents=[common])
    sp = sub.add_parser("construct-block", parents=[common])
    sp.add_argument("--a", required=True)
    sp.add_argument("--B", required=True, help="JSON array of t ambient elements")
    sp = sub.add_parser("cover", parents=[common])
    sp.add_argument("--a", required=True)
    sp.add_argument("--tspace", required=True, help="JSON array of basis rows")
    sp = sub.add_parser("classify", parents=[common])
    sp.add_argument("--space", required=True, help="JSON array of basis rows")
    sp = sub.add_parser("enumerate", parents=[common])
    sp.add_argument("--d", type=int, required=True)
    verify = sub.add_parser("verify").add_subparsers(dest="check", required=True)
    sp = verify.add_parser("steiner", parents=[common])
    sp.add_argument("--a", required=True)
    verify.add_parser("largeset", parents=[common])
    verify.add_parser("lemmas", parents=[common])
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(ns.p, ns.e, ns.t, ns.m, ns.ambient, ns.seed, ns.trials, ns.format,
                     ns.output, max(1, ns.jobs), ns.timing)


def _run(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    params = cfg.validate()
    T = params.tower
    if ns.command == "tower-info":
        info = _tower_info(T, cfg)
        _emit(cfg, info, _dict_csv([info]))
        return EXIT_OK
    if ns.command in ("construct-block", "cover", "classify"):
        if ns.command == "construct-block":
            B = _json_arg(ns.B)
            if not isinstance(B, list):
                raise QSteinerError("--B must be a JSON array")
            b = block(params, decode_elem(T, _json_arg(ns.a)), [decode_elem(T, x) for x in B])
        elif ns.command == "cover":
            b = cover(params, decode_elem(T, _json_arg(ns.a)), decode_subspace(T, _json_arg(ns.tspace)))
        else:
            b = classify(params, decode_subspace(T, _json_arg(ns.space)))
        _emit(cfg, encode_block(b), _block_csv([b]))
        return EXIT_OK
    if ns.command == "enumerate":
        spaces = [encode_subspace(V) for V in designcheck.enumerate_subspaces(T, cfg.m, ns.d)]
        _emit(cfg, spaces, _dict_csv([{"index": i, "basis": s} for i, s in enumerate(spaces)]))
        return EXIT_OK
    if ns.check == "steiner":
        rep = designcheck.verify_steiner(params, decode_elem(T, _json_arg(ns.a)), cfg.m,
                                         trials=cfg.trials, seed=cfg.seed, jobs=cfg.jobs)
    elif ns.check == "largeset":
        rep = designcheck.verify_largeset(params, cfg.m, jobs=cfg.jobs)
    else:
        rep = designcheck.verify_lemmas(params, cfg.trials, cfg.seed)
    out = rep.to_dict(timing=cfg.timing)
    summary = {k: v for k, v in out.items() if k != "failures"}
    _emit(cfg, out, _dict_csv([{**summary, "failures": len(out["failures"])}]))
    return EXIT_OK if rep.status == "pass" else EXIT_FAIL


def _error(exc: Exception, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, AmbientTooSmall):
        payload["recommended_M"] = exc.recommended_M
    sys.stderr.write(json.dumps(payload) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _run(ns)
    except AmbientTooSmall as exc:
        return _error(exc, EXIT_AMBIENT)
    except (QSteinerError, OSError) as exc:
        return _error(exc, EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
