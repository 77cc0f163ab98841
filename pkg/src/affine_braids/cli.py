"""Command-line front end.

Verdicts ("equal", "not conjugate", ...) go to stdout with exit status 0;
malformed input exits with 2 and resource limits with 3, diagnostics on
stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from dataclasses import replace
from pathlib import Path

from . import a4_free, center_quotient, garside, loop_tracer
from .braid_core import BraidWord, exponent_sum, format_braid, parse_braid
from .config import RunConfig
from .errors import BraidError, HypothesisWarning, ResourceLimitError
from .formats import read_trajectory, write_trajectory

_HEADED = re.compile(r"\s*B(\d+)")

EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--eps-sep", type=float)
    p.add_argument("--eps-rank", type=float)
    p.add_argument("--eps-close", type=float)
    p.add_argument("--direction", type=float, help="projection/reference direction in radians")
    p.add_argument("--max-depth", type=int, help="subdivision depth limit for tracing")
    p.add_argument("--sss-cap", type=int, help="super summit set size cap")
    p.add_argument("--format", dest="output_format", choices=("text", "json"))
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="affine-braids",
        description="Braid words, P_k modulo its center, and loops of planar point configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("trace", "trace a trajectory file into a pure braid word")
    p.add_argument("file", nargs="?", default="-")
    p = add("nf", "Garside normal form of a braid word")
    p.add_argument("word")
    for name, what in (("eq", "equality in B_k"), ("conj", "conjugacy in B_k"),
                       ("qeq", "equality in P_k/Z_k"), ("qconj", "conjugacy in P_k/Z_k (B_k conjugators)")):
        p = add(name, what)
        p.add_argument("a")
        p.add_argument("b")
        if name == "conj":
            p.add_argument("--witness", action="store_true", help="also print a conjugator c with c a c^-1 = b")
    p = add("homotopic", "compare two loop files in P_k/Z_k")
    p.add_argument("a")
    p.add_argument("b")
    p = add("presentation", "presentation of P_k/Z_k in band generators")
    p.add_argument("--k", type=int, required=True)
    p = add("free-reduce", "reduce a word in the free group of rank 11")
    p.add_argument("word")
    p = add("free-conj", "conjugacy in the free group of rank 11")
    p.add_argument("a")
    p.add_argument("b")
    p = add("validate", "report E_k / F_k membership of a trajectory file")
    p.add_argument("file", nargs="?", default="-")
    p = add("rotation", "emit the full-turn rotation loop as a trajectory file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--file-format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    return parser


_FLAG_KEYS = ("eps_sep", "eps_rank", "eps_close", "direction", "max_depth", "sss_cap", "output_format")


class _Run:
    def __init__(self, args, out, err):
        self.args = args
        self.out = out
        self.err = err
        self.flags = {k: getattr(args, k) for k in _FLAG_KEYS if getattr(args, k) is not None}
        self.config = RunConfig.load(args.config, **self.flags)

    @property
    def as_json(self) -> bool:
        return self.config.output_format == "json"

    def emit(self, text: str, data: dict | None = None):
        if self.as_json and data is not None:
            self.out.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            self.out.write(text + "\n")

    def read_text(self, name: str) -> str:
        return sys.stdin.read() if name == "-" else Path(name).read_text()

    def load_loop(self, name: str):
        loop, overrides = read_trajectory(self.read_text(name))
        # per-file tolerances beat the config file, explicit flags beat both
        cfg = replace(self.config, **overrides)
        cfg = replace(cfg, **{k: v for k, v in self.flags.items() if k in overrides})
        return loop, cfg

    def words(self):
        """Parse both words; a word without a ``B<k>`` header takes the other's k."""
        texts = (self.args.a, self.args.b)
        headed = [_HEADED.match(t) for t in texts]
        k = next((int(m.group(1)) for m in headed if m), None)
        if k is None:
            # neither has a header: use the larger inferred strand count
            k = max(parse_braid(t).strands for t in texts)
        return parse_braid(texts[0], strands=k, line=1), parse_braid(texts[1], strands=k, line=2)


def _coset_data(w: BraidWord) -> dict:
    k = w.strands
    return {
        "word": format_braid(w),
        "exponent_sum": exponent_sum(w),
        "class_invariant": exponent_sum(w) % (k * (k - 1)),
    }


def _cmd_trace(run: _Run):
    loop, cfg = run.load_loop(run.args.file)
    w = loop_tracer.trace(loop, options=cfg.trace_options())
    run.emit(format_braid(w), {"word": format_braid(w), "letters": list(w.letters), "strands": w.strands})


def _cmd_nf(run: _Run):
    w = parse_braid(run.args.word)
    nf = garside.normal_form(w)
    run.emit(str(nf), {
        "strands": nf.strands, "infimum": nf.infimum,
        "factors": [list(f) for f in nf.factors], "text": str(nf),
    })


def _cmd_eq(run: _Run):
    a, b = run.words()
    v = garside.words_equal(a, b)
    run.emit("equal" if v else "not equal", {"equal": v})


def _cmd_conj(run: _Run):
    a, b = run.words()
    v, c = garside.conjugate_in_braid_group(a, b, cap=run.config.sss_cap, witness=True)
    text = "conjugate" if v else "not conjugate"
    data = {"conjugate": v}
    if v and run.args.witness:
        text += f"\nwitness: {format_braid(c)}"
        data["witness"] = format_braid(c)
    run.emit(text, data)


def _classes(run: _Run):
    a, b = run.words()
    return center_quotient.make_class(a), center_quotient.make_class(b, warn=False)


def _cmd_qeq(run: _Run):
    x, y = _classes(run)
    v = center_quotient.cosets_equal(x, y)
    run.emit("equal" if v else "not equal", {"equal": v})


def _cmd_qconj(run: _Run):
    x, y = _classes(run)
    v = center_quotient.cosets_conjugate(x, y, cap=run.config.sss_cap)
    run.emit("conjugate" if v else "not conjugate", {"conjugate": v, "conjugators": "B_k"})


def _cmd_homotopic(run: _Run):
    (la, ca), (lb, cb) = run.load_loop(run.args.a), run.load_loop(run.args.b)
    wa = loop_tracer.trace(la, options=ca.trace_options())
    wb = loop_tracer.trace(lb, options=cb.trace_options())
    x, y = center_quotient.make_class(wa), center_quotient.make_class(wb, warn=False)
    v = center_quotient.cosets_equal(x, y)
    shift = center_quotient.center_shift(x, y)
    da, db = _coset_data(wa), _coset_data(wb)
    lines = [
        "homotopic" if v else "not homotopic",
        f"a: {da['word']} (exponent sum {da['exponent_sum']}, class invariant {da['class_invariant']})",
        f"b: {db['word']} (exponent sum {db['exponent_sum']}, class invariant {db['class_invariant']})",
        f"center shift: {'none' if shift is None else shift}",
    ]
    run.emit("\n".join(lines), {"homotopic": v, "a": da, "b": db, "center_shift": shift})


def _cmd_presentation(run: _Run):
    p = center_quotient.emit_presentation(run.args.k)
    if run.args.k < center_quotient.MIN_STRANDS:
        warnings.warn(
            f"k = {run.args.k} < {center_quotient.MIN_STRANDS}: this presents P_k/Z_k only",
            HypothesisWarning,
        )
    run.emit(center_quotient.format_presentation(p), p.as_dict())


def _cmd_free_reduce(run: _Run):
    w = a4_free.reduce(a4_free.parse_free(run.args.word))
    run.emit(a4_free.format_free(w), {"letters": list(w.letters)})


def _cmd_free_conj(run: _Run):
    a = a4_free.parse_free(run.args.a, line=1)
    b = a4_free.parse_free(run.args.b, line=2)
    v = a4_free.free_conjugate(a, b)
    run.emit("conjugate" if v else "not conjugate", {"conjugate": v})


def _cmd_validate(run: _Run):
    loop, cfg = run.load_loop(run.args.file)
    rep = loop_tracer.validate(loop, cfg.tolerances())
    run.emit(rep.summary(), {
        "verdict": rep.verdict,
        "min_separation": float(rep.separation.min()),
        "min_collinearity": float(rep.collinearity.min()),
        "closure_residual": rep.closure_residual,
        "warnings": rep.messages,
    })


def _cmd_rotation(run: _Run):
    try:
        loop = loop_tracer.rotation_loop(run.args.k, run.args.samples)
    except ValueError as exc:
        raise BraidError(str(exc)) from None
    text = write_trajectory(loop, run.args.file_format)
    if run.args.output:
        Path(run.args.output).write_text(text)
    else:
        run.out.write(text)


COMMANDS = {
    "trace": _cmd_trace, "nf": _cmd_nf, "eq": _cmd_eq, "conj": _cmd_conj,
    "qeq": _cmd_qeq, "qconj": _cmd_qconj, "homotopic": _cmd_homotopic,
    "presentation": _cmd_presentation, "free-reduce": _cmd_free_reduce,
    "free-conj": _cmd_free_conj, "validate": _cmd_validate, "rotation": _cmd_rotation,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", HypothesisWarning)
        try:
            r = _Run(args, out, err)
            COMMANDS[args.command](r)
            status = 0
        except ResourceLimitError as exc:
            err.write(f"error: {exc}\n")
            status = EXIT_RESOURCE
        except (BraidError, ValueError, OSError) as exc:
            err.write(f"error: {exc}\n")
            status = EXIT_INPUT
    for w in caught:
        err.write(f"warning: {w.message}\n")
    return status


def main() -> None:
    sys.exit(run())
