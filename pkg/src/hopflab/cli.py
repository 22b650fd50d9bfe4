"""Command-line frontend.

Subcommands wrap the verifier pipeline stage by stage; `props` runs the whole
identity suite.  Output is either human-readable text or line-delimited JSON
records (stable field order, so golden files diff cleanly).  Exit codes:
0 all checks pass, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys

from . import __version__
from .ff import Field
from .hopf import HopfError
from .hopfio import ParseError, algebra_digest, load_hopf, load_module, load_twist, parse_hopf
from .integrals import integral_data, verify_frobenius_identities, cocommutativity_equivalence
from .indicators import (
    BudgetExceeded,
    indicator,
    indicator_table,
    operator_indicator,
    power_centrality_check,
)
from .report import CheckReport
from .twist import gauge_invariance_check
from .wedderburn import FieldTooSmall, verify_wedderburn_identities, wedderburn_data


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self.failed = False

    def _json(self, record: dict):
        self.out.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")

    def meta(self, digest: str, seed: int):
        if self.fmt == "json-lines":
            self._json({"record": "meta", "tool": f"hopflab {__version__}", "input": digest, "seed": seed})
        else:
            self.out.write(f"hopflab {__version__}  input {digest}  seed {seed}\n")

    def note(self, message: str):
        if self.fmt == "json-lines":
            self._json({"record": "note", "message": message})
        else:
            self.out.write(f"note: {message}\n")

    def title(self, text: str):
        if self.fmt == "text":
            self.out.write(f"== {text} ==\n")

    def entry(self, name: str, status: str, witness: str | None = None):
        if status == "fail":
            self.failed = True
        if self.fmt == "json-lines":
            rec = {"record": "check", "name": name, "status": status}
            if witness:
                rec["witness"] = witness
            self._json(rec)
        else:
            line = f"{status:<5} {name}"
            if witness:
                line += f"  [{witness}]"
            self.out.write(line + "\n")

    def report(self, rep: CheckReport):
        self.title(rep.title)
        for e in rep.entries:
            self.entry(e.name, "pass" if e.ok else "fail", e.witness)

    def value(self, name: str, value: str):
        if self.fmt == "json-lines":
            self._json({"record": "value", "name": name, "value": value})
        else:
            self.out.write(f"{name} = {value}\n")

    def table(self, tab, label: str):
        if self.fmt == "json-lines":
            F = tab.algebra.field
            for i, (d, row) in enumerate(zip(tab.dims, tab.rows)):
                self._json(
                    {
                        "record": "row",
                        "table": label,
                        "module": f"V_{i}",
                        "dim": d,
                        "values": {str(n): F.format_element(row[n]) for n in tab.n_values},
                    }
                )
            self._json(
                {
                    "record": "row",
                    "table": label,
                    "module": "regular",
                    "dim": tab.algebra.n,
                    "values": {str(n): F.format_element(tab.regular_row[n]) for n in tab.n_values},
                }
            )
        else:
            self.title(label)
            for line in tab.lines():
                self.out.write(line + "\n")

    def error(self, kind: str, message: str):
        self.failed = True
        if self.fmt == "json-lines":
            self._json({"record": "error", "kind": kind, "message": message})
        else:
            self.out.write(f"error ({kind}): {message}\n")

    def done(self) -> int:
        code = 1 if self.failed else 0
        if self.fmt == "json-lines":
            self._json({"record": "result", "exit": code})
        else:
            self.out.write(("FAIL" if code else "ok") + "\n")
        return code


def _read_algebra(path: str, verify: bool):
    if path == "-":
        return parse_hopf(sys.stdin.read(), verify=verify)
    return load_hopf(path, verify=verify)


def _parse_n_range(text: str):
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"bad n-range {text!r}, want a..b")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise argparse.ArgumentTypeError(f"empty n-range {text!r}")
    return list(range(a, b + 1))


def _precondition_entries(H, em: Emitter) -> bool:
    p = H.field.p
    ok = p * p > H.n
    em.entry(f"p² = {p * p} > dim = {H.n}", "pass" if ok else "fail")
    return ok


def _with_extension(H, em: Emitter, allow: bool, fn):
    """Run fn(H, data); on FieldTooSmall optionally extend scalars once."""
    data = integral_data(H)
    try:
        return fn(H, data)
    except FieldTooSmall as exc:
        if not allow:
            raise
        F = H.field
        target = Field(F.p, F.k * exc.degree)
        em.note(f"extending scalars to GF({F.p}^{F.k * exc.degree}) after: {exc}")
        H2 = H.extend_scalars(target)
        return fn(H2, integral_data(H2))


def cmd_check(args, em: Emitter) -> None:
    H = _read_algebra(args.file, verify=False)
    em.meta(algebra_digest(H), args.seed)
    em.report(H.verify_axioms())
    if not _precondition_entries(H, em):
        return
    try:
        data = integral_data(H)
    except HopfError as exc:
        em.entry("semisimplicity (ε(Λ) ≠ 0)", "fail", str(exc))
        return
    em.entry("integral space is one-dimensional", "pass")
    em.entry("dual integral found and normalized (λ(Λ) = 1)", "pass")
    em.entry("semisimplicity (ε(Λ) ≠ 0)", "pass")
    em.entry("S² is conjugation by u", "pass")
    F = H.field
    em.value("ε(Λ)", F.format_element(data.eps_of_lambda))


def cmd_integrals(args, em: Emitter) -> None:
    H = _read_algebra(args.file, verify=not args.no_verify)
    em.meta(algebra_digest(H), args.seed)
    data = integral_data(H)
    F = H.field
    em.value("Λ", _vec(F, data.lambda_H))
    em.value("λ", _vec(F, data.lambda_dual))
    em.value("u", _vec(F, data.u))
    em.value("u⁻¹", _vec(F, data.u_inv))
    em.value("g", _vec(F, data.g))
    em.value("ε(Λ)", F.format_element(data.eps_of_lambda))
    em.report(verify_frobenius_identities(H, data))
    em.report(cocommutativity_equivalence(H, data))


def cmd_wedderburn(args, em: Emitter) -> None:
    H = _read_algebra(args.file, verify=not args.no_verify)
    em.meta(algebra_digest(H), args.seed)
    rng = random.Random(args.seed)

    def run(H2, data):
        wd = wedderburn_data(H2, data, rng)
        F = H2.field
        for i, e in enumerate(wd.idempotents):
            em.value(f"e_{i} (d={wd.dims[i]})", _vec(F, e))
        em.value("dims", "{" + ",".join(str(d) for d in sorted(wd.dims)) + "}")
        em.value("λ(e_i)", _vec(F, wd.lambda_of_e))
        em.value("schur c_i", _vec(F, wd.schur))
        em.report(verify_wedderburn_identities(H2, wd, data))

    _with_extension(H, em, args.extend_field, run)


def cmd_indicators(args, em: Emitter) -> None:
    H = _read_algebra(args.file, verify=not args.no_verify)
    em.meta(algebra_digest(H), args.seed)
    rng = random.Random(args.seed)

    def run(H2, data):
        wd = wedderburn_data(H2, data, rng)
        em.report(power_centrality_check(H2, data, args.n_range))
        tab = indicator_table(H2, data, wd, args.n_range)
        em.entry("character and closed-form routes agree", "pass")
        em.entry("table invariant under V ↦ V* and n ↦ -n", "pass")
        em.table(tab, "indicators")
        if args.module:
            _module_rows(args, em, H2, data)

    _with_extension(H, em, args.extend_field, run)


def _module_rows(args, em: Emitter, H, data) -> None:
    V = load_module(args.module, H, verify=True)
    em.entry("module axioms", "pass")
    F = H.field
    label = V.name or "module"
    vals = {}
    for n in args.n_range:
        vals[n] = indicator(H, data, V, n)
    if em.fmt == "json-lines":
        em._json(
            {
                "record": "row",
                "table": "indicators",
                "module": label,
                "dim": V.dim,
                "values": {str(n): F.format_element(vals[n]) for n in args.n_range},
            }
        )
    else:
        em.out.write(
            f"{label} d={V.dim}: "
            + "  ".join(f"{F.format_element(vals[n]):>3}" for n in args.n_range)
            + "\n"
        )
    for n in [n for n in args.n_range if n >= 1]:
        try:
            by_trace = operator_indicator(V, data, n)
        except BudgetExceeded as exc:
            em.entry(f"trace route, n = {n}", "skip", str(exc))
            continue
        em.entry(f"trace route agrees with character route, n = {n}", "pass" if by_trace == vals[n] else "fail")


def cmd_props(args, em: Emitter) -> None:
    H = _read_algebra(args.file, verify=False)
    em.meta(algebra_digest(H), args.seed)
    em.report(H.verify_axioms())
    if not _precondition_entries(H, em):
        return
    rng = random.Random(args.seed)

    def run(H2, data):
        em.report(verify_frobenius_identities(H2, data))
        em.report(cocommutativity_equivalence(H2, data))
        wd = wedderburn_data(H2, data, rng)
        em.report(verify_wedderburn_identities(H2, wd, data))
        em.report(power_centrality_check(H2, data, args.n_range))
        indicator_table(H2, data, wd, args.n_range)
        em.entry("indicator table cross-checks", "pass")

    _with_extension(H, em, args.extend_field, run)


def cmd_twist_check(args, em: Emitter) -> None:
    H = _read_algebra(args.file, verify=not args.no_verify)
    em.meta(algebra_digest(H), args.seed)
    tw = load_twist(args.twist, H, verify=False)
    rng = random.Random(args.seed)
    rep, tab, tab_J = gauge_invariance_check(H, tw, args.n_range, rng)
    em.report(rep)
    em.table(tab, "indicators")
    em.table(tab_J, "indicators^J")


def _vec(F, coords) -> str:
    return "(" + ", ".join(F.format_element(c) for c in coords) + ")"


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hopflab",
        description="integrals, Wedderburn data, and higher indicators "
        "for finite-dimensional semisimple Hopf algebras over GF(p^k)",
    )
    ap.add_argument("--version", action="version", version=f"hopflab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="algebra file, or - for stdin")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--seed", type=int, default=None, help="pins randomized splitting")
    common.add_argument("--no-verify", action="store_true", help="skip axiom verification on load")
    common.add_argument(
        "--extend-field",
        action="store_true",
        help="authorize one automatic scalar extension if the field is too small",
    )
    ranged = argparse.ArgumentParser(add_help=False)
    ranged.add_argument("--n-range", type=_parse_n_range, default=list(range(-4, 7)), metavar="a..b")

    sub.add_parser("check", parents=[common], help="axioms, precondition, semisimplicity")
    sub.add_parser("integrals", parents=[common], help="Λ, λ, u, g and their identities")
    sub.add_parser("wedderburn", parents=[common], help="idempotents, dimensions, characters")
    p = sub.add_parser("indicators", parents=[common, ranged], help="indicator tables")
    p.add_argument("--module", help="module file: adds its indicator row and the trace route")
    p = sub.add_parser("twist-check", parents=[common, ranged], help="gauge invariance under a twist")
    p.add_argument("--twist", required=True, help="twist file")
    sub.add_parser("props", parents=[common, ranged], help="the full identity suite")
    return ap


_COMMANDS = {
    "check": cmd_check,
    "integrals": cmd_integrals,
    "wedderburn": cmd_wedderburn,
    "indicators": cmd_indicators,
    "twist-check": cmd_twist_check,
    "props": cmd_props,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = int(os.environ.get("HOPFLAB_SEED", "0"))
    em = Emitter(args.format)
    try:
        _COMMANDS[args.command](args, em)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except HopfError as exc:
        em.error(type(exc).__name__, str(exc))
    return em.done()


if __name__ == "__main__":
    sys.exit(main())
