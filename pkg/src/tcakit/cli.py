"""Command line front end.

Every infinite object is truncated by an explicit, mandatory flag
(``--cutoff`` or ``--imax``); with ``--json`` the output is an envelope
``{"command", "parameters", "result", "version"}``.

Exit codes: 0 success, 2 argument error, 1 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import __version__
from .bott import bott_sort
from .characters import EquivCharacter, cauchy_A, k_module_character, torsion_injective_character
from .ktheory import KClass, basis_class, fourier, pairing_matrix, rectangle_basis
from .localcoh import derived_saturation
from .partitions import parse_partition, parse_weight
from .resolutions import betti_table, regularity_report
from .spectrum import chain_length, krull_dimension, maximal_chain


class ArgumentError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight_arg(text: str):
    try:
        return parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ArgumentError(f"{self.prog}: error: {message}")


def _character_text(ch: EquivCharacter) -> str:
    star = "*" if ch.dual_e else ""
    if not ch.terms:
        return "0"
    lines = []
    for (a, b), m in ch.items():
        prefix = "" if m == 1 else f"{m} "
        lines.append(f"{prefix}S{list(a)}(E{star}) x S{list(b)}(V)")
    return "\n".join(lines)


def _cmd_bott(args):
    w = list(args.weight)
    if len(w) > args.d:
        raise ValueError(f"weight {w} is longer than d={args.d}")
    w += [0] * (args.d - len(w))
    res = bott_sort(w)
    payload = {"vanishes": True} if res.vanishes else {"gamma": list(res.gamma), "steps": res.steps}
    return payload, str(res)


def _cmd_cauchy(args):
    ch = cauchy_A(args.d, args.cutoff)
    return ch.to_json(), _character_text(ch)


def _cmd_kmodule(args):
    ch = k_module_character(args.r, args.lam, args.d, args.cutoff)
    return ch.to_json(), _character_text(ch)


def _cmd_jmodule(args):
    ch = torsion_injective_character(args.lam, args.d, args.cutoff)
    return ch.to_json(), _character_text(ch)


def _cmd_satur(args):
    ch = derived_saturation(args.mu, args.d, args.i, args.cutoff)
    return ch.to_json(), _character_text(ch)


def _cmd_resolve(args):
    table = betti_table(args.lam, args.n, args.dimE, args.imax)
    return table.to_json(), table.render()


def _cmd_regularity(args):
    rep = regularity_report(args.lam, args.n, args.dimE, args.imax)
    payload = {"observed": rep.observed, "bound": rep.bound, "certified": rep.certified}
    return payload, str(rep)


def _cmd_pairing(args):
    basis = rectangle_basis(args.d, args.r)
    mat = pairing_matrix(args.d, args.r)
    text = ["basis: " + " ".join(str(list(p)) for p in basis)]
    text += [" ".join(f"{x:3d}" for x in row) for row in mat]
    return {"basis": [list(p) for p in basis], "matrix": mat}, "\n".join(text)


def _parse_class(text: str, d: int) -> KClass:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed --class {text!r}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ValueError(f"malformed --class {text!r}: expected an object")
    if "blocks" in data:
        x = KClass.from_json(data)
        if x.d != d:
            raise ValueError(f"--class has d={x.d} but --d is {d}")
        return x
    try:
        return basis_class(int(data["r"]), parse_partition(json.dumps(data.get("lambda", []))),
                           parse_partition(json.dumps(data.get("mu", []))), d)
    except KeyError as exc:
        raise ValueError(f"malformed --class {text!r}: missing key {exc}") from None


def _cmd_fourier(args):
    x = _parse_class(args.cls, args.d)
    y = fourier(x)
    return y.to_json(), repr(y)


def _cmd_chain(args):
    chain = maximal_chain(args.d)
    dim = krull_dimension(args.d)
    lines = [f"{label}: {label.describe()}" for label in chain]
    lines.append(f"length {chain_length(chain)}, dimension {dim}")
    payload = {"labels": [str(c) for c in chain], "length": chain_length(chain), "dimension": dim}
    return payload, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tcakit", description="Invariants of modules over Sym(C^d (x) C^infinity).")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        for flag, kw in flags.items():
            p.add_argument(flag, required=True, **kw)
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")
        p.set_defaults(func=func)
        return p

    nat = {"type": _nat}
    part = lambda dest: {"type": _partition_arg, "dest": dest}

    add("bott", _cmd_bott, "Bott's algorithm on a weight", **{"--weight": {"type": _weight_arg}, "--d": nat})
    add("cauchy", _cmd_cauchy, "character of A", **{"--d": nat, "--cutoff": nat})
    add("kmodule", _cmd_kmodule, "character of K_{r,lambda}",
        **{"--r": nat, "--lambda": part("lam"), "--d": nat, "--cutoff": nat})
    add("jmodule", _cmd_jmodule, "character of the torsion injective J_lambda",
        **{"--lambda": part("lam"), "--d": nat, "--cutoff": nat})
    add("satur", _cmd_satur, "derived saturation R^i S(S_mu(K))",
        **{"--mu": part("mu"), "--d": nat, "--i": nat, "--cutoff": nat})
    res_flags = {"--lambda": part("lam"), "--n": nat, "--dimE": nat, "--imax": nat}
    add("resolve", _cmd_resolve, "Betti table of (S_lambda (x) A)^{<=n}", **res_flags)
    add("regularity", _cmd_regularity, "regularity against its bound", **res_flags)
    add("fourier", _cmd_fourier, "Fourier transform on K(A)", **{"--d": nat, "--class": {"dest": "cls"}})
    add("chain", _cmd_chain, "maximal chain in Gr(C^d)", **{"--d": nat})

    kt = sub.add_parser("ktheory", help="K-theory of Grassmannians and of A")
    kt_sub = kt.add_subparsers(dest="ktheory_command", required=True, parser_class=_Parser)
    p = kt_sub.add_parser("pairing", help="Euler pairing matrix on Gr_r(C^d)")
    p.add_argument("--d", required=True, type=_nat)
    p.add_argument("--r", required=True, type=_nat)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pairing)
    p = kt_sub.add_parser("fourier", help="Fourier transform on K(A)")
    p.add_argument("--d", required=True, type=_nat)
    p.add_argument("--class", required=True, dest="cls")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fourier)
    return parser


def _parameters(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("func", "json"):
            continue
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ArgumentError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    func: Callable = args.func
    try:
        payload, text = func(args)
    except ValueError as exc:
        print(f"tcakit: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"tcakit: internal error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        command = args.command if args.command != "ktheory" else f"ktheory {args.ktheory_command}"
        envelope = {"command": command, "parameters": _parameters(args), "result": payload, "version": __version__}
        print(json.dumps(envelope, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())
