"""Command-line front end.

Every construction command loads a workspace file, applies one
construction to a named entity, and prints the result in the workspace
format, re-printing the endpoint objects so the output re-loads on its
own.  Monoids print as the object form of their ambient presentation
(group plus generator cone).  `check` and `check-one` run the
verification harness and print certificate reports.

Exit codes: 0 success or all checks passed, 1 usage or parse error,
2 validation error, 3 verification failure.
"""

import argparse
import sys

from . import fileformat as ff
from . import monpos as mp
from . import preord as po
from . import verify as v
from .errors import ParseError, PreordError, ValidationError


class _Parser(argparse.ArgumentParser):
    """argparse front end that follows the exit-code contract."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


class _Emitter:
    """Collects output blocks, keeping every referenced object defined."""

    def __init__(self):
        self.ws = ff.Workspace()

    def obj(self, name: str, obj) -> str:
        if name not in self.ws.objects:
            self.ws.objects[name] = obj
        return name

    def mor(self, name: str, mor, dom_name: str, cod_name: str) -> None:
        self.ws.morphisms[name] = mor
        self.ws.endpoints[name] = (dom_name, cod_name)

    def text(self) -> str:
        return ff.format_workspace(self.ws)


def _flag_lines(pairs) -> str:
    return "\n".join(f"{label} {'true' if flag else 'false'}" for label, flag in pairs) + "\n"


def _need(ws: ff.Workspace, kind: str, name: str):
    table = ws.objects if kind == "object" else ws.morphisms
    if name not in table:
        raise ValidationError(f"unknown {kind} {name!r}")
    return table[name]


def _run_on_morphism(command: str, ws: ff.Workspace, name: str) -> str:
    m = _need(ws, "morphism", name)
    dom_name, cod_name = ws.endpoints[name]
    out = _Emitter()
    if command == "kernel":
        kobj, incl = po.kernel(m)
        out.obj(f"{name}.ker", kobj)
        out.obj(dom_name, m.dom)
        out.mor(f"{name}.ker.incl", incl, f"{name}.ker", dom_name)
    elif command == "cokernel":
        qobj, proj = po.cokernel(m)
        out.obj(cod_name, m.cod)
        out.obj(f"{name}.coker", qobj)
        out.mor(f"{name}.coker.proj", proj, cod_name, f"{name}.coker")
    elif command == "zkernel":
        kobj, incl = po.z_kernel(m)
        out.obj(f"{name}.zker", kobj)
        out.obj(dom_name, m.dom)
        out.mor(f"{name}.zker.incl", incl, f"{name}.zker", dom_name)
    elif command == "zcokernel":
        qobj, proj = po.z_cokernel(m)
        out.obj(cod_name, m.cod)
        out.obj(f"{name}.zcok", qobj)
        out.mor(f"{name}.zcok.proj", proj, cod_name, f"{name}.zcok")
    else:  # classify-mor
        flags = po.classify_morphism(m)
        return _flag_lines(
            [
                ("mono", flags.mono),
                ("epi", flags.epi),
                ("regular-epi", flags.regular_epi),
                ("z-trivial", po.is_z_trivial(m)),
            ]
        )
    return out.text()


def _run_on_object(command: str, ws: ff.Workspace, name: str) -> str:
    x = _need(ws, "object", name)
    out = _Emitter()
    if command == "canonical-seq":
        seq = po.canonical_sequence(x)
        out.obj(f"{name}.torsion", seq.torsion)
        out.obj(name, x)
        out.obj(f"{name}.torsionfree", seq.torsion_free)
        out.mor(f"{name}.kappa", seq.kappa, f"{name}.torsion", name)
        out.mor(f"{name}.eta", seq.eta, name, f"{name}.torsionfree")
    elif command == "classify":
        flags = po.classify_object(x)
        return _flag_lines(
            [
                ("torsion", flags.torsion),
                ("torsion-free", flags.torsion_free),
                ("z-trivial", flags.torsion and flags.torsion_free),
            ]
        )
    elif command == "functor-d":
        dx = po.functor_D(x)
        iota = po.counit_iota(x)
        out.obj(f"{name}.D", dx)
        out.obj(name, x)
        out.mor(f"{name}.iota", iota, f"{name}.D", name)
    elif command == "functor-c":
        cx, pi = po.functor_C(x)
        out.obj(name, x)
        out.obj(f"{name}.C", cx)
        out.mor(f"{name}.pi", pi, name, f"{name}.C")
    elif command == "stable":
        out.obj(f"{name}.P", mp.ambient_object(mp.positive_cone(x)))
    elif command == "grpcompletion":
        out.obj(f"{name}.grp", mp.completion_object(mp.positive_cone(x)))
    elif command == "units":
        umon, _ = mp.units(mp.positive_cone(x))
        out.obj(f"{name}.units", mp.ambient_object(umon))
    elif command == "reduce":
        rmon, _ = mp.quotient_by_units(mp.positive_cone(x))
        out.obj(f"{name}.reduced", mp.ambient_object(rmon))
    else:  # compare
        cmpr = mp.comparison_morphism(mp.positive_cone(x))
        out.obj(f"{name}.grp", cmpr.dom)
        out.obj(name, x)
        out.mor(f"{name}.compare", cmpr, f"{name}.grp", name)
    return out.text()


_MORPHISM_COMMANDS = ("kernel", "cokernel", "zkernel", "zcokernel", "classify-mor")
_OBJECT_COMMANDS = (
    "canonical-seq",
    "classify",
    "functor-d",
    "functor-c",
    "stable",
    "grpcompletion",
    "units",
    "reduce",
    "compare",
)


def _run_check(args) -> tuple[str, int]:
    certs = v.run_all(args.seed, args.samples)
    text = v.format_certificates(certs)
    return text, 0 if all(c.passed for c in certs) else 3


def _run_check_one(args) -> tuple[str, int]:
    if args.claim == "gjm-pushout-finite":
        raise ValidationError("unsupported (pushout checks requested in finite universe)")
    cert = v.run_claim(args.claim, args.seed, args.samples)
    return v.format_certificate(cert) + "\n", 0 if cert.passed else 3


def build_parser() -> _Parser:
    parser = _Parser(prog="preordgrp", description=__doc__.split("\n\n")[0])
    parser.add_argument("--out", help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    for command in _MORPHISM_COMMANDS:
        p = sub.add_parser(command)
        p.add_argument("file", help="workspace file")
        p.add_argument("name", help="morphism name")
        p.add_argument("--universe-cap", type=int, help="finite order cap override")
    for command in _OBJECT_COMMANDS:
        p = sub.add_parser(command)
        p.add_argument("file", help="workspace file")
        p.add_argument("name", help="object name")
        p.add_argument("--universe-cap", type=int, help="finite order cap override")
    p = sub.add_parser("check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p = sub.add_parser("check-one")
    p.add_argument("claim", help="one of " + ", ".join(v.claim_names()))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    return parser


def _load(args) -> ff.Workspace:
    try:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc.strerror}")
    return ff.parse_workspace(text, universe_cap=args.universe_cap)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            text, code = _run_check(args)
        elif args.command == "check-one":
            text, code = _run_check_one(args)
        elif args.command in _MORPHISM_COMMANDS:
            text, code = _run_on_morphism(args.command, _load(args), args.name), 0
        else:
            text, code = _run_on_object(args.command, _load(args), args.name), 0
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
