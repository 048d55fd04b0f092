"""Command line front end: ``leibext check | cohomology | extend | verify-paper``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog
from .algebra import fingerprint, leibniz_check
from .catalog.fileformat import AlgebraFormatError, parse_rational, read_algebra, serialize_algebra, write_algebra
from .cohomology import BilinearMap, RepresentationPair, compute_H2, rep_check
from .extension import ExtensionSpec, abelian_module, build_extension, nilradical_lemma_check, validity_check
from .harness import ALL_TAGS, FAIL, INCONCLUSIVE, PASS, Check, Report, run_harness
from .linalg import format_rational

SEED_ENV = "LEIBEXT_SEED"
REP_RULES = {
    "r": "r_[x,y] = r_y r_x - r_x r_y",
    "l": "l_[x,y] = r_y l_x - l_x r_y",
    "ll": "l_x l_y = -l_x r_y",
}


class UsageError(Exception):
    pass


def _q(x) -> str:
    return format_rational(Fraction(x))


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except AlgebraFormatError:
        try:
            return Fraction(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


# -- rendering -------------------------------------------------------------------

def render(report: Report, values: list, fmt: str, timings: bool = True) -> str:
    counts = report.counts()
    lines = []
    if fmt == "machine":
        lines.append(f"command={report.command}")
        lines.append(f"seed={report.seed}")
        for k, v in values:
            lines.append(f"{k}={v}")
        for i, c in enumerate(report.sorted_checks(), 1):
            lines.append(f"check.{i}.tag={c.tag}")
            lines.append(f"check.{i}.status={c.status}")
            lines.append(f"check.{i}.name={c.name}")
            if c.detail:
                lines.append(f"check.{i}.detail={c.detail}")
            for k, v in c.data:
                lines.append(f"check.{i}.{k}={v}")
        for s in (PASS, FAIL, INCONCLUSIVE):
            lines.append(f"summary.{s}={counts[s]}")
        lines.append(f"exit_code={report.exit_code}")
        if timings:
            for k, v in report.timings.items():
                lines.append(f"timing.{k}_ms={round(v * 1000)}")
        return "\n".join(lines) + "\n"
    lines.append(f"leibext {report.command} (seed {report.seed})")
    for k, v in values:
        lines.append(f"  {k}: {v}")
    for c in report.sorted_checks():
        lines.append(f"{c.status.upper():<12} [{c.tag}] {c.name}" + (f": {c.detail}" if c.detail else ""))
    lines.append(f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[INCONCLUSIVE]} inconclusive")
    if timings and report.timings:
        lines.append("timings: " + ", ".join(f"{k} {v:.2f}s" for k, v in report.timings.items()))
    return "\n".join(lines) + "\n"


# -- inputs ------------------------------------------------------------------------

def _catalog_params(args, name: str) -> dict:
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if getattr(args, "delta", None) is not None:
        params["delta"] = args.delta
    return params


def load_entry(args):
    name = args.catalog
    try:
        return catalog.get(name, **_catalog_params(args, name))
    except KeyError:
        raise UsageError(f"unknown catalog algebra {name!r}; known: {', '.join(catalog.NAMES)}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def load_representation(args, entry) -> RepresentationPair:
    name = entry.name
    if name == "R":
        if args.gamma is None:
            raise UsageError("R needs --gamma g1 g2")
        return catalog.representation("R", tuple(args.gamma), entry.parameters["n"])
    if name in catalog.FIVE_DIM:
        if args.alpha is None or args.beta is None:
            raise UsageError(f"{name} needs --alpha a1 a2 and --beta b1 b2")
        return catalog.representation(name, (*args.alpha, *args.beta))
    if args.gamma or args.alpha or args.beta:
        raise UsageError(f"{name} takes no action scalars; it uses the trivial one-dimensional module")
    return RepresentationPair.zero(entry.table, 1)


def _rep_errors(p: RepresentationPair) -> list:
    ok, bad = rep_check(p)
    lab = p.g.basis_labels
    return [f"{REP_RULES[rule]} fails at x={lab[i]}, y={lab[j]}" for rule, i, j in bad]


def _h_label(entry) -> str:
    if entry.name == "R":
        return f"e{entry.parameters['n'] + 1}"
    if entry.name in catalog.FIVE_DIM:
        return "e4"
    return "h1"


def parse_omega(g, text: str) -> BilinearMap:
    """Inline cocycle ``"e4,e1=1; e1,e1=-1/2"`` with values in a one-dimensional h."""
    vals = {}
    for item in filter(None, (s.strip() for s in text.split(";"))):
        try:
            pair, coef = item.split("=")
            a, b = (s.strip() for s in pair.split(","))
        except ValueError:
            raise UsageError(f"cannot read cocycle entry {item!r}; expected 'left,right=value'") from None
        for lab in (a, b):
            if lab not in g.basis_labels:
                raise UsageError(f"unknown basis label {lab!r} in cocycle")
        if (a, b) in vals:
            raise UsageError(f"cocycle value at ({a},{b}) given twice")
        vals[(a, b)] = _rational(coef.strip())
    return BilinearMap.from_values(g, 1, vals)


def read_cocycle(g, path: str) -> BilinearMap:
    """Cocycle file: ``{"values": [{"left": "e4", "right": "e1", "value": "1"}]}``."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    items = doc.get("values") if isinstance(doc, dict) else None
    if not isinstance(items, list):
        raise UsageError("cocycle file must be an object with a 'values' list")
    text = "; ".join(f"{it['left']},{it['right']}={it['value']}" for it in items)
    return parse_omega(g, text)


# -- commands ------------------------------------------------------------------------

def cmd_check(args) -> tuple[Report, list]:
    if args.file and args.catalog:
        raise UsageError("give either a file or --catalog, not both")
    if args.file:
        try:
            table = read_algebra(args.file)
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        source = args.file
    elif args.catalog:
        table = load_entry(args).table
        source = args.catalog
    else:
        raise UsageError("check needs a file or --catalog NAME")
    report = Report("check", args.seed)
    ok, bad = leibniz_check(table)
    lab = table.basis_labels
    shown = "; ".join(f"({lab[i]},{lab[j]},{lab[k]})" for i, j, k in bad[:5])
    report.checks.append(Check("input", f"Leibniz identity for {table.name or source}", PASS if ok else FAIL,
                               f"{len(bad)} violating triples" + (f", first: {shown}" if bad else "")))
    fp = fingerprint(table)
    values = [("algebra", table.name or source), ("dim", str(table.dim))]
    values += [(f"fingerprint.{k}", _fmt(v)) for k, v in fp.__dict__.items()]
    return report, values


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return "[" + ",".join(str(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _bilinear_text(w: BilinearMap, g, h_labels) -> str:
    parts = []
    for (a, b), vec in _nonzero(w, g).items():
        expr = " + ".join(f"{_q(c)}*{h_labels[t]}" for t, c in enumerate(vec) if c)
        parts.append(f"({a},{b})->{expr}")
    return "; ".join(parts) if parts else "0"


def _nonzero(w: BilinearMap, g) -> dict:
    out = {}
    lab = g.basis_labels
    for i in range(g.dim):
        for j in range(g.dim):
            v = w.value(i, j)
            if any(v):
                out[(lab[i], lab[j])] = v
    return out


def cmd_cohomology(args) -> tuple[Report, list]:
    entry = load_entry(args)
    rep = load_representation(args, entry)
    errs = _rep_errors(rep)
    if errs:
        raise UsageError("rep_check violation: " + "; ".join(errs[:4]))
    h2 = compute_H2(rep)
    report = Report("cohomology", args.seed)
    values = [("algebra", entry.name), ("z2", str(h2.z2.dim)), ("b2", str(h2.b2.dim)), ("h2", str(h2.dim))]
    h = [_h_label(entry)]
    for k, w in enumerate(h2.representatives, 1):
        values.append((f"representative.{k}", _bilinear_text(w, entry.table, h)))
    return report, values


def cmd_extend(args) -> tuple[Report, list]:
    entry = load_entry(args)
    rep = load_representation(args, entry)
    errs = _rep_errors(rep)
    if errs:
        raise UsageError("rep_check violation: " + "; ".join(errs[:4]))
    g = entry.table
    if args.omega and args.cocycle:
        raise UsageError("give either --omega or --cocycle, not both")
    if args.cocycle:
        w = read_cocycle(g, args.cocycle)
    else:
        w = parse_omega(g, args.omega or "")
    hl = args.h_label or _h_label(entry)
    if hl in g.basis_labels:
        raise UsageError(f"label {hl!r} for h clashes with the basis of {entry.name}")
    spec = ExtensionSpec(g, abelian_module([hl]), rep, w)
    report = Report("extend", args.seed)
    ok, fails = validity_check(spec)
    values = [("algebra", entry.name), ("omega", _bilinear_text(w, g, [hl]))]
    if not ok:
        ident, idx = fails[0]
        lab = list(g.basis_labels) + [hl]
        where = ",".join(lab[i] for i in idx)
        report.checks.append(Check("input", "extension is a Leibniz algebra", FAIL,
                                   f"{len(fails)} violations; first: identity {ident} at ({where})"))
        return report, values
    report.checks.append(Check("input", "extension is a Leibniz algebra", PASS, "all identities hold"))
    ext = build_extension(spec, name=args.name or f"{entry.name}_ext")
    if entry.nilradical is not None:
        rpt = nilradical_lemma_check(spec, entry.nilradical, seed=args.seed)
        report.checks.append(Check(
            "lemma", "nilradical lemma", PASS if rpt.ok else FAIL,
            f"N in ker l and ker r: {rpt.in_kernel}; Z(N-hat)=h: {rpt.center_is_h}; "
            f"criterion: {rpt.criterion}; two-sided criterion: {rpt.criterion_two_sided}"))
    for (a, b), vec in ext.products().items():
        values.append((f"product.{a}.{b}", " + ".join(f"{_q(c)}*{k}" for k, c in vec.items())))
    if args.output:
        write_algebra(ext, args.output)
        values.append(("output", args.output))
    else:
        values.append(("table", json.dumps(json.loads(serialize_algebra(ext)), separators=(",", ":"))))
    return report, values


def cmd_verify(args) -> tuple[Report, list]:
    if args.list_tags:
        return Report("verify-paper", args.seed), [("tags", ",".join(ALL_TAGS))]
    try:
        report = run_harness(args.seed, args.only)
    except KeyError as exc:
        raise UsageError(f"{exc.args[0]}; known tags: {', '.join(ALL_TAGS)}") from None
    return report, []


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get(SEED_ENV, "0"))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--seed", type=int, default=default_seed,
                        help=f"seed for randomized probes (default from ${SEED_ENV}, else 0)")
    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--catalog", metavar="NAME")
    alg.add_argument("--n", type=int)
    alg.add_argument("--delta", type=_rational)
    rep = argparse.ArgumentParser(add_help=False)
    rep.add_argument("--gamma", nargs=2, type=_rational, metavar=("G1", "G2"))
    rep.add_argument("--alpha", nargs=2, type=_rational, metavar=("A1", "A2"))
    rep.add_argument("--beta", nargs=2, type=_rational, metavar=("B1", "B2"))

    p = argparse.ArgumentParser(prog="leibext", description="Abelian extensions of solvable Leibniz algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common, alg], help="Leibniz identity and invariants of one algebra")
    c.add_argument("file", nargs="?", help="algebra file (JSON)")
    c.set_defaults(run=cmd_check)
    h = sub.add_parser("cohomology", parents=[common, alg, rep], help="dimensions of Z2, B2, H2")
    h.set_defaults(run=cmd_cohomology)
    e = sub.add_parser("extend", parents=[common, alg, rep], help="build the extension by a cocycle")
    e.add_argument("--omega", help="inline cocycle, e.g. 'e4,e1=1; e1,e1=-1/2'")
    e.add_argument("--cocycle", metavar="FILE", help="cocycle file (JSON)")
    e.add_argument("--h-label", help="basis label of the one-dimensional module")
    e.add_argument("--name", help="name written into the output table")
    e.add_argument("--output", "-o", metavar="FILE", help="write the extension table here")
    e.set_defaults(run=cmd_extend)
    v = sub.add_parser("verify-paper", parents=[common], help="re-verify every catalogued claim")
    v.add_argument("--only", action="append", metavar="TAG", help="restrict to a citation tag (repeatable)")
    v.add_argument("--list-tags", action="store_true")
    v.add_argument("--no-timings", action="store_true", help="omit timings so output is byte-identical")
    v.set_defaults(run=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, values = args.run(args)
    except (UsageError, AlgebraFormatError) as exc:
        print(f"leibext {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, values, args.format, timings=not getattr(args, "no_timings", False)))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
