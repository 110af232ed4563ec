"""Command-line interface.

Subcommands: construct, verify, closure, spectrum, classify, enumerate,
feasibility.  Exit codes: 0 feasible/verified, 1 infeasible/nonexistent or
not coherent (a report is still printed), 2 input error.  Reports go to
stdout, diagnostics to stderr.  The COHCONF_SEED environment variable
overrides the generic-element RNG seed recorded in spectral reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions
from .core import verify_coherence
from .errors import (
    CohconfError,
    DiagonalNotUnion,
    NoMatch,
    NotCoherent,
    NotConverseClosed,
)
from .families import (
    type_I,
    type_II,
    type_III,
    type_IV,
    type_V_check,
    type_VI_check,
    type_VII,
    type_VIII_check,
    wielandt_reports,
)
from .schemefile import (
    classification_doc,
    config_doc,
    emit_report,
    parse_scheme,
    write_scheme,
)
from .spectra import SrgParams, basic_feasibility, resolve_seed, stratum_dimensions
from .wl import from_graph, wl_closure, PairColoring


def _construct_partition(name: str, params: list[int]):
    graphs = {
        "paley": lambda q: constructions.paley_graph(q),
        "triangular": lambda m: constructions.triangular_graph(m),
        "petersen": lambda: constructions.petersen_graph(),
        "sts-block": lambda v: constructions.block_graph(constructions.steiner_triple_system(v)),
        "union": lambda c, s: constructions.disjoint_union_complete(c, s),
    }
    if name in graphs:
        return from_graph(graphs[name](*params)).to_partition()
    if name == "paley-tournament":
        return constructions.paley_tournament(*params)
    if name == "heawood-line":
        return constructions.heawood_line_scheme().partition
    raise CohconfError(
        f"unknown construction {name!r}; available: paley, paley-tournament, "
        "triangular, petersen, sts-block, union, heawood-line"
    )


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_construct(args) -> int:
    part = _construct_partition(args.name, args.params)
    sys.stdout.write(write_scheme(part.canonical(), comment=f"{args.name} {args.params}"))
    return 0


def cmd_verify(args) -> int:
    part = parse_scheme(_read(args.file))
    try:
        cc = verify_coherence(part)
    except (NotCoherent, DiagonalNotUnion, NotConverseClosed) as exc:
        print(json.dumps({"coherent": False, "error": str(exc)}, indent=2))
        return 1
    doc = {"coherent": True}
    doc.update(config_doc(cc))
    print(json.dumps(doc, indent=2))
    return 0


def cmd_closure(args) -> int:
    part = parse_scheme(_read(args.file))
    cc = wl_closure(PairColoring(part.n, part.cell))
    sys.stdout.write(write_scheme(cc.partition, comment=f"coherent closure, rank {cc.rank}"))
    return 0


def cmd_spectrum(args) -> int:
    part = parse_scheme(_read(args.file))
    cc = verify_coherence(part)
    seed = resolve_seed()
    dims = stratum_dimensions(cc, seed=seed)
    doc = config_doc(cc)
    doc["stratum_dimensions"] = list(dims.dims)
    doc["seed"] = seed
    print(json.dumps(doc, indent=2))
    return 0


def cmd_classify(args) -> int:
    from .families import classify

    part = parse_scheme(_read(args.file))
    cc = verify_coherence(part)
    seed = resolve_seed()
    dims = stratum_dimensions(cc, seed=seed)
    try:
        matches = classify(cc.n, dims, cc.rank)
    except NoMatch as exc:
        print(json.dumps({"points": cc.n, "pattern": list(dims.dims), "rank": cc.rank,
                          "seed": seed, "matches": [], "error": str(exc)}, indent=2))
        return 1
    print(json.dumps(classification_doc(matches, points=cc.n, pattern=dims,
                                        rank=cc.rank, seed=seed), indent=2))
    ok = any(rep.verdict.status == "feasible" for m in matches for rep in m.reports)
    return 0 if ok else 1


def _enumerate_reports(kind: str, a_max: int, n_max: int):
    kind = kind.lower()
    if kind == "wielandt":
        for a in range(1, a_max + 1):
            yield from wielandt_reports(a)
    elif kind == "i":
        for n in range(5, n_max + 1, 2):
            yield type_I(n)
    elif kind == "ii":
        for a in range(0, a_max + 1):
            yield from type_II(a)
    elif kind == "iii":
        for a in range(0, a_max + 1):
            yield from type_III(a)
    elif kind == "iv":
        for a in range(0, a_max + 1):
            yield from type_IV(a)
    elif kind == "vii":
        yield from type_VII()
    else:
        raise CohconfError(f"unknown family type {kind!r}")


def cmd_enumerate(args) -> int:
    kind = args.type.lower()
    if kind in ("v", "vi"):
        check = type_V_check if kind == "v" else type_VI_check
        all_infeasible = True
        for n in range(2, args.n_max + 1):
            result = check(n)
            if kind == "v":
                doc = {"n": n, "infeasible": True, "epsilons": list(result.epsilons),
                       "sum": result.sum, "contradiction": result.contradiction}
            else:
                doc = {"n": n, "infeasible": result.infeasible, "reason": result.reason,
                       "counterexample": list(result.counterexample.as_tuple())
                       if result.counterexample else None}
                all_infeasible &= result.infeasible
            print(json.dumps(doc))
        return 0 if all_infeasible else 1
    if kind == "viii":
        result = type_VIII_check()
        print(json.dumps({"infeasible": result.infeasible, "reason": result.reason,
                          "epsilons": list(result.certificate.epsilons),
                          "contradiction": result.certificate.contradiction}))
        return 0
    for report in _enumerate_reports(kind, args.a_max, args.n_max):
        print(emit_report(report, indent=None))
    return 0


def cmd_feasibility(args) -> int:
    p = SrgParams(args.n, args.k, args.lam, args.mu)
    fv = basic_feasibility(p)
    doc = {
        "srg": list(p.as_tuple()),
        "feasible": fv.feasible,
        "degenerate": fv.degenerate,
        "reason": fv.reason,
    }
    if fv.spectrum:
        s = fv.spectrum
        doc["spectrum"] = {"k": s.k, "r": str(s.r), "s": str(s.s), "f": s.f, "g": s.g,
                           "conference": s.conference}
    print(json.dumps(doc, indent=2))
    return 0 if fv.feasible else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cohconf", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named construction as a scheme file")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_construct)

    for name, fn, hlp in (
        ("verify", cmd_verify, "verify coherence of a scheme file"),
        ("closure", cmd_closure, "coherent (WL) closure of a scheme file"),
        ("spectrum", cmd_spectrum, "stratum dimensions of a coherent scheme file"),
        ("classify", cmd_classify, "match a scheme file against the parameter families"),
    ):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("file", help="scheme file path, or - for stdin")
        p.set_defaults(func=fn)

    p = sub.add_parser("enumerate", help="sweep a parameter family")
    p.add_argument("type", help="wielandt | i | ii | iii | iv | v | vi | vii | viii")
    p.add_argument("--a-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("feasibility", help="SRG parameter feasibility check")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lam", type=int, metavar="lambda")
    p.add_argument("mu", type=int)
    p.set_defaults(func=cmd_feasibility)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CohconfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
