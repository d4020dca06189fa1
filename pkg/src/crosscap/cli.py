"""Command-line interface.

Exit codes: 0 success, 1 input or validation error, 2 resource limit,
3 verification failure (census mismatch, failed catalog claim, incomplete
determinability closure on a non-sporadic surface, undeterminable Brown edge).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import brown, catalog, complex as cx, diagram as dg, orbits, presentation as pr, rs, snf, trees
from .surface import is_sporadic
from .todd_coxeter import DEFAULT_MAX_COSETS, Index, todd_coxeter

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for resource limits
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(args, human: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(human)


def _census_lines(c: orbits.Census) -> list[str]:
    return [
        f"nonseparating, orientable complement: {c.nonsep_orientable_complement}",
        f"nonseparating, non-orientable complement: {c.nonsep_nonorientable_complement}",
        f"separating: {c.separating}",
        f"total: {c.total}",
    ]


def _census_json(c: orbits.Census) -> dict:
    return {
        "nonsep_orientable_complement": c.nonsep_orientable_complement,
        "nonsep_nonorientable_complement": c.nonsep_nonorientable_complement,
        "separating": c.separating,
        "total": c.total,
    }


def cmd_census(args) -> int:
    g, n, r = args.genus, args.boundary, args.dim
    if r not in (1, 2, 3):
        raise UsageError("--dim must be 1, 2 or 3")
    if r > 1:
        if args.method == "formula":
            raise UsageError("the formula only counts vertex orbits; use --method enumerate for --dim > 1")
        count = len(orbits.enumerate_orbit_simplices(g, n, r, args.max_candidates))
        _emit(args, f"total: {count}", {"genus": g, "boundary": n, "dim": r, "total": count})
        return EXIT_OK
    out: dict = {"genus": g, "boundary": n, "dim": 1}
    lines = []
    formula = enumerated = None
    if args.method in ("formula", "both"):
        formula = orbits.vertex_orbit_census(g, n, literal=args.literal)
        out["formula"] = _census_json(formula)
    if args.method in ("enumerate", "both"):
        enumerated = orbits.enumerated_census(g, n, args.max_candidates)
        out["enumerate"] = _census_json(enumerated)
    if args.method == "both":
        agree = formula == enumerated
        out["agree"] = agree
        lines += ["formula:"] + ["  " + s for s in _census_lines(formula)]
        lines += ["enumerate:"] + ["  " + s for s in _census_lines(enumerated)]
        if agree:
            lines.append(f"total: {formula.total}")
            out["total"] = formula.total
        else:
            lines.append(f"MISMATCH: formula {formula.total}, enumerate {enumerated.total}")
    else:
        c = formula or enumerated
        lines += _census_lines(c)
        out["total"] = c.total
    _emit(args, "\n".join(lines), out)
    if args.method == "both" and not out["agree"]:
        return EXIT_VERIFY
    return EXIT_OK


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_orbit_eq(args) -> int:
    d1 = dg.from_json(_load_json(args.a))
    d2 = dg.from_json(_load_json(args.b))
    m = dg.orbit_equal(d1, d2, ordered=args.ordered)
    if m.equivalent:
        pairs = ", ".join(f"{i + 1}->{j}" for i, j in enumerate(m.witness))
        human = f"equivalent: yes\nwitness: {pairs}"
    else:
        human = "equivalent: no"
    _emit(args, human, {"equivalent": m.equivalent, "witness": list(m.witness) if m.witness else None})
    return EXIT_OK


def cmd_complex(args) -> int:
    g, n = args.genus, args.boundary
    if args.g1_symbolic:
        if g != 1:
            raise UsageError("--g1-symbolic needs --genus 1")
        x = cx.g1_symbolic_complex(n)
    else:
        x = cx.build_quotient_complex(g, n, args.max_candidates)
    cx.dump_complex(x, args.out)
    counts = {"vertices": len(x.vertices), "edges": len(x.edges), "triangles": len(x.triangles)}
    human = f"vertices: {counts['vertices']}\nedges: {counts['edges']}\ntriangles: {counts['triangles']}"
    _emit(args, human, dict(counts, out=args.out))
    return EXIT_OK


def cmd_tree(args) -> int:
    g, n = args.genus, args.boundary
    if args.infile:
        x = cx.load_complex(args.infile)
        if (x.genus, x.boundary) != (g, n):
            raise UsageError(f"complex is for ({x.genus},{x.boundary}), not ({g},{n})")
    elif g == 1 and n >= 5:
        x = cx.g1_symbolic_complex(n)
    else:
        x = cx.build_quotient_complex(g, n, args.max_candidates)
    marks = trees.tree_and_closure(x, g, n, ordered=args.ordered)
    total = len(x.edges)
    det = len(marks.determinable)
    complete = det == total
    if args.out:
        x.tree = sorted(marks.tree)
        x.determinable = sorted(marks.determinable)
        cx.dump_complex(x, args.out)
    status = "ALL" if complete else f"{det}/{total}"
    human = f"determinable: {status} (edges={total}, tree={len(marks.tree)})"
    _emit(
        args,
        human,
        {"edges": total, "tree": len(marks.tree), "determinable": det, "complete": complete},
    )
    if not complete and not is_sporadic(g, n):
        return EXIT_VERIFY
    return EXIT_OK


def _parse_sign(text: str) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        if not sep or value.strip() not in ("1", "+1", "-1"):
            raise UsageError(f"bad sign entry {part!r}; expected NAME=+1 or NAME=-1")
        out[name.strip()] = int(value)
    return out


def cmd_pres(args) -> int:
    p = pr.load(args.file)
    if args.action == "abelianize":
        ab = snf.abelianization(p)
        _emit(args, str(ab), {"torsion": list(ab.torsion), "free_rank": ab.free_rank})
        return EXIT_OK
    if args.action == "rs":
        if args.sign is None:
            raise UsageError("pres rs needs --sign")
        sign = _parse_sign(args.sign)
        unknown = set(sign) - set(p.generators)
        if unknown:
            raise UsageError(f"--sign names unknown generators {sorted(unknown)}")
        q = rs.reidemeister_schreier_index2(p, sign)
        if args.json:
            print(json.dumps(pr.to_json(q), sort_keys=True))
        else:
            sys.stdout.write(pr.to_text(q))
        return EXIT_OK
    # tc
    sub = [pr.parse_expr(w) for w in (args.subgroup or "").split(";") if w.strip()]
    res = todd_coxeter(p, sub, args.max_cosets)
    if isinstance(res, Index):
        _emit(args, f"index: {res.value}", {"index": res.value})
        return EXIT_OK
    _emit(args, f"OutOfBounds (max-cosets={res.max_cosets})", {"index": None, "max_cosets": res.max_cosets})
    return EXIT_LIMIT


def cmd_assemble(args) -> int:
    data = brown.load_brown(args.file)
    try:
        p = brown.brown_assembly(data, reduce=args.reduce)
    except brown.NotDeterminable as exc:
        print(f"not determinable: edges {exc.stuck}", file=sys.stderr)
        p, code = exc.partial, EXIT_VERIFY
    else:
        code = EXIT_OK
    if args.json:
        print(json.dumps(pr.to_json(p), sort_keys=True))
    else:
        sys.stdout.write(pr.to_text(p))
    return code


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = []
        for e in catalog.catalog_entries():
            where = f"({e.surface[0]},{e.surface[1]})" if isinstance(e.surface, tuple) else e.surface
            rows.append((e.id, where, len(e.generators), len(e.presentation.relators), e.theorem))
        if args.json:
            print(json.dumps(catalog.catalog_index(), sort_keys=True))
        else:
            for r in rows:
                print(f"{r[0]:<9} {r[1]:<20} gens={r[2]:<3} rels={r[3]:<3} {r[4]}")
        return EXIT_OK
    if args.action == "export":
        if not args.dir:
            raise UsageError("catalog export needs --dir")
        paths = catalog.export_catalog(args.dir)
        _emit(args, f"wrote {len(paths)} files to {args.dir}", {"files": paths})
        return EXIT_OK
    try:
        report = catalog.verify_catalog(args.entry, args.max_cosets)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    failed = [r for r in report if r.status == catalog.FAIL]
    if args.json:
        print(json.dumps([r.__dict__ for r in report], sort_keys=True))
    else:
        for r in report:
            print(f"{r.status:<7} {r.entry:<9} {r.claim}")
        counts = {s: sum(1 for r in report if r.status == s) for s in (catalog.PASS, catalog.FAIL, catalog.UNKNOWN)}
        print(f"pass={counts['pass']} fail={counts['fail']} unknown={counts['unknown']}")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crosscap", description="Curve systems and sporadic mapping class groups.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("census", help="vertex orbit counts")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--boundary", type=int, required=True)
    c.add_argument("--dim", type=int, default=1)
    c.add_argument("--method", choices=("formula", "enumerate", "both"), default="formula")
    c.add_argument("--literal", action="store_true", help="uncorrected separating-curve formula")
    c.add_argument("--max-candidates", type=int, default=orbits.DEFAULT_CANDIDATE_CAP)
    c.set_defaults(func=cmd_census)

    o = sub.add_parser("orbit-eq", help="orbit equivalence of two cut diagrams")
    o.add_argument("a")
    o.add_argument("b")
    o.add_argument("--ordered", action="store_true")
    o.set_defaults(func=cmd_orbit_eq)

    x = sub.add_parser("complex", help="build the quotient complex")
    x.add_argument("--genus", type=int, required=True)
    x.add_argument("--boundary", type=int, required=True)
    x.add_argument("--g1-symbolic", action="store_true")
    x.add_argument("--out", required=True)
    x.add_argument("--max-candidates", type=int, default=orbits.DEFAULT_CANDIDATE_CAP)
    x.set_defaults(func=cmd_complex)

    t = sub.add_parser("tree", help="maximal tree and determinability closure")
    t.add_argument("--in", dest="infile")
    t.add_argument("--genus", type=int, required=True)
    t.add_argument("--boundary", type=int, required=True)
    t.add_argument("--ordered", action="store_true", help="keep an edge and its reverse apart")
    t.add_argument("--out")
    t.add_argument("--max-candidates", type=int, default=orbits.DEFAULT_CANDIDATE_CAP)
    t.set_defaults(func=cmd_tree)

    q = sub.add_parser("pres", help="presentation tools")
    qs = q.add_subparsers(dest="pres_command", required=True, parser_class=_Parser)
    for name in ("abelianize", "rs", "tc"):
        a = qs.add_parser(name)
        a.add_argument("file")
        a.set_defaults(func=cmd_pres, action=name)
        if name == "rs":
            a.add_argument("--sign")
        if name == "tc":
            a.add_argument("--subgroup", default="")
            a.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    a = qs.add_parser("assemble")
    a.add_argument("file")
    a.add_argument("--reduce", action="store_true")
    a.set_defaults(func=cmd_assemble)

    k = sub.add_parser("catalog", help="sporadic presentations")
    k.add_argument("action", choices=("list", "verify", "export"))
    k.add_argument("--entry")
    k.add_argument("--dir")
    k.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    k.set_defaults(func=cmd_catalog)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for cap in ("max_candidates", "max_cosets"):
            if getattr(args, cap, 1) < 1:
                raise UsageError(f"--{cap.replace('_', '-')} must be positive")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except orbits.ResourceLimit as exc:
        print(f"resource limit: {exc} (--max-candidates)", file=sys.stderr)
        return EXIT_LIMIT
    except trees.NotATree as exc:
        print(f"no maximal tree: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (
        pr.PresentationError,
        dg.MalformedDiagram,
        dg.MismatchedTarget,
        orbits.NotApplicable,
        rs.RelatorNotInSubgroup,
        rs.Index1,
        brown.IncompleteData,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
