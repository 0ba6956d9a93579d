"""Command-line front end: ``zolotarev <subcommand> ...``.

Passports are written ``k,l,m``: the numbers of simple critical points
over star, circle and bullet, in that order, summing to ``degree - 1``.

Exit codes: 0 success, 1 verification, closure or consistency failure,
2 usage error.
"""
import argparse
import json
import sys

from . import analytic as A
from . import verify as V
from .atlas import build_atlas, export_dot, export_json
from .cactus import Color, Passport, enumerate_cacti, select
from .degeneration import Side, contract, degenerate, slot_middle
from .errors import (CapabilityError, ClosureError, ConsistencyError, DomainError,
                     UsageError, VerificationFailure)

GROUPS = ("any", "symmetric", "alternating", "psl27")


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _classes(args):
    pp = Passport.parse(args.degree, args.passport)
    return pp, select(enumerate_cacti(pp), args.group, args.min_aut)


def _class_row(c):
    return {
        "id": c.id,
        "permutations": {col.label: str(c.perm(col)) for col in Color},
        "aut_order": c.aut_order,
        "group": {"name": c.group.name, "order": c.group.order},
    }


def cmd_enumerate(args):
    pp, cs = _classes(args)
    if args.format == "json":
        doc = {"passport": [pp.n, *pp.counts], "filter": args.group,
               "classes": [_class_row(c) for c in cs]}
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = ["# passport %s, filter %s, %d classes" % (pp, args.group, len(cs)),
             "id\tstar\tcirc\tbullet\taut\tgroup"]
    for c in cs:
        lines.append("%d\t%s\t%s\t%s\t%d\t%s(%d)" % (c.id, c.g_star, c.g_circ, c.g_bullet,
                                                    c.aut_order, c.group.name, c.group.order))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_atlas(args):
    pp, cs = _classes(args)
    a = build_atlas(cs, args.group, passport=pp)
    summary = "".join("component %d: %s\n" % (c.index, c.summary()) for c in a.components)
    if args.format == "text":
        _emit(summary, args.output)
        return 0
    doc = export_json(a) if args.format == "json" else export_dot(a)
    _emit(doc, args.output)
    # keep stdout machine-readable
    (sys.stderr if args.output in (None, "-") else sys.stdout).write(summary)
    return 0


def cmd_borders(args):
    pp, cs = _classes(args)
    out = []
    for c in cs:
        for col in Color:
            t = degenerate(c, col)
            out.append({
                "id": c.id,
                "middle": col.label,
                "slot_middle": slot_middle(c, col).label,
                "tritree": t.as_dict(),
                "merge_predecessor": contract(t, Side.MERGE_PREDECESSOR).as_dict(),
                "merge_successor": contract(t, Side.MERGE_SUCCESSOR).as_dict(),
            })
    if args.format == "json":
        _emit(json.dumps(out, indent=2) + "\n", args.output)
        return 0
    lines = []
    for r in out:
        lines.append("%d %s  %s" % (r["id"], r["middle"], r["tritree"]["canon"]))
        lines.append("    pred: %s" % r["merge_predecessor"]["canon"])
        lines.append("    succ: %s" % r["merge_successor"]["canon"])
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _critical_doc(kind, param, data, tol):
    return {
        "family": kind,
        "parameter": A.format_complex(param),
        "critical_points": [A.format_complex(z) for z in data.points],
        "critical_values": [A.format_complex(v) for v in data.values],
        "tolerance": tol,
        "distinct_values": data.distinct_value_count(tol),
    }


def cmd_analytic(args):
    tol = args.tol
    if args.family == "deg5":
        b = A.parse_complex(args.b if args.b is not None else "0.5+0.5i")
        _, data = A.deg5_family(b)
        doc = _critical_doc("deg5", b, data, tol)
        # undefined once two critical values merge
        doc["collinear_middle"] = (A.collinear_middle(*A.deg5_critical_triangle(b), tol)
                                   if doc["distinct_values"] == 3 else None)
        doc["degeneracy"] = A.deg5_degeneracy(b.real, b.imag)
        rc = 0
    elif args.family == "deg6":
        z = A.parse_complex(args.z if args.z is not None else "1i")
        _, data = A.deg6_family(z)
        doc = _critical_doc("deg6", z, data, tol)
        rc = 0
    else:
        recs = A.intro_report(args.scale)
        doc = [r.as_dict() for r in recs]
        rc = 0 if all(r.passed for r in recs) else 1
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return rc


def cmd_verify(args):
    lines = []
    ok = True
    for name, passed, detail in V.run(args.only):
        ok &= passed
        lines.append("%s %s: %s" % ("PASS" if passed else "FAIL", name, detail))
    lines.append("%s" % ("all checks passed" if ok else "verification FAILED"))
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def _parser():
    ap = argparse.ArgumentParser(prog="zolotarev", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def family_flags(p, formats):
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--passport", required=True, help="k,l,m over star,circ,bullet")
        p.add_argument("--group", choices=GROUPS, default="any")
        p.add_argument("--min-aut", type=int, default=1)
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", default=None)

    family_flags(sub.add_parser("enumerate", help="list cactus classes"), ("text", "json"))
    family_flags(sub.add_parser("atlas", help="assemble the moduli map"), ("text", "json", "dot"))
    family_flags(sub.add_parser("borders", help="degenerations and contractions"), ("text", "json"))

    p = sub.add_parser("analytic", help="numeric checks on explicit families")
    p.add_argument("family", choices=("deg5", "deg6", "intro"))
    p.add_argument("--b", default=None, help="deg5 parameter, e.g. 0.3-1.2i")
    p.add_argument("--z", default=None, help="deg6 parameter")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--scale", type=float, default=6, help="intro example prefactor")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="run the reproduction checks")
    p.add_argument("--only", choices=V.GROUPS, default=None)
    p.add_argument("--output", default=None)
    return ap


COMMANDS = {"enumerate": cmd_enumerate, "atlas": cmd_atlas, "borders": cmd_borders,
            "analytic": cmd_analytic, "verify": cmd_verify}


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CapabilityError, DomainError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except ClosureError as e:
        print("closure error: %s" % e, file=sys.stderr)
        return 1
    except (ConsistencyError, VerificationFailure) as e:
        print("failure: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
