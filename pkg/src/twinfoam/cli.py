"""Command-line front end.

Exit status: 0 success or PASS, 1 FAIL, 2 bad input, 3 internal invariant
violation (d^2 != 0, irreducible web, unsupported edge signature).
"""
import argparse
import json
import sys
from dataclasses import dataclass, field

from .exactnum import parse_gq
from .diagram import DiagramError, read_pd
from .twinfrob import Params, check_axioms, check_local_relations, failures
from .webs import IrreducibleWeb
from .cube import UnsupportedEdgeSignature, MalformedEdge, build_cube
from .homology import D2Violation, build_complex, homology_dims, euler_characteristic
from .skein import p2_state_sum

COMMANDS = ("compute", "skein", "euler-check", "invariance", "check-axioms", "dump-cube")

OK, FAIL, BAD_INPUT, INTERNAL = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    params: Params = field(default_factory=Params)
    outer_face: int = None
    force_neg: bool = False
    strict: bool = False
    fmt: str = "json"
    threads: int = 1
    dump_cube: str = None


def make_parser():
    ap = argparse.ArgumentParser(prog="twinfoam",
                                 description="Twin-foam sl(2) link homology from PD codes.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("inputs", nargs="*", help="PD files")
    ap.add_argument("--a", default="0", help="parameter a (Gaussian rational, e.g. 1/2+i)")
    ap.add_argument("--h", default="0", help="parameter h")
    ap.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    ap.add_argument("--outer-face", type=int, default=None)
    ap.add_argument("--force-neg-circles", action="store_true",
                    help="type every circle as 0- regardless of its orientation")
    ap.add_argument("--strict", action="store_true",
                    help="reject edges outside the fourteen tabulated signatures")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--dump-cube", metavar="PATH", default=None,
                    help="also write the cube dump of the (first) input to PATH")
    return ap


def config_from_args(argv):
    ns = make_parser().parse_args(argv)
    if ns.threads < 1:
        raise ValueError("--threads must be positive")
    need = {"compute": (1, None), "skein": (1, None), "euler-check": (1, None),
            "invariance": (2, 2), "check-axioms": (0, 0), "dump-cube": (1, 1)}[ns.command]
    lo, hi = need
    if len(ns.inputs) < lo or (hi is not None and len(ns.inputs) > hi):
        raise ValueError("%s takes %s input file(s)" % (ns.command, lo if lo == hi else "%d or more" % lo))
    return RunConfig(ns.command, ns.inputs, Params(parse_gq(ns.a), parse_gq(ns.h)),
                     ns.outer_face, ns.force_neg_circles, ns.strict, ns.fmt, ns.threads,
                     ns.dump_cube)


def _load(cfg, path):
    return read_pd(path, outer_face=cfg.outer_face)


def compute_record(cfg, path):
    d = _load(cfg, path)
    cx = build_complex(d, cfg.params, force_neg=cfg.force_neg, strict=cfg.strict,
                       threads=cfg.threads)
    dims = homology_dims(cx, threads=cfg.threads)
    return {
        "diagram": path,
        "params": {"a": str(cfg.params.a), "h": str(cfg.params.h)},
        "dims": dims.as_list(),
        "poincare": dims.poincare(),
        "euler": str(euler_characteristic(cx)),
        "total": dims.total,
    }, dims, cx


def _emit(cfg, out, records, text_lines):
    if cfg.fmt == "json":
        body = records[0] if len(records) == 1 else records
        out.write(json.dumps(body, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def cmd_compute(cfg, out):
    records, lines = [], []
    for path in cfg.inputs:
        rec, _, cx = compute_record(cfg, path)
        if cfg.dump_cube and not records:
            with open(cfg.dump_cube, "w", encoding="utf-8") as fh:
                fh.write(cx.cube.dump())
        records.append(rec)
        lines.append("%s: total %d" % (path, rec["total"]))
        lines.append("  poincare: %s" % rec["poincare"])
        lines.append("  euler:    %s" % rec["euler"])
    _emit(cfg, out, records, lines)
    return OK


def cmd_skein(cfg, out):
    records, lines = [], []
    for path in cfg.inputs:
        s = str(p2_state_sum(_load(cfg, path)))
        records.append({"diagram": path, "skein": s})
        lines.append("%s: %s" % (path, s))
    _emit(cfg, out, records, lines)
    return OK


def cmd_euler_check(cfg, out):
    graded = Params()
    records, lines, status = [], [], OK
    for path in cfg.inputs:
        d = _load(cfg, path)
        cx = build_complex(d, graded, force_neg=cfg.force_neg, strict=cfg.strict,
                           threads=cfg.threads)
        tqft = euler_characteristic(cx)
        dims_euler = homology_dims(cx, threads=cfg.threads).euler()
        skein = p2_state_sum(d)
        ok = tqft == skein == dims_euler
        status = status if ok else FAIL
        records.append({"diagram": path, "euler": str(tqft), "homology_euler": str(dims_euler),
                        "skein": str(skein), "result": "PASS" if ok else "FAIL"})
        lines.append("%s: tqft %s | skein %s | %s" % (path, tqft, skein, "PASS" if ok else "FAIL"))
    _emit(cfg, out, records, lines)
    return status


def cmd_invariance(cfg, out):
    recs = [compute_record(cfg, path) for path in cfg.inputs]
    ok = recs[0][1] == recs[1][1]
    record = {"diagrams": cfg.inputs, "dims": [r[0]["dims"] for r in recs],
              "result": "PASS" if ok else "FAIL"}
    lines = ["%s: %s" % (r[0]["diagram"], r[0]["poincare"]) for r in recs]
    lines.append("PASS" if ok else "FAIL")
    _emit(cfg, out, [record], lines)
    return OK if ok else FAIL


def cmd_check_axioms(cfg, out):
    rep = check_axioms(cfg.params) + check_local_relations(cfg.params)
    bad = failures(rep)
    record = {"params": {"a": str(cfg.params.a), "h": str(cfg.params.h)},
              "checks": [{"name": n, "ok": ok} for n, ok in rep], "failures": bad}
    lines = ["%-40s %s" % (n, "ok" if ok else "FAIL") for n, ok in rep]
    lines.append("%d/%d identities hold" % (len(rep) - len(bad), len(rep)))
    _emit(cfg, out, [record], lines)
    return FAIL if bad else OK


def cmd_dump_cube(cfg, out):
    d = _load(cfg, cfg.inputs[0])
    cube = build_cube(d, cfg.params, force_neg=cfg.force_neg, strict=cfg.strict,
                      threads=cfg.threads)
    out.write(cube.dump())
    return OK


HANDLERS = {
    "compute": cmd_compute,
    "skein": cmd_skein,
    "euler-check": cmd_euler_check,
    "invariance": cmd_invariance,
    "check-axioms": cmd_check_axioms,
    "dump-cube": cmd_dump_cube,
}


def run(cfg, out=None):
    out = out or sys.stdout
    return HANDLERS[cfg.command](cfg, out)


def main(argv=None, out=None, err=None):
    err = err or sys.stderr
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    except ValueError as e:
        err.write("error: %s\n" % e)
        return BAD_INPUT
    try:
        return run(cfg, out)
    except (OSError, DiagramError, ValueError) as e:
        err.write("input error: %s\n" % e)
        return BAD_INPUT
    except (D2Violation, IrreducibleWeb, UnsupportedEdgeSignature, MalformedEdge) as e:
        err.write("internal invariant violated: %s: %s\n" % (type(e).__name__, e))
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
