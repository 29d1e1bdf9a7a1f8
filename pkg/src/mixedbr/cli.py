"""Command-line front end: ``mixedbr {derlog,invariants,check,emit-singular} FILE``.

Exit codes: 0 success (FAIL verdicts included), 2 parse error, 3 hypothesis
failure, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .checks import IDENTITIES, run_check
from .config import SamplingConfig
from .derlog import derlog, is_free_divisor
from .errors import HypothesisError
from .invariants import (c_fh, jx_ideal, milnor, milnor_icis, milnor_icis_qraro, milnor_swh, mu_X, ord,
                         r_certificate, tau_X, e_from_mu_star)
from .problem import ProblemError, ProblemFile, parse_problem
from .sections import mu_H_br, mu_H_restricted, mu_star, mu_star_icis, mu_X_star
from .singular import emit_singular
from .stdbasis import INFINITE, ColengthResult, ResourceLimitError, resource_limits

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_RESOURCE = 0, 2, 3, 4

TASKS = ("mu", "mu_x", "tau_x", "r", "c_fh", "mu_icis", "qraro", "mu_swh", "ord", "mu_star", "mu_star_icis",
         "mu_x_star", "mu_h_br", "mu_h_restricted", "e_i", "free_divisor")


def jsonable(v):
    """Exact integers stay integers; infinity becomes the string "infinite"."""
    if v is INFINITE:
        return "infinite"
    if isinstance(v, ColengthResult):
        return v.value if v.finite else "infinite"
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if hasattr(v, "numerator") and hasattr(v, "denominator"):
        return int(v) if v.denominator == 1 else str(v)
    return str(v)


class Report:
    def __init__(self, problem: ProblemFile, cfg: SamplingConfig, max_degree: int):
        self.problem = problem
        self.cfg = cfg
        self.results: dict = {}
        self.certificates: dict = {}
        self.timing: dict = {}
        self.caps: list = []
        self.max_degree = max_degree
        self.status = EXIT_OK

    def run(self, name, fn):
        """Run one task in isolation; failures become report entries and set the exit status."""
        t0 = time.perf_counter()
        try:
            fn()
        except ResourceLimitError as exc:
            self.results[name] = {"error": "resource", "message": str(exc)}
            self.caps.append({"task": name, "message": str(exc)})
            self.status = max(self.status, EXIT_RESOURCE)
        except HypothesisError as exc:
            self.results[name] = {"error": "hypothesis", "message": str(exc)}
            if self.status != EXIT_RESOURCE:
                self.status = EXIT_HYPOTHESIS
        finally:
            self.timing[name] = round((time.perf_counter() - t0) * 1000, 3)

    def to_dict(self) -> dict:
        return {
            "version": __version__,
            "input": self.problem.echo(),
            "results": jsonable(self.results),
            "certificates": jsonable(self.certificates),
            "seed": self.cfg.seed,
            "samples": self.cfg.samples,
            "timing_ms": self.timing,
            "caps": self.caps,
        }


def _need(value, what):
    if value is None:
        raise HypothesisError(f"problem file has no {what}")
    return value


def _level_cert(lv):
    return {"stable": lv.stable, "samples": lv.samples, "discarded": lv.discarded,
            "label": f"generic minimum over {len(lv.samples)} samples"}


def run_derlog(pb: ProblemFile, rep: Report):
    def task():
        X = _need(pb.variety, "variety")
        D = derlog(X)
        mins = D.minimal()
        rep.results["derlog"] = {
            "provenance": D.provenance,
            "generators": [str(g) for g in D.generators],
            "minimal_generators": [str(g) for g in mins.generators],
            "count": len(D.generators),
            "minimal_count": len(mins.generators),
        }
        if X.kind == "ambient":
            rep.results["derlog"]["notice"] = f"free module of rank {X.n}"
        rep.certificates["tangency"] = {"statement": "delta(h_k) lies in <h> for every generator",
                                        "holds": D.tangency_certificate()}
        if len(X.equations) == 1 and X.kind != "linear_subspace":
            flag, det = is_free_divisor(X)
            rep.certificates["free_divisor"] = {"statement": "n minimal generators with determinant unit*h",
                                                "holds": flag, "determinant": str(det) if det is not None else None}
    rep.run("derlog", task)


def run_invariants(pb: ProblemFile, rep: Report, tasks):
    cfg = rep.cfg
    X, f = pb.variety, pb.f
    D_cache = {}

    def D():
        if "D" not in D_cache:
            D_cache["D"] = derlog(_need(X, "variety"))
        return D_cache["D"]

    def F():
        return _need(f, "function f")

    def eqs():
        return list(_need(X, "variety").equations)

    def t_r():
        cert = r_certificate(F(), jx_ideal(F(), D()))
        rep.results["r"] = cert.r
        rep.results["ratio_sharp"] = cert.ratio_attained
        rep.certificates["r"] = {"statement": "mu_X/tau_X <= r with equality iff (J_X(f) : f) = <f^(r-1)> + J_X(f)",
                                 "ratio_bound_holds": cert.ratio_bound_holds,
                                 "kernel_equality": cert.equality,
                                 "holds": cert.ratio_bound_holds and cert.equality == cert.ratio_attained}

    def t_mu_star():
        s = mu_star(F(), cfg)
        rep.results["mu_star"] = s.values
        rep.certificates["mu_star"] = [_level_cert(l) for l in s.levels if l is not None]

    def t_mu_star_icis():
        s = mu_star_icis(eqs(), cfg)
        rep.results["mu_star_icis"] = s.values
        rep.certificates["mu_star_icis"] = [_level_cert(l) for l in s.levels if l is not None]

    def t_mu_x_star():
        s = mu_X_star(F(), _need(X, "variety"), cfg)
        rep.results["mu_x_star"] = s.values
        rep.certificates["mu_x_star"] = [dict(_level_cert(l), witness=l.witness.to_json() if l.witness else None)
                                         for l in s.levels]

    def t_mu_h_br():
        n = F().ring.n
        lvs = [mu_H_br(F(), i, cfg) for i in range(n - 1, -1, -1)]
        rep.results["mu_h_br"] = [l.as_value() for l in lvs]
        rep.certificates["mu_h_br"] = [_level_cert(l) for l in lvs]

    def t_mu_h_restricted():
        n = F().ring.n
        lvs = [mu_H_restricted(F(), i, cfg) for i in range(n)]
        rep.results["mu_h_restricted"] = [l.as_value() for l in lvs]
        rep.certificates["mu_h_restricted"] = [_level_cert(l) for l in lvs]

    def t_free():
        flag, det = is_free_divisor(_need(X, "variety"))
        rep.results["free_divisor"] = flag

    table = {
        "mu": lambda: rep.results.__setitem__("mu", milnor(F())),
        "mu_x": lambda: rep.results.__setitem__("mu_x", mu_X(F(), D())),
        "tau_x": lambda: rep.results.__setitem__("tau_x", tau_X(F(), D())),
        "r": t_r,
        "c_fh": lambda: rep.results.__setitem__("c_fh", c_fh(F(), eqs())),
        "mu_icis": lambda: rep.results.__setitem__("mu_icis", milnor_icis(eqs(), cfg)),
        "qraro": lambda: rep.results.__setitem__("qraro", milnor_icis_qraro(F(), eqs(), _need(X, "variety").weights, D())),
        "mu_swh": lambda: rep.results.__setitem__("mu_swh", milnor_swh(eqs(), _need(X, "variety").weights)),
        "ord": lambda: rep.results.__setitem__("ord", _ord(F())),
        "mu_star": t_mu_star,
        "mu_star_icis": t_mu_star_icis,
        "mu_x_star": t_mu_x_star,
        "mu_h_br": t_mu_h_br,
        "mu_h_restricted": t_mu_h_restricted,
        "e_i": lambda: rep.results.__setitem__("e_i", e_from_mu_star(mu_star(F(), cfg).values)),
        "free_divisor": t_free,
    }
    for t in tasks:
        rep.run(t, table[t])


def _ord(f):
    try:
        return ord(f)
    except ValueError as exc:
        raise HypothesisError(str(exc))


def run_checkcmd(pb: ProblemFile, rep: Report, identity: str):
    def task():
        res = run_check(identity, pb.f, pb.variety, pb.section, rep.cfg)
        rep.results[identity] = {"verdict": res.verdict, "values": res.values, "notes": res.notes}
        rep.certificates[identity] = {"statement": res.statement, "verdict": res.verdict}
    rep.run(identity, task)


def default_tasks(pb: ProblemFile) -> list:
    if pb.tasks:
        return pb.tasks
    out = []
    if pb.f is not None:
        out.append("mu")
        if pb.variety is not None:
            out += ["mu_x", "tau_x"]
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="problem file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=5)
    common.add_argument("--height", type=int, default=100)
    common.add_argument("--max-degree", type=int, default=64)
    common.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")
    common.add_argument("--emit-singular", metavar="PATH", help="also write a Singular script")

    ap = argparse.ArgumentParser(prog="mixedbr", description="Bruce-Roberts numbers and logarithmic vector fields")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)
    sub.add_parser("derlog", parents=[common], help="logarithmic vector fields of the variety")
    p = sub.add_parser("invariants", parents=[common], help="compute invariants")
    p.add_argument("--tasks", help="comma-separated list from: " + ", ".join(TASKS))
    p = sub.add_parser("check", parents=[common], help="verify an identity")
    p.add_argument("--identity", required=True, choices=IDENTITIES)
    p = sub.add_parser("emit-singular", parents=[common], help="write a Singular script only")
    p.add_argument("path", help="output script path")
    return ap


def _human(report: dict) -> str:
    lines = []
    for k in sorted(report["results"]):
        lines.append(f"{k}: {json.dumps(report['results'][k], sort_keys=True)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        pb = parse_problem(text)
    except ProblemError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        cfg = SamplingConfig(args.seed, args.samples, args.height)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    rep = Report(pb, cfg, args.max_degree)
    script_path = args.path if args.cmd == "emit-singular" else args.emit_singular
    if script_path:
        try:
            Path(script_path).write_text(emit_singular(pb, cfg), encoding="utf-8")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        if args.cmd == "emit-singular":
            return EXIT_OK
    with resource_limits(max_degree=args.max_degree):
        if args.cmd == "derlog":
            run_derlog(pb, rep)
        elif args.cmd == "invariants":
            tasks = [t.strip() for t in args.tasks.split(",")] if args.tasks else default_tasks(pb)
            bad = [t for t in tasks if t not in TASKS]
            if bad:
                print(f"error: unknown tasks {bad}; choose from {', '.join(TASKS)}", file=sys.stderr)
                return EXIT_PARSE
            run_invariants(pb, rep, tasks)
        else:
            run_checkcmd(pb, rep, args.identity)
    report = rep.to_dict()
    payload = json.dumps(report, sort_keys=True, indent=2)
    if args.json == "-":
        print(payload)
    elif args.json:
        Path(args.json).write_text(payload + "\n", encoding="utf-8")
        print(_human(report))
    else:
        print(_human(report))
    for c in rep.caps:
        print(f"resource cap: {c['task']}: {c['message']}", file=sys.stderr)
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
