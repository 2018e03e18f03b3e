"""Command-line front end: `globalize <pipeline> ...`.

Exit codes: 0 when every verdict in the report passes, 1 on a mathematical
failure (the report carries a witness), 2 on unusable input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Any

from . import fintop
from .algebra import AlgebraError
from .bialgebra import BialgebraError
from .exact import QQ, Field, FieldError, matrix_to_json, vector_to_json
from .fixtures import CATALOG, UnknownFixture, dump_all, fixture_info, fixtures
from .fintop import TopologyError, bits
from .monoid import BadIndex, MonoidError
from .pca import (AlgebraicPCA, PCAError, bialgebra_twists, compare_envelope_globalization,
                  enveloping_coaction, globalize_pca, random_perturbation)
from .report import RunReport, Verdict, digest, emit_report, failed, passed
from .schema import (SchemaError, parse_global_action, parse_pca,
                     parse_set_action, parse_top_action, parse_topology, topology_to_json)
from .setact import (EnumerationTooLarge, PartialActionError, check_GL1_pullback,
                     check_GL2_universal, globalize_set, verify_partial_action)
from .topact import (TopActionError, check_epsilon_open_embedding, check_kappa_identity, globalize_top,
                     is_topological_partial_action, tpa_remarks, verify_top_module)

# structural problems with the input itself (exit 2)
STRUCTURAL = (SchemaError, BadIndex, FieldError, UnknownFixture, EnumerationTooLarge,
              json.JSONDecodeError, OSError)
# the input parses but violates the axioms of its kind (exit 1, witness in the report)
AXIOMATIC = (MonoidError, AlgebraError, BialgebraError, TopologyError, PartialActionError,
             TopActionError, PCAError)


class InputError(Exception):
    pass


def _load(args, kind: str) -> tuple[Any, str]:
    """The raw JSON object for a file or --fixture, plus a display name."""
    if getattr(args, "fixture", None):
        info = fixture_info(args.fixture)
        if info.kind != kind:
            raise InputError(f"fixture {args.fixture!r} is a {info.kind} input, not {kind}")
        try:
            return fixtures(args.fixture, _field(args)), f"fixture:{args.fixture}"
        except AXIOMATIC as exc:
            # e.g. a field whose characteristic the fixture excludes
            raise InputError(f"fixture {args.fixture!r} cannot be built: {exc}") from None
    if not args.file:
        raise InputError("an input file or --fixture is required")
    return _read_json(args.file), args.file


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _field(args) -> Field:
    return Field.from_name(args.field) if getattr(args, "field", None) else QQ


def _witness_of(exc: Exception):
    w = getattr(exc, "witness", None)
    if isinstance(w, tuple):
        return list(w)
    return w


def _axiom_failure(report: RunReport, name: str, exc: Exception) -> RunReport:
    report.add(failed(name, _witness_of(exc), f"{type(exc).__name__}: {exc}"))
    return report


# -- pipelines ------------------------------------------------------------------

def run_set_action(args) -> RunReport:
    obj, _ = _load(args, "set-action")
    report = RunReport("set-action", digest(obj))
    try:
        d = parse_set_action(obj, monoid=args.monoid)
    except AXIOMATIC as exc:
        return _axiom_failure(report, "input axioms", exc)
    v = report.add(verify_partial_action(d))
    report.sizes.update({"X": len(d.X), "M": len(d.M), "D": len(d.domain)})
    if not v.ok:
        return report
    res = globalize_set(d)
    report.sizes["Y"] = len(res.Y)
    report.add(check_GL1_pullback(d, res))
    Y = res.Y
    report.data["classes"] = res.class_labels(d)
    report.data["action"] = {Y.Y[y]: {d.M.label(m): Y.Y[Y.act(y, m)] for m in range(len(d.M))}
                             for y in range(len(Y))}
    report.data["epsilon"] = {d.X[x]: Y.Y[res.epsilon[x]] for x in range(len(d.X))}
    if args.check_gl2:
        zobj = _read_json(args.check_gl2)
        try:
            Z = parse_global_action(zobj, "target", d.M)
        except AXIOMATIC as exc:
            return _axiom_failure(report, "GL2", exc)
        report.add(check_GL2_universal(d, res, Z))
    return report


def run_top_action(args) -> RunReport:
    obj, _ = _load(args, "top-action")
    report = RunReport("top-action", digest(obj))
    try:
        m = parse_top_action(obj, monoid=args.monoid)
    except AXIOMATIC as exc:
        return _axiom_failure(report, "input axioms", exc)
    d = m.base
    report.sizes.update({"X": len(d.X), "M": len(d.M), "D": len(d.domain)})
    v = report.add(verify_top_module(m))
    if not v.ok:
        return report
    tpa = is_topological_partial_action(m)
    report.data["topological_partial_action"] = tpa
    report.data["remarks"] = {k: {"X_m open": a, "alpha_m continuous": b}
                              for k, (a, b) in tpa_remarks(m).items()}
    res = globalize_top(m)
    report.sizes["Y"] = len(res.set_result.Y)
    dl = d.sorted_domain()
    pts = [f"{d.X[x]},{d.M.label(a)}" for (x, a) in dl]
    report.data["initial_topology"] = topology_to_json(res.initial, pts)["opens"]
    if not res.globalizable:
        report.add(failed("globalizable", res.witness, "tD differs from the initial topology of pi and rho"))
        return report
    report.add(passed("globalizable"))
    report.verdicts.extend(res.checks)
    Y = res.set_result.Y
    report.data["tY"] = topology_to_json(res.tY, Y.Y)["opens"]
    report.data["epsilon_open_embedding"] = check_epsilon_open_embedding(m, res)
    if tpa:
        report.add(check_kappa_identity(m, res))
    return report


def run_pca(args) -> RunReport:
    obj, _ = _load(args, "pca")
    report = RunReport("pca", digest(obj))
    try:
        p = parse_pca(obj, field=_field(args), bialgebra=args.bialgebra)
    except AXIOMATIC as exc:
        return _axiom_failure(report, "algebraic PCA axioms", exc)
    F = p.field
    report.add(passed("algebraic PCA axioms"))
    report.sizes.update({"dimA": p.dA, "dimH": p.dH})
    try:
        if args.compare:
            cmp = compare_envelope_globalization(p)
            G, E = cmp.globalization, cmp.envelope
        else:
            G = globalize_pca(p)
            E = enveloping_coaction(p) if args.envelope else None
            cmp = None
    except PCAError as exc:
        return _axiom_failure(report, type(exc).__name__, exc)
    g = G.geometric
    report.add(passed("e' idempotent"))
    report.verdicts.extend(G.verdicts)
    report.sizes.update({"dimIdeal": g.ideal.dim, "dimAbulletH": g.AbulletH.dim, "dimY": G.Y.dim})
    report.data["e_prime"] = vector_to_json(F, g.e_prime)
    if E is not None:
        report.verdicts.extend(E.verdicts)
        report.sizes["dimB"] = E.B.dim
    if cmp is not None:
        report.verdicts.extend(cmp.verdicts)
        report.data["strict"] = cmp.strict
    if args.perturb:
        report.add(_perturbations(p, args.perturb, args.seed))
    if args.dump_matrices:
        mats = {"coaction": matrix_to_json(p.coaction), "piA": matrix_to_json(g.piA),
                "rhoA": matrix_to_json(g.rhoA), "Y": [vector_to_json(F, v) for v in G.Y.space.basis],
                "vartheta": matrix_to_json(G.vartheta)}
        if E is not None:
            mats["B"] = [vector_to_json(F, v) for v in E.B.space.basis]
            mats["theta"] = matrix_to_json(E.theta)
            mats["p"] = matrix_to_json(E.p)
        if cmp is not None:
            mats["j"] = matrix_to_json(cmp.j)
        report.data["matrices"] = mats
    return report


def _perturbations(p: AlgebraicPCA, count: int, seed: int) -> Verdict:
    rng = random.Random(seed)
    twists = bialgebra_twists(p.H)
    for k in range(count):
        q = random_perturbation(p, rng, twists)
        try:
            globalize_pca(q)
        except PCAError as exc:
            return failed("perturbations", {"index": k, "seed": seed}, str(exc))
    return passed("perturbations", f"{count} random isomorphic copies globalize (seed {seed})")


def run_top_util(args) -> RunReport:
    report = RunReport("top-util")
    if args.util == "count":
        n = args.n
        report.sizes["points"] = n
        report.data["topologies"] = len(fintop.all_topologies(n))
        return report
    obj = _read_json(args.file)
    report.input_digest = digest(obj)
    pts = obj.get("points") if isinstance(obj, dict) else None
    if not isinstance(pts, list):
        raise SchemaError("topology.points", "missing")
    try:
        t = parse_topology(obj, pts, "topology")
    except TopologyError as exc:
        return _axiom_failure(report, "topology axioms", exc)
    report.add(passed("topology axioms"))
    report.sizes.update({"points": len(pts), "opens": len(t.opens)})
    report.data["minimal_neighbourhoods"] = {pts[x]: [pts[i] for i in bits(t.minimal[x])]
                                             for x in range(len(pts))}
    report.data["hausdorff"] = fintop.is_hausdorff(t)
    if args.util == "product":
        obj2 = _read_json(args.other)
        pts2 = obj2.get("points", [])
        try:
            t2 = parse_topology(obj2, pts2, "other")
        except TopologyError as exc:
            return _axiom_failure(report, "topology axioms (second factor)", exc)
        prod = fintop.product_topology(t, t2)
        names = [f"{a},{b}" for a in pts for b in pts2]
        report.data["product"] = topology_to_json(prod, names)["opens"]
        report.sizes["product_opens"] = len(prod.opens)
    return report


def run_fixtures(args, out) -> int:
    if args.action == "list":
        for name, info in CATALOG.items():
            out.write(f"{name}\t{info.kind}\t{info.summary}\n")
        out.write("ab2:alpha=<q>\tpca\tab2 with any rational alpha\n")
        return 0
    if args.action == "show":
        out.write(json.dumps(fixtures(args.name, _field(args)), sort_keys=True, indent=2) + "\n")
        return 0
    for path in dump_all(Path(args.name or ".")):
        out.write(f"{path}\n")
    return 0


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--field", metavar="Q|Fp:<p>", help="ground field for fixtures and files without one")
    common.add_argument("--dump-matrices", action="store_true")
    common.add_argument("--explain", action="store_true", help="print failing witnesses to stderr")

    parser = argparse.ArgumentParser(prog="globalize", description="Globalization of partial actions.")
    sub = parser.add_subparsers(dest="command", required=True)

    sa = sub.add_parser("set-action", parents=[common], help="partial monoid action on a finite set")
    sa.add_argument("file", nargs="?")
    sa.add_argument("--fixture")
    sa.add_argument("--monoid", help="builder spec used when the input has no monoid block")
    sa.add_argument("--check-gl2", metavar="ZFILE", help="global target for the universal property")

    ta = sub.add_parser("top-action", parents=[common], help="partial action on a finite space")
    ta.add_argument("file", nargs="?")
    ta.add_argument("--fixture")
    ta.add_argument("--monoid")

    pa = sub.add_parser("pca", parents=[common], help="partial comodule algebra")
    pa.add_argument("file", nargs="?")
    pa.add_argument("--fixture")
    pa.add_argument("--bialgebra", help="built-in bialgebra (h4, group:sym3) when the input has none")
    pa.add_argument("--envelope", action="store_true")
    pa.add_argument("--compare", action="store_true")
    pa.add_argument("--perturb", type=int, default=0, metavar="N",
                    help="also globalize N random isomorphic copies (uses --seed)")

    top = sub.add_parser("top", help="finite topology utilities")
    tsub = top.add_subparsers(dest="topcmd", required=True)
    util = tsub.add_parser("util")
    usub = util.add_subparsers(dest="util", required=True)
    v = usub.add_parser("validate", parents=[common])
    v.add_argument("file")
    pr = usub.add_parser("product", parents=[common])
    pr.add_argument("file")
    pr.add_argument("other")
    c = usub.add_parser("count", parents=[common])
    c.add_argument("n", type=int)

    fx = sub.add_parser("fixtures", help="list, show or dump the fixture catalog")
    fx.add_argument("action", choices=("list", "show", "dump"))
    fx.add_argument("name", nargs="?")
    fx.add_argument("--field")
    return parser


def run(argv=None, out=None, err=None) -> tuple[int, RunReport | None]:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), None
    try:
        if args.command == "fixtures":
            if args.action == "show" and not args.name:
                raise InputError("fixtures show needs a name")
            return run_fixtures(args, out), None
        if args.command == "set-action":
            report = run_set_action(args)
        elif args.command == "top-action":
            report = run_top_action(args)
        elif args.command == "pca":
            report = run_pca(args)
        else:
            report = run_top_util(args)
    except (InputError, *STRUCTURAL) as exc:
        err.write(f"input error: {exc}\n")
        return 2, None
    if args.seed:
        report.data["seed"] = args.seed
    blob = emit_report(report, args.format)
    if args.report:
        Path(args.report).write_bytes(blob)
    else:
        out.write(blob.decode())
    if args.explain:
        for v in report.verdicts:
            if not v.ok:
                err.write(f"{v.name}: {v.detail}\n  witness: {json.dumps(v.witness, sort_keys=True)}\n")
    return (0 if report.ok else 1), report


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
