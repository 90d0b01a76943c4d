"""Command-line front end: construct, search, analyze, verify, export.

Exit codes: 0 success, 1 an asserted claim was violated, 2 bad parameters
or malformed input, 3 a work cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import lab
from ._version import __version__
from .caps import Caps
from .code import code_from_generator, min_distance
from .constructions import grm_evaluation_matrix, grs_generator, grs_spec, rm_generator, search_self_dual_grs
from .exceptions import CapExceeded, ParameterError
from .field import field_create, format_field, gf, prime_power
from .matrix import format_matrix, parse_matrix
from .oa import (
    OrthogonalArray,
    covering_radius,
    format_array,
    is_irredundant_direct,
    min_distance_array,
    oa_from_code,
    parse_array,
    strength,
)

EXIT_OK, EXIT_VIOLATION, EXIT_PARAM, EXIT_CAP = 0, 1, 2, 3


def _int_list(text):
    return [int(x) for x in text.replace(",", " ").split()]


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--q", type=int, help="field order (default modulus)")
    g.add_argument("--p", type=int, help="field characteristic")
    g.add_argument("--e", type=int, default=None, help="extension degree")
    g.add_argument("--modulus", type=_int_list, help="modulus coefficients, constant term first")
    g.add_argument("--cap-enum", type=int, default=2**24)
    g.add_argument("--cap-subsets", type=int, default=10**6)
    g.add_argument("--cap-space", type=int, default=2**24)
    g.add_argument("--cap-search", type=int, default=10**6)
    g.add_argument("--seed", type=int, default=None, help="RNG seed (default 0; 7 for the random corpus)")
    g.add_argument("--out", help="output file (directory for verify)")
    g.add_argument("--format", choices=("json", "csv", "text"), default=None)
    g.add_argument("--jobs", type=int, default=1, help="worker threads for verify")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="iroa", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"iroa {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="write a generator matrix")
    c.add_argument("family", choices=("rm", "grm", "grs"))
    c.add_argument("--r", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--points", type=_int_list)
    c.add_argument("--mults", type=_int_list)
    c.add_argument("--array-out", help="also write the full array export here")

    s = sub.add_parser("search", parents=[common], help="search for self-dual GRS codes")
    s.add_argument("what", choices=("sdgrs",))
    s.add_argument("--n", type=int, required=True)

    a = sub.add_parser("analyze", parents=[common], help="JSON report for a code or array file")
    a.add_argument("input", nargs="?")
    a.add_argument("--genmat", help="code file (alternative to the positional input)")

    v = sub.add_parser("verify", parents=[common], help="run a theorem-lab sweep")
    v.add_argument("--family", required=True,
                   choices=("rm", "grm", "mds", "sdgrs", "random", "index-one", "distance", "covering"))
    v.add_argument("--max-m", type=int, default=5)
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--n", type=int, default=4)
    v.add_argument("--count", type=int, default=200)

    x = sub.add_parser("export", parents=[common], help="export the array of a code or array file")
    x.add_argument("input")
    return parser


# -- config and I/O --------------------------------------------------------------


def _caps(args) -> Caps:
    return Caps(enum=args.cap_enum, subsets=args.cap_subsets, space=args.cap_space, search=args.cap_search)


def run_config(args) -> dict:
    """Everything that determines the output; thread count is excluded."""
    skip = {"jobs", "out", "array_out"}
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    cfg["version"] = __version__
    return cfg


def _seed(args, default=0) -> int:
    return default if args.seed is None else args.seed


def _resolve_seed(args):
    """Fill in the default seed so that it is recorded in every output."""
    if args.seed is None:
        corpus = args.command == "verify" and args.family in ("random", "distance")
        args.seed = 7 if corpus else 0


def _config_line(args) -> str:
    return f"# iroa {__version__} config={json.dumps(run_config(args), sort_keys=True, separators=(',', ':'))}"


def _field(args, required=True):
    if args.p is not None:
        return field_create(args.p, args.e or 1, args.modulus)
    if args.q is not None:
        if args.modulus is not None:
            p, e = prime_power(args.q)
            return field_create(p, e, args.modulus)
        return gf(args.q)
    if required:
        raise ParameterError("a field is required: pass --q or --p/--e")
    return None


def _emit(args, text: str, path=None):
    path = path or args.out
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParameterError(f"cannot read {path}: {exc.strerror}") from None


def load_subject(text: str, field=None):
    """Parse a code file, a text/CSV array export or a JSON array export.

    Returns ``("code", LinearCode)`` or ``("array", OrthogonalArray)``.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
            rows = np.array(obj["rows"], dtype=np.int64)
            A = OrthogonalArray(rows, int(obj["q"]))
            A.t, A.lam = int(obj["t"]), int(obj["lambda"])
        except (ValueError, KeyError, TypeError) as exc:
            raise ParameterError(f"malformed JSON array: {exc}") from None
        return "array", A
    first = stripped.splitlines()[0] if stripped else ""
    if first.startswith("# IrOA") or first.startswith("# OA"):
        return "array", parse_array(text)
    M, _ = parse_matrix(text, field)
    return "code", code_from_generator(M)


def _array_json(A: OrthogonalArray, irredundant, args) -> str:
    payload = {
        "M": A.M, "n": A.n, "q": A.q, "t": A.t, "lambda": A.lam, "irredundant": irredundant,
        "rows": A.rows.astype(int).tolist(), "config": run_config(args), "version": __version__,
    }
    return json.dumps(payload, sort_keys=True) + "\n"


def _export_text(A, irredundant, args, fmt) -> str:
    if fmt == "json":
        return _array_json(A, irredundant, args)
    sep = "," if fmt == "csv" else " "
    return format_array(A, sep=sep, irredundant=irredundant, extra=[_config_line(args)])


# -- commands ----------------------------------------------------------------------


def cmd_construct(args) -> int:
    caps = _caps(args)
    if args.family == "rm":
        if args.r is None or args.m is None:
            raise ParameterError("construct rm needs --r and --m")
        G = rm_generator(args.r, args.m)
        header = f"# code rm r={args.r} m={args.m}"
    elif args.family == "grm":
        if args.q is None or args.r is None or args.m is None:
            raise ParameterError("construct grm needs --q, --r and --m")
        if args.q**args.m > caps.space:
            raise ParameterError(f"length {args.q}^{args.m} exceeds the space cap")
        G = grm_evaluation_matrix(args.q, args.r, args.m, _field(args))
        header = f"# code grm q={args.q} r={args.r} m={args.m}"
    else:
        F = _field(args)
        if args.k is None or (args.n is None and args.points is None):
            raise ParameterError("construct grs needs --k and --n (or --points)")
        n = args.n if args.n is not None else len(args.points)
        spec = grs_spec(F, n, args.k, args.points, args.mults)
        G = grs_generator(spec)
        header = f"# code grs q={F.q} n={spec.n} k={spec.k} points={','.join(map(str, spec.points))} " \
                 f"mults={','.join(map(str, spec.multipliers))}"
    text = format_matrix(G, header=header + "\n" + _config_line(args))
    _emit(args, text)
    if args.array_out:
        C = code_from_generator(G)
        A = oa_from_code(C, caps)
        irr = is_irredundant_direct(A, caps, _seed(args)).irredundant
        Path(args.array_out).write_text(_export_text(A, irr, args, args.format or "text"))
    return EXIT_OK


def cmd_search(args) -> int:
    caps = _caps(args)
    F = _field(args)
    found = search_self_dual_grs(F, args.n, caps.search, caps.enum)
    if found is None:
        sys.stderr.write(f"no self-dual GRS code with n={args.n} over F_{F.q}\n")
        _emit(args, json.dumps({"found": False, "config": run_config(args)}, sort_keys=True) + "\n")
        return EXIT_OK
    C, v = found
    header = f"# code sdgrs q={F.q} n={args.n} k={args.n // 2} mults={','.join(map(str, v))}"
    _emit(args, format_matrix(C.gen, header=header + "\n" + _config_line(args)))
    return EXIT_OK


def _certs_for_array(A, cr, caps, seed):
    certs = []
    if A.t >= 1 and A.t < A.n:
        certs += [lab.check_basic(A, "array", caps, seed), lab.check_extremal(A, "array", caps, seed),
                  lab.check_distance_bounds(A, "array", caps, seed)]
        if cr is not None:
            certs.append(lab.check_covering_bounds(A, cr, "array", caps, seed))
    return certs


def analyze_report(kind, obj, caps: Caps, seed: int = 0) -> dict:
    """The analysis report as a plain dict."""
    report: dict = {}
    certs = []
    if kind == "code":
        C = obj
        report.update(n=C.n, k=C.k, q=C.q, field=format_field(C.field), d=min_distance(C, caps.enum, caps.subsets))
        if C.k == C.n:
            raise ParameterError("the full space has a zero dual; strength is undefined")
        verdict = lab.classify_dual_pair(C, caps, seed)
        A = oa_from_code(C, caps)
        report.update(
            d_dual=verdict.d_dual, t=A.t, M=A.M, dual_irredundant=verdict.direct_dual, category=verdict.category,
        )
        certs.append(verdict.certificate("dual-pair"))
        direct = is_irredundant_direct(A, caps, seed)
        via = verdict.primal_irredundant
    else:
        A = OrthogonalArray(obj.rows, obj.q, name=obj.name)
        declared = (obj.t, obj.lam)
        rep = strength(A, caps, seed)
        report.update(n=A.n, q=A.q, M=A.M, d=min_distance_array(A, caps), t=rep.t,
                      declared={"t": declared[0], "lambda": declared[1]},
                      declared_matches=declared == (rep.t, rep.lam))
        direct = is_irredundant_direct(A, caps, seed)
        via = report["d"] >= rep.t + 1
    report["lambda"] = A.lam
    report["irredundant"] = direct.irredundant
    report["irredundant_methods"] = {"direct": direct.irredundant, "distance": via,
                                     "agree": direct.irredundant == via}
    if direct.witness is not None:
        report["irredundant_witness"] = {"columns": direct.witness[0], "rows": direct.witness[1]}
    cr = None
    try:
        cr = covering_radius(A, caps)
        report.update(rho=cr.rho, rho_method=cr.method)
    except CapExceeded as exc:
        report.update(rho=None, rho_method=f"skipped: {exc}")
    report["method_flags"] = {
        "strength_exhaustive": bool(A.strength_exhaustive if A.strength_exhaustive is not None else True),
        "irredundancy_exhaustive": direct.exhaustive,
        "rho_exact": cr is not None,
    }
    certs += _certs_for_array(A, cr, caps, seed)
    report["certificates"] = [c.to_dict() for c in certs]
    report["violations"] = [f"{c.subject}:{v.name}" for c in certs for v in c.violations()]
    return lab._plain(report)


def cmd_analyze(args) -> int:
    path = args.genmat or args.input
    if path is None:
        raise ParameterError("analyze needs an input file or --genmat")
    kind, obj = load_subject(_read(path), _field(args, required=False))
    report = analyze_report(kind, obj, _caps(args), _seed(args))
    report["config"] = run_config(args)
    report["version"] = __version__
    _emit(args, json.dumps(report, sort_keys=True, indent=1) + "\n")
    return EXIT_VIOLATION if report["violations"] else EXIT_OK


def run_family(args):
    caps, jobs = _caps(args), args.jobs
    fam = args.family
    if fam == "rm":
        return lab.sweep_rm_parameters(args.max_m, caps, jobs) + lab.sweep_rm_theorem(args.max_m, caps, jobs)
    if fam == "grm":
        grid = [g for g in lab.GRM_GRID if args.q is None or g[0] == args.q]
        return lab.sweep_grm(grid, caps, jobs)
    if fam == "mds":
        qs = (args.q,) if args.q else (5, 7, 8)
        return lab.sweep_mds(qs, args.max_n, _seed(args), caps, jobs)
    if fam == "sdgrs":
        qs = (args.q,) if args.q else (4, 8)
        return lab.sweep_sdgrs(qs, args.n, caps, jobs)
    if fam == "random":
        return lab.sweep_random(args.count, _seed(args, 7), caps, jobs)
    if fam == "index-one":
        return lab.index_one_suite(caps, jobs)
    if fam == "distance":
        return lab.distance_suite(args.count, _seed(args, 7), caps, jobs)
    return lab.covering_suite(caps=caps, n_jobs=jobs)


def summary_table(summary: dict) -> str:
    width = max([len(k) for k in summary] + [5])
    head = f"{'claim':<{width}}  " + "  ".join(f"{s:>14}" for s in lab.STATUSES)
    lines = [head, "-" * len(head)]
    for name, row in summary.items():
        lines.append(f"{name:<{width}}  " + "  ".join(f"{row[s]:>14}" for s in lab.STATUSES))
    return "\n".join(lines) + "\n"


def _slug(subject: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.=-]+", "_", subject).strip("_")


def cmd_verify(args) -> int:
    certs = run_family(args)
    cfg = run_config(args)
    summary = lab.summarize(certs)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for cert in certs:
            payload = dict(cert.to_dict(), config=cfg, version=__version__)
            (out / f"{_slug(cert.subject)}.json").write_text(json.dumps(lab._plain(payload), sort_keys=True, indent=1) + "\n")
        (out / "summary.json").write_text(json.dumps({"summary": summary, "config": cfg, "version": __version__},
                                                     sort_keys=True, indent=1) + "\n")
        (out / "summary.txt").write_text(summary_table(summary))
    if args.format == "json":
        sys.stdout.write(lab.report_json(certs, cfg) + "\n")
    else:
        sys.stdout.write(summary_table(summary))
    bad = lab.asserted_violations(certs)
    for subject, claim in bad:
        sys.stderr.write(f"VIOLATED {subject} {claim.name}: lhs={claim.lhs} rhs={claim.rhs} witness={claim.witness}\n")
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_export(args) -> int:
    caps = _caps(args)
    kind, obj = load_subject(_read(args.input), _field(args, required=False))
    if kind == "code":
        A = oa_from_code(obj, caps)
    else:
        A = obj
        A.require_t()
    irr = is_irredundant_direct(A, caps, _seed(args)).irredundant
    _emit(args, _export_text(A, irr, args, args.format or "text"))
    return EXIT_OK


COMMANDS = {"construct": cmd_construct, "search": cmd_search, "analyze": cmd_analyze,
            "verify": cmd_verify, "export": cmd_export}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _resolve_seed(args)
    try:
        return COMMANDS[args.command](args)
    except CapExceeded as exc:
        sys.stderr.write(f"iroa: cap exceeded ({exc.cap_name}): {exc}\n")
        return EXIT_CAP
    except (ParameterError, ValueError) as exc:
        sys.stderr.write(f"iroa: {exc}\n")
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
