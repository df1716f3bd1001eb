"""Command-line front end: ``smoothconst <command> [options]``.

Every command writes its full report to stdout only after the computation
has finished, so a failing run leaves stdout empty. Errors go to stderr as
a single JSON object ``{"error": <type>, "message": <text>}`` and select the
exit code: 2 for invalid input, 3 when a numerical tolerance cannot be met,
4 for an internal invariant violation.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import alpha as al
from . import optimize as opt
from . import spectral as sp
from . import verify as vf
from ._quadrature import QuadratureError
from .errors import InternalInvariantError, ToleranceNotMetError
from .model import ProblemError, canonicalize, triple_from_json

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_INPUT", "EXIT_TOLERANCE", "EXIT_INTERNAL"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_TOLERANCE = 3
EXIT_INTERNAL = 4

THREADS_ENV = "SMOOTHING_THREADS"


class InputError(ValueError):
    """Bad command-line input that argparse itself cannot detect."""


# ------------------------------------------------------------ formatting


def _plain(x):
    """Convert a report to JSON-ready builtins; non-finite floats become strings."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else repr(x)
    return x


def dumps(doc):
    """Deterministic JSON: fixed key order, shortest round-trip floats."""
    return json.dumps(_plain(doc), indent=2, allow_nan=False) + "\n"


def _csv_cell(x):
    if x is None:
        return ""
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    if isinstance(x, (dict, list, tuple)):
        return json.dumps(_plain(x), separators=(",", ":")).replace(",", ";")
    return str(x)


def _csv(header, rows):
    lines = [",".join(header)]
    lines += [",".join(_csv_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _flat_csv(doc):
    """Two-column ``key,value`` CSV of a flat report."""
    return _csv(["key", "value"], [(k, v) for k, v in _plain(doc).items()])


def _human(doc, indent=0):
    pad = "  " * indent
    lines = []
    for k, v in _plain(doc).items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_human(v, indent + 1).rstrip("\n"))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}: ({len(v)} entries)")
            for item in v:
                lines.append(pad + "  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ inputs


def _threads(args):
    raw = args.threads if args.threads is not None else os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except (TypeError, ValueError):
        raise InputError(f"thread count must be an integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"thread count must be >= 1, got {n}")
    return n


def _load_problem(args):
    if (args.problem is None) == (args.problem_json is None):
        raise InputError("give exactly one of --problem or --problem-json")
    if args.problem is not None:
        try:
            with open(args.problem, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read problem file: {exc}") from exc
    else:
        text = args.problem_json
    return canonicalize(triple_from_json(text))


def _path(name):
    return {"auto": None, "closed": al.CLOSED_FORM, "quadrature": al.QUADRATURE}[name]


# ------------------------------------------------------------ commands


def cmd_constant(args):
    p = _load_problem(args)
    rep = opt.optimal_constant(p, k_max=args.k_max, n_grid=args.n_grid, tol=args.tol,
                               threads=_threads(args), path=_path(args.path))
    doc = {"problem": p.to_dict(), **rep.to_dict()}
    if args.format == "csv":
        rows = [(s.k, s.sup, s.location, s.rho, s.interval, s.uncertainty, s.path)
                for s in rep.per_k]
        return _csv(["k", "sup", "location", "rho", "interval", "uncertainty", "path"], rows)
    return doc


def _rho_grid(args):
    if args.rho:
        try:
            rho = np.array([float(v) for v in args.rho.split(",")])
        except ValueError:
            raise InputError("--rho must be a comma-separated list of numbers") from None
    else:
        if not (0 < args.rho_min < args.rho_max) or args.n_rho < 1:
            raise InputError("need 0 < --rho-min < --rho-max and --n-rho >= 1")
        rho = np.geomspace(args.rho_min, args.rho_max, args.n_rho)
        if args.include_zero:
            rho = np.concatenate([[0.0], rho])
    if not np.all(np.isfinite(rho)) or np.any(rho < 0):
        raise InputError("radii must be finite and non-negative")
    return rho


def _check_bounds(errs, rho, tol):
    bad = np.flatnonzero(errs > tol)
    if bad.size:
        i = bad[0]
        raise ToleranceNotMetError(
            f"certified bound {errs[i]:.3g} exceeds tol {tol:.3g} at rho={float(rho[i])!r}"
        )


def cmd_alpha_profile(args):
    p = _load_problem(args)
    if args.k < 0:
        raise InputError("k must be >= 0")
    threads = _threads(args)
    rho = _rho_grid(args)
    prof = al.make_profile(p, args.k, path=_path(args.path), tol=args.tol, threads=threads)
    vals, errs = prof.eval_with_error(rho)
    _check_bounds(errs, rho, args.tol)
    cols = {"k": [args.k] * rho.size, "rho": rho, "alpha": vals,
            "path": [prof.path] * rho.size, "err_bound": errs}
    if args.compare:
        pos = rho > 0
        q = np.zeros(rho.size)
        qerr = np.zeros(rho.size)
        q[~pos] = vals[~pos]
        if pos.any():
            qp = al.make_profile(p, args.k, path=al.QUADRATURE, tol=args.tol, threads=threads)
            q[pos], qerr[pos] = qp.eval_with_error(rho[pos])
            _check_bounds(qerr, rho, args.tol)
        with np.errstate(invalid="ignore", divide="ignore"):
            rel = np.where(vals != 0, np.abs(q - vals) / np.abs(vals), np.abs(q - vals))
        cols.update(alpha_quad=q, quad_err_bound=qerr, rel_diff=rel)
    header = list(cols)
    rows = list(zip(*cols.values()))
    if args.format == "csv":
        return _csv(header, rows)
    return {"problem": p.to_dict(), "k": args.k, "path": prof.path,
            "limit_at_zero": prof.limit_at_zero, "limit_at_infinity": prof.limit_at_infinity,
            "rows": [dict(zip(header, r)) for r in rows]}


def cmd_eigenvalues(args):
    if args.k_max < 0:
        raise InputError("k-max must be >= 0")
    table = sp.eigenvalue_table(args.d, args.a, args.k_max, threads=_threads(args))
    if args.format == "csv":
        return sp.table_csv(table)
    return table.to_dict()


def cmd_extremisers(args):
    p = _load_problem(args)
    v = opt.classify_extremisers(p, n_grid=args.n_grid, k_max=args.k_max, threads=_threads(args))
    return {"problem": p.to_dict(), **v.to_dict()}


def cmd_rho0(args):
    return opt.solve_rho0().to_dict()


def cmd_conjecture(args):
    if args.N is not None:
        if args.problem is not None or args.problem_json is not None:
            raise InputError("--N and a problem are mutually exclusive")
        return opt.counterexample_report(args.N, n_grid=args.n_grid).to_dict()
    p = _load_problem(args)
    res = opt.conjecture_check(p, k_max=args.k_max, n_grid=args.n_grid, threads=_threads(args))
    return {"problem": p.to_dict(), **res.to_dict()}


def cmd_verify(args):
    results = vf.run_verify(threads=_threads(args))
    text = vf.render_json(results) if args.format == "json" else vf.render_text(results)
    ok = all(r.passed for r in results)
    return text, EXIT_OK if ok else EXIT_TOLERANCE


# ------------------------------------------------------------ parser


def _add_common(sp_, problem=True, fmt=("json", "csv", "human")):
    if problem:
        sp_.add_argument("--problem", metavar="FILE", help="problem JSON file")
        sp_.add_argument("--problem-json", metavar="TEXT", help="inline problem JSON")
    sp_.add_argument("--format", choices=fmt, default=fmt[0])
    sp_.add_argument("--threads", default=None,
                     help=f"worker threads (default: ${THREADS_ENV} or 1)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="smoothconst",
        description="Optimal constants and extremisers for radial L2 smoothing estimates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("constant", help="optimal constant C = (2 pi sup_k sup_rho alpha_k)^(1/2)")
    _add_common(c)
    c.add_argument("--k-max", type=int, default=64)
    c.add_argument("--n-grid", type=int, default=2000)
    c.add_argument("--tol", type=float, default=al.DEFAULT_TOL)
    c.add_argument("--path", choices=("auto", "closed", "quadrature"), default="auto")
    c.set_defaults(func=cmd_constant)

    a = sub.add_parser("alpha-profile", help="alpha_k on a radius grid, with error bounds")
    _add_common(a, fmt=("csv", "json", "human"))
    a.add_argument("--k", type=int, default=0)
    a.add_argument("--rho", help="comma-separated radii (overrides the log grid)")
    a.add_argument("--rho-min", type=float, default=1e-3)
    a.add_argument("--rho-max", type=float, default=1e3)
    a.add_argument("--n-rho", type=int, default=61)
    a.add_argument("--include-zero", action="store_true", help="prepend a rho = 0 row")
    a.add_argument("--tol", type=float, default=al.DEFAULT_TOL)
    a.add_argument("--path", choices=("auto", "closed", "quadrature"), default="auto")
    a.add_argument("--compare", action="store_true",
                   help="add quadrature columns and their relative difference")
    a.set_defaults(func=cmd_alpha_profile)

    e = sub.add_parser("eigenvalues", help="sphere-operator eigenvalues, closed form and quadrature")
    _add_common(e, problem=False)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--a", type=float, required=True)
    e.add_argument("--k-max", type=int, default=20)
    e.set_defaults(func=cmd_eigenvalues)

    x = sub.add_parser("extremisers", help="existence verdict for extremisers")
    _add_common(x)
    x.add_argument("--k-max", type=int, default=64)
    x.add_argument("--n-grid", type=int, default=2000)
    x.set_defaults(func=cmd_extremisers)

    r = sub.add_parser("rho0", help="root of the d = 5 transcendental equation and C_5")
    _add_common(r, problem=False)
    r.set_defaults(func=cmd_rho0)

    j = sub.add_parser("conjecture", help="does sup alpha_0 dominate every sup alpha_k?")
    _add_common(j)
    j.add_argument("--N", type=float, default=None,
                   help="scaled-indicator counterexample family instead of a problem")
    j.add_argument("--k-max", type=int, default=8)
    j.add_argument("--n-grid", type=int, default=2000)
    j.set_defaults(func=cmd_conjecture)

    v = sub.add_parser("verify", help="run the acceptance suite")
    _add_common(v, problem=False, fmt=("human", "json"))
    v.set_defaults(func=cmd_verify)
    return parser


def _render(doc, fmt):
    if isinstance(doc, str):
        return doc
    if fmt == "csv":
        return _flat_csv(doc)
    if fmt == "human":
        return _human(doc)
    return dumps(doc)


def _fail(kind, exc, code, stderr):
    stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
    return code


def main(argv=None, stdout=None, stderr=None):
    """Run the CLI and return the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; normalise its exit status
        return EXIT_OK if exc.code == 0 else _fail("usage", "invalid arguments", EXIT_INPUT, stderr)
    code = EXIT_OK
    try:
        _threads(args)  # reject a bad thread count even where it is unused
        out = args.func(args)
        if isinstance(out, tuple):
            out, code = out
        text = _render(out, args.format)
    except (ProblemError, InputError, al.AlphaDomainError, sp.SpectralDomainError) as exc:
        return _fail(type(exc).__name__, exc, EXIT_INPUT, stderr)
    except (ToleranceNotMetError, QuadratureError) as exc:
        return _fail(type(exc).__name__, exc, EXIT_TOLERANCE, stderr)
    except InternalInvariantError as exc:
        return _fail(type(exc).__name__, exc, EXIT_INTERNAL, stderr)
    except ValueError as exc:
        return _fail(type(exc).__name__, exc, EXIT_INPUT, stderr)
    except Exception as exc:  # pragma: no cover - defensive
        return _fail(type(exc).__name__, exc, EXIT_INTERNAL, stderr)
    stdout.write(text)
    return code


def entry():
    sys.exit(main())
