"""Command-line frontend: classify, synthesize, verify and sweep.

Exit codes
----------
0  all requested checks passed
1  a requested check failed (residual, disagreement)
2  invalid signature
3  unsupported (n, r) combination or model
4  frame drift or on-model defect above the bound
5  sweep grid larger than the configured cap

Every JSON report carries the ``config`` block it was produced from, so
``polyfrenet replay report.json`` reruns it.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import classify as cl
from .config import Tolerances, parse_pairs
from .exact import as_exact, exact_record
from .frenet import FrenetCurve, Helix, constant
from .lorentz_products import LiftError, ProductLift, lift_to_product, product_r_harmonic_check
from .metric import Signature, SignatureError
from .robertson_walker import RWModel, oracle_normal_component, rw_r_harmonic_check, rw_tension_normal_scaled
from .ruled import build_ruled_surface
from .spaceforms import SpaceForm
from .sweep import DEFAULT_CAP, Grid, GridTooLargeError, equivalence_sweep, root_table, run_tasks
from .synthesize import (
    DriftExceededError,
    SynthesisProblem,
    auto_frame,
    integrate_frenet,
    measured_tension,
    numeric_tension,
    write_csv,
    write_json,
)
from .tension import scaled_tension, tension_field

log = logging.getLogger("polyfrenet")

EXIT_OK, EXIT_FAIL, EXIT_SIGNATURE, EXIT_UNSUPPORTED, EXIT_DRIFT, EXIT_GRID = range(6)


class Unsupported(ValueError):
    pass


@dataclass
class RunConfig:
    """A parsed request: the subcommand plus every option that shaped the run."""

    command: str
    options: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"command": self.command, "options": dict(self.options), "tolerances": dict(self.tolerances)}

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        return cls(data["command"], dict(data.get("options", {})), dict(data.get("tolerances", {})))

    @property
    def tol(self) -> Tolerances:
        return Tolerances().updated(**self.tolerances)


# -- parsing helpers -----------------------------------------------------------


def _ints(text):
    return tuple(int(x) for x in str(text).replace(" ", "").split(",") if x)


def _exacts(text):
    """Comma list of exact numbers; ``?`` marks an unknown."""
    if text is None:
        return None
    out = []
    for x in str(text).replace(" ", "").split(","):
        out.append(None if x == "?" else as_exact(x))
    return tuple(out)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, np.generic):
        return v.item()
    return v


def _signature(opts) -> Signature:
    eps = _ints(opts["eps"])
    sig = Signature.of(eps, t=opts.get("t"), m=opts.get("m"))
    return sig.check()


def _kappa_sq(opts):
    if opts.get("kappa_sq") is not None:
        return _exacts(opts["kappa_sq"])
    if opts.get("kappa") is not None:
        return tuple(None if k is None else k * k for k in _exacts(opts["kappa"]))
    return None


# -- classify ------------------------------------------------------------------


def _classify_spaceform(opts) -> cl.ClassificationResult:
    sig = _signature(opts)
    eps, n = sig.eps, sig.n
    c, r = as_exact(opts["c"]), opts["r"]
    K = _kappa_sq(opts)
    if n == 2:
        if opts.get("triharmonic"):
            return cl.classify_triharmonic_2frenet(c, eps[1]) if not opts.get("surface") else _surface_tri(c, eps)
        return cl.classify_2frenet(c, eps[0], eps[1], r, surface=bool(opts.get("surface")))
    if opts.get("triharmonic"):
        r = 3
    if n == 3:
        return cl.classify_3frenet(c, *eps, r, kappa_sq=None if K is None else K[0])
    if r == 2:
        return cl.classify_nfrenet_biharmonic(eps, c, kappa_sq=K)
    if r == 3 and n in (4, 5):
        if K is None:
            raise Unsupported("the n = 4, 5 triharmonic classifier needs --kappa-sq (one entry may be '?')")
        return cl.classify_nfrenet_triharmonic(n, eps, c, K)
    raise Unsupported(f"no closed form for n={n}, r={r}")


def _surface_tri(c, eps):
    res = cl.classify_2frenet(c, eps[0], eps[1], 3, surface=True)
    res.theorem = "two-frenet-surface-triharmonic"
    return res


def _classify_rw(opts) -> dict:
    model = RWModel.from_string(opts["f"], c=as_exact(opts.get("c") or 0))
    t0 = as_exact(opts["t0"])
    chk = rw_r_harmonic_check(model, t0, opts["r"])
    out = {
        "theorem": "robertson-walker-geodesic-lift",
        "inputs": {"f": opts["f"], "t0": _jsonable(t0), "r": opts["r"]},
        "status": cl.FEASIBLE if chk.r_harmonic else cl.INFEASIBLE,
        "kappa": exact_record(chk.kappa),
        "kappa_sq": exact_record(chk.kappa_sq),
        "d": exact_record(chk.d),
        "condition": exact_record(chk.value),
    }
    if model.lam is not None:
        out["lambda"] = str(model.lam)
        if chk.kappa != 0:
            out["deceleration"] = exact_record(model.deceleration(t0))
    return out


def _classify_product(opts) -> dict:
    p = ProductLift(
        as_exact(opts["d1_sq"]), as_exact(opts["kappa_alpha_sq"]), as_exact(opts["tau_alpha_sq"]),
        int(opts["eps1"]), int(opts["eps3"]),
    )
    lifted = lift_to_product(p)
    chk = product_r_harmonic_check(p, as_exact(opts["c"]), opts["r"])
    return {
        "theorem": "product-lift",
        "inputs": {k: opts[k] for k in ("d1_sq", "kappa_alpha_sq", "tau_alpha_sq", "eps1", "eps3", "c", "r")},
        "status": cl.FEASIBLE if chk.lifted else cl.INFEASIBLE,
        "lifted": {
            "kappa_sq": exact_record(lifted.kappa_sq),
            "tau_sq": exact_record(lifted.tau_sq),
            "eps": list(lifted.eps),
            "null_sum": exact_record(lifted.null_sum),
        },
        "lifted_condition": exact_record(chk.lifted_value),
        "fiber_condition": exact_record(chk.fiber_value),
        "agree": chk.agree,
    }


def cmd_classify(cfg: RunConfig) -> tuple:
    opts = cfg.options
    model = opts.get("model", "spaceform")
    if model == "spaceform":
        return cl.ClassificationResult.to_json(_classify_spaceform(opts)), EXIT_OK
    if model == "rw":
        return _classify_rw(opts), EXIT_OK
    if model == "product":
        rep = _classify_product(opts)
        return rep, EXIT_OK if rep["agree"] else EXIT_FAIL
    raise Unsupported(f"unknown model {model!r}")


# -- synthesize ----------------------------------------------------------------


def _curve(sig, K):
    if all(k == 0 for k in K):
        return FrenetCurve(sig, tuple(constant(0.0) for _ in K))
    return Helix.from_squares(sig, K)


def _initial(opts, geometry, sig):
    if opts.get("initial"):
        data = json.loads(Path(opts["initial"]).read_text())
        return np.asarray(data["point"], float), [np.asarray(v, float) for v in data["frame"]]
    if not opts.get("auto_frame"):
        raise ValueError("give --initial FILE or --auto-frame")
    return auto_frame(geometry, sig)


def _synthesize_ruled(cfg: RunConfig) -> tuple:
    opts = cfg.options
    data = build_ruled_surface(float(opts.get("k0") or 0.5), (0.0, float(opts.get("s_max") or 1.0)),
                               int(opts.get("samples") or 201))
    if opts.get("csv"):
        data.write_csv(opts["csv"])
    summary = data.summary()
    bound = 1e-8
    ok = summary["max_res1"] < bound and summary["max_res2"] < bound
    summary["passed"] = ok
    if opts.get("json"):
        with open(opts["json"], "w") as fh:
            json.dump(summary, fh, indent=2)
    return summary, EXIT_OK if ok else EXIT_FAIL


def cmd_synthesize(cfg: RunConfig) -> tuple:
    opts = cfg.options
    if opts.get("ruled"):
        return _synthesize_ruled(cfg)
    tol = cfg.tol
    sig = _signature(opts)
    K = _kappa_sq(opts)
    if K is None or len(K) != sig.n - 1:
        raise ValueError(f"need {sig.n - 1} squared curvatures")
    geometry = SpaceForm(sig.ambient_dim, sig.ambient_index, as_exact(opts.get("c") or 0))
    point, frame = _initial(opts, geometry, sig)
    prob = SynthesisProblem(
        geometry, _curve(sig, K), point, frame,
        s_range=(0.0, float(opts.get("s_max") or 10.0)), tolerances=tol,
        samples=int(opts.get("samples") or 1001),
        reorthonormalize_every=opts.get("reorthonormalize"),
    ).check()
    code = EXIT_OK
    try:
        sol = integrate_frenet(prob)
    except DriftExceededError as exc:
        sol, code = exc.solution, EXIT_DRIFT
        log.warning("%s", exc)
    report = {"diagnostics": sol.diagnostics(), "residuals": {}}
    helix = isinstance(prob.curve, Helix)
    if helix:
        report["measured_residuals"] = {}
    residual = None
    for r in _ints(opts.get("r_check") or ""):
        vals = numeric_tension(sol, r)
        report["residuals"][str(r)] = float(vals.max())
        if helix:
            # curvatures read back from the integrated frames
            measured = measured_tension(sol, r)
            report["measured_residuals"][str(r)] = float(measured.max())
            vals = np.maximum(vals, measured)
        residual = vals if residual is None else np.maximum(residual, vals)
    if residual is not None and float(residual.max()) >= tol.residual_max and code == EXIT_OK:
        code = EXIT_FAIL
    report["passed"] = code == EXIT_OK
    if opts.get("csv"):
        write_csv(sol, opts["csv"], residual)
    if opts.get("json"):
        write_json(sol, opts["json"], {"residuals": report["residuals"], "passed": report["passed"]})
    return report, code


# -- verify --------------------------------------------------------------------


def _theorem_verdict(sig, c, K, r):
    """Closed-form verdict for the given helix, or ``None`` where no theorem applies."""
    eps, n = sig.eps, sig.n
    if n == 2:
        return any(s["kappa_sq"] == K[0] for s in cl.classify_2frenet(c, eps[0], eps[1], r).proper_solutions())
    if n == 3:
        if K[1] == 0:
            return None
        return cl.is_3frenet_solution(c, eps, r, K[0], K[1])
    if r == 2:
        return cl.classify_nfrenet_biharmonic(eps, c, kappa_sq=K).feasible
    if r == 3 and n in (4, 5):
        return cl.classify_nfrenet_triharmonic(n, eps, c, K).feasible
    return None


def cmd_verify(cfg: RunConfig) -> tuple:
    opts = cfg.options
    r = opts["r"]
    if opts.get("model") == "rw":
        model = RWModel.from_string(opts["f"], c=as_exact(opts.get("c") or 0))
        t0 = as_exact(opts["t0"])
        chk = rw_r_harmonic_check(model, t0, r)
        if chk.kappa_sq == 0:
            rep = {"oracle": "geodesic", "theorem": "infeasible", "agree": not chk.r_harmonic}
            return rep, EXIT_OK if rep["agree"] else EXIT_FAIL
        _, h2 = model.ratios(t0)
        scaled, _ = oracle_normal_component(model, t0, chk.kappa_sq, r)
        closed = rw_tension_normal_scaled(chk.kappa_sq, r, h2)
        rep = {
            "oracle": "zero" if scaled == 0 else "nonzero",
            "theorem": cl.FEASIBLE if chk.r_harmonic else cl.INFEASIBLE,
            "normal_component_match": scaled == closed,
        }
        rep["agree"] = (scaled == 0) == chk.r_harmonic and rep["normal_component_match"]
        return rep, EXIT_OK if rep["agree"] else EXIT_FAIL

    sig = _signature(opts)
    c = as_exact(opts.get("c") or 0)
    K = _kappa_sq(opts)
    if K is None or len(K) != sig.n - 1 or any(k is None for k in K):
        raise ValueError(f"need {sig.n - 1} squared curvatures")
    h = Helix.from_squares(sig, K)
    res = tension_field(h, SpaceForm(sig.ambient_dim, sig.ambient_index, c), r)
    verdict = _theorem_verdict(sig, c, K, r)
    rep = {
        "oracle": "zero" if res.is_zero else "nonzero",
        "tension": [exact_record(x) for x in res.coeffs],
        "theorem": None if verdict is None else (cl.FEASIBLE if verdict else cl.INFEASIBLE),
    }
    rep["agree"] = True if verdict is None else verdict == res.is_zero
    return rep, EXIT_OK if rep["agree"] else EXIT_FAIL


# -- sweep ---------------------------------------------------------------------


def _grid(opts) -> Grid:
    return Grid(as_exact(opts.get("step") or "1/4"), as_exact(opts.get("stop") or 10))


def _grid_rows(task) -> list:
    """Rows for one kappa^2 value: every tau^2 (n = 3) or the single point (n = 2)."""
    eps, c, r, K, taus = task
    sf = SpaceForm(len(eps) + 1, 1, c)
    rows = []
    for X in taus:
        ks = (K,) if X is None else (K, X)
        comps = scaled_tension(eps, ks, sf, r)
        resid = max(abs(float(v)) for v in comps)
        if len(eps) == 2:
            verdict = any(s["kappa_sq"] == K for s in cl.classify_2frenet(c, eps[0], eps[1], r).proper_solutions())
        else:
            verdict = cl.is_3frenet_solution(c, eps, r, K, X)
        rows.append({
            "kappa_sq": str(K), "tau_sq": "" if X is None else str(X),
            "classifier": int(verdict), "oracle_zero": int(all(v == 0 for v in comps)),
            "oracle_residual": f"{resid:.15g}",
        })
    return rows


def cmd_sweep(cfg: RunConfig) -> tuple:
    opts = cfg.options
    kind = opts.get("kind", "grid")
    workers = int(opts.get("workers") or 1)
    cap = int(opts.get("cap") or DEFAULT_CAP)
    if kind == "equivalence":
        recs = equivalence_sweep(
            ns=_ints(opts.get("n") or "2,3"), rs=_ints(opts.get("r_list") or "2,3,4,5"),
            cs=_ints(opts.get("c_list") or "-2,-1,0,1,2"), grid=_grid(opts), workers=workers, cap=cap,
        )
        rows = [rec.row() for rec in recs]
        return rows, EXIT_OK if all(r["mismatches"] == 0 for r in rows) else EXIT_FAIL
    if kind == "grid":
        sig = _signature(opts)
        eps, c, r = sig.eps, as_exact(opts.get("c") or 0), opts["r"]
        if sig.n not in (2, 3):
            raise Unsupported("grid sweeps cover n = 2, 3")
        vals = _grid(opts).values()
        total = len(vals) ** (sig.n - 1)
        if total > cap:
            raise GridTooLargeError(f"{total} grid points exceed the cap {cap}")
        taus = [None] if sig.n == 2 else vals
        chunks = run_tasks(_grid_rows, [(eps, c, r, K, taus) for K in vals], workers)
        return [row for chunk in chunks for row in chunk], EXIT_OK
    if kind == "roots":
        sig = _signature(opts)
        vals = _grid(opts).values()
        if len(vals) > cap:
            raise GridTooLargeError(f"{len(vals)} grid points exceed the cap {cap}")
        rows = root_table(as_exact(opts.get("c") or 0), sig.eps, opts["r"], vals)
        return [{k: ("" if v is None else str(v)) for k, v in row.items()} for row in rows], EXIT_OK
    if kind == "rw-power":
        q = int(opts.get("denominator") or 60)
        r = opts["r"]
        t0 = as_exact(opts.get("t0") or 1)
        rows = []
        for i in range(1, q):
            lam = Fraction(i, q)
            chk = rw_r_harmonic_check(RWModel.power_law(lam), t0, r)
            rows.append({"lambda": str(lam), "r": r, "feasible": int(chk.r_harmonic),
                         "condition": str(chk.value), "kappa_sq": str(chk.kappa_sq)})
        return rows, EXIT_OK
    raise Unsupported(f"unknown sweep kind {kind!r}")


# -- plumbing ------------------------------------------------------------------

COMMANDS = {"classify": cmd_classify, "synthesize": cmd_synthesize, "verify": cmd_verify, "sweep": cmd_sweep}


def run(cfg: RunConfig) -> tuple:
    """Dispatch a config; returns ``(report, exit_code)`` with errors mapped to exit codes."""
    try:
        result, code = COMMANDS[cfg.command](cfg)
    except SignatureError as exc:
        result, code = {"error": "signature", "message": str(exc)}, EXIT_SIGNATURE
    except Unsupported as exc:
        result, code = {"error": "unsupported", "message": str(exc)}, EXIT_UNSUPPORTED
    except GridTooLargeError as exc:
        result, code = {"error": "grid-too-large", "message": str(exc)}, EXIT_GRID
    except LiftError as exc:
        result, code = {"error": "invalid-lift", "message": str(exc)}, EXIT_FAIL
    return result, code


def build_report(cfg: RunConfig, result, code: int) -> dict:
    return {"config": cfg.to_dict(), "exit_code": code, "result": result}


def load_report(source) -> tuple:
    """``(RunConfig, result)`` from a report dict, JSON text or path."""
    if isinstance(source, (str, Path)) and Path(source).exists():
        source = Path(source).read_text()
    data = json.loads(source) if isinstance(source, str) else source
    return RunConfig.from_dict(data["config"]), data["result"]


def _emit(cfg: RunConfig, result, code: int, out) -> None:
    if isinstance(result, list):
        buf = io.StringIO()
        if result:
            w = csv.DictWriter(buf, fieldnames=list(result[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(result)
        text = buf.getvalue()
    else:
        text = json.dumps(build_report(cfg, result, code), indent=2, default=_jsonable) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _add_common(p, eps_required=False):
    p.add_argument("--model", choices=("spaceform", "product", "rw"), default="spaceform")
    p.add_argument("--eps", required=eps_required, help="comma-separated frame signs, e.g. 1,1,-1")
    p.add_argument("--m", type=int, help="ambient dimension (default: smallest that fits)")
    p.add_argument("--t", type=int, help="ambient index (default: number of -1 signs, at least 1)")
    p.add_argument("--c", default="0", help="sectional curvature (rational, e.g. 1/2)")
    p.add_argument("--r", type=int, default=2, help="polyharmonic order")
    p.add_argument("--kappa-sq", dest="kappa_sq", help="comma list of squared curvatures; '?' for unknown")
    p.add_argument("--kappa", help="comma list of curvatures (squared internally)")


def _global_options(default):
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--config", default=default, help="key=value file with option defaults and tolerances")
    g.add_argument("-o", "--out", default=default, help="write the report here instead of stdout")
    g.add_argument("-v", "--verbose", action="store_true", default=default)
    return g


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyfrenet", description=__doc__.split("\n")[0],
                                 parents=[_global_options(None)])
    sub = ap.add_subparsers(dest="command", required=True)
    # global options are accepted after the subcommand too
    late = [_global_options(argparse.SUPPRESS)]
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=late, **kw)

    sub.add_parser = add_parser

    p = sub.add_parser("classify", help="closed-form r-harmonicity classification")
    _add_common(p)
    p.add_argument("--triharmonic", action="store_true", help="classify r = 3")
    p.add_argument("--surface", action="store_true", help="2-Frenet curve on a Lorentz surface")
    p.add_argument("--f", help="warping function in t for --model rw, e.g. 't^(1/2)'")
    p.add_argument("--t0", help="time slice for --model rw")
    for name in ("d1-sq", "kappa-alpha-sq", "tau-alpha-sq"):
        p.add_argument(f"--{name}", dest=name.replace("-", "_"), help="product lift data (squared)")
    p.add_argument("--eps1", type=int, default=-1)
    p.add_argument("--eps3", type=int, default=1)

    p = sub.add_parser("synthesize", help="integrate a Frenet curve and report diagnostics")
    _add_common(p)
    p.add_argument("--auto-frame", dest="auto_frame", action="store_true", help="build the initial frame")
    p.add_argument("--initial", help="JSON file with 'point' and 'frame'")
    p.add_argument("--s-max", dest="s_max", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--reorthonormalize", type=int, help="re-orthonormalize at this many chunk boundaries")
    p.add_argument("--r-check", dest="r_check", help="comma list of r whose residuals must vanish")
    p.add_argument("--csv", help="curve samples")
    p.add_argument("--json", help="diagnostics")
    p.add_argument("--ruled", action="store_true", help="non-constant curvature profile on the ruled surface")
    p.add_argument("--k0", type=float, help="initial curvature for --ruled")

    p = sub.add_parser("verify", help="cross-check the tension oracle against the closed forms")
    _add_common(p)
    p.add_argument("--f")
    p.add_argument("--t0")

    p = sub.add_parser("sweep", help="parameter sweeps as CSV")
    _add_common(p)
    p.add_argument("--kind", choices=("grid", "equivalence", "roots", "rw-power"), default="grid")
    p.add_argument("--step", help="grid step, 1/q")
    p.add_argument("--stop", help="grid end (inclusive)")
    p.add_argument("--n", help="frame lengths for --kind equivalence")
    p.add_argument("--r-list", dest="r_list")
    p.add_argument("--c-list", dest="c_list")
    p.add_argument("--denominator", type=int, help="lambda grid i/q for --kind rw-power")
    p.add_argument("--t0")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, help=f"maximum grid points (default {DEFAULT_CAP})")

    sub.add_parser("replay", help="rerun the config stored in a JSON report").add_argument("report")
    return ap


_GLOBAL = {"config", "out", "verbose", "command"}


def config_from_args(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    file_opts = parse_pairs(Path(ns.config).read_text()) if ns.config else {}
    tol_keys = set(asdict(Tolerances()))
    tol = Tolerances().updated(**{k: v for k, v in file_opts.items() if k in tol_keys})
    tol = Tolerances.from_env(tol)
    opts = {k: v for k, v in vars(ns).items() if k not in _GLOBAL}
    sub = parser._subparsers._group_actions[0].choices[ns.command]
    for k, v in file_opts.items():
        if k in tol_keys:
            continue
        if k not in opts:
            raise ValueError(f"unknown config key {k!r} for {ns.command}")
        if opts[k] == sub.get_default(k):
            action = next(a for a in sub._actions if a.dest == k)
            opts[k] = action.type(v) if action.type else (v.lower() in ("1", "true", "yes") if isinstance(action.const, bool) else v)
    return RunConfig(ns.command, opts, asdict(tol))


def _fix_negative_lists(argv):
    """Join ``--eps -1,1`` into ``--eps=-1,1`` so argparse does not read ``-1,1`` as a flag."""
    out = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and tok[:2] in {f"-{d}" for d in "0123456789"} and "," in tok:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = make_parser()
    ns = parser.parse_args(_fix_negative_lists(sys.argv[1:] if argv is None else list(argv)))
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if ns.command == "replay":
        cfg, _ = load_report(ns.report)
    else:
        try:
            cfg = config_from_args(ns, parser)
        except ValueError as exc:
            parser.error(str(exc))
    t0 = time.perf_counter()
    try:
        result, code = run(cfg)
    except (ValueError, KeyError) as exc:
        print(f"polyfrenet: error: {exc}", file=sys.stderr)
        return EXIT_SIGNATURE if isinstance(exc, SignatureError) else EXIT_FAIL
    log.info("%s finished in %.2fs with exit code %d", cfg.command, time.perf_counter() - t0, code)
    _emit(cfg, result, code, ns.out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
