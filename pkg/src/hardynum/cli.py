"""Command-line front end.

Commands:
  hm      estimate the tail decay profile, write profile.csv
  hardy   profile plus the Hardy number estimate, write profile.csv + hardy.json
  member  fit the decay and classify H^p / A^p_alpha membership, write member.json
  norms   catalog growth profiles and empirical exponents, write norms_*.csv + norms.json
  verify  identity suite plus Monte Carlo vs oracle spot checks, write verify.json
  report  profile.csv plus a gnuplot script of 1/omega against r with the fitted slope

Exit codes: 0 success, 1 verification failure, 2 usage error. Numerical
warnings ride inside the JSON artifacts, never the exit code: an infinite
Hardy number is a legitimate result, not a pipeline failure.

Identical configuration (including seed) produces byte-identical artifacts
regardless of chunk size or host parallelism.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import function_norms, identities
from ._serialize import fmt_float, growth_csv, json_dumps, profile_csv, write_text
from .errors import HardynumError
from .geometry import HalfPlane, Sector, TailQuery, domain_to_dict, load_domain
from .hardy_estimator import default_grid, estimate_hardy_number
from .membership import MembershipQuery, classify_bergman, classify_hardy, fit_decay
from .oracles import exact_hm
from .wos import WosConfig, estimate_hm, estimate_profile

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 100_000
DEFAULT_WINDOW = 4
MC_AGREEMENT_SIGMAS = 4.0

_CATALOG = (
    ("cayley", function_norms.cayley()),
    ("sector_power_half", function_norms.sector_power(0.5)),
    ("exp_cayley", function_norms.exp_cayley(1.0)),
    ("identity", function_norms.identity_map()),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardynum",
        description="Hardy/Bergman numbers of plane domains from harmonic-measure decay",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, needs_domain: bool) -> None:
        p.add_argument("--domain", required=needs_domain,
                       help="path to a domain JSON file")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        p.add_argument("--grid", default=None, metavar="R0,RATIO,COUNT",
                       help="geometric radius grid (default 2*max(1,|a|), ratio 2, 13 points)")
        p.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                       help="trailing slope window for the estimate")
        p.add_argument("--chunk", type=int, default=65536,
                       help="walk batch size (no effect on results)")
        p.add_argument("--out", default=".", help="output directory")

    for name in ("hm", "hardy", "report"):
        add_common(sub.add_parser(name), needs_domain=True)

    member = sub.add_parser("member")
    add_common(member, needs_domain=True)
    member.add_argument("--p", type=float, required=True)
    member.add_argument("--alpha", type=float, default=None)

    norms = sub.add_parser("norms")
    add_common(norms, needs_domain=False)
    norms.add_argument("--p", type=float, default=1.0,
                       help="exponent for the growth profile CSVs")
    norms.add_argument("--alpha", type=float, default=0.0)

    verify = sub.add_parser("verify")
    add_common(verify, needs_domain=False)
    return parser


def _parse_grid(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("grid must be r0,ratio,count")
    r0, ratio = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if not (r0 > 0.0 and math.isfinite(r0)):
        raise ValueError("grid r0 must be positive and finite")
    if not (ratio > 1.0):
        raise ValueError("grid ratio must exceed 1")
    if count < 2:
        raise ValueError("grid count must be at least 2")
    return [r0 * ratio**k for k in range(count)]


def _load_inputs(args):
    domain = load_domain(args.domain)
    grid = _parse_grid(args.grid) if args.grid else default_grid(domain)
    cfg = WosConfig(n_samples=args.samples, seed=args.seed, chunk_size=args.chunk)
    return domain, grid, cfg


def _estimate_payload(est, args, domain) -> dict:
    return {
        "value": est.value,
        "warnings": list(est.warnings),
        "ci_halfwidth": est.ci_halfwidth,
        "tail_window": est.tail_window,
        "local_slopes": list(est.local_slopes),
        "used_radii": list(est.used_radii) if est.used_radii is not None else None,
        "seed": args.seed,
        "n_samples": args.samples,
        "domain": domain_to_dict(domain),
    }


def _cmd_hm(args) -> int:
    domain, grid, cfg = _load_inputs(args)
    profile = estimate_profile(domain, grid, cfg)
    write_text(Path(args.out) / "profile.csv", profile_csv(profile))
    return 0


def _cmd_hardy(args) -> int:
    domain, grid, cfg = _load_inputs(args)
    profile = estimate_profile(domain, grid, cfg)
    est = estimate_hardy_number(profile, tail_window=args.window)
    write_text(Path(args.out) / "profile.csv", profile_csv(profile))
    write_text(Path(args.out) / "hardy.json", json_dumps(_estimate_payload(est, args, domain)))
    return 0


def _cmd_member(args) -> int:
    domain, grid, cfg = _load_inputs(args)
    profile = estimate_profile(domain, grid, cfg)
    fit = fit_decay(profile, tail_window=args.window)
    query = MembershipQuery(p=args.p, alpha=args.alpha)
    if args.alpha is None:
        verdict = classify_hardy(fit, query)
    else:
        verdict = classify_bergman(fit, query)
    payload = {
        "verdict": verdict.verdict,
        "rationale": verdict.rationale,
        "margin": verdict.margin,
        "query_ratio": verdict.query_ratio,
        "critical_ratio": verdict.critical_ratio,
        "p": args.p,
        "alpha": args.alpha,
        "fit": {
            "q": fit.q,
            "log_intercept": fit.log_intercept,
            "residual": fit.residual,
            "fit_range": list(fit.fit_range),
            "n_points": fit.n_points,
        },
        "seed": args.seed,
        "domain": domain_to_dict(domain),
    }
    write_text(Path(args.out) / "member.json", json_dumps(payload))
    return 0


def _cmd_norms(args) -> int:
    out = Path(args.out)
    summary = {}
    for name, fn in _CATALOG:
        hardy_gp = function_norms.hardy_growth_profile(fn, args.p)
        bergman_gp = function_norms.bergman_growth_profile(fn, args.p, args.alpha)
        write_text(out / f"norms_{name}_hardy.csv", growth_csv(hardy_gp))
        write_text(out / f"norms_{name}_bergman.csv", growth_csv(bergman_gp))
        exps = function_norms.empirical_hb(fn)
        summary[name] = {
            "h_hat": exps.h_hat,
            "b_hat": exps.b_hat,
            "h_bracket": list(exps.h_bracket),
            "b_bracket": list(exps.b_bracket),
            "hardy_classification": hardy_gp.classification,
            "bergman_classification": bergman_gp.classification,
        }
    write_text(out / "norms.json", json_dumps({"p": args.p, "alpha": args.alpha,
                                               "functions": summary}))
    return 0


def _mc_agreement_checks(args) -> list[dict]:
    cfg = WosConfig(n_samples=args.samples, seed=args.seed, chunk_size=args.chunk)
    checks = []
    for name, domain, r in (
        ("mc_vs_oracle_half_plane", HalfPlane(basepoint=1.0 + 0.0j), 10.0),
        ("mc_vs_oracle_right_angle_sector", Sector(opening=0.5 * math.pi,
                                                   basepoint=1.0 + 0.0j), 10.0),
    ):
        est = estimate_hm(domain, TailQuery(r), cfg)
        exact = exact_hm(domain, r)
        gap = abs(est.value - exact)
        checks.append({
            "name": name,
            "estimate": est.value,
            "exact": exact,
            "stderr": est.stderr,
            "passed": bool(gap <= MC_AGREEMENT_SIGMAS * est.stderr),
        })
    return checks


def _cmd_verify(args) -> int:
    reports = identities.run_identity_suite()
    entries = [
        {
            "name": rep.name,
            "lhs": rep.lhs,
            "rhs": rep.rhs,
            "relative_error": rep.relative_error,
            "tolerance": rep.tolerance,
            "passed": rep.passed,
        }
        for rep in reports
    ]
    entries.extend(_mc_agreement_checks(args))
    write_text(Path(args.out) / "verify.json", json_dumps(entries))
    failed = [e["name"] for e in entries if not e["passed"]]
    if failed:
        print(f"verification FAILED: {', '.join(sorted(set(failed)))}", file=sys.stderr)
        return 1
    print(f"verification passed: {len(entries)} checks")
    return 0


_REPORT_TEMPLATE = """\
set terminal pngcairo size 900,600
set output 'profile.png'
set datafile separator ','
set logscale xy
set xlabel 'r'
set ylabel '1/omega'
set key left top
plot 'profile.csv' every ::1 using 1:($2 > 0 ? 1.0/$2 : 1/0) \\
     with points pt 7 title 'measured', \\
     {amp} * x**{q} with lines lw 2 title 'fit slope {q_short}'
"""


def _cmd_report(args) -> int:
    domain, grid, cfg = _load_inputs(args)
    profile = estimate_profile(domain, grid, cfg)
    fit = fit_decay(profile, tail_window=args.window)
    write_text(Path(args.out) / "profile.csv", profile_csv(profile))
    script = _REPORT_TEMPLATE.format(
        amp=fmt_float(math.exp(fit.log_intercept)),
        q=fmt_float(fit.q),
        q_short="%.3f" % fit.q,
    )
    write_text(Path(args.out) / "report.gp", script)
    return 0


_DISPATCH = {
    "hm": _cmd_hm,
    "hardy": _cmd_hardy,
    "member": _cmd_member,
    "norms": _cmd_norms,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (HardynumError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
