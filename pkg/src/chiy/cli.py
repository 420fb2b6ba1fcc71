"""Command-line front end.

    chiy formula N              chi_y in Chern numbers
    chiy taylor N [K]           a_0..a_K at y = -1
    chiy moments N [K]          h(p^0)..h(p^K)
    chiy check FILE...          validation, -1-phenomenon consistency, bounds
    chiy bounds FILE...         Betti-number bounds and their statuses
    chiy localize FILE...       Hamiltonian torus action obstructions

Exit status: 0 when nothing is violated, 1 when some record is violated,
2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .constraints import (
    ConstraintReport,
    Status,
    c1cn1_lower_bound,
    c2cn2_lower_bound,
    calabi_yau_residual,
    check_c1cn1,
    check_c2cn2,
    check_calabi_yau,
    check_salamon,
    minus_one_consistency,
    salamon_residual,
)
from .genus import (
    chern_monomial,
    chern_power_moments,
    hrr_genus_formula,
    taylor_at_minus_one,
)
from .hodge import Tier, poincare_duality_residual, validate
from .kernel import ChernPolynomial, YPoly, chi_y_factor
from .localization import hamiltonian_obstruction_report
from .manifest import ManifestError, ManifoldManifest, load_manifest
from .oracle import brute_force_genus

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT = 0, 1, 2
ORACLE_MAX_N = 5


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# table commands


def _table(kind: str, n: int, depth: int | None, oracle: bool):
    if n < 0:
        raise InputError("dimension must be nonnegative")
    if depth is not None and not 0 <= depth <= n:
        raise InputError(f"depth must lie in 0..{n}")
    formula = hrr_genus_formula(n)
    if kind == "formula":
        rows = [("chi_y", formula)]
    elif kind == "taylor":
        rows = [(f"a_{i}", a) for i, a in enumerate(taylor_at_minus_one(n, depth))]
    else:
        rows = [(f"h(p^{i})", h) for i, h in enumerate(chern_power_moments(n, depth))]

    checks = []
    if oracle:
        if n <= ORACLE_MAX_N:
            ok = brute_force_genus(chi_y_factor(n + 1), n) == formula
            checks.append(ConstraintReport(
                "oracle.brute-force", Status.SATISFIED if ok else Status.VIOLATED,
                detail="explicit multivariate expansion"))
        else:
            checks.append(ConstraintReport(
                "oracle.brute-force", Status.NOT_APPLICABLE,
                detail=f"skipped for n > {ORACLE_MAX_N}"))
        rebuilt = ChernPolynomial(grade=n)
        u = YPoly([1, 1])
        for i, a in enumerate(taylor_at_minus_one(n)):
            rebuilt = rebuilt + a.scale(u ** i)
        checks.append(ConstraintReport(
            "oracle.taylor-rebuild",
            Status.SATISFIED if rebuilt == formula else Status.VIOLATED,
            detail="sum a_i (1+y)^i reproduces chi_y"))
    return rows, checks


# ---------------------------------------------------------------------------
# manifest commands


def _chern_value(m: ManifoldManifest, *classes):
    return m.chern[chern_monomial(*classes)]


def run_check(m: ManifoldManifest, tier: Tier | None = None, depth: int | None = None
              ) -> list[ConstraintReport]:
    tier = tier or m.tier
    n = m.dimension
    out = []
    if m.hodge is not None:
        violations = validate(m.hodge, tier)
        for v in violations:
            out.append(ConstraintReport(f"hodge.{tier.value}", Status.VIOLATED,
                                        detail=str(v)))
        if not violations:
            out.append(ConstraintReport(f"hodge.{tier.value}", Status.SATISFIED,
                                        detail="diamond valid"))
    if m.betti is not None:
        if tier is not Tier.RAW or m.hodge is None:
            res = poincare_duality_residual(m.betti)
            out.append(ConstraintReport(
                "betti.poincare", Status.SATISFIED if res.is_zero() else Status.VIOLATED,
                detail="b_i = b_(2n-i)"))
        if m.chern is not None:
            cn = m.chern[(n,)]
            euler = m.betti.euler()
            out.append(ConstraintReport(
                "euler", Status.SATISFIED if cn == euler else Status.VIOLATED,
                cn, euler, "c_n vs alternating Betti sum"))
    if m.hodge is not None and m.chern is not None:
        out.extend(minus_one_consistency(m.hodge, m.chern, depth))
    if tier is not Tier.RAW and m.betti is not None:
        out.extend(_section_bounds(m, tier, enforce=True))
    if not out:
        out.append(ConstraintReport("check", Status.NOT_APPLICABLE,
                                    detail="needs a hodge diamond or betti numbers"))
    return out


def _section_bounds(m: ManifoldManifest, tier: Tier, enforce: bool
                    ) -> list[ConstraintReport]:
    n, betti, chern = m.dimension, m.betti, m.chern
    kaehler = tier is not Tier.RAW
    out = []
    if chern is not None and kaehler:
        out.append(check_c1cn1(betti, n, _chern_value(m, 1, n - 1), m.hodge))
    else:
        out.append(ConstraintReport("bound.c1cn1", Status.NOT_APPLICABLE, None,
                                    c1cn1_lower_bound(betti, n),
                                    "value only" if kaehler else "needs Kaehler structure"))

    cy = m.structure in ("calabi-yau", "hyperkaehler") or (
        chern is not None and _chern_value(m, 1, n - 1) == 0)
    if cy and kaehler:
        out.append(check_calabi_yau(betti, n, m.hodge))
    else:
        out.append(ConstraintReport("calabi-yau", Status.NOT_APPLICABLE,
                                    calabi_yau_residual(betti, n), None,
                                    "value only; c1*c[n-1] != 0 or not Kaehler"))

    if m.structure in ("mirror", "hyperkaehler"):
        out.append(check_salamon(betti, n, chern, hyperkaehler=m.structure == "hyperkaehler"))
    elif not enforce and n % 2 == 0:
        out.append(ConstraintReport("salamon", Status.NOT_APPLICABLE,
                                    salamon_residual(betti, n), None,
                                    "value only; needs mirror symmetry"))

    if n % 2 == 0:
        bound = c2cn2_lower_bound(betti, n)
        if m.structure == "hyperkaehler" and chern is not None:
            out.append(check_c2cn2(betti, n, _chern_value(m, 2, n - 2)))
        elif not enforce or m.structure == "hyperkaehler":
            out.append(ConstraintReport("bound.c2cn2", Status.NOT_APPLICABLE, None, bound,
                                        "value only; needs hyperKaehler structure "
                                        "and Chern numbers"))
    elif not enforce:
        out.append(ConstraintReport("bound.c2cn2", Status.NOT_APPLICABLE,
                                    detail=f"needs even complex dimension, got n={n}"))
    return out


def run_bounds(m: ManifoldManifest, tier: Tier | None = None) -> list[ConstraintReport]:
    if m.betti is None:
        return [ConstraintReport("bounds", Status.NOT_APPLICABLE,
                                 detail="needs a hodge diamond or betti numbers")]
    return _section_bounds(m, tier or m.tier, enforce=False)


def run_localize(m: ManifoldManifest, depth: int | None = None) -> list[ConstraintReport]:
    if m.fixed_points is None:
        raise InputError("localize needs fixed_points")
    kwargs = {}
    if depth is not None:
        kwargs = {"depth": depth, "allow_deep": True}
    return hamiltonian_obstruction_report(m.fixed_points, diamond=m.hodge, chern=m.chern,
                                          betti=m.betti, **kwargs)


# ---------------------------------------------------------------------------
# rendering


def _render_table(kind, n, rows, checks, as_json):
    if as_json:
        doc = {"command": kind, "n": n,
               "entries": [{"name": name, "value": p.to_json(), "text": str(p)}
                           for name, p in rows]}
        if checks:
            doc["checks"] = [c.to_json() for c in checks]
        return json.dumps(doc, indent=2)
    lines = [f"{name} = {p}" for name, p in rows]
    lines += [str(c) for c in checks]
    return "\n".join(lines)


def _render_reports(command, results, as_json):
    if as_json:
        docs = [{"file": path, "name": m.name if m else None,
                 "reports": [r.to_json() for r in reps]}
                for path, m, reps in results]
        return json.dumps({"command": command, "results": docs}, indent=2)
    lines = []
    for path, m, reps in results:
        label = f"{m.name} ({path})" if m and m.name else path
        lines.append(f"== {command} {label}")
        lines.extend(str(r) for r in reps)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chiy", description="Exact chi_y-genus and Betti-number constraint toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--depth", type=int, default=None,
                       help="Taylor/moment depth")
        p.add_argument("--oracle", action="store_true",
                       help="run brute-force cross-checks where defined")

    for name in ("formula", "taylor", "moments"):
        p = sub.add_parser(name)
        p.add_argument("n", type=int)
        if name != "formula":
            p.add_argument("k", type=int, nargs="?")
        common(p)
    for name in ("check", "bounds", "localize"):
        p = sub.add_parser(name)
        p.add_argument("files", nargs="+", help="manifest files or directories")
        p.add_argument("--tier", choices=[t.value for t in Tier], default=None,
                       help="validation tier override")
        common(p)
    return parser


def _expand(paths: list[str]) -> list[str]:
    """Directories expand to their ``*.json`` files in sorted order."""
    out = []
    for p in paths:
        if Path(p).is_dir():
            found = sorted(str(f) for f in Path(p).glob("*.json"))
            if not found:
                raise InputError(f"no *.json manifests in {p}")
            out.extend(found)
        else:
            out.append(p)
    return out


def _run_manifest_command(args) -> tuple[str, int]:
    tier = Tier(args.tier) if args.tier else None
    files = _expand(args.files)

    def one(path):
        m = load_manifest(path)
        if args.command == "check":
            reps = run_check(m, tier, args.depth)
        elif args.command == "bounds":
            reps = run_bounds(m, tier)
        else:
            reps = run_localize(m, args.depth)
        return path, m, reps

    with ThreadPoolExecutor() as pool:
        results = list(pool.map(one, files))  # input order preserved
    violated = any(r.violated for _, _, reps in results for r in reps)
    return _render_reports(args.command, results, args.json), (
        EXIT_VIOLATED if violated else EXIT_OK)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("formula", "taylor", "moments"):
            depth = getattr(args, "k", None)
            depth = args.depth if depth is None else depth
            rows, checks = _table(args.command, args.n, depth, args.oracle)
            text = _render_table(args.command, args.n, rows, checks, args.json)
            code = EXIT_VIOLATED if any(c.violated for c in checks) else EXIT_OK
        else:
            text, code = _run_manifest_command(args)
    except (InputError, ManifestError) as exc:
        print(f"chiy: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"chiy: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
