"""Command-line front end.

Exit codes: 0 success, 1 formula/oracle disagreement or a failed
verification, 2 usage error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import arrow, construct, formulas
from .errors import BudgetExhausted, DegenerateBranch, InvalidParams, NotFound, RefusedScale, StarRamseyError
from .factorize import regular_graph
from .types import EdgeColoring, NotArrows, StarParams

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
COMMANDS = ("compute", "construct", "verify", "search", "selftest")
FORMATS = ("json", "dot", "table")
FALLBACK_MAX_N = 9

log = logging.getLogger("starramsey")


@dataclass
class RunConfig:
    command: str
    params: StarParams | None = None
    n: int | None = None
    budget: arrow.SearchBudget = field(default_factory=arrow.SearchBudget.from_env)
    output_path: Path | None = None
    format: str = "json"
    target: str | None = None
    input_path: Path | None = None
    n_max: int | None = None
    workers: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidParams(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise InvalidParams(f"unknown format {self.format!r}")
        if self.command in ("compute", "construct", "verify", "search") and self.params is None:
            raise InvalidParams(f"{self.command} needs --stars")
        if self.command == "verify" and self.input_path is None:
            raise InvalidParams("verify needs a certificate file")
        if self.command == "construct" and self.target == "regular" and self.n is None:
            raise InvalidParams("construct regular needs --n")
        if self.command == "search" and self.target == "min-degree" and self.n is None:
            raise InvalidParams("search min-degree needs --n")


def _emit(config: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if config.output_path is not None:
        config.output_path.write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj)


def _stars_header(p: StarParams) -> dict:
    canon = p.canonical()
    return {"stars": list(p.sizes), "canonical_stars": list(canon.sizes), "t": p.t, "k": p.k, "sum": p.total}


def _compute(config: RunConfig) -> int:
    p = config.params
    reports = formulas.all_reports(p, config.n)
    n = reports["g"].n
    if config.format == "table":
        cols = ["stars", "k", "N", "n", "r_star", "rr", "r", "g(n)", "f(n)"]
        row = [
            ",".join(map(str, p.canonical().sizes)), p.k, reports["r"].value, n,
            reports["r_star"].value, reports["rr"].value, reports["r"].value,
            reports["g"].value, reports["f"].value,
        ]
        _emit(config, "\t".join(cols) + "\n" + "\t".join(map(str, row)))
        return EXIT_OK
    out = _stars_header(p)
    out["n"] = n
    out.update({name: rep.to_dict() for name, rep in reports.items()})
    out["chain"] = list(formulas.threshold_chain(p))
    _emit(config, _dumps(out))
    return EXIT_OK


def _render_coloring(config: RunConfig, c: EdgeColoring) -> str:
    return c.to_dot() if config.format == "dot" else c.to_json()


def _construct(config: RunConfig) -> int:
    p = config.params
    if config.target == "star-critical":
        c = construct.star_critical_witness(p)
    elif config.target == "regular":
        try:
            c = construct.regular_nonarrowing_witness(p, config.n)
        except DegenerateBranch as exc:
            c = _fallback_regular(config, exc)
            if c is None:
                return EXIT_DISAGREE
    else:
        raise InvalidParams(f"unknown construction {config.target!r}")
    report = construct.audit_witness(c, p)
    if not report.ok:
        print(f"constructed witness failed its audit: {report.violations[:5]}", file=sys.stderr)
        return EXIT_DISAGREE
    _emit(config, _render_coloring(config, c))
    return EXIT_OK


def _fallback_regular(config: RunConfig, exc: DegenerateBranch) -> EdgeColoring | None:
    p, n = config.params, config.n
    degree = p.total - p.t - 2
    if n > FALLBACK_MAX_N:
        print(f"{exc}; n={n} is too large for the search fallback", file=sys.stderr)
        return None
    print(f"{exc}; searching a coloring of a {degree}-regular graph instead", file=sys.stderr)
    verdict = arrow.arrows_decision(regular_graph(n, degree), p, config.budget, workers=config.workers)
    if not isinstance(verdict, NotArrows):
        print(f"the {degree}-regular fallback host arrows; no witness produced", file=sys.stderr)
        return None
    return verdict.certificate


def _verify(config: RunConfig) -> int:
    p = config.params
    try:
        c = EdgeColoring.from_json(config.input_path.read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InvalidParams(f"cannot read certificate {config.input_path}: {exc}") from exc
    if c.t != p.t:
        raise InvalidParams(f"certificate has {c.t} colors, --stars gives {p.t}")
    hit = arrow.find_mono_star(c, p)
    report = construct.audit_witness(c, p)
    out = report.to_dict()
    out["star_free_by_color"] = out.pop("star_free")
    out.update({"star_free": hit is None, "first_violation": list(hit) if hit else None})
    _emit(config, _dumps(out))
    return EXIT_OK if hit is None else EXIT_DISAGREE


def _last_certificate(trace) -> dict | None:
    for _, verdict in reversed(trace):
        if isinstance(verdict, NotArrows):
            return verdict.certificate.to_dict()
    return None


def _search(config: RunConfig) -> int:
    p, b = config.params, config.budget
    trace: list = []
    if config.target == "ramsey":
        n_max = config.n_max or formulas.ramsey_stars(p) + 1
        got, want, n = arrow.ramsey_search(p, n_max, b, trace=trace), formulas.ramsey_stars(p), None
    elif config.target == "star-critical":
        got, want, n = arrow.star_critical_search(p, b, trace=trace), formulas.star_critical_stars(p), None
    elif config.target == "regular":
        got, want, n = arrow.regular_ramsey_search(p, b, trace=trace), formulas.regular_ramsey_stars(p), None
    elif config.target == "min-degree":
        n = config.n
        got = arrow.min_degree_search(p, n, b, trace=trace)
        want = formulas.min_degree_threshold_f(p, n).value
    else:
        raise InvalidParams(f"unknown search {config.target!r}")
    out = _stars_header(p)
    out.update({"quantity": config.target, "n": n, "oracle": got, "formula": want, "agree": got == want})
    out["certificate"] = _last_certificate(trace)
    _emit(config, _dumps(out))
    print(f"{config.target}: oracle {got}, formula {want}", file=sys.stderr)
    return EXIT_OK if got == want else EXIT_DISAGREE


def _selftest(config: RunConfig) -> int:
    from .selftest import run_all

    results = run_all(config.budget, echo=lambda line: print(line, file=sys.stderr))
    summary = {"passed": sum(r.passed for r in results), "total": len(results)}
    summary["criteria"] = [{"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results]
    _emit(config, _dumps(summary))
    return EXIT_OK if all(r.passed for r in results) else EXIT_DISAGREE


HANDLERS = {
    "compute": _compute,
    "construct": _construct,
    "verify": _verify,
    "search": _search,
    "selftest": _selftest,
}


def run(config: RunConfig) -> int:
    """Execute one configured command and return its exit code."""
    try:
        return HANDLERS[config.command](config)
    except BudgetExhausted as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidParams, RefusedScale) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotFound as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except StarRamseyError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=int, default=None, help="search node limit (default 10^8)")
    common.add_argument("--budget-seconds", type=float, default=None, help="search time limit (default 60)")
    common.add_argument("--out", type=Path, default=None, help="write the artifact here instead of stdout")
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("-q", "--quiet", action="store_true", help="suppress progress output on stderr")

    stars = argparse.ArgumentParser(add_help=False)
    stars.add_argument("--stars", required=True, help="comma list of star sizes, e.g. 2,2,3")

    parser = argparse.ArgumentParser(prog="starramsey", description="Ramsey-type thresholds for stars")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common, stars], help="evaluate the closed-form thresholds")
    p.add_argument("--n", type=int, default=None, help="host order for g(n), f(n); default r(...)")

    p = sub.add_parser("construct", parents=[common, stars], help="build an audited star-free coloring")
    p.add_argument("family", choices=("star-critical", "regular"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", parents=[common, stars], help="check a certificate file")
    p.add_argument("certificate", type=Path)

    p = sub.add_parser("search", parents=[common, stars], help="run a brute-force oracle")
    p.add_argument("quantity", choices=("ramsey", "star-critical", "regular", "min-degree"))
    p.add_argument("--nmax", type=int, default=None, help="largest K_N tried by the Ramsey search")
    p.add_argument("--n", type=int, default=None, help="host order for the min-degree search")

    sub.add_parser("selftest", parents=[common], help="run the desk-scale acceptance grid")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    env = arrow.SearchBudget.from_env()
    budget = arrow.SearchBudget(
        args.budget_nodes if args.budget_nodes is not None else env.max_nodes,
        args.budget_seconds if args.budget_seconds is not None else env.max_seconds,
    )
    stars = getattr(args, "stars", None)
    return RunConfig(
        command=args.command,
        params=StarParams.parse(stars) if stars is not None else None,
        n=getattr(args, "n", None),
        budget=budget,
        output_path=args.out,
        format=args.format,
        target=getattr(args, "family", None) or getattr(args, "quantity", None),
        input_path=getattr(args, "certificate", None),
        n_max=getattr(args, "nmax", None),
        workers=getattr(args, "workers", 1),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(message)s",
    )
    try:
        config = config_from_args(args)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
