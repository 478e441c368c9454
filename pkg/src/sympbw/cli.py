"""Command-line front-end: structured reports over every library module.

Subcommands emit JSON (canonical: sorted keys, deterministic array orders),
CSV (tables flattened row-wise), or plain text on standard output; all
diagnostics go to standard error.  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from typing import NamedTuple

from . import decomp, dyck, grmod, oracle, polytope
from .rootsys import (
    is_simple_root,
    positive_roots,
    root_index_map,
    root_to_json,
    simple_root,
    validate_weight,
    variable_key,
)

SCHEMA = "sympbw/1"


class RunConfig(NamedTuple):
    """Validated flags steering one verification run."""

    max_n: int
    max_weight: int
    seed: int
    suite: str
    fmt: str
    inject_failure: bool


class VerificationReport(NamedTuple):
    """Outcome of a battery of checks; exit code 0 iff none failed."""

    checks: list  # dicts: name, parameters, status, expected, actual
    passed: int
    failed: int


# ---------------------------------------------------------------------------
# parsing and rendering
# ---------------------------------------------------------------------------

def _parse_weight(parser: argparse.ArgumentParser, text: str, n: int) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        parser.error(f"--lambda/--mu must be comma-separated integers, got {text!r}")
    if len(parts) != n:
        parser.error(f"weight {text!r} needs exactly {n} entries for rank {n}")
    if any(x < 0 for x in parts):
        parser.error(f"weight entries must be non-negative, got {text!r}")
    return parts


def _parse_exponent(parser: argparse.ArgumentParser, text: str, n: int) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        parser.error(f"--exponent must be comma-separated integers, got {text!r}")
    if len(parts) != n * n:
        parser.error(
            f"--exponent needs {n * n} entries (triangle reading order) for rank {n}"
        )
    if any(x < 0 for x in parts):
        parser.error(f"exponent entries must be non-negative, got {text!r}")
    return parts


def render_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def render_csv(columns: list, rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


def _emit(args, payload: dict, columns: list, rows: list, text_lines: list) -> None:
    if args.format == "json":
        print(render_json(payload))
    elif args.format == "csv":
        print(render_csv(columns, rows))
    else:
        print("\n".join(text_lines))


def _root_str(alpha) -> str:
    return str(alpha)


def _term_list(poly) -> list:
    """Terms of a polynomial as JSON records, earliest in the order first."""
    n = poly.n
    terms = sorted(poly.terms, key=lambda s: grmod.order_key(s, n))
    return [{"s": list(s), "coeff": str(poly.terms[s])} for s in terms]


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_roots(args, parser) -> int:
    n = args.n
    roots = positive_roots(n)
    records = []
    for index, alpha in enumerate(roots):
        rec = root_to_json(alpha)
        rec["index"] = index
        rec["position"] = variable_key(alpha, n)[1]
        rec["simple"] = is_simple_root(alpha)
        records.append(rec)
    payload = {"schema": SCHEMA, "n": n, "count": len(records), "roots": records}
    columns = ["index", "row", "col", "barred", "position", "simple"]
    rows = [[r[c] for c in columns] for r in records]
    text = [f"{r['index']:3d}  {_root_str(alpha)}" for r, alpha in zip(records, roots)]
    _emit(args, payload, columns, rows, text)
    return 0


def cmd_paths(args, parser) -> int:
    n = args.n
    paths = dyck.enumerate_paths(n)
    if args.count_only:
        payload = {"schema": SCHEMA, "n": n, "count": len(paths)}
        _emit(args, payload, ["count"], [[len(paths)]], [f"count={len(paths)}"])
        return 0
    records = [[root_to_json(alpha) for alpha in path] for path in paths]
    payload = {"schema": SCHEMA, "n": n, "count": len(paths), "paths": records}
    columns = ["path", "step", "row", "col", "barred"]
    rows = [
        [p, t, rec["row"], rec["col"], rec["barred"]]
        for p, path in enumerate(records)
        for t, rec in enumerate(path)
    ]
    text = [" -> ".join(_root_str(alpha) for alpha in path) for path in paths]
    _emit(args, payload, columns, rows, text)
    return 0


def cmd_points(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    n = args.n
    points = polytope.enumerate_points(lam)
    if args.count_only:
        payload = {
            "schema": SCHEMA, "n": n, "lambda": list(lam), "count": len(points),
        }
        _emit(args, payload, ["count"], [[len(points)]], [f"count={len(points)}"])
        return 0
    records = [
        {
            "s": list(s),
            "deg": polytope.degree_of(s),
            "wt": list(polytope.weight_of(s, n)),
        }
        for s in points
    ]
    payload = {
        "schema": SCHEMA, "n": n, "lambda": list(lam),
        "count": len(points), "points": records,
    }
    columns = [f"s{i + 1}" for i in range(n * n)] + ["deg"] + [
        f"wt{i + 1}" for i in range(n)
    ]
    rows = [r["s"] + [r["deg"]] + r["wt"] for r in records]
    text = [
        f"s={tuple(r['s'])} deg={r['deg']} wt={tuple(r['wt'])}" for r in records
    ]
    _emit(args, payload, columns, rows, text)
    return 0


def cmd_dim(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    count = len(polytope.enumerate_points(lam))
    weyl = polytope.weyl_dim(lam)
    payload = {
        "schema": SCHEMA, "n": args.n, "lambda": list(lam),
        "count": count, "weyl": weyl, "match": count == weyl,
    }
    columns = ["count", "weyl", "match"]
    rows = [[count, weyl, str(count == weyl).lower()]]
    text = [f"count={count}", f"weyl={weyl}", f"match={str(count == weyl).lower()}"]
    _emit(args, payload, columns, rows, text)
    return 0


def _table_output(args, lam: tuple, table: dict, extra: dict | None = None) -> None:
    n = args.n
    cells = sorted(table.items())
    records = [
        {"wt": list(wt), "deg": deg, "dim": count} for (wt, deg), count in cells
    ]
    payload = {
        "schema": SCHEMA, "n": n, "lambda": list(lam),
        "total": sum(table.values()), "table": records,
    }
    if extra:
        payload.update(extra)
    columns = [f"mu{i + 1}" for i in range(n)] + ["degree", "dim"]
    rows = [r["wt"] + [r["deg"], r["dim"]] for r in records]
    text = [
        f"wt={tuple(r['wt'])} deg={r['deg']} dim={r['dim']}" for r in records
    ] + [f"total={payload['total']}"]
    _emit(args, payload, columns, rows, text)


def cmd_char(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    n = args.n
    char = polytope.character(lam)
    records = [
        {"wt": list(wt), "mult": mult} for wt, mult in sorted(char.items())
    ]
    payload = {
        "schema": SCHEMA, "n": n, "lambda": list(lam),
        "total": sum(char.values()), "character": records,
    }
    columns = [f"mu{i + 1}" for i in range(n)] + ["mult"]
    rows = [r["wt"] + [r["mult"]] for r in records]
    text = [f"wt={tuple(r['wt'])} mult={r['mult']}" for r in records]
    _emit(args, payload, columns, rows, text)
    return 0


def cmd_graded_char(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    _table_output(args, lam, polytope.graded_character(lam))
    return 0


def cmd_ideal_dims(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    table = grmod.quotient_graded_dims(lam, max_degree=args.max_degree, cap=args.cap)
    _table_output(args, lam, table)
    return 0


def cmd_straighten(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    n = args.n
    s = _parse_exponent(parser, args.exponent, n)
    contained = polytope.contains(lam, s)
    payload = {
        "schema": SCHEMA, "n": n, "lambda": list(lam), "exponent": list(s),
        "contained": contained,
    }
    monomial = grmod.SparsePolynomial.monomial(n, s)
    if contained:
        payload["path"] = None
        payload["element"] = None
        payload["normal_form"] = _term_list(monomial)
    else:
        ineq = grmod.violated_inequality(lam, s)
        idx = root_index_map(n)
        s1 = [0] * (n * n)
        for alpha in ineq.path:
            s1[idx[alpha]] = s[idx[alpha]]
        element, _ = grmod.straightening_element(lam, ineq.path, tuple(s1))
        payload["path"] = [root_to_json(alpha) for alpha in ineq.path]
        payload["element"] = _term_list(element)
        payload["normal_form"] = _term_list(grmod.normal_form(monomial, lam))
    columns = ["part", "coeff"] + [f"s{i + 1}" for i in range(n * n)]
    rows, text = [], [f"contained={str(contained).lower()}"]
    for part in ("element", "normal_form"):
        terms = payload[part]
        for term in terms or []:
            rows.append([part, term["coeff"]] + term["s"])
        if terms is None:
            shown = "n/a"
        else:
            shown = " + ".join(
                f"({t['coeff']})*f^{tuple(t['s'])}" for t in terms
            ) or "0"
        text.append(f"{part}: {shown}")
    _emit(args, payload, columns, rows, text)
    return 0


def cmd_oracle(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    space = oracle.build_module(lam, cap=args.cap)
    weyl = polytope.weyl_dim(lam)
    extra = {
        "dimension": space.dimension, "weyl": weyl,
        "match": space.dimension == weyl,
    }
    if args.filtration:
        table = oracle.pbw_filtration_dims(lam, space=space)
        _table_output(args, lam, table, extra)
        return 0
    payload = {"schema": SCHEMA, "n": args.n, "lambda": list(lam)}
    payload.update(extra)
    columns = ["dimension", "weyl", "match"]
    rows = [[space.dimension, weyl, str(extra["match"]).lower()]]
    text = [f"{k}={str(extra[k]).lower()}" for k in columns]
    _emit(args, payload, columns, rows, text)
    return 0


def cmd_tensor(args, parser) -> int:
    lam = _parse_weight(parser, args.lam, args.n)
    mu = _parse_weight(parser, args.mu, args.n)
    table = oracle.tensor_cartan_dims(lam, mu, cap=args.cap)
    _table_output(args, lam, table, {"mu": list(mu)})
    return 0


# ---------------------------------------------------------------------------
# verification battery
# ---------------------------------------------------------------------------

def _weights(max_n: int, max_weight: int, lo: int = 1):
    """All dominant weights with rank <= max_n and lo <= total <= max_weight."""
    for n in range(1, max_n + 1):
        for lam in itertools.product(range(max_weight + 1), repeat=n):
            if lo <= sum(lam) <= max_weight:
                yield lam


def _check_dimension(cfg: RunConfig) -> dict:
    bad = 0
    for lam in _weights(cfg.max_n, cfg.max_weight, lo=0):
        if len(polytope.enumerate_points(lam)) != polytope.weyl_dim(lam):
            bad += 1
    return {"name": "dimension", "parameters": {
        "max_n": cfg.max_n, "max_weight": cfg.max_weight,
    }, "expected": 0, "actual": bad}


def _check_character(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n, 3)
    bad = 0
    for lam in _weights(max_n, cfg.max_weight):
        if polytope.character(lam) != polytope.freudenthal_multiplicities(lam):
            bad += 1
    return {"name": "character", "parameters": {
        "max_n": max_n, "max_weight": cfg.max_weight,
    }, "expected": 0, "actual": bad}


def _check_graded_oracle(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n, 3)
    max_weight = min(cfg.max_weight, 3)
    bad = 0
    for lam in _weights(max_n, max_weight):
        if polytope.graded_character(lam) != oracle.pbw_filtration_dims(lam):
            bad += 1
    return {"name": "graded-oracle", "parameters": {
        "max_n": max_n, "max_weight": max_weight,
    }, "expected": 0, "actual": bad}


def _check_graded_ideal(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n, 2)
    max_weight = min(cfg.max_weight, 3)
    bad = 0
    for lam in _weights(max_n, max_weight):
        if polytope.graded_character(lam) != grmod.quotient_graded_dims(lam):
            bad += 1
    return {"name": "graded-ideal", "parameters": {
        "max_n": max_n, "max_weight": max_weight,
    }, "expected": 0, "actual": bad}


def _check_straightening(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n, 2)
    max_weight = min(cfg.max_weight, 2)
    bad = 0
    for lam in _weights(max_n, max_weight):
        n = len(lam)
        for path in dyck.enumerate_paths(n):
            for s in grmod.minimal_violations(lam, path):
                try:
                    grmod.straightening_element(lam, path, s)
                    nf = grmod.normal_form(
                        grmod.SparsePolynomial.monomial(n, s), lam
                    )
                except (AssertionError, RuntimeError, ValueError):
                    bad += 1
                    continue
                if any(not polytope.contains(lam, t) for t in nf.monomials()):
                    bad += 1
    return {"name": "straightening", "parameters": {
        "max_n": max_n, "max_weight": max_weight,
    }, "expected": 0, "actual": bad}


def _check_order_laws(cfg: RunConfig, triples: int = 2000) -> dict:
    rng = random.Random(cfg.seed)
    max_n = min(cfg.max_n, 4)
    bad = 0

    def sample(n, degree):
        s = [0] * (n * n)
        for _ in range(degree):
            s[rng.randrange(n * n)] += 1
        return tuple(s)

    for _ in range(triples):
        n = rng.randint(1, max_n)
        degree = rng.randint(0, 5)
        s, t, u = sample(n, degree), sample(n, degree), sample(n, rng.randint(0, 5))
        st = grmod.monomial_compare(s, t)
        ts = grmod.monomial_compare(t, s)
        if (st == "equal") != (s == t):
            bad += 1
        if {st, ts} not in ({"equal"}, {"less", "greater"}):
            bad += 1
        shifted = grmod.monomial_compare(
            tuple(a + b for a, b in zip(s, u)), tuple(a + b for a, b in zip(t, u))
        )
        if shifted != st:
            bad += 1
        su = grmod.monomial_compare(s, sample(n, degree + 1))
        if su != "greater":  # lower degree comes later in the order
            bad += 1
    return {"name": "order-laws", "parameters": {
        "max_n": max_n, "triples": triples, "seed": cfg.seed,
    }, "expected": 0, "actual": bad}


def _check_partial_support(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n, 4)
    bad = 0
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            beta = simple_root(k)
            for alpha in positive_roots(n):
                P = grmod.SparsePolynomial.variable_power(alpha, 1, n)
                unit = grmod.partial_op(beta, P, variant="unit")
                chev = grmod.partial_op(beta, P, variant="chevalley")
                if set(unit.monomials()) != set(chev.monomials()):
                    bad += 1
    return {"name": "partial-support", "parameters": {
        "max_n": max_n,
    }, "expected": 0, "actual": bad}


def _check_peeling(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n, 3)
    max_weight = min(cfg.max_weight, 3)
    bad = 0
    for lam in _weights(max_n, max_weight):
        for s in polytope.enumerate_points(lam):
            try:
                decomp.peel_completely(lam, s)
            except (AssertionError, ValueError):
                bad += 1
    return {"name": "peeling", "parameters": {
        "max_n": max_n, "max_weight": max_weight,
    }, "expected": 0, "actual": bad}


def _check_fundamental_points(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n, 5)
    bad = 0
    for n in range(1, max_n + 1):
        for i in range(1, n + 1):
            omega = tuple(1 if k == i else 0 for k in range(1, n + 1))
            if decomp.fundamental_points(n, i) != polytope.enumerate_points(omega):
                bad += 1
    return {"name": "fundamental-points", "parameters": {
        "max_n": max_n,
    }, "expected": 0, "actual": bad}


def _check_binomial(cfg: RunConfig) -> dict:
    max_n = min(cfg.max_n + 2, 6)
    bad = 0
    for n in range(1, max_n + 1):
        for i in range(1, n + 1):
            if not decomp.binomial_identity_check(n, i):
                bad += 1
    return {"name": "binomial-identity", "parameters": {
        "max_n": max_n,
    }, "expected": 0, "actual": bad}


def _check_tensor(cfg: RunConfig) -> dict:
    pairs = []
    if cfg.max_n >= 2:
        funds = [(1, 0), (0, 1)]
        pairs += list(itertools.product(funds, repeat=2))
    if cfg.max_n >= 3:
        pairs.append(((1, 0, 0), (1, 0, 0)))
    bad = 0
    for lam, mu in pairs:
        total = tuple(a + b for a, b in zip(lam, mu))
        if oracle.tensor_cartan_dims(lam, mu) != oracle.pbw_filtration_dims(total):
            bad += 1
    return {"name": "tensor-cartan", "parameters": {
        "pairs": len(pairs),
    }, "expected": 0, "actual": bad}


def _check_ordered_basis(cfg: RunConfig) -> dict:
    max_weight = min(cfg.max_weight, 3)
    bad = 0
    if cfg.max_n >= 2:
        for lam in itertools.product(range(max_weight + 1), repeat=2):
            if not 1 <= sum(lam) <= max_weight:
                continue
            if oracle.monomial_rank(lam) != polytope.weyl_dim(lam):
                bad += 1
    return {"name": "ordered-basis", "parameters": {
        "n": 2, "max_weight": max_weight,
    }, "expected": 0, "actual": bad}


SUITES = {
    "dimension": [_check_dimension],
    "character": [_check_character],
    "graded": [_check_graded_oracle, _check_graded_ideal],
    "straightening": [_check_straightening],
    "order": [_check_order_laws],
    "partial": [_check_partial_support],
    "peeling": [_check_peeling, _check_fundamental_points, _check_binomial],
    "tensor": [_check_tensor],
    "basis": [_check_ordered_basis],
}


def run_verification(cfg: RunConfig) -> VerificationReport:
    """Execute the selected battery and tally pass/fail."""
    if cfg.suite == "all":
        checks = [fn for fns in SUITES.values() for fn in fns]
    else:
        checks = SUITES[cfg.suite]
    results = [fn(cfg) for fn in checks]
    if cfg.inject_failure and results:
        results[0] = dict(results[0])
        results[0]["expected"] = results[0]["actual"] + 1
        results[0]["name"] += " (injected)"
    for rec in results:
        rec["status"] = "pass" if rec["expected"] == rec["actual"] else "fail"
    passed = sum(1 for rec in results if rec["status"] == "pass")
    return VerificationReport(results, passed, len(results) - passed)


def cmd_verify(args, parser) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        parser.error(
            f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}"
        )
    cfg = RunConfig(
        max_n=args.max_n, max_weight=args.max_weight, seed=args.seed,
        suite=args.suite, fmt=args.format, inject_failure=args.inject_failure,
    )
    report = run_verification(cfg)
    payload = {
        "schema": SCHEMA, "suite": cfg.suite,
        "max_n": cfg.max_n, "max_weight": cfg.max_weight, "seed": cfg.seed,
        "passed": report.passed, "failed": report.failed,
        "checks": report.checks,
    }
    columns = ["name", "status", "expected", "actual", "parameters"]
    rows = [
        [c["name"], c["status"], c["expected"], c["actual"],
         json.dumps(c["parameters"], sort_keys=True)]
        for c in report.checks
    ]
    text = [
        f"{c['status'].upper():4s} {c['name']}: expected {c['expected']}, "
        f"actual {c['actual']} {json.dumps(c['parameters'], sort_keys=True)}"
        for c in report.checks
    ] + [f"{report.passed}/{len(report.checks)} checks passed"]
    _emit(args, payload, columns, rows, text)
    return 0 if report.failed == 0 else 1


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympbw",
        description=(
            "Exact computations for PBW-degenerate symplectic modules: "
            "polytope points, graded characters, straightening, and "
            "independent tensor-space cross-checks.  Weights are passed as "
            "--lambda m1,...,mn; multi-exponents in triangle reading order."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **kwargs):
        p = sub.add_parser(name, help=help_text, **kwargs)
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="json",
            help="output format (default json)",
        )
        return p

    p = add("roots", "positive roots in triangle reading order")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.set_defaults(handler=cmd_roots)

    p = add("paths", "all symplectic Dyck paths")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--count-only", action="store_true", help="emit only the count")
    p.set_defaults(handler=cmd_paths)

    p = add("points", "integral points of the path polytope")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.add_argument("--count-only", action="store_true", help="emit only the count")
    p.set_defaults(handler=cmd_points)

    p = add("dim", "point count against the Weyl dimension formula")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.set_defaults(handler=cmd_dim)

    p = add("char", "weight multiplicities of the point set")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.set_defaults(handler=cmd_char)

    p = add("graded-char", "points per (weight, degree) cell")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.set_defaults(handler=cmd_graded_char)

    p = add("ideal-dims", "graded dimensions of the polynomial ring modulo the ideal")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.add_argument("--max-degree", type=int, default=None,
                   help="truncate the table at this total degree")
    p.add_argument("--cap", type=int, default=200000,
                   help="abort if a cell needs more monomials than this")
    p.set_defaults(handler=cmd_ideal_dims)

    p = add("straighten", "straightening element and normal form of a monomial")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.add_argument("--exponent", required=True,
                   help="multi-exponent c1,...,c_{n*n} in triangle reading order")
    p.set_defaults(handler=cmd_straighten)

    p = add("oracle", "module dimension in the tensor-space realization")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.add_argument("--filtration", action="store_true",
                   help="also emit the graded filtration table")
    p.add_argument("--cap", type=int, default=20000,
                   help="largest allowed ambient dimension")
    p.set_defaults(handler=cmd_oracle)

    p = add("tensor", "graded dimensions of a tensor-product Cartan component")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight m1,...,mn")
    p.add_argument("--mu", required=True, help="second dominant weight m1,...,mn")
    p.add_argument("--cap", type=int, default=20000,
                   help="largest allowed ambient dimension")
    p.set_defaults(handler=cmd_tensor)

    p = add("verify", "cross-module verification battery")
    p.add_argument("--suite", default="all",
                   help="all or one of: " + ", ".join(SUITES))
    p.add_argument("--max-n", type=int, default=2, help="largest rank to test")
    p.add_argument("--max-weight", type=int, default=3,
                   help="largest total weight to test")
    p.add_argument("--seed", type=int, default=20260821,
                   help="seed for randomized property sampling")
    p.add_argument("--inject-failure", action="store_true",
                   help=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    n = getattr(args, "n", None)
    if n is not None:
        try:
            validate_weight((0,) * n)
        except ValueError as err:
            parser.error(str(err))
    try:
        return args.handler(args, parser)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
