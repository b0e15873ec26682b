"""Command-line interface: degree counts, table reproduction, spectral regions, minimization.

Every numeric value in a report is a ``{"value", "provenance"}`` record, with
provenance one of ``computed``, ``formula-theorem``, ``formula-conjecture``,
``formula-bound`` or ``table-data``. JSON is written with sorted keys and no
timestamps, so identical inputs give identical bytes.

Exit codes: 0 success, 2 some cell hit its budget, 3 counts disagree across
seeds/primes (or a count was positive-dimensional).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .critical import DEFAULT_PRIMES, DEFAULT_SEEDS, DegreeReport, degree_report
from .degrees import (SQ_DEGREE_TABLE, FormulaResult, Status, ci_degrees, formula_for, schubert_formulas,
                      sq_degree_closed, sq_degree_recursive, toric_degree)
from .grasscore import (DegenerateInput, MetricId, ProjMatrix, data_projection, invariant_plane_critical_points,
                        load_matrix, random_projection)
from .groebner import Budget, PointCount
from .models import (FAMILIES, ModelSpec, SchubertIndex, generic_ci_model, resolve_model, schubert_model,
                     toric_model)
from .spectral import (EXAMPLE_Q, ModelObjective, OptResult, is_snug, minimize_model, parametric_rank_residual,
                       region_boundary, sample_region, schubert_curve_minimizer, schubert_snug_minimizer)

EXIT_OK, EXIT_BUDGET, EXIT_UNSTABLE = 0, 2, 3

PROVENANCE = {Status.THEOREM: "formula-theorem", Status.CONJECTURE: "formula-conjecture",
              Status.BOUND: "formula-bound", Status.DATA: "table-data"}


@dataclass
class RunConfig:
    primes: list[int] = field(default_factory=lambda: list(DEFAULT_PRIMES))
    seeds: list[int] = field(default_factory=lambda: list(DEFAULT_SEEDS))
    budget_seconds: float | None = None
    tol: float = 1e-9
    out: str | None = None
    fmt: str = "json"
    workers: int = 1

    @property
    def budget(self) -> Budget | None:
        return Budget(seconds=self.budget_seconds) if self.budget_seconds else None

    @property
    def can_be_stable(self) -> bool:
        return len(set(self.primes)) >= 2 and len(set(self.seeds)) >= 2

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(primes=args.prime or list(DEFAULT_PRIMES), seeds=args.seed or list(DEFAULT_SEEDS),
                   budget_seconds=args.budget_seconds, tol=args.tol, out=args.out, fmt=args.format,
                   workers=args.workers)


def computed(v) -> dict:
    return {"value": v, "provenance": "computed"}


def formula(f: FormulaResult | None) -> dict | None:
    if f is None:
        return None
    return {"value": f.value, "provenance": PROVENANCE[f.status], "source": f.source}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def load_model(ref: str, n: int | None, seed: int) -> ModelSpec:
    if os.path.exists(ref):
        return ModelSpec.load(ref)
    return resolve_model(ref, n, seed)


# ---------------------------------------------------------------------------
# degree


def _cell(seed: int, prime: int, c) -> dict:
    out = {"seed": seed, "prime": prime}
    if isinstance(c, PointCount):
        out.update(status="ok", distinct=computed(c.distinct), total=computed(c.total), radical=c.radical)
    else:
        out.update(status="budget" if str(c).startswith("budget") else "positive-dimensional", reason=str(c))
    return out


def degree_payload(model: ModelSpec, kind: str, rep: DegreeReport, cfg: RunConfig) -> tuple[dict, int]:
    f = formula_for(model.name, model.extra, model.n, kind)
    stable = rep.stable and cfg.can_be_stable
    value = rep.value if rep.stable else None
    payload = {
        "model": model.name, "kind": kind, "n": model.n, "route": rep.route,
        "counts": [_cell(s, p, c) for (s, p), c in rep.counts.items()],
        "stable": stable,
        "value": computed(value) if value is not None else None,
        "formula": formula(f),
        "match": (value == f.value) if (f is not None and value is not None) else None,
    }
    if any(isinstance(c, str) and c.startswith("budget") for c in rep.counts.values()):
        code = EXIT_BUDGET
    elif not rep.stable:
        code = EXIT_UNSTABLE
    else:
        code = EXIT_OK
    return payload, code


def degree_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["model", "kind", "seed", "prime", "status", "distinct", "total", "radical"])
    for c in payload["counts"]:
        w.writerow([payload["model"], payload["kind"], c["seed"], c["prime"], c["status"],
                    c.get("distinct", {}).get("value", ""), c.get("total", {}).get("value", ""),
                    c.get("radical", "")])
    return buf.getvalue()


def cmd_degree(args) -> int:
    cfg = RunConfig.from_args(args)
    model = load_model(args.model, args.n, cfg.seeds[0])
    rep = degree_report(model, args.kind, cfg.seeds, cfg.primes, args.route, budget=cfg.budget,
                        workers=cfg.workers)
    payload, code = degree_payload(model, args.kind, rep, cfg)
    emit(degree_csv(payload) if cfg.fmt == "csv" else dumps(payload), cfg.out)
    return code


# ---------------------------------------------------------------------------
# tables


def _count_cell(model: ModelSpec, kind: str, cfg: RunConfig, f: FormulaResult | None) -> tuple[dict, int]:
    rep = degree_report(model, kind, cfg.seeds, cfg.primes, budget=cfg.budget, workers=cfg.workers)
    payload, code = degree_payload(model, kind, rep, cfg)
    if payload["value"] is None:
        status = "skipped-budget" if code == EXIT_BUDGET else "unstable"
        return {"status": status, "formula": formula(f), "counts": payload["counts"]}, code
    return {"status": "computed", "value": payload["value"], "formula": formula(f),
            "match": payload["match"] if f is not None else None}, code


def table_schubert(args, cfg: RunConfig) -> tuple[dict, int]:
    n = args.n or 4
    cols, code = [], EXIT_OK
    for i, j in combinations(range(1, n + 1), 2):
        s = SchubertIndex(i, j, n)
        fs = schubert_formulas(s)
        col = {"index": [i, j], "dim": formula(fs.dim), "degree": formula(fs.sq_degree)}
        model = schubert_model(s)
        for kind, f in (("ed", fs.ed_degree), ("gd", fs.gd_degree)):
            if args.formula_only:
                col[kind] = {"status": "formula", "formula": formula(f)}
                continue
            col[kind], c = _count_cell(model, kind, cfg, f)
            code = max(code, c)
        cols.append(col)
    return {"table": "schubert", "n": n, "columns": cols}, code


def _ci_table(name: str, degree_lists, args, cfg: RunConfig) -> tuple[dict, int]:
    rows, code = [], EXIT_OK
    for ds in degree_lists:
        pair = ci_degrees(ds)
        row = {"degrees": list(ds)}
        model = generic_ci_model(4, ds, cfg.seeds[0])
        for kind, f in (("ed", pair.ed), ("gd", pair.gd)):
            if args.formula_only:
                row[kind] = {"status": "formula", "formula": formula(f)}
                continue
            row[kind], c = _count_cell(model, kind, cfg, f)
            code = max(code, c)
        rows.append(row)
    return {"table": name, "n": 4, "rows": rows}, code


def table_toric(args, cfg: RunConfig) -> tuple[dict, int]:
    u = tuple(int(x) for x in args.u.split(","))
    out, code = {"table": "toric", "u": list(u)}, EXIT_OK
    for family in ("chow", "secant", "tangent"):
        model = toric_model(family, u)
        fam = {}
        for kind in ("ed", "sd", "gd"):
            try:
                f = toric_degree(family, u, kind)
            except ValueError:
                f = None
            if args.formula_only:
                fam[kind] = {"status": "formula", "formula": formula(f)}
                continue
            fam[kind], c = _count_cell(model, kind, cfg, f)
            code = max(code, c)
        out[family] = fam
    return out, code


def table_sqdegree(args, cfg: RunConfig) -> tuple[dict, int]:
    """Triangular table of deg(S_ij^2), rows n-j, columns n-i, for n <= max_n."""
    max_n = args.max_n or 10
    rows, code = [], EXIT_OK
    for nj in range(0, max_n - 2 + 1):
        row = {"n-j": nj, "cells": []}
        for ni in range(max(1, nj), max_n):
            n = max_n
            i, j = n - ni, n - nj
            if not 1 <= i < j <= n:
                continue
            closed = sq_degree_closed(i, j, n)
            rec = sq_degree_recursive(i, j, n)
            printed = None
            if nj in SQ_DEGREE_TABLE and ni - 1 < len(SQ_DEGREE_TABLE[nj]):
                printed = SQ_DEGREE_TABLE[nj][ni - 1]
            status = Status.THEOREM if nj == 0 else Status.CONJECTURE
            cell = {"n-i": ni, "closed": {"value": closed, "provenance": PROVENANCE[status]},
                    "recursion": {"value": rec, "provenance": PROVENANCE[status]},
                    "printed": {"value": printed, "provenance": "table-data"} if printed is not None else None,
                    "agree": closed == rec and printed in (None, closed)}
            if not cell["agree"]:
                code = EXIT_UNSTABLE
            row["cells"].append(cell)
        if row["cells"]:
            rows.append(row)
    return {"table": "sqdegree", "max_n": max_n, "rows": rows}, code


def table_csv(payload: dict) -> str:
    """Flatten a table report into (key, field, value, provenance) rows."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "field", "value", "provenance", "status"])

    def walk(prefix, obj):
        if isinstance(obj, dict) and "provenance" in obj and "value" in obj:
            w.writerow([prefix[0], ".".join(prefix[1:]), obj["value"], obj["provenance"], ""])
            return
        if isinstance(obj, dict):
            if "status" in obj and obj["status"] != "computed" and "value" not in obj:
                w.writerow([prefix[0], ".".join(prefix[1:]), "", "", obj["status"]])
            for k in sorted(obj):
                if k not in ("counts", "status", "match", "agree", "index", "degrees", "n-i", "n-j"):
                    walk(prefix + [k], obj[k])

    name = payload["table"]
    items = payload.get("columns") or payload.get("rows") or []
    for item in items:
        key = (",".join(map(str, item.get("index") or item.get("degrees") or []))
               or f"n-j={item.get('n-j')}")
        if name == "sqdegree":
            for cell in item["cells"]:
                walk([f"{key};n-i={cell['n-i']}"], cell)
        else:
            walk([key], item)
    if name == "toric":
        for family in ("chow", "secant", "tangent"):
            walk([",".join(map(str, payload["u"]))], {family: payload[family]})
    return buf.getvalue()


TABLES = {
    "schubert": table_schubert,
    "ci-surface": lambda a, c: _ci_table("ci-surface", [(d1, d2) for d2 in range(1, (a.max_degree or 2) + 1)
                                                        for d1 in range(1, d2 + 1)], a, c),
    "ci-threefold": lambda a, c: _ci_table("ci-threefold", [(d,) for d in range(1, (a.max_degree or 2) + 1)],
                                           a, c),
    "toric": table_toric,
    "sqdegree": table_sqdegree,
}


def cmd_table(args) -> int:
    cfg = RunConfig.from_args(args)
    payload, code = TABLES[args.name](args, cfg)
    emit(table_csv(payload) if cfg.fmt == "csv" else dumps(payload), cfg.out)
    return code


# ---------------------------------------------------------------------------
# numeric commands


def exact_projector(B) -> list[list[Fraction]]:
    """Projector onto the row span of an exact 2 x n matrix."""
    n = len(B[0])
    G = [[sum(B[r][k] * B[s][k] for k in range(n)) for s in range(2)] for r in range(2)]
    det = G[0][0] * G[1][1] - G[0][1] * G[1][0]
    if det == 0:
        raise DegenerateInput("data rows are linearly dependent")
    Gi = [[G[1][1] / det, -G[0][1] / det], [-G[1][0] / det, G[0][0] / det]]
    return [[sum(B[r][a] * Gi[r][s] * B[s][b] for r in range(2) for s in range(2)) for b in range(n)]
            for a in range(n)]


def load_data(spec: str | None, n: int, seed: int) -> tuple[ProjMatrix, list[list[Fraction]] | None]:
    """``example`` (the built-in Gr(2,5) fixture), ``random`` or a JSON matrix file."""
    if spec in (None, "example"):
        return ProjMatrix(np.array(EXAMPLE_Q, dtype=float)), EXAMPLE_Q
    if spec == "random":
        return random_projection(n, np.random.default_rng(seed)), None
    M = load_matrix(spec)
    P, exact = data_projection(M)
    if exact is None and len(M) == 2:
        exact = exact_projector(M)
    return P, exact


def _metrics(name: str) -> list[MetricId]:
    return list(MetricId) if name == "all" else [MetricId.parse(name)]


def _opt_json(r: OptResult) -> dict:
    d = r.to_json()
    for k in ("value", "lambda", "mu"):
        d[k] = computed(d[k])
    return d


def certification(model: ModelSpec, P: ProjMatrix, r: OptResult, tol: float) -> dict:
    """Cross-checks of a numeric minimizer against exact or closed-form descriptions."""
    cert = {}
    obj = ModelObjective(model.parametric, P, r.metric)
    if len(r.params):
        cert["gradient_norm"] = computed(float(np.linalg.norm(obj.value_and_grad(r.params)[1])))
    if r.metric is not MetricId.CHORDAL:
        return cert
    if len(r.params):
        res = parametric_rank_residual(model.parametric, P, r.params)
        cert["critical_rank_residual"] = computed(res)
        cert["critical"] = res < 1e-8
    s = model.extra.get("schubert")
    if s is None:
        return cert
    idx = SchubertIndex(s[0], s[1], model.n)
    B = np.linalg.eigh(P.P)[1][:, -2:].T
    if idx.i == 1 and idx.j == 2:
        try:
            best = max(invariant_plane_critical_points(P.P), key=lambda Pc: np.trace(Pc.P @ P.P)).P
        except ValueError:
            # repeated eigenvalues (projection data): the top eigenplane is still the optimum
            best = B.T @ B
        err = float(np.abs(best - r.P.P).max())
        cert["closed_form"] = {"kind": "top invariant plane", "error": computed(err), "agree": err < tol}
    elif is_snug(idx):
        err = float(np.abs(schubert_snug_minimizer(idx, B).P - r.P.P).max())
        cert["closed_form"] = {"kind": "snug principal vectors", "error": computed(err), "agree": err < tol}
    elif (idx.i, idx.j) == (model.n - 2, model.n):
        n = model.n
        piv = B[:, [n - 3, n - 1]]
        if abs(np.linalg.det(piv)) > 1e-12:
            Bn = np.linalg.solve(piv, B)
            try:
                cands = schubert_curve_minimizer(Bn, r.metric)
            except DegenerateInput as exc:
                cert["closed_form"] = {"kind": "curve quadratic", "skipped": str(exc)}
            else:
                best = cands[0].result
                err = float(np.abs(best.P.P - r.P.P).max())
                cert["closed_form"] = {
                    "kind": "curve quadratic",
                    "candidates": [{"t": computed(c.t), "value": computed(c.result.value)} for c in cands],
                    "best_value": computed(best.value), "error": computed(err), "agree": err < 1e-6}
    return cert


def cmd_minimize(args) -> int:
    cfg = RunConfig.from_args(args)
    seed = cfg.seeds[0]
    model = load_model(args.model, args.n, seed)
    P, _ = load_data(args.data, model.n, seed)
    results = []
    code = EXIT_OK
    for m in _metrics(args.metric):
        try:
            r = minimize_model(model, P, m, starts=args.starts, seed=seed)
        except RuntimeError as exc:
            results.append({"metric": m.value, "error": str(exc)})
            code = EXIT_UNSTABLE
            continue
        d = _opt_json(r)
        d["certification"] = certification(model, P, r, cfg.tol)
        results.append(d)
    payload = {"model": model.name, "n": model.n, "seed": seed, "results": results}
    emit(dumps(payload), cfg.out)
    return code


def cmd_spectral(args) -> int:
    cfg = RunConfig.from_args(args)
    seed = cfg.seeds[0]
    model = load_model(args.model, args.n, seed)
    P, exact = load_data(args.data, model.n, seed)
    out = cfg.out or "."
    os.makedirs(out, exist_ok=True)
    sample_region(model, P, args.samples, seed).to_csv(os.path.join(out, "region.csv"))

    code = EXIT_OK
    with open(os.path.join(out, "boundary.txt"), "w") as fh:
        if exact is None:
            fh.write("# boundary needs exact data\n")
        else:
            try:
                b = region_boundary(model, exact, cfg.budget)
            except Exception as exc:      # budget or non-principal eliminant: record, do not guess
                fh.write(f"# boundary not computed: {exc}\n")
                code = EXIT_BUDGET
            else:
                fh.write(f"eliminant: {b.eliminant}\n")
                for c in b.components:
                    fh.write(f"component: {c}\n")

    results, spectra = [], set()
    for m in _metrics(args.metric):
        r = minimize_model(model, P, m, starts=args.starts, seed=seed)
        spectra.add((round(r.spectral.lam, 6), round(r.spectral.mu, 6)))
        results.append(_opt_json(r))
    with open(os.path.join(out, "minimizers.json"), "w") as fh:
        fh.write(dumps({"model": model.name, "n": model.n, "seed": seed, "minimizers": results,
                        "distinct_spectral_pairs": computed(len(spectra))}))
    return code


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="ambient dimension for catalog models")
    common.add_argument("--prime", type=int, action="append", help="prime field (repeatable)")
    common.add_argument("--seed", type=int, action="append", help="random seed (repeatable)")
    common.add_argument("--budget-seconds", type=float, help="wall-clock budget per Groebner computation")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--out", help="output file (directory for 'spectral')")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--workers", type=int, default=1, help="parallel count cells")

    p = argparse.ArgumentParser(prog="linedist", description="Distance optimization over lines in Gr(2,n).")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("degree", parents=[common], help="ED/GD/SD degree by point counting")
    d.add_argument("kind", choices=("ed", "gd", "sd"))
    d.add_argument("--model", required=True, help=f"catalog ref ({', '.join(FAMILIES)}) or model JSON file")
    d.add_argument("--route", default="auto", choices=("auto", "implicit", "parametric", "chart"))
    d.set_defaults(func=cmd_degree)

    t = sub.add_parser("table", parents=[common], help="reproduce a degree table")
    t.add_argument("name", choices=sorted(TABLES))
    t.add_argument("--u", default="1,2,3", help="toric exponents u1,u2,u3")
    t.add_argument("--max-n", type=int, help="largest n for the squared-degree table")
    t.add_argument("--max-degree", type=int, help="largest degree for the CI tables")
    t.add_argument("--formula-only", action="store_true", help="skip Groebner counts")
    t.set_defaults(func=cmd_table)

    for name, func, help_ in (("spectral", cmd_spectral, "spectral region, boundary and minimizers"),
                              ("minimize", cmd_minimize, "multi-start minimization")):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--model", default="schubert:2,5")
        s.add_argument("--data", default="example", help="'example', 'random' or a JSON matrix file")
        s.add_argument("--metric", default="all" if name == "spectral" else "chordal",
                       help="metric name or 'all'")
        s.add_argument("--starts", type=int, default=64)
        if name == "spectral":
            s.add_argument("--samples", type=int, default=2000)
        s.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "model", None) == "schubert:2,5" and args.n is None:
        args.n = 5
    try:
        return args.func(args)
    except (ValueError, DegenerateInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
