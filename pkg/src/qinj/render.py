"""Stable text renderings: plain, csv, markdown, latex, json.

csv and json output is byte-stable for identical inputs (fixed column
order, sorted JSON keys, LF line endings).
"""

from __future__ import annotations

import json
from typing import Sequence

from .partitions import Params, Partition
from .series import Series, Verdict
from .verify import InjectionRecord, SearchReport

FORMATS = ("plain", "csv", "markdown", "latex", "json")


def partition_text(p: Partition | None, params: Params) -> str:
    """Subscript rendering: base-value_index^mult, e.g. ``2_1^10``.

    The empty partition renders as "-"; an absent partition (no
    pre-image) renders as the empty string.
    """
    if p is None:
        return ""
    if p.is_empty:
        return "-"
    return ",".join(
        f"{params.family_base(part.family)}_{part.index}^{part.mult}"
        for part in p.parts)


def partition_triples(p: Partition | None) -> str:
    """csv cell: semicolon-joined family:index:mult triples."""
    if p is None:
        return ""
    if p.is_empty:
        return "-"
    return ";".join(f"{part.family.value}:{part.index}:{part.mult}" for part in p.parts)


def partition_json(p: Partition | None) -> dict | None:
    if p is None:
        return None
    return {"parts": [
        {"family": part.family.value, "index": part.index, "mult": part.mult}
        for part in p.parts]}


def partition_latex(p: Partition | None, params: Params) -> str:
    if p is None:
        return ""
    if p.is_empty:
        return r"\langle\rangle"
    body = ",".join(
        f"{params.family_base(part.family)}_{{{part.index}}}^{{{part.mult}}}"
        for part in p.parts)
    return rf"\langle {body}\rangle"


def render_series(series: Series, fmt: str) -> str:
    if fmt == "plain":
        return "\n".join(f"{x}\t{c}" for x, c in enumerate(series.coeffs))
    if fmt == "csv":
        lines = ["x,coefficient"]
        lines += [f"{x},{c}" for x, c in enumerate(series.coeffs)]
        return "\n".join(lines)
    if fmt == "markdown":
        lines = ["| x | coefficient |", "| --- | --- |"]
        lines += [f"| {x} | {c} |" for x, c in enumerate(series.coeffs)]
        return "\n".join(lines)
    if fmt == "latex":
        lines = [r"\begin{tabular}{rr}", r"$x$ & coefficient\\", r"\hline"]
        lines += [rf"{x} & {c}\\" for x, c in enumerate(series.coeffs)]
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps(
            {"degree": series.truncation_degree, "coefficients": list(series.coeffs)},
            sort_keys=True)
    raise ValueError(f"unknown format {fmt!r}")


def _params_json(params: Params) -> dict:
    out = {"K": params.K, "L": params.L, "m": params.m,
           "n": params.n, "y": params.y, "z": params.z}
    if params.S is not None:
        out["S"] = params.S
    if params.T is not None:
        out["T"] = params.T
    return out


def render_table(records: Sequence[InjectionRecord], params: Params, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "params": _params_json(params),
            "records": [{
                "pre": partition_json(r.pre),
                "image": partition_json(r.image),
                "mu": r.mu, "a": r.a, "b": r.b,
            } for r in records],
        }, sort_keys=True)
    if fmt == "csv":
        lines = ["pi2,pi1,mu,a,b"]
        lines += [f"{partition_triples(r.pre)},{partition_triples(r.image)},"
                  f"{r.mu},{r.a},{r.b}" for r in records]
        return "\n".join(lines)
    rows = [(partition_text(r.pre, params), partition_text(r.image, params),
             str(r.mu), str(r.a), str(r.b)) for r in records]
    header = ("pi2", "pi1", "mu", "a", "b")
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |",
                 "| " + " | ".join("---" for _ in header) + " |"]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines)
    if fmt == "latex":
        lines = [r"\begin{tabular}{c@{\ $\mapsto$\ }crrr}", r"\hline",
                 r"$\pi_2$ & $\pi_1$ & $\mu$ & $a$ & $b$\\", r"\hline"]
        for r in records:
            lines.append(
                f"${partition_latex(r.pre, params)}$ & ${partition_latex(r.image, params)}$"
                f" & ${r.mu}$ & ${r.a}$ & ${r.b}$\\\\"
                if r.pre is not None else
                f" & ${partition_latex(r.image, params)}$ & ${r.mu}$ & ${r.a}$ & ${r.b}$\\\\")
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines)
    if fmt == "plain":
        widths = [max(len(header[i]), max((len(row[i]) for row in rows), default=0))
                  for i in range(5)]
        def fmt_row(cells):
            return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells)).rstrip()
        lines = [fmt_row(header)]
        lines += [fmt_row(row) for row in rows]
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def render_verdict(verdict: Verdict, fmt: str = "plain") -> str:
    if fmt == "json":
        return json.dumps({
            "status": verdict.status,
            "checked_degree": verdict.checked_degree,
            "first_violation": (None if verdict.first_violation is None else {
                "x": verdict.first_violation[0],
                "lhs": verdict.first_violation[1],
                "rhs": verdict.first_violation[2],
            }),
        }, sort_keys=True)
    if verdict.first_violation is not None:
        x, lhs, rhs = verdict.first_violation
        return f"{verdict.status} at q^{x}: lhs={lhs}, rhs={rhs} (checked up to degree {verdict.checked_degree})"
    return f"{verdict.status} up to degree {verdict.checked_degree}"


def render_search(report: SearchReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "degree": report.degree,
            "relaxations": {"allow_gcd": report.allow_gcd,
                            "allow_k_lt_l": report.allow_k_lt_l},
            "entries": [{
                "params": _params_json(p),
                "status": v.status,
                "first_violation": (None if v.first_violation is None else {
                    "x": v.first_violation[0],
                    "lhs": v.first_violation[1],
                    "rhs": v.first_violation[2],
                }),
            } for p, v in report.entries],
        }, sort_keys=True)
    if fmt == "csv":
        lines = ["K,L,m,n,y,z,status,first_x,lhs,rhs"]
        for p, v in report.entries:
            if v.first_violation is None:
                tail = ",,"
            else:
                tail = f"{v.first_violation[0]},{v.first_violation[1]},{v.first_violation[2]}"
            lines.append(f"{p.K},{p.L},{p.m},{p.n},{p.y},{p.z},{v.status},{tail}")
        return "\n".join(lines)
    raise ValueError(f"search reports support csv or json, not {fmt!r}")
