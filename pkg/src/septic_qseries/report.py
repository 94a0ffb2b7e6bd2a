"""Rendering of check results, series coefficients and constants."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .identities import FAIL, PASS, PRECISION, CheckResult
from .ring import CycElement, to_float

__all__ = ["Report", "constants_table", "constants_text", "exact", "float_text", "render_series", "series_rows"]

VERSION = "0.1.0"


def exact(c):
    """Exact JSON-ready form: "p/q" for rationals, {"level", "coords"} for cyclotomics."""
    if isinstance(c, CycElement):
        if c.is_rational():
            return str(c.to_rational())
        return c.to_json()
    return str(Fraction(c))


def float_text(c, digits: int = 30) -> str:
    z = to_float(c, dps=digits + 10)
    re, im = z.real, z.imag
    # display only: drop rounding residue of exactly real or imaginary values
    tiny = mpmath.mpf(10) ** (-digits - 5)
    if abs(im) < tiny:
        im = 0
    if abs(re) < tiny:
        re = 0
    if im == 0:
        return mpmath.nstr(re, digits)
    if re == 0:
        return mpmath.nstr(im, digits) + "j"
    sign = "+" if im > 0 else "-"
    return f"{mpmath.nstr(re, digits)}{sign}{mpmath.nstr(abs(im), digits)}j"


@dataclass
class Report:
    order: Fraction | None
    results: list[CheckResult]
    version: str = VERSION
    total_elapsed_ms: int = 0
    summary: dict = field(init=False)

    def __post_init__(self):
        self.results = sorted(self.results, key=lambda r: r.name)
        self.summary = {
            "pass": sum(r.status == PASS for r in self.results),
            "fail": sum(r.status == FAIL for r in self.results),
            "precision_error": sum(r.status == PRECISION for r in self.results),
        }

    @property
    def exit_code(self) -> int:
        if self.summary["fail"]:
            return 1
        if self.summary["precision_error"]:
            return 3
        return 0

    def to_dict(self) -> dict:
        results = []
        for r in self.results:
            failure = None
            if r.first_failure is not None:
                e, c = r.first_failure
                failure = {"exponent": str(e), "coefficient": exact(c)}
            results.append({
                "name": r.name,
                "status": r.status,
                "order_verified": str(r.order_verified),
                "first_failure": failure,
                "elapsed_ms": r.elapsed_ms,
            })
        return {
            "version": self.version,
            "order": None if self.order is None else str(self.order),
            "results": results,
            "summary": dict(self.summary),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        width = max((len(r.name) for r in self.results), default=10)
        lines = []
        for r in self.results:
            line = f"{r.name:<{width}}  {r.status:<15}  order {str(r.order_verified):>6}  {r.elapsed_ms:>6} ms"
            if r.first_failure is not None:
                e, c = r.first_failure
                line += f"  first nonzero at q^{e}: {c}"
            elif r.status == PRECISION:
                line += f"  ({r.detail})"
            lines.append(line)
        s = self.summary
        lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['precision_error']} precision-error")
        return "\n".join(lines)


def series_rows(series, order):
    """(exponent, coefficient) for every representable exponent in [valuation, order)."""
    order = Fraction(order)
    D = series.denom
    stop = min(series.prec, math.ceil(order * D))
    start = series.lo if series.lo < series.prec else stop
    return [(Fraction(k, D), series.coeff_index(k)) for k in range(start, stop)]


def render_series(series, order, fmt: str = "csv") -> str:
    rows = series_rows(series, order)
    if fmt == "json":
        return json.dumps({
            "order": str(Fraction(order)),
            "denom": series.denom,
            "level": series.level,
            "rows": [{"exponent": str(e), "coefficient": exact(c), "float_approx": float_text(c)}
                     for e, c in rows],
        }, indent=2)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["exponent_num", "exponent_den", "coefficient", "float_approx"])
    for e, c in rows:
        cell = exact(c)
        if not isinstance(cell, str):
            cell = json.dumps(cell, separators=(",", ":"))
        w.writerow([e.numerator, e.denominator, cell, float_text(c)])
    return buf.getvalue()


_CONST_NAMES = {"x": "alpha", "y": "beta", "z": "gamma"}


def constants_table() -> dict:
    """Every constant both ways, exact, plus the derived tables."""
    from .constants import (closed_form_constants, dft_constants, dft_sine, phi_constants,
                            recover_logderiv_tables)
    from .catalog import SEPTIC_SEQUENCES
    from .constructors import PeriodicSeq

    closed, derived = closed_form_constants(), dft_constants()
    rows = []
    for v in "xyz":
        for j, (u, w) in enumerate(zip(closed[v], derived[v]), start=1):
            rows.append({"name": f"{_CONST_NAMES[v]}{j}", "closed_form": exact(u), "transform": exact(w),
                         "match": u == w, "float": float_text(u)})
    ells = {v: [exact(e) for e in dft_sine(PeriodicSeq(SEPTIC_SEQUENCES[v]))] for v in "xyz"}
    phis = {}
    for v in "xyz":
        ph, a, b, total = phi_constants(v)
        phis[v] = {
            "phi": [{"exact": exact(p), "float": float_text(p)} for p in ph],
            "a": [str(t) for t in a.values],
            "b": [str(t) for t in b.values],
            "phi_sum": exact(total),
        }
    tables = {v: {"constant": str(c), "table": [str(t) for t in tab]}
              for v, (c, tab) in recover_logderiv_tables().items()}
    return {"efund": rows, "ells": ells, "quadratics": phis, "logderiv_tables": tables}


def constants_text(table: dict) -> str:
    lines = ["name      match  float (30 digits)"]
    for r in table["efund"]:
        lines.append(f"{r['name']:<9} {'yes' if r['match'] else 'NO':<6} {r['float']}")
        lines.append(f"          exact {json.dumps(r['closed_form'])}")
    for v, q in table["quadratics"].items():
        lines.append(f"{v}-quadratic: a = {{{', '.join(q['a'])}}}  b = {{{', '.join(q['b'])}}}  "
                     f"Phi-sum = {q['phi_sum']}")
        for k, p in enumerate(q["phi"], start=1):
            lines.append(f"    Phi{k} = {p['float']}")
    for v, t in table["logderiv_tables"].items():
        lines.append(f"theta({v})/{v}: constant {t['constant']}, table {{{', '.join(t['table'])}}}")
    return "\n".join(lines)
