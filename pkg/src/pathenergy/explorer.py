"""Stream scanning: positive path-eigenvalue counts vs block structure.

Reads graph6 lines, emits one record per graph in input order, and
aggregates verdicts for two conjectured relationships: (1) every
2-connected graph has exactly one positive path eigenvalue; (2) the number
of positive path eigenvalues equals the number of blocks. The second claim
is ambiguous about whether bridges count, so records carry both readings
(all blocks / only blocks on >= 3 vertices) and the summary reports the
two agreement rates side by side without asserting either.

Numerics are quarantined rather than trusted: a graph whose spectrum has a
value within 10x of the sign tolerance goes to a needs-review list, and a
candidate counterexample is only reported after its verdict survives
reclassification at 10x tighter tolerance.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .bounds import evaluate_all_bounds
from .disjoint import path_matrix
from .graph6 import HEADER, Graph6ParseError, parse_graph6
from .graphs import Graph, block_decomposition, girth, is_biconnected, is_connected
from .spectral import (
    count_signs,
    default_sign_tolerance,
    symmetric_eigenvalues,
)

RECHECK_FACTOR = 10.0

CSV_FIELDS = (
    "graph6",
    "n",
    "m",
    "connected",
    "biconnected",
    "positive_count",
    "zero_count",
    "negative_count",
    "block_count",
    "nontrivial_block_count",
    "girth",
    "unicyclic",
    "borderline",
    "conjecture1_applicable",
    "conjecture1_holds",
    "conjecture1_counterexample",
    "conjecture2_match_all_blocks",
    "conjecture2_match_nontrivial_blocks",
    "pe",
    "bounds_ok",
)


@dataclass(frozen=True)
class ScanOptions:
    tol: float | None = None  # absolute sign tolerance; None = per-graph default
    max_n: int = 40  # path matrix is n^2 max-flows; override deliberately
    strict: bool = False
    run_bounds: bool = True
    jobs: int = 1


@dataclass(frozen=True)
class ScanRecord:
    graph6: str
    n: int
    m: int
    connected: bool
    biconnected: bool
    positive_count: int
    zero_count: int
    negative_count: int
    block_count: int
    nontrivial_block_count: int
    girth: int | None
    unicyclic: bool
    borderline: bool
    conjecture1_applicable: bool
    conjecture1_holds: bool | None
    conjecture1_counterexample: bool
    conjecture2_match_all_blocks: bool | None
    conjecture2_match_nontrivial_blocks: bool | None
    pe: float
    bounds_ok: bool | None

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in CSV_FIELDS}


@dataclass(frozen=True)
class ScanSummary:
    total: int
    conjecture1_applicable: int
    conjecture1_holds: int
    conjecture1_counterexamples: tuple[str, ...]
    needs_review: tuple[str, ...]
    conjecture2_agreement: dict
    positive_count_distribution: tuple[dict, ...]
    unicyclic_by_girth: tuple[dict, ...]
    bounds_checked: int
    bounds_violations: tuple[str, ...]
    parse_errors: tuple[tuple[int, str], ...]
    skipped_oversize: tuple[int, ...]
    runtime_seconds: float | None = None

    def to_dict(self, include_runtime: bool = True) -> dict:
        doc = {
            "total": self.total,
            "conjecture1": {
                "applicable": self.conjecture1_applicable,
                "holds": self.conjecture1_holds,
                "counterexamples": list(self.conjecture1_counterexamples),
                "needs_review": list(self.needs_review),
            },
            "conjecture2": self.conjecture2_agreement,
            "positive_count_distribution": list(self.positive_count_distribution),
            "unicyclic_by_girth": list(self.unicyclic_by_girth),
            "bounds": {
                "checked": self.bounds_checked,
                "violations": list(self.bounds_violations),
            },
            "parse_errors": [
                {"line": line, "message": message} for line, message in self.parse_errors
            ],
            "skipped_oversize": list(self.skipped_oversize),
        }
        if include_runtime:
            doc["runtime_seconds"] = self.runtime_seconds
        return doc


@dataclass(frozen=True)
class ScanResult:
    records: tuple[ScanRecord, ...]
    summary: ScanSummary


class _Oversize(Exception):
    def __init__(self, n: int):
        self.n = n


def analyze_graph(g: Graph, graph6_text: str, options: ScanOptions = ScanOptions()) -> ScanRecord:
    """Build the scan record for one parsed graph."""
    if g.n == 0:
        return ScanRecord(
            graph6=graph6_text, n=0, m=0, connected=False, biconnected=False,
            positive_count=0, zero_count=0, negative_count=0, block_count=0,
            nontrivial_block_count=0, girth=None, unicyclic=False, borderline=False,
            conjecture1_applicable=False, conjecture1_holds=None,
            conjecture1_counterexample=False, conjecture2_match_all_blocks=None,
            conjecture2_match_nontrivial_blocks=None, pe=0.0, bounds_ok=None,
        )
    pm = path_matrix(g)
    mat = np.array(pm.entries, dtype=float)
    tol = options.tol if options.tol is not None else default_sign_tolerance(mat)
    spectrum = symmetric_eigenvalues(mat, tol)
    _check_hygiene(mat, spectrum.values)
    pos, zero, neg = count_signs(spectrum)
    borderline = bool(spectrum.borderline_values())
    connected = is_connected(g)
    biconnected = is_biconnected(g)
    dec = block_decomposition(g)
    unicyclic = connected and g.m == g.n
    applicable = biconnected and g.n >= 3

    counterexample = False
    if applicable and pos != 1 and not borderline:
        tighter = symmetric_eigenvalues(mat, tol / RECHECK_FACTOR)
        pos2, _, _ = count_signs(tighter)
        counterexample = pos2 == pos and not tighter.borderline_values()
        if not counterexample:
            borderline = True  # verdict did not survive the tighter recheck

    bounds_ok: bool | None = None
    if options.run_bounds:
        bounds_ok = evaluate_all_bounds(g, pm=pm, spectrum=spectrum).all_hold

    return ScanRecord(
        graph6=graph6_text,
        n=g.n,
        m=g.m,
        connected=connected,
        biconnected=biconnected,
        positive_count=pos,
        zero_count=zero,
        negative_count=neg,
        block_count=dec.block_count,
        nontrivial_block_count=dec.nontrivial_block_count,
        girth=girth(g),
        unicyclic=unicyclic,
        borderline=borderline,
        conjecture1_applicable=applicable,
        conjecture1_holds=(pos == 1) if applicable else None,
        conjecture1_counterexample=counterexample,
        conjecture2_match_all_blocks=(pos == dec.block_count) if connected else None,
        conjecture2_match_nontrivial_blocks=(
            (pos == dec.nontrivial_block_count) if connected else None
        ),
        pe=spectrum.energy,
        bounds_ok=bounds_ok,
    )


def _check_hygiene(mat: np.ndarray, values: tuple[float, ...]) -> None:
    """Trace and Frobenius consistency of the computed spectrum."""
    n = mat.shape[0]
    scale = max(1.0, float(np.max(np.abs(mat))))
    budget = 1e-9 * n * n * scale * scale
    trace_err = abs(sum(values) - float(np.trace(mat)))
    frob_err = abs(sum(v * v for v in values) - float((mat * mat).sum()))
    if trace_err > budget or frob_err > budget:
        raise ArithmeticError(
            f"spectrum fails hygiene checks: trace err {trace_err:g}, "
            f"frobenius err {frob_err:g}"
        )


def _work_item(item: tuple[int, str], options: ScanOptions):
    line_no, text = item
    try:
        g = parse_graph6(text)
        if g.n > options.max_n:
            raise _Oversize(g.n)
        return "record", line_no, analyze_graph(g, text, options)
    except Graph6ParseError as exc:
        return "parse_error", line_no, str(exc)
    except _Oversize:
        return "oversize", line_no, None


def scan_stream(lines, options: ScanOptions = ScanOptions()) -> ScanResult:
    """Scan graph6 lines; records come back in input order.

    Header lines and blank lines are skipped. Parse failures are recorded
    and skipped unless ``options.strict`` is set, in which case the scan
    raises on the first bad line.
    """
    start = time.monotonic()
    items = []
    for line_no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith(HEADER):
            continue
        items.append((line_no, text))

    if options.jobs > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            outcomes = list(
                pool.map(partial(_work_item, options=options), items, chunksize=16)
            )
    else:
        outcomes = [_work_item(item, options) for item in items]

    records: list[ScanRecord] = []
    parse_errors: list[tuple[int, str]] = []
    oversize: list[int] = []
    for kind, line_no, payload in outcomes:
        if kind == "record":
            records.append(payload)
        elif kind == "parse_error":
            if options.strict:
                raise ValueError(f"line {line_no}: {payload}")
            parse_errors.append((line_no, payload))
        else:
            oversize.append(line_no)

    summary = stratified_report(
        records,
        parse_errors=tuple(parse_errors),
        skipped_oversize=tuple(oversize),
        runtime_seconds=time.monotonic() - start,
    )
    return ScanResult(tuple(records), summary)


def stratified_report(
    records,
    parse_errors: tuple[tuple[int, str], ...] = (),
    skipped_oversize: tuple[int, ...] = (),
    runtime_seconds: float | None = None,
) -> ScanSummary:
    """Aggregate records into the scan summary (order-independent)."""
    records = list(records)
    applicable = [r for r in records if r.conjecture1_applicable]
    needs_review = sorted(r.graph6 for r in records if r.borderline)
    counterexamples = sorted(r.graph6 for r in records if r.conjecture1_counterexample)

    agreement: dict = {}
    connected = [r for r in records if r.connected]
    for key, attr in (
        ("all_blocks", "conjecture2_match_all_blocks"),
        ("nontrivial_blocks", "conjecture2_match_nontrivial_blocks"),
    ):
        matches = sum(1 for r in connected if getattr(r, attr))
        deltas = Counter()
        block_attr = "block_count" if key == "all_blocks" else "nontrivial_block_count"
        for r in connected:
            deltas[r.positive_count - getattr(r, block_attr)] += 1
        agreement[key] = {
            "matches": matches,
            "total": len(connected),
            "rate": matches / len(connected) if connected else None,
            "delta_histogram": {str(d): c for d, c in sorted(deltas.items())},
        }

    strata: dict[tuple[int, bool, bool], Counter] = {}
    for r in records:
        strata.setdefault((r.n, r.biconnected, r.unicyclic), Counter())[r.positive_count] += 1
    distribution = tuple(
        {
            "n": n,
            "biconnected": bic,
            "unicyclic": uni,
            "positive_count_histogram": {str(k): v for k, v in sorted(hist.items())},
        }
        for (n, bic, uni), hist in sorted(strata.items())
    )

    girth_strata: dict[tuple[int, int], Counter] = {}
    girth_witnesses: dict[tuple[int, int], list[str]] = {}
    for r in records:
        if not r.unicyclic or r.girth is None:
            continue
        key = (r.n, r.girth)
        girth_strata.setdefault(key, Counter())[r.positive_count] += 1
        if r.positive_count == 2:
            girth_witnesses.setdefault(key, []).append(r.graph6)
    unicyclic_by_girth = tuple(
        {
            "n": n,
            "girth": gi,
            "positive_count_histogram": {str(k): v for k, v in sorted(hist.items())},
            "two_positive_witnesses": sorted(girth_witnesses.get((n, gi), [])),
        }
        for (n, gi), hist in sorted(girth_strata.items())
    )

    with_bounds = [r for r in records if r.bounds_ok is not None]
    return ScanSummary(
        total=len(records),
        conjecture1_applicable=len(applicable),
        conjecture1_holds=sum(1 for r in applicable if r.conjecture1_holds),
        conjecture1_counterexamples=tuple(counterexamples),
        needs_review=tuple(needs_review),
        conjecture2_agreement=agreement,
        positive_count_distribution=distribution,
        unicyclic_by_girth=unicyclic_by_girth,
        bounds_checked=len(with_bounds),
        bounds_violations=tuple(sorted(r.graph6 for r in with_bounds if not r.bounds_ok)),
        parse_errors=tuple(parse_errors),
        skipped_oversize=tuple(skipped_oversize),
        runtime_seconds=runtime_seconds,
    )


def records_to_csv(records) -> str:
    """Records as CSV with a fixed header; None renders empty."""
    def cell(x) -> str:
        if x is None:
            return ""
        if isinstance(x, bool):
            return "true" if x else "false"
        if isinstance(x, float):
            return repr(x)
        return str(x)

    lines = [",".join(CSV_FIELDS)]
    for r in records:
        lines.append(",".join(cell(getattr(r, name)) for name in CSV_FIELDS))
    return "\n".join(lines) + "\n"
