"""Campaign runner: solve (family, n, quantity) grids, compare against the
published predictions, and emit reports plus re-validatable witness files.

A mismatch is a first-class outcome, not a failure: the harness exists to
audit the published values, so disagreements surface as data.  Rows are
produced in a fixed (family, n, quantity) order regardless of how worker
jobs complete, and cached results carry their original node/time counts,
so warm reruns are byte-identical to the run that populated the cache.
"""

from __future__ import annotations

import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import families, formulas
from .coloring import Coloring, coloring_sum, is_b_colouring, is_proper
from .solvers import (
    QUANTITIES,
    SOLVER_VERSION,
    BudgetExhausted,
    SearchBudget,
    SumResult,
    b_chromatic_number,
    b_sum,
    chi_sum,
    chromatic_number,
)

CACHE_VERSION = 1

# Default largest cycle parameter per family for a desk-scale campaign.
DESK_CAPS = {"double_wheel": 7, "helm": 7, "closed_helm": 7, "sunlet": 8, "web": 5}

REPORT_FILES = {"csv": "report.csv", "json": "report.json", "markdown": "report.md"}


@dataclass(frozen=True)
class VerificationRow:
    family: str
    n: int
    quantity: str
    predicted: int
    computed: int | None
    status: str  # match | mismatch | aborted | not-in-paper
    witness_path: str
    nodes_explored: int
    elapsed_ms: int

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "quantity": self.quantity,
            "predicted": self.predicted,
            "computed": self.computed,
            "status": self.status,
            "witness": self.witness_path,
            "nodes": self.nodes_explored,
            "millis": self.elapsed_ms,
        }


class ResultsCache:
    """Append-only JSON store of solver results keyed by instance.

    Entries recorded under a different solver version are kept but never
    served.  A corrupt file is discarded with a warning and rebuilt."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._entries: dict[str, dict] = {}
        self._load()

    def _load(self):
        if not self.path.exists():
            return
        try:
            data = json.loads(self.path.read_text())
            if data.get("version") != CACHE_VERSION:
                raise ValueError(f"unsupported cache version {data.get('version')!r}")
            entries = data["entries"]
            if not isinstance(entries, dict):
                raise ValueError("entries must be an object")
            self._entries = entries
        except Exception as exc:  # corrupt cache is recoverable by resolving
            print(f"warning: discarding unreadable cache {self.path}: {exc}", file=sys.stderr)
            self._entries = {}

    @staticmethod
    def _key(family: str, n: int, quantity: str) -> str:
        return f"{family}:{n}:{quantity}"

    def get(self, family: str, n: int, quantity: str) -> SumResult | None:
        entry = self._entries.get(self._key(family, n, quantity))
        if entry and entry.get("solver_version") == SOLVER_VERSION:
            try:
                return SumResult.from_json(entry["result"])
            except Exception:
                return None  # malformed entry: treat as a miss and re-solve
        return None

    def put(self, family: str, n: int, quantity: str, result: SumResult):
        key = self._key(family, n, quantity)
        if key not in self._entries:
            self._entries[key] = {"solver_version": SOLVER_VERSION, "result": result.to_json()}

    def save(self):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"version": CACHE_VERSION, "entries": self._entries}
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
        os.replace(tmp, self.path)


def _solve_one(g, quantity: str, budget: SearchBudget, chi: int | None, phi: int | None) -> SumResult:
    if quantity == "chi":
        return chromatic_number(g, budget)
    if quantity == "b_chromatic":
        return b_chromatic_number(g, budget)
    if quantity.startswith("chi_sum"):
        return chi_sum(g, quantity.rsplit("_", 1)[1], budget, chi=chi)
    return b_sum(g, quantity.rsplit("_", 1)[1], budget, phi=phi)


def _solve_group(task) -> dict:
    """Solve every requested quantity for one (family, n).  chi and phi are
    computed at most once per graph and shared by the sum quantities."""
    family, n, quantities, max_nodes, max_time = task
    budget = SearchBudget(max_nodes=max_nodes, max_time=max_time)
    g = families.make(family, n)
    chi_val: int | None = None
    phi_val: int | None = None
    out: dict[str, dict] = {}
    for quantity in quantities:
        started = time.monotonic()
        try:
            if quantity.startswith("chi_sum") and chi_val is None:
                chi_val = chromatic_number(g, budget).value
            if quantity.startswith("b_sum") and phi_val is None:
                phi_val = b_chromatic_number(g, budget).value
            result = _solve_one(g, quantity, budget, chi_val, phi_val)
            if quantity == "chi":
                chi_val = result.value
            elif quantity == "b_chromatic":
                phi_val = result.value
            out[quantity] = {"status": "ok", "result": result.to_json()}
        except BudgetExhausted as exc:
            elapsed = int((time.monotonic() - started) * 1000)
            out[quantity] = {"status": "aborted", "nodes": exc.nodes_explored, "millis": elapsed}
    return out


def plan_tasks(
    family_kinds,
    n_min: int,
    n_max: int | dict[str, int],
    quantities,
) -> list[tuple[str, int, str]]:
    """Deterministic (family, n, quantity) grid restricted to pairs covered
    by a published formula."""
    kinds = [f for f in formulas.COVERED_FAMILIES if f in set(family_kinds)]
    unknown = set(family_kinds) - set(families.FAMILY_KINDS)
    if unknown:
        raise ValueError(f"unknown families: {sorted(unknown)}")
    wanted = set(quantities)
    bad = wanted - set(QUANTITIES)
    if bad:
        raise ValueError(f"unknown quantities: {sorted(bad)}")
    tasks = []
    for family in kinds:
        cap = n_max[family] if isinstance(n_max, dict) else n_max
        for n in range(max(n_min, families.MIN_N), cap + 1):
            for quantity in QUANTITIES:
                if quantity in wanted and formulas.is_covered(family, quantity):
                    tasks.append((family, n, quantity))
    return tasks


def run_campaign(
    family_kinds,
    n_min: int,
    n_max: int | dict[str, int],
    quantities,
    budget: SearchBudget | None = None,
    out_dir: str | os.PathLike | None = None,
    cache: ResultsCache | None = None,
    jobs: int = 1,
) -> list[VerificationRow]:
    budget = budget or SearchBudget()
    tasks = plan_tasks(family_kinds, n_min, n_max, quantities)
    outcomes: dict[tuple[str, int, str], dict] = {}

    for family, n, quantity in tasks:
        if cache is not None:
            hit = cache.get(family, n, quantity)
            if hit is not None:
                outcomes[(family, n, quantity)] = {"status": "ok", "result": hit.to_json()}

    groups: dict[tuple[str, int], list[str]] = {}
    for family, n, quantity in tasks:
        if (family, n, quantity) not in outcomes:
            groups.setdefault((family, n), []).append(quantity)
    group_tasks = [
        (family, n, tuple(qs), budget.max_nodes, budget.max_time)
        for (family, n), qs in sorted(groups.items())
    ]

    if jobs > 1 and len(group_tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            solved = list(pool.map(_solve_group, group_tasks))
    else:
        solved = [_solve_group(t) for t in group_tasks]
    for (family, n, _, _, _), result_map in zip(group_tasks, solved):
        for quantity, outcome in result_map.items():
            outcomes[(family, n, quantity)] = outcome

    witness_dir = None
    if out_dir is not None:
        witness_dir = Path(out_dir) / "witnesses"
        witness_dir.mkdir(parents=True, exist_ok=True)

    rows = []
    for family, n, quantity in tasks:
        predicted = formulas.predict(family, quantity, n)
        outcome = outcomes[(family, n, quantity)]
        if outcome["status"] == "aborted":
            rows.append(
                VerificationRow(
                    family, n, quantity, predicted, None, "aborted", "",
                    outcome["nodes"], outcome["millis"],
                )
            )
            continue
        result = SumResult.from_json(outcome["result"])
        if cache is not None:
            cache.put(family, n, quantity, result)
        witness_rel = ""
        if witness_dir is not None:
            witness_rel = f"witnesses/{family}-{n}-{quantity}.json"
            path = witness_dir / f"{family}-{n}-{quantity}.json"
            path.write_text(json.dumps(result.witness.to_json(), sort_keys=True) + "\n")
        status = "match" if result.value == predicted else "mismatch"
        rows.append(
            VerificationRow(
                family, n, quantity, predicted, result.value, status, witness_rel,
                result.nodes_explored, result.elapsed_ms,
            )
        )
    if cache is not None:
        cache.save()
    return rows


def summary_line(rows) -> str:
    matches = sum(1 for r in rows if r.status == "match")
    mism = sum(1 for r in rows if r.status == "mismatch")
    aborted = sum(1 for r in rows if r.status == "aborted")
    return f"matches={matches} mismatches={mism} aborted={aborted}"


def render_report(rows, fmt: str) -> str:
    if fmt == "csv":
        return _render_csv(rows)
    if fmt == "json":
        return _render_json(rows)
    if fmt == "markdown":
        return _render_markdown(rows)
    raise ValueError(f"unknown report format {fmt!r}")


def _render_csv(rows) -> str:
    lines = ["family,n,quantity,predicted,computed,status,nodes,millis,witness"]
    for r in rows:
        computed = "-" if r.computed is None else str(r.computed)
        witness = r.witness_path or "-"
        lines.append(
            f"{r.family},{r.n},{r.quantity},{r.predicted},{computed},{r.status},"
            f"{r.nodes_explored},{r.elapsed_ms},{witness}"
        )
    return "\n".join(lines) + "\n"


def _render_json(rows) -> str:
    matches = sum(1 for r in rows if r.status == "match")
    mism = sum(1 for r in rows if r.status == "mismatch")
    aborted = sum(1 for r in rows if r.status == "aborted")
    payload = {
        "rows": [r.to_json() for r in rows],
        "summary": {"matches": matches, "mismatches": mism, "aborted": aborted},
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _render_markdown(rows) -> str:
    out = ["# Verification report", ""]
    by_family: dict[str, list[VerificationRow]] = {}
    for r in rows:
        by_family.setdefault(r.family, []).append(r)
    for family, frows in by_family.items():
        out.append(f"## {family}")
        out.append("")
        out.append("| n | quantity | source | predicted | computed | status |")
        out.append("|---|----------|--------|-----------|----------|--------|")
        noted = {}
        for r in frows:
            entry = formulas.entry_for(r.family, r.quantity)
            computed = "-" if r.computed is None else str(r.computed)
            out.append(
                f"| {r.n} | {r.quantity} | {entry.source} | {r.predicted} | {computed} | {r.status} |"
            )
            if entry.note:
                noted[entry.source] = entry.note
        for source, note in noted.items():
            out.append("")
            out.append(f"*{source}: {note}*")
        out.append("")
    out.append(summary_line(rows))
    return "\n".join(out) + "\n"


def write_reports(rows, out_dir: str | os.PathLike, formats=("csv", "json", "markdown")) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for fmt in formats:
        path = out / REPORT_FILES[fmt]
        path.write_text(render_report(rows, fmt))
        written.append(path)
    return written


def validate_witness(row: VerificationRow, base_dir: str | os.PathLike) -> bool:
    """Re-validate a report row's witness file from scratch: propriety, the
    b-property for b quantities, and value agreement."""
    if not row.witness_path:
        return False
    data = json.loads((Path(base_dir) / row.witness_path).read_text())
    witness = Coloring.from_json(data)
    g = families.make(row.family, row.n)
    if not is_proper(g, witness):
        return False
    if row.quantity.startswith("b_") and not is_b_colouring(g, witness):
        return False
    if row.quantity in ("chi", "b_chromatic"):
        return witness.k == row.computed
    return coloring_sum(witness) == row.computed
