"""Experiment drivers behind the command-line interface.

Every ``cmd_*`` function prints a short human-readable report to ``out`` and
returns a process exit code: 0 success, 1 invariant failure, 2 input error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import time
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, TextIO

from .adversary import build_kfree_adversary, forcing_bound, transcript_json
from .config import SizeError
from .decomposition import DecompositionError, validate, width
from .generate import gen_random_instance
from .graph import Graph, InputError, is_clique_free, is_proper
from .offline import color_via_tree_decomposition
from .online import AuditLog, VICTIMS, make_victim, palette_size, run_online
from .oracles import chromatic_number_exact, treewidth_exact
from .pace import PaceSyntaxError, PaceWarning, read_pace_gr, read_pace_td, write_pace_gr, write_pace_td

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

RECORD_FIELDS = [
    "kind", "t", "k", "victim", "seed", "n", "width", "colors_used", "bound",
    "proper", "clique_free", "decomposition_valid", "within_bound", "passed",
]

DEFAULT_SUITE: dict[str, Any] = {
    "seed": 0,
    "upper_bound": {
        "t": [1, 2, 3, 4, 5],
        "instances": 1000,
        "n_max": 14,
        "density": [0.3, 0.6, 1.0],
    },
    "adversary": {
        "t": [0, 1, 2, 3, 4, 5, 6, 7, 8],
        "k": [3, 4, 5],
        "victims": sorted(VICTIMS),
    },
}


@dataclass
class ExperimentReport:
    config: dict
    records: list[dict] = field(default_factory=list)
    audit: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def summary(self) -> dict:
        failed = [r for r in self.records if not r["passed"]]
        by_kind: dict[str, int] = {}
        for r in self.records:
            by_kind[r["kind"]] = by_kind.get(r["kind"], 0) + 1
        return {
            "records": len(self.records),
            "passed": len(self.records) - len(failed),
            "failed": len(failed),
            "by_kind": by_kind,
            "audit": self.audit,
            "elapsed_seconds": round(self.elapsed, 3),
        }

    @property
    def ok(self) -> bool:
        return all(r["passed"] for r in self.records) and not self.audit.get("violations")

    def to_json(self) -> str:
        data = {"config": self.config, "records": self.records, "summary": self.summary}
        return json.dumps(data, indent=1, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=RECORD_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in self.records:
            writer.writerow(r)
        return buf.getvalue()


def _record(**fields) -> dict:
    rec = {name: fields.get(name) for name in RECORD_FIELDS}
    rec["passed"] = bool(rec["proper"] and rec["clique_free"] and rec["decomposition_valid"]
                         and rec["within_bound"])
    return rec


def _as_list(value) -> list:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def upper_bound_records(cfg: dict, seed: int, audit: AuditLog) -> list[dict]:
    records = []
    n_max = cfg.get("n_max", 14)
    densities = _as_list(cfg.get("density", 0.5))
    count = cfg.get("instances", 100)
    victim = cfg.get("victim", "paper")
    for t in _as_list(cfg.get("t", [])):
        for i in range(count):
            inst_seed = seed * 1_000_003 + t * 10_007 + i
            n = 1 + i % n_max
            density = densities[i % len(densities)]
            g, td = gen_random_instance(t, n, density, inst_seed)
            coloring = color_via_tree_decomposition(
                lambda: make_victim(victim, t, audit=audit), g, td
            )
            used = len(set(coloring.values()))
            records.append(_record(
                kind="upper", t=t, k=3, victim=victim, seed=inst_seed, n=n, width=width(td),
                colors_used=used, bound=palette_size(t), proper=is_proper(g, coloring),
                clique_free=is_clique_free(g, 3), decomposition_valid=validate(g, td).ok,
                within_bound=used <= palette_size(t),
            ))
    return records


def adversary_record(t: int, k: int, victim: str, seed: int, audit: Optional[AuditLog] = None):
    """Run one adversary construction; return (record, result)."""
    result = build_kfree_adversary(t, k, make_victim(victim, t, k, seed=seed, audit=audit))
    g, npd, coloring = result
    used = result.colors_used
    bound = forcing_bound(t, k)
    within = used >= bound
    if victim == "paper" and k == 3 and t >= 1:
        within = within and used == palette_size(t)
    # replaying a fresh victim must reproduce the adaptive run exactly
    replay, _ = run_online(make_victim(victim, t, k, seed=seed), g, npd)
    rec = _record(
        kind="adversary", t=t, k=k, victim=victim, seed=seed, n=g.n,
        width=width(npd), colors_used=used, bound=bound,
        proper=is_proper(g, coloring) and replay == coloring,
        clique_free=is_clique_free(g, k),
        decomposition_valid=validate(g, npd).ok and width(npd) <= t,
        within_bound=within,
    )
    return rec, result


def run_suite(config: dict) -> ExperimentReport:
    start = time.perf_counter()
    report = ExperimentReport(config=config)
    seed = config.get("seed", 0)
    audit = AuditLog()
    if "upper_bound" in config:
        report.records += upper_bound_records(config["upper_bound"], seed, audit)
    if "adversary" in config:
        cfg = config["adversary"]
        for k in _as_list(cfg.get("k", [3])):
            for t in _as_list(cfg.get("t", [])):
                for victim in _as_list(cfg.get("victims", ["first-fit"])):
                    strict_audit = audit if (victim == "paper" and k == 3) else None
                    rec, _ = adversary_record(t, k, victim, seed, strict_audit)
                    report.records.append(rec)
    if audit.steps:
        report.audit = {
            "steps": audit.steps,
            "min_slack": audit.min_slack,
            "violations": len(audit.violations),
        }
    report.elapsed = time.perf_counter() - start
    return report


# -- commands ---------------------------------------------------------------


def _load_graph(path) -> Graph:
    return read_pace_gr(Path(path).read_text())


def _load_td(path):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PaceWarning)
        td = read_pace_td(Path(path).read_text())
    return td, [str(w.message) for w in caught]


def cmd_color(graph_path, td_path, t: Optional[int] = None, algorithm: str = "paper",
              out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        g = _load_graph(graph_path)
        td, notes = _load_td(td_path)
    except (OSError, PaceSyntaxError, InputError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    for note in notes:
        print(f"warning: {note}", file=out)
    report = validate(g, td)
    if not report.ok:
        for problem in report.problems():
            print(f"invalid decomposition: {problem}", file=out)
        return EXIT_INPUT
    t = max(width(td), 0) if t is None else t
    triangle_free = is_clique_free(g, 3)
    if not triangle_free:
        print("warning: graph is not triangle-free; bound check skipped", file=out)
    try:
        victim_k = 3 if triangle_free else 4
        coloring = color_via_tree_decomposition(lambda: make_victim(algorithm, t, victim_k), g, td)
    except InputError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    used = len(set(coloring.values()))
    proper = is_proper(g, coloring)
    bound = palette_size(t)
    print(f"colors={used} bound={bound} proper={'yes' if proper else 'no'}", file=out)
    print("coloring=" + " ".join(str(coloring[v]) for v in g.vertices()), file=out)
    if not proper or (triangle_free and used > bound):
        return EXIT_FAIL
    return EXIT_OK


def cmd_adversary(t: int, k: int, victim: str = "first-fit", seed: int = 0,
                  out_prefix: Optional[str] = None, out: Optional[TextIO] = None,
                  audit: Optional[AuditLog] = None) -> int:
    out = out or sys.stdout
    if t < 0 or k < 2 or victim not in VICTIMS:
        print(f"error: need t >= 0, k >= 2 and a victim among {sorted(VICTIMS)}", file=out)
        return EXIT_INPUT
    try:
        rec, result = adversary_record(t, k, victim, seed, audit)
    except Exception as exc:  # surfaced with context; the transcript is partial at best
        print(f"contract violation: {type(exc).__name__}: {exc}", file=out)
        return EXIT_FAIL
    if out_prefix:
        prefix = Path(out_prefix)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        Path(f"{prefix}.gr").write_text(write_pace_gr(result.graph))
        Path(f"{prefix}.td").write_text(write_pace_td(result.npd.to_tree_decomposition(),
                                                      result.graph.n))
        Path(f"{prefix}.json").write_text(transcript_json(result))
    print(f"forced={rec['colors_used']} g={rec['bound']} n={rec['n']} width={rec['width']}",
          file=out)
    for flag in ("proper", "clique_free", "decomposition_valid", "within_bound"):
        print(f"{flag}={'yes' if rec[flag] else 'no'}", file=out)
    return EXIT_OK if rec["passed"] else EXIT_FAIL


def cmd_verify(graph_path, td_path=None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        g = _load_graph(graph_path)
        td, notes = _load_td(td_path) if td_path else (None, [])
    except (OSError, PaceSyntaxError, InputError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    rows = [("vertices", g.n), ("edges", g.m)]
    rows += [(f"K{k}-free", "yes" if is_clique_free(g, k) else "no") for k in (3, 4)]
    try:
        rows.append(("chromatic number", chromatic_number_exact(g)))
    except SizeError:
        rows.append(("chromatic number", "skipped (cap)"))
    try:
        rows.append(("tree-width", treewidth_exact(g)[0]))
    except SizeError:
        rows.append(("tree-width", "skipped (cap)"))
    status = EXIT_OK
    if td is not None:
        report = validate(g, td)
        rows.append(("decomposition valid", "yes" if report.ok else "no"))
        rows.append(("decomposition width", width(td)))
        for problem in report.problems():
            rows.append(("problem", problem))
        if not report.ok:
            status = EXIT_FAIL
    for note in notes:
        rows.append(("warning", note))
    pad = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{pad}}  {value}", file=out)
    return status


def cmd_gen(t: int, n: int, density: float, seed: int, out_prefix: Optional[str] = None,
            out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        g, td = gen_random_instance(t, n, density, seed)
    except InputError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    if out_prefix:
        Path(f"{out_prefix}.gr").write_text(write_pace_gr(g))
        Path(f"{out_prefix}.td").write_text(write_pace_td(td, g.n))
        print(f"wrote {out_prefix}.gr and {out_prefix}.td (n={g.n}, m={g.m}, width={width(td)})",
              file=out)
    else:
        out.write(write_pace_gr(g))
        out.write(write_pace_td(td, g.n))
    return EXIT_OK


def cmd_suite(config_path=None, out_prefix: Optional[str] = None, fmt: str = "json",
              out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        config = DEFAULT_SUITE if config_path is None else json.loads(Path(config_path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    try:
        report = run_suite(config)
    except (InputError, DecompositionError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    if out_prefix:
        Path(f"{out_prefix}.json").write_text(report.to_json())
        Path(f"{out_prefix}.csv").write_text(report.to_csv())
    out.write(report.to_csv() if fmt == "csv" else json.dumps(report.summary, indent=1) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL
