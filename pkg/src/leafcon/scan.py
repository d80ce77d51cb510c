"""Randomised certification scans over G(n, m) samples.

Sampling uses ``random.Random(seed)`` (CPython's MT19937, whose integer
sampling is stable across platforms).  Graphs are drawn sequentially in the
parent process; only their evaluation fans out to workers, and records are
assembled by sample index, so a report depends on the config alone.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb

from . import graph6
from .conditions import EDGES_N3, evaluate, threshold_edges
from .decider import DEFAULT_BUDGET, Decision, is_k_leaf_connected
from .errors import ParameterError
from .graph import Graph, build, is_connected

SCHEMA = "leafcon/1"
PRNG_NAME = "python-random-mt19937"
MAX_ATTEMPTS_PER_SAMPLE = 100_000

CONFIRMED = "confirmed"
EXCEPTION = "exception"
BUDGET_EXHAUSTED = "budget-exhausted"
ANOMALY = "anomaly"


@dataclass(frozen=True)
class ScanConfig:
    n: int
    k: int
    sample_count: int
    seed: int
    edge_min: int | None = None
    budget: int = DEFAULT_BUDGET
    parallelism: int = 1
    edges_free: bool = False
    spectral: bool = True
    timing: bool = False

    def resolved_edge_min(self) -> int:
        if self.edge_min is not None:
            return self.edge_min
        return threshold_edges(EDGES_N3, self.n, self.k)


@dataclass
class ScanReport:
    config: ScanConfig
    records: list[dict]
    summary: dict[str, int]

    def to_dict(self) -> dict:
        cfg = asdict(self.config)
        cfg["edge_min"] = self.config.resolved_edge_min()
        return {"schema": SCHEMA, "prng": PRNG_NAME, "config": cfg,
                "records": self.records, "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def sample_graphs(config: ScanConfig) -> list[Graph]:
    """Connected graphs with min degree >= k+1, drawn by rejection from G(n, m)."""
    n, k = config.n, config.k
    if config.sample_count < 1:
        raise ParameterError(f"sample_count must be >= 1, got {config.sample_count}")
    if k < 2 or n < k + 1:
        raise ParameterError(f"need k >= 2 and n >= k+1; got n={n}, k={k}")
    edge_min = config.resolved_edge_min()
    total = comb(n, 2)
    if edge_min > total:
        raise ParameterError(f"edge_min = {edge_min} exceeds C(n,2) = {total}")
    if 2 * total < n * (k + 1):
        raise ParameterError(f"no graph on {n} vertices has minimum degree {k + 1}")
    pairs = list(combinations(range(n), 2))
    rng = random.Random(config.seed)
    out = []
    for index in range(config.sample_count):
        for _ in range(MAX_ATTEMPTS_PER_SAMPLE):
            m = rng.randint(max(edge_min, 0), total) if config.edges_free else max(edge_min, 0)
            g = build(n, (pairs[i] for i in rng.sample(range(total), m)))
            if is_connected(g) and min(g.degrees()) >= k + 1:
                out.append(g)
                break
        else:
            raise ParameterError(f"rejection sampling found no admissible graph for sample {index}")
    return out


def check_graph(g: Graph, k: int, budget: int = DEFAULT_BUDGET, spectral: bool = True,
                timing: bool = False) -> dict:
    """One scan record: condition flags, exact decision and its classification."""
    start = time.perf_counter()
    report = evaluate(g, k, spectral=spectral)
    verdict = is_k_leaf_connected(g, k, budget)
    if verdict.decision is Decision.YES:
        outcome = CONFIRMED
    elif verdict.decision is Decision.BUDGET_EXHAUSTED:
        outcome = BUDGET_EXHAUSTED
    elif report.exception_match is not None or report.edge_exception is not None:
        outcome = EXCEPTION
    else:
        outcome = ANOMALY
    flags = report.to_dict()
    record = {
        "graph6": graph6.encode(g),
        "e": g.edge_count,
        "delta": report.min_degree,
        "kappa": report.connectivity,
        "necessary": flags["necessary"],
        "sufficient": flags["sufficient"],
        "spectral": flags["spectral"],
        "exception_match": flags["exception_match"],
        "edge_exception": flags["edge_exception"],
        "decider": verdict.decision.value,
        "failing_set": sorted(verdict.failing_set) if verdict.failing_set is not None else None,
        "quick_reject": verdict.quick_reject,
        "search_nodes": verdict.nodes,
        "outcome": outcome,
    }
    if timing:
        record["elapsed"] = time.perf_counter() - start
    return record


def _check_job(args: tuple) -> dict:
    return check_graph(*args)


def run_scan(config: ScanConfig) -> ScanReport:
    graphs = sample_graphs(config)
    jobs = [(g, config.k, config.budget, config.spectral, config.timing) for g in graphs]
    if config.parallelism > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            records = list(pool.map(_check_job, jobs))
    else:
        records = [_check_job(job) for job in jobs]
    for index, record in enumerate(records):
        record["index"] = index
    summary = {
        "sample_count": len(records),
        "confirmed": sum(r["outcome"] == CONFIRMED for r in records),
        "exceptions": sum(r["outcome"] == EXCEPTION for r in records),
        "budget_exhausted": sum(r["outcome"] == BUDGET_EXHAUSTED for r in records),
        "anomalies": sum(r["outcome"] == ANOMALY for r in records),
    }
    return ScanReport(config, records, summary)
