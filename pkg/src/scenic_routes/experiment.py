"""Seeded random-configuration experiments comparing the route algorithms.

Each trial draws its own generator from ``(seed, trial index)``, so serial
and parallel runs produce identical results.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arrangement import bridge_components, build_arrangement
from .geometry import Color, DegeneratePairError, WeightedPoint
from .metrics import RouteMetrics, route_metrics
from .routes import Algorithm, run_algorithm
from .shortest_paths import compute_apsp

log = logging.getLogger(__name__)

METRIC_COLUMNS = ("RL", "NoE", "NoRE", "RE%", "WL")
BASELINE = Algorithm.DPE
MAX_RESAMPLES = 1000


@dataclass(frozen=True)
class ExperimentConfig:
    trials: int = 100
    n_red: int = 4
    n_blue: int = 4
    coord_range: tuple[float, float] = (-30.0, 30.0)
    weight_range: tuple[float, float] = (1.0, 50.0)
    seed: int = 0
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n_red < 1 or self.n_blue < 1:
            raise ValueError("need at least one point of each class")
        if self.weight_range[0] <= 0 or self.weight_range[1] < self.weight_range[0]:
            raise ValueError("weights must be positive")


@dataclass(frozen=True)
class TrialResult:
    index: int
    nodes: int
    edges: int
    total_length: float
    components: int
    resamples: int
    metrics: dict[Algorithm, RouteMetrics]
    connected: dict[Algorithm, bool] = field(default_factory=dict)


@dataclass(frozen=True)
class ExperimentSummary:
    config: ExperimentConfig
    trials: tuple[TrialResult, ...]
    means: dict[Algorithm, dict[str, float]]
    ratios: dict[Algorithm, dict[str, float]]
    mean_nodes: float
    mean_edges: float
    mean_total_length: float
    mean_components: float
    complete_rate: dict[Algorithm, float]
    resampled: int


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def sample_points(cfg: ExperimentConfig, rng: np.random.Generator) -> list[WeightedPoint]:
    n = cfg.n_red + cfg.n_blue
    xy = rng.uniform(cfg.coord_range[0], cfg.coord_range[1], size=(n, 2))
    w = rng.uniform(cfg.weight_range[0], cfg.weight_range[1], size=n)
    return [
        WeightedPoint(i, Color.RED if i < cfg.n_red else Color.BLUE, float(xy[i, 0]), float(xy[i, 1]), float(w[i]))
        for i in range(n)
    ]


def _route_connected(route, arr) -> bool:
    parent = {n: n for n in route.nodes}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for eid in route.edges:
        e = arr.edges[eid]
        ra, rb = find(e.u), find(e.v)
        if ra != rb:
            parent[ra] = rb
    return len({find(n) for n in route.nodes}) == 1


def run_trial(cfg: ExperimentConfig, index: int) -> TrialResult:
    rng = trial_rng(cfg.seed, index)
    for resamples in range(MAX_RESAMPLES):
        points = sample_points(cfg, rng)
        if len({p.xy for p in points}) < len(points):
            continue
        try:
            raw = build_arrangement(points)
        except DegeneratePairError:
            continue
        break
    else:
        raise RuntimeError(f"trial {index}: no valid sample after {MAX_RESAMPLES} attempts")
    if resamples:
        log.info("trial %d: resampled %d time(s)", index, resamples)

    arr = bridge_components(raw)
    apsp = compute_apsp(arr)
    metrics, connected = {}, {}
    for algo in Algorithm:
        route = run_algorithm(algo, arr, apsp)
        metrics[algo] = route_metrics(route, arr)
        connected[algo] = _route_connected(route, arr)
    return TrialResult(
        index=index,
        nodes=len(arr.nodes),
        edges=len(arr.edges),
        total_length=arr.total_length,
        components=len(raw.components),
        resamples=resamples,
        metrics=metrics,
        connected=connected,
    )


def summarize(cfg: ExperimentConfig, results: list[TrialResult]) -> ExperimentSummary:
    results = sorted(results, key=lambda r: r.index)
    means = {
        algo: {col: math.fsum(r.metrics[algo].as_row()[col] for r in results) / len(results) for col in METRIC_COLUMNS}
        for algo in Algorithm
    }
    base = means[BASELINE]
    ratios = {
        algo: {col: (100.0 * vals[col] / base[col]) if base[col] else math.nan for col in METRIC_COLUMNS}
        for algo, vals in means.items()
    }
    n = len(results)
    return ExperimentSummary(
        config=cfg,
        trials=tuple(results),
        means=means,
        ratios=ratios,
        mean_nodes=sum(r.nodes for r in results) / n,
        mean_edges=sum(r.edges for r in results) / n,
        mean_total_length=math.fsum(r.total_length for r in results) / n,
        mean_components=sum(r.components for r in results) / n,
        complete_rate={algo: sum(r.metrics[algo].complete for r in results) / n for algo in Algorithm},
        resampled=sum(r.resamples for r in results),
    )


def run_random_experiment(cfg: ExperimentConfig) -> ExperimentSummary:
    """Run ``cfg.trials`` random trials and aggregate the route metrics."""
    indices = range(cfg.trials)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(run_trial, [cfg] * cfg.trials, indices))
    else:
        results = [run_trial(cfg, i) for i in indices]
    summary = summarize(cfg, results)
    if summary.resampled:
        log.warning("resampled %d degenerate configuration(s)", summary.resampled)
    return summary


def _fmt(x: float) -> str:
    return "-" if math.isnan(x) else f"{x:.2f}"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)


def format_tables(summary: ExperimentSummary) -> str:
    cfg = summary.config
    head = (
        f"seed {cfg.seed}, trials {cfg.trials}, {cfg.n_red} red + {cfg.n_blue} blue, "
        f"coords [{cfg.coord_range[0]:g}, {cfg.coord_range[1]:g}], "
        f"weights [{cfg.weight_range[0]:g}, {cfg.weight_range[1]:g}]\n"
        f"avg nodes {summary.mean_nodes:.2f}, avg edges {summary.mean_edges:.2f}, "
        f"avg total edge length {summary.mean_total_length:.2f}, "
        f"avg components before bridging {summary.mean_components:.2f}, resampled {summary.resampled}"
    )
    order = [Algorithm.DPE, Algorithm.ACU, Algorithm.ACCH]
    absolute = _table(
        ["Algorithm", *METRIC_COLUMNS, "complete"],
        [[a.name, *(_fmt(summary.means[a][c]) for c in METRIC_COLUMNS), f"{summary.complete_rate[a]:.2f}"] for a in order],
    )
    relative = _table(
        ["Algorithm", *(f"R. {c}" for c in METRIC_COLUMNS)],
        [[a.name, *(_fmt(summary.ratios[a][c]) for c in METRIC_COLUMNS)] for a in order],
    )
    return f"{head}\n\n{absolute}\n\n{relative}\n"


def format_csv(summary: ExperimentSummary) -> str:
    lines = ["algorithm,metric,mean,ratio_vs_dpe"]
    for a in (Algorithm.DPE, Algorithm.ACU, Algorithm.ACCH):
        for c in METRIC_COLUMNS:
            lines.append(f"{a.name},{c},{summary.means[a][c]:.9g},{summary.ratios[a][c]:.9g}")
    lines.append(f"graph,nodes,{summary.mean_nodes:.9g},")
    lines.append(f"graph,edges,{summary.mean_edges:.9g},")
    lines.append(f"graph,total_length,{summary.mean_total_length:.9g},")
    lines.append(f"graph,seed,{summary.config.seed},")
    return "\n".join(lines) + "\n"


def format_trials_csv(summary: ExperimentSummary) -> str:
    """One row per trial and algorithm."""
    lines = ["trial,algorithm,RL,NoE,NoRE,RE%,WL,complete,nodes,edges"]
    for r in summary.trials:
        for a in Algorithm:
            m = r.metrics[a]
            lines.append(
                f"{r.index},{a.name},{m.route_length:.9g},{m.num_edges},{m.num_repeated},"
                f"{m.repeated_pct:.9g},{m.walk_length:.9g},{int(m.complete)},{r.nodes},{r.edges}"
            )
    return "\n".join(lines) + "\n"
