"""Host-side Hook-Compress drivers.

Every driver is a sequence of fork-join phases. A phase is one call into the
kernel backend and returns only after all workers joined, so each phase sees
every write of the previous one. ``observer(event, forest, index)`` is called
between phases with ``event`` in ``{"init", "hook", "compress"}``; it runs
outside the phase timers.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from adaptcc import backend
from adaptcc.forest import KernelCounters, ParentForest, init_forest
from adaptcc.graph import Graph, GraphStats
from adaptcc.labels import ComponentLabeling, count_components, extract_labels

Observer = Callable[[str, ParentForest, int], None]

ALGORITHMS = ("baseline", "baseline-mj", "atomic", "adaptive")


@dataclass(frozen=True)
class SegmentPlan:
    s: int
    boundaries: tuple[int, ...]
    requested: int

    @property
    def clamped(self) -> bool:
        return self.s != self.requested

    def __iter__(self):
        b = self.boundaries
        return iter(zip(b[:-1], b[1:]))

    def sizes(self) -> list[int]:
        return [hi - lo for lo, hi in self]


@dataclass
class RunMetrics:
    algo: str
    n: int
    m: int
    workers: int
    backend: str
    s: int = 1
    s_requested: int | None = None
    total_ms: float = 0.0
    hook_ms: float = 0.0
    compress_ms: float = 0.0
    rounds: int = 0
    counters: KernelCounters = field(default_factory=KernelCounters)
    components: int = 0
    phases: list[dict] = field(default_factory=list)

    def add_phase(self, kind: str, index: int, ms: float) -> None:
        self.phases.append({"phase": kind, "index": index, "ms": ms})
        if kind == "hook":
            self.hook_ms += ms
        else:
            self.compress_ms += ms


def round_half_up(x) -> int:
    return math.floor(Fraction(x) + Fraction(1, 2))


def choose_segment_count(stats: GraphStats) -> int:
    """Segment count = average degree, rounded half-up, at least 1 and at most m."""
    if stats.n == 0:
        return 1
    s = max(1, round_half_up(stats.avg_degree))
    if stats.m_stored < s:
        s = max(1, stats.m_stored)
    return s


def partition_edges(graph: Graph | int, s: int) -> SegmentPlan:
    """Split the stored edge order into ``s`` contiguous segments whose sizes differ by at most one."""
    m = graph if isinstance(graph, int) else graph.m
    if s < 1:
        raise ValueError("segment count must be at least 1")
    requested = s
    s = min(s, max(1, m))
    q, r = divmod(m, s)
    bounds = [0]
    for i in range(s):
        bounds.append(bounds[-1] + q + (1 if i < r else 0))
    return SegmentPlan(s, tuple(bounds), requested)


class _Run:
    """Shared driver state: forest, timers, counters and observer."""

    def __init__(self, algo, graph, workers, observer, kernels):
        self.k = backend.get(kernels) if kernels is None or isinstance(kernels, str) else kernels
        self.graph = graph
        self.workers = backend.resolve_workers(workers)
        self.observer = observer
        self.metrics = RunMetrics(algo, graph.n, graph.m, self.workers, self.k.BACKEND)
        self.t0 = time.perf_counter()
        self.forest = init_forest(graph.n)
        self.parent = self.forest.parent
        self.notify("init", 0)

    def notify(self, event, index):
        if self.observer is not None:
            pause = time.perf_counter()
            self.observer(event, self.forest, index)
            self.t0 += time.perf_counter() - pause

    def phase(self, kind, index, fn, *args):
        start = time.perf_counter()
        out = fn(*args)
        self.metrics.add_phase(kind, index, (time.perf_counter() - start) * 1e3)
        self.notify(kind, index)
        return out

    def compress_multi_jump(self, index):
        self.metrics.counters.jump_steps += self.phase(
            "compress", index, self.k.multi_jump_pass, self.parent, self.workers)

    def finish(self, validate):
        labels = extract_labels(self.forest, validate=validate)
        self.metrics.total_ms = (time.perf_counter() - self.t0) * 1e3
        self.metrics.components = count_components(labels)
        return labels, self.metrics


def baseline_cc(graph: Graph, workers=None, multi_jump: bool = False,
                observer: Observer | None = None, kernels=None,
                validate: bool = True) -> tuple[ComponentLabeling, RunMetrics]:
    """Non-atomic Hook-Compress: hook rounds over all edges, each followed by a full compress.

    Stops after a round in which no hook wrote. The compress step repeats
    single-level jump passes until one changes nothing; with
    ``multi_jump=True`` it is a single Multi-Jump pass instead.
    """
    run = _Run("baseline-mj" if multi_jump else "baseline", graph, workers, observer, kernels)
    k, parent, w = run.k, run.parent, run.workers
    if graph.n:
        while True:
            index = run.metrics.rounds
            run.metrics.rounds += 1
            changed = run.phase("hook", index, k.hook_pass, parent, graph.edges, 0, graph.m, w)
            if multi_jump:
                run.compress_multi_jump(index)
            else:
                start = time.perf_counter()
                while True:
                    moved, writes = k.jump_pass(parent, w)
                    run.metrics.counters.jump_steps += writes
                    if not moved:
                        break
                run.metrics.add_phase("compress", index, (time.perf_counter() - start) * 1e3)
                run.notify("compress", index)
            if not changed:
                break
    return run.finish(validate)


def _segmented(algo, graph, plan, workers, observer, kernels, validate):
    run = _Run(algo, graph, workers, observer, kernels)
    run.metrics.s = plan.s
    run.metrics.s_requested = plan.requested
    k, parent, w = run.k, run.parent, run.workers
    if graph.n:
        counters = run.metrics.counters
        for i, (lo, hi) in enumerate(plan):
            steps, fails = run.phase("hook", i, k.atomic_hook_pass, parent, graph.edges, lo, hi, w)
            counters.hook_traversal_steps += steps
            counters.cas_failures += fails
            run.compress_multi_jump(i)
            run.metrics.rounds += 1
    return run.finish(validate)


def single_hook_cc(graph: Graph, workers=None, observer: Observer | None = None,
                   kernels=None, validate: bool = True):
    """One Atomic-Hook pass over every edge, then one Multi-Jump pass."""
    return _segmented("atomic", graph, partition_edges(graph, 1), workers, observer, kernels, validate)


def adaptive_cc(graph: Graph, segments="auto", workers=None,
                observer: Observer | None = None, kernels=None,
                validate: bool = True):
    """Atomic-Hook each edge segment in turn, with a full Multi-Jump after every segment.

    ``segments="auto"`` uses :func:`choose_segment_count`; the graph statistics
    it needs are computed (and cached on the graph) before the timer starts.
    """
    s = choose_segment_count(graph.stats) if segments in (None, "auto") else int(segments)
    return _segmented("adaptive", graph, partition_edges(graph, s), workers, observer, kernels, validate)


def run_algorithm(algo: str, graph: Graph, segments="auto", workers=None, **kw):
    if algo == "baseline":
        return baseline_cc(graph, workers, **kw)
    if algo == "baseline-mj":
        return baseline_cc(graph, workers, multi_jump=True, **kw)
    if algo == "atomic":
        return single_hook_cc(graph, workers, **kw)
    if algo == "adaptive":
        return adaptive_cc(graph, segments, workers, **kw)
    raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")
