"""Extremal search: stream graphs of one order, count minimal codewords per
graph, and track the minimum/maximum with witnesses.

Two stream sources: the built-in enumeration of all labeled graphs on n <= 7
vertices (ascending edge-mask order, connected ones kept), and graph6 files
(one graph per line), e.g. isomorph-free catalogs produced externally.
Labeled enumeration visits isomorphic copies repeatedly; that costs time,
not correctness, since the counted quantity is isomorphism-invariant.

The per-graph count is computed for whole batches at once with numpy: a
subset S is non-minimal exactly when some nonempty T strictly inside S has
its information support contained in S's information support, so a
precomputed (S, T) pair table turns counting into a few vectorized byte
operations per graph.  The equivalence of this route with the per-graph
rank criterion (and with the brute-force oracle) is enforced by tests; for
orders above the pair-table range the search falls back to the rank-based
``GraphCode.count_minimal``.

The stream is split into fixed-size chunks folded in chunk order, so the
result is byte-identical for any worker count.  The maximum over possibly
disconnected graphs comes from a partition DP over connected maxima, since
counts add over connectivity components.
"""

from __future__ import annotations

import json
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from math import comb

import numpy as np

from .code import GraphCode
from .errors import Graph6Error, LimitError
from .graph6 import iter_graph6_lines, parse_graph6, to_graph6
from .graphs import Graph, edge_pair_order, graph_from_edge_mask, graph_stats, is_connected

MAX_BUILTIN_N = 7
ENGINE_MAX_N = 12
_CHUNK_MASKS = 1 << 16
_CHUNK_LINES = 8192
_TARGET_ELEMS = 1 << 24


@dataclass(frozen=True)
class LabeledEnumeration:
    """All labeled graphs on n vertices, ascending edge-mask order."""
    n: int


@dataclass(frozen=True)
class Graph6File:
    """A graph6 file, one graph per line, file order."""
    path: str


@dataclass(frozen=True)
class GraphStream:
    source: LabeledEnumeration | Graph6File
    connected_only: bool = True

    @classmethod
    def labeled(cls, n: int) -> "GraphStream":
        return cls(LabeledEnumeration(n))

    @classmethod
    def from_file(cls, path, connected_only: bool = True) -> "GraphStream":
        return cls(Graph6File(str(path)), connected_only)


def enumerate_labeled_connected(n: int) -> GraphStream:
    """Stream of all labeled connected graphs on n vertices (built-in, n <= 7)."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise LimitError(
            f"built-in enumeration is capped at n <= {MAX_BUILTIN_N} "
            f"(2^21 labeled graphs); supply a graph6 file for larger orders")
    return GraphStream.labeled(n)


def iter_graphs(stream: GraphStream):
    """Reference stream semantics: yield Graph objects in stream order.

    Pure-Python; the search engine must agree with this ordering and
    filtering exactly.
    """
    src = stream.source
    if isinstance(src, LabeledEnumeration):
        for mask in range(1 << comb(src.n, 2)):
            g = graph_from_edge_mask(src.n, mask)
            if not stream.connected_only or is_connected(g):
                yield g
    else:
        expected = None
        with open(src.path, "r", encoding="ascii") as fh:
            for line_no, line in iter_graph6_lines(fh):
                g = _parse_line(line_no, line)
                if expected is None:
                    expected = g.n
                elif g.n != expected:
                    raise ValueError(
                        f"line {line_no}: graph of order {g.n}, stream has order {expected}")
                if not stream.connected_only or is_connected(g):
                    yield g


def _parse_line(line_no: int, line: str) -> Graph:
    try:
        return parse_graph6(line)
    except Graph6Error as exc:
        raise Graph6Error(f"line {line_no}: {exc.args[0]}", exc.offset) from None


@dataclass
class SearchResult:
    """Extremes of the minimal-codeword count over one stream."""

    n: int
    scanned: int
    m_connected: int
    M_connected: int
    M_any: int | None
    min_witnesses: list[str]
    max_witnesses: list[str]
    witness_stats: dict[str, dict] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"n": self.n, "scanned": self.scanned,
                "m_connected": self.m_connected, "M_connected": self.M_connected,
                "M_any": self.M_any,
                "min_witnesses": list(self.min_witnesses),
                "max_witnesses": list(self.max_witnesses),
                "witness_stats": {k: dict(v) for k, v in self.witness_stats.items()}}

    @classmethod
    def from_dict(cls, d: dict) -> "SearchResult":
        return cls(n=d["n"], scanned=d["scanned"], m_connected=d["m_connected"],
                   M_connected=d["M_connected"], M_any=d["M_any"],
                   min_witnesses=list(d["min_witnesses"]),
                   max_witnesses=list(d["max_witnesses"]),
                   witness_stats={k: dict(v) for k, v in d["witness_stats"].items()})


# ---------------------------------------------------------------------------
# batched counting engine


def _dtype(n: int):
    return np.uint8 if n <= 8 else np.uint16


@lru_cache(maxsize=8)
def _subset_pair_table(n: int):
    """(S_idx, T_idx, group_starts) over all nonempty T strictly inside S,
    |S| >= 2, grouped by ascending S."""
    s_list, t_list, starts = [], [], []
    for s in range(1, 1 << n):
        if s & (s - 1) == 0:
            continue
        starts.append(len(t_list))
        t = (s - 1) & s
        while t:
            s_list.append(s)
            t_list.append(t)
            t = (t - 1) & s
    return (np.asarray(s_list, np.int64), np.asarray(t_list, np.int64),
            np.asarray(starts, np.int64))


def _batch_counts(rows: np.ndarray, n: int) -> np.ndarray:
    """Minimal-codeword count for each graph in a (B, n) array of bit rows."""
    s_idx, t_idx, starts = _subset_pair_table(n)
    n_codewords = (1 << n) - 1
    out = np.empty(len(rows), np.int64)
    sub = np.arange(1 << n, dtype=np.int64)
    vbits = [(sub >> v & 1).astype(bool) for v in range(n)]
    step = max(16, _TARGET_ELEMS // max(len(s_idx), 1))
    for b0 in range(0, len(rows), step):
        batch = rows[b0:b0 + step]
        info = np.zeros((len(batch), 1 << n), rows.dtype)
        for v in range(n):
            info[:, vbits[v]] ^= batch[:, v:v + 1]
        if len(starts):
            contained = (info[:, t_idx] & ~info[:, s_idx]) == 0
            non_minimal = np.logical_or.reduceat(contained, starts, axis=1)
            counts = non_minimal.sum(axis=1)
        else:
            counts = np.zeros(len(batch), np.int64)
        out[b0:b0 + len(batch)] = n_codewords - counts
    return out


def _decode_edge_masks(masks: np.ndarray, n: int) -> np.ndarray:
    rows = np.zeros((len(masks), n), _dtype(n))
    for p, (u, v) in enumerate(edge_pair_order(n)):
        bit = ((masks >> p) & 1).astype(rows.dtype)
        rows[:, u] |= bit << v
        rows[:, v] |= bit << u
    return rows


def _connected_mask(rows: np.ndarray, n: int) -> np.ndarray:
    full = rows.dtype.type((1 << n) - 1)
    reach = np.ones(len(rows), rows.dtype)
    for _ in range(max(n - 1, 1)):
        acc = reach.copy()
        for v in range(n):
            hit = ((reach >> v) & 1).astype(rows.dtype)
            acc |= rows[:, v] * hit
        if np.array_equal(acc, reach):
            break
        reach = acc
    return reach == full


# ---------------------------------------------------------------------------
# chunk folding


@dataclass
class _Partial:
    scanned: int = 0
    lines: int = 0
    last_line: int | None = None
    min_val: int | None = None
    min_keys: list = field(default_factory=list)
    max_val: int | None = None
    max_keys: list = field(default_factory=list)


def _fold_values(values: np.ndarray, keys, cap: int | None) -> _Partial:
    part = _Partial(scanned=len(values))
    if len(values) == 0:
        return part
    part.min_val = int(values.min())
    part.max_val = int(values.max())
    take = len(values) if cap is None else cap
    if take > 0:
        min_pos = np.flatnonzero(values == part.min_val)[:take]
        max_pos = np.flatnonzero(values == part.max_val)[:take]
        part.min_keys = [keys[i] for i in min_pos]
        part.max_keys = [keys[i] for i in max_pos]
    return part


def _merge_side(running_val, running_keys, val, keys, cap, better):
    if val is None:
        return running_val, running_keys
    if running_val is None or better(val, running_val):
        return val, list(keys)
    if val == running_val and (cap is None or len(running_keys) < cap):
        running_keys.extend(keys)
        if cap is not None:
            del running_keys[cap:]
    return running_val, running_keys


class _Fold:
    def __init__(self, cap: int | None):
        self.cap = cap
        self.scanned = 0
        self.lines = 0
        self.min_val = None
        self.min_keys: list = []
        self.max_val = None
        self.max_keys: list = []

    def add(self, part: _Partial):
        self.scanned += part.scanned
        self.lines += part.lines
        self.min_val, self.min_keys = _merge_side(
            self.min_val, self.min_keys, part.min_val, part.min_keys,
            self.cap, int.__lt__)
        self.max_val, self.max_keys = _merge_side(
            self.max_val, self.max_keys, part.max_val, part.max_keys,
            self.cap, int.__gt__)


def _map_ordered(fn, jobs, threads: int):
    """Apply fn over jobs, yielding results in job order; bounded prefetch."""
    if threads <= 1:
        for job in jobs:
            yield fn(job)
        return
    sentinel = object()
    with ThreadPoolExecutor(max_workers=threads) as ex:
        jobs = iter(jobs)
        pending = deque(ex.submit(fn, j) for j in islice(jobs, threads + 2))
        while pending:
            result = pending.popleft().result()
            nxt = next(jobs, sentinel)
            if nxt is not sentinel:
                pending.append(ex.submit(fn, nxt))
            yield result


# ---------------------------------------------------------------------------
# the search driver


def run_search(stream: GraphStream, *, threads: int | None = None,
               witness_cap: int | None = 100,
               checkpoint: str | None = None, checkpoint_every: int = 10 ** 6,
               resume: bool = False,
               connected_max=None) -> SearchResult:
    """Scan the stream, counting minimal codewords per graph.

    Returns the minimum and maximum count with up to ``witness_cap``
    witnesses per extreme (graph6 strings in stream order, deduplicated;
    None means unlimited).  ``M_any``, the maximum over possibly
    disconnected graphs of the same order, is derived by composition from
    connected maxima of smaller orders: built-in values are used when
    n - 1 <= 7, otherwise pass ``connected_max`` (values for orders
    1..n-1) or the field is None.

    The stream is processed in fixed chunks merged in stream order, so
    results do not depend on ``threads``.  For graph6 files a checkpoint
    sidecar can be appended every ``checkpoint_every`` lines and resumed
    (``resume=True`` skips lines up to the last checkpoint; witnesses then
    cover only the resumed portion).
    """
    threads = 1 if threads is None else max(1, threads)
    src = stream.source
    if isinstance(src, LabeledEnumeration):
        if not 1 <= src.n <= MAX_BUILTIN_N:
            raise LimitError(
                f"built-in enumeration is capped at n <= {MAX_BUILTIN_N}; "
                f"supply a graph6 file for larger orders")
        fold, n = _search_labeled(src.n, stream.connected_only, witness_cap, threads)
        materialize = lambda key: to_graph6(graph_from_edge_mask(n, key))
    else:
        fold, n = _search_file(src.path, stream.connected_only, witness_cap, threads,
                               checkpoint, checkpoint_every, resume)
        materialize = lambda key: key
    if fold.min_val is None:
        raise ValueError("stream contained no graphs to count")

    min_wit = _finish_witnesses(fold.min_keys, materialize, witness_cap)
    max_wit = _finish_witnesses(fold.max_keys, materialize, witness_cap)
    stats = {}
    for g6 in dict.fromkeys(min_wit + max_wit):
        st = graph_stats(parse_graph6(g6))
        stats[g6] = {"edges": st.edges, "min_degree": st.min_degree,
                     "max_degree": st.max_degree}

    m_any = _compose_m_any(n, fold.max_val, connected_max)
    return SearchResult(n=n, scanned=fold.scanned,
                        m_connected=fold.min_val, M_connected=fold.max_val,
                        M_any=m_any, min_witnesses=min_wit, max_witnesses=max_wit,
                        witness_stats=stats)


def _finish_witnesses(keys, materialize, cap):
    out = list(dict.fromkeys(materialize(k) for k in keys))
    if cap is not None:
        del out[cap:]
    return out


def _compose_m_any(n, m_connected_n, connected_max):
    if connected_max is not None:
        mc = list(connected_max)
        if len(mc) != n - 1:
            raise ValueError(f"connected_max needs values for orders 1..{n - 1}")
    elif n - 1 <= MAX_BUILTIN_N:
        mc = [builtin_connected_extremes(j)[1] for j in range(1, n)]
    else:
        return None
    return max_over_all_graphs(mc + [m_connected_n])


def _search_labeled(n, connected_only, cap, threads) -> tuple[_Fold, int]:
    total = 1 << comb(n, 2)
    chunks = range(0, total, _CHUNK_MASKS)

    def job(lo):
        masks = np.arange(lo, min(lo + _CHUNK_MASKS, total), dtype=np.int64)
        lines = len(masks)
        rows = _decode_edge_masks(masks, n)
        if connected_only:
            keep = _connected_mask(rows, n)
            rows, masks = rows[keep], masks[keep]
        values = _batch_counts(rows, n)
        part = _fold_values(values, masks.tolist(), cap)
        part.lines = lines
        return part

    fold = _Fold(cap)
    for part in _map_ordered(job, chunks, threads):
        fold.add(part)
    return fold, n


def _search_file(path, connected_only, cap, threads,
                 checkpoint, checkpoint_every, resume) -> tuple[_Fold, int]:
    fold = _Fold(cap)
    skip_to = 0
    if resume and checkpoint and os.path.exists(checkpoint):
        record = _last_checkpoint(checkpoint)
        if record is not None:
            skip_to = record["line"]
            fold.scanned = record["scanned"]
            fold.min_val, fold.max_val = record["m"], record["M"]

    with open(path, "r", encoding="ascii") as fh:
        entries = ((no, line) for no, line in iter_graph6_lines(fh) if no > skip_to)
        first = next(entries, None)
        if first is None:
            raise ValueError(f"no graph6 lines found in {path}")
        n = _parse_line(*first).n

        def chunked():
            pending = [first]
            for entry in entries:
                pending.append(entry)
                if len(pending) == _CHUNK_LINES:
                    yield pending
                    pending = []
            if pending:
                yield pending

        def job(chunk):
            graphs, keys = [], []
            for line_no, line in chunk:
                g = _parse_line(line_no, line)
                if g.n != n:
                    raise ValueError(
                        f"line {line_no}: graph of order {g.n}, stream has order {n}")
                if connected_only and not is_connected(g):
                    continue
                graphs.append(g)
                keys.append(to_graph6(g))
            if n <= ENGINE_MAX_N and graphs:
                rows = np.array([g.adj for g in graphs], dtype=_dtype(n))
                values = _batch_counts(rows, n)
            else:
                values = np.array(
                    [GraphCode(g).count_minimal(use_filters=True).count for g in graphs],
                    dtype=np.int64)
            part = _fold_values(values, keys, cap)
            part.lines = len(chunk)
            part.last_line = chunk[-1][0]
            return part

        next_mark = checkpoint_every
        for part in _map_ordered(job, chunked(), threads):
            fold.add(part)
            if checkpoint and fold.lines >= next_mark:
                _append_checkpoint(checkpoint, part.last_line, fold)
                next_mark += checkpoint_every
    return fold, n


def _append_checkpoint(path, line, fold: _Fold):
    record = {"line": line, "scanned": fold.scanned,
              "m": fold.min_val, "M": fold.max_val}
    with open(path, "a", encoding="ascii") as fh:
        fh.write(json.dumps(record) + "\n")


def _last_checkpoint(path):
    record = None
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                record = json.loads(line)
    return record


# ---------------------------------------------------------------------------
# composition over components and built-in table values


def max_over_all_graphs(connected_max) -> int:
    """Maximum count over ALL graphs on n vertices (n = len(connected_max)),
    given the maxima over connected graphs of each order 1..n.

    Counts add over connectivity components, so the best possibly
    disconnected graph is a partition: best(k) = max over first components.
    """
    mc = list(connected_max)
    if not mc:
        raise ValueError("need connected maxima for orders 1..n")
    n = len(mc)
    best = [0] * (n + 1)
    for k in range(1, n + 1):
        best[k] = mc[k - 1]
        for j in range(1, k):
            best[k] = max(best[k], mc[j - 1] + best[k - j])
    return best[n]


@lru_cache(maxsize=None)
def builtin_connected_extremes(n: int) -> tuple[int, int]:
    """(min, max) count over labeled connected graphs on n <= 7 vertices."""
    fold, _ = _search_labeled(n, True, 0, 1)
    return fold.min_val, fold.max_val


# ---------------------------------------------------------------------------
# reporting


def witness_summary(result: SearchResult) -> dict:
    """Aggregate witness statistics: count and edge/degree ranges per extreme."""
    def agg(witnesses):
        if not witnesses:
            return {"count": 0}
        rows = [result.witness_stats[w] for w in witnesses]
        return {"count": len(witnesses),
                "edges": [min(r["edges"] for r in rows), max(r["edges"] for r in rows)],
                "min_degree": [min(r["min_degree"] for r in rows),
                               max(r["min_degree"] for r in rows)],
                "max_degree": [min(r["max_degree"] for r in rows),
                               max(r["max_degree"] for r in rows)]}
    return {"n": result.n, "scanned": result.scanned,
            "m_connected": result.m_connected, "M_connected": result.M_connected,
            "M_any": result.M_any,
            "min": agg(result.min_witnesses), "max": agg(result.max_witnesses)}


def witness_report(result: SearchResult) -> str:
    """Human-readable witness summary, including the graph6 strings."""
    summary = witness_summary(result)
    lines = [f"order n = {result.n}: scanned {result.scanned} graphs",
             f"m (min over connected) = {result.m_connected}",
             f"M_connected (max over connected) = {result.M_connected}",
             f"M_any (max over all graphs) = "
             f"{'unknown' if result.M_any is None else result.M_any}"]
    for side, witnesses in (("min", result.min_witnesses),
                            ("max", result.max_witnesses)):
        agg = summary[side]
        lines.append(f"{side} witnesses: {agg['count']} collected")
        if agg["count"]:
            lines.append(
                f"  edges {agg['edges'][0]}..{agg['edges'][1]}, "
                f"min degree {agg['min_degree'][0]}..{agg['min_degree'][1]}, "
                f"max degree {agg['max_degree'][0]}..{agg['max_degree'][1]}")
            lines.extend(f"  {w}" for w in witnesses)
    return "\n".join(lines)
