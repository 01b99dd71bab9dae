"""Desk-scale empirical verification: exhaustive enumeration over labeled
graphs, uniform sampling from filtered families, construction audits, and
counterexample searches for the degree-condition conjectures.

Enumeration walks the ``C(n,2)``-bit edge-mask integers in fixed contiguous
chunks; chunks may run on a thread pool (the kernels release the GIL) and are
merged in mask order, so serial and parallel runs produce bit-identical
reports.  Sampling uses the documented ``splitmix64`` generator seeded
explicitly; all randomness flows from that seed.  Reports serialize to a
stable canonical JSON schema with ``elapsed_ms`` zeroed unless timing is
requested, so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from time import perf_counter

import numpy as np

from . import _kernels as K
from .constructions import FAMILIES, expected_degree_bands, expected_edges, build_extremal2
from .errors import ParameterRangeError
from .formats import decode_graph6, encode_graph6
from .graph import Graph, degree_sequence
from .solvers import (
    equitable_colouring,
    perfect_kr_packing,
    resolve_node_cap,
    square_hamilton_obstructions,
)
from .thresholds import colouring_threshold, matching_threshold, packing_threshold

CHUNK_MASKS = 1 << 14
EXHAUSTIVE_DEFAULT_CAP = 7
EXHAUSTIVE_HARD_CAP = 11  # edge masks beyond C(11,2) bits overflow int64
VIOLATION_BUFFER = 4096
GENERATOR_ID = "splitmix64"
SAMPLE_BATCH = 4096
PROPOSAL_LIMIT_FACTOR = 1000
_HUGE = 1 << 60


class SplitMix64:
    """The splitmix64 sequence; the documented generator behind sampled mode."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_word(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by bit-rejection."""
        if bound <= 0:
            raise ParameterRangeError("bound must be positive")
        bits = (bound - 1).bit_length()
        if bits == 0:
            return 0
        while True:
            acc = 0
            got = 0
            while got < bits:
                acc = (acc << 64) | self.next_word()
                got += 64
            acc >>= got - bits
            if acc < bound:
                return acc


@dataclass(frozen=True)
class EnumerationTask:
    """Input echo recorded in every report."""

    predicate: str
    n: int
    mode: str
    r: int | None = None
    d: int | None = None
    samples: int | None = None
    seed: int | None = None
    generator: str | None = None

    def echo(self) -> dict:
        out = {"predicate": self.predicate, "n": self.n, "mode": self.mode}
        for key in ("r", "d", "samples", "seed", "generator"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification task.

    ``violations`` hold graph6 witnesses in ascending edge-mask order; every
    witness was re-decoded and re-solved before the report was built.  The
    ``per_d`` breakdown, ``condition_count`` and ``problems`` are programmatic
    extras and do not enter the serialized schema.
    """

    task: EnumerationTask
    examined: int
    violations: tuple[str, ...]
    extremal: tuple[int, str] | None
    status: str
    elapsed_ms: int = 0
    per_d: dict | None = field(default=None, compare=False)
    condition_count: int | None = field(default=None, compare=False)
    problems: tuple[str, ...] = field(default=(), compare=False)

    def to_json(self) -> str:
        extremal = (
            None
            if self.extremal is None
            else {"edges": self.extremal[0], "graph6": self.extremal[1]}
        )
        payload = {
            "task": self.task.echo(),
            "examined": self.examined,
            "violations": list(self.violations),
            "extremal": extremal,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _elapsed_ms(t0: float, timing: bool) -> int:
    return int((perf_counter() - t0) * 1000) if timing else 0


def _check_exhaustive(n: int, n_cap: int) -> None:
    if n_cap > EXHAUSTIVE_HARD_CAP:
        raise ParameterRangeError(
            f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_HARD_CAP}"
        )
    if n > n_cap:
        raise ParameterRangeError(
            f"exhaustive enumeration capped at n <= {n_cap}; use sampled mode"
        )


def _run_chunks(total: int, workers: int, run_one):
    bounds = []
    lo = 0
    while lo < total:
        hi = min(lo + CHUNK_MASKS, total)
        bounds.append((lo, hi))
        lo = hi
    if workers <= 1 or len(bounds) <= 1:
        return [run_one(b) for b in bounds]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_one, b) for b in bounds]
        return [f.result() for f in futures]


def _merge_extrema(parts, width: int, prefer_larger: bool):
    """Merge per-d (found, value, mask) triples in chunk order; strict
    comparison keeps the earliest (lowest-mask) attaining graph on ties."""
    found = [False] * width
    value = [0] * width
    mask = [0] * width
    for pf, pv, pm in parts:
        for dd in range(width):
            if not pf[dd]:
                continue
            better = (pv[dd] > value[dd]) if prefer_larger else (pv[dd] < value[dd])
            if not found[dd] or better:
                found[dd] = True
                value[dd] = int(pv[dd])
                mask[dd] = int(pm[dd])
    return found, value, mask


def _witness(n: int, mask: int) -> str:
    return encode_graph6(Graph.from_edge_mask(n, mask))


def _per_d_table(n, armed, thresholds, found, value, mask):
    table = {}
    for dd in armed:
        table[dd] = {
            "found": found[dd],
            "edges": value[dd] if found[dd] else None,
            "graph6": _witness(n, mask[dd]) if found[dd] else None,
            "mask": mask[dd] if found[dd] else None,
            "threshold": thresholds[dd],
        }
    return table


def _status(aborted: bool, ok: bool) -> str:
    if aborted:
        return "aborted"
    return "pass" if ok else "fail"


# ---------------------------------------------------------------------------
# sampling plumbing


def _slot_pairs(n: int):
    e = comb(n, 2)
    pi = np.zeros(e, np.int64)
    pj = np.zeros(e, np.int64)
    s = 0
    for j in range(1, n):
        for i in range(j):
            pi[s] = i
            pj[s] = j
            s += 1
    return pi, pj


def _floyd_sample(rng: SplitMix64, m: int, total: int) -> list[int]:
    """m distinct slots out of range(total), uniformly (Floyd's algorithm)."""
    chosen: set[int] = set()
    for t in range(total - m, total):
        x = rng.next_below(t + 1)
        chosen.add(t if x in chosen else x)
    return sorted(chosen)


def _edge_count_sampler(e_total: int, m_lo: int, m_hi: int):
    """Cumulative table for drawing an edge count m in [m_lo, m_hi] with
    probability proportional to the number of labeled graphs with m edges."""
    cum = []
    total = 0
    for m in range(m_lo, m_hi + 1):
        total += comb(e_total, m)
        cum.append(total)
    return cum, total


def _draw_edge_count(rng: SplitMix64, cum, total, m_lo: int) -> int:
    u = rng.next_below(total)
    lo, hi = 0, len(cum) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if u < cum[mid]:
            hi = mid
        else:
            lo = mid + 1
    return m_lo + lo


def _sample_filtered_window(
    n: int,
    rng: SplitMix64,
    samples: int,
    m_lo: int,
    m_hi: int,
    degree_filter,
):
    """First-`samples`-accepted uniform draws from the graphs with edge count
    in [m_lo, m_hi] passing ``degree_filter`` (a predicate on the degree
    list).  Yields (mask, slots) pairs; raises CapExceededError-style abort by
    returning fewer rows only if the proposal budget runs out."""
    e_total = comb(n, 2)
    cum, total = _edge_count_sampler(e_total, m_lo, m_hi)
    if total == 0:
        return [], 0, False
    limit = PROPOSAL_LIMIT_FACTOR * samples + 1000
    out = []
    proposals = 0
    while len(out) < samples and proposals < limit:
        proposals += 1
        m = _draw_edge_count(rng, cum, total, m_lo)
        slots = _floyd_sample(rng, m, e_total)
        degs = [0] * n
        mask = 0
        for s in slots:
            mask |= 1 << s
        g = Graph.from_edge_mask(n, mask)
        if degree_filter(g.degrees()):
            out.append((mask, slots))
    return out, proposals, len(out) < samples


def _rows_to_adjs(n: int, rows) -> np.ndarray:
    """Per-vertex adjacency masks, one row per sampled (mask, slots) pair."""
    pi, pj = _slot_pairs(n)
    width = max((len(s) for _, s in rows), default=0)
    slots = np.zeros((len(rows), max(width, 1)), np.int64)
    counts = np.zeros(len(rows), np.int64)
    for b, (_, ss) in enumerate(rows):
        counts[b] = len(ss)
        slots[b, : len(ss)] = ss
    adjs = np.zeros((len(rows), n), np.int64)
    K.slots_to_adj(slots, counts, pi, pj, n, adjs)
    return adjs


def _decide_rows_packable(n: int, r: int, rows, node_cap: int):
    """Exact packing decision for each sampled row; (decisions, aborted)."""
    if not rows:
        return [], False
    adjs = _rows_to_adjs(n, rows)
    cand, chosen, comm = K.pack_work_arrays(n)
    out = np.zeros(len(rows), np.int64)
    aborted = bool(K.batch_packable(adjs, n, r, node_cap, cand, chosen, comm, out))
    stop = int(np.flatnonzero(out == -1)[0]) if aborted else len(rows)
    return [bool(x == 1) for x in out[:stop]], aborted


# ---------------------------------------------------------------------------
# threshold verifiers


def verify_matching_threshold(
    n: int,
    d: int | None = None,
    mode: str = "exhaustive",
    seed: int | None = None,
    samples: int | None = None,
    workers: int = 1,
    node_cap: int | None = None,
    n_cap: int = EXHAUSTIVE_DEFAULT_CAP,
    timing: bool = False,
) -> VerificationReport:
    """Check the perfect-matching edge threshold against enumeration.

    Exhaustive mode confirms, for each min-degree floor d (all of
    1..n/2-1 unless a single d is given), that the maximum edge count among
    graphs with min degree >= d and no perfect matching equals the closed-form
    threshold, recording the extremal witness; any richer non-matchable graph
    is a violation.  Sampled mode draws uniformly from the family
    {min degree >= d, edges > threshold} and re-decides matchability.
    """
    if n < 4 or n % 2:
        raise ParameterRangeError("need n >= 4 even")
    d_hi = n // 2 - 1
    if d is not None and not 1 <= d <= d_hi:
        raise ParameterRangeError("need 1 <= d <= n/2 - 1")
    armed = [d] if d is not None else list(range(1, d_hi + 1))
    thresholds = {dd: matching_threshold(n, dd).value for dd in armed}
    cap = resolve_node_cap(node_cap)
    task = EnumerationTask(
        predicate="matching",
        n=n,
        mode=mode,
        d=d,
        samples=samples if mode == "sampled" else None,
        seed=seed if mode == "sampled" else None,
        generator=GENERATOR_ID if mode == "sampled" else None,
    )
    t0 = perf_counter()
    if mode == "exhaustive":
        _check_exhaustive(n, n_cap)
        f2v = np.full(d_hi + 1, _HUGE, np.int64)
        for dd in armed:
            f2v[dd] = thresholds[dd]
        total = 1 << comb(n, 2)

        def run_one(bounds):
            lo, hi = bounds
            adj = np.zeros(n, np.int64)
            cand, chosen, comm = K.pack_work_arrays(n)
            found = np.zeros(d_hi + 1, np.int64)
            max_e = np.zeros(d_hi + 1, np.int64)
            arg = np.zeros(d_hi + 1, np.int64)
            viol = np.zeros(VIOLATION_BUFFER, np.int64)
            examined, nviol, aborted = K.scan_matching(
                n, d_hi, f2v, lo, hi, cap, adj, cand, chosen, comm,
                found, max_e, arg, viol,
            )
            if nviol > VIOLATION_BUFFER:
                raise RuntimeError("violation buffer overflow")
            return examined, [int(viol[i]) for i in range(nviol)], aborted, (found, max_e, arg)

        parts = _run_chunks(total, workers, run_one)
        examined = sum(p[0] for p in parts)
        viol_masks = [m for p in parts for m in p[1]]
        aborted = any(p[2] for p in parts)
        found, value, mask = _merge_extrema([p[3] for p in parts], d_hi + 1, True)
        per_d = _per_d_table(n, armed, thresholds, found, value, mask)
        ok = all(
            row["found"] and row["edges"] == row["threshold"] for row in per_d.values()
        )
        violations = tuple(_witness(n, m) for m in viol_masks)
        for g6 in violations:
            g = decode_graph6(g6)
            mindeg = min(g.degrees())
            assert any(
                dd <= mindeg and g.edge_count > thresholds[dd] for dd in armed
            ) and not perfect_kr_packing(g, 2, cap).decision, "witness failed re-validation"
        extremal = _pick_boundary(per_d, prefer_larger=True)
        return VerificationReport(
            task, examined, violations, extremal,
            _status(aborted, ok and not violations), _elapsed_ms(t0, timing), per_d,
        )
    if mode != "sampled":
        raise ParameterRangeError(f"unknown mode {mode!r}")
    if d is None or seed is None or not samples:
        raise ParameterRangeError("sampled mode needs d, seed and samples")
    e_total = comb(n, 2)
    rng = SplitMix64(seed)
    rows, _, starved = _sample_filtered_window(
        n, rng, samples, thresholds[d] + 1, e_total,
        lambda degs: min(degs) >= d,
    )
    decisions, aborted = _decide_rows_packable(n, 2, rows, cap)
    viol_masks = sorted({rows[i][0] for i, dec in enumerate(decisions) if not dec})
    violations = tuple(_witness(n, m) for m in viol_masks)
    for g6 in violations:
        g = decode_graph6(g6)
        assert min(g.degrees()) >= d and g.edge_count > thresholds[d]
        assert not perfect_kr_packing(g, 2, cap).decision
    return VerificationReport(
        task, len(decisions), violations, None,
        _status(aborted or starved, not violations), _elapsed_ms(t0, timing),
    )


def _pick_boundary(per_d, prefer_larger: bool):
    best = None
    for row in per_d.values():
        if not row["found"]:
            continue
        cand = (row["edges"], row["mask"], row["graph6"])
        if best is None:
            best = cand
            continue
        if cand[0] == best[0]:
            if cand[1] < best[1]:
                best = cand
        elif (cand[0] > best[0]) == prefer_larger:
            best = cand
    return None if best is None else (best[0], best[2])


def _t1_ranges(n: int, r: int, big_d: int | None):
    if r < 3 or n % r or n < 2 * r:
        raise ParameterRangeError("need r >= 3 and r | n with n >= 2r")
    d_lo, d_hi = n // r, n - r
    if big_d is not None and not d_lo <= big_d <= d_hi:
        raise ParameterRangeError("need n/r <= D <= n - r")
    armed = [big_d] if big_d is not None else list(range(d_lo, d_hi + 1))
    return d_lo, d_hi, armed


def verify_t1_threshold(
    n: int,
    r: int,
    big_d: int | None = None,
    mode: str = "exhaustive",
    seed: int | None = None,
    samples: int | None = None,
    workers: int = 1,
    node_cap: int | None = None,
    n_cap: int = EXHAUSTIVE_DEFAULT_CAP,
    timing: bool = False,
) -> VerificationReport:
    """Check the equitable-colouring edge threshold against enumeration.

    Exhaustive mode confirms, for each max-degree cap D (all of n/r..n-r
    unless a single D is given), that every graph with max degree <= D and
    fewer than the threshold's edges is equitably (n/r)-colourable, and that a
    non-colourable graph meeting the threshold exactly exists (the recorded
    extremal).  Sampled mode draws uniformly from {max degree <= D, edges <
    threshold} and re-decides colourability.
    """
    d_lo, d_hi, armed = _t1_ranges(n, r, big_d)
    thresholds = {dd: colouring_threshold(n, r, dd).value for dd in armed}
    cap = resolve_node_cap(node_cap)
    task = EnumerationTask(
        predicate="t1",
        n=n,
        mode=mode,
        r=r,
        d=big_d,
        samples=samples if mode == "sampled" else None,
        seed=seed if mode == "sampled" else None,
        generator=GENERATOR_ID if mode == "sampled" else None,
    )
    t0 = perf_counter()
    if mode == "exhaustive":
        _check_exhaustive(n, n_cap)
        fv = np.full(d_hi + 1, -1, np.int64)
        for dd in armed:
            fv[dd] = thresholds[dd]
        total = 1 << comb(n, 2)

        def run_one(bounds):
            lo, hi = bounds
            adj = np.zeros(n, np.int64)
            adjc = np.zeros(n, np.int64)
            cand, chosen, comm = K.pack_work_arrays(n)
            found = np.zeros(d_hi + 1, np.int64)
            min_e = np.zeros(d_hi + 1, np.int64)
            arg = np.zeros(d_hi + 1, np.int64)
            viol = np.zeros(VIOLATION_BUFFER, np.int64)
            examined, nviol, aborted = K.scan_colour_threshold(
                n, r, d_lo, d_hi, fv, lo, hi, cap, adj, adjc, cand, chosen,
                comm, found, min_e, arg, viol,
            )
            if nviol > VIOLATION_BUFFER:
                raise RuntimeError("violation buffer overflow")
            return examined, [int(viol[i]) for i in range(nviol)], aborted, (found, min_e, arg)

        parts = _run_chunks(total, workers, run_one)
        examined = sum(p[0] for p in parts)
        viol_masks = [m for p in parts for m in p[1]]
        aborted = any(p[2] for p in parts)
        found, value, mask = _merge_extrema([p[3] for p in parts], d_hi + 1, False)
        per_d = _per_d_table(n, armed, thresholds, found, value, mask)
        ok = all(
            row["found"] and row["edges"] == row["threshold"] for row in per_d.values()
        )
        violations = tuple(_witness(n, m) for m in viol_masks)
        for g6 in violations:
            g = decode_graph6(g6)
            maxdeg = max(g.degrees())
            assert any(
                maxdeg <= dd and g.edge_count < thresholds[dd] for dd in armed
            ) and not equitable_colouring(g, n // r, cap).decision, "witness failed re-validation"
        extremal = _pick_boundary(per_d, prefer_larger=False)
        return VerificationReport(
            task, examined, violations, extremal,
            _status(aborted, ok and not violations), _elapsed_ms(t0, timing), per_d,
        )
    if mode != "sampled":
        raise ParameterRangeError(f"unknown mode {mode!r}")
    if big_d is None or seed is None or not samples:
        raise ParameterRangeError("sampled mode needs D, seed and samples")
    rng = SplitMix64(seed)
    rows, _, starved = _sample_filtered_window(
        n, rng, samples, 0, thresholds[big_d] - 1,
        lambda degs: max(degs, default=0) <= big_d,
    )
    if rows:
        adjs = _rows_to_adjs(n, rows)
        cand, chosen, comm = K.pack_work_arrays(n)
        adjc = np.zeros(n, np.int64)
        out = np.zeros(len(rows), np.int64)
        aborted = bool(K.batch_colourable(adjs, n, r, cap, adjc, cand, chosen, comm, out))
        stop = int(np.flatnonzero(out == -1)[0]) if aborted else len(rows)
        decisions = [bool(x == 1) for x in out[:stop]]
    else:
        decisions, aborted = [], False
    viol_masks = sorted({rows[i][0] for i, dec in enumerate(decisions) if not dec})
    violations = tuple(_witness(n, m) for m in viol_masks)
    for g6 in violations:
        g = decode_graph6(g6)
        assert max(g.degrees()) <= big_d and g.edge_count < thresholds[big_d]
        assert not equitable_colouring(g, n // r, cap).decision
    return VerificationReport(
        task, len(decisions), violations, None,
        _status(aborted or starved, not violations), _elapsed_ms(t0, timing),
    )


def verify_mainthm1_threshold(
    n: int,
    r: int,
    big_d: int | None = None,
    mode: str = "exhaustive",
    seed: int | None = None,
    samples: int | None = None,
    workers: int = 1,
    node_cap: int | None = None,
    n_cap: int = EXHAUSTIVE_DEFAULT_CAP,
    timing: bool = False,
) -> VerificationReport:
    """Check the perfect-packing edge threshold; dual of the colouring check.

    Exhaustive mode scans min-degree families directly (for each floor D in
    r-1..n-1-n/r: maximum edge count among non-packable graphs with min degree
    >= D must equal the packing threshold) and additionally cross-checks the
    whole run against the colouring-side scan at the complementary degree
    parameter: examined counts match, violation sets are complement images,
    per-D extremal edge counts are complementary, and the complement of each
    recorded extremal is itself a colouring-side boundary witness.
    """
    if r < 3 or n % r or n < 2 * r:
        raise ParameterRangeError("need r >= 3 and r | n with n >= 2r")
    d_lo, d_hi = r - 1, n - 1 - n // r
    if big_d is not None and not d_lo <= big_d <= d_hi:
        raise ParameterRangeError("need r - 1 <= D <= n - 1 - n/r")
    armed = [big_d] if big_d is not None else list(range(d_lo, d_hi + 1))
    thresholds = {dd: packing_threshold(n, r, dd).value for dd in armed}
    cap = resolve_node_cap(node_cap)
    task = EnumerationTask(
        predicate="mainthm1",
        n=n,
        mode=mode,
        r=r,
        d=big_d,
        samples=samples if mode == "sampled" else None,
        seed=seed if mode == "sampled" else None,
        generator=GENERATOR_ID if mode == "sampled" else None,
    )
    t0 = perf_counter()
    if mode == "exhaustive":
        _check_exhaustive(n, n_cap)
        gv = np.full(d_hi + 1, _HUGE, np.int64)
        for dd in armed:
            gv[dd] = thresholds[dd]
        total = 1 << comb(n, 2)

        def run_one(bounds):
            lo, hi = bounds
            adj = np.zeros(n, np.int64)
            cand, chosen, comm = K.pack_work_arrays(n)
            found = np.zeros(d_hi + 1, np.int64)
            max_e = np.zeros(d_hi + 1, np.int64)
            arg = np.zeros(d_hi + 1, np.int64)
            viol = np.zeros(VIOLATION_BUFFER, np.int64)
            examined, nviol, aborted = K.scan_pack_threshold(
                n, r, d_lo, d_hi, gv, lo, hi, cap, adj, cand, chosen, comm,
                found, max_e, arg, viol,
            )
            if nviol > VIOLATION_BUFFER:
                raise RuntimeError("violation buffer overflow")
            return examined, [int(viol[i]) for i in range(nviol)], aborted, (found, max_e, arg)

        parts = _run_chunks(total, workers, run_one)
        examined = sum(p[0] for p in parts)
        viol_masks = [m for p in parts for m in p[1]]
        aborted = any(p[2] for p in parts)
        found, value, mask = _merge_extrema([p[3] for p in parts], d_hi + 1, True)
        per_d = _per_d_table(n, armed, thresholds, found, value, mask)
        ok = all(
            row["found"] and row["edges"] == row["threshold"] for row in per_d.values()
        )
        violations = tuple(_witness(n, m) for m in viol_masks)
        for g6 in violations:
            g = decode_graph6(g6)
            mindeg = min(g.degrees())
            assert any(
                dd <= mindeg and g.edge_count > thresholds[dd] for dd in armed
            ) and not perfect_kr_packing(g, r, cap).decision, "witness failed re-validation"
        # duality cross-check against the colouring-side scan
        dual = verify_t1_threshold(
            n, r,
            big_d=(n - 1 - big_d) if big_d is not None else None,
            mode="exhaustive", workers=workers, node_cap=node_cap,
            n_cap=n_cap, timing=False,
        )
        cross_ok = dual.examined == examined
        dual_viols = sorted(
            encode_graph6(decode_graph6(g6).complement()) for g6 in dual.violations
        )
        cross_ok = cross_ok and dual_viols == sorted(violations)
        half = comb(n, 2)
        for dd in armed:
            row, drow = per_d[dd], dual.per_d[n - 1 - dd]
            if not (row["found"] and drow["found"]):
                cross_ok = False
                continue
            cross_ok = cross_ok and row["edges"] + drow["edges"] == half
            comp = decode_graph6(row["graph6"]).complement()
            cross_ok = (
                cross_ok
                and max(comp.degrees()) <= n - 1 - dd
                and comp.edge_count == drow["edges"]
                and not equitable_colouring(comp, n // r, cap).decision
            )
        extremal = _pick_boundary(per_d, prefer_larger=True)
        return VerificationReport(
            task, examined, violations, extremal,
            _status(aborted or dual.status == "aborted", ok and cross_ok and not violations),
            _elapsed_ms(t0, timing), per_d,
        )
    if mode != "sampled":
        raise ParameterRangeError(f"unknown mode {mode!r}")
    if big_d is None or seed is None or not samples:
        raise ParameterRangeError("sampled mode needs D, seed and samples")
    e_total = comb(n, 2)
    rng = SplitMix64(seed)
    rows, _, starved = _sample_filtered_window(
        n, rng, samples, thresholds[big_d] + 1, e_total,
        lambda degs: min(degs) >= big_d,
    )
    decisions, aborted = _decide_rows_packable(n, r, rows, cap)
    # duality cross-check per sample: independent direct-colouring search on
    # the complement must agree with the packing decision
    cross_ok = True
    for (mask_int, _), dec in zip(rows, decisions):
        comp = Graph.from_edge_mask(n, mask_int).complement()
        dual_dec = equitable_colouring(comp, n // r, cap, method="direct").decision
        if dual_dec != dec:
            cross_ok = False
    viol_masks = sorted({rows[i][0] for i, dec in enumerate(decisions) if not dec})
    violations = tuple(_witness(n, m) for m in viol_masks)
    for g6 in violations:
        g = decode_graph6(g6)
        assert min(g.degrees()) >= big_d and g.edge_count > thresholds[big_d]
        assert not perfect_kr_packing(g, r, cap).decision
    return VerificationReport(
        task, len(decisions), violations, None,
        _status(aborted or starved, cross_ok and not violations),
        _elapsed_ms(t0, timing),
    )


# ---------------------------------------------------------------------------
# degree-condition searches


def banded_condition_profile(graph: Graph, r: int):
    """Failure indices of the banded packing condition.

    Returns ``(alpha_failures, beta_ok)``: the 1-based indices i < n/r with
    d_i < (r-2)n/r + i, and whether d_{n/r+1} >= (r-1)n/r.
    """
    n = graph.n
    if r < 2 or n % r or n < r:
        raise ParameterRangeError("need r >= 2 and r | n with n >= r")
    q = n // r
    d = degree_sequence(graph)
    fails = tuple(i for i in range(1, q) if d[i - 1] < (r - 2) * q + i)
    return fails, d[q] >= (r - 1) * q


def disjunctive_condition_failures(graph: Graph, r: int) -> tuple[int, ...]:
    """1-based indices i <= n/r failing both disjuncts:
    d_i >= (r-2)n/r + i and d_{n-i(r-1)+1} >= n - i."""
    n = graph.n
    if r < 2 or n % r or n < r:
        raise ParameterRangeError("need r >= 2 and r | n with n >= r")
    q = n // r
    d = degree_sequence(graph)
    return tuple(
        i
        for i in range(1, q + 1)
        if d[i - 1] < (r - 2) * q + i and d[n - i * (r - 1)] < n - i
    )


def _condition_search(
    predicate: str,
    variant: int,
    n: int,
    r: int,
    mode: str,
    seed: int | None,
    samples: int | None,
    workers: int,
    node_cap: int | None,
    n_cap: int,
    timing: bool,
):
    if r < 3 or n % r or n < r:
        raise ParameterRangeError("need r >= 3 and r | n with n >= r")
    cap = resolve_node_cap(node_cap)
    task = EnumerationTask(
        predicate=predicate,
        n=n,
        mode=mode,
        r=r,
        samples=samples if mode == "sampled" else None,
        seed=seed if mode == "sampled" else None,
        generator=GENERATOR_ID if mode == "sampled" else None,
    )
    t0 = perf_counter()
    if mode == "exhaustive":
        _check_exhaustive(n, n_cap)
        total = 1 << comb(n, 2)

        def run_one(bounds):
            lo, hi = bounds
            adj = np.zeros(n, np.int64)
            cand, chosen, comm = K.pack_work_arrays(n)
            degs = np.zeros(n, np.int64)
            viol = np.zeros(VIOLATION_BUFFER, np.int64)
            examined, cond_true, nviol, aborted = K.scan_degree_condition(
                n, r, variant, lo, hi, cap, adj, cand, chosen, comm, degs, viol,
            )
            if nviol > VIOLATION_BUFFER:
                raise RuntimeError("violation buffer overflow")
            return examined, cond_true, [int(viol[i]) for i in range(nviol)], aborted

        parts = _run_chunks(total, workers, run_one)
        examined = sum(p[0] for p in parts)
        cond_true = sum(p[1] for p in parts)
        viol_masks = [m for p in parts for m in p[2]]
        aborted = any(p[3] for p in parts)
    elif mode == "sampled":
        if seed is None or not samples:
            raise ParameterRangeError("sampled mode needs seed and samples")
        e_total = comb(n, 2)
        words_per = (e_total + 63) // 64
        rng = SplitMix64(seed)
        q = n // r
        examined = 0
        cond_true = 0
        viol_set: set[int] = set()
        aborted = False
        cand, chosen, comm = K.pack_work_arrays(n)
        remaining = samples
        while remaining and not aborted:
            batch = min(SAMPLE_BATCH, remaining)
            remaining -= batch
            words = np.zeros((batch, words_per), np.int64)
            raw: list[list[int]] = []
            for b in range(batch):
                row = [rng.next_word() for _ in range(words_per)]
                raw.append(row)
                for w, x in enumerate(row):
                    words[b, w] = x - (1 << 64) if x >= 1 << 63 else x
            adjs = np.zeros((batch, n), np.int64)
            K.words_to_adj(words, n, adjs)
            degs = np.sort(np.bitwise_count(adjs), axis=1).astype(np.int64)
            if variant == 0:
                cond = degs[:, q] >= (r - 1) * q
                for i in range(1, q):
                    cond &= degs[:, i - 1] >= (r - 2) * q + i
            else:
                cond = np.ones(batch, bool)
                for i in range(1, q + 1):
                    cond &= (degs[:, i - 1] >= (r - 2) * q + i) | (
                        degs[:, n - i * (r - 1)] >= n - i
                    )
            examined += batch
            hits = np.flatnonzero(cond)
            cond_true += len(hits)
            for b in hits:
                st, _ = K._pack_decide(adjs[b], n, r, cap, cand, chosen, comm)
                if st == -1:
                    aborted = True
                    break
                if st == 0:
                    mask = 0
                    for w, x in enumerate(raw[b]):
                        mask |= x << (64 * w)
                    viol_set.add(mask & ((1 << e_total) - 1))
        viol_masks = sorted(viol_set)
    else:
        raise ParameterRangeError(f"unknown mode {mode!r}")
    violations = tuple(_witness(n, m) for m in viol_masks)
    for g6 in violations:
        g = decode_graph6(g6)
        if variant == 0:
            fails, beta = banded_condition_profile(g, r)
            assert not fails and beta
        else:
            assert not disjunctive_condition_failures(g, r)
        assert not perfect_kr_packing(g, r, cap).decision
    return task, examined, cond_true, violations, aborted, t0


def conjecture1_search(
    n: int,
    r: int,
    mode: str = "exhaustive",
    seed: int | None = None,
    samples: int | None = None,
    workers: int = 1,
    node_cap: int | None = None,
    n_cap: int = 6,
    timing: bool = False,
) -> VerificationReport:
    """Search for a counterexample to the banded degree condition: a graph
    satisfying d_i >= (r-2)n/r + i for all i < n/r and d_{n/r+1} >= (r-1)n/r
    yet admitting no perfect r-clique packing.  Expected empty."""
    task, examined, cond_true, violations, aborted, t0 = _condition_search(
        "conj1", 0, n, r, mode, seed, samples, workers, node_cap, n_cap, timing,
    )
    return VerificationReport(
        task, examined, violations, None,
        _status(aborted, not violations), _elapsed_ms(t0, timing),
        condition_count=cond_true,
    )


def question1_search(
    n: int,
    r: int,
    mode: str = "exhaustive",
    seed: int | None = None,
    samples: int | None = None,
    workers: int = 1,
    node_cap: int | None = None,
    n_cap: int = 6,
    timing: bool = False,
) -> VerificationReport:
    """Search for a counterexample to the disjunctive degree condition
    (d_i >= (r-2)n/r + i or d_{n-i(r-1)+1} >= n - i for all i <= n/r), and
    assert the condition's sharpness: every extremal witness graph fails it at
    exactly index k, with d_{n-k(r-1)+1} = n - k - 1."""
    task, examined, cond_true, violations, aborted, t0 = _condition_search(
        "ques1", 1, n, r, mode, seed, samples, workers, node_cap, n_cap, timing,
    )
    problems = []
    for k in range(1, n // r + 1):
        g = build_extremal2(n, r, k)
        fails = disjunctive_condition_failures(g, r)
        if fails != (k,):
            problems.append(f"extremal2(k={k}) fails at {fails}, expected ({k},)")
        d = degree_sequence(g)
        if d[n - k * (r - 1)] != n - k - 1:
            problems.append(f"extremal2(k={k}) boundary degree {d[n - k * (r - 1)]}")
    return VerificationReport(
        task, examined, violations, None,
        _status(aborted, not violations and not problems), _elapsed_ms(t0, timing),
        condition_count=cond_true, problems=tuple(problems),
    )


# ---------------------------------------------------------------------------
# Hamilton-path degree-condition sweep


def sweep_hampath_condition(
    n: int, workers: int = 1, n_cap: int = EXHAUSTIVE_HARD_CAP
) -> tuple[int, int, tuple[str, ...]]:
    """Exhaustively test that the Hamilton-path degree condition is sound on
    all labeled n-vertex graphs.  Returns (examined, condition_true,
    violation witnesses); soundness means no witnesses."""
    if n < 2:
        raise ParameterRangeError("need n >= 2")
    _check_exhaustive(n, n_cap)
    total = 1 << comb(n, 2)

    def run_one(bounds):
        lo, hi = bounds
        adj = np.zeros(n, np.int64)
        dp = np.zeros(1 << n, np.int64)
        degs = np.zeros(n, np.int64)
        viol = np.zeros(VIOLATION_BUFFER, np.int64)
        examined, cond_true, nviol = K.scan_chvatal(n, lo, hi, adj, dp, degs, viol)
        if nviol > VIOLATION_BUFFER:
            raise RuntimeError("violation buffer overflow")
        return examined, cond_true, [int(viol[i]) for i in range(nviol)]

    parts = _run_chunks(total, workers, run_one)
    examined = sum(p[0] for p in parts)
    cond_true = sum(p[1] for p in parts)
    violations = tuple(_witness(n, m) for p in parts for m in p[2])
    return examined, cond_true, violations


# ---------------------------------------------------------------------------
# construction audit


def _solver_cap_for(token: str, params: dict, solver_cap: int) -> int:
    r_like = 2 if token == "H" else params.get("r", 3)
    return solver_cap + 2 if r_like == 2 else solver_cap


def audit_instance(
    token: str,
    params: dict,
    node_cap: int | None = None,
    solver_cap: int = 12,
) -> list[str]:
    """Audit one construction instance against all its claims.

    Structural claims (edge count, degree bands, family-specific boundary
    degrees and condition-failure indices) are checked at any size; the
    blocking property (non-packability / non-colourability / the square
    obstruction) is re-confirmed by the exact solvers when n is within
    ``solver_cap`` (two more for matching-sized blocks).
    """
    family = FAMILIES[token]
    g = family.build(**params)
    problems: list[str] = []
    n = params["n"]
    expected = expected_edges(token, **params)
    if expected is not None and g.edge_count != expected:
        problems.append(f"edge count {g.edge_count} != {expected}")
    bands = expected_degree_bands(token, **params)
    if bands is not None:
        want = sorted(deg for cnt, deg in bands for _ in range(cnt))
        if degree_sequence(g) != want:
            problems.append("degree sequence differs from the claimed bands")
    cap = resolve_node_cap(node_cap)
    within = n <= _solver_cap_for(token, params, solver_cap)
    if token == "H":
        if within and perfect_kr_packing(g, 2, cap).decision:
            problems.append("unexpected perfect matching")
    elif token in ("G1", "G2"):
        if within and equitable_colouring(g, n // params["r"], cap).decision:
            problems.append("unexpected equitable colouring")
    elif token in ("af_i", "af_ii", "t_star"):
        r = params["r"]
        if token == "af_i" and r >= 3:
            from .constructions import build_clique_plus_isolates

            if g.complement() != build_clique_plus_isolates(n, r):
                problems.append("complement is not the clique-plus-isolates graph")
        if within and perfect_kr_packing(g, r, cap).decision:
            problems.append("unexpected perfect packing")
    elif token == "extremal1":
        r, k = params["r"], params["k"]
        fails, beta_ok = banded_condition_profile(g, r)
        if fails != (k,) or not beta_ok:
            problems.append(f"banded condition fails at {fails} (beta {beta_ok})")
        if within and perfect_kr_packing(g, r, cap).decision:
            problems.append("unexpected perfect packing")
    elif token == "extremal2":
        r, k = params["r"], params["k"]
        fails = disjunctive_condition_failures(g, r)
        if fails != (k,):
            problems.append(f"disjunctive condition fails at {fails}")
        if degree_sequence(g)[n - k * (r - 1)] != n - k - 1:
            problems.append("boundary degree differs from the claimed value")
        if within and perfect_kr_packing(g, r, cap).decision:
            problems.append("unexpected perfect packing")
    elif token == "square_cx":
        c = params["C"]
        third = n // 3
        if g.degree(0) != third + c + 1:
            problems.append("centre degree differs from n/3 + C + 1")
        if any(g.degree(v) != n - 2 for v in range(third + c + 2, n)):
            problems.append("clique-part degree differs from n - 2")
        d = degree_sequence(g)
        bad = [i for i in range(1, third + 1) if d[i - 1] < third + c + i]
        if bad:
            problems.append(f"degree band fails at indices {bad}")
        if 0 not in square_hamilton_obstructions(g):
            problems.append("vertex 0 not flagged by the square obstruction check")
    return problems


def _audit_grid(max_n: int):
    for n in range(4, max_n + 1, 2):
        for d in range(0, n // 2):
            yield "H", {"n": n, "d": d}
    for r in range(2, max_n + 1):
        for n in range(r, max_n + 1):
            if n % r:
                continue
            if r >= 3:
                yield "G1", {"n": n, "r": r}
            yield "af_i", {"n": n, "r": r}
            if n >= 2 * r:
                yield "t_star", {"n": n, "r": r}
            for j in range(1, r - 1):
                if n >= r + j:
                    yield "af_ii", {"n": n, "r": r, "j": j}
            if n >= 2 * r:
                q = n // r
                if r >= 3:
                    for big_d in range(-(-n // (r - 1)), n - r + 1):
                        yield "G2", {"n": n, "r": r, "D": big_d}
                for k in range(1, q):
                    yield "extremal1", {"n": n, "r": r, "k": k}
                for k in range(1, q + 1):
                    yield "extremal2", {"n": n, "r": r, "k": k}
    for n in range(3, max_n + 1, 3):
        c = 1
        m2 = n // 3 + c + 1
        for k in range(3 * c + 2, m2 + 1):
            if m2 // k >= 2 * c + 3:
                yield "square_cx", {"n": n, "C": c, "K": k}


def audit_constructions(
    max_n: int = 120,
    node_cap: int | None = None,
    solver_cap: int = 12,
    timing: bool = False,
) -> VerificationReport:
    """Audit every construction family over its full parameter grid up to
    ``max_n``: closed-form edge counts and degree bands exactly, blocking
    properties solver-confirmed within ``solver_cap``.  Violating instances
    appear as graph6 witnesses with human-readable detail in ``problems``."""
    if max_n < 4:
        raise ParameterRangeError("need max_n >= 4")
    t0 = perf_counter()
    examined = 0
    witnesses: list[str] = []
    problems: list[str] = []
    for token, params in _audit_grid(max_n):
        found = audit_instance(token, params, node_cap, solver_cap)
        examined += 1
        if found:
            g = FAMILIES[token].build(**params)
            witnesses.append(encode_graph6(g))
            pstr = ",".join(f"{k}={v}" for k, v in params.items())
            problems.append(f"{token}({pstr}): " + "; ".join(found))
    task = EnumerationTask(predicate="audit", n=max_n, mode="audit")
    return VerificationReport(
        task, examined, tuple(witnesses), None,
        "pass" if not witnesses else "fail", _elapsed_ms(t0, timing),
        problems=tuple(problems),
    )
