"""Exhaustive, randomized, and adversarial checks for the tiling lemmas.

Complete 2-coloured hosts are scanned as integer edge codes: bit ``i`` of a
code colours edge ``i`` in the lexicographic edge order of
:func:`tritile.graphs.complete_colouring`, so every report's witness codes
round-trip through that function.  Exhaustive scans vectorise the
monochromatic-triangle indicator over numpy chunks and are cut into
fixed-size ranges, so the merged result (counts, capped witness lists, and
the lexicographically first witnesses) is identical for every worker count.
Randomized campaigns derive one rng per fixed-size chunk or restart from the
campaign seed, which keeps them worker-count independent as well.

Every stored witness is re-confirmed by an independent slow-path predicate
before it is reported; a disagreement between the vector kernel and the
slow path raises :class:`AnomalyError` rather than producing a report.
"""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Optional, Sequence

import numpy as np

from tritile.constructions import (
    BLUE,
    RED,
    bound_report,
    ex_bes_1,
    ex_bes_2,
    ex_bes_3,
    ex_triangle,
    ex_triangle_alt,
    extremal_min_formula,
    random_min_degree_colouring,
)
from tritile.graphs import (
    AnomalyError,
    ColouredGraph,
    colouring_code,
    complete_colouring,
    lex_edges,
)
from tritile.proofs import (
    bowtie_through_vertex_k6,
    extract_three_disjoint_k7x2,
    extract_two_disjoint_k8,
    second_bowtie_k7,
)
from tritile.solvers import find_bowtie, max_mixed_tiling, max_single_colour_tiling

WITNESS_CAP = 32
MAX_SCAN_EDGES = 30
DEFAULT_RAMSEY_BUDGET = 1 << 30

MODE_EXHAUSTIVE = "exhaustive"
MODE_RANDOMIZED = "randomized"
MODE_ADVERSARIAL = "adversarial"

_CHUNK = 1 << 20
_TASK_SIZE = 1 << 22


# --------------------------------------------------------------------------
# reports


@dataclass
class LemmaReport:
    """Outcome of one verification campaign.

    ``universe_size`` counts the colourings the statement quantifies over,
    ``checked`` the colourings actually examined; for symmetry-reduced scans
    ``checked * reduction_factor == universe_size``.  ``violations`` holds at
    most ``WITNESS_CAP`` witness edge codes in increasing order, while
    ``violation_count`` is always exact.
    """

    lemma_id: str
    n: int
    r: int
    mode: str
    universe_size: int
    checked: int
    reduction_factor: int
    violation_count: int
    violations: tuple[int, ...]
    elapsed: float
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.violation_count == 0

    def as_dict(self) -> dict:
        out = asdict(self)
        out["violations"] = list(self.violations)
        out["holds"] = self.holds
        return out

    def comparable(self) -> dict:
        """Everything except the wall-clock field, for determinism checks."""
        out = self.as_dict()
        del out["elapsed"]
        return out


@dataclass
class RamseyResult:
    """Result of an exhaustive Ramsey-style search.

    ``value`` is the least ``n`` whose whole universe satisfies the clique
    requirement, or None when ``n_max`` (or the code budget) was exhausted
    first.  ``witness_n``/``witness_code`` pin the last violating colouring
    seen, i.e. a sharpness example for ``value - 1`` when resolved.
    """

    kind: str
    ell: int
    r: int
    n_max: int
    value: Optional[int]
    witness_n: Optional[int]
    witness_code: Optional[int]
    checked: dict
    elapsed: float

    @property
    def resolved(self) -> bool:
        return self.value is not None

    def witness(self) -> Optional[ColouredGraph]:
        if self.witness_n is None or self.witness_code is None:
            return None
        return complete_colouring(self.witness_n, self.r, self.witness_code)

    def as_dict(self) -> dict:
        out = asdict(self)
        out["resolved"] = self.resolved
        return out

    def comparable(self) -> dict:
        out = self.as_dict()
        del out["elapsed"]
        return out


@dataclass
class AuditRow:
    """One tightness comparison: exact solver optimum vs. closed form."""

    construction: str
    n: int
    delta: int
    mode: str
    optimum: int
    bound: int
    proved_optimal: bool
    nodes_explored: int
    theorem_equality: bool
    elapsed: float

    @property
    def matches(self) -> bool:
        return self.optimum == self.bound

    def as_dict(self) -> dict:
        out = asdict(self)
        out["matches"] = self.matches
        return out

    def comparable(self) -> dict:
        out = self.as_dict()
        del out["elapsed"]
        return out


@dataclass
class ProbeRecord:
    """Exact single-colour optimum of one host next to the candidate formulas.

    ``formula_high/mid/low`` are the raw piece values floor((d+1)/5),
    floor((4d-3n+1)/3), and ceil((5d-4n)/2) regardless of band;
    ``applicable_value`` is the piece selected by the degree band of
    ``(n, delta)``.  ``below_formula`` is only set when the optimum is proved,
    so an exhausted budget can never masquerade as a counterexample.
    """

    n: int
    delta: int
    source: str
    optimum: int
    proved_optimal: bool
    formula_high: int
    formula_mid: int
    formula_low: int
    applicable_piece: str
    applicable_value: int
    below_formula: bool

    def as_dict(self) -> dict:
        return asdict(self)


# --------------------------------------------------------------------------
# slow-path predicates (independent of the vector kernels)


def mono_triangle_count(g: ColouredGraph) -> int:
    return len(g.mono_triangles())


def has_mono_pair_sharing_at_most(g: ColouredGraph, shared: int) -> bool:
    """True when two monochromatic triangles overlap in <= ``shared`` vertices."""
    tris = g.mono_triangles()
    for i, a in enumerate(tris):
        for b in tris[i + 1:]:
            if (a.mask & b.mask).bit_count() <= shared:
                return True
    return False


def max_disjoint_mono_capped(g: ColouredGraph, cap: int = 3) -> int:
    """Size of a largest vertex-disjoint monochromatic-triangle family, capped."""
    return _max_disjoint_capped([t.mask for t in g.mono_triangles()], cap)


def _max_disjoint_capped(masks: Sequence[int], cap: int) -> int:
    best = 0
    k = len(masks)

    def rec(i: int, used: int, depth: int) -> None:
        nonlocal best
        if depth > best:
            best = depth
        if best >= cap:
            return
        for j in range(i, k):
            if not masks[j] & used:
                rec(j + 1, used | masks[j], depth + 1)
                if best >= cap:
                    return

    rec(0, 0, 0)
    return best


def enumerate_colourings(n: int, r: int,
                         visitor: Callable[[int, ColouredGraph], None],
                         lo: int = 0, hi: Optional[int] = None) -> int:
    """Call ``visitor(code, graph)`` for every complete colouring in ``[lo, hi)``.

    Plain-python reference enumeration; the vectorised scans below are the
    hot path and are cross-checked against this one in the tests.  Returns
    the number of colourings visited.
    """
    edges = n * (n - 1) // 2
    if edges > MAX_SCAN_EDGES:
        raise ValueError(f"refusing to enumerate r^{edges} colourings; "
                         f"the exhaustive cap is {MAX_SCAN_EDGES} edges")
    total = r ** edges
    if hi is None:
        hi = total
    if not 0 <= lo <= hi <= total:
        raise ValueError(f"code range [{lo}, {hi}) outside universe 0..{total}")
    for code in range(lo, hi):
        visitor(code, complete_colouring(n, r, code))
    return hi - lo


def _confirm(cond: bool, what: str, g: Optional[ColouredGraph] = None) -> None:
    if not cond:
        raise AnomalyError(f"vector scan and slow recheck disagree on {what}",
                           graph=g)


# --------------------------------------------------------------------------
# vectorised kernels over edge codes (r = 2)


@lru_cache(maxsize=None)
def _triples(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(combinations(range(n), 3))


@lru_cache(maxsize=None)
def _tri_edge_masks(n: int) -> tuple[int, ...]:
    index = {e: i for i, e in enumerate(lex_edges(n))}
    out = []
    for a, b, c in _triples(n):
        out.append((1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)]))
    return tuple(out)


@lru_cache(maxsize=None)
def _partner_masks(n: int, max_shared: int) -> tuple[int, ...]:
    """For triangle ``t``, the bitmask of triangles overlapping it in <= k vertices."""
    tris = _triples(n)
    sets = [frozenset(t) for t in tris]
    out = []
    for i in range(len(tris)):
        m = 0
        for j in range(len(tris)):
            if i != j and len(sets[i] & sets[j]) <= max_shared:
                m |= 1 << j
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _share_one_masks(n: int) -> tuple[int, ...]:
    tris = _triples(n)
    sets = [frozenset(t) for t in tris]
    out = []
    for i in range(len(tris)):
        m = 0
        for j in range(len(tris)):
            if i != j and len(sets[i] & sets[j]) == 1:
                m |= 1 << j
        out.append(m)
    return tuple(out)


def _mono_matrix(codes: np.ndarray, n: int) -> np.ndarray:
    """Bit ``t`` of the result marks triangle ``t`` monochromatic (either colour)."""
    out = np.zeros(codes.shape, dtype=np.uint64)
    for t, m in enumerate(_tri_edge_masks(n)):
        mm = np.uint64(m)
        sub = codes & mm
        mono = (sub == 0) | (sub == mm)
        out |= mono.astype(np.uint64) << np.uint64(t)
    return out


def _colour_mono_matrices(codes: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    red = np.zeros(codes.shape, dtype=np.uint64)
    blue = np.zeros(codes.shape, dtype=np.uint64)
    for t, m in enumerate(_tri_edge_masks(n)):
        mm = np.uint64(m)
        sub = codes & mm
        red |= (sub == 0).astype(np.uint64) << np.uint64(t)
        blue |= (sub == mm).astype(np.uint64) << np.uint64(t)
    return red, blue


def _chunk_violations(codes: np.ndarray, n: int, checker: str) -> np.ndarray:
    """Boolean violation mask for one chunk of edge codes."""
    kind, _, arg = checker.partition(":")
    mono = _mono_matrix(codes, n)
    if kind == "mono-lt":
        k = int(arg)
        x = mono.copy()
        one = np.uint64(1)
        for _ in range(k - 1):
            # x & (x - 1) clears the lowest set bit; k - 1 clears empty x
            # exactly when fewer than k triangles are monochromatic.
            np.bitwise_and(x, x - one, out=x)
        return x == 0
    if kind == "no-pair-share-le":
        partners = _partner_masks(n, int(arg))
        ok = np.zeros(codes.shape, dtype=bool)
        for t, pm in enumerate(partners):
            if not pm:
                continue
            has = (mono & np.uint64(1 << t)) != 0
            ok |= has & ((mono & np.uint64(pm)) != 0)
        return ~ok
    raise ValueError(f"unknown checker {checker!r}")


def _scan_task(args: tuple) -> tuple[int, int, list[int]]:
    n, checker, lo, hi, shift = args
    checked = 0
    count = 0
    found: list[int] = []
    for clo in range(lo, hi, _CHUNK):
        chi = min(clo + _CHUNK, hi)
        codes = np.arange(clo, chi, dtype=np.uint64)
        if shift:
            codes = codes << np.uint64(shift)
        viol = _chunk_violations(codes, n, checker)
        hits = int(np.count_nonzero(viol))
        count += hits
        if hits and len(found) < WITNESS_CAP:
            idx = np.flatnonzero(viol)[:WITNESS_CAP - len(found)]
            found.extend(int(codes[i]) for i in idx)
        checked += chi - clo
    return checked, count, found


def _resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    return workers


def _map_tasks(fn: Callable, tasks: list, workers: Optional[int]) -> list:
    w = _resolve_workers(workers)
    if w <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with multiprocessing.Pool(min(w, len(tasks))) as pool:
        return pool.map(fn, tasks)


def _run_scan(n: int, checker: str, total: int, workers: Optional[int],
              shift: int = 0) -> tuple[int, int, list[int]]:
    # Fixed task boundaries keep the merged witness list (the lex-first
    # WITNESS_CAP codes) independent of the worker count.
    tasks = [(n, checker, lo, min(lo + _TASK_SIZE, total), shift)
             for lo in range(0, total, _TASK_SIZE)]
    results = _map_tasks(_scan_task, tasks, workers)
    checked = sum(r[0] for r in results)
    count = sum(r[1] for r in results)
    found: list[int] = []
    for r in results:
        if len(found) >= WITNESS_CAP:
            break
        found.extend(r[2][:WITNESS_CAP - len(found)])
    return checked, count, found


def _edge_count_or_raise(n: int) -> int:
    edges = n * (n - 1) // 2
    if edges > MAX_SCAN_EDGES:
        raise ValueError(f"K_{n} has {edges} edges; exhaustive scans stop at "
                         f"{MAX_SCAN_EDGES}")
    return edges


# --------------------------------------------------------------------------
# lemma campaigns


def verify_fact_k6(n: int = 6, min_triangles: int = 2,
                   workers: Optional[int] = 1) -> LemmaReport:
    """Scan all 2-colourings of K_n for fewer than ``min_triangles`` mono triangles.

    The default instance is the K6 counting fact (every colouring has at
    least two).  ``n=5, min_triangles=1`` inverts into the classic sharpness
    scan: its 12 violations are exactly the triangle-free colourings of K5.
    """
    if min_triangles < 1:
        raise ValueError(f"min_triangles must be positive, got {min_triangles}")
    edges = _edge_count_or_raise(n)
    start = time.perf_counter()
    total = 1 << edges
    checked, count, found = _run_scan(n, f"mono-lt:{min_triangles}", total, workers)
    for code in found:
        g = complete_colouring(n, 2, code)
        _confirm(mono_triangle_count(g) < min_triangles, "a mono-count witness", g)
    lemma_id = "fact-k6" if (n, min_triangles) == (6, 2) else f"mono-count-k{n}"
    return LemmaReport(lemma_id=lemma_id, n=n, r=2, mode=MODE_EXHAUSTIVE,
                       universe_size=total, checked=checked, reduction_factor=1,
                       violation_count=count, violations=tuple(found),
                       elapsed=time.perf_counter() - start,
                       extra={"min_triangles": min_triangles})


def verify_claim_k7(workers: Optional[int] = 1) -> LemmaReport:
    """Scan all 2-colourings of K7 for a mono-triangle pair sharing <= 1 vertex."""
    start = time.perf_counter()
    total = 1 << 21
    checked, count, found = _run_scan(7, "no-pair-share-le:1", total, workers)
    for code in found:
        g = complete_colouring(7, 2, code)
        _confirm(not has_mono_pair_sharing_at_most(g, 1), "a claim-k7 witness", g)
    return LemmaReport(lemma_id="claim-k7", n=7, r=2, mode=MODE_EXHAUSTIVE,
                       universe_size=total, checked=checked, reduction_factor=1,
                       violation_count=count, violations=tuple(found),
                       elapsed=time.perf_counter() - start)


def _extract_k8_task(codes: tuple[int, ...]) -> tuple[int, list[int]]:
    fails: list[int] = []
    for code in codes:
        g = complete_colouring(8, 2, code)
        try:
            a, b = extract_two_disjoint_k8(g)
            ok = a.verify(g) and b.verify(g) and not (a.mask & b.mask)
        except (AnomalyError, ValueError):
            ok = False
        if not ok:
            fails.append(code)
    return len(codes), fails


def verify_lemma_k8(n: int = 8, workers: Optional[int] = None,
                    extractor_samples: int = 0, seed: int = 0) -> LemmaReport:
    """Scan all 2-colourings of K_n for two vertex-disjoint mono triangles.

    At the default ``n=8`` the scan is halved by the colour swap: fixing the
    first edge red visits one representative per swap orbit, so ``checked``
    times ``reduction_factor == 2`` covers the universe and zero violations
    among representatives means zero overall.  ``n=7`` runs unreduced and is
    expected to surface violations; they are the sharpness witnesses showing
    the disjoint pair genuinely needs eight vertices.

    ``extractor_samples`` additionally runs the constructive K8 extractor on
    that many uniformly sampled codes (n=8 only) and counts its failures.
    """
    edges = _edge_count_or_raise(n)
    if extractor_samples and n != 8:
        raise ValueError("the extractor subset is defined on the K8 universe")
    start = time.perf_counter()
    universe = 1 << edges
    shift = 1 if n == 8 else 0
    checked, count, found = _run_scan(n, "no-pair-share-le:0",
                                      universe >> shift, workers, shift=shift)
    for code in found:
        g = complete_colouring(n, 2, code)
        _confirm(not has_mono_pair_sharing_at_most(g, 0), "a disjoint-pair witness", g)
    extra: dict = {}
    if extractor_samples:
        rng = np.random.default_rng(np.random.SeedSequence(seed))
        sample = rng.integers(0, universe, size=extractor_samples, dtype=np.int64)
        step = 10_000
        tasks = [tuple(int(c) for c in sample[i:i + step])
                 for i in range(0, extractor_samples, step)]
        results = _map_tasks(_extract_k8_task, tasks, workers)
        failures: list[int] = []
        for _, f in results:
            failures.extend(f)
        extra = {"extractor_samples": extractor_samples,
                 "extractor_failures": len(failures),
                 "extractor_failure_codes": failures[:WITNESS_CAP],
                 "extractor_seed": seed}
    lemma_id = "lemma-k8" if n == 8 else f"disjoint-pair-k{n}"
    return LemmaReport(lemma_id=lemma_id, n=n, r=2, mode=MODE_EXHAUSTIVE,
                       universe_size=universe, checked=checked,
                       reduction_factor=1 << shift,
                       violation_count=count, violations=tuple(found),
                       elapsed=time.perf_counter() - start, extra=extra)


# --------------------------------------------------------------------------
# bowtie lemma sweeps


@lru_cache(maxsize=None)
def _complement_bits(n: int) -> tuple[int, ...]:
    """For K6 triples only: the bit of the unique vertex-disjoint partner."""
    tris = _triples(n)
    index = {t: i for i, t in enumerate(tris)}
    out = []
    for t in tris:
        comp = tuple(v for v in range(n) if v not in t)
        out.append(1 << index[comp] if len(comp) == 3 else 0)
    return tuple(out)


def _bowtie_k6_task(args: tuple) -> tuple[int, int, int, list[int]]:
    lo, hi = args
    comp = _complement_bits(6)
    qualifying = 0
    fail_count = 0
    fails: list[int] = []
    for clo in range(lo, hi, _CHUNK):
        chi = min(clo + _CHUNK, hi)
        codes = np.arange(clo, chi, dtype=np.uint64)
        red, blue = _colour_mono_matrices(codes, 6)
        hit = np.zeros(codes.shape, dtype=bool)
        for t, pm in enumerate(comp):
            if not pm:
                continue
            hit |= ((red & np.uint64(1 << t)) != 0) & ((blue & np.uint64(pm)) != 0)
        for i in np.flatnonzero(hit):
            code = int(codes[i])
            qualifying += 1
            g = complete_colouring(6, 2, code)
            for v in range(6):
                try:
                    bow = bowtie_through_vertex_k6(g, v)
                    ok = bow.verify(g) and v in bow.vertex_set
                except (ValueError, AnomalyError):
                    ok = False
                if not ok:
                    fail_count += 1
                    if len(fails) < WITNESS_CAP:
                        fails.append(code)
    return hi - lo, qualifying, fail_count, fails


def _bowtie_k7_task(args: tuple) -> tuple[int, int, int, list[int]]:
    lo, hi = args
    share1 = _share_one_masks(7)
    qualifying = 0
    fail_count = 0
    fails: list[int] = []
    for clo in range(lo, hi, _CHUNK):
        chi = min(clo + _CHUNK, hi)
        codes = np.arange(clo, chi, dtype=np.uint64)
        red, blue = _colour_mono_matrices(codes, 7)
        hit = np.zeros(codes.shape, dtype=bool)
        for t, pm in enumerate(share1):
            hit |= ((red & np.uint64(1 << t)) != 0) & ((blue & np.uint64(pm)) != 0)
        for i in np.flatnonzero(hit):
            code = int(codes[i])
            qualifying += 1
            g = complete_colouring(7, 2, code)
            known = find_bowtie(g)
            ok = known is not None and known.verify(g)
            if ok:
                try:
                    nxt = second_bowtie_k7(g, known)
                    ok = nxt.verify(g) and nxt != known
                except (ValueError, AnomalyError):
                    ok = False
            if not ok:
                fail_count += 1
                if len(fails) < WITNESS_CAP:
                    fails.append(code)
    return hi - lo, qualifying, fail_count, fails


def _run_bowtie_sweep(task_fn: Callable, n: int, workers: Optional[int],
                      task_size: int) -> LemmaReport:
    start = time.perf_counter()
    total = 1 << (n * (n - 1) // 2)
    tasks = [(lo, min(lo + task_size, total)) for lo in range(0, total, task_size)]
    results = _map_tasks(task_fn, tasks, workers)
    checked = sum(r[0] for r in results)
    qualifying = sum(r[1] for r in results)
    count = sum(r[2] for r in results)
    fails: list[int] = []
    for r in results:
        if len(fails) >= WITNESS_CAP:
            break
        fails.extend(r[3][:WITNESS_CAP - len(fails)])
    lemma_id = f"bowtie-k{n}"
    return LemmaReport(lemma_id=lemma_id, n=n, r=2, mode=MODE_EXHAUSTIVE,
                       universe_size=total, checked=checked, reduction_factor=1,
                       violation_count=count, violations=tuple(fails),
                       elapsed=time.perf_counter() - start,
                       extra={"qualifying": qualifying})


def verify_bowtie_lemmas(workers: Optional[int] = 1) -> tuple[LemmaReport, LemmaReport]:
    """Exhaust both bowtie extraction lemmas over their full code universes.

    The K6 sweep filters the 2^15 universe down to colourings with two
    vertex-disjoint mono triangles of different colours, then demands a
    verified bowtie through every one of the six vertices.  The K7 sweep
    filters the 2^21 universe down to colourings containing a bowtie at all,
    then demands a verified second bowtie distinct from the lexicographically
    first one.  A violation in either report is an extractor failure, not a
    statistical event, so both are expected to be zero.
    """
    k6 = _run_bowtie_sweep(_bowtie_k6_task, 6, workers, 1 << 12)
    k7 = _run_bowtie_sweep(_bowtie_k7_task, 7, workers, 1 << 15)
    return k6, k7


# --------------------------------------------------------------------------
# doubled-K7 campaign (randomized + adversarial)


K7X2_N = 14
K7X2_CLASSES = tuple((2 * i, 2 * i + 1) for i in range(7))
_K7X2_NONEDGES = frozenset(K7X2_CLASSES)
K7X2_EDGES = tuple((u, v) for u in range(K7X2_N) for v in range(u + 1, K7X2_N)
                   if (u, v) not in _K7X2_NONEDGES)


@lru_cache(maxsize=None)
def _k7x2_tables() -> tuple[np.ndarray, tuple[int, ...]]:
    """(triangle -> three edge indices) array plus triangle vertex masks."""
    index = {e: i for i, e in enumerate(K7X2_EDGES)}
    rows = []
    vmasks = []
    for a, b, c in combinations(range(K7X2_N), 3):
        if (a, b) in index and (a, c) in index and (b, c) in index:
            rows.append((index[(a, b)], index[(a, c)], index[(b, c)]))
            vmasks.append((1 << a) | (1 << b) | (1 << c))
    return np.array(rows, dtype=np.int64), tuple(vmasks)


def k7x2_code(bits: Sequence[int]) -> int:
    code = 0
    for i, b in enumerate(bits):
        if b:
            code |= 1 << i
    return code


def k7x2_bits(code: int) -> np.ndarray:
    out = np.zeros(len(K7X2_EDGES), dtype=np.uint8)
    for i in range(len(K7X2_EDGES)):
        if code >> i & 1:
            out[i] = 1
    return out


def k7x2_graph(bits: Sequence[int]) -> ColouredGraph:
    rows = [[0] * K7X2_N for _ in range(2)]
    for k, (u, v) in enumerate(K7X2_EDGES):
        c = int(bits[k])
        rows[c][u] |= 1 << v
        rows[c][v] |= 1 << u
    return ColouredGraph._from_masks(K7X2_N, 2, rows)


def _k7x2_mono_vmasks(bits: np.ndarray) -> list[int]:
    tri_edges, vmasks = _k7x2_tables()
    sums = bits[tri_edges].sum(axis=1)
    return [vmasks[i] for i in np.flatnonzero((sums == 0) | (sums == 3))]


def k7x2_packing_floor(bits: Sequence[int], cap: int = 3) -> int:
    """Max vertex-disjoint mono-triangle count of a doubled-K7 colouring, capped."""
    return _max_disjoint_capped(_k7x2_mono_vmasks(np.asarray(bits, dtype=np.uint8)),
                                cap)


def _k7x2_sample_task(args: tuple) -> tuple[int, list[int], list[int]]:
    chunk_index, count, seed = args
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(0, chunk_index)))
    violations: list[int] = []
    extractor_fails: list[int] = []
    step = 10_000
    done = 0
    while done < count:
        rows = rng.integers(0, 2, size=(min(step, count - done), len(K7X2_EDGES)),
                            dtype=np.uint8)
        for row in rows:
            g = k7x2_graph(row)
            try:
                a, b, c = extract_three_disjoint_k7x2(g)
                ok = (a.verify(g) and b.verify(g) and c.verify(g)
                      and not (a.mask & b.mask or a.mask & c.mask or b.mask & c.mask))
            except (ValueError, AnomalyError):
                ok = False
            if not ok:
                code = k7x2_code(row)
                extractor_fails.append(code)
                # Classify independently: the lemma itself only fails when no
                # three disjoint mono triangles exist at all.
                if _max_disjoint_capped(_k7x2_mono_vmasks(row), 3) < 3:
                    violations.append(code)
        done += len(rows)
    return count, violations, extractor_fails


def _k7x2_objective(bits: np.ndarray) -> tuple[int, int]:
    tri_edges, vmasks = _k7x2_tables()
    sums = bits[tri_edges].sum(axis=1)
    idx = np.flatnonzero((sums == 0) | (sums == 3))
    floor = _max_disjoint_capped([vmasks[i] for i in idx], 3)
    return floor, len(idx)


def _k7x2_adversarial_task(args: tuple) -> tuple[int, int, list[int]]:
    restart_index, seed, max_steps = args
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(1, restart_index)))
    tri_edges, vmasks = _k7x2_tables()
    m = len(K7X2_EDGES)
    bits = rng.integers(0, 2, size=m, dtype=np.uint8)
    current = _k7x2_objective(bits)
    evaluated = 1
    min_floor = current[0]
    violations: list[int] = []
    if current[0] < 3:
        violations.append(k7x2_code(bits))
    for _ in range(max_steps):
        flips = np.tile(bits, (m, 1))
        flips[np.arange(m), np.arange(m)] ^= 1
        sums = flips[:, tri_edges].sum(axis=2)
        mono = (sums == 0) | (sums == 3)
        mono_counts = mono.sum(axis=1)
        best: Optional[tuple[int, int]] = None
        best_flip = -1
        for f in range(m):
            floor = _max_disjoint_capped(
                [vmasks[i] for i in np.flatnonzero(mono[f])], 3)
            cand = (floor, int(mono_counts[f]))
            if best is None or cand < best:
                best = cand
                best_flip = f
        if best is None or best >= current:
            break
        bits[best_flip] ^= 1
        current = best
        evaluated += 1
        min_floor = min(min_floor, current[0])
        if current[0] < 3:
            violations.append(k7x2_code(bits))
    return evaluated, min_floor, violations


def verify_k7_blowup(samples: int = 1_000_000, adversarial_restarts: int = 1_000,
                     plateau_steps: int = 10_000, seed: int = 0,
                     workers: Optional[int] = 1,
                     chunk_size: int = 100_000) -> LemmaReport:
    """Randomized and adversarial campaign on the doubled K7.

    Every sampled 2-colouring of the 14-vertex host (complete minus the
    doubling matching) must admit three vertex-disjoint mono triangles, and
    the constructive extractor must produce them.  The adversarial phase runs
    steepest-descent restarts over single-edge recolourings, minimising
    (capped disjoint-triangle count, mono-triangle count), and records every
    state whose packing dips below three.  Violations are genuine lemma
    counterexamples, re-confirmed by the slow packing check; extractor
    failures on non-violating states are reported separately in ``extra``.
    """
    if samples < 0 or adversarial_restarts < 0:
        raise ValueError("sample and restart counts must be nonnegative")
    start = time.perf_counter()
    tasks = []
    offset = 0
    index = 0
    while offset < samples:
        n = min(chunk_size, samples - offset)
        tasks.append((index, n, seed))
        offset += n
        index += 1
    sample_results = _map_tasks(_k7x2_sample_task, tasks, workers)
    checked = sum(r[0] for r in sample_results)
    violations: list[int] = []
    extractor_fails: list[int] = []
    for r in sample_results:
        violations.extend(r[1])
        extractor_fails.extend(r[2])
    adv_tasks = [(i, seed, plateau_steps) for i in range(adversarial_restarts)]
    adv_results = _map_tasks(_k7x2_adversarial_task, adv_tasks, workers)
    min_floor = 3
    for evaluated, floor, viols in adv_results:
        checked += evaluated
        min_floor = min(min_floor, floor)
        violations.extend(viols)
    for code in violations[:WITNESS_CAP]:
        _confirm(k7x2_packing_floor(k7x2_bits(code)) < 3,
                 "a doubled-K7 witness", k7x2_graph(k7x2_bits(code)))
    mode = MODE_ADVERSARIAL if adversarial_restarts else MODE_RANDOMIZED
    return LemmaReport(lemma_id="k7x2", n=K7X2_N, r=2, mode=mode,
                       universe_size=1 << len(K7X2_EDGES), checked=checked,
                       reduction_factor=1,
                       violation_count=len(violations),
                       violations=tuple(violations[:WITNESS_CAP]),
                       elapsed=time.perf_counter() - start,
                       extra={"samples": samples,
                              "adversarial_restarts": adversarial_restarts,
                              "plateau_steps": plateau_steps,
                              "seed": seed,
                              "extractor_failures": len(extractor_fails),
                              "extractor_failure_codes": extractor_fails[:WITNESS_CAP],
                              "adversarial_min_packing": min_floor})


# --------------------------------------------------------------------------
# Ramsey-style searches


@lru_cache(maxsize=None)
def _clique_edge_masks(n: int, ell: int) -> tuple[int, ...]:
    index = {e: i for i, e in enumerate(lex_edges(n))}
    out = []
    for verts in combinations(range(n), ell):
        m = 0
        for u, v in combinations(verts, 2):
            m |= 1 << index[(u, v)]
        out.append(m)
    return tuple(out)


def _first_clique_free_code(n: int, r: int, ell: int,
                            codes_iter) -> Optional[int]:
    """Lex-first code among ``codes_iter`` with no monochromatic K_ell, else None.

    For two colours ``codes_iter`` yields numpy chunks in increasing order;
    the generic path takes iterables of plain ints instead.
    """
    masks = _clique_edge_masks(n, ell)
    if not masks:
        # No ell-subset exists, so every colouring violates.
        for chunk in codes_iter:
            for code in chunk:
                return int(code)
        return None
    if r == 2:
        for chunk in codes_iter:
            ok = np.zeros(chunk.shape, dtype=bool)
            for m in masks:
                mm = np.uint64(m)
                sub = chunk & mm
                ok |= (sub == 0) | (sub == mm)
            viol = np.flatnonzero(~ok)
            if viol.size:
                return int(chunk[viol[0]])
        return None
    for chunk in codes_iter:
        for code in chunk:
            g = complete_colouring(n, r, int(code))
            if not _has_mono_clique(g, ell):
                return int(code)
    return None


def _has_mono_clique(g: ColouredGraph, ell: int) -> bool:
    for verts in combinations(range(g.n), ell):
        colours = {g.edge_colour(u, v) for u, v in combinations(verts, 2)}
        if len(colours) == 1:
            return True
    return False


def _full_code_chunks(total: int):
    for lo in range(0, total, _CHUNK):
        yield np.arange(lo, min(lo + _CHUNK, total), dtype=np.uint64)


def compute_ramsey(ell: int, r: int = 2, n_max: int = 8,
                   budget: int = DEFAULT_RAMSEY_BUDGET) -> RamseyResult:
    """Least ``n`` such that every r-colouring of K_n has a mono K_ell.

    Scans n upward exhaustively; stops unresolved (``value None``) when the
    universe at some n exceeds ``budget`` codes or ``n_max`` is passed.  The
    witness is always the lexicographically first clique-free colouring of
    the last violating order, i.e. a sharpness example once resolved.
    """
    if ell < 2 or r < 2:
        raise ValueError(f"need ell >= 2 and r >= 2, got ell={ell}, r={r}")
    start = time.perf_counter()
    checked: dict = {}
    witness_n, witness_code = ell - 1, 0
    value = None
    for n in range(ell, n_max + 1):
        edges = n * (n - 1) // 2
        universe = r ** edges
        # r > 2 falls back to a plain python loop, so its practical budget
        # is far smaller than the vectorised two-colour path's.
        if universe > (budget if r == 2 else min(budget, 1 << 22)):
            break
        if r == 2:
            code = _first_clique_free_code(n, r, ell, _full_code_chunks(universe))
        else:
            code = _first_clique_free_code(n, r, ell, [range(universe)])
        checked[n] = universe
        if code is None:
            value = n
            break
        witness_n, witness_code = n, code
    return RamseyResult(kind="classic", ell=ell, r=r, n_max=n_max, value=value,
                        witness_n=witness_n, witness_code=witness_code,
                        checked=checked, elapsed=time.perf_counter() - start)


def _special_universe_size(n: int, r: int) -> int:
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    return (r - 1) ** (n - 1) * r ** ((n - 1) * (n - 2) // 2)


def _special_code_chunks_r2(n: int):
    """Two-colour codes with every vertex-0 edge blue, as increasing chunks.

    The n-1 edges at vertex 0 occupy the low bits of the lexicographic edge
    order, so the special universe is the free universe shifted up by n-1
    bits with those low bits forced to 1.
    """
    low = np.uint64((1 << (n - 1)) - 1)
    total = 1 << ((n - 1) * (n - 2) // 2)
    for lo in range(0, total, _CHUNK):
        block = np.arange(lo, min(lo + _CHUNK, total), dtype=np.uint64)
        yield (block << np.uint64(n - 1)) | low


def _special_codes_generic(n: int, r: int):
    """All special codes (vertex 0 missing colour 0) in increasing order."""
    scale = r ** (n - 1)
    bases = sorted(sum(d * r ** i for i, d in enumerate(apex))
                   for apex in product(range(1, r), repeat=n - 1))
    for rest in range(r ** ((n - 1) * (n - 2) // 2)):
        for base in bases:
            yield rest * scale + base


def compute_special_ramsey(ell: int, r: int = 2, n_max: int = 6,
                           budget: int = DEFAULT_RAMSEY_BUDGET) -> RamseyResult:
    """Least ``n`` such that every special r-colouring of K_n has a mono K_ell.

    Special means some vertex sees no edge of some colour; by relabelling it
    suffices to scan colourings where vertex 0 misses colour 0.  Witness
    bookkeeping matches :func:`compute_ramsey`.
    """
    if ell < 2 or r < 2:
        raise ValueError(f"need ell >= 2 and r >= 2, got ell={ell}, r={r}")
    start = time.perf_counter()
    checked: dict = {}
    witness_n, witness_code = None, None
    value = None
    for n in range(1, n_max + 1):
        universe = _special_universe_size(n, r)
        if universe > (budget if r == 2 else min(budget, 1 << 22)):
            break
        if n < ell:
            # Too few vertices for any K_ell: every special colouring
            # violates, and the lex-first one colours every apex edge 1.
            checked[n] = universe
            witness_n = n
            witness_code = (r ** (n - 1) - 1) // (r - 1)
            continue
        chunks = _special_code_chunks_r2(n) if r == 2 \
            else [_special_codes_generic(n, r)]
        code = _first_clique_free_code(n, r, ell, chunks)
        checked[n] = universe
        if code is None:
            value = n
            break
        witness_n, witness_code = n, code
    return RamseyResult(kind="special", ell=ell, r=r, n_max=n_max, value=value,
                        witness_n=witness_n, witness_code=witness_code,
                        checked=checked, elapsed=time.perf_counter() - start)


# --------------------------------------------------------------------------
# tightness audit


_BUILDERS = {
    "ex-triangle": ex_triangle,
    "ex-triangle-alt": ex_triangle_alt,
    "ex-bes-1": ex_bes_1,
    "ex-bes-2": ex_bes_2,
    "ex-bes-3": ex_bes_3,
}

# (construction, n, delta, solver mode, a proved bound covers this band)
AUDIT_INSTANCES = (
    ("ex-triangle", 12, 10, "mixed", True),
    ("ex-triangle", 30, 25, "mixed", True),
    ("ex-triangle-alt", 24, 21, "mixed", True),
    ("ex-bes-1", 9, 8, "single", False),
    ("ex-bes-1", 22, 16, "single", False),
    ("ex-bes-2", 25, 22, "single", False),
    ("ex-bes-3", 24, 20, "single", True),
)


def _audit_bound(construction: str, n: int, delta: int) -> int:
    if construction in ("ex-triangle", "ex-triangle-alt"):
        return extremal_min_formula(n, delta)
    if construction == "ex-bes-1":
        return (delta + 1) // 5
    if construction == "ex-bes-2":
        return (4 * delta - 3 * n + 1) // 3
    if construction == "ex-bes-3":
        return (5 * delta - 4 * n + 1) // 2
    raise ValueError(f"unknown construction {construction!r}")


def audit_tightness(budget: Optional[int] = None) -> list[AuditRow]:
    """Solve every pinned extremal instance exactly and compare to its bound.

    The solver optimum exceeding the closed-form bound would refute the
    matching upper-bound argument, so that direction raises AnomalyError;
    the rows record whether equality held and whether the search completed.
    """
    rows = []
    for construction, n, delta, mode, in_band in AUDIT_INSTANCES:
        g = _BUILDERS[construction](n, delta)
        start = time.perf_counter()
        if mode == "mixed":
            result = max_mixed_tiling(g, budget=budget)
        else:
            result = max_single_colour_tiling(g, budget=budget)
        bound = _audit_bound(construction, n, delta)
        if result.proved_optimal and result.optimum > bound:
            raise AnomalyError(
                f"{construction}({n},{delta}) packs {result.optimum} triangles, "
                f"above its closed-form cap {bound}", graph=g,
                detail={"construction": construction, "n": n, "delta": delta,
                        "optimum": result.optimum, "bound": bound})
        rows.append(AuditRow(construction=construction, n=n, delta=delta,
                             mode=mode, optimum=result.optimum, bound=bound,
                             proved_optimal=result.proved_optimal,
                             nodes_explored=result.nodes_explored,
                             theorem_equality=in_band,
                             elapsed=time.perf_counter() - start))
    return rows


# --------------------------------------------------------------------------
# open-question probe


def _bes_piece(n: int, delta: int) -> tuple[str, int]:
    if 17 * delta >= 15 * n:
        return "high", (delta + 1) // 5
    if 7 * delta >= 6 * n:
        return "mid", (4 * delta - 3 * n + 1) // 3
    return "low", (5 * delta - 4 * n + 1) // 2


def probe_question(n_values: Sequence[int] = (25,),
                   delta_values: Optional[Sequence[int]] = None,
                   samples_per_cell: int = 2, perturbed_per_cell: int = 1,
                   seed: int = 0, budget: Optional[int] = None) -> list[ProbeRecord]:
    """Hunt for hosts whose exact single-colour optimum beats the formulas.

    For each (n, delta) cell with n >= 25 and delta >= 4n/5, solves the
    admissible extremal constructions, seeded random minimum-degree hosts,
    and randomly recoloured (degree-preserving) copies of the constructions.
    A record with ``below_formula`` set would be a counterexample to the
    conjectured piecewise optimum; none is expected.
    """
    records: list[ProbeRecord] = []
    for n in n_values:
        if n < 25:
            raise ValueError(f"the probe grid starts at n=25, got n={n}")
        deltas = delta_values if delta_values is not None \
            else range(-(-4 * n // 5), n)
        for delta in deltas:
            if 5 * delta < 4 * n or delta > n - 1:
                raise ValueError(f"delta={delta} outside 4n/5..n-1 for n={n}")
            hosts: list[tuple[str, ColouredGraph]] = []
            for name, builder in _BUILDERS.items():
                if name in ("ex-triangle", "ex-triangle-alt"):
                    continue
                try:
                    hosts.append((name, builder(n, delta)))
                except ValueError:
                    continue
            for k in range(samples_per_cell):
                rng = np.random.default_rng(
                    np.random.SeedSequence(seed, spawn_key=(n, delta, 0, k)))
                hosts.append((f"random-{k}", random_min_degree_colouring(n, delta, rng)))
            base = hosts[0] if hosts and hosts[0][0].startswith("ex-") else None
            for k in range(perturbed_per_cell if base else 0):
                rng = np.random.default_rng(
                    np.random.SeedSequence(seed, spawn_key=(n, delta, 1, k)))
                hosts.append((f"perturbed-{base[0]}-{k}",
                              _recolour_edges(base[1], rng)))
            piece, value = _bes_piece(n, delta)
            for source, g in hosts:
                result = max_single_colour_tiling(g, budget=budget)
                records.append(ProbeRecord(
                    n=n, delta=delta, source=source, optimum=result.optimum,
                    proved_optimal=result.proved_optimal,
                    formula_high=(delta + 1) // 5,
                    formula_mid=(4 * delta - 3 * n + 1) // 3,
                    formula_low=(5 * delta - 4 * n + 1) // 2,
                    applicable_piece=piece, applicable_value=value,
                    below_formula=result.proved_optimal and result.optimum < value))
    return records


def _recolour_edges(g: ColouredGraph, rng, fraction: float = 0.1) -> ColouredGraph:
    """Flip the colour of a random edge subset; degrees are untouched."""
    edges = g.edges()
    flips = max(1, int(len(edges) * fraction))
    chosen = set(int(i) for i in rng.choice(len(edges), size=flips, replace=False))
    out = [(u, v, (c + 1) % g.r if i in chosen else c)
           for i, (u, v, c) in enumerate(edges)]
    return ColouredGraph(g.n, g.r, out)
