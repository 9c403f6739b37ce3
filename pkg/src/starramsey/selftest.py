"""Desk-scale acceptance grid: every closed form checked against searches and constructions."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable

import numpy as np

from .arrow import (
    SearchBudget,
    find_mono_star,
    min_degree_search,
    ramsey_search,
    regular_ramsey_search,
    star_critical_search,
)
from .construct import audit_witness, regular_nonarrowing_witness, star_critical_witness
from .errors import DegenerateBranch
from .factorize import hamiltonian_decomposition, one_factorization, star_free_edge_bound
from .formulas import (
    Branch,
    threshold_chain,
    min_degree_threshold_f,
    ramsey_stars,
    regular_ramsey_stars,
    regular_threshold_g,
    star_critical_stars,
)
from .types import EdgeColoring, Graph, NotArrows, StarParams

GRID_SIZES = range(2, 7)
GRID_T = (2, 3, 4)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{status}] {self.number}. {self.title}: {self.detail} [{self.seconds:.2f}s{limit}]"


def grid():
    for t in GRID_T:
        for sizes in product(GRID_SIZES, repeat=t):
            yield StarParams(sizes)


def _expected_values(sizes: tuple[int, ...], n: int) -> dict[str, int]:
    excess = sum(sizes) - len(sizes)
    k = sum(1 for m in sizes if m % 2 == 0)
    even2 = k >= 2 and k % 2 == 0
    return {
        "r": excess + 1 if even2 else excess + 2,
        "r_star": excess + 1 - k // 2 if even2 else 1,
        "rr": excess if even2 else excess + 1,
        "g": excess if (n % 2 == 1 and even2) else excess + 1,
        "f": excess + 1 if (k == 0 or n % 2 == 0) else excess,
    }


def criterion_formula_grid() -> tuple[bool, str]:
    failures = []
    checked = 0
    for p in grid():
        r = ramsey_stars(p)
        for n in (r, r + 1):
            want = _expected_values(p.sizes, n)
            g_rep, f_rep = regular_threshold_g(p, n), min_degree_threshold_f(p, n)
            got = {
                "r": r,
                "r_star": star_critical_stars(p),
                "rr": regular_ramsey_stars(p),
                "g": g_rep.value,
                "f": f_rep.value,
            }
            if got != want:
                failures.append((p.sizes, n, got, want))
            if not (g_rep.consistent() and f_rep.consistent()):
                failures.append((p.sizes, n, "branch"))
            checked += 1
        r_star, rr, r_again = threshold_chain(p)
        if not 1 <= r_star <= rr <= r_again - 1:
            failures.append((p.sizes, "chain"))
        if regular_threshold_g(p, r).value != rr:
            failures.append((p.sizes, "g(N) != rr"))
        rev = StarParams(p.sizes[::-1])
        if (ramsey_stars(rev), star_critical_stars(rev), regular_ramsey_stars(rev)) != (r, r_star, rr):
            failures.append((p.sizes, "permutation"))
    if failures:
        return False, f"{len(failures)} mismatches, first {failures[0]}"
    return True, f"{checked} (tuple, n) points agree; chain holds everywhere"


RAMSEY_CASES = [((2, 2), 3), ((2, 3), 5), ((3, 3), 6), ((2, 2, 2), 5)]
STAR_CRITICAL_CASES = [((2, 2), 2), ((3, 3), 1), ((2, 2, 3), 4)]
REGULAR_CASES = [((2, 2), 2), ((2, 3), 4), ((2, 2, 2), 4)]
MIN_DEGREE_CASES = [((2, 2), 4), ((2, 2), 5)]


def _agreement(cases, oracle: Callable, formula: Callable) -> tuple[bool, str]:
    rows = []
    ok = True
    for sizes, expected in cases:
        p = StarParams(sizes)
        got, want = oracle(p), formula(p)
        good = got == want == expected
        ok &= good
        rows.append(f"{sizes}->{got}{'' if good else f' (formula {want}, expected {expected})'}")
    return ok, ", ".join(rows)


def criterion_ramsey(budget: SearchBudget) -> tuple[bool, str]:
    return _agreement(RAMSEY_CASES, lambda p: ramsey_search(p, 8, budget), ramsey_stars)


def criterion_star_critical(budget: SearchBudget) -> tuple[bool, str]:
    return _agreement(STAR_CRITICAL_CASES, lambda p: star_critical_search(p, budget), star_critical_stars)


def criterion_regular(budget: SearchBudget) -> tuple[bool, str]:
    return _agreement(REGULAR_CASES, lambda p: regular_ramsey_search(p, budget), regular_ramsey_stars)


def criterion_min_degree(budget: SearchBudget) -> tuple[bool, str]:
    rows, ok = [], True
    for sizes, n in MIN_DEGREE_CASES:
        p = StarParams(sizes)
        got, want = min_degree_search(p, n, budget), min_degree_threshold_f(p, n).value
        ok &= got == want
        rows.append(f"{sizes},n={n}->{got} (formula {want})")
    return ok, ", ".join(rows)


def _regular_degree(p: StarParams, n: int) -> int:
    excess, k = p.total - p.t, p.k
    if n % 2 == 0 or k == 0:
        return excess
    return excess - 1 if k % 2 else excess - 2


def criterion_constructions() -> tuple[bool, str]:
    failures = []
    star_critical = regular = degenerate = 0
    for p in grid():
        N = ramsey_stars(p)
        k = p.k
        if k >= 2 and k % 2 == 0:
            c = star_critical_witness(p)
            rep = audit_witness(c, p)
            host = c.host
            v = 0
            others_complete = all((a, b) in host.edges for a, b in combinations(range(1, N), 2))
            if not (rep.ok and host.n == N and host.degree(v) == N - 1 - k // 2 and others_complete):
                failures.append(("star-critical", p.sizes))
            star_critical += 1
        for n in (N, N + 1, N + 2):
            try:
                c = regular_nonarrowing_witness(p, n)
            except DegenerateBranch:
                degenerate += 1
                continue
            rep = audit_witness(c, p)
            if not (rep.ok and c.host.n == n and c.host.is_regular(_regular_degree(p, n))):
                failures.append(("regular", p.sizes, n))
            regular += 1
    if failures:
        return False, f"{len(failures)} failed audits, first {failures[0]}"
    return True, (
        f"{star_critical} star-critical and {regular} regular witnesses audited; "
        f"{degenerate} degenerate branch points skipped"
    )


def _partition_check(n: int, parts: list[list[tuple[int, int]]]) -> bool:
    seen = {}
    for idx, part in enumerate(parts):
        for u, v in part:
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                return False
            seen[key] = idx
    return len(seen) == n * (n - 1) // 2


def brute_force_star_free_max(n: int) -> dict[int, int]:
    """``{s: max edges over all graphs on n vertices with max degree <= s-1}`` by full enumeration."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    inc = np.zeros((m, n), dtype=np.int32)
    for idx, (u, v) in enumerate(pairs):
        inc[idx, u] = inc[idx, v] = 1
    best = {s: 0 for s in range(1, n)}
    chunk = 1 << 16
    for lo in range(0, 1 << m, chunk):
        masks = np.arange(lo, min(lo + chunk, 1 << m), dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(m)) & 1).astype(np.int32)
        maxdeg = (bits @ inc).max(axis=1) if n else np.zeros(len(masks), dtype=np.int32)
        counts = bits.sum(axis=1)
        for s in range(1, n):
            ok = counts[maxdeg <= s - 1]
            if ok.size:
                best[s] = max(best[s], int(ok.max()))
    return best


def criterion_decompositions() -> tuple[bool, str]:
    failures = []
    for n in (2, 4, 6, 8, 10):
        dec = one_factorization(n)
        parts = [list(p.edges) for p in dec.parts]
        perfect = all(sorted(u for e in part for u in e) == list(range(n)) for part in parts)
        if not (len(parts) == n - 1 and perfect and _partition_check(n, parts)):
            failures.append(("1-factorization", n))
    for n in (3, 5, 7, 9, 11):
        plan = hamiltonian_decomposition(n)
        parts = []
        for cyc in plan.cycles:
            if sorted(cyc) != list(range(n)):
                failures.append(("hamiltonian spans", n))
            parts.append([(cyc[i], cyc[(i + 1) % n]) for i in range(n)])
        if not (len(parts) == (n - 1) // 2 and _partition_check(n, parts)):
            failures.append(("hamiltonian partition", n))
    bound_points = 0
    for n in range(2, 8):
        brute = brute_force_star_free_max(n)
        for s, value in brute.items():
            bound_points += 1
            if star_free_edge_bound(n, s) != value:
                failures.append(("edge bound", n, s, value))
    if failures:
        return False, f"{len(failures)} failures, first {failures[0]}"
    return True, f"10 decompositions partition K_n; edge bound matches brute force at {bound_points} (n, s) points"


def criterion_counting_bound(budget: SearchBudget) -> tuple[bool, str]:
    checked = violations = 0
    for sizes, _ in STAR_CRITICAL_CASES:
        p = StarParams(sizes)
        N = ramsey_stars(p)
        k = p.k
        if not (k >= 2 and k % 2 == 0 and N % 2 == 1):
            continue
        trace: list = []
        star_critical_search(p, budget, trace=trace)
        for _, verdict in trace:
            if isinstance(verdict, NotArrows):
                checked += 1
                if 2 * verdict.certificate.host.e > N * (N - 1) - k:
                    violations += 1
    ok = violations == 0 and checked > 0
    return ok, f"{checked} certificates checked, {violations} violations"


def naive_has_mono_star(c: EdgeColoring, p: StarParams) -> bool:
    for v in range(c.host.n):
        for color, m in enumerate(p.sizes, start=1):
            count = sum(1 for (a, b), col in c.assignment.items() if col == color and v in (a, b))
            if count >= m:
                return True
    return False


def random_coloring(rng: random.Random) -> tuple[EdgeColoring, StarParams]:
    n = rng.randint(1, 8)
    t = rng.randint(2, 4)
    density = rng.random()
    edges = [e for e in combinations(range(n), 2) if rng.random() < density]
    p = StarParams(tuple(rng.randint(2, 4) for _ in range(t)))
    assignment = {e: rng.randint(1, t) for e in edges}
    return EdgeColoring(Graph(n, frozenset(edges)), t, assignment), p


def criterion_soundness_fuzz(trials: int = 10_000, seed: int = 20221) -> tuple[bool, str]:
    rng = random.Random(seed)
    mismatches = hits = 0
    for _ in range(trials):
        c, p = random_coloring(rng)
        found = find_mono_star(c, p)
        naive = naive_has_mono_star(c, p)
        if (found is not None) != naive:
            mismatches += 1
        elif found is not None:
            hits += 1
            v, color = found
            if c.color_class(color).degree(v) < p.sizes[color - 1]:
                mismatches += 1
    return mismatches == 0, f"{trials} colorings, {hits} with a star, {mismatches} mismatches"


def criteria(budget: SearchBudget | None = None):
    budget = budget or SearchBudget(max_nodes=10**8, max_seconds=300)
    return [
        (1, "formula grid and chain", 1.0, criterion_formula_grid),
        (2, "Ramsey oracle agreement", 60.0, lambda: criterion_ramsey(budget)),
        (3, "star-critical oracle agreement", 120.0, lambda: criterion_star_critical(budget)),
        (4, "regular Ramsey oracle agreement", 300.0, lambda: criterion_regular(budget)),
        (5, "min-degree oracle agreement", 300.0, lambda: criterion_min_degree(budget)),
        (6, "construction audits", None, criterion_constructions),
        (7, "decomposition invariants and edge bound", None, criterion_decompositions),
        (8, "counting bound on certificates", None, lambda: criterion_counting_bound(budget)),
        (9, "soundness fuzz", None, criterion_soundness_fuzz),
    ]


def run_criterion(number: int, title: str, limit: float | None, func: Callable) -> CriterionResult:
    start = time.perf_counter()
    try:
        passed, detail = func()
    except Exception as exc:  # a crash is a failed criterion, reported like the rest
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if limit is not None and seconds > limit:
        passed = False
        detail += f"; exceeded time limit {limit:g}s"
    return CriterionResult(number, title, passed, detail, seconds, limit)


def run_all(budget: SearchBudget | None = None, echo: Callable[[str], None] | None = print) -> list[CriterionResult]:
    results = []
    for entry in criteria(budget):
        res = run_criterion(*entry)
        if echo:
            echo(res.line())
        results.append(res)
    return results
