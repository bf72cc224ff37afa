"""Exhaustive search for filling permutations by chain propagation.

Fixing sigma(j) = k forces sigma(rev(k)) = adv(j), and iterating that
implication closes up after four assignments.  The search therefore
guesses one value per block of four symbols, pruning on bijectivity,
parity and the running face counts, and re-validates every solution it
reports.  A brute-force oracle over the full symmetric group covers
degrees up to 8 and exists so the two routes can be checked against each
other.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

from .arcs import curve_advance, reversal_pairing
from .permutations import Permutation
from .verify import FillingInstance, validate

__all__ = [
    "SearchLimitError",
    "SearchQuery",
    "SearchResult",
    "canonical_form",
    "enumerate_solutions",
    "naive_enumerate",
    "symmetry_group",
]


class SearchLimitError(Exception):
    """A search exceeded its node or time budget."""


class _StopSearch(Exception):
    pass


@dataclass(frozen=True)
class SearchQuery:
    genus: int
    punctures: int
    n: int
    dedup: bool = False
    limit: int | None = None
    naive: bool = False
    symmetry_prune: bool = False
    max_nodes: int = 10**9
    max_seconds: float = 600.0

    def __post_init__(self) -> None:
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and punctures must be non-negative")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive when given")


@dataclass(frozen=True)
class SearchResult:
    solutions: tuple[Permutation, ...]
    raw_count: int
    nodes_explored: int
    wall_time: float


def symmetry_group(n: int) -> list[Permutation]:
    """Basepoint-shift generators, one per curve.

    Each generator advances every arc label of one curve by one position,
    both orientations at once.  Conjugation by the group they generate
    (order n*n) maps filling permutations to filling permutations.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    m = 4 * n
    alpha = list(range(1, m + 1))
    beta = list(range(1, m + 1))
    for i in range(1, n + 1):
        nxt = i % n + 1
        alpha[2 * i - 2] = 2 * nxt - 1
        alpha[2 * n + 2 * i - 2] = 2 * n + 2 * nxt - 1
        beta[2 * i - 1] = 2 * nxt
        beta[2 * n + 2 * i - 1] = 2 * n + 2 * nxt
    return [Permutation(alpha), Permutation(beta)]


@lru_cache(maxsize=None)
def _symmetry_elements(n: int) -> tuple[Permutation, ...]:
    gen_a, gen_b = symmetry_group(n)
    elements = []
    pa = Permutation.identity(4 * n)
    for _ in range(n):
        pb = pa
        for _ in range(n):
            elements.append(pb)
            pb = gen_b.compose(pb)
        pa = gen_a.compose(pa)
    return tuple(elements)


def canonical_form(sigma: Permutation) -> Permutation:
    """Lexicographically smallest conjugate under the basepoint shifts."""
    if sigma.degree % 4:
        raise ValueError(f"degree {sigma.degree} is not a multiple of 4")
    n = sigma.degree // 4
    return min((sigma.conjugate(e) for e in _symmetry_elements(n)), key=lambda p: p.images)


def _deduplicate(raw: list[Permutation]) -> tuple[Permutation, ...]:
    return tuple(sorted({canonical_form(s) for s in raw}, key=lambda p: p.images))


def enumerate_solutions(query: SearchQuery) -> SearchResult:
    """All filling permutations for (genus, punctures, n).

    Deterministic: symbols are filled in increasing order and candidate
    values tried in increasing order, so repeated runs agree byte for
    byte.  Every solution is re-validated before being reported.
    """
    if query.naive:
        return naive_enumerate(query)
    start = time.perf_counter()
    deadline = start + query.max_seconds
    n = query.n
    degree = 4 * n
    target_faces = n + 2 - 2 * query.genus
    if target_faces < 1 or query.punctures > target_faces:
        return SearchResult((), 0, 0, time.perf_counter() - start)

    rev = reversal_pairing(n).images
    adv = curve_advance(n).images
    sigma = [0] * (degree + 1)
    used = [False] * (degree + 1)
    raw: list[Permutation] = []
    nodes = 0

    def propagate(j0: int, k0: int) -> tuple[bool, list[int]]:
        # Chase sigma(rev(k)) = adv(j) around its closed chain of four.
        placed: list[int] = []
        j, k = j0, k0
        while True:
            if sigma[j]:
                if sigma[j] == k:
                    break
                return False, placed
            if used[k]:
                return False, placed
            sigma[j] = k
            used[k] = True
            placed.append(j)
            j, k = rev[k - 1], adv[j - 1]
            if j == j0 and k == k0:
                break
        return True, placed

    def newly_closed(placed: list[int]) -> dict[int, int]:
        # Cycles that the fresh assignments just completed, keyed by
        # their smallest symbol so shared cycles count once.
        found: dict[int, int] = {}
        for j in placed:
            cur = j
            low = j
            length = 0
            closed = False
            while True:
                nxt = sigma[cur]
                if nxt == 0:
                    break
                length += 1
                if nxt == j:
                    closed = True
                    break
                low = min(low, nxt)
                cur = nxt
            if closed:
                found[low] = length
        return found

    def extend(pos: int, closed: int, closed_bigons: int, assigned: int) -> None:
        nonlocal nodes
        j = pos
        while j <= degree and sigma[j]:
            j += 1
        if j > degree:
            perm = Permutation(sigma[1:])
            if perm.cycle_count() == target_faces and perm.two_cycle_count() <= query.punctures:
                candidate = FillingInstance(perm, query.genus, query.punctures)
                if not validate(candidate).valid:
                    raise RuntimeError("internal inconsistency: search produced an invalid candidate")
                raw.append(perm)
                if query.limit is not None and len(raw) >= query.limit:
                    raise _StopSearch
            return
        if query.symmetry_prune and assigned == 0:
            values: tuple[int, ...] | range = (2, 2 * n + 2)
        elif j % 2:
            values = range(2, degree + 1, 2)
        else:
            values = range(1, degree, 2)
        for k in values:
            if used[k]:
                continue
            nodes += 1
            if nodes > query.max_nodes:
                raise SearchLimitError(f"node budget {query.max_nodes} exhausted")
            if nodes % 256 == 0 and time.perf_counter() > deadline:
                raise SearchLimitError(f"time budget {query.max_seconds}s exhausted")
            ok, placed = propagate(j, k)
            if ok:
                just = newly_closed(placed)
                total = closed + len(just)
                bigons = closed_bigons + sum(1 for length in just.values() if length == 2)
                done = assigned + len(placed)
                feasible = (
                    total <= target_faces
                    and bigons <= query.punctures
                    and not (total == target_faces and done < degree)
                )
                if feasible:
                    extend(j + 1, total, bigons, done)
            for s in placed:
                used[sigma[s]] = False
                sigma[s] = 0

    try:
        extend(1, 0, 0, 0)
    except _StopSearch:
        pass

    raw.sort(key=lambda p: p.images)
    solutions = _deduplicate(raw) if query.dedup else tuple(raw)
    return SearchResult(solutions, len(raw), nodes, time.perf_counter() - start)


def naive_enumerate(query: SearchQuery) -> SearchResult:
    """Filter the whole symmetric group through validation.

    Only feasible up to degree 8; exists as an independent oracle for the
    propagation search.
    """
    start = time.perf_counter()
    n = query.n
    degree = 4 * n
    if degree > 8:
        raise ValueError(f"naive enumeration is capped at degree 8, got {degree}")
    rev = reversal_pairing(n).images
    adv = curve_advance(n).images
    raw: list[Permutation] = []
    nodes = 0
    symbols = range(1, degree + 1)
    for images in itertools.permutations(symbols):
        nodes += 1
        if any((j + images[j - 1]) % 2 == 0 for j in symbols):
            continue
        if any(images[rev[images[j - 1] - 1] - 1] != adv[j - 1] for j in symbols):
            continue
        perm = Permutation(images)
        if validate(FillingInstance(perm, query.genus, query.punctures)).valid:
            raw.append(perm)
    raw.sort(key=lambda p: p.images)
    solutions = _deduplicate(raw) if query.dedup else tuple(raw)
    return SearchResult(solutions, len(raw), nodes, time.perf_counter() - start)
