"""Candidate enumeration, counterexample verification, and brute-force search.

The searched family consists of the subgraphs of the complete bipartite
graph on parts (p, q) with exactly e edges, identified with their support
(isolated vertices dropped) and excluding single complete bipartite blocks.
``enumerate_family`` walks every e-edge subset deterministically and yields
the members as trimmed graphs.

``verify_counterexample`` checks, for parameters p > 2, q > kp+2 and
e = p(q-k), that the pendant-shift graph strictly beats every one-vertex-
added member of the family.  The ordering is decided twice: exactly, by the
coefficientwise certificate / root brackets of :mod:`bfpcheck.exactpoly`,
and numerically by power iteration; any disagreement raises instead of
being folded into the verdict.

``brute_force_extremal`` is the desk-scale oracle: it computes the true
maximum of the spectral radius over the family by sweeping all subsets.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import GuardExceededError, RouteDisagreementError
from .exactpoly import (
    IntPolynomial,
    PositivityCertificate,
    RootBracket,
    candidate_cubic,
    check_hypotheses,
    compare_largest_roots,
    largest_real_root,
    pendant_cubic,
)
from .graphs import BipartiteGraph, DegreeSequence, build_ferrers, pendant_shift
from .spectral import spectral_radius_graph

__all__ = [
    "DEFAULT_MAX_SUBSETS",
    "SearchConfig",
    "Candidate",
    "CandidateSet",
    "one_vertex_added_candidates",
    "CandidateOutcome",
    "CounterexampleReport",
    "verify_counterexample",
    "enumerate_family",
    "canonical_form",
    "degree_sorted_masks",
    "is_one_vertex_added_form",
    "is_pendant_shift_form",
    "MaximizerInfo",
    "ExtremalSearchResult",
    "brute_force_extremal",
]

DEFAULT_MAX_SUBSETS = 5_000_000
ROUTE_DISAGREEMENT_LIMIT = 1e-6


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for family enumeration and brute-force search."""

    connected_only: bool = False
    dedup: bool = False
    max_subsets: int = DEFAULT_MAX_SUBSETS
    tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.max_subsets < 1:
            raise ValueError("max_subsets must be >= 1")


# --------------------------------------------------------------------------
# One-vertex-added candidates
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    """One-vertex-added candidate: index a and its row degree sequence."""

    a: int
    degrees: DegreeSequence


@dataclass(frozen=True)
class ColumnFamilyExclusion:
    """Arithmetic witness that no column-deficient member fits the family.

    A column-deficient graph on (p, t) would need its missing-edge count
    pt - e strictly between 0 and p.  With e divisible by p that count is
    p*(t - e/p), a multiple of p, so no integer t qualifies.
    """

    e: int
    p: int
    edges_per_row: int  # e / p, an integer under the hypotheses

    def witness(self) -> str:
        return (
            f"pt - {self.e} = {self.p}*(t - {self.edges_per_row}) is a multiple of "
            f"{self.p}; it cannot lie strictly between 0 and {self.p}"
        )

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "p": self.p,
            "edges_per_row": self.edges_per_row,
            "witness": self.witness(),
        }


@dataclass(frozen=True)
class CandidateSet:
    """The complete list of one-vertex-added members for (p, q, k)."""

    p: int
    q: int
    k: int
    e: int
    members: tuple[Candidate, ...]
    column_family_excluded: ColumnFamilyExclusion


def one_vertex_added_candidates(p: int, q: int, k: int) -> CandidateSet:
    """All one-vertex-added members of the (p, q, e = p(q-k)) family.

    There are exactly k of them, one per a = 0..k-1, with degree sequence
    ((q-a) repeated p-1 times, q-a-(k-a)p).  Column-deficient shapes are
    ruled out by an integrality check which is executed, not assumed.
    """
    check_hypotheses(p, q, k)
    e = p * (q - k)
    if e % p != 0:  # pragma: no cover - impossible by construction
        raise ArithmeticError("edge count must be divisible by p")
    exclusion = ColumnFamilyExclusion(e=e, p=p, edges_per_row=e // p)
    members = []
    for a in range(k):
        last = q - a - (k - a) * p
        degrees = DegreeSequence(tuple([q - a] * (p - 1) + [last]))
        if degrees.total != e:  # pragma: no cover - arithmetic identity
            raise ArithmeticError("candidate degree sum mismatch")
        members.append(Candidate(a=a, degrees=degrees))
    return CandidateSet(
        p=p, q=q, k=k, e=e, members=tuple(members), column_family_excluded=exclusion
    )


# --------------------------------------------------------------------------
# Counterexample verification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CandidateOutcome:
    """Per-candidate result of the pendant-shift versus candidate comparison."""

    a: int
    degrees: DegreeSequence
    cubic: IntPolynomial
    order: str  # candidate root versus pendant-shift root, expected "<"
    certificate: Optional[PositivityCertificate]
    rho: float

    def to_dict(self) -> dict:
        cert = None
        if self.certificate is not None:
            cert = {
                "positive": self.certificate.positive,
                "coefficients": list(self.certificate.difference.coefficient_strings()),
                "text": self.certificate.difference.text(),
            }
        return {
            "a": self.a,
            "degrees": list(self.degrees.entries),
            "cubic": {
                "text": self.cubic.text(),
                "coefficients": list(self.cubic.coefficient_strings()),
            },
            "order": self.order,
            "certificate": cert,
            "rho": _round12(self.rho),
        }


@dataclass(frozen=True)
class CounterexampleReport:
    """Full record of one (p, q, k) verification."""

    p: int
    q: int
    k: int
    e: int
    verdict: bool
    pm_degrees: DegreeSequence
    pm_cubic: IntPolynomial
    pm_bracket: RootBracket
    rho_pm: float
    route_gap: float
    candidates: tuple[CandidateOutcome, ...]
    column_family_excluded: ColumnFamilyExclusion
    brute_force: Optional["ExtremalSearchResult"] = None

    def best_candidate(self) -> CandidateOutcome:
        return max(self.candidates, key=lambda c: c.rho)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "e": self.e,
            "verdict": self.verdict,
            "pm": {
                "degrees": list(self.pm_degrees.entries),
                "parts": [self.p, self.q - self.k + 1],
                "rho": _round12(self.rho_pm),
                "rho_squared_bracket": self.pm_bracket.to_dict(),
                "cubic": {
                    "text": self.pm_cubic.text(),
                    "coefficients": list(self.pm_cubic.coefficient_strings()),
                },
            },
            "candidates": [c.to_dict() for c in self.candidates],
            "column_family_excluded": self.column_family_excluded.to_dict(),
            "route_gap": _round12(self.route_gap),
            "brute_force": self.brute_force.to_dict() if self.brute_force else None,
        }


def _round12(x: float) -> float:
    """Round to 12 significant digits so serialized reports are stable."""
    return float(f"{x:.12g}")


def verify_counterexample(
    p: int,
    q: int,
    k: int,
    config: SearchConfig | None = None,
    include_brute_force: bool = False,
) -> CounterexampleReport:
    """Check that the pendant-shift graph beats every one-vertex-added member.

    verdict is True exactly when the exact route orders every candidate root
    strictly below the pendant-shift root.  Floating spectral radii are
    attached as a cross-check; the two routes must agree or the function
    raises RouteDisagreementError.
    """
    check_hypotheses(p, q, k)
    config = config or SearchConfig()
    e = p * (q - k)

    cubic = pendant_cubic(p, q, k)
    bracket = largest_real_root(cubic)
    pm_graph = pendant_shift(p, q - k)
    rho_pm = spectral_radius_graph(pm_graph).rho

    route_gap = abs(math.sqrt(float(bracket.midpoint)) - rho_pm)
    if route_gap > ROUTE_DISAGREEMENT_LIMIT:
        raise RouteDisagreementError(
            f"exact bracket and power iteration disagree on rho by {route_gap:.3e} "
            f"at (p={p}, q={q}, k={k})"
        )

    candidate_set = one_vertex_added_candidates(p, q, k)
    outcomes = []
    numeric_all_below = True
    exact_all_below = True
    for candidate in candidate_set.members:
        fcubic = candidate_cubic(p, q, k, candidate.a)
        comparison = compare_largest_roots(fcubic, cubic)
        graph = build_ferrers(candidate.degrees)
        rho = spectral_radius_graph(graph).rho
        exact_all_below &= comparison.order == "<"
        numeric_all_below &= rho < rho_pm
        outcomes.append(
            CandidateOutcome(
                a=candidate.a,
                degrees=candidate.degrees,
                cubic=fcubic,
                order=comparison.order,
                certificate=comparison.certificate,
                rho=rho,
            )
        )
    if exact_all_below != numeric_all_below:
        raise RouteDisagreementError(
            f"exact verdict {exact_all_below} but numeric verdict {numeric_all_below} "
            f"at (p={p}, q={q}, k={k})"
        )

    brute = None
    if include_brute_force:
        brute = brute_force_extremal(p, q, e, config)

    return CounterexampleReport(
        p=p,
        q=q,
        k=k,
        e=e,
        verdict=exact_all_below,
        pm_degrees=pm_graph.degrees,
        pm_cubic=cubic,
        pm_bracket=bracket,
        rho_pm=rho_pm,
        route_gap=route_gap,
        candidates=tuple(outcomes),
        column_family_excluded=candidate_set.column_family_excluded,
        brute_force=brute,
    )


# --------------------------------------------------------------------------
# Family enumeration
# --------------------------------------------------------------------------

def enumerate_family(
    p: int,
    q: int,
    e: int,
    config: SearchConfig | None = None,
    part: tuple[int, int] | None = None,
) -> Iterator[BipartiteGraph]:
    """Yield the members of the (p, q, e) family as trimmed graphs.

    Walks every e-edge subset of the complete graph's edge set in a fixed
    order (ascending lexicographic order of the removed-edge index set),
    drops empty rows and columns, and skips supports that form a single
    complete bipartite block.  ``part=(i, n)`` keeps every n-th subset
    starting at offset i, which partitions the stream deterministically.
    """
    for _, graph in _enumerate_indexed(p, q, e, config, part):
        yield graph


def _enumerate_indexed(
    p: int,
    q: int,
    e: int,
    config: SearchConfig | None = None,
    part: tuple[int, int] | None = None,
) -> Iterator[tuple[int, BipartiteGraph]]:
    """Family members paired with their global subset index in the stream."""
    config = config or SearchConfig()
    if p < 1 or q < 1:
        raise ValueError("part sizes must be >= 1")
    if e < 1 or e >= p * q:
        return
    total = math.comb(p * q, e)
    if total > config.max_subsets:
        raise GuardExceededError(
            f"C({p * q}, {e}) = {total} subsets exceed the cap {config.max_subsets}"
        )
    removed = p * q - e
    combos = enumerate(itertools.combinations(range(p * q), removed))
    if part is not None:
        offset, step = part
        if step < 1 or not 0 <= offset < step:
            raise ValueError(f"bad partition {part!r}")
        combos = itertools.islice(combos, offset, None, step)

    full = (1 << q) - 1
    seen: set[tuple[tuple[tuple[int, ...], ...], int]] = set()
    for index, removal in combos:
        masks = [full] * p
        for idx in removal:
            masks[idx // q] &= ~(1 << (idx % q))
        graph = _trimmed_from_masks(masks, q)
        if graph is None:
            continue
        if graph.edge_count == graph.p * graph.q:
            continue  # complete bipartite support
        if config.connected_only and not graph.is_connected():
            continue
        if config.dedup:
            key = (canonical_form(graph), graph.q)
            if key in seen:
                continue
            seen.add(key)
        yield index, graph


def _trimmed_from_masks(masks: list[int], q: int) -> Optional[BipartiteGraph]:
    """Trim empty rows/columns from raw row masks; None when nothing is left."""
    rows = [m for m in masks if m]
    if not rows:
        return None
    union = 0
    for m in rows:
        union |= m
    if union == (1 << q) - 1:
        return BipartiteGraph.from_masks(q, rows)
    cols = []
    u = union
    while u:
        cols.append((u & -u).bit_length() - 1)
        u &= u - 1
    new_rows = []
    for m in rows:
        nm = 0
        for new_j, old_j in enumerate(cols):
            if (m >> old_j) & 1:
                nm |= 1 << new_j
        new_rows.append(nm)
    return BipartiteGraph.from_masks(len(cols), new_rows)


# --------------------------------------------------------------------------
# Canonical forms and family-shape detectors
# --------------------------------------------------------------------------

def canonical_form(graph: BipartiteGraph) -> tuple[tuple[int, ...], ...]:
    """Isomorphism-invariant form: the lexicographically maximal biadjacency
    over all row and column permutations.

    For a fixed row order the best column order is the descending sort of
    the column vectors, so the maximum is taken over row permutations only.
    Feasible at desk scale (small p); guarded against misuse on wide parts.
    """
    if graph.p > 8:
        raise ValueError("canonical_form is desk-scale only (p <= 8)")
    matrix = graph.biadjacency
    best: tuple[tuple[int, ...], ...] | None = None
    for perm in itertools.permutations(matrix):
        cols = sorted(
            (tuple(row[j] for row in perm) for j in range(graph.q)), reverse=True
        )
        candidate = tuple(tuple(col[i] for col in cols) for i in range(graph.p))
        if best is None or candidate > best:
            best = candidate
    return best


def degree_sorted_masks(graph: BipartiteGraph) -> tuple[int, ...]:
    """Row masks after sorting rows and columns by descending degree.

    For graphs isomorphic to a left-justified diagram this recovers the
    diagram itself: equal-degree rows (and equal-degree columns) of such a
    graph are identical, so tie order cannot matter.
    """
    order = sorted(range(graph.q), key=lambda j: (-sum((m >> j) & 1 for m in graph.masks), j))
    remapped = []
    for m in graph.masks:
        nm = 0
        for new_j, old_j in enumerate(order):
            if (m >> old_j) & 1:
                nm |= 1 << new_j
        remapped.append(nm)
    remapped.sort(key=lambda m: -m.bit_count())
    return tuple(remapped)


def _ferrers_masks(degrees: list[int]) -> tuple[int, ...]:
    return tuple((1 << d) - 1 for d in degrees)


def is_one_vertex_added_form(graph: BipartiteGraph) -> bool:
    """True when a trimmed graph is a complete bipartite block plus one
    partially-attached vertex (on either side).

    Row shape: all rows full except one, which is non-empty.  Column shape:
    all columns full except one.  The input must already be trimmed.
    """
    full = (1 << graph.q) - 1
    full_rows = sum(1 for m in graph.masks if m == full)
    if full_rows == graph.p - 1:
        return True
    and_mask = full
    for m in graph.masks:
        and_mask &= m
    return and_mask.bit_count() == graph.q - 1


def is_pendant_shift_form(graph: BipartiteGraph) -> bool:
    """True when a trimmed graph is a pendant-shift graph in either
    orientation: degree sequence (n, (n-1)^(m-2), n-2) on shape (m, n)."""
    for g in (graph, graph.transpose()):
        m, n = g.p, g.q
        if m < 2 or n < 3:
            continue
        target = [n] + [n - 1] * (m - 2) + [n - 2]
        if degree_sorted_masks(g) == _ferrers_masks(target):
            return True
    return False


# --------------------------------------------------------------------------
# Brute-force extremal search
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MaximizerInfo:
    """One graph attaining (within tol) the maximal spectral radius."""

    graph: BipartiteGraph
    rho: float
    connected: bool
    one_vertex_added: bool
    pendant_form: bool

    def to_dict(self) -> dict:
        return {
            "parts": [self.graph.p, self.graph.q],
            "row_degrees": sorted(self.graph.row_degrees, reverse=True),
            "text": self.graph.to_text(),
            "rho": _round12(self.rho),
            "connected": self.connected,
            "one_vertex_added": self.one_vertex_added,
            "pendant_form": self.pendant_form,
        }


@dataclass(frozen=True)
class ExtremalSearchResult:
    """Outcome of a full sweep over the (p, q, e) family."""

    p: int
    q: int
    e: int
    rho_max: float
    maximizers: tuple[MaximizerInfo, ...]
    enumerated: int
    any_one_vertex_added: bool
    pendant_form_present: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "e": self.e,
            "rho_max": _round12(self.rho_max) if self.enumerated else None,
            "enumerated": self.enumerated,
            "any_one_vertex_added": self.any_one_vertex_added,
            "pendant_form_present": self.pendant_form_present,
            "maximizers": [m.to_dict() for m in self.maximizers],
        }


def _search_partition(args) -> tuple[int, float, list[tuple[int, int, tuple[int, ...], float]]]:
    """Sweep one deterministic slice of the subset stream.

    Returns (count, local max, entries), each entry carrying the global
    subset index so merged results are ordered independently of the worker
    count.
    """
    p, q, e, config, part = args
    count = 0
    local_max = float("-inf")
    kept: list[tuple[int, int, tuple[int, ...], float]] = []
    for index, graph in _enumerate_indexed(p, q, e, config, part=part):
        rho = spectral_radius_graph(graph).rho
        count += 1
        if rho > local_max:
            local_max = rho
            kept = [k for k in kept if k[3] >= local_max - config.tol]
        if rho >= local_max - config.tol:
            kept.append((index, graph.q, graph.masks, rho))
    return count, local_max, kept


def brute_force_extremal(
    p: int,
    q: int,
    e: int,
    config: SearchConfig | None = None,
    workers: int = 1,
) -> ExtremalSearchResult:
    """Maximize the spectral radius over the (p, q, e) family by exhaustion.

    Returns every member within ``config.tol`` of the maximum, annotated
    with connectivity and family-shape flags.  The reduction is a pure max,
    so partitioned (multi-worker) runs return the same result as serial
    ones.
    """
    config = config or SearchConfig()
    if workers <= 1:
        partials = [_search_partition((p, q, e, config, None))]
    else:
        jobs = [(p, q, e, config, (i, workers)) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_search_partition, jobs))

    enumerated = sum(count for count, _, _ in partials)
    if enumerated == 0:
        return ExtremalSearchResult(
            p=p, q=q, e=e, rho_max=float("nan"), maximizers=(),
            enumerated=0, any_one_vertex_added=False, pendant_form_present=False,
        )
    rho_max = max(local for _, local, _ in partials)
    merged = []
    for _, _, kept in partials:
        for index, gq, masks, rho in kept:
            if rho >= rho_max - config.tol:
                merged.append((index, gq, masks, rho))
    merged.sort(key=lambda item: item[0])

    maximizers = []
    any_ova = False
    any_pendant = False
    for _, gq, masks, rho in merged:
        graph = BipartiteGraph.from_masks(gq, masks)
        ova = is_one_vertex_added_form(graph)
        pend = is_pendant_shift_form(graph)
        any_ova |= ova
        any_pendant |= pend
        maximizers.append(
            MaximizerInfo(
                graph=graph,
                rho=rho,
                connected=graph.is_connected(),
                one_vertex_added=ova,
                pendant_form=pend,
            )
        )
    return ExtremalSearchResult(
        p=p,
        q=q,
        e=e,
        rho_max=rho_max,
        maximizers=tuple(maximizers),
        enumerated=enumerated,
        any_one_vertex_added=any_ova,
        pendant_form_present=any_pendant,
    )
