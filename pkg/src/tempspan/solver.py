"""Minimum temporal spanner computation.

Contents:

* forced-edge preprocessing (edges whose single removal breaks the
  requirement, hence members of every spanner),
* an exact desk-scale oracle with three engines: full subset enumeration
  (verification builds), branch-and-bound over removable edges, and a
  cut-generation loop on top of a MILP solver for larger instances,
* the two-source requirement variant,
* an XP algorithm for happy graphs parameterized by the vertex cover number
  of the underlying graph: enumerate per-root out-tree candidates through
  (template, placeholder map, leaf attachment) triples, combine across roots,
  select at most one extra edge per non-cover vertex, verify,
* the tree-plus-extras decomposition check for spanners.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping

from . import reach
from .reach import NONSTRICT, STRICT, Strictness, TemporalOutTree
from .tempgraph import Spanner, TemporalGraph, classify, underlying_graph


class RequirementNotSatisfied(Exception):
    pass


class InstanceTooLarge(Exception):
    pass


class NotHappy(Exception):
    pass


class NotTemporallyConnected(Exception):
    pass


# ---------------------------------------------------------------------------
# Connectivity requirements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AllPairs:
    """Every ordered vertex pair must stay connected."""


@dataclass(frozen=True)
class TwoSource:
    """Both sources must keep reaching every vertex; nothing else is required."""

    s1: int
    s2: int


ALL_PAIRS = AllPairs()


def requirement_holds(
    g: TemporalGraph,
    s: Strictness,
    requirement: AllPairs | TwoSource = ALL_PAIRS,
    kept: Iterable[int] | None = None,
) -> bool:
    if isinstance(requirement, TwoSource):
        return reach.reaches_all(g, requirement.s1, s, kept) and reach.reaches_all(
            g, requirement.s2, s, kept
        )
    return reach.is_tc(g, s, kept)


class _SubsetOracle:
    """Feasibility of edge subsets, pre-grouped for repeated queries.

    ``removed`` arguments are bytearrays of length m; flag 1 drops the edge.
    """

    def __init__(self, g: TemporalGraph, s: Strictness, requirement: AllPairs | TwoSource):
        self.g = g
        self.m = g.m
        self.n = g.vertex_count
        self.full = (1 << self.n) - 1
        self.strict = s is STRICT
        self.requirement = requirement
        groups: list[list[tuple[int, int, int]]] = []
        prev = None
        for i in g.label_order:
            e = g.edges[i]
            if e.t != prev:
                groups.append([])
                prev = e.t
            groups[-1].append((i, e.u, e.v))
        self.groups = groups
        self.labels = [e.t for e in g.edges]

    def _masks(self, removed: bytearray) -> list[int]:
        masks = [1 << v for v in range(self.n)]
        for group in self.groups:
            if len(group) == 1:
                i, u, v = group[0]
                if removed[i]:
                    continue
                x = masks[u] | masks[v]
                masks[u] = x
                masks[v] = x
            elif self.strict:
                snapshot: dict[int, int] = {}
                alive = [(u, v) for i, u, v in group if not removed[i]]
                for u, v in alive:
                    snapshot.setdefault(u, masks[u])
                    snapshot.setdefault(v, masks[v])
                for u, v in alive:
                    masks[v] |= snapshot[u]
                    masks[u] |= snapshot[v]
            else:
                alive = [(u, v) for i, u, v in group if not removed[i]]
                changed = True
                while changed:
                    changed = False
                    for u, v in alive:
                        x = masks[u] | masks[v]
                        if x != masks[u] or x != masks[v]:
                            masks[u] = masks[v] = x
                            changed = True
        return masks

    def _source_reaches_all(self, source: int, removed: bytearray) -> bool:
        INF = float("inf")
        arrival = [INF] * self.n
        arrival[source] = 0
        reached = 1
        strict = self.strict
        for group in self.groups:
            if strict:
                snapshot = {}
                for i, u, v in group:
                    if removed[i]:
                        continue
                    snapshot.setdefault(u, arrival[u])
                    snapshot.setdefault(v, arrival[v])
                for i, u, v in group:
                    if removed[i]:
                        continue
                    t = self.labels[i]
                    for a, b in ((u, v), (v, u)):
                        if snapshot[a] < t and t < arrival[b]:
                            if arrival[b] is INF:
                                reached += 1
                            arrival[b] = t
            else:
                alive = [(i, u, v) for i, u, v in group if not removed[i]]
                changed = True
                while changed:
                    changed = False
                    for i, u, v in alive:
                        t = self.labels[i]
                        for a, b in ((u, v), (v, u)):
                            if arrival[a] <= t and t < arrival[b]:
                                if arrival[b] is INF:
                                    reached += 1
                                arrival[b] = t
                                changed = True
        return reached == self.n

    def feasible(self, removed: bytearray) -> bool:
        if isinstance(self.requirement, TwoSource):
            return self._source_reaches_all(
                self.requirement.s1, removed
            ) and self._source_reaches_all(self.requirement.s2, removed)
        full = self.full
        return all(x == full for x in self._masks(removed))

    def failing_sources(self, removed: bytearray) -> list[int]:
        """Sources that cannot reach every vertex under the requirement."""
        if isinstance(self.requirement, TwoSource):
            return [
                s
                for s in (self.requirement.s1, self.requirement.s2)
                if not self._source_reaches_all(s, removed)
            ]
        good = self.full
        for mask in self._masks(removed):
            good &= mask
        return [u for u in range(self.n) if not (good >> u) & 1]


def _check_requirement(g: TemporalGraph, requirement: AllPairs | TwoSource) -> None:
    if isinstance(requirement, TwoSource):
        for x in (requirement.s1, requirement.s2):
            if not (0 <= x < g.vertex_count):
                raise ValueError(f"source {x} out of range")


def forced_edges(
    g: TemporalGraph,
    s: Strictness = STRICT,
    requirement: AllPairs | TwoSource = ALL_PAIRS,
) -> frozenset[int]:
    """Edges whose individual removal violates the requirement.

    Every spanner satisfying the requirement contains all of them: a spanner
    avoiding edge e is a subset of the graph minus e, and reachability is
    monotone under edge addition.
    """
    _check_requirement(g, requirement)
    oracle = _SubsetOracle(g, s, requirement)
    removed = bytearray(g.m)
    if not oracle.feasible(removed):
        raise RequirementNotSatisfied("graph does not satisfy the requirement")
    forced = []
    for i in range(g.m):
        removed[i] = 1
        if not oracle.feasible(removed):
            forced.append(i)
        removed[i] = 0
    return frozenset(forced)


# ---------------------------------------------------------------------------
# Exact oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolveResult:
    spanner: Spanner
    size: int
    optimal: bool
    within_budget: bool | None
    method: str


def _bnb_max_removal(
    oracle: _SubsetOracle,
    removable: list[int],
    target: int | None,
    blocks: tuple[dict[int, int], list[int]] | None = None,
) -> tuple[list[int], bool]:
    """Depth-first maximization of the removed-edge count.

    Returns (best removal set, hit_target).  With ``target`` set, the search
    stops as soon as a feasible removal of that size is found; an exhausted
    search then proves no such removal exists.  ``blocks`` supplies the
    decomposition bound: per-block caps on how many edges any feasible
    removal can take from each block.
    """
    removed = bytearray(oracle.m)
    best: list[int] = []
    cur: list[int] = []
    k = len(removable)
    hit = False
    if blocks is not None:
        block_of, caps = blocks
        nb = len(caps)
        rem = [0] * nb
        und = [0] * nb
        for i in removable:
            und[block_of[i]] += 1

    def rec(pos: int) -> None:
        nonlocal best, hit
        if hit:
            return
        if len(cur) > len(best):
            best = cur.copy()
            if target is not None and len(best) >= target:
                hit = True
                return
        remaining = k - pos
        if blocks is None:
            headroom = remaining
        else:
            headroom = sum(min(caps[j] - rem[j], und[j]) for j in range(nb))
        needed = (target if target is not None else len(best) + 1) - len(cur)
        if headroom < needed or remaining == 0:
            return
        rest = removable[pos:]
        for i in rest:
            removed[i] = 1
        all_rest_ok = oracle.feasible(removed)
        if all_rest_ok:
            cand = cur + rest
            if len(cand) > len(best):
                best = cand
                if target is not None and len(best) >= target:
                    hit = True
            for i in rest:
                removed[i] = 0
            return
        for i in rest:
            removed[i] = 0
        e = removable[pos]
        b = block_of[e] if blocks is not None else 0
        if blocks is not None:
            und[b] -= 1
        removed[e] = 1
        if oracle.feasible(removed):
            if blocks is not None:
                rem[b] += 1
            cur.append(e)
            rec(pos + 1)
            cur.pop()
            if blocks is not None:
                rem[b] -= 1
        removed[e] = 0
        rec(pos + 1)
        if blocks is not None:
            und[b] += 1

    rec(0)
    return best, hit


def _conflict_blocks(
    g: TemporalGraph,
    oracle: _SubsetOracle,
    removable: list[int],
    max_block: int = 12,
) -> tuple[dict[int, int], list[int]]:
    """Partition removable edges into local blocks and cap each block.

    Blocks are connected components of the shares-an-endpoint graph on the
    removable edges, after iteratively hiding the busiest vertex of any
    oversized component.  A block's cap is the largest feasible removal taken
    from the block alone (everything else kept); any feasible removal meets
    the block in at most that many edges, because subsets of feasible
    removals stay feasible.
    """
    hubs: set[int] = set()

    def components() -> list[list[int]]:
        parent = {i: i for i in removable}

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        anchor: dict[int, int] = {}
        for i in removable:
            e = g.edges[i]
            for x in (e.u, e.v):
                if x in hubs:
                    continue
                if x in anchor:
                    parent[find(i)] = find(anchor[x])
                else:
                    anchor[x] = i
        comps: dict[int, list[int]] = {}
        for i in removable:
            comps.setdefault(find(i), []).append(i)
        return [sorted(c) for c in sorted(comps.values())]

    while True:
        comps = components()
        big = [c for c in comps if len(c) > max_block]
        if not big:
            break
        degree: dict[int, int] = {}
        for i in big[0]:
            e = g.edges[i]
            for x in (e.u, e.v):
                if x not in hubs:
                    degree[x] = degree.get(x, 0) + 1
        if not degree:
            break  # every endpoint already hidden; accept the oversized block
        hubs.add(max(degree, key=lambda x: (degree[x], -x)))

    block_of: dict[int, int] = {}
    caps: list[int] = []
    for j, comp in enumerate(comps):
        for i in comp:
            block_of[i] = j
        if len(comp) == 1:
            caps.append(1)  # each removable edge is individually droppable
        else:
            removal, _ = _bnb_max_removal(oracle, comp, None)
            caps.append(len(removal))
    return block_of, caps


def _frontier_cut(
    g: TemporalGraph, s: Strictness, kept: Iterable[int], source: int
) -> frozenset[int]:
    """Edges outside ``kept`` that expand the temporal closure of ``source``.

    Any edge set under which ``source`` reaches everything must keep at least
    one of them: a path to a vertex outside the closure has a first edge not
    dominated by the closure, and that edge is usable from the closure,
    improves some arrival, and is not in ``kept``.
    """
    kept = set(kept)
    arrival, _ = reach._scan(g, source, 0, s, kept=kept)
    strict = s is STRICT
    cut = []
    for i, e in enumerate(g.edges):
        if i in kept:
            continue
        t = e.t
        for a, b in ((e.u, e.v), (e.v, e.u)):
            aa = arrival[a]
            if aa is None:
                continue
            usable = aa < t if strict else aa <= t
            if usable and (arrival[b] is None or arrival[b] > t):
                cut.append(i)
                break
    return frozenset(cut)


def _exact_by_cuts(
    g: TemporalGraph,
    s: Strictness,
    requirement: AllPairs | TwoSource,
    forced: frozenset[int],
    budget: int | None,
    max_iterations: int = 20_000,
) -> tuple[frozenset[int] | None, int, bool]:
    """Cut-generation exact engine.

    Alternates a MILP over collected covering cuts (sets of edges of which
    every spanner keeps at least one) with reachability checks.  An
    infeasible MILP solution is greedily repaired into a feasible incumbent,
    collecting one new cut per repair step; the loop ends when the MILP bound
    meets the incumbent.  Returns (kept set, size, proven optimal); with a
    budget it may return early, either with (None, bound, True) once the
    bound exceeds the budget or with an unproven incumbent within it.
    """
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    m = g.m
    oracle = _SubsetOracle(g, s, requirement)
    rows: list[frozenset[int]] = []
    seen_rows: set[frozenset[int]] = set()

    def remember(cut: frozenset[int]) -> None:
        if not cut:
            raise RuntimeError("empty frontier cut on an infeasible subset")
        if cut not in seen_rows:
            seen_rows.add(cut)
            rows.append(cut)

    if g.vertex_count >= 2:
        for v in range(g.vertex_count):
            remember(frozenset(g.incident[v]))
    c = np.ones(m)
    integrality = np.ones(m)
    lb = np.zeros(m)
    for i in forced:
        lb[i] = 1.0
    bounds = Bounds(lb, np.ones(m))
    best = _greedy_local_min(g, s, requirement)
    if budget is not None and len(best) <= budget:
        return best, len(best), False

    def repair(kept: frozenset[int]) -> frozenset[int]:
        """Grow an infeasible subset to feasibility, banking a cut per step."""
        work = set(kept)
        removed = bytearray(m)
        for i in range(m):
            if i not in work:
                removed[i] = 1
        while True:
            failing = oracle.failing_sources(removed)
            if not failing:
                return frozenset(work)
            first_cut: frozenset[int] | None = None
            for source in failing:
                cut = _frontier_cut(g, s, work, source)
                remember(cut)
                if first_cut is None:
                    first_cut = cut
            e = min(first_cut)
            work.add(e)
            removed[e] = 0

    for _ in range(max_iterations):
        a_mat = np.zeros((len(rows), m))
        for r, row in enumerate(rows):
            for i in row:
                a_mat[r, i] = 1.0
        res = milp(
            c=c,
            constraints=[LinearConstraint(a_mat, lb=np.ones(len(rows)), ub=np.inf)],
            integrality=integrality,
            bounds=bounds,
        )
        if res.status != 0:
            raise RuntimeError(f"MILP solve failed: {res.message}")
        bound = int(round(res.fun))
        if budget is not None and bound > budget:
            return None, bound, True
        kept = frozenset(i for i in range(m) if res.x[i] > 0.5)
        before = len(rows)
        repaired = repair(kept)
        if len(repaired) < len(best):
            best = repaired
        if len(best) == bound:
            return best, len(best), True
        if budget is not None and len(best) <= budget:
            return best, len(best), False
        if len(rows) == before:
            raise RuntimeError("cut generation stalled")
    raise RuntimeError("cut loop exceeded iteration limit")


def _exact_by_flow(
    g: TemporalGraph,
    s: Strictness,
    requirement: AllPairs | TwoSource,
    forced: frozenset[int],
    budget: int | None = None,
) -> tuple[frozenset[int] | None, int]:
    """Exact engine via one time-expanded multicommodity-flow MILP.

    One unit commodity per ordered source/target pair; traversal arcs are
    open only when the corresponding time edge is kept.  Flow variables stay
    continuous: for a fixed 0/1 edge choice the flow system is feasible
    exactly when every source reaches every vertex.  With a ``budget`` the
    size is additionally constrained, turning the solve into a decision;
    (None, budget) reports proven infeasibility.
    """
    import numpy as np
    from bisect import bisect_left, bisect_right
    from scipy import sparse
    from scipy.optimize import Bounds, LinearConstraint, milp

    m = g.m
    n = g.vertex_count
    strict = s is STRICT
    if isinstance(requirement, TwoSource):
        sources = sorted({requirement.s1, requirement.s2})
    else:
        sources = list(range(n))
    pairs = [(a, b) for a in sources for b in range(n) if b != a]

    events: list[list[int]] = [[] for _ in range(n)]
    for e in g.edges:
        events[e.u].append(e.t)
        events[e.v].append(e.t)
    events = [sorted(set(ts)) for ts in events]

    nid: dict[tuple[int, int], int] = {}
    for v in range(n):
        nid[(v, -1)] = len(nid)  # pre-time start node
        for k in range(len(events[v])):
            nid[(v, k)] = len(nid)
    node_count = len(nid)

    arcs: list[tuple[int, int, int]] = []  # (from, to, edge index or -1)
    for v in range(n):
        prev = nid[(v, -1)]
        for k in range(len(events[v])):
            arcs.append((prev, nid[(v, k)], -1))
            prev = nid[(v, k)]
    for i, e in enumerate(g.edges):
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if strict:
                k = bisect_left(events[a], e.t) - 1
            else:
                k = bisect_right(events[a], e.t) - 1
            dep = nid[(a, k)] if k >= 0 else nid[(a, -1)]
            dst = nid[(b, bisect_left(events[b], e.t))]
            arcs.append((dep, dst, i))
    n_arcs = len(arcs)

    # One unit commodity per ordered pair; f <= x capacity keeps the
    # relaxation tight at the price of more variables.
    n_vars = m + len(pairs) * n_arcs
    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    lo: list[float] = []
    hi: list[float] = []
    row = 0
    for ci, (a, b) in enumerate(pairs):
        base = m + ci * n_arcs
        supply = [0.0] * node_count
        supply[nid[(a, -1)]] = 1.0
        supply[nid[(b, len(events[b]) - 1)]] = -1.0
        for ai, (src, dst, _) in enumerate(arcs):
            rows.append(row + src)
            cols.append(base + ai)
            vals.append(1.0)
            rows.append(row + dst)
            cols.append(base + ai)
            vals.append(-1.0)
        lo.extend(supply)
        hi.extend(supply)
        row += node_count
        for ai, (_, _, ei) in enumerate(arcs):
            if ei < 0:
                continue
            rows.append(row)
            cols.append(base + ai)
            vals.append(1.0)
            rows.append(row)
            cols.append(ei)
            vals.append(-1.0)
            lo.append(-np.inf)
            hi.append(0.0)
            row += 1

    if budget is not None:
        for i in range(m):
            rows.append(row)
            cols.append(i)
            vals.append(1.0)
        lo.append(-np.inf)
        hi.append(float(budget))
        row += 1

    a_mat = sparse.csc_array(
        sparse.coo_array((vals, (rows, cols)), shape=(row, n_vars))
    )
    c = np.zeros(n_vars)
    c[:m] = 1.0
    integrality = np.zeros(n_vars)
    integrality[:m] = 1.0
    lb = np.zeros(n_vars)
    ub = np.ones(n_vars)
    for i in forced:
        lb[i] = 1.0
    res = milp(
        c=c,
        constraints=[LinearConstraint(a_mat, lb=np.array(lo), ub=np.array(hi))],
        integrality=integrality,
        bounds=Bounds(lb, ub),
    )
    if budget is not None and res.status == 2:
        return None, budget
    if res.status != 0:
        raise RuntimeError(f"MILP solve failed: {res.message}")
    kept = frozenset(i for i in range(m) if res.x[i] > 0.5)
    oracle = _SubsetOracle(g, s, requirement)
    removed = bytearray(m)
    for i in range(m):
        if i not in kept:
            removed[i] = 1
    if not oracle.feasible(removed):
        raise RuntimeError("flow MILP produced an infeasible edge set")
    return kept, len(kept)


def min_spanner_brute(
    g: TemporalGraph,
    s: Strictness = STRICT,
    requirement: AllPairs | TwoSource = ALL_PAIRS,
    cap: int = 18,
) -> SolveResult:
    """Full subset enumeration over removable edges; the verification oracle."""
    _check_requirement(g, requirement)
    oracle = _SubsetOracle(g, s, requirement)
    if not oracle.feasible(bytearray(g.m)):
        raise RequirementNotSatisfied("graph does not satisfy the requirement")
    forced = forced_edges(g, s, requirement)
    removable = [i for i in range(g.m) if i not in forced]
    r = len(removable)
    if r > cap:
        raise InstanceTooLarge(f"{r} removable edges exceed enumeration cap {cap}")
    removed = bytearray(g.m)
    best_mask = 0
    best_count = 0
    for mask in range(1 << r):
        count = mask.bit_count()
        if count <= best_count:
            continue
        for j in range(r):
            removed[removable[j]] = (mask >> j) & 1
        if oracle.feasible(removed):
            best_mask = mask
            best_count = count
    kept = frozenset(range(g.m)) - {removable[j] for j in range(r) if (best_mask >> j) & 1}
    return SolveResult(
        spanner=Spanner(g, kept),
        size=len(kept),
        optimal=True,
        within_budget=None,
        method="exact-brute",
    )


def min_spanner_exact(
    g: TemporalGraph,
    s: Strictness = STRICT,
    budget: int | None = None,
    requirement: AllPairs | TwoSource = ALL_PAIRS,
    cap: int = 40,
    engine: str = "auto",
) -> SolveResult:
    """Exact minimum spanner for the requirement, guarded by a removable-edge cap.

    With a ``budget``, runs in decision mode: the search may stop on any
    feasible solution of size at most the budget, or on a proof that none
    exists (``within_budget`` reports which).  ``engine`` is one of ``auto``,
    ``bnb``, ``cuts``.
    """
    _check_requirement(g, requirement)
    oracle = _SubsetOracle(g, s, requirement)
    if not oracle.feasible(bytearray(g.m)):
        raise RequirementNotSatisfied("graph does not satisfy the requirement")
    forced = forced_edges(g, s, requirement)
    removable = [i for i in range(g.m) if i not in forced]
    if len(removable) > cap:
        raise InstanceTooLarge(
            f"{len(removable)} removable edges exceed cap {cap}"
        )
    if engine == "auto":
        # Block-bounded branch and bound wins through the default desk-scale
        # cap; the flow MILP is the only engine with a chance beyond it.
        engine = "bnb" if len(removable) <= 40 else "flow"
    all_edges = frozenset(range(g.m))

    if budget is not None and g.m - budget > len(removable):
        # Even removing every removable edge keeps more than the budget.
        return SolveResult(
            spanner=Spanner(g, all_edges),
            size=g.m,
            optimal=False,
            within_budget=False,
            method=f"exact-{engine}",
        )

    if engine == "flow":
        kept, size = _exact_by_flow(g, s, requirement, forced, budget)
        if kept is None:
            return SolveResult(
                spanner=Spanner(g, all_edges),
                size=g.m,
                optimal=False,
                within_budget=False,
                method="exact-flow",
            )
        within = None if budget is None else size <= budget
        return SolveResult(
            spanner=Spanner(g, kept),
            size=size,
            optimal=budget is None,
            within_budget=within,
            method="exact-flow",
        )

    if engine == "cuts":
        kept, size, proven = _exact_by_cuts(g, s, requirement, forced, budget)
        if kept is None:
            return SolveResult(
                spanner=Spanner(g, all_edges),
                size=g.m,
                optimal=False,
                within_budget=False,
                method="exact-cuts",
            )
        within = None if budget is None else size <= budget
        return SolveResult(
            spanner=Spanner(g, kept),
            size=size,
            optimal=proven,
            within_budget=within,
            method="exact-cuts",
        )

    if engine != "bnb":
        raise ValueError(f"unknown engine {engine!r}")
    target = None if budget is None else g.m - budget
    blocks = _conflict_blocks(g, oracle, removable)
    order = sorted(removable, key=lambda i: (blocks[0][i], i))
    removed, hit = _bnb_max_removal(oracle, order, target, blocks)
    kept = all_edges - frozenset(removed)
    if budget is None:
        return SolveResult(
            spanner=Spanner(g, kept),
            size=len(kept),
            optimal=True,
            within_budget=None,
            method="exact-bnb",
        )
    return SolveResult(
        spanner=Spanner(g, kept),
        size=len(kept),
        optimal=False,
        within_budget=hit or len(kept) <= budget,
        method="exact-bnb",
    )


# ---------------------------------------------------------------------------
# Vertex cover
# ---------------------------------------------------------------------------


def min_vertex_cover(pairs: Iterable[tuple[int, int]], n: int | None = None) -> frozenset[int]:
    """A minimum vertex cover via bounded search-tree branching on an uncovered edge."""
    edges = sorted({(min(a, b), max(a, b)) for a, b in pairs})
    if n is not None:
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range")
    if not edges:
        return frozenset()

    # Greedy matching upper bound: both endpoints of a maximal matching.
    greedy: set[int] = set()
    for a, b in edges:
        if a not in greedy and b not in greedy:
            greedy.update((a, b))
    best = greedy

    cover: set[int] = set()

    def rec() -> None:
        nonlocal best
        if len(cover) >= len(best):
            return
        uncovered = next(((a, b) for a, b in edges if a not in cover and b not in cover), None)
        if uncovered is None:
            best = set(cover)
            return
        for w in uncovered:
            cover.add(w)
            rec()
            cover.remove(w)

    rec()
    return frozenset(best)


# ---------------------------------------------------------------------------
# Templates: search skeletons for the out-tree guessing step
# ---------------------------------------------------------------------------

Node = tuple[str, int]  # ("x", cover vertex) or ("p", placeholder id)


@dataclass(frozen=True)
class Template:
    """A small directed out-tree over cover vertices and placeholders.

    Placeholders stand for vertices outside the cover; their parents and
    children are always cover nodes, and every leaf is a cover node.
    """

    root: int
    arcs: tuple[tuple[Node, Node], ...]

    @property
    def nodes(self) -> frozenset[Node]:
        out = {("x", self.root)}
        for a, b in self.arcs:
            out.add(a)
            out.add(b)
        return frozenset(out)

    @property
    def cover_vertices(self) -> frozenset[int]:
        return frozenset(v for kind, v in self.nodes if kind == "x")

    @property
    def placeholder_count(self) -> int:
        return sum(1 for kind, _ in self.nodes if kind == "p")


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1 :]
        yield part + [[first]]


def _is_out_tree(root: Node, parent: dict[Node, Node]) -> bool:
    for node in parent:
        seen = {node}
        cur = node
        while cur != root:
            cur = parent.get(cur)
            if cur is None or cur in seen:
                return False
            seen.add(cur)
    return True


def enumerate_templates(cover: Iterable[int]) -> Iterator[Template]:
    """All templates over a cover set: every root, 0..d placeholders, every shape.

    Cover nodes may be any nonempty subset of the cover containing the root;
    each placeholder has a cover parent and at least one cover child, so a
    template never exceeds 2d nodes.
    """
    x_all = sorted(set(cover))
    if not x_all:
        raise ValueError("cover must be nonempty")
    for size in range(1, len(x_all) + 1):
        for sub in combinations(x_all, size):
            for root in sub:
                rest = [x for x in sub if x != root]
                for r in range(len(rest) + 1):
                    for grouped in combinations(rest, r):
                        free = [x for x in rest if x not in grouped]
                        for part in _set_partitions(list(grouped)):
                            groups = sorted((sorted(grp) for grp in part), key=lambda grp: grp[0])
                            slots = len(groups) + len(free)
                            for parents in product(sub, repeat=slots):
                                parent: dict[Node, Node] = {}
                                arcs: list[tuple[Node, Node]] = []
                                for k, grp in enumerate(groups):
                                    p: Node = ("p", k)
                                    parent[p] = ("x", parents[k])
                                    arcs.append((("x", parents[k]), p))
                                    for child in grp:
                                        parent[("x", child)] = p
                                        arcs.append((p, ("x", child)))
                                for j, child in enumerate(free):
                                    pv = parents[len(groups) + j]
                                    parent[("x", child)] = ("x", pv)
                                    arcs.append((("x", pv), ("x", child)))
                                if not _is_out_tree(("x", root), parent):
                                    continue
                                yield Template(root=root, arcs=tuple(sorted(arcs)))


def instantiate_template(
    g: TemporalGraph,
    template: Template,
    zeta: Mapping[int, int],
    attach: Mapping[int, int],
    root: int | None = None,
) -> frozenset[int] | None:
    """Map a template to concrete tree-candidate edges, or None if incompatible.

    Cover nodes name themselves; placeholder k names ``zeta[k]``; every vertex
    in ``attach`` hangs as a leaf under its cover vertex.  Incompatible means
    some required underlying edge is absent.  The result still has to pass
    :func:`reach.verify_out_tree` for label monotonicity.
    """
    if root is not None and root != template.root:
        raise ValueError("root does not match the template root")
    if len(set(zeta.values())) != len(zeta):
        raise ValueError("placeholder map must be injective")
    pairmap = g.index_by_pair

    def vertex_of(node: Node) -> int:
        kind, v = node
        return v if kind == "x" else zeta[v]

    indices: list[int] = []
    for a, b in template.arcs:
        va, vb = vertex_of(a), vertex_of(b)
        idx = pairmap.get((min(va, vb), max(va, vb)))
        if idx is None:
            return None
        indices.append(idx)
    for v, x in sorted(attach.items()):
        idx = pairmap.get((min(v, x), max(v, x)))
        if idx is None:
            return None
        indices.append(idx)
    return frozenset(indices)


# ---------------------------------------------------------------------------
# XP algorithm by vertex cover number (happy graphs)
# ---------------------------------------------------------------------------


def _candidate_trees(g: TemporalGraph, x_list: list[int], root: int) -> list[int]:
    """All temporal out-trees rooted at ``root``, as edge-index bitmasks.

    Enumerates (template, placeholder map, leaf attachment) with early
    pruning: a partial placeholder assignment dies as soon as a required
    underlying edge is missing or a label fails to increase.
    """
    n = g.vertex_count
    x_set = set(x_list)
    others = [v for v in range(n) if v not in x_set]
    pairmap = g.index_by_pair
    edges = g.edges

    # Leaf options: cover neighbours of each non-cover vertex.
    cover_adj: dict[int, list[tuple[int, int, int]]] = {}
    for v in others:
        opts = []
        for x in x_list:
            idx = pairmap.get((min(v, x), max(v, x)))
            if idx is not None:
                opts.append((x, idx, edges[idx].t))
        cover_adj[v] = opts

    results: set[int] = set()

    for template in enumerate_templates(x_list):
        if template.root != root or template.cover_vertices != frozenset(x_set):
            continue
        children: dict[Node, list[Node]] = {}
        for a, b in template.arcs:
            children.setdefault(a, []).append(b)
        root_node: Node = ("x", root)
        arc_order: list[tuple[Node, Node]] = []
        queue = [root_node]
        while queue:
            node = queue.pop(0)
            for child in sorted(children.get(node, [])):
                arc_order.append((node, child))
                queue.append(child)

        assign: dict[Node, int] = {("x", x): x for x in x_set}
        in_label: dict[Node, int] = {root_node: 0}
        skeleton: list[int] = []
        used: set[int] = set()

        def emit_trees() -> None:
            label_at = {assign[node]: lab for node, lab in in_label.items()}
            leaves = [v for v in others if v not in used]
            options: list[list[int]] = []
            for v in leaves:
                opts = [idx for x, idx, t in cover_adj[v] if t > label_at[x]]
                if not opts:
                    return
                options.append(opts)
            base = 0
            for i in skeleton:
                base |= 1 << i
            for combo in product(*options):
                mask = base
                for i in combo:
                    mask |= 1 << i
                results.add(mask)

        def rec(k: int) -> None:
            if k == len(arc_order):
                emit_trees()
                return
            pa, ch = arc_order[k]
            pv = assign[pa]
            plab = in_label[pa]
            if ch[0] == "x":
                candidates = [ch[1]]
            else:
                candidates = [w for w in others if w not in used]
            for w in candidates:
                idx = pairmap.get((min(pv, w), max(pv, w)))
                if idx is None:
                    continue
                t = edges[idx].t
                if t <= plab:
                    continue
                placeholder = ch[0] == "p"
                if placeholder:
                    assign[ch] = w
                    used.add(w)
                in_label[ch] = t
                skeleton.append(idx)
                rec(k + 1)
                skeleton.pop()
                del in_label[ch]
                if placeholder:
                    used.remove(w)
                    del assign[ch]

        rec(0)

    verified = []
    for mask in sorted(results):
        if reach.verify_out_tree(g, _mask_indices(mask), root):
            verified.append(mask)
    return verified


def _mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _sources_reaching_all(g: TemporalGraph, kept: Iterable[int]) -> int:
    """Bitmask of vertices that reach every vertex through ``kept``."""
    good = (1 << g.vertex_count) - 1
    for mask in reach.reach_masks(g, STRICT, kept):
        good &= mask
    return good


def select_extra_edges(
    g: TemporalGraph,
    tree_union: Iterable[int],
    cover: Iterable[int],
) -> dict[int, int | None] | None:
    """Per-vertex extra edge selection against a fixed union of out-trees.

    For each non-cover vertex independently: no extra if it already reaches
    everything through the union, otherwise the smallest-index incident edge
    restoring full reach.  Returns None if some vertex has no single-edge fix.
    """
    union = set(tree_union)
    x_set = set(cover)
    good = _sources_reaching_all(g, union)
    extras: dict[int, int | None] = {}
    for v in range(g.vertex_count):
        if v in x_set:
            continue
        if (good >> v) & 1:
            extras[v] = None
            continue
        for idx in g.incident[v]:
            if idx in union:
                continue
            if reach.reaches_all(g, v, STRICT, kept=union | {idx}):
                extras[v] = idx
                break
        else:
            return None
    return extras


def _greedy_local_min(
    g: TemporalGraph, s: Strictness, requirement: AllPairs | TwoSource = ALL_PAIRS
) -> frozenset[int]:
    """Drop edges one by one while the requirement survives."""
    oracle = _SubsetOracle(g, s, requirement)
    removed = bytearray(g.m)
    for i in range(g.m):
        removed[i] = 1
        if not oracle.feasible(removed):
            removed[i] = 0
    return frozenset(i for i in range(g.m) if not removed[i])


class _BudgetHit(Exception):
    pass


def min_spanner_xp_vc(g: TemporalGraph, budget: int | None = None) -> SolveResult:
    """Minimum spanner of a happy TC graph, parameterized by vertex cover number.

    Steps: minimum vertex cover X of the underlying graph; per root in X,
    enumerate candidate out-trees through (template, placeholder map, leaf
    attachment) triples; combine one candidate per root; add per-vertex extra
    edges; verify connectivity; keep the smallest union found.
    """
    if not classify(g).happy:
        raise NotHappy("the vertex-cover algorithm requires a happy graph")
    if not reach.is_tc(g, STRICT):
        raise NotTemporallyConnected("input graph is not temporally connected")
    n = g.vertex_count
    if n == 1:
        return SolveResult(Spanner(g, frozenset()), 0, True, None, "xp-vc")

    x_list = sorted(min_vertex_cover(underlying_graph(g), n))
    cand = {x: _candidate_trees(g, x_list, x) for x in x_list}
    # Most-constrained roots first narrows the union product early.
    levels = sorted(x_list, key=lambda x: (len(cand[x]), x))

    best_kept = _greedy_local_min(g, STRICT)
    best_size = len(best_kept)
    seen_unions: set[int] = set()
    completed = True

    x_set = set(x_list)

    def evaluate(acc: int) -> None:
        nonlocal best_kept, best_size
        if acc in seen_unions:
            return
        seen_unions.add(acc)
        union = _mask_indices(acc)
        good = _sources_reaching_all(g, union)
        incomplete = [
            v for v in range(n) if v not in x_set and not (good >> v) & 1
        ]
        # Extra edges never coincide across vertices, so each one costs 1.
        if len(union) + len(incomplete) >= best_size:
            return
        union_set = set(union)
        final = acc
        for v in incomplete:
            for idx in g.incident[v]:
                if idx in union_set:
                    continue
                if reach.reaches_all(g, v, STRICT, kept=union_set | {idx}):
                    final |= 1 << idx
                    break
            else:
                return
        size = final.bit_count()
        if size >= best_size:
            return
        kept = frozenset(_mask_indices(final))
        if not reach.is_tc(g, STRICT, kept):
            return
        best_kept, best_size = kept, size
        if budget is not None and best_size <= budget:
            raise _BudgetHit

    def rec(i: int, acc: int) -> None:
        if i == len(levels):
            evaluate(acc)
            return
        # Every remaining root still contributes a whole tree; the union must
        # absorb at least the cheapest candidate of each level.
        for j in range(i, len(levels)):
            cheapest = min((acc | c).bit_count() for c in cand[levels[j]])
            if cheapest >= best_size:
                return
        nxts = sorted({acc | c for c in cand[levels[i]]}, key=int.bit_count)
        for nxt in nxts:
            if nxt.bit_count() >= best_size:
                break
            rec(i + 1, nxt)

    try:
        rec(0, 0)
    except _BudgetHit:
        completed = False

    within = None if budget is None else best_size <= budget
    return SolveResult(
        spanner=Spanner(g, best_kept),
        size=best_size,
        optimal=completed,
        within_budget=within,
        method="xp-vc",
    )


# ---------------------------------------------------------------------------
# VC-tree decomposition of spanners
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VcTreeDecomposition:
    """At most d out-trees rooted in the cover plus one optional extra edge
    per non-cover vertex, jointly equal to the spanner."""

    trees: tuple[TemporalOutTree, ...]
    extras: tuple[tuple[int, int], ...]  # (vertex, edge index)


def vc_tree_decompose(
    spanner: Spanner, cover: Iterable[int]
) -> VcTreeDecomposition | None:
    """Reconstruct the tree-plus-extras shape of a spanner, or None.

    Non-cover vertices are grouped by the cover endpoint of the minimum edge
    of their foremost tree inside the spanner; each group contributes the
    foremost tree of the vertex whose grouping edge has the maximum label,
    re-rooted at the cover endpoint, plus one extra edge for every other
    group member.  Cover vertices heading no group contribute their own
    foremost tree.  Minimum spanners always decompose this way; None
    certifies the spanner is not minimum.
    """
    g = spanner.parent
    if not classify(g).happy:
        raise NotHappy("decomposition is defined for happy graphs")
    x_set = frozenset(cover)
    for a, b in g.underlying_pairs:
        if a not in x_set and b not in x_set:
            raise ValueError(f"{sorted(x_set)} is not a vertex cover: edge ({a}, {b})")
    kept = set(spanner.kept)
    if not reach.is_tc(g, STRICT, kept):
        raise NotTemporallyConnected("spanner is not temporally connected")

    groups: dict[int, list[int]] = {}
    min_edge: dict[int, int] = {}
    for v in range(g.vertex_count):
        if v in x_set:
            continue
        tree = reach.foremost_out_tree(g, v, STRICT, kept=kept)
        e = min(tree.tree_edges, key=lambda i: g.edges[i].t)
        edge = g.edges[e]
        assert v in (edge.u, edge.v), "minimum tree edge must touch its root"
        x = edge.other(v)
        min_edge[v] = e
        groups.setdefault(x, []).append(v)

    trees: list[TemporalOutTree] = []
    extras: list[tuple[int, int]] = []
    for x in sorted(x_set):
        members = groups.get(x)
        if members:
            anchor = max(members, key=lambda v: g.edges[min_edge[v]].t)
            tree = reach.foremost_out_tree(g, anchor, STRICT, kept=kept)
            trees.append(TemporalOutTree(root=x, tree_edges=tree.tree_edges))
            extras.extend((v, min_edge[v]) for v in members if v != anchor)
        else:
            tree = reach.foremost_out_tree(g, x, STRICT, kept=kept)
            trees.append(tree)

    union: set[int] = set()
    for tree in trees:
        union |= tree.tree_edges
    union |= {e for _, e in extras}
    if union != kept:
        return None
    return VcTreeDecomposition(trees=tuple(trees), extras=tuple(sorted(extras)))
