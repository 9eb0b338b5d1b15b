"""Temporal reachability, connectivity testing, and foremost out-trees.

All algorithms are single chronological sweeps over the edges sorted by
label.  Edges sharing a label are processed as a group: under strict
semantics a group sees only pre-group arrivals (equal labels cannot chain),
under non-strict semantics the group is iterated to a fixpoint.

``None`` is the unreachable sentinel throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .tempgraph import TemporalGraph


class Strictness(Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"


STRICT = Strictness.STRICT
NONSTRICT = Strictness.NONSTRICT


class RootNotSpanning(Exception):
    """The requested root cannot reach every vertex."""


# Edge relaxations performed by single-source scans; tests use the delta to
# assert the one-pass complexity contract.
relaxation_count = 0


@dataclass(frozen=True)
class ArrivalProfile:
    """Earliest arrival labels from one source, or ``None`` where unreachable."""

    source: int
    start: int
    arrival: tuple[int | None, ...]

    def reaches_all(self) -> bool:
        return all(a is not None for a in self.arrival)

    def reached(self) -> set[int]:
        return {v for v, a in enumerate(self.arrival) if a is not None}


@dataclass(frozen=True)
class TemporalOutTree:
    """``n - 1`` edge indices of the parent graph forming a reachability tree."""

    root: int
    tree_edges: frozenset[int]


def _label_groups(g: TemporalGraph, kept: Iterable[int] | None) -> list[list[int]]:
    """Edge indices grouped by equal label, groups ascending by label."""
    if kept is None:
        order = g.label_order
    else:
        keep = set(kept)
        order = [i for i in g.label_order if i in keep]
    groups: list[list[int]] = []
    prev = None
    for i in order:
        t = g.edges[i].t
        if t != prev:
            groups.append([])
            prev = t
        groups[-1].append(i)
    return groups


def _scan(
    g: TemporalGraph,
    source: int,
    start: int,
    s: Strictness,
    kept: Iterable[int] | None = None,
) -> tuple[list[int | None], list[int | None]]:
    """Earliest-arrival sweep.  Returns (arrival, via-edge-index) per vertex."""
    global relaxation_count
    arrival: list[int | None] = [None] * g.vertex_count
    via: list[int | None] = [None] * g.vertex_count
    arrival[source] = start
    strict = s is Strictness.STRICT
    edges = g.edges
    for group in _label_groups(g, kept):
        t = edges[group[0]].t
        if t < start:
            continue
        if strict:
            snapshot = {}
            for i in group:
                e = edges[i]
                snapshot.setdefault(e.u, arrival[e.u])
                snapshot.setdefault(e.v, arrival[e.v])
            for i in group:
                e = edges[i]
                relaxation_count += 1
                for a, b in ((e.u, e.v), (e.v, e.u)):
                    aa = snapshot[a]
                    if aa is None:
                        continue
                    # A path's first edge only needs label >= start.
                    if aa < t or (a == source and aa == start):
                        if arrival[b] is None or t < arrival[b]:
                            arrival[b] = t
                            via[b] = i
        else:
            changed = True
            while changed:
                changed = False
                for i in group:
                    e = edges[i]
                    relaxation_count += 1
                    for a, b in ((e.u, e.v), (e.v, e.u)):
                        aa = arrival[a]
                        if aa is None or aa > t:
                            continue
                        if arrival[b] is None or t < arrival[b]:
                            arrival[b] = t
                            via[b] = i
                            changed = True
    return arrival, via


def earliest_arrival(
    g: TemporalGraph,
    source: int,
    start: int = 0,
    s: Strictness = STRICT,
    kept: Iterable[int] | None = None,
) -> ArrivalProfile:
    """Per-vertex earliest arrival over temporal paths leaving ``source``.

    The first edge of a path must carry a label ``>= start``; later labels
    strictly increase (strict) or never decrease (non-strict).
    """
    if not (0 <= source < g.vertex_count):
        raise ValueError(f"source {source} out of range")
    if start < 0:
        raise ValueError("start must be non-negative")
    arrival, _ = _scan(g, source, start, s, kept)
    return ArrivalProfile(source=source, start=start, arrival=tuple(arrival))


def reach_masks(
    g: TemporalGraph,
    s: Strictness = STRICT,
    kept: Iterable[int] | None = None,
) -> list[int]:
    """For each vertex v, the bitmask of vertices with a temporal path to v.

    All-sources sweep: bit u of entry v means u reaches v.  This is the fast
    path behind :func:`reach_matrix` and :func:`is_tc`.
    """
    masks = [1 << v for v in range(g.vertex_count)]
    strict = s is Strictness.STRICT
    edges = g.edges
    for group in _label_groups(g, kept):
        if strict:
            snapshot = {}
            for i in group:
                e = edges[i]
                snapshot.setdefault(e.u, masks[e.u])
                snapshot.setdefault(e.v, masks[e.v])
            for i in group:
                e = edges[i]
                masks[e.v] |= snapshot[e.u]
                masks[e.u] |= snapshot[e.v]
        else:
            changed = True
            while changed:
                changed = False
                for i in group:
                    e = edges[i]
                    x = masks[e.u] | masks[e.v]
                    if x != masks[e.u] or x != masks[e.v]:
                        masks[e.u] = masks[e.v] = x
                        changed = True
    return masks


def reach_matrix(
    g: TemporalGraph,
    s: Strictness = STRICT,
    kept: Iterable[int] | None = None,
) -> list[list[bool]]:
    """n x n boolean matrix; entry (u, v) is True iff u reaches v.  Diagonal is True."""
    masks = reach_masks(g, s, kept)
    n = g.vertex_count
    return [[bool(masks[v] >> u & 1) for v in range(n)] for u in range(n)]


def is_tc(g: TemporalGraph, s: Strictness = STRICT, kept: Iterable[int] | None = None) -> bool:
    """Temporal connectivity: every ordered vertex pair joined by a temporal path."""
    full = (1 << g.vertex_count) - 1
    return all(mask == full for mask in reach_masks(g, s, kept))


def reaches_all(
    g: TemporalGraph,
    source: int,
    s: Strictness = STRICT,
    kept: Iterable[int] | None = None,
) -> bool:
    arrival, _ = _scan(g, source, 0, s, kept)
    return all(a is not None for a in arrival)


def foremost_out_tree(
    g: TemporalGraph,
    root: int,
    s: Strictness = STRICT,
    kept: Iterable[int] | None = None,
) -> TemporalOutTree:
    """The tree of first-reach edges from ``root``; raises if the root does not span.

    Restricting the graph to the returned ``n - 1`` edges preserves the
    root's full reachability.
    """
    arrival, via = _scan(g, root, 0, s, kept)
    missing = [v for v, a in enumerate(arrival) if a is None]
    if missing:
        raise RootNotSpanning(f"root {root} cannot reach {missing}")
    return TemporalOutTree(
        root=root,
        tree_edges=frozenset(via[v] for v in range(g.vertex_count) if v != root),
    )


def verify_out_tree(g: TemporalGraph, candidate_edges: Iterable[int], root: int) -> bool:
    """Check a candidate edge set is a temporal out-tree rooted at ``root``.

    Requires exactly ``n - 1`` edges whose underlying edges form a spanning
    tree with strictly increasing labels along every root-to-leaf path (the
    happy-setting convention).
    """
    idxs = set(candidate_edges)
    n = g.vertex_count
    if len(idxs) != n - 1:
        return False
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
    for i in idxs:
        e = g.edges[i]
        adj[e.u].append((e.v, e.t))
        adj[e.v].append((e.u, e.t))
    seen = {root}
    stack = [(root, 0)]
    while stack:
        v, in_label = stack.pop()
        for w, t in adj[v]:
            if w in seen or t <= in_label:
                continue
            seen.add(w)
            stack.append((w, t))
    return len(seen) == n
