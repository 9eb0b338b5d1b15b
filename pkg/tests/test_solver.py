from itertools import combinations, product

import pytest

from tempspan import generate, reach, solver
from tempspan import tempgraph as tg
from tempspan.reach import STRICT
from tempspan.solver import ALL_PAIRS, Template, TwoSource


def small_corpus(count=25, n_range=(4, 7)):
    graphs = []
    seed = 0
    while len(graphs) < count:
        seed += 1
        n = n_range[0] + seed % (n_range[1] - n_range[0] + 1)
        d = 1 + seed % 3
        if d >= n:
            continue
        try:
            graphs.append(generate.random_happy_tc_with_cover(n, d, seed))
        except generate.GenerationFailed:
            continue
    return graphs


# ---------------------------------------------------------------------------
# Forced edges and the exact oracle
# ---------------------------------------------------------------------------


def test_forced_edges_chain_all_forced():
    g = tg.build(4, [(0, 1, 1), (1, 2, 2), (2, 3, 3)])
    assert not reach.is_tc(g, STRICT)  # a chain is only one-way connected
    with pytest.raises(solver.RequirementNotSatisfied):
        solver.forced_edges(g, STRICT)


def test_forced_edges_two_vertex():
    g = tg.build(2, [(0, 1, 1)])
    assert solver.forced_edges(g, STRICT) == frozenset({0})
    res = solver.min_spanner_exact(g)
    assert res.size == 1 and res.optimal


def test_forced_edges_subset_of_every_optimum():
    for g in small_corpus(10):
        forced = solver.forced_edges(g, STRICT)
        res = solver.min_spanner_exact(g)
        assert forced <= res.spanner.kept


def test_exact_engines_agree_with_brute():
    for g in small_corpus(20, n_range=(4, 6)):
        brute = solver.min_spanner_brute(g, cap=18)
        bnb = solver.min_spanner_exact(g, engine="bnb")
        cuts = solver.min_spanner_exact(g, engine="cuts")
        flow = solver.min_spanner_exact(g, engine="flow")
        assert brute.size == bnb.size == cuts.size == flow.size
        for res in (brute, bnb, cuts, flow):
            assert reach.is_tc(g, STRICT, kept=res.spanner.kept)
            assert res.optimal


def test_exact_local_minimality():
    for g in small_corpus(10):
        res = solver.min_spanner_exact(g)
        forced = solver.forced_edges(g, STRICT)
        for i in res.spanner.kept - forced:
            assert not reach.is_tc(g, STRICT, kept=res.spanner.kept - {i})


def test_budget_decision_mode():
    g = generate.random_happy_tc_with_cover(6, 2, 11)
    opt = solver.min_spanner_exact(g).size
    for engine in ("bnb", "cuts", "flow"):
        yes = solver.min_spanner_exact(g, budget=opt, engine=engine)
        no = solver.min_spanner_exact(g, budget=opt - 1, engine=engine)
        assert yes.within_budget is True
        assert no.within_budget is False


def test_instance_too_large_guard():
    g = generate.random_happy_tc_with_cover(7, 3, 5)
    with pytest.raises(solver.InstanceTooLarge):
        solver.min_spanner_exact(g, cap=0)


def test_requirement_not_satisfied():
    g = tg.build(3, [(0, 1, 1)])
    with pytest.raises(solver.RequirementNotSatisfied):
        solver.min_spanner_exact(g)


def test_two_source_requirement():
    # 0 and 1 both reach everything, but 3 cannot reach 0; only the
    # two-source requirement is satisfiable.
    g = tg.build(4, [(0, 1, 1), (1, 2, 2), (1, 3, 3), (0, 2, 4)])
    req = TwoSource(0, 1)
    assert solver.requirement_holds(g, STRICT, req)
    assert not solver.requirement_holds(g, STRICT, ALL_PAIRS)
    res = solver.min_spanner_exact(g, requirement=req)
    # brute-force oracle over all subsets
    best = min(
        (
            len(kept)
            for r in range(g.m + 1)
            for kept in combinations(range(g.m), r)
            if solver.requirement_holds(g, STRICT, req, kept=kept)
        ),
    )
    assert res.size == best


def test_two_source_engines_agree():
    for seed, g in enumerate(small_corpus(8, n_range=(4, 6))):
        req = TwoSource(0, g.vertex_count - 1)
        if not solver.requirement_holds(g, STRICT, req):
            continue
        sizes = {
            solver.min_spanner_exact(g, requirement=req, engine=e).size
            for e in ("bnb", "cuts", "flow")
        }
        assert len(sizes) == 1


# ---------------------------------------------------------------------------
# Vertex cover
# ---------------------------------------------------------------------------


def test_min_vertex_cover_trivial():
    assert solver.min_vertex_cover([(0, 1)]) == frozenset({0}) or solver.min_vertex_cover(
        [(0, 1)]
    ) == frozenset({1})
    assert len(solver.min_vertex_cover([(0, 1)])) == 1
    assert len(solver.min_vertex_cover([(0, 1), (1, 2), (0, 2)])) == 2
    assert solver.min_vertex_cover([]) == frozenset()


def petersen_edges():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return [(min(a, b), max(a, b)) for a, b in outer + inner + spokes]


def test_min_vertex_cover_petersen():
    edges = petersen_edges()
    cover = solver.min_vertex_cover(edges, 10)
    assert all(a in cover or b in cover for a, b in edges)
    assert len(cover) == 6
    # brute-force oracle: no cover of size five exists
    for cand in combinations(range(10), 5):
        cand = set(cand)
        if all(a in cand or b in cand for a, b in edges):
            pytest.fail(f"found a 5-cover {cand}")


# ---------------------------------------------------------------------------
# Templates
# ---------------------------------------------------------------------------


def test_enumerate_templates_d1():
    templates = list(solver.enumerate_templates([7]))
    assert templates == [Template(root=7, arcs=())]


def test_enumerate_templates_d2_exhaustive():
    templates = list(solver.enumerate_templates([0, 1]))
    assert len(templates) == 6
    shapes = {
        (t.root, tuple(sorted(t.arcs)), t.placeholder_count) for t in templates
    }
    assert len(shapes) == 6
    singles = [t for t in templates if not t.arcs]
    assert {t.root for t in singles} == {0, 1}
    with_placeholder = [t for t in templates if t.placeholder_count]
    assert len(with_placeholder) == 2


def _template_invariants(t: Template, cover: set[int]):
    nodes = t.nodes
    assert ("x", t.root) in nodes
    assert t.root in cover
    children = {}
    parents = {}
    for a, b in t.arcs:
        children.setdefault(a, []).append(b)
        assert b not in parents
        parents[b] = a
    for node in nodes:
        kind, _ = node
        if kind == "p":
            assert all(c[0] == "x" for c in children.get(node, []))
            assert children.get(node), "placeholders cannot be leaves"
            assert parents[node][0] == "x"
        if node not in children and node != ("x", t.root):
            assert kind == "x"
    assert len(nodes) <= 2 * len(cover)


def test_template_invariants_up_to_d3():
    for d in (1, 2, 3):
        cover = set(range(d))
        count = 0
        for t in solver.enumerate_templates(sorted(cover)):
            _template_invariants(t, cover)
            count += 1
        assert count <= (2 * d) ** (2 * d)


def _brute_templates(cover):
    """Independent template enumeration: all parent maps over all node sets,
    deduplicated by the canonical placeholder naming."""
    cover = sorted(cover)
    found = set()
    for size in range(1, len(cover) + 1):
        for sub in combinations(cover, size):
            for p_count in range(0, len(sub)):
                nodes = [("x", x) for x in sub] + [("p", k) for k in range(p_count)]
                for root in sub:
                    root_node = ("x", root)
                    others = [nd for nd in nodes if nd != root_node]
                    for parents in product(nodes, repeat=len(others)):
                        parent = dict(zip(others, parents))
                        if not solver._is_out_tree(root_node, parent):
                            continue
                        children = {}
                        for child, par in parent.items():
                            children.setdefault(par, []).append(child)
                        ok = True
                        for nd in nodes:
                            kind, _ = nd
                            kids = children.get(nd, [])
                            if kind == "p":
                                if not kids or any(k[0] != "x" for k in kids):
                                    ok = False
                            if not kids and nd != root_node and kind == "p":
                                ok = False
                        if not ok:
                            continue
                        # canonicalize placeholder ids by minimum child
                        rename = {}
                        keyed = []
                        for nd in nodes:
                            if nd[0] == "p":
                                kids = sorted(children.get(nd, []))
                                keyed.append((kids[0], nd))
                        for k, (_, nd) in enumerate(sorted(keyed)):
                            rename[nd] = ("p", k)

                        def conv(nd):
                            return rename.get(nd, nd)

                        arcs = tuple(
                            sorted((conv(par), conv(child)) for child, par in parent.items())
                        )
                        found.add((root, arcs))
    return found


def test_templates_match_independent_enumeration():
    for d in (1, 2, 3):
        cover = list(range(d))
        mine = {(t.root, t.arcs) for t in solver.enumerate_templates(cover)}
        assert mine == _brute_templates(cover)


# ---------------------------------------------------------------------------
# Template instantiation
# ---------------------------------------------------------------------------


def test_instantiate_star():
    g = tg.build(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
    t = Template(root=0, arcs=())
    got = solver.instantiate_template(g, t, {}, {1: 0, 2: 0, 3: 0})
    assert got == frozenset({0, 1, 2})
    assert reach.verify_out_tree(g, got, 0)


def test_instantiate_missing_edge_is_incompatible():
    g = tg.build(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
    t = Template(root=0, arcs=((("x", 0), ("p", 0)), (("p", 0), ("x", 1))))
    # placeholder mapped to a vertex not adjacent to the template child
    assert solver.instantiate_template(g, t, {0: 2}, {3: 0}) is None


def test_instantiate_figure_template():
    # The compatibility figure: five cover vertices, three placeholders,
    # nine attached leaves; instantiation recovers the whole tree.
    edges = [
        (0, 1, 1),
        (1, 2, 3),
        (2, 8, 4),
        (2, 9, 5),
        (0, 3, 4),
        (3, 5, 6),
        (3, 10, 5),
        (3, 11, 10),
        (3, 4, 7),
        (4, 6, 8),
        (6, 12, 9),
        (6, 13, 10),
        (6, 14, 11),
        (5, 7, 7),
        (7, 15, 8),
        (7, 16, 9),
    ]
    g = tg.build(17, edges)
    x_star, x1, x2, x3, x4 = 0, 2, 3, 6, 7
    t = Template(
        root=x_star,
        arcs=(
            (("x", x_star), ("p", 0)),
            (("p", 0), ("x", x1)),
            (("x", x_star), ("x", x2)),
            (("x", x2), ("p", 1)),
            (("p", 1), ("x", x3)),
            (("x", x2), ("p", 2)),
            (("p", 2), ("x", x4)),
        ),
    )
    zeta = {0: 1, 1: 4, 2: 5}
    attach = {8: x1, 9: x1, 10: x2, 11: x2, 12: x3, 13: x3, 14: x3, 15: x4, 16: x4}
    got = solver.instantiate_template(g, t, zeta, attach)
    assert got == frozenset(range(g.m))
    assert reach.verify_out_tree(g, got, x_star)


def test_instantiate_rejects_noninjective_zeta():
    g = tg.build(4, [(0, 1, 1), (0, 2, 2), (1, 3, 3), (2, 3, 5)])
    t = Template(
        root=0,
        arcs=(
            (("x", 0), ("p", 0)),
            (("p", 0), ("x", 3)),
            (("x", 0), ("p", 1)),
            (("p", 1), ("x", 3)),
        ),
    )
    with pytest.raises(ValueError):
        solver.instantiate_template(g, t, {0: 1, 1: 1}, {})


def test_candidate_trees_match_subset_enumeration():
    # Independent oracle: all (n-1)-subsets of edges that verify as out-trees.
    for g in small_corpus(8, n_range=(4, 6)):
        cover = sorted(solver.min_vertex_cover(tg.underlying_graph(g), g.vertex_count))
        for root in cover:
            mine = {
                frozenset(solver._mask_indices(mask))
                for mask in solver._candidate_trees(g, cover, root)
            }
            brute = {
                frozenset(sub)
                for sub in combinations(range(g.m), g.vertex_count - 1)
                if reach.verify_out_tree(g, sub, root)
            }
            assert mine == brute


# ---------------------------------------------------------------------------
# Extra-edge selection
# ---------------------------------------------------------------------------


def test_select_extra_edges_star_needs_none():
    # A happy TC star only exists with a single leaf.
    g = tg.build(2, [(0, 1, 1)])
    extras = solver.select_extra_edges(g, {0}, [0])
    assert extras == {1: None}


def test_select_extra_edges_mixed():
    # Vertex 1 starts the tree and already reaches everything; vertex 2 joins
    # too late and needs its own earlier incident edge.
    g = tg.build(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    tree = frozenset({0, 1})  # star at 0
    assert reach.verify_out_tree(g, tree, 0)
    extras = solver.select_extra_edges(g, tree, [0, 1])
    assert extras == {2: 2}
    extras = solver.select_extra_edges(g, tree, [0])
    assert extras == {1: None, 2: 2}


def test_select_extra_edges_infeasible():
    g = tg.build(3, [(0, 1, 3), (0, 2, 1)])
    tree = frozenset({0, 1})
    assert solver.select_extra_edges(g, tree, [0]) is None


def test_select_extra_edges_complete_vs_joint_enumeration():
    # If any one-extra-per-vertex assignment restores every vertex's own
    # reach over the tree union, the per-vertex selection must succeed.
    for g in small_corpus(12, n_range=(4, 6)):
        cover = sorted(solver.min_vertex_cover(tg.underlying_graph(g), g.vertex_count))
        others = [v for v in range(g.vertex_count) if v not in cover]
        if not others or not cover:
            continue
        tree = reach.foremost_out_tree(g, cover[0], STRICT).tree_edges
        got = solver.select_extra_edges(g, tree, cover)
        choice_sets = [
            [None] + list(g.incident[v]) for v in others
        ]
        joint_possible = False
        for combo in product(*choice_sets):
            ok = True
            for v, extra in zip(others, combo):
                kept = set(tree) | ({extra} if extra is not None else set())
                if not reach.reaches_all(g, v, STRICT, kept=kept):
                    ok = False
                    break
            if ok:
                joint_possible = True
                break
        assert (got is not None) == joint_possible


# ---------------------------------------------------------------------------
# XP algorithm
# ---------------------------------------------------------------------------


def test_xp_single_edge_star():
    # The only happy TC graphs with vertex cover number one have two vertices.
    g = tg.build(2, [(0, 1, 1)])
    res = solver.min_spanner_xp_vc(g)
    assert res.size == solver.min_spanner_exact(g).size == 1


def test_xp_requires_happy():
    g = tg.build(2, [(0, 1, 1), (0, 1, 2)])
    with pytest.raises(solver.NotHappy):
        solver.min_spanner_xp_vc(g)


def test_xp_requires_tc():
    g = tg.build(3, [(0, 1, 1), (1, 2, 2)])
    with pytest.raises(solver.NotTemporallyConnected):
        solver.min_spanner_xp_vc(g)


def test_xp_oracle_equivalence_corpus():
    for g in small_corpus(30):
        assert solver.min_spanner_xp_vc(g).size == solver.min_spanner_exact(g).size


def test_xp_budget_mode():
    g = generate.random_happy_tc_with_cover(6, 2, 3)
    opt = solver.min_spanner_exact(g).size
    yes = solver.min_spanner_xp_vc(g, budget=opt)
    assert yes.within_budget is True and yes.size <= opt
    no = solver.min_spanner_xp_vc(g, budget=opt - 1)
    assert no.within_budget is False


def test_xp_size_invariant_under_edge_order():
    g = generate.random_happy_tc_with_cover(7, 2, 9)
    base = solver.min_spanner_xp_vc(g).size
    reordered = tg.build(g.vertex_count, list(reversed(g.edges)))
    assert solver.min_spanner_xp_vc(reordered).size == base


def test_xp_single_vertex():
    g = tg.build(1, [])
    assert solver.min_spanner_xp_vc(g).size == 0


# ---------------------------------------------------------------------------
# VC-tree decomposition
# ---------------------------------------------------------------------------


def test_decompose_single_edge_star():
    g = tg.build(2, [(0, 1, 1)])
    spanner = solver.min_spanner_exact(g).spanner
    decomp = solver.vc_tree_decompose(spanner, [0])
    assert decomp is not None
    assert len(decomp.trees) == 1
    assert decomp.trees[0].root == 0
    assert decomp.extras == ()


def test_decompose_optimum_corpus():
    for g in small_corpus(20):
        cover = sorted(solver.min_vertex_cover(tg.underlying_graph(g), g.vertex_count))
        spanner = solver.min_spanner_exact(g).spanner
        decomp = solver.vc_tree_decompose(spanner, cover)
        assert decomp is not None
        assert len(decomp.trees) <= len(cover)
        union = set()
        for tree in decomp.trees:
            assert tree.root in cover
            assert reach.verify_out_tree(g, tree.tree_edges, tree.root)
            union |= tree.tree_edges
        for v, e in decomp.extras:
            assert v not in cover
            assert v in (g.edges[e].u, g.edges[e].v)
            union.add(e)
        assert union == set(spanner.kept)


def test_decompose_rejects_disconnected_spanner():
    g = generate.random_happy_tc_with_cover(5, 2, 4)
    cover = sorted(solver.min_vertex_cover(tg.underlying_graph(g), g.vertex_count))
    with pytest.raises(solver.NotTemporallyConnected):
        solver.vc_tree_decompose(tg.Spanner(g, frozenset()), cover)


def test_decompose_requires_cover():
    g = generate.random_happy_tc_with_cover(5, 2, 4)
    spanner = solver.min_spanner_exact(g).spanner
    with pytest.raises(ValueError):
        solver.vc_tree_decompose(spanner, [])
