import random

import pytest

from conftest import complete_graph, cycle_graph, path_graph

from zcoloring import (
    ColoredGraph,
    Coloring,
    Graph,
    catalog_from_text,
    catalog_to_text,
    check_z,
    embed,
    exact_z,
    gen_Rk,
    generate_atoms,
    grundify,
    is_colored_isomorphic,
    phase1_generate,
    prove_upper_bound,
)
from zcoloring.atoms import embedding_valid
from zcoloring.randgraphs import gnp, random_connected_gnp


def test_phase1_t0_single_vertex():
    out = phase1_generate(0)
    assert len(out) == 1
    assert out[0].graph.n == 1 and out[0].coloring.colors == (1,)


def test_phase1_t1_single_edge():
    out = phase1_generate(1)
    assert len(out) == 1
    assert out[0].graph.n == 2 and sorted(out[0].coloring.colors) == [1, 2]


def test_phase1_t2_triangle_and_path():
    out = phase1_generate(2)
    assert len(out) == 2
    triangle = ColoredGraph(complete_graph(3), Coloring((1, 2, 3)))
    four_path = ColoredGraph(
        Graph.from_edges(4, [(0, 2), (1, 2), (0, 3)]), Coloring((1, 2, 3, 2))
    )
    assert any(is_colored_isomorphic(cg, triangle) for cg in out)
    assert any(is_colored_isomorphic(cg, four_path) for cg in out)


def test_phase1_outputs_satisfy_leaf_requirements():
    from zcoloring.atoms import _club_holds

    for t in (2, 3):
        for cg in phase1_generate(t):
            assert _club_holds(cg.graph, cg.coloring.colors, t)
            star_edges = {(min(i, t), max(i, t)) for i in range(t)}
            for u, v in cg.graph.edges():
                if (u, v) in star_edges:
                    continue
                assert not _club_holds(cg.graph.drop_edge(u, v), cg.coloring.colors, t)


def test_phase1_size_guard():
    with pytest.raises(ValueError):
        phase1_generate(5)


def test_grundify_identity_when_class_is_grundy():
    cg = ColoredGraph(complete_graph(3), Coloring((1, 2, 3)))
    assert grundify(cg, 2) == [cg]


def test_grundify_four_path_yields_p5_branch():
    # star leaf colors (1,2), center 3, extra color-2 vertex hanging off u_1
    cg = ColoredGraph(Graph.from_edges(4, [(0, 2), (1, 2), (0, 3)]), Coloring((1, 2, 3, 2)))
    out = grundify(cg, 2)
    assert len(out) == 2
    p5 = ColoredGraph(path_graph(5), Coloring((2, 1, 3, 2, 1)))
    assert any(is_colored_isomorphic(x, p5) for x in out)
    # the other branch wires u_2 to u_1: a triangle with a pendant vertex
    assert any(x.graph.has_triangle() for x in out)


def test_grundify_makes_class_k_grundy():
    for base in phase1_generate(3):
        for k in (3, 2):
            for out in grundify(base, k):
                colors = out.coloring.colors
                for v in range(out.graph.n):
                    if colors[v] != k:
                        continue
                    nbr_colors = {colors[w] for w in out.graph.adj[v]}
                    assert nbr_colors >= set(range(1, k))


def test_grundify_range_check():
    cg = ColoredGraph(complete_graph(3), Coloring((1, 2, 3)))
    with pytest.raises(ValueError):
        grundify(cg, 3)
    with pytest.raises(ValueError):
        grundify(cg, 1)


def test_d1_and_d2():
    assert [a.cg.graph.n for a in generate_atoms(1).atoms] == [1]
    d2 = generate_atoms(2)
    assert len(d2.atoms) == 1 and d2.atoms[0].cg.graph.m == 1


def test_d3_is_k3_and_p5(d3_catalog):
    atoms = d3_catalog.atoms
    assert len(atoms) == 2
    k3 = ColoredGraph(complete_graph(3), Coloring((1, 2, 3)))
    r3 = gen_Rk(3)
    assert any(is_colored_isomorphic(a.cg, k3) for a in atoms)
    assert any(is_colored_isomorphic(a.cg, r3) for a in atoms)
    for a in atoms:
        assert check_z(a.cg.graph, a.cg.coloring).passed
        assert a.cg.coloring.k == 3


def test_unfiltered_t4_is_gated():
    with pytest.raises(ValueError):
        generate_atoms(4)


def test_embed_p4_not_into_c4():
    atom = ColoredGraph(path_graph(4), Coloring((1, 2, 3, 1)))
    assert embed(atom, cycle_graph(4)) is None


def test_embed_k3_into_triangle_graph():
    atom = ColoredGraph(complete_graph(3), Coloring((1, 2, 3)))
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    emb = embed(atom, g)
    assert emb is not None
    assert embedding_valid(atom, g, emb.mapping)


def test_embed_p5_atom_into_c6():
    atom = ColoredGraph(path_graph(5), Coloring((1, 2, 3, 1, 2)))
    emb = embed(atom, cycle_graph(6))
    assert emb is not None
    assert embedding_valid(atom, cycle_graph(6), emb.mapping)


def test_embed_respects_equal_color_non_adjacency():
    # two color-1 vertices may not land on adjacent targets
    atom = ColoredGraph(Graph.from_edges(3, [(0, 1), (1, 2)]), Coloring((1, 2, 1)))
    target = complete_graph(3)
    assert embed(atom, target) is None


def test_embed_random_relabeling():
    rng = random.Random(60)
    for _ in range(30):
        n = rng.randint(2, 8)
        g = gnp(n, 0.5, rng)
        from zcoloring import greedy_coloring

        cg = ColoredGraph(g, greedy_coloring(g))
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g.edges()])
        emb = embed(cg, h)
        assert emb is not None and embedding_valid(cg, h, emb.mapping)


def test_prove_upper_bound_star_graph(d3_catalog):
    k15 = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    verdict = prove_upper_bound(k15, 3, d3_catalog)
    assert verdict.passed
    assert verdict.witness["bound"] == 2
    assert exact_z(k15).value <= 2


def test_prove_upper_bound_inconclusive_on_k3(d3_catalog):
    verdict = prove_upper_bound(complete_graph(3), 3, d3_catalog)
    assert not verdict.passed
    assert verdict.witness["inconclusive"]
    assert exact_z(complete_graph(3)).value == 3


def test_prove_upper_bound_validations(d3_catalog, d4_triangle_free_catalog):
    with pytest.raises(ValueError):
        prove_upper_bound(complete_graph(3), 4, d3_catalog)
    with pytest.raises(ValueError):
        prove_upper_bound(complete_graph(3), 4, d4_triangle_free_catalog)


def test_catalog_round_trip(d3_catalog):
    text = catalog_to_text(d3_catalog)
    back = catalog_from_text(text)
    assert back.t == 3 and back.triangle_free is False
    assert len(back.atoms) == 2
    for a, b in zip(d3_catalog.atoms, back.atoms):
        assert a.cg == b.cg and a.provenance == b.provenance
    assert catalog_to_text(back) == text


def test_atoms_have_valid_stars_and_minimal_edges(d3_catalog, d4_triangle_free_catalog):
    from zcoloring.verify import verify_star

    for catalog in (d3_catalog, d4_triangle_free_catalog):
        for a in catalog.atoms:
            g, c = a.cg.graph, a.cg.coloring
            assert c.k == catalog.t
            assert check_z(g, c).passed
            assert verify_star(g, c, a.cg.dominating_star)
            assert a.cg.dominating_star == tuple(range(catalog.t))


def test_minimality_filter_is_load_bearing(d4_triangle_free_catalog):
    # the raw grundify closure is much bigger than the catalog; the exact
    # edge-minimality filter is what cuts it down
    from zcoloring.atoms import _dedup, _grundify_with_prov, _phase1_with_prov

    family = [(cg, p) for cg, p in _phase1_with_prov(3) if not cg.graph.has_triangle()]
    for k in (3, 2):
        grown = []
        for cg, _prov in family:
            grown.extend(_grundify_with_prov(cg, k))
        family = _dedup([(cg, p) for cg, p in grown if not cg.graph.has_triangle()])
    assert len(family) == 104
    assert len(d4_triangle_free_catalog.atoms) == 25


def test_checked_in_catalogs_regenerate_byte_identically(d3_catalog, d4_triangle_free_catalog):
    import pathlib

    root = pathlib.Path(__file__).parent.parent / "catalogs"
    assert catalog_to_text(d3_catalog) == (root / "d3.catalog").read_text()
    assert catalog_to_text(d4_triangle_free_catalog) == (root / "d4_trianglefree.catalog").read_text()


def test_checked_in_full_t4_catalog_parses():
    import pathlib

    root = pathlib.Path(__file__).parent.parent / "catalogs"
    cat = catalog_from_text((root / "d4_full.catalog").read_text())
    assert cat.t == 4 and not cat.triangle_free
    assert len(cat.atoms) == 58


def test_soundness_small_sweep(d3_catalog):
    rng = random.Random(61)
    checked = 0
    for _ in range(300):
        n = rng.randint(2, 6)
        g = random_connected_gnp(n, rng.choice([0.4, 0.6]), rng)
        if exact_z(g).value >= 3:
            checked += 1
            assert any(embed(a.cg, g) is not None for a in d3_catalog.atoms)
    assert checked > 50
