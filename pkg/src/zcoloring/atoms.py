"""z-atom catalogs, colored-subgraph embedding, and the upper-bound prover.

An atom with z-number t is an edge-minimal colored graph whose embedding in a
host graph is necessary for the host to have z-number >= t.  Atoms are built
in two phases from a colored star on t vertices: Phase I wires lower star
leaves to higher-colored neighbor sets in all edge-minimal ways; Phase II
"grundifies" each color class top-down, branching over every way of supplying
the missing lower colors.  The catalog keeps one representative per
color-preserving isomorphism class and drops members that are not
edge-minimal with respect to z-number.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .canon import colored_canonical_form
from .graphs import ColoredGraph, Coloring, Graph, parse_coloring_record, serialize_colored_graph
from .oracle import z_reaches
from .verify import Verdict, Violation, check_z, verify_star


@dataclass(frozen=True)
class Atom:
    """A colored graph with its canonic z-coloring, dominating star, and the
    construction parameters that produced it."""

    cg: ColoredGraph
    provenance: str = ""


@dataclass
class AtomCatalog:
    t: int
    atoms: list[Atom] = field(default_factory=list)
    triangle_free: bool = False


@dataclass(frozen=True)
class Embedding:
    """Injective map, atom vertex i -> target vertex mapping[i], preserving
    edges and sending equal-colored atom vertices to non-adjacent targets."""

    mapping: tuple[int, ...]


def _set_partitions(items: list[int]):
    """All partitions of `items` into unordered non-empty blocks, emitted
    deterministically with blocks sorted by minimum element."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [sorted([first] + part[i])] + part[i + 1:]
        yield [[first]] + part


def _dedup(pairs: list[tuple[ColoredGraph, str]]) -> list[tuple[ColoredGraph, str]]:
    seen = {}
    for cg, prov in pairs:
        cert = colored_canonical_form(cg)
        if cert not in seen:
            seen[cert] = (cg, prov)
    return list(seen.values())


# ---------------------------------------------------------------------------
# Phase I


def _club_holds(g: Graph, colors: tuple[int, ...], t: int) -> bool:
    """Each star leaf u_p (id p-1, p <= t-1) must see every color p+1..t."""
    for p in range(1, t):
        nbr_cols = {colors[w] for w in g.adj[p - 1]}
        if any(ell not in nbr_cols for ell in range(p + 1, t + 1)):
            return False
    return True


def _phase1_with_prov(t: int) -> list[tuple[ColoredGraph, str]]:
    base_colors = list(range(1, t + 1)) + [t + 1]
    base_edges = [(i, t) for i in range(t)]
    star_edges = {(min(u, v), max(u, v)) for u, v in base_edges}

    per_j_options = []
    for j in range(2, t + 1):
        domain = list(range(1, j))
        opts = []
        for r in range(len(domain) + 1):
            for to_uj in itertools.combinations(domain, r):
                rest = [p for p in domain if p not in to_uj]
                for blocks in _set_partitions(rest):
                    opts.append((j, list(to_uj), blocks))
        per_j_options.append(opts)

    out = []
    for combo in itertools.product(*per_j_options):
        colors = base_colors[:]
        edges = base_edges[:]
        prov_bits = []
        for j, to_uj, blocks in combo:
            edges.extend((p - 1, j - 1) for p in to_uj)
            for block in blocks:
                w = len(colors)
                colors.append(j)
                edges.extend((p - 1, w) for p in block)
            prov_bits.append(f"f{j}:u<-{to_uj} w<-{blocks}")
        g = Graph.from_edges(len(colors), edges)
        colors_t = tuple(colors)
        if not _club_holds(g, colors_t, t):
            continue
        # edge-minimality for the leaf requirements: every non-star edge must
        # be some leaf's only neighbor of its color
        minimal = True
        for u, v in g.edges():
            if (u, v) in star_edges:
                continue
            if _club_holds(g.drop_edge(u, v), colors_t, t):
                minimal = False
                break
        if not minimal:
            continue
        out.append((ColoredGraph(g, Coloring(colors_t)), "; ".join(prov_bits)))
    return _dedup(out)


def phase1_generate(t: int, max_t: int = 4) -> list[ColoredGraph]:
    """All edge-minimal colored graphs extending the star on colors 1..t+1 so
    that each leaf u_p has neighbors of every color above p (condition on
    which the atom construction rests), deduplicated up to color-preserving
    isomorphism."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if t > max_t:
        raise ValueError(f"t={t} exceeds the configured maximum {max_t}")
    return [cg for cg, _ in _phase1_with_prov(t)]


# ---------------------------------------------------------------------------
# Phase II: the grundify operation


def _grundify_with_prov(cg: ColoredGraph, k: int) -> list[tuple[ColoredGraph, str]]:
    g, c = cg.graph, cg.coloring
    if not 2 <= k < c.k:
        raise ValueError(f"grundify class {k} out of range 2..{c.k - 1}")
    colors = list(c.colors)
    classes = c.classes()
    class_k = classes[k - 1]
    deficits = []
    for i in range(1, k):
        c_k_i = [v for v in class_k if i not in {colors[w] for w in g.adj[v]}]
        if c_k_i:
            deficits.append((i, c_k_i))
    if not deficits:
        return [(cg, "")]

    per_i_options = []
    for i, c_k_i in deficits:
        c_i = classes[i - 1]
        opts = []
        for r in range(len(c_k_i) + 1):
            for s_set in itertools.combinations(c_k_i, r):
                rest = [v for v in c_k_i if v not in s_set]
                for f_targets in itertools.product(c_i, repeat=len(s_set)):
                    for blocks in _set_partitions(rest):
                        opts.append((i, list(zip(s_set, f_targets)), blocks))
        per_i_options.append(opts)

    out = []
    for combo in itertools.product(*per_i_options):
        new_colors = colors[:]
        new_edges = g.edges()
        prov_bits = []
        for i, wired, blocks in combo:
            new_edges.extend(wired)
            for block in blocks:
                w = len(new_colors)
                new_colors.append(i)
                new_edges.extend((v, w) for v in block)
            prov_bits.append(f"i{i}:S{wired} w<-{blocks}")
        new_g = Graph.from_edges(len(new_colors), new_edges)
        out.append((ColoredGraph(new_g, Coloring(tuple(new_colors))), " ".join(prov_bits)))
    return _dedup(out)


def grundify(cg: ColoredGraph, k: int) -> list[ColoredGraph]:
    """All minimal supergraphs of cg (same colors on old vertices, fresh
    vertices only in classes below k) in which class k is a Grundy class.

    A vertex of class k missing color i either gets wired to an existing
    color-i vertex or to a fresh color-i leaf shared by a block of such
    vertices; every combination over the missing colors is emitted.  If class
    k is already Grundy the input comes back unchanged.
    """
    return [out for out, _ in _grundify_with_prov(cg, k)]


# ---------------------------------------------------------------------------
# Catalog generation


def _edge_minimal_z(g: Graph, t: int) -> bool:
    return all(not z_reaches(g.drop_edge(u, v), t) for u, v in g.edges())


def generate_atoms(
    t: int,
    triangle_free: bool = False,
    *,
    allow_large: bool = False,
    max_t: int = 4,
) -> AtomCatalog:
    """Generate the atom catalog for z-number t.

    Pipeline: Phase I for t-1, then grundify classes t-1 down to 2 composing
    over families with per-stage deduplication, then keep exactly the members
    whose canonic coloring is a z-coloring with t colors and that are
    edge-minimal with respect to z-number.  The triangle-free filter is
    applied per stage since later stages only add edges.  The unfiltered t=4
    catalog is large and gated behind allow_large.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if t > max_t:
        raise ValueError(f"t={t} exceeds the configured maximum {max_t}")
    if t >= 4 and not triangle_free and not allow_large:
        raise ValueError("unfiltered catalogs for t >= 4 are gated behind allow_large")

    family = _phase1_with_prov(t - 1)
    if triangle_free:
        family = [(cg, p) for cg, p in family if not cg.graph.has_triangle()]
    for k in range(t - 1, 1, -1):
        grown = []
        for cg, prov in family:
            for out, extra in _grundify_with_prov(cg, k):
                grown.append((out, prov if not extra else f"{prov} | G{k} {extra}"))
        if triangle_free:
            grown = [(cg, p) for cg, p in grown if not cg.graph.has_triangle()]
        family = _dedup(grown)

    star = tuple(range(t))
    atoms = []
    for cg, prov in family:
        candidate = ColoredGraph(cg.graph, cg.coloring, star)
        if cg.coloring.k != t or not check_z(cg.graph, cg.coloring).passed:
            raise AssertionError("constructed atom candidate is not a z-coloring")
        if not verify_star(cg.graph, cg.coloring, star):
            raise AssertionError("star vertices lost their dominating property")
        if not _edge_minimal_z(cg.graph, t):
            continue
        atoms.append(Atom(candidate, prov))
    atoms.sort(key=lambda a: colored_canonical_form(a.cg))
    return AtomCatalog(t, atoms, triangle_free)


# ---------------------------------------------------------------------------
# Embedding and the bound prover


def embedding_valid(atom: ColoredGraph, target: Graph, mapping) -> bool:
    """Independent check of both embedding conditions for a claimed map."""
    h, c = atom.graph, atom.coloring
    if len(mapping) != h.n or len(set(mapping)) != h.n:
        return False
    for u, v in h.edges():
        if not target.has_edge(mapping[u], mapping[v]):
            return False
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if c.colors[u] == c.colors[v] and target.has_edge(mapping[u], mapping[v]):
                return False
    return True


def embed(atom: ColoredGraph, target: Graph) -> Embedding | None:
    """Complete backtracking search for an embedding of the colored atom into
    the (uncolored) target; None when none exists."""
    h, c = atom.graph, atom.coloring
    nh, nt = h.n, target.n
    if nh > nt:
        return None
    if nh == 0:
        return Embedding(())

    order: list[int] = []
    placed = set()
    remaining = set(range(nh))
    while remaining:
        anchored = [v for v in remaining if any(w in placed for w in h.adj[v])]
        pool = anchored if anchored else list(remaining)
        v = min(pool, key=lambda x: (-h.degree(x), x))
        order.append(v)
        placed.add(v)
        remaining.discard(v)

    pos = {v: i for i, v in enumerate(order)}
    earlier_nbrs = [[w for w in h.adj[v] if pos[w] < pos[v]] for v in order]
    earlier_same = [
        [w for w in range(nh) if w != v and c.colors[w] == c.colors[v] and pos[w] < pos[v]]
        for v in order
    ]
    target_deg = [target.degree(u) for u in range(nt)]
    mapping = [-1] * nh
    used = [False] * nt

    def dfs(i: int) -> bool:
        if i == nh:
            return True
        v = order[i]
        dv = h.degree(v)
        for cand in range(nt):
            if used[cand] or target_deg[cand] < dv:
                continue
            if any(not target.has_edge(cand, mapping[w]) for w in earlier_nbrs[i]):
                continue
            if any(target.has_edge(cand, mapping[w]) for w in earlier_same[i]):
                continue
            mapping[v] = cand
            used[cand] = True
            if dfs(i + 1):
                return True
            used[cand] = False
            mapping[v] = -1
        return False

    if not dfs(0):
        return None
    if not embedding_valid(atom, target, mapping):
        raise AssertionError("embedding search returned an invalid map")
    return Embedding(tuple(mapping))


def prove_upper_bound(g: Graph, t: int, catalog: AtomCatalog) -> Verdict:
    """Try to certify z(g) <= t-1: if no catalog atom embeds in g the bound
    holds; if some atom embeds the result is inconclusive (embedding alone
    never certifies z(g) >= t), and the verdict carries the embedding."""
    if catalog.t != t:
        raise ValueError(f"catalog is for t={catalog.t}, asked about t={t}")
    if catalog.triangle_free and g.has_triangle():
        raise ValueError("triangle-filtered catalog cannot bound a graph with a triangle")
    checked = []
    for idx, atom in enumerate(catalog.atoms):
        emb = embed(atom.cg, g)
        if emb is not None:
            return Verdict(
                False,
                [Violation("atom-embeds", vertex=emb.mapping[0], class_index=idx)],
                witness={"atom_index": idx, "embedding": emb.mapping, "inconclusive": True},
            )
        checked.append(idx)
    return Verdict(True, witness={"bound": t - 1, "atoms_checked": checked})


# ---------------------------------------------------------------------------
# Catalog files


def atom_record(atom: Atom, t: int) -> str:
    return f"t {t}\n" + serialize_colored_graph(atom.cg) + f"provenance {atom.provenance}\n"


def catalog_to_text(catalog: AtomCatalog) -> str:
    header = f"zatoms t {catalog.t} triangle_free {1 if catalog.triangle_free else 0} count {len(catalog.atoms)}\n"
    return header + "".join("\n" + atom_record(a, catalog.t) for a in catalog.atoms)


def catalog_from_text(text: str) -> AtomCatalog:
    chunks = [c for c in text.split("\n\n") if c.strip()]
    head = chunks[0].splitlines()[0].split()
    if head[0] != "zatoms":
        raise ValueError("not a z-atom catalog")
    t = int(head[2])
    triangle_free = bool(int(head[4]))
    count = int(head[6])
    atoms = []
    body = chunks[1:]
    for chunk in body:
        lines = chunk.strip().splitlines()
        rec_lines = []
        prov = ""
        for line in lines:
            if line.startswith("t "):
                if int(line.split()[1]) != t:
                    raise ValueError("atom t differs from catalog t")
            elif line.startswith("provenance"):
                prov = line.partition(" ")[2]
            else:
                rec_lines.append(line)
        cg = parse_coloring_record("\n".join(rec_lines) + "\n")
        atoms.append(Atom(cg, prov))
    if len(atoms) != count:
        raise ValueError(f"catalog declares {count} atoms, found {len(atoms)}")
    return AtomCatalog(t, atoms, triangle_free)
