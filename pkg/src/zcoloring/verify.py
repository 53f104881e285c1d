"""Exact predicates for coloring properties: proper, Grundy, color-dominating,
nice vertices, and z-colorings.  Every check returns a Verdict carrying either
a witness or concrete counterexamples, so failures are actionable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Coloring, Graph


@dataclass(frozen=True)
class Violation:
    """One concrete reason a check failed."""

    kind: str
    vertex: int | None = None
    other: int | None = None
    color: int | None = None
    class_index: int | None = None

    def __str__(self) -> str:
        bits = [self.kind]
        if self.vertex is not None:
            bits.append(f"vertex={self.vertex}")
        if self.other is not None:
            bits.append(f"other={self.other}")
        if self.color is not None:
            bits.append(f"color={self.color}")
        if self.class_index is not None:
            bits.append(f"class={self.class_index}")
        return " ".join(bits)


@dataclass
class Verdict:
    passed: bool
    violations: list[Violation] = field(default_factory=list)
    witness: dict | None = None

    def __post_init__(self):
        if self.passed and self.violations:
            raise ValueError("a passing verdict cannot carry violations")
        if not self.passed and not self.violations:
            raise ValueError("a failing verdict needs at least one violation")

    def __bool__(self) -> bool:
        return self.passed


def _require_total(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")


def check_proper(g: Graph, c: Coloring) -> Verdict:
    """Pass iff no edge joins two vertices of the same color."""
    _require_total(g, c)
    violations = [
        Violation("monochromatic-edge", vertex=u, other=v, color=c.colors[u])
        for u, v in g.edges()
        if c.colors[u] == c.colors[v]
    ]
    return Verdict(not violations, violations)


def check_grundy(g: Graph, c: Coloring) -> Verdict:
    """Pass iff every vertex of color j has, for each i < j, a neighbor of color i.

    Raises ValueError on an improper input coloring.
    """
    _require_total(g, c)
    if not check_proper(g, c):
        raise ValueError("check_grundy requires a proper coloring")
    violations = []
    for v in range(g.n):
        nbr_colors = {c.colors[w] for w in g.adj[v]}
        for i in range(1, c.colors[v]):
            if i not in nbr_colors:
                violations.append(Violation("missing-lower-color", vertex=v, color=i))
    return Verdict(not violations, violations)


def dominating_vertices(g: Graph, c: Coloring, class_index: int) -> list[int]:
    """Vertices of the given class adjacent to every other color in use.

    Classes are 1..k; an out-of-range index raises ValueError.
    """
    _require_total(g, c)
    if not check_proper(g, c):
        raise ValueError("dominating_vertices requires a proper coloring")
    k = c.k
    if not 1 <= class_index <= k:
        raise ValueError(f"class index {class_index} out of range 1..{k}")
    needed = set(range(1, k + 1)) - {class_index}
    return [
        v
        for v in range(g.n)
        if c.colors[v] == class_index and needed <= {c.colors[w] for w in g.adj[v]}
    ]


def check_cd(g: Graph, c: Coloring) -> Verdict:
    """Pass iff every color class contains a color-dominating vertex (b-coloring).

    On pass the witness maps each class to one CD vertex.
    """
    _require_total(g, c)
    if not check_proper(g, c):
        raise ValueError("check_cd requires a proper coloring")
    violations = []
    cd_by_class = {}
    for j in range(1, c.k + 1):
        cd = dominating_vertices(g, c, j)
        if cd:
            cd_by_class[j] = cd[0]
        else:
            violations.append(Violation("class-without-cd-vertex", class_index=j))
    if violations:
        return Verdict(False, violations)
    return Verdict(True, witness={"cd_vertices": cd_by_class})


def is_nice_vertex(g: Graph, c: Coloring, v: int) -> bool:
    """True iff v has the top color t and is adjacent to color-dominating
    vertices of all t-1 other colors."""
    _require_total(g, c)
    t = c.k
    if c.colors[v] != t:
        return False
    cd_sets = {j: set(dominating_vertices(g, c, j)) for j in range(1, t)}
    nbrs = set(g.adj[v])
    return all(cd_sets[j] & nbrs for j in range(1, t))


def find_dominating_star(g: Graph, c: Coloring) -> tuple[int, ...] | None:
    """Search for a star (u_1..u_k) of CD vertices, u_j of color j, with u_k
    adjacent to every other u_j.  Exact: every CD vertex of color k is tried
    as the center; smallest-index choices make the result deterministic."""
    k = c.k
    if k == 0:
        return ()
    cd_sets = [dominating_vertices(g, c, j) for j in range(1, k + 1)]
    for center in cd_sets[k - 1]:
        nbrs = set(g.adj[center])
        star = []
        for j in range(1, k):
            pick = next((u for u in cd_sets[j - 1] if u in nbrs), None)
            if pick is None:
                break
            star.append(pick)
        else:
            return tuple(star) + (center,)
    return None


def check_z(g: Graph, c: Coloring) -> Verdict:
    """Pass iff c is proper, Grundy, color-dominating, and admits a dominating
    star.  Failures come back as verdicts, never exceptions."""
    _require_total(g, c)
    proper = check_proper(g, c)
    if not proper:
        return proper
    grundy = check_grundy(g, c)
    if not grundy:
        return grundy
    cd = check_cd(g, c)
    if not cd:
        return cd
    star = find_dominating_star(g, c)
    if star is None:
        return Verdict(False, [Violation("no-dominating-star", class_index=c.k)])
    witness = {"star": star}
    witness.update(cd.witness or {})
    return Verdict(True, witness=witness)


def verify_star(g: Graph, c: Coloring, star: tuple[int, ...]) -> bool:
    """Check a claimed dominating star: u_j has color j and is CD, the last
    vertex is adjacent to all the others."""
    k = c.k
    if len(star) != k:
        return False
    for j, u in enumerate(star, start=1):
        if c.colors[u] != j:
            return False
        if u not in dominating_vertices(g, c, j):
            return False
    center = star[-1]
    return all(g.has_edge(center, u) for u in star[:-1])


def verdict_record(v: Verdict) -> str:
    """Serialize a verdict in the same line-oriented style as coloring records."""
    lines = [f"passed {1 if v.passed else 0}"]
    for viol in v.violations:
        lines.append(f"violation {viol}")
    if v.witness and "star" in v.witness:
        lines.append("star " + " ".join(str(u) for u in v.witness["star"]))
    return "\n".join(lines) + "\n"
