"""
scwols.py
─────────
Scwols (pequenas categorias sem laços) e o lado combinatório do cálculo:

  Scwol / validate_scwol        — axiomas (Scw1)–(Scw4), violações como dados
  CellComplex / scwol_from_complex — subdivisão baricêntrica de um 2-complexo
  EdgePath / reduce_edge_path   — caminhos de arestas e movimentos de homotopia
  scwol_pi1_presentation        — π₁ por árvore geradora BFS (networkx)
  ScwolAction / validate_action — ações de grupos finitos, condições (i) e (ii)

Convenção: a aresta a vai de i(a) para t(a); ab existe quando i(a) = t(b),
com i(ab) = i(b) e t(ab) = t(a). No caminho, a⁺ percorre t(a) → i(a) e
a⁻ percorre i(a) → t(a), de modo que o caminho a⁺b⁺ equivale a (ab)⁺.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from errors import Disconnected, InconsistentIncidence
from groups import FiniteGroupTable, GroupPresentation, Word

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────
# Scwol
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Scwol:
    """
    Vértices 0..V-1 (com nomes), arestas 0..E-1 como pares (i(a), t(a)),
    composições como triplas (a, b, ab). `dims` guarda a dimensão da célula
    quando o scwol vem de um complexo.
    """
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[int, int], ...]
    compositions: Tuple[Tuple[int, int, int], ...] = ()
    dims: Tuple[Optional[int], ...] = ()
    _comp: Dict[Tuple[int, int], int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "compositions", tuple(sorted(tuple(c) for c in self.compositions)))
        if not self.dims:
            object.__setattr__(self, "dims", (None,) * len(self.vertices))
        self._comp.update({(a, b): ab for a, b, ab in self.compositions})

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def i(self, a: int) -> int:
        return self.edges[a][0]

    def t(self, a: int) -> int:
        return self.edges[a][1]

    def compose(self, a: int, b: int) -> Optional[int]:
        return self._comp.get((a, b))

    def composable_pairs(self) -> List[Tuple[int, int]]:
        """Pares (a, b) com i(a) = t(b), em ordem de índice."""
        return [(a, b) for a in range(self.n_edges) for b in range(self.n_edges) if self.i(a) == self.t(b)]

    def composable_triples(self) -> List[Tuple[int, int, int]]:
        return [(a, b, c) for a, b in self.composable_pairs()
                for c in range(self.n_edges) if self.i(b) == self.t(c)]

    def underlying_graph(self) -> nx.MultiGraph:
        """Grafo subjacente; a chave de cada aresta é o índice no scwol."""
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n_vertices))
        for a, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, key=a)
        return g

    def is_connected(self) -> bool:
        return self.n_vertices > 0 and nx.is_connected(self.underlying_graph())

    def cells_by_dimension(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for d in self.dims:
            if d is not None:
                out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def dimension(self) -> int:
        """Maior comprimento de cadeia de arestas componíveis."""
        if not self.edges:
            return 0
        if not self.compositions:
            return 1
        return 3 if self.composable_triples() else 2


# ── Validação ─────────────────────────────────────────────

@dataclass
class Violation:
    axiom: str
    message: str
    witness: Tuple = ()


@dataclass
class ScwolReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_scwol(s: Scwol) -> ScwolReport:
    """Confere (Scw1)–(Scw4); não levanta exceções."""
    report = ScwolReport()
    bad = report.violations
    V, E = s.n_vertices, s.n_edges
    for a, (u, v) in enumerate(s.edges):
        if not (0 <= u < V and 0 <= v < V):
            bad.append(Violation("Scw1", f"aresta {a} com extremo inexistente", (a,)))
    if bad:
        return report

    for a, b, ab in s.compositions:
        if not (0 <= a < E and 0 <= b < E and 0 <= ab < E):
            bad.append(Violation("Scw1", "composição com aresta inexistente", (a, b, ab)))
            continue
        if s.i(a) != s.t(b):
            bad.append(Violation("Scw2", f"composição de {a},{b} com i(a) ≠ t(b)", (a, b)))
        elif s.i(ab) != s.i(b) or s.t(ab) != s.t(a):
            bad.append(Violation("Scw2", f"extremos de {ab} = {a}{b} incorretos", (a, b, ab)))
    pairs = [(a, b) for a, b, _ in s.compositions]
    if len(set(pairs)) != len(pairs):
        bad.append(Violation("Scw2", "par com mais de uma composição"))
    for a, b in s.composable_pairs():
        if s.compose(a, b) is None:
            bad.append(Violation("Scw2", f"par componível ({a},{b}) sem composição", (a, b)))

    for a, b, c in s.composable_triples():
        ab, bc = s.compose(a, b), s.compose(b, c)
        if ab is None or bc is None:
            continue
        left, right = s.compose(ab, c), s.compose(a, bc)
        if left is None or right is None or left != right:
            bad.append(Violation("Scw3", f"({a}{b}){c} ≠ {a}({b}{c})", (a, b, c)))

    for a, (u, v) in enumerate(s.edges):
        if u == v:
            bad.append(Violation("Scw4", f"i({a}) = t({a}) = {u}", (a,)))

    if bad:
        logger.warning(f"⚠️ scwol inválido: {len(bad)} violações")
    return report


# ─────────────────────────────────────────────────────────
# Complexos combinatórios
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class CellComplex:
    """2-complexo: arestas como pares de vértices, triângulos como triplas de arestas."""
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[int, int], ...] = ()
    triangles: Tuple[Tuple[int, int, int], ...] = ()


def scwol_from_complex(cells: CellComplex) -> Scwol:
    """
    Um vértice por célula; uma aresta por par célula ⊃ face (da maior para a menor);
    composições (e → w)(T → e) = (T → w).
    """
    nv, ne = len(cells.vertices), len(cells.edges)
    for k, (u, v) in enumerate(cells.edges):
        if not (0 <= u < nv and 0 <= v < nv) or u == v:
            raise InconsistentIncidence(f"aresta {k} precisa de dois vértices distintos")
    for k, tri in enumerate(cells.triangles):
        if len(set(tri)) != 3 or any(not 0 <= e < ne for e in tri):
            raise InconsistentIncidence(f"triângulo {k} precisa de 3 arestas distintas")
        counts: Dict[int, int] = {}
        for e in tri:
            for w in cells.edges[e]:
                counts[w] = counts.get(w, 0) + 1
        if len(counts) != 3 or set(counts.values()) != {2}:
            raise InconsistentIncidence(f"arestas do triângulo {k} não fecham um ciclo")

    names = list(cells.vertices)
    names += [f"{cells.vertices[u]}{cells.vertices[v]}" for u, v in cells.edges]
    names += [f"T{k}" for k in range(len(cells.triangles))]
    dims = [0] * nv + [1] * ne + [2] * len(cells.triangles)
    edge_cell = lambda e: nv + e
    tri_cell = lambda k: nv + ne + k

    edges: List[Tuple[int, int]] = []
    index: Dict[Tuple[int, int], int] = {}

    def add(i: int, t: int) -> int:
        index[(i, t)] = len(edges)
        edges.append((i, t))
        return index[(i, t)]

    for e, (u, v) in enumerate(cells.edges):
        add(edge_cell(e), u)
        add(edge_cell(e), v)
    comps = []
    for k, tri in enumerate(cells.triangles):
        T = tri_cell(k)
        for e in tri:
            add(T, edge_cell(e))
        for w in sorted({w for e in tri for w in cells.edges[e]}):
            add(T, w)
        for e in tri:
            for w in cells.edges[e]:
                comps.append((index[(edge_cell(e), w)], index[(T, edge_cell(e))], index[(T, w)]))

    s = Scwol(tuple(names), tuple(edges), tuple(comps), tuple(dims))
    logger.info(f"📦 scwol: {s.n_vertices} vértices, {s.n_edges} arestas, {len(comps)} composições")
    return s


def graph_complex(n_vertices: int, edges: Sequence[Tuple[int, int]],
                  names: Optional[Sequence[str]] = None) -> CellComplex:
    names = tuple(names) if names else tuple(f"v{i}" for i in range(n_vertices))
    return CellComplex(names, tuple(tuple(e) for e in edges))


def cycle_complex(n: int) -> CellComplex:
    return graph_complex(n, [(k, (k + 1) % n) for k in range(n)])


def tetrahedron_boundary() -> CellComplex:
    verts = ("0", "1", "2", "3")
    edges = list(combinations(range(4), 2))
    idx = {e: k for k, e in enumerate(edges)}
    tris = []
    for a, b, c in combinations(range(4), 3):
        tris.append((idx[(a, b)], idx[(b, c)], idx[(a, c)]))
    return CellComplex(verts, tuple(edges), tuple(tris))


def torus_complex(m: int = 3) -> CellComplex:
    """Toro triangulado pela grade m×m com diagonais."""
    vid = lambda i, j: (i % m) * m + (j % m)
    verts = tuple(f"p{i}{j}" for i in range(m) for j in range(m))
    edges: List[Tuple[int, int]] = []
    idx: Dict[frozenset, int] = {}

    def edge(u: int, v: int) -> int:
        key = frozenset((u, v))
        if key not in idx:
            idx[key] = len(edges)
            edges.append((u, v))
        return idx[key]

    tris = []
    for i in range(m):
        for j in range(m):
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)
            tris.append((edge(a, b), edge(b, c), edge(a, c)))
            tris.append((edge(a, d), edge(d, c), edge(a, c)))
    return CellComplex(verts, tuple(edges), tuple(tris))


# ─────────────────────────────────────────────────────────
# Caminhos de arestas
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class EdgePath:
    """Passos (aresta, ±1); +1 percorre t(a) → i(a)."""
    start: int
    steps: Tuple[Tuple[int, int], ...] = ()

    def end(self, s: Scwol) -> int:
        v = self.start
        for a, sign in self.steps:
            src, dst = (s.t(a), s.i(a)) if sign > 0 else (s.i(a), s.t(a))
            if src != v:
                raise ValueError(f"passo ({a},{sign}) não parte de {v}")
            v = dst
        return v

    def is_loop(self, s: Scwol) -> bool:
        return self.end(s) == self.start

    def inverse(self, s: Scwol) -> "EdgePath":
        return EdgePath(self.end(s), tuple((a, -sign) for a, sign in reversed(self.steps)))


def reduce_edge_path(s: Scwol, path: EdgePath) -> EdgePath:
    """Aplica cancelamento a^ε a^-ε e colapso a⁺b⁺ → (ab)⁺ (e b⁻a⁻ → (ab)⁻) até estabilizar."""
    path.end(s)
    steps = list(path.steps)
    changed = True
    while changed:
        changed = False
        for k in range(len(steps) - 1):
            (a, e1), (b, e2) = steps[k], steps[k + 1]
            if a == b and e1 == -e2:
                del steps[k:k + 2]
                changed = True
                break
            if e1 == e2 == 1 and s.compose(a, b) is not None:
                steps[k:k + 2] = [(s.compose(a, b), 1)]
                changed = True
                break
            if e1 == e2 == -1 and s.compose(b, a) is not None:
                steps[k:k + 2] = [(s.compose(b, a), -1)]
                changed = True
                break
    return EdgePath(path.start, tuple(steps))


def edge_path_word(s: Scwol, path: EdgePath) -> Word:
    """Palavra na apresentação de π₁ (gerador k = aresta k)."""
    path.end(s)
    return Word((a + 1) * sign for a, sign in path.steps)


# ─────────────────────────────────────────────────────────
# π₁ do scwol
# ─────────────────────────────────────────────────────────

def spanning_tree_edges(s: Scwol, base: int) -> List[int]:
    """Árvore BFS a partir de base; entre dois vértices vale a aresta de menor índice."""
    g = s.underlying_graph()
    if s.n_vertices == 0 or not nx.is_connected(g):
        raise Disconnected("scwol desconexo")
    tree = []
    for u, v in nx.bfs_edges(g, base):
        tree.append(min(g[u][v]))
    return sorted(tree)


def edge_generator_names(s: Scwol) -> Tuple[str, ...]:
    return tuple(f"e{a}" for a in range(s.n_edges))


def scwol_pi1_presentation(s: Scwol, base: int = 0) -> GroupPresentation:
    """Geradores a⁺; relatores a⁺b⁺(ab)⁺⁻¹ e e⁺ para arestas da árvore."""
    tree = spanning_tree_edges(s, base)
    relators = [Word([a + 1, b + 1, -(ab + 1)]) for a, b, ab in s.compositions]
    relators += [Word([e + 1]) for e in tree]
    return GroupPresentation(edge_generator_names(s), tuple(relators))


# ─────────────────────────────────────────────────────────
# Ações de grupos
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ScwolAction:
    """vertex_map[g][v] = g·v e edge_map[g][a] = g·a."""
    scwol: Scwol
    group: FiniteGroupTable
    vertex_map: Tuple[Tuple[int, ...], ...]
    edge_map: Tuple[Tuple[int, ...], ...]

    def on_vertex(self, g: int, v: int) -> int:
        return self.vertex_map[g][v]

    def on_edge(self, g: int, a: int) -> int:
        return self.edge_map[g][a]

    def vertex_orbits(self) -> List[List[int]]:
        return _orbits(self.scwol.n_vertices, self.vertex_map)

    def edge_orbits(self) -> List[List[int]]:
        return _orbits(self.scwol.n_edges, self.edge_map)

    def stabilizer(self, v: int) -> List[int]:
        return [g for g in self.group.elements if self.vertex_map[g][v] == v]


def _orbits(n: int, maps: Sequence[Sequence[int]]) -> List[List[int]]:
    seen = set()
    out = []
    for x in range(n):
        if x in seen:
            continue
        orbit = sorted({m[x] for m in maps})
        seen.update(orbit)
        out.append(orbit)
    return out


@dataclass
class ActionReport:
    violations: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_action(action: ScwolAction) -> ActionReport:
    """Homomorfismo em Aut(X), condição (i) g·i(a) ≠ t(a) e (ii) g·i(a) = i(a) ⇒ g·a = a."""
    s, G = action.scwol, action.group
    report = ActionReport()
    bad = report.violations
    if len(action.vertex_map) != G.order or len(action.edge_map) != G.order:
        bad.append("mapas de ação com tamanho diferente da ordem do grupo")
        return report
    for g in G.elements:
        vm, em = action.vertex_map[g], action.edge_map[g]
        if sorted(vm) != list(range(s.n_vertices)) or sorted(em) != list(range(s.n_edges)):
            bad.append(f"{G.labels[g]} não age bijetivamente")
            continue
        for a in range(s.n_edges):
            if s.i(em[a]) != vm[s.i(a)] or s.t(em[a]) != vm[s.t(a)]:
                bad.append(f"{G.labels[g]} não preserva extremos da aresta {a}")
        for a, b, ab in s.compositions:
            if s.compose(em[a], em[b]) != em[ab]:
                bad.append(f"{G.labels[g]} não preserva a composição ({a},{b})")
    for g in G.elements:
        for h in G.elements:
            gh = G.mul(g, h)
            if any(action.vertex_map[gh][v] != action.vertex_map[g][action.vertex_map[h][v]]
                   for v in range(s.n_vertices)):
                bad.append(f"ação não é homomorfismo em ({G.labels[g]},{G.labels[h]})")
    if any(action.vertex_map[G.identity][v] != v for v in range(s.n_vertices)):
        bad.append("identidade não age trivialmente")
    for g in G.elements:
        for a in range(s.n_edges):
            gi = action.vertex_map[g][s.i(a)]
            if gi == s.t(a):
                bad.append(f"condição (i): {G.labels[g]}·i({a}) = t({a})")
            if gi == s.i(a) and action.edge_map[g][a] != a:
                bad.append(f"condição (ii): {G.labels[g]} fixa i({a}) mas move {a}")
    return report
