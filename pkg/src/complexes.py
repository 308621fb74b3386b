"""
complexes.py
────────────
Complexos de grupos sobre scwols:

  ComplexOfGroups            — grupos locais, monomorfismos ψ_a e torções g_{a,b}
  check_cog                  — comutatividade torcida, cociclo, injetividade
  universal_group_presentation / cog_pi1_presentation — FG(Y) e π₁(G(Y), σ₀)
  check_developability / development — morfismo φ para um grupo finito G e o
                               desenvolvimento com a ação natural de G
  quotient_cog               — complexo de grupos associado a uma ação
  cog_isomorphic             — busca com retrocesso (até 20 vértices)

Grupos dados por tabela são verificados elemento a elemento; grupos dados por
apresentação são carregados simbolicamente e as verificações ficam marcadas.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from errors import InvalidAction, NotDevelopable, SizeOverflow
from groups import FiniteGroupTable, GroupPresentation, Word
from scwols import (
    CellComplex, Scwol, ScwolAction, graph_complex, scwol_from_complex, spanning_tree_edges,
    validate_action, validate_scwol,
)

logger = logging.getLogger(__name__)

# ── Configurações ─────────────────────────────────────────
COG_ISOMORPHISM_MAX_VERTICES = 20

LocalGroup = Union[FiniteGroupTable, GroupPresentation]
# elemento de grupo local: índice (tabela) ou palavra (apresentação)
Element = Union[int, Word]


# ─────────────────────────────────────────────────────────
# Complexo de grupos
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ComplexOfGroups:
    """
    `psi[a]` leva G_{i(a)} em G_{t(a)}: tupla de imagens de todos os elementos
    (tabela) ou das palavras-imagem dos geradores (apresentação).
    `twisting[(a, b)]` ∈ G_{t(a)}; ausente significa identidade.
    """
    scwol: Scwol
    groups: Tuple[LocalGroup, ...]
    psi: Tuple[Tuple[Element, ...], ...]
    twisting: Dict[Tuple[int, int], Element] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "psi", tuple(tuple(m) for m in self.psi))
        if len(self.groups) != self.scwol.n_vertices:
            raise ValueError("um grupo local por vértice")
        if len(self.psi) != self.scwol.n_edges:
            raise ValueError("um monomorfismo por aresta")
        for a, b in self.twisting:
            if self.scwol.compose(a, b) is None:
                raise ValueError(f"torção em par não componível ({a},{b})")

    @classmethod
    def trivial(cls, scwol: Scwol) -> "ComplexOfGroups":
        one = FiniteGroupTable.trivial()
        return cls(scwol, (one,) * scwol.n_vertices, ((0,),) * scwol.n_edges)

    @property
    def finite(self) -> bool:
        return all(isinstance(g, FiniteGroupTable) for g in self.groups)

    def g(self, a: int, b: int) -> Element:
        if (a, b) in self.twisting:
            return self.twisting[(a, b)]
        return _identity(self.groups[self.scwol.t(a)])

    def apply_psi(self, a: int, x: int) -> int:
        return self.psi[a][x]


def _identity(G: LocalGroup) -> Element:
    return G.identity if isinstance(G, FiniteGroupTable) else Word()


# ── Verificação ──────────────────────────────────────────

@dataclass
class CogReport:
    violations: List[str] = field(default_factory=list)
    simple: bool = True
    symbolic: bool = False       # algum grupo por apresentação: checagens puladas

    @property
    def valid(self) -> bool:
        return not self.violations


def check_cog(cog: ComplexOfGroups) -> CogReport:
    """Monomorfismos, comutatividade torcida e cociclo (vazio em dimensão ≤ 2)."""
    s = cog.scwol
    report = CogReport(simple=all(_is_identity(cog.groups[s.t(a)], g)
                                  for (a, _), g in cog.twisting.items()))
    bad = report.violations
    if not cog.finite:
        report.symbolic = True
        for a, images in enumerate(cog.psi):
            src, dst = cog.groups[s.i(a)], cog.groups[s.t(a)]
            if isinstance(src, GroupPresentation) and len(images) != src.n_gens:
                bad.append(f"ψ_{a}: {len(images)} imagens para {src.n_gens} geradores")
            if isinstance(dst, GroupPresentation):
                for w in images:
                    dst.check_word(w)
        logger.warning("⚠️ grupos locais simbólicos: comutatividade torcida não verificada")
        return report

    for a, images in enumerate(cog.psi):
        src, dst = cog.groups[s.i(a)], cog.groups[s.t(a)]
        if len(images) != src.order or any(not 0 <= y < dst.order for y in images):
            bad.append(f"ψ_{a} não é uma função G_{s.i(a)} → G_{s.t(a)}")
            continue
        witness = src.is_homomorphism(images, dst)
        if witness is not None:
            bad.append(f"ψ_{a} não é homomorfismo em {witness}")
        if len(set(images)) != src.order:
            bad.append(f"ψ_{a} não é injetivo")
    if bad:
        return report

    for a, b, ab in s.compositions:
        G = cog.groups[s.t(a)]
        g = cog.g(a, b)
        for x in cog.groups[s.i(b)].elements:
            if G.conj(g, cog.psi[ab][x]) != cog.psi[a][cog.psi[b][x]]:
                bad.append(f"comutatividade torcida falha em ({a},{b}) para x = {x}")
                break

    for a, b, c in s.composable_triples():
        ab, bc = s.compose(a, b), s.compose(b, c)
        G = cog.groups[s.t(a)]
        left = G.mul(cog.psi[a][cog.g(b, c)], cog.g(a, bc))
        right = G.mul(cog.g(a, b), cog.g(ab, c))
        if left != right:
            bad.append(f"cociclo falha em ({a},{b},{c})")
    return report


def _is_identity(G: LocalGroup, x: Element) -> bool:
    return x == _identity(G)


# ─────────────────────────────────────────────────────────
# Grafos de grupos
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class GraphEdge:
    """Aresta u —— v com grupo de aresta e inclusões nos dois extremos."""
    u: int
    v: int
    group: FiniteGroupTable
    into_u: Tuple[int, ...]
    into_v: Tuple[int, ...]


def graph_of_groups(vertex_groups: Sequence[FiniteGroupTable], edges: Sequence[GraphEdge],
                    names: Optional[Sequence[str]] = None) -> ComplexOfGroups:
    """Subdivisão baricêntrica: grupos de vértice nos vértices, grupos de aresta nas arestas."""
    cells = graph_complex(len(vertex_groups), [(e.u, e.v) for e in edges], names)
    s = scwol_from_complex(cells)
    groups = list(vertex_groups) + [e.group for e in edges]
    psi = []
    for e in edges:
        psi.append(tuple(e.into_u))
        psi.append(tuple(e.into_v))
    return ComplexOfGroups(s, tuple(groups), tuple(psi))


def complex_with_trivial_groups(cells: CellComplex) -> ComplexOfGroups:
    return ComplexOfGroups.trivial(scwol_from_complex(cells))


# ─────────────────────────────────────────────────────────
# Grupo universal e π₁
# ─────────────────────────────────────────────────────────

def universal_group_presentation(cog: ComplexOfGroups) -> GroupPresentation:
    """
    Geradores: elementos (ou geradores) de cada G_σ, depois a⁺ por aresta.
    Relações: as de cada G_σ, a⁺b⁺ = g_{a,b}(ab)⁺ e ψ_a(x) = a⁺ x a⁻.
    """
    s = cog.scwol
    names: List[str] = []
    offset: List[int] = []
    for v, G in enumerate(cog.groups):
        offset.append(len(names))
        if isinstance(G, FiniteGroupTable):
            names += [f"v{v}_{x}" for x in G.elements]
        else:
            names += [f"v{v}_{n}" for n in G.generators]
    edge_base = len(names)
    names += [f"e{a}" for a in range(s.n_edges)]

    def local(v: int, x: Element) -> Word:
        if isinstance(x, Word):
            return Word((abs(l) + offset[v]) * (1 if l > 0 else -1) for l in x)
        return Word.gen(offset[v] + x)

    def plus(a: int) -> Word:
        return Word.gen(edge_base + a)

    relators: List[Word] = []
    for v, G in enumerate(cog.groups):
        if isinstance(G, FiniteGroupTable):
            relators.append(local(v, G.identity))
            for x in G.elements:
                for y in G.elements:
                    relators.append(local(v, x) * local(v, y) * local(v, G.mul(x, y)).inverse())
        else:
            relators += [local(v, r) for r in G.relators]

    for a, b, ab in s.compositions:
        g = local(s.t(a), cog.g(a, b))
        relators.append(plus(a) * plus(b) * plus(ab).inverse() * g.inverse())

    for a, images in enumerate(cog.psi):
        src = cog.groups[s.i(a)]
        xs = list(src.elements) if isinstance(src, FiniteGroupTable) else [Word.gen(k) for k in range(src.n_gens)]
        for x, img in zip(xs, images):
            lhs = local(s.t(a), img)
            relators.append(lhs.inverse() * plus(a) * local(s.i(a), x) * plus(a).inverse())

    pres = GroupPresentation(tuple(names), tuple(r for r in relators if len(r)))
    logger.info(f"FG(Y): {pres.n_gens} geradores, {len(pres.relators)} relatores")
    return pres


def cog_pi1_presentation(cog: ComplexOfGroups, base: int = 0) -> GroupPresentation:
    """FG(Y) com a⁺ = 1 nas arestas da árvore geradora BFS."""
    tree = spanning_tree_edges(cog.scwol, base)
    fg = universal_group_presentation(cog)
    edge_base = fg.n_gens - cog.scwol.n_edges
    extra = tuple(Word.gen(edge_base + a) for a in tree)
    return GroupPresentation(fg.generators, fg.relators + extra)


# ─────────────────────────────────────────────────────────
# Morfismos para um grupo finito
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class GroupMorphism:
    """φ = (φ_σ, φ(a)) de G(Y) para o grupo finito `target`."""
    target: FiniteGroupTable
    local: Tuple[Tuple[int, ...], ...]
    twist: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "local", tuple(tuple(m) for m in self.local))
        object.__setattr__(self, "twist", tuple(self.twist))

    def image(self, v: int) -> frozenset:
        return frozenset(self.local[v])


@dataclass
class DevelopabilityReport:
    injective: bool = True
    morphism: bool = True
    violations: List[str] = field(default_factory=list)

    @property
    def developable(self) -> bool:
        return self.injective and self.morphism and not self.violations


def check_developability(cog: ComplexOfGroups, phi: GroupMorphism) -> DevelopabilityReport:
    """
    φ_{t(a)}∘ψ_a = Ad(φ(a))∘φ_{i(a)}, φ_{t(a)}(g_{a,b})φ(ab) = φ(a)φ(b)
    e injetividade de cada φ_σ.
    """
    report = DevelopabilityReport()
    bad = report.violations
    s, G = cog.scwol, phi.target
    if not cog.finite:
        report.morphism = False
        bad.append("grupos locais simbólicos: desenvolvimento exige tabelas")
        return report
    if len(phi.local) != s.n_vertices or len(phi.twist) != s.n_edges:
        report.morphism = False
        bad.append("φ com número errado de componentes")
        return report

    for v, H in enumerate(cog.groups):
        f = phi.local[v]
        if len(f) != H.order or any(not 0 <= y < G.order for y in f):
            report.morphism = False
            bad.append(f"φ_{v} não é uma função G_{v} → G")
            continue
        witness = H.is_homomorphism(f, G)
        if witness is not None:
            report.morphism = False
            bad.append(f"φ_{v} não é homomorfismo em {witness}")
        if len(set(f)) != H.order:
            report.injective = False
            bad.append(f"φ_{v} não é injetivo")
    if bad:
        return report

    for a in range(s.n_edges):
        fa = phi.twist[a]
        src, dst = phi.local[s.i(a)], phi.local[s.t(a)]
        for x in cog.groups[s.i(a)].elements:
            if dst[cog.psi[a][x]] != G.conj(fa, src[x]):
                report.morphism = False
                bad.append(f"φ_{s.t(a)}∘ψ_{a} ≠ Ad(φ({a}))∘φ_{s.i(a)} em x = {x}")
                break
    for a, b, ab in s.compositions:
        lhs = G.mul(phi.local[s.t(a)][cog.g(a, b)], phi.twist[ab])
        if lhs != G.mul(phi.twist[a], phi.twist[b]):
            report.morphism = False
            bad.append(f"φ_{s.t(a)}(g_{a},{b})φ({ab}) ≠ φ({a})φ({b})")
    return report


# ─────────────────────────────────────────────────────────
# Desenvolvimento
# ─────────────────────────────────────────────────────────

def development(cog: ComplexOfGroups, phi: GroupMorphism) -> Tuple[Scwol, ScwolAction]:
    """
    Vértices (σ, gH_σ), H_σ = φ_σ(G_σ); arestas (a, gH_{i(a)}) com
    t = (t(a), gφ(a)⁻¹H_{t(a)}); G age por multiplicação à esquerda.
    """
    report = check_developability(cog, phi)
    if not report.developable:
        raise NotDevelopable(f"φ não serve: {report.violations[0]}", report)
    Y, G = cog.scwol, phi.target

    cosets = [G.left_cosets(phi.image(v)) for v in range(Y.n_vertices)]
    vindex: Dict[Tuple[int, frozenset], int] = {}
    names, dims = [], []
    for v in range(Y.n_vertices):
        for k, c in enumerate(cosets[v]):
            vindex[(v, c)] = len(names)
            names.append(f"{Y.vertices[v]}:{k}")
            dims.append(Y.dims[v])

    def coset(v: int, g: int) -> frozenset:
        return G.left_coset(g, phi.image(v))

    edges: List[Tuple[int, int]] = []
    eindex: Dict[Tuple[int, frozenset], int] = {}
    for a in range(Y.n_edges):
        ia, ta = Y.i(a), Y.t(a)
        back = G.inv(phi.twist[a])
        for c in cosets[ia]:
            g = min(c)
            eindex[(a, c)] = len(edges)
            edges.append((vindex[(ia, c)], vindex[(ta, coset(ta, G.mul(g, back)))]))

    comps = []
    for a, b, ab in Y.compositions:
        for c in cosets[Y.i(b)]:
            g = min(c)
            upper = coset(Y.i(a), G.mul(g, G.inv(phi.twist[b])))
            comps.append((eindex[(a, upper)], eindex[(b, c)], eindex[(ab, c)]))

    X = Scwol(tuple(names), tuple(edges), tuple(comps), tuple(dims))
    vkeys = sorted(vindex, key=vindex.get)
    ekeys = sorted(eindex, key=eindex.get)
    vertex_map = tuple(
        tuple(vindex[(v, G.left_coset(x, c))] for v, c in vkeys) for x in G.elements
    )
    edge_map = tuple(
        tuple(eindex[(a, G.left_coset(x, c))] for a, c in ekeys) for x in G.elements
    )
    action = ScwolAction(X, G, vertex_map, edge_map)

    scwol_report, action_report = validate_scwol(X), validate_action(action)
    if not scwol_report.valid or not action_report.valid:
        raise NotDevelopable("desenvolvimento inválido", report)
    logger.info(f"✅ desenvolvimento: {X.n_vertices} vértices, {X.n_edges} arestas, "
                f"células {X.cells_by_dimension()}")
    return X, action


# ─────────────────────────────────────────────────────────
# Quociente por uma ação
# ─────────────────────────────────────────────────────────

def subgroup_table(G: FiniteGroupTable, elements: Sequence[int]) -> Tuple[FiniteGroupTable, Tuple[int, ...]]:
    """Subgrupo como tabela própria e a inclusão (índice local → elemento de G)."""
    members = tuple(sorted(elements))
    pos = {x: k for k, x in enumerate(members)}
    table = tuple(tuple(pos[G.mul(x, y)] for y in members) for x in members)
    H = FiniteGroupTable(table=table, identity=pos[G.identity],
                         labels=tuple(G.labels[x] for x in members))
    return H, members


def quotient_cog(action: ScwolAction) -> Tuple[ComplexOfGroups, GroupMorphism]:
    """
    Levantamentos pelo menor índice da órbita; grupos locais = isotropia;
    ψ_a(g) = h_a g h_a⁻¹, g_{a,b} = h_a h_b h_ab⁻¹, φ_σ inclusão e φ(a) = h_a.
    """
    report = validate_action(action)
    if not report.valid:
        raise InvalidAction(f"ação inválida: {report.violations[0]}", report.violations)
    X, G = action.scwol, action.group

    vorbits, eorbits = action.vertex_orbits(), action.edge_orbits()
    vorbit_of = {v: k for k, orb in enumerate(vorbits) for v in orb}
    eorbit_of = {e: k for k, orb in enumerate(eorbits) for e in orb}
    vlift = [orb[0] for orb in vorbits]

    edges, elift, h = [], [], []
    for orb in eorbits:
        i_q, t_q = vorbit_of[X.i(orb[0])], vorbit_of[X.t(orb[0])]
        lifted = min(e for e in orb if X.i(e) == vlift[i_q])
        h_a = min(g for g in G.elements if action.on_vertex(g, X.t(lifted)) == vlift[t_q])
        edges.append((i_q, t_q))
        elift.append(lifted)
        h.append(h_a)

    pre = Scwol(tuple(X.vertices[v] for v in vlift), tuple(edges))
    comps = []
    for a, b in pre.composable_pairs():
        upper = action.on_edge(G.inv(h[b]), elift[a])
        composite = X.compose(upper, elift[b])
        if composite is None:
            raise InvalidAction(f"composição ausente sobre ({a},{b})")
        comps.append((a, b, eorbit_of[composite]))
    Y = Scwol(pre.vertices, pre.edges, tuple(comps), tuple(X.dims[v] for v in vlift))

    groups, incl, where = [], [], []
    for v in vlift:
        H, members = subgroup_table(G, action.stabilizer(v))
        groups.append(H)
        incl.append(members)
        where.append({x: k for k, x in enumerate(members)})

    psi = []
    for a in range(Y.n_edges):
        src, dst = incl[Y.i(a)], where[Y.t(a)]
        psi.append(tuple(dst[G.conj(h[a], x)] for x in src))
    twisting = {}
    for a, b, ab in Y.compositions:
        g = G.mul(h[a], h[b], G.inv(h[ab]))
        if g != G.identity:
            twisting[(a, b)] = where[Y.t(a)][g]

    cog = ComplexOfGroups(Y, tuple(groups), tuple(psi), twisting)
    phi = GroupMorphism(G, tuple(incl), tuple(h))
    logger.info(f"📦 quociente: {Y.n_vertices} vértices, {Y.n_edges} arestas, "
                f"{len(twisting)} torções não triviais")
    return cog, phi


# ─────────────────────────────────────────────────────────
# Isomorfismos
# ─────────────────────────────────────────────────────────

def element_order(G: FiniteGroupTable, x: int) -> int:
    k, y = 1, x
    while y != G.identity:
        y = G.mul(y, x)
        k += 1
    return k


def generating_set(G: FiniteGroupTable) -> List[int]:
    gens: List[int] = []
    sub = G.generated_subgroup(gens)
    for x in G.elements:
        if x not in sub:
            gens.append(x)
            sub = G.generated_subgroup(gens)
    return gens


def group_isomorphisms(G: FiniteGroupTable, H: FiniteGroupTable) -> Iterator[Tuple[int, ...]]:
    """Isomorfismos G → H determinados pelas imagens de um conjunto gerador."""
    if G.order != H.order:
        return
    gens = generating_set(G)
    candidates = [[y for y in H.elements if element_order(H, y) == element_order(G, x)] for x in gens]
    for images in product(*candidates):
        f = {G.identity: H.identity}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            x = frontier.pop(0)
            for g, img in zip(gens, images):
                y, fy = G.mul(x, g), H.mul(f[x], img)
                if y in f:
                    if f[y] != fy:
                        ok = False
                        break
                else:
                    f[y] = fy
                    frontier.append(y)
        if not ok or len(set(f.values())) != G.order:
            continue
        mapping = tuple(f[x] for x in G.elements)
        if G.is_homomorphism(mapping, H) is None:
            yield mapping


@dataclass(frozen=True)
class CogIsomorphism:
    vertex_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]
    local: Tuple[Tuple[int, ...], ...]
    twist: Tuple[int, ...]        # φ(a) ∈ G'_{t(f(a))}


def check_cog_morphism(A: ComplexOfGroups, B: ComplexOfGroups, m: CogIsomorphism) -> List[str]:
    """
    Axiomas de morfismo:
      Ad(φ(a))∘ψ'_{f(a)}∘φ_{i(a)} = φ_{t(a)}∘ψ_a
      φ_{t(a)}(g_{a,b})φ(ab) = φ(a)ψ'_{f(a)}(φ(b))g'_{f(a),f(b)}
    """
    bad = []
    s, sb = A.scwol, B.scwol
    for a in range(s.n_edges):
        fa = m.edge_map[a]
        if (sb.i(fa), sb.t(fa)) != (m.vertex_map[s.i(a)], m.vertex_map[s.t(a)]):
            bad.append(f"aresta {a} não preserva extremos")
            continue
        T = B.groups[sb.t(fa)]
        for x in A.groups[s.i(a)].elements:
            left = T.conj(m.twist[a], B.psi[fa][m.local[s.i(a)][x]])
            if left != m.local[s.t(a)][A.psi[a][x]]:
                bad.append(f"primeiro axioma falha na aresta {a}")
                break
    for a, b, ab in s.compositions:
        fa, fb = m.edge_map[a], m.edge_map[b]
        if sb.compose(fa, fb) != m.edge_map[ab]:
            bad.append(f"composição ({a},{b}) não preservada")
            continue
        T = B.groups[sb.t(fa)]
        lhs = T.mul(m.local[s.t(a)][A.g(a, b)], m.twist[ab])
        rhs = T.mul(m.twist[a], B.psi[fa][m.twist[b]], B.g(fa, fb))
        if lhs != rhs:
            bad.append(f"segundo axioma falha em ({a},{b})")
    return bad


def find_cog_isomorphism(A: ComplexOfGroups, B: ComplexOfGroups) -> Optional[CogIsomorphism]:
    sa, sb = A.scwol, B.scwol
    if max(sa.n_vertices, sb.n_vertices) > COG_ISOMORPHISM_MAX_VERTICES:
        raise SizeOverflow(f"busca de isomorfismo limitada a {COG_ISOMORPHISM_MAX_VERTICES} vértices")
    if not (A.finite and B.finite):
        raise ValueError("isomorfismo exige grupos locais finitos")
    if (sa.n_vertices, sa.n_edges, len(sa.compositions)) != (sb.n_vertices, sb.n_edges, len(sb.compositions)):
        return None
    if sorted(g.order for g in A.groups) != sorted(g.order for g in B.groups):
        return None

    def signature(s: Scwol, cog: ComplexOfGroups, v: int) -> Tuple[int, int, int]:
        out = sum(1 for a in range(s.n_edges) if s.i(a) == v)
        inc = sum(1 for a in range(s.n_edges) if s.t(a) == v)
        return cog.groups[v].order, out, inc

    sig_a = [signature(sa, A, v) for v in range(sa.n_vertices)]
    sig_b = [signature(sb, B, v) for v in range(sb.n_vertices)]
    iso_cache: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}

    def local_isos(v: int, w: int) -> List[Tuple[int, ...]]:
        if (v, w) not in iso_cache:
            iso_cache[(v, w)] = list(group_isomorphisms(A.groups[v], B.groups[w]))
        return iso_cache[(v, w)]

    def vertex_maps(k: int, fv: List[int]) -> Iterator[List[int]]:
        if k == sa.n_vertices:
            yield fv
            return
        for w in range(sb.n_vertices):
            if w not in fv and sig_a[k] == sig_b[w] and local_isos(k, w):
                yield from vertex_maps(k + 1, fv + [w])

    def edge_maps(k: int, fv: List[int], fe: List[int]) -> Iterator[List[int]]:
        if k == sa.n_edges:
            yield fe
            return
        target = (fv[sa.i(k)], fv[sa.t(k)])
        for b in range(sb.n_edges):
            if b in fe or (sb.i(b), sb.t(b)) != target:
                continue
            fe2 = fe + [b]
            if all(sb.compose(fe2[x], fe2[y]) == fe2[xy]
                   for x, y, xy in sa.compositions if max(x, y, xy) <= k):
                yield from edge_maps(k + 1, fv, fe2)

    def locals_(k: int, fv: List[int], loc: List[Tuple[int, ...]]) -> Iterator[List[Tuple[int, ...]]]:
        if k == sa.n_vertices:
            yield loc
            return
        for f in local_isos(k, fv[k]):
            yield from locals_(k + 1, fv, loc + [f])

    def twists(k: int, fv, fe, loc, tw: List[int]) -> Iterator[List[int]]:
        if k == sa.n_edges:
            yield tw
            return
        T = B.groups[sb.t(fe[k])]
        src, dst = loc[sa.i(k)], loc[sa.t(k)]
        for c in T.elements:
            if any(T.conj(c, B.psi[fe[k]][src[x]]) != dst[A.psi[k][x]]
                   for x in A.groups[sa.i(k)].elements):
                continue
            tw2 = tw + [c]
            ok = True
            for a, b, ab in sa.compositions:
                if max(a, b, ab) > k:
                    continue
                Ta = B.groups[sb.t(fe[a])]
                lhs = Ta.mul(loc[sa.t(a)][A.g(a, b)], tw2[ab])
                rhs = Ta.mul(tw2[a], B.psi[fe[a]][tw2[b]], B.g(fe[a], fe[b]))
                if lhs != rhs:
                    ok = False
                    break
            if ok:
                yield from twists(k + 1, fv, fe, loc, tw2)

    for fv in vertex_maps(0, []):
        for fe in edge_maps(0, fv, []):
            for loc in locals_(0, fv, []):
                for tw in twists(0, fv, fe, loc, []):
                    m = CogIsomorphism(tuple(fv), tuple(fe), tuple(loc), tuple(tw))
                    if not check_cog_morphism(A, B, m):
                        return m
    return None


def cog_isomorphic(A: ComplexOfGroups, B: ComplexOfGroups) -> bool:
    found = find_cog_isomorphism(A, B) is not None
    logger.debug(f"cog_isomorphic: {found}")
    return found
