"""
building.py
───────────
Representações de grupos finitamente apresentados sobre F(t) e a ação
induzida nos vértices do prédio de SL(n):

  evaluate / verify_relators   — avaliação exata de palavras
  fixed_vertex                 — critério do polinômio característico
  nontriviality_certificate    — primeira palavra com traço de valoração < 0
  orbit_ball                   — janela finita da órbita (networkx)
  link_of_vertex / ball        — enumeração exaustiva com corpo residual F_p
  pullback                     — restrição ao longo de um GroupHom
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from errors import (
    ConfigError, IndexOutOfRange, NotUnimodular, RelatorFailure, UnsupportedDimension,
)
from fields import FieldElement, FunctionField, Place, PrimeField, valuation
from groups import GroupHom, GroupPresentation, Word, enumerate_words
from lattices import VertexClass, act, span_class, standard_vertex, vertex_type
from matrices import MatrixK

logger = logging.getLogger(__name__)

# ── Configurações ─────────────────────────────────────────
LINK_MAX_DIMENSION = 3


# ─────────────────────────────────────────────────────────
# Representações
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Representation:
    """Gerador i ↦ images[i] ∈ SL_n(F(t)). `verified` vem de verify()."""
    presentation: GroupPresentation
    images: Tuple[MatrixK, ...]
    verified: bool = False
    _inverses: Dict[int, MatrixK] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.presentation.n_gens:
            raise ValueError(
                f"{len(self.images)} imagens para {self.presentation.n_gens} geradores"
            )
        n = self.images[0].n if self.images else 0
        if any(not g.is_square or g.n != n for g in self.images):
            raise ValueError("imagens precisam ser quadradas e da mesma dimensão")

    @property
    def dimension(self) -> int:
        return self.images[0].n

    @property
    def field(self) -> FunctionField:
        return self.images[0].field

    def letter(self, x: int) -> MatrixK:
        i = abs(x) - 1
        if not 0 <= i < len(self.images):
            raise IndexOutOfRange(f"letra {x} fora de {len(self.images)} geradores")
        if x > 0:
            return self.images[i]
        if i not in self._inverses:
            self._inverses[i] = self.images[i].inverse()
        return self._inverses[i]

    def verify(self) -> "Representation":
        """Cópia marcada como verificada; RelatorFailure se algo falhar."""
        report = verify_relators(self)
        if not report.passed:
            bad = report.first_failure()
            raise RelatorFailure(
                f"relator {bad.text} não avalia para a identidade",
                relator=bad.relator, matrix=bad.matrix,
            )
        return Representation(self.presentation, self.images, verified=True)


class WordEvaluator:
    """Avaliação com memória de prefixos; a ordem de enumeração garante prefixos prontos."""

    def __init__(self, rep: Representation):
        self.rep = rep
        self._cache: Dict[Tuple[int, ...], MatrixK] = {
            (): MatrixK.identity(rep.field, rep.dimension)
        }

    def __call__(self, w: Word) -> MatrixK:
        key = w.letters
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        prefix = self(Word(key[:-1])) if key[:-1] not in self._cache else self._cache[key[:-1]]
        m = prefix @ self.rep.letter(key[-1])
        self._cache[key] = m
        return m


def evaluate(rep: Representation, w: Word) -> MatrixK:
    """Produto exato das imagens (e inversas) na ordem da palavra."""
    acc = MatrixK.identity(rep.field, rep.dimension)
    for x in w:
        acc = acc @ rep.letter(x)
    return acc


def trivial_representation(pres: GroupPresentation, field: FunctionField, n: int) -> Representation:
    ident = MatrixK.identity(field, n)
    return Representation(pres, tuple(ident for _ in range(pres.n_gens)))


# ── Verificação ───────────────────────────────────────────

@dataclass
class DeterminantCheck:
    generator: str
    passed: bool
    determinant: FieldElement


@dataclass
class RelatorCheck:
    relator: Word
    text: str
    passed: bool
    matrix: Optional[MatrixK] = None     # só em falha


@dataclass
class VerificationReport:
    determinants: List[DeterminantCheck]
    relators: List[RelatorCheck]

    @property
    def passed(self) -> bool:
        return all(d.passed for d in self.determinants) and all(r.passed for r in self.relators)

    def first_failure(self) -> Optional[RelatorCheck]:
        return next((r for r in self.relators if not r.passed), None)


def verify_relators(rep: Representation) -> VerificationReport:
    """Avalia det e cada relator; falhas voltam como dados."""
    pres = rep.presentation
    dets = []
    for name, g in zip(pres.generators, rep.images):
        d = g.det()
        dets.append(DeterminantCheck(name, d == rep.field.one, d))
        if d != rep.field.one:
            logger.warning(f"⚠️ det({name}) = {d} ≠ 1")
    checks = []
    for r in pres.relators:
        m = evaluate(rep, r)
        ok = m.is_identity()
        checks.append(RelatorCheck(r, pres.format(r), ok, None if ok else m))
        if not ok:
            logger.warning(f"⚠️ relator {pres.format(r)} falhou")
    report = VerificationReport(dets, checks)
    if report.passed:
        logger.info(f"✅ {len(checks)} relatores verificados")
    return report


# ─────────────────────────────────────────────────────────
# Vértices fixos e certificados
# ─────────────────────────────────────────────────────────

@dataclass
class NoFixedVertex:
    """Certificado: coeficiente do polinômio característico com polo."""
    index: int                 # e_index em det(xI − g)
    coefficient: FieldElement
    valuation: int


def fixed_vertex(g: MatrixK, place: Place) -> Union[VertexClass, NoFixedVertex]:
    """
    Coeficientes do polinômio característico todos inteiros ⇒ [Σ_{k<n} g^k L₀]
    é fixo (conferido por act). Senão não há vértice fixo.
    """
    ff = g.field
    if g.det() != ff.one:
        raise NotUnimodular("det(g) ≠ 1")
    for k, e in enumerate(g.charpoly_coefficients(), start=1):
        v = valuation(e, place)
        if v < 0:
            return NoFixedVertex(index=k, coefficient=e, valuation=int(v))

    gens = MatrixK.identity(ff, g.n)
    power = gens
    for _ in range(1, g.n):
        power = power @ g
        gens = gens.hstack(power)
    fixed = span_class(place, gens)
    if act(g, fixed) != fixed:
        raise RuntimeError("reticulado estável não ficou fixo: aritmética inconsistente")
    return fixed


def stabilizes(g: MatrixK, v: VertexClass) -> bool:
    """g·v = v, via integralidade de B⁻¹gB e de seu inverso (ν det g = 0)."""
    B = v.canonical_basis
    rel = B.inverse() @ g @ B
    return rel.is_integral(v.place) and valuation(rel.det(), v.place) == 0


@dataclass
class Certificate:
    word: Word
    text: str
    valuation: int
    trace: FieldElement


@dataclass
class Inconclusive:
    max_len: int
    words_checked: int


def nontriviality_certificate(rep: Representation, place: Place,
                              max_len: int) -> Union[Certificate, Inconclusive]:
    """Primeira palavra (comprimento, depois lexicográfica) com ν(tr) < 0."""
    if max_len < 1:
        raise ValueError("max_len precisa ser ≥ 1")
    ev = WordEvaluator(rep)
    checked = 0
    for w in enumerate_words(rep.presentation.n_gens, max_len):
        checked += 1
        tr = ev(w).trace()
        v = valuation(tr, place)
        if v < 0:
            text = rep.presentation.format(w)
            logger.info(f"✅ certificado em {place}: {text} (ν = {v})")
            return Certificate(w, text, int(v), tr)
    logger.info(f"nenhum polo em {checked} palavras até comprimento {max_len}")
    return Inconclusive(max_len, checked)


# ─────────────────────────────────────────────────────────
# Bola de órbita
# ─────────────────────────────────────────────────────────

def orbit_ball(rep: Representation, place: Place, base: VertexClass, depth: int) -> nx.MultiDiGraph:
    """
    Fecho em largura de {base} pelas imagens dos geradores e inversas.
    Nós 0, 1, … em ordem de descoberta com atributos vertex/type/depth;
    arestas com atributo label; laços colapsados.
    """
    if depth < 0:
        raise ValueError("depth precisa ser ≥ 0")
    pres = rep.presentation
    letters = [x for i in range(pres.n_gens) for x in (i + 1, -(i + 1))]
    graph = nx.MultiDiGraph()
    index: Dict[VertexClass, int] = {base: 0}
    graph.add_node(0, vertex=base, type=vertex_type(base), depth=0)
    frontier = [base]
    for level in range(1, depth + 1):
        nxt = []
        for v in frontier:
            for x in letters:
                w = act(rep.letter(x), v)
                if w == v:
                    continue
                if w not in index:
                    index[w] = len(index)
                    graph.add_node(index[w], vertex=w, type=vertex_type(w), depth=level)
                    nxt.append(w)
                label = pres.format(Word([x]))
                src, dst = index[v], index[w]
                if not any(d.get("label") == label for d in graph.get_edge_data(src, dst, default={}).values()):
                    graph.add_edge(src, dst, label=label)
        frontier = nxt
    logger.info(f"📦 bola de órbita: {graph.number_of_nodes()} vértices, {graph.number_of_edges()} arestas")
    return graph


# ─────────────────────────────────────────────────────────
# Links e bolas com corpo residual F_p
# ─────────────────────────────────────────────────────────

def residue_subspaces(n: int, K: PrimeField) -> Iterator[List[List]]:
    """Subespaços não nulos próprios de F_p^n, por forma escalonada reduzida (linhas)."""
    for k in range(1, n):
        for pivots in combinations(range(n), k):
            free = [(i, j) for i, piv in enumerate(pivots) for j in range(piv + 1, n) if j not in pivots]
            for values in product(K.elements(), repeat=len(free)):
                rows = [[K.zero] * n for _ in range(k)]
                for i, piv in enumerate(pivots):
                    rows[i][piv] = K.one
                for (i, j), x in zip(free, values):
                    rows[i][j] = x
                yield rows


def subspace_count(n: int, p: int) -> int:
    """Σ_{0<k<n} binomial gaussiano [n k]_p."""
    total = 0
    for k in range(1, n):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def _mod_p_field(p: int) -> FunctionField:
    return FunctionField(PrimeField(p))


def _link_generators(ff: FunctionField, n: int) -> List[MatrixK]:
    """Conjuntos geradores [W̃ | t·I] dos reticulados entre tL₀ e L₀."""
    tI = MatrixK.identity(ff, n) * ff.t
    out = []
    for rows in residue_subspaces(n, ff.K):
        lift = MatrixK(ff, [[rows[i][j] for i in range(len(rows))] for j in range(n)])
        out.append(lift.hstack(tI))
    return out


def link_of_vertex(n: int, p: int, v: Optional[VertexClass] = None) -> List[VertexClass]:
    """Todos os vizinhos de v (padrão [L₀]) com coeficientes em F_p, lugar zero."""
    if not 2 <= n <= LINK_MAX_DIMENSION:
        raise UnsupportedDimension(f"n = {n} fora de 2..{LINK_MAX_DIMENSION}")
    ff = _mod_p_field(p)
    if v is None:
        v = standard_vertex(ff, n, Place.zero())
    _check_mod_p(v, ff, n)
    return _neighbors(v, _link_generators(ff, n))


def _check_mod_p(v: VertexClass, ff: FunctionField, n: int) -> None:
    if v.canonical_basis.field.K != ff.K or v.place != Place.zero():
        raise ConfigError(f"link exige coeficientes F_{ff.K.p} no lugar zero")
    if v.n != n:
        raise UnsupportedDimension(f"vértice de dimensão {v.n}, pedido n = {n}")


def _neighbors(v: VertexClass, generators: Sequence[MatrixK]) -> List[VertexClass]:
    B = v.canonical_basis
    seen: Dict[VertexClass, None] = {}
    for gens in generators:
        seen.setdefault(span_class(v.place, B @ gens), None)
    return list(seen)


def neighbors(v: VertexClass, p: int) -> List[VertexClass]:
    return link_of_vertex(v.n, p, v)


def ball(v: VertexClass, radius: int, p: int) -> List[VertexClass]:
    """Bola exaustiva de raio `radius` no 1-esqueleto (modo F_p, n ∈ {2,3})."""
    n = v.n
    if not 2 <= n <= LINK_MAX_DIMENSION:
        raise UnsupportedDimension(f"n = {n} fora de 2..{LINK_MAX_DIMENSION}")
    ff = _mod_p_field(p)
    _check_mod_p(v, ff, n)
    gens = _link_generators(ff, n)
    found: Dict[VertexClass, int] = {v: 0}
    frontier = [v]
    for r in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for w in _neighbors(u, gens):
                if w not in found:
                    found[w] = r
                    nxt.append(w)
        frontier = nxt
    logger.info(f"📦 bola de raio {radius}: {len(found)} vértices")
    return list(found)


# ─────────────────────────────────────────────────────────
# Pullback
# ─────────────────────────────────────────────────────────

def pullback(rep: Representation, h: GroupHom) -> Representation:
    """Gerador da fonte ↦ evaluate(rep, h(gerador)); relatores reconferidos."""
    if h.target != rep.presentation:
        raise ValueError("o alvo do homomorfismo difere da apresentação da representação")
    images = tuple(evaluate(rep, w) for w in h.images)
    return Representation(h.source, images).verify()
