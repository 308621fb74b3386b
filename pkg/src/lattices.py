"""
lattices.py
───────────
Reticulados sobre o anel de valoração de um lugar e suas classes de homotetia:
os vértices do prédio de Bruhat–Tits de SL(n).

Todo algoritmo roda em t = 0: as entradas passam por to_zero(·, lugar),
são reduzidas e voltam por from_zero.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, List, Sequence, Tuple, Union

from errors import PlaceMismatch, SingularBasis, TooManyVertices
from fields import (
    FieldElement, FunctionField, Place, from_zero, to_zero, truncate_below, valuation,
)
from matrices import MatrixK

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────
# Tipos
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Lattice:
    """Reticulado gerado pelas colunas de `basis` sobre O_place."""
    place: Place
    basis: MatrixK

    def __post_init__(self):
        if not self.basis.is_square or self.basis.det().is_zero():
            raise SingularBasis("base de reticulado com determinante nulo")

    @classmethod
    def standard(cls, field: FunctionField, n: int, place: Place) -> "Lattice":
        return cls(place, MatrixK.identity(field, n))

    @property
    def n(self) -> int:
        return self.basis.n


@dataclass(frozen=True)
class VertexClass:
    """Classe de homotetia, guardada pela base canônica."""
    place: Place
    canonical_basis: MatrixK

    @property
    def n(self) -> int:
        return self.canonical_basis.n

    def lattice(self) -> Lattice:
        return Lattice(self.place, self.canonical_basis)


@dataclass(frozen=True)
class DivisorVector:
    entries: Tuple[int, ...]

    def normalized(self) -> Tuple[int, ...]:
        return tuple(a - self.entries[0] for a in self.entries)

    def __iter__(self):
        return iter(self.entries)


# ─────────────────────────────────────────────────────────
# Forma canônica (Hermite por colunas no anel de valoração)
# ─────────────────────────────────────────────────────────

def _hermite_at_zero(ff: FunctionField, rows: List[List[FieldElement]]) -> List[List[FieldElement]]:
    """
    Forma de Hermite triangular inferior em t = 0 para um conjunto gerador n×m.

    Linha i: pivô de valoração mínima entre as colunas ≥ i (mais à esquerda
    no empate), escalado para exatamente t^k; entradas à direita zeradas.
    Depois, B[r][i] (i < r) vira a cauda de Laurent com expoentes < k_r.
    """
    zero = Place.zero()
    n, m = len(rows), len(rows[0])
    a = [list(r) for r in rows]
    pivots: List[int] = []

    for i in range(n):
        best, best_v = None, None
        for j in range(i, m):
            if a[i][j]:
                v = valuation(a[i][j], zero)
                if best_v is None or v < best_v:
                    best, best_v = j, v
        if best is None:
            raise SingularBasis("conjunto gerador não tem posto cheio")
        if best != i:
            for r in range(n):
                a[r][i], a[r][best] = a[r][best], a[r][i]
        scale = ff.monomial(best_v) / a[i][i]
        for r in range(i, n):
            a[r][i] = a[r][i] * scale
        for j in range(i + 1, m):
            if not a[i][j]:
                continue
            f = a[i][j] / a[i][i]
            for r in range(i, n):
                if a[r][i]:
                    a[r][j] = a[r][j] - f * a[r][i]
        pivots.append(best_v)

    for r in range(1, n):
        k_r = pivots[r]
        pivot = a[r][r]
        for i in range(r):
            x = a[r][i]
            if not x:
                continue
            tail = truncate_below(x, zero, k_r)
            if tail == x:
                continue
            c = (x - tail) / pivot
            for s in range(r, n):
                if a[s][r]:
                    a[s][i] = a[s][i] - c * a[s][r]

    shift = ff.monomial(-min(pivots))
    return [[a[r][j] * shift for j in range(n)] for r in range(n)]


def canonical_form(L: Union[Lattice, Tuple[Place, MatrixK]]) -> VertexClass:
    """
    Representante único da classe de homotetia de L.

    A base devolvida é a forma de Hermite triangular inferior de
    _hermite_at_zero, sem reordenar colunas por (valoração, lexicográfica):
    o formato triangular já fixa o representante.
    """
    if isinstance(L, Lattice):
        place, gens = L.place, L.basis
    else:
        place, gens = L
    ff = gens.field
    rows = [[to_zero(x, place) for x in row] for row in gens.rows]
    reduced = _hermite_at_zero(ff, rows)
    basis = MatrixK(ff, [[from_zero(x, place) for x in row] for row in reduced])
    return VertexClass(place, basis)


def span_class(place: Place, generators: MatrixK) -> VertexClass:
    """Classe do reticulado gerado pelas colunas de uma matriz n×m (m ≥ n)."""
    return canonical_form((place, generators))


# ─────────────────────────────────────────────────────────
# Posição relativa
# ─────────────────────────────────────────────────────────

def _as_lattice(x: Union[Lattice, VertexClass]) -> Lattice:
    return x.lattice() if isinstance(x, VertexClass) else x


def _same_place(a, b) -> Place:
    if a.place != b.place:
        raise PlaceMismatch(f"lugares diferentes: {a.place} e {b.place}")
    return a.place


def contains(L: Lattice, Lp: Lattice) -> bool:
    """Lp ⊆ L."""
    place = _same_place(L, Lp)
    return (L.basis.inverse() @ Lp.basis).is_integral(place)


def same_lattice(L: Lattice, Lp: Lattice) -> bool:
    place = _same_place(L, Lp)
    rel = L.basis.inverse() @ Lp.basis
    return rel.is_integral(place) and valuation(rel.det(), place) == 0


def elementary_divisors(L: Union[Lattice, VertexClass], Lp: Union[Lattice, VertexClass]) -> DivisorVector:
    """
    (a_1 ≤ … ≤ a_n) com Lp = Σ O f_i e L = Σ O ϖ^(a_i) f_i.

    Smith sobre o anel de valoração de basis(Lp)⁻¹·basis(L), pivô de
    valoração mínima (mais acima, depois mais à esquerda).
    """
    L, Lp = _as_lattice(L), _as_lattice(Lp)
    place = _same_place(L, Lp)
    zero = Place.zero()
    rel = Lp.basis.inverse() @ L.basis
    a = [[to_zero(x, place) for x in row] for row in rel.rows]
    n = len(a)
    out: List[int] = []
    for i in range(n):
        best, best_v = None, None
        for r in range(i, n):
            for c in range(i, n):
                if a[r][c]:
                    v = valuation(a[r][c], zero)
                    if best_v is None or v < best_v:
                        best, best_v = (r, c), v
        if best is None:
            raise SingularBasis("matriz relativa singular")
        r0, c0 = best
        a[i], a[r0] = a[r0], a[i]
        for row in a:
            row[i], row[c0] = row[c0], row[i]
        p = a[i][i]
        for r in range(i + 1, n):
            if a[r][i]:
                f = a[r][i] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
        for c in range(i + 1, n):
            if a[i][c]:
                f = a[i][c] / p
                for row in a:
                    row[c] = row[c] - f * row[i]
        out.append(best_v)
    return DivisorVector(tuple(sorted(out)))


def adjacent(v: VertexClass, w: VertexClass) -> bool:
    """ϖL′ ⊊ L ⊊ L′ para representantes adequados."""
    _same_place(v, w)
    if v == w:
        return False
    norm = elementary_divisors(v, w).normalized()
    return all(x in (0, 1) for x in norm) and 1 in norm


def vertex_distance(v: VertexClass, w: VertexClass) -> int:
    """Distância no 1-esqueleto: a_n − a_1."""
    d = elementary_divisors(v, w).entries
    return d[-1] - d[0]


def sandwich_representative(v: VertexClass, top: Lattice) -> Union[Lattice, None]:
    """O representante L de v com ϖ·top ⊆ L ⊆ top, ou None se não existir."""
    d = elementary_divisors(v, top).entries
    if d[-1] - d[0] > 1:
        return None
    ff = top.basis.field
    scale = ff.uniformizer(top.place) ** (-d[0])
    return Lattice(top.place, v.canonical_basis * scale)


def is_simplex(vs: Iterable[VertexClass]) -> bool:
    """Testa a condição de cadeia ϖL_r ⊊ L_1 ⊊ … ⊊ L_r diretamente."""
    vs = list(dict.fromkeys(vs))
    if not vs:
        raise ValueError("conjunto de vértices vazio")
    for w in vs[1:]:
        _same_place(vs[0], w)
    if len(vs) > vs[0].n:
        raise TooManyVertices(f"{len(vs)} vértices para n = {vs[0].n}")
    if len(vs) == 1:
        return True

    top = vs[0].lattice()
    chain = [top]
    for w in vs[1:]:
        rep = sandwich_representative(w, top)
        if rep is None:
            return False
        chain.append(rep)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            if not (contains(chain[i], chain[j]) or contains(chain[j], chain[i])):
                return False
    return True


# ─────────────────────────────────────────────────────────
# Tipo, apartamentos e ação
# ─────────────────────────────────────────────────────────

def vertex_type(v: VertexClass) -> int:
    return int(valuation(v.canonical_basis.det(), v.place)) % v.n


def apartment_vertices(f: MatrixK, box: Union[range, Sequence[range]],
                       place: Place = Place.zero()) -> List[VertexClass]:
    """
    Classes [Σ O ϖ^(m_j) f_j] com m_1 = 0 e (m_2, …, m_n) na caixa.
    `box` é um range para todos os m_j ou um range por j ≥ 2.
    """
    if f.det().is_zero():
        raise SingularBasis("base do apartamento singular")
    n = f.n
    ranges = [box] * (n - 1) if isinstance(box, range) else list(box)
    if len(ranges) != n - 1:
        raise ValueError(f"caixa precisa de {n - 1} intervalos")
    ff = f.field
    u = ff.uniformizer(place)
    cols = f.columns()
    seen: List[VertexClass] = []
    for exps in product(*ranges):
        m = (0,) + tuple(exps)
        scaled = [[x * u ** e for x in col] for col, e in zip(cols, m)]
        v = canonical_form(Lattice(place, MatrixK.from_columns(ff, scaled)))
        if v not in seen:
            seen.append(v)
    return seen


def act(g: MatrixK, v: VertexClass) -> VertexClass:
    """g·[L] = [g·L]."""
    return canonical_form(Lattice(v.place, g @ v.canonical_basis))


def standard_vertex(field: FunctionField, n: int, place: Place) -> VertexClass:
    return canonical_form(Lattice.standard(field, n, place))


def diagonal_vertex(field: FunctionField, exponents: Sequence[int], place: Place) -> VertexClass:
    """[diag(ϖ^e_1, …, ϖ^e_n)·L₀]."""
    u = field.uniformizer(place)
    return canonical_form(Lattice(place, MatrixK.diag(field, [u ** e for e in exponents])))
