"""
triangle.py
───────────
Família SL₃ de um parâmetro para grupos de triângulo:

  Γ(p,q,r) = ⟨a,b,c | a², b², c², (ab)^p, (bc)^q, (ca)^r⟩
  Δ(p,q,r) = ⟨x,y | x^p, y^q, (xy)^r⟩,  x = ab, y = bc

ρ_s tem entradas em Q(α)(s); o traço de abac tem forma fechada
8(s+s⁻¹)c_p c_q c_r + 16c_p²c_r² + 4c_q² − 1, com c_k = cos(π/k).
Inclui também as apresentações de Seifert pequenas e o critério de Haken.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Optional, Tuple

from building import Representation, pullback
from characters import IdealPointReport, analyze_ideal_point
from errors import CoprimalityViolation
from fields import (
    FieldElement, FunctionField, NFElement, NumberField, Place, builtin_cosine_field, check_cosine,
)
from groups import AbelianInvariants, GroupHom, GroupPresentation, Word, abelianization
from matrices import MatrixK

logger = logging.getLogger(__name__)

PARAMETER = "s"


# ─────────────────────────────────────────────────────────
# Dados
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class TriangleData:
    p: int
    q: int
    r: int
    field: NumberField
    cosines: Tuple[NFElement, NFElement, NFElement]

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 3:
            raise ValueError("p, q, r precisam ser ≥ 3")
        for k, c in zip((self.p, self.q, self.r), self.cosines):
            check_cosine(self.field, c, k)

    @classmethod
    def builtin(cls, p: int, q: int, r: int) -> "TriangleData":
        field, cosines = builtin_cosine_field(p, q, r)
        return cls(p, q, r, field, cosines)

    def function_field(self) -> FunctionField:
        return FunctionField(self.field, PARAMETER)


@dataclass(frozen=True)
class SeifertData:
    p: int
    q: int
    r: int
    a: int
    b: int
    c: int


@dataclass
class TraceIdentity:
    computed: FieldElement
    closed_form: FieldElement
    equal: bool


@dataclass
class SeifertGroup:
    presentation: GroupPresentation
    hom: GroupHom                  # π₁(M) → Δ(p,q,r)
    haken: bool
    homology: AbelianInvariants
    relation_determinant: int      # qr·a + pr·b − pq·c


# ─────────────────────────────────────────────────────────
# Apresentações
# ─────────────────────────────────────────────────────────

def gamma_presentation(p: int, q: int, r: int) -> GroupPresentation:
    pres = GroupPresentation(("a", "b", "c"))
    a, b, c = pres.gen("a"), pres.gen("b"), pres.gen("c")
    return GroupPresentation(pres.generators, (a ** 2, b ** 2, c ** 2, (a * b) ** p, (b * c) ** q, (c * a) ** r))


def delta_presentation(p: int, q: int, r: int) -> GroupPresentation:
    x, y = Word.gen(0), Word.gen(1)
    return GroupPresentation(("x", "y"), (x ** p, y ** q, (x * y) ** r))


def delta_inclusion(p: int, q: int, r: int) -> GroupHom:
    """Δ → Γ, x ↦ ab, y ↦ bc."""
    gamma = gamma_presentation(p, q, r)
    return GroupHom(delta_presentation(p, q, r), gamma, (gamma.word("ab"), gamma.word("bc")))


# ─────────────────────────────────────────────────────────
# A família ρ_s
# ─────────────────────────────────────────────────────────

def gamma_matrices(td: TriangleData) -> Tuple[MatrixK, MatrixK, MatrixK]:
    ff = td.function_field()
    s = ff.t
    P, Q, R = (ff(2 * c) for c in td.cosines)
    z, o = ff.zero, ff.one
    A = MatrixK(ff, [[o, z, z], [-s * P, -o, z], [-R, z, -o]])
    B = MatrixK(ff, [[-o, -P / s, z], [z, o, z], [z, -Q, -o]])
    C = MatrixK(ff, [[-o, z, -R], [z, -o, -Q], [z, z, o]])
    return A, B, C


def gamma_representation(td: TriangleData) -> Representation:
    """ρ_s de Γ(p,q,r) sobre F(s), com det e os seis relatores conferidos."""
    rep = Representation(gamma_presentation(td.p, td.q, td.r), gamma_matrices(td)).verify()
    logger.info(f"✅ ρ_s verificada para Γ({td.p},{td.q},{td.r})")
    return rep


def delta_restriction(td: TriangleData) -> Representation:
    """x ↦ ρ_s(a)ρ_s(b), y ↦ ρ_s(b)ρ_s(c)."""
    A, B, C = gamma_matrices(td)
    return Representation(delta_presentation(td.p, td.q, td.r), (A @ B, B @ C)).verify()


def closed_form_trace(td: TriangleData) -> FieldElement:
    ff = td.function_field()
    s = ff.t
    cp, cq, cr = (ff(c) for c in td.cosines)
    return 8 * (s + s.inverse()) * cp * cq * cr + 16 * cp * cp * cr * cr + 4 * cq * cq - 1


def trace_abac(td: TriangleData) -> TraceIdentity:
    A, B, C = gamma_matrices(td)
    computed = (A @ B @ A @ C).trace()
    closed = closed_form_trace(td)
    equal = computed == closed
    if not equal:
        logger.warning(f"⚠️ identidade do traço falhou: {computed} ≠ {closed}")
    return TraceIdentity(computed, closed, equal)


def abac_delta_word(p: int, q: int, r: int) -> Word:
    """abac = ab·ac = x·(xy) = x²y em Δ."""
    return delta_presentation(p, q, r).word("x^2y")


def certify_triangle_curve(td: TriangleData) -> Dict[str, IdealPointReport]:
    """Pontos ideais em s = 0 e s = ∞ pelo traço de x²y."""
    rep = delta_restriction(td)
    words = [abac_delta_word(td.p, td.q, td.r)]
    return {
        str(place): analyze_ideal_point(rep, place, words)
        for place in (Place.zero(), Place.infinity())
    }


# ─────────────────────────────────────────────────────────
# Variedades de Seifert pequenas
# ─────────────────────────────────────────────────────────

def seifert_group(sd: SeifertData) -> SeifertGroup:
    """
    ⟨x,y,h | x^p h^-a, y^q h^-b, (xy)^r h^-c, [x,h], [y,h]⟩, o quociente h ↦ 1
    sobre Δ(p,q,r) e o critério de Haken a/p + b/q = c/r.
    """
    for k, e in ((sd.p, sd.a), (sd.q, sd.b), (sd.r, sd.c)):
        if gcd(k, e) != 1:
            raise CoprimalityViolation(f"mdc({e}, {k}) ≠ 1")
    x, y, h = Word.gen(0), Word.gen(1), Word.gen(2)
    relators = (
        x ** sd.p * h ** (-sd.a),
        y ** sd.q * h ** (-sd.b),
        (x * y) ** sd.r * h ** (-sd.c),
        x * h * x.inverse() * h.inverse(),
        y * h * y.inverse() * h.inverse(),
    )
    pres = GroupPresentation(("x", "y", "h"), relators)
    delta = delta_presentation(sd.p, sd.q, sd.r)
    hom = GroupHom(pres, delta, (Word.gen(0), Word.gen(1), Word()))

    haken = Fraction(sd.a, sd.p) + Fraction(sd.b, sd.q) == Fraction(sd.c, sd.r)
    det = sd.q * sd.r * sd.a + sd.p * sd.r * sd.b - sd.p * sd.q * sd.c
    homology = abelianization(pres)
    if (homology.free_rank > 0) != haken or (det == 0) != haken:
        raise RuntimeError("critério de Haken diverge de H₁")
    logger.info(f"π₁(M) para {sd}: H₁ = {homology}, haken = {haken}")
    return SeifertGroup(pres, hom, haken, homology, det)


def seifert_representation(sd: SeifertData, td: Optional[TriangleData] = None) -> Representation:
    """Pullback de ρ_s|Δ ao longo de π₁(M) → Δ; h ↦ identidade."""
    td = td or TriangleData.builtin(sd.p, sd.q, sd.r)
    return pullback(delta_restriction(td), seifert_group(sd).hom)
