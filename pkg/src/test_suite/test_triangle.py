"""
test_suite/test_triangle.py
───────────────────────────
Testes de triangle.py: a família ρ_s, a identidade do traço de abac,
os pontos ideais em s = 0 e s = ∞ e as variedades de Seifert pequenas.
"""

from fractions import Fraction
from typing import Tuple

from test_suite.conftest import _title
from test_suite.runner import TestRunner, raises

from building import evaluate
from characters import CERTIFIED
from errors import CoprimalityViolation, UnsupportedTriple
from fields import NumberField
from groups import Word
from triangle import (
    SeifertData, TriangleData, abac_delta_word, certify_triangle_curve, delta_inclusion,
    delta_presentation, delta_restriction, gamma_presentation, gamma_representation,
    seifert_group, seifert_representation, trace_abac,
)

TRIPLES = [(3, 3, 3), (3, 3, 4), (4, 4, 4), (3, 3, 5)]


def test_triangle() -> Tuple[int, int]:
    print(_title("MÓDULO: triangle.py"))
    runner = TestRunner()

    td = TriangleData.builtin(3, 3, 3)

    def t_presentations():
        gamma = gamma_presentation(3, 3, 4)
        assert gamma.generators == ("a", "b", "c")
        assert [gamma.format(r) for r in gamma.relators] == [
            "a^2", "b^2", "c^2", "ababab", "bcbcbc", "cacacaca",
        ]
        delta = delta_presentation(3, 3, 4)
        assert [delta.format(r) for r in delta.relators] == ["x^3", "y^3", "xyxyxyxy"]
        assert abac_delta_word(3, 3, 4) == Word([1, 1, 2])

    def t_relators_all_triples():
        for p, q, r in TRIPLES:
            rep = gamma_representation(TriangleData.builtin(p, q, r))
            assert rep.verified
            assert delta_restriction(TriangleData.builtin(p, q, r)).verified

    def t_trace_identity():
        for p, q, r in TRIPLES:
            ident = trace_abac(TriangleData.builtin(p, q, r))
            assert ident.equal, f"({p},{q},{r}): {ident.computed} ≠ {ident.closed_form}"

    def t_trace_text_333():
        ident = trace_abac(td)
        assert str(ident.computed) == "s + 1 + s^-1"

    def t_abac_is_x2y():
        gamma = gamma_representation(td)
        delta = delta_restriction(td)
        lhs = evaluate(gamma, gamma.presentation.word("abac"))
        rhs = evaluate(delta, abac_delta_word(3, 3, 3))
        assert lhs == rhs
        assert delta_inclusion(3, 3, 3).apply(Word([1])) == gamma.presentation.word("ab")

    def t_curve_certified():
        for p, q, r in TRIPLES:
            reports = certify_triangle_curve(TriangleData.builtin(p, q, r))
            assert sorted(reports) == ["infinity", "zero"]
            for report in reports.values():
                assert report.verdict == CERTIFIED
                assert report.witness_text == "x^2y" and report.witness_valuation == -1

    def t_triangle_validation():
        Q = NumberField.rationals()
        half = Q(Fraction(1, 2))
        raises(ValueError, TriangleData, 2, 3, 3, Q, (half, half, half))
        raises(UnsupportedTriple, TriangleData, 3, 3, 3, Q, (half, half, Q(Fraction(1, 3))))
        raises(UnsupportedTriple, TriangleData.builtin, 3, 3, 7)

    def t_seifert_haken():
        g = seifert_group(SeifertData(3, 3, 3, 1, 1, 2))
        assert g.haken
        assert g.relation_determinant == 0
        assert g.homology.free_rank == 1

    def t_seifert_not_haken():
        g = seifert_group(SeifertData(3, 3, 3, 1, 1, 1))
        assert not g.haken
        assert g.homology.free_rank == 0
        order = 1
        for d in g.homology.torsion:
            order *= d
        assert order == abs(g.relation_determinant) == 9

    def t_seifert_coprimality():
        raises(CoprimalityViolation, seifert_group, SeifertData(3, 3, 3, 3, 1, 1))

    def t_seifert_representation():
        rep = seifert_representation(SeifertData(3, 3, 3, 1, 1, 2), td)
        assert rep.verified
        assert rep.images[2].is_identity()
        assert rep.images[0] == delta_restriction(td).images[0]

    runner.run("Apresentações de Γ e Δ",                      t_presentations)
    runner.run("ρ_s satisfaz os relatores nas quatro triplas", t_relators_all_triples)
    runner.run("tr ρ_s(abac) = forma fechada",                t_trace_identity)
    runner.run("Γ(3,3,3): traço s + 1 + s⁻¹",                 t_trace_text_333)
    runner.run("abac em Γ é x²y em Δ",                        t_abac_is_x2y)
    runner.run("Pontos ideais em s = 0 e s = ∞",              t_curve_certified)
    runner.run("Triplas e cossenos inválidos",                t_triangle_validation)
    runner.run("Seifert (3,3,3;1,1,2) é Haken",               t_seifert_haken)
    runner.run("Seifert (3,3,3;1,1,1) tem H₁ de ordem 9",     t_seifert_not_haken)
    runner.run("Seifert: mdc(a, p) ≠ 1",                      t_seifert_coprimality)
    runner.run("Pullback para π₁ da variedade de Seifert",    t_seifert_representation)

    return runner.summary()
