"""
test_suite/test_characters.py
─────────────────────────────
Testes de characters.py: palavras de Procesi, tabelas de traços, análise
de pontos ideais e igualdade de caracteres.
"""

from typing import Tuple

from test_suite.conftest import _title, QT, ZERO, INFINITY, make_rng, property_cases, random_elementary_product, random_invertible
from test_suite.runner import TestRunner, raises

from building import Representation, trivial_representation
from characters import (
    CERTIFIED, NO_POLE, analyze_ideal_point, cayley_hamilton_defect, character_equal, conjugate,
    procesi_count, procesi_words, trace_table,
)
from errors import SizeOverflow
from fields import Place
from groups import GroupPresentation, Word
from matrices import MatrixK
from triangle import TriangleData, delta_restriction


def test_characters() -> Tuple[int, int]:
    print(_title("MÓDULO: characters.py"))
    runner = TestRunner()

    t = QT.t
    delta = delta_restriction(TriangleData.builtin(3, 3, 3))

    def t_procesi_counts():
        assert len(procesi_words(2, 2)) == procesi_count(2, 2) == 14
        assert len(procesi_words(3, 2)) == procesi_count(3, 2) == 254
        words = procesi_words(2, 2)
        assert words[0] == Word([1]) and words[2] == Word([1, 1])
        assert all(x > 0 for w in words for x in w)

    def t_procesi_cyclic_filter():
        words = procesi_words(2, 2, cyclic_filter=True)
        assert len(words) == 2 + 3 + 4
        assert Word([2, 1]) not in words and Word([1, 2]) in words

    def t_procesi_limits():
        raises(ValueError, procesi_words, 1, 2)
        raises(SizeOverflow, procesi_words, 3, 3, cap=100)

    def t_trace_table():
        table = trace_table(delta, procesi_words(3, 2)[:6])
        assert [tf.text for tf in table] == ["x", "y", "x^2", "xy", "yx", "y^2"]
        assert table[3].value == table[4].value

    def t_trace_cyclic():
        rng = make_rng(32)
        letters = [1, -1, 2, -2]
        for _ in range(property_cases(20)):
            w1 = Word(rng.choice(letters) for _ in range(rng.randint(1, 4)))
            w2 = Word(rng.choice(letters) for _ in range(rng.randint(1, 4)))
            first, second = trace_table(delta, [w1 * w2, w2 * w1])
            assert first.value == second.value

    def t_ideal_point_monotone():
        rng = make_rng(33)
        pool = procesi_words(3, 2)
        for place in (ZERO, INFINITY):
            for _ in range(property_cases(10)):
                words = rng.sample(pool, rng.randint(1, 12))
                extended = words + rng.sample(pool, rng.randint(1, 12))
                small = analyze_ideal_point(delta, place, words)
                large = analyze_ideal_point(delta, place, extended)
                if small.certified:
                    assert large.certified
                    assert large.witness == small.witness
                    assert large.min_valuation <= small.min_valuation
                    assert large.poles >= small.poles

    def t_ideal_point_delta():
        words = procesi_words(3, 2)
        for place in (ZERO, INFINITY):
            report = analyze_ideal_point(delta, place, words)
            assert report.verdict == CERTIFIED and report.certified
            assert report.witness_text == "x^2y"
            assert report.witness_valuation == -1
            assert report.min_valuation < 0 and report.poles > 0
        at_one = analyze_ideal_point(delta, Place.finite(1), words)
        assert at_one.verdict == NO_POLE and at_one.min_valuation >= 0

    def t_ideal_point_trivial():
        rep = trivial_representation(delta.presentation, delta.field, 3)
        report = analyze_ideal_point(rep, ZERO, procesi_words(3, 2))
        assert report.verdict == NO_POLE and not report.certified
        assert report.poles == 0 and report.min_valuation == 0
        assert report.witness is None

    def t_ideal_point_empty_words():
        report = analyze_ideal_point(delta, ZERO, [])
        assert report.verdict == NO_POLE and report.min_valuation is None

    def t_character_conjugation():
        rng = make_rng(30)
        for _ in range(property_cases(10)):
            g = random_invertible(rng, delta.field, 3)
            assert character_equal(delta, conjugate(delta, g), 3)

    def t_character_differs():
        rep = trivial_representation(delta.presentation, delta.field, 3)
        assert not character_equal(delta, rep, 3)
        other = trivial_representation(GroupPresentation(("x", "y")), delta.field, 3)
        raises(ValueError, character_equal, delta, other, 3)
        raises(ValueError, character_equal, delta, delta, 2)

    def t_cayley_hamilton_sl2():
        rng = make_rng(31)
        for _ in range(property_cases(10)):
            a = random_elementary_product(rng, QT, 2)
            b = random_elementary_product(rng, QT, 2)
            assert cayley_hamilton_defect(a, b).is_zero()

    def t_cayley_hamilton_sl3():
        a = MatrixK.diag(QT, [t, t, t ** -2])
        b = MatrixK.diag(QT, [1, t, t ** -1])
        assert cayley_hamilton_defect(a, b) == -(t * t) - 1 - t ** -2

    runner.run("Procesi: 14 palavras (n=2) e 254 (n=3)",       t_procesi_counts)
    runner.run("Procesi: filtro de rotações",                   t_procesi_cyclic_filter)
    runner.run("Procesi: n < 2 e limite de tamanho",            t_procesi_limits)
    runner.run("Tabela de traços em Δ(3,3,3)",                  t_trace_table)
    runner.run("Traço invariante por rotação da palavra",       t_trace_cyclic)
    runner.run("Polo encontrado persiste com mais palavras",     t_ideal_point_monotone)
    runner.run("Ponto ideal certificado por x²y",               t_ideal_point_delta)
    runner.run("Representação trivial sem polos",               t_ideal_point_trivial)
    runner.run("Lista de palavras vazia",                       t_ideal_point_empty_words)
    runner.run("Caráter invariante por conjugação",             t_character_conjugation)
    runner.run("Caracteres diferentes e entradas inválidas",    t_character_differs)
    runner.run("tr(AB) + tr(AB⁻¹) = tr A tr B em SL(2)",        t_cayley_hamilton_sl2)
    runner.run("Defeito não nulo em SL(3)",                     t_cayley_hamilton_sl3)

    return runner.summary()
