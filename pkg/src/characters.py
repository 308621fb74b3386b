"""
characters.py
─────────────
Funções traço, coordenadas de Procesi e análise de pontos ideais de
famílias de representações parametrizadas racionalmente.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence

from building import Representation, WordEvaluator
from errors import SizeOverflow
from fields import FieldElement, Place, Valuation, valuation
from groups import Word
from matrices import MatrixK

logger = logging.getLogger(__name__)

# ── Configurações ─────────────────────────────────────────
PROCESI_CAP = 10 ** 6

CERTIFIED = "IdealPointCertified"
NO_POLE = "NoPoleFound"


@dataclass
class TraceFunction:
    word: Word
    text: str
    value: FieldElement


@dataclass
class IdealPointReport:
    place: Place
    entries: List[TraceFunction]
    valuations: List[Valuation]
    verdict: str                             # IdealPointCertified | NoPoleFound
    witness: Optional[Word] = None
    witness_text: Optional[str] = None
    witness_valuation: Optional[int] = None
    min_valuation: Optional[Valuation] = None
    poles: int = 0

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED


# ─────────────────────────────────────────────────────────
# Palavras de Procesi
# ─────────────────────────────────────────────────────────

def procesi_count(n: int, m: int) -> int:
    return sum(m ** k for k in range(1, 2 ** n))


def _least_rotation(letters: tuple) -> tuple:
    return min(letters[k:] + letters[:k] for k in range(len(letters)))


def procesi_words(n: int, m: int, cap: int = PROCESI_CAP, cyclic_filter: bool = False) -> List[Word]:
    """
    Palavras positivas γ_{i1}⋯γ_{ik}, 1 ≤ k ≤ 2ⁿ−1, em ordem comprimento-lexicográfica.
    `cyclic_filter` mantém só a menor rotação de cada classe cíclica.
    """
    if n < 2 or m < 1:
        raise ValueError("procesi_words exige n ≥ 2 e m ≥ 1")
    count = procesi_count(n, m)
    if count > cap:
        raise SizeOverflow(f"{count} palavras de Procesi excedem o limite {cap}")
    words = []
    for k in range(1, 2 ** n):
        for letters in product(range(1, m + 1), repeat=k):
            if cyclic_filter and _least_rotation(letters) != letters:
                continue
            words.append(Word(letters))
    return words


# ─────────────────────────────────────────────────────────
# Traços
# ─────────────────────────────────────────────────────────

def trace_table(rep: Representation, words: Sequence[Word]) -> List[TraceFunction]:
    ev = WordEvaluator(rep)
    pres = rep.presentation
    return [TraceFunction(w, pres.format(w), ev(w).trace()) for w in words]


def analyze_ideal_point(rep: Representation, place: Place, words: Sequence[Word]) -> IdealPointReport:
    """Polo em algum traço ⇒ ponto ideal certificado, com a primeira palavra testemunha."""
    table = trace_table(rep, words)
    vals = [valuation(tf.value, place) for tf in table]
    report = IdealPointReport(place=place, entries=table, valuations=vals, verdict=NO_POLE)
    if vals:
        report.min_valuation = min(vals)
    report.poles = sum(1 for v in vals if v < 0)
    for tf, v in zip(table, vals):
        if v < 0:
            report.verdict = CERTIFIED
            report.witness, report.witness_text, report.witness_valuation = tf.word, tf.text, int(v)
            break
    logger.info(f"{place}: {report.verdict} ({len(table)} traços, {report.poles} polos)")
    return report


def character_equal(rep_a: Representation, rep_b: Representation, n: int,
                    cap: int = PROCESI_CAP) -> bool:
    """Igualdade de caracteres (não conjugação) pelas coordenadas de Procesi."""
    if rep_a.presentation != rep_b.presentation:
        raise ValueError("representações de apresentações diferentes")
    if rep_a.dimension != n or rep_b.dimension != n:
        raise ValueError(f"dimensões diferentes de n = {n}")
    words = procesi_words(n, rep_a.presentation.n_gens, cap)
    ev_a, ev_b = WordEvaluator(rep_a), WordEvaluator(rep_b)
    for w in words:
        if ev_a(w).trace() != ev_b(w).trace():
            logger.debug(f"caracteres diferem em {rep_a.presentation.format(w)}")
            return False
    return True


def cayley_hamilton_defect(a: MatrixK, b: MatrixK) -> FieldElement:
    """tr(AB) + tr(AB⁻¹) − tr(A)tr(B); zero em SL₂."""
    return (a @ b).trace() + (a @ b.inverse()).trace() - a.trace() * b.trace()


def conjugate(rep: Representation, g: MatrixK) -> Representation:
    """g ρ g⁻¹."""
    gi = g.inverse()
    return Representation(rep.presentation, tuple(g @ x @ gi for x in rep.images), rep.verified)
