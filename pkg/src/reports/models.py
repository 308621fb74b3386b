"""
reports/models.py
─────────────────
Modelos de dados dos relatórios JSON (todos com "schema": 1).

AnalyzeReport   — comando analyze: verificação, traços, pontos ideais, vértices fixos
OrbitReport     — comando orbit: bola de órbita
TriangleReport  — comando triangle: identidade do traço, certificados, Seifert
LinkReport      — comando link: vizinhos de [L₀] com corpo residual F_p
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

SCHEMA = 1

# valoração: inteiro, ou "+inf" para ν(0)
ValuationText = Union[int, str]


@dataclass
class CheckEntry:
    name:   str
    passed: bool
    value:  str = ""          # determinante, ou a matriz do relator em falha


@dataclass
class TraceEntry:
    word:  str
    trace: str


@dataclass
class PlaceEntry:
    place:             str
    verdict:           str
    witness:           Optional[str] = None
    witness_valuation: Optional[int] = None
    min_valuation:     Optional[ValuationText] = None
    poles:             int = 0
    valuations:        List[ValuationText] = field(default_factory=list)
    # certificado pela enumeração de palavras (nontriviality_certificate)
    certificate:       Optional[str] = None
    certificate_valuation: Optional[int] = None
    words_checked:     int = 0


@dataclass
class FixedVertexEntry:
    generator: str
    place:     str
    fixed:     bool
    basis:     Optional[List[List[str]]] = None
    type:      Optional[int] = None
    # certificado de ausência: coeficiente e_k com polo
    coefficient_index:     Optional[int] = None
    coefficient:           Optional[str] = None
    coefficient_valuation: Optional[int] = None


@dataclass
class AnalyzeReport:
    # ── Identificação ─────────────────────────────────────────
    config:      str
    mode:        str
    dimension:   int
    generators:  List[str]
    schema:      int = SCHEMA

    # ── Verificação ───────────────────────────────────────────
    verification_passed: bool = True
    determinants: List[CheckEntry] = field(default_factory=list)
    relators:     List[CheckEntry] = field(default_factory=list)

    # ── Traços e pontos ideais ────────────────────────────────
    words_source: str = "procesi"
    traces:       List[TraceEntry] = field(default_factory=list)
    places:       List[PlaceEntry] = field(default_factory=list)

    # ── Vértices fixos ────────────────────────────────────────
    fixed_vertices: List[FixedVertexEntry] = field(default_factory=list)


@dataclass
class OrbitNode:
    id:    int
    type:  int
    depth: int
    basis: List[List[str]]


@dataclass
class OrbitEdge:
    source: int
    target: int
    label:  str


@dataclass
class OrbitReport:
    config: str
    place:  str
    depth:  int
    schema: int = SCHEMA
    nodes:  List[OrbitNode] = field(default_factory=list)
    edges:  List[OrbitEdge] = field(default_factory=list)


@dataclass
class SeifertEntry:
    a: int
    b: int
    c: int
    haken:                bool
    homology:             str
    relation_determinant: int


@dataclass
class TriangleReport:
    p: int
    q: int
    r: int
    computed:    str
    closed_form: str
    equal:       bool
    schema:      int = SCHEMA
    certificates: Dict[str, PlaceEntry] = field(default_factory=dict)
    seifert:      Optional[SeifertEntry] = None


@dataclass
class LinkReport:
    prime:     int
    dim:       int
    count:     int
    expected:  int
    schema:    int = SCHEMA
    neighbors: List[List[List[str]]] = field(default_factory=list)
