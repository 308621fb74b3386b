"""
test_suite/conftest.py
──────────────────────
Utilitários compartilhados pelas suítes de teste:
  • Re-exporta helpers de output de utils.display
  • Carregamento do .env (semente e número de casos das propriedades)
  • Geradores aleatórios reprodutíveis: elementos, matrizes elementares, vértices
  • Complexos de amostra: Z/2 —— Z/3, S₃, o morfismo padrão e o hexágono com Z/2
  • data_path() — arquivos de exemplo em data/
"""

import os
import logging
import random
from pathlib import Path
from typing import List

# ── Logging ───────────────────────────────────────────────
logging.basicConfig(
    level=logging.WARNING,
    format="%(levelname)s | %(name)s | %(message)s"
)

# ── Re-exportar helpers de display ───────────────────────
from utils.display import GREEN, RED, BOLD, RESET, _warn, _title

from complexes import ComplexOfGroups, GraphEdge, GroupMorphism, graph_of_groups
from scwols import ScwolAction, cycle_complex, scwol_from_complex
from fields import FieldElement, FunctionField, NumberField, Place, PrimeField
from groups import FiniteGroupTable
from lattices import Lattice, VertexClass, canonical_form
from matrices import MatrixK

# ── Carregamento do .env ──────────────────────────────────

def _load_env() -> None:
    """Carrega o .env da raiz do projeto (dois níveis acima de test_suite/)."""
    from dotenv import load_dotenv
    env_path = Path(__file__).parent.parent.parent / ".env"
    if env_path.exists():
        load_dotenv(dotenv_path=str(env_path))
    else:
        load_dotenv()

_load_env()

DEFAULT_SEED = 20240611


def seed_from_env() -> int:
    raw = os.getenv("TRIBRANCH_TEST_SEED", "").strip()
    return int(raw) if raw.isdigit() else DEFAULT_SEED


def property_cases(default: int) -> int:
    """TRIBRANCH_PROPERTY_CASES substitui o número de casos das propriedades."""
    raw = os.getenv("TRIBRANCH_PROPERTY_CASES", "").strip()
    if not raw:
        return default
    if not raw.isdigit() or int(raw) == 0:
        print(_warn(f"TRIBRANCH_PROPERTY_CASES inválido: {raw!r}; usando {default}"))
        return default
    return int(raw)


def make_rng(salt: int = 0) -> random.Random:
    return random.Random(seed_from_env() + salt)


# ── Corpos ────────────────────────────────────────────────

QT = FunctionField(NumberField.rationals())


def fp_field(p: int) -> FunctionField:
    return FunctionField(PrimeField(p))


ZERO = Place.zero()
INFINITY = Place.infinity()

# ── Geradores aleatórios ─────────────────────────────────

def random_laurent(rng: random.Random, ff: FunctionField, low: int = -1, high: int = 1) -> FieldElement:
    """Polinômio de Laurent com coeficientes pequenos em [low, high] de expoente."""
    out = ff.zero
    for k in range(low, high + 1):
        c = rng.randint(-2, 2)
        if c:
            out = out + ff.monomial(k, c)
    return out


def random_polynomial(rng: random.Random, ff: FunctionField, degree: int = 2) -> FieldElement:
    return random_laurent(rng, ff, 0, degree)


def elementary(ff: FunctionField, n: int, i: int, j: int, x: FieldElement) -> MatrixK:
    rows = [[ff.one if r == c else ff.zero for c in range(n)] for r in range(n)]
    rows[i][j] = x
    return MatrixK(ff, rows)


def random_elementary_product(rng: random.Random, ff: FunctionField, n: int, length: int = 3,
                              integral: bool = False) -> MatrixK:
    """Produto de matrizes elementares E_ij(x); det = 1."""
    g = MatrixK.identity(ff, n)
    for _ in range(length):
        i, j = rng.sample(range(n), 2)
        x = random_polynomial(rng, ff) if integral else random_laurent(rng, ff)
        g = g @ elementary(ff, n, i, j, x)
    return g


def random_vertex(rng: random.Random, ff: FunctionField, n: int, place: Place = ZERO) -> VertexClass:
    exps = [rng.randint(-2, 2) for _ in range(n)]
    u = ff.uniformizer(place)
    d = MatrixK.diag(ff, [u ** e for e in exps])
    g = random_elementary_product(rng, ff, n, length=2)
    return canonical_form(Lattice(place, g @ d))


def random_invertible(rng: random.Random, ff: FunctionField, n: int) -> MatrixK:
    """Unimodular vezes diagonal monomial: sempre invertível."""
    d = MatrixK.diag(ff, [ff.monomial(rng.randint(-1, 1), rng.choice([1, -1])) for _ in range(n)])
    return random_elementary_product(rng, ff, n, length=2) @ d


# ── Grupos e complexos de amostra ────────────────────────

C2 = FiniteGroupTable.cyclic(2)
C3 = FiniteGroupTable.cyclic(3)
S3 = FiniteGroupTable.symmetric(3)
TRIVIAL = FiniteGroupTable.trivial()

# em S₃ (ordem por array_form): 2 = (0 1), 3 = (0 1 2), 4 = (0 2 1)
S3_TRANSPOSITION = S3.element([1, 0, 2])
S3_ROTATION = S3.element([1, 2, 0])


def z2_z3_cog(swap: bool = False) -> ComplexOfGroups:
    """Z/2 —— Z/3 com grupo de aresta trivial (Z/3 —— Z/2 se swap)."""
    groups = [C3, C2] if swap else [C2, C3]
    return graph_of_groups(groups, [GraphEdge(0, 1, TRIVIAL, (0,), (0,))],
                           names=("w", "u") if swap else ("u", "w"))


def z2_z3_into_s3(collapse_z3: bool = False) -> GroupMorphism:
    """Inclusões padrão em S₃; torções triviais."""
    r = S3_ROTATION
    z2 = (S3.identity, S3_TRANSPOSITION)
    z3 = (S3.identity,) * 3 if collapse_z3 else (S3.identity, r, S3.mul(r, r))
    return GroupMorphism(S3, (z2, z3, (S3.identity,)), (S3.identity, S3.identity))


# ── Arquivos de exemplo ──────────────────────────────────

DATA_DIR = Path(__file__).parent.parent.parent / "data"


def data_path(name: str) -> str:
    return str(DATA_DIR / name)


def sample_files() -> List[str]:
    return sorted(p.name for p in DATA_DIR.glob("*.json"))


def hexagon_antipodal_action() -> ScwolAction:
    """Z/2 agindo no hexágono baricêntrico por rotação de meia volta."""
    s = scwol_from_complex(cycle_complex(6))
    flip_v = tuple((k + 3) % 6 for k in range(6)) + tuple(6 + (e + 3) % 6 for e in range(6))
    flip_e = tuple(2 * ((a // 2 + 3) % 6) + a % 2 for a in range(12))
    return ScwolAction(
        s, C2,
        (tuple(range(12)), flip_v),
        (tuple(range(12)), flip_e),
    )
