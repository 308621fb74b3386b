"""
jobs.py
───────
Leitura e validação dos arquivos JSON de entrada:

  load_job(path)          → JobConfig   (comando analyze / orbit)
  load_scwol_input(path)  → ScwolInput  (comando scwol)

Toda a validação junta os problemas encontrados e levanta um único ConfigError
com a lista completa. Formatos documentados em docs/formats.md.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from building import Representation
from characters import PROCESI_CAP
from complexes import ComplexOfGroups, GroupMorphism, LocalGroup
from errors import ConfigError, TribranchError
from fields import FunctionField, NumberField, Place, PrimeField
from groups import FiniteGroupTable, GroupPresentation, Word
from matrices import MatrixK
from polytext import parse_element, parse_place
from scwols import CellComplex, Scwol, ScwolAction, scwol_from_complex
from triangle import TriangleData, delta_restriction, gamma_representation

logger = logging.getLogger(__name__)

# ── Configurações ─────────────────────────────────────────
SCHEMA_VERSION = 1
DEFAULT_WORD_LENGTH = 8
DEFAULT_ORBIT_DEPTH = 3

MODES = ("rational", "number-field", "mod-p")


@dataclass
class JobConfig:
    path: str
    field: FunctionField
    mode: str
    representation: Representation
    places: List[Place] = field(default_factory=list)
    words: Optional[List[Word]] = None      # None: palavras de Procesi
    word_length: int = DEFAULT_WORD_LENGTH
    orbit_depth: int = DEFAULT_ORBIT_DEPTH
    procesi_cap: int = PROCESI_CAP
    triangle: Optional[Tuple[int, int, int]] = None


def _read_json(path: str) -> Dict[str, Any]:
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"arquivo não encontrado: {path}", path=path)
    try:
        with open(p, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"JSON inválido em {path}: {e}", path=path) from e
    if not isinstance(data, dict):
        raise ConfigError("o topo do arquivo precisa ser um objeto", path=path)
    schema = data.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise ConfigError(f"schema {schema} não suportado", path=path)
    return data


def _positive_int(data: Dict, key: str, default: int, problems: List[str]) -> int:
    value = data.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        problems.append(f"{key} precisa ser inteiro ≥ 0")
        return default
    return value


# ─────────────────────────────────────────────────────────
# Corpo de coeficientes
# ─────────────────────────────────────────────────────────

def build_field(spec: Any, variable: str, problems: List[str]) -> Optional[Tuple[FunctionField, str]]:
    if not isinstance(spec, dict):
        problems.append("field precisa ser um objeto com mode")
        return None
    mode = spec.get("mode")
    if mode not in MODES:
        problems.append(f"mode desconhecido {mode!r}; use {', '.join(MODES)}")
        return None
    if mode != "number-field" and "minpoly" in spec:
        problems.append(f"minpoly não combina com mode {mode}")
    if mode != "mod-p" and "prime" in spec:
        problems.append(f"prime não combina com mode {mode}")
    try:
        if mode == "rational":
            K = NumberField.rationals()
        elif mode == "number-field":
            if "minpoly" not in spec:
                problems.append("number-field exige minpoly")
                return None
            emb = spec.get("embedding")
            K = NumberField(spec["minpoly"], tuple(emb) if emb else None, spec.get("name", "a"))
        else:
            if "prime" not in spec:
                problems.append("mod-p exige prime")
                return None
            K = PrimeField(int(spec["prime"]))
    except (TribranchError, TypeError, ValueError) as e:
        problems.append(f"corpo inválido: {e}")
        return None
    return FunctionField(K, variable), mode


# ─────────────────────────────────────────────────────────
# Apresentações e matrizes
# ─────────────────────────────────────────────────────────

def parse_presentation(spec: Any, problems: List[str]) -> Optional[GroupPresentation]:
    if not isinstance(spec, dict) or "generators" not in spec:
        problems.append("presentation precisa de generators")
        return None
    try:
        names = tuple(spec["generators"])
        base = GroupPresentation(names)
        relators = tuple(base.word(str(r)) for r in spec.get("relators", []))
        return GroupPresentation(names, relators)
    except (TribranchError, ValueError, TypeError) as e:
        problems.append(f"apresentação inválida: {e}")
        return None


def parse_matrix(rows: Any, ff: FunctionField, where: str, problems: List[str]) -> Optional[MatrixK]:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        problems.append(f"{where}: matriz precisa ser lista de linhas")
        return None
    n = len(rows)
    if any(len(r) != n for r in rows):
        problems.append(f"{where}: matriz precisa ser quadrada")
        return None
    try:
        return MatrixK(ff, [[parse_element(str(x), ff) for x in r] for r in rows])
    except (TribranchError, TypeError) as e:
        problems.append(f"{where}: {e}")
        return None


def _triangle_job(spec: Any, problems: List[str]):
    try:
        p, q, r = int(spec["p"]), int(spec["q"]), int(spec["r"])
        td = TriangleData.builtin(p, q, r)
        group = spec.get("group", "delta")
        if group not in ("delta", "gamma"):
            problems.append(f"triangle.group desconhecido {group!r}")
            return None
        rep = delta_restriction(td) if group == "delta" else gamma_representation(td)
        return rep, (p, q, r)
    except (KeyError, TypeError) as e:
        problems.append(f"triangle precisa de p, q, r inteiros ({e})")
    except ValueError as e:
        problems.append(f"triângulo não suportado: {e}")
    return None


# ─────────────────────────────────────────────────────────
# JobConfig
# ─────────────────────────────────────────────────────────

def load_job(path: str) -> JobConfig:
    data = _read_json(path)
    problems: List[str] = []
    variable = str(data.get("variable", "t"))

    triangle = None
    if "triangle" in data:
        built = _triangle_job(data["triangle"], problems)
        if built is None:
            raise ConfigError(f"{path}: configuração inválida", path=path, problems=problems)
        rep, triangle = built
        ff, mode = rep.field, "number-field"
        for key in ("field", "presentation", "images"):
            if key in data:
                problems.append(f"{key} não combina com triangle")
    else:
        fm = build_field(data.get("field"), variable, problems)
        pres = parse_presentation(data.get("presentation"), problems)
        rep = None
        if fm and pres:
            ff, mode = fm
            images = data.get("images", {})
            if not isinstance(images, dict):
                problems.append("images precisa mapear gerador → matriz")
                images = {}
            missing = [g for g in pres.generators if g not in images]
            extra = [g for g in images if g not in pres.generators]
            if missing:
                problems.append(f"faltam imagens para {missing}")
            if extra:
                problems.append(f"imagens para geradores inexistentes {extra}")
            mats = [parse_matrix(images.get(g), ff, f"images.{g}", problems) for g in pres.generators if g in images]
            if not missing and all(m is not None for m in mats):
                sizes = {m.n for m in mats}
                if len(sizes) > 1:
                    problems.append(f"imagens com dimensões diferentes {sorted(sizes)}")
                else:
                    rep = Representation(pres, tuple(mats))
        if rep is None:
            raise ConfigError(f"{path}: configuração inválida", path=path, problems=problems)

    places = []
    for text in data.get("places", []):
        try:
            places.append(parse_place(str(text), ff))
        except ConfigError as e:
            problems.append(str(e))

    words = None
    spec = data.get("words", "procesi")
    if spec != "procesi":
        if not isinstance(spec, list):
            problems.append('words precisa ser "procesi" ou uma lista')
        else:
            words = []
            for w in spec:
                try:
                    words.append(rep.presentation.word(str(w)))
                except ValueError as e:
                    problems.append(f"palavra {w!r}: {e}")

    job = JobConfig(
        path=path,
        field=ff,
        mode=mode,
        representation=rep,
        places=places,
        words=words,
        word_length=_positive_int(data, "word_length", DEFAULT_WORD_LENGTH, problems),
        orbit_depth=_positive_int(data, "orbit_depth", DEFAULT_ORBIT_DEPTH, problems),
        procesi_cap=_positive_int(data, "procesi_cap", PROCESI_CAP, problems),
        triangle=triangle,
    )
    if problems:
        raise ConfigError(f"{path}: {len(problems)} problema(s)", path=path, problems=problems)
    logger.info(f"📦 job carregado: {path} ({mode}, {rep.presentation.n_gens} geradores)")
    return job


# ─────────────────────────────────────────────────────────
# Entradas de scwol / complexo de grupos
# ─────────────────────────────────────────────────────────

@dataclass
class ScwolInput:
    path: str
    scwol: Scwol
    cog: Optional[ComplexOfGroups] = None
    morphism: Optional[GroupMorphism] = None
    action: Optional[ScwolAction] = None
    base: int = 0


def parse_group(spec: Any) -> LocalGroup:
    """{"cyclic": n} | {"symmetric": n} | {"trivial": true} | {"table": [...]} | {"presentation": {...}}"""
    if not isinstance(spec, dict):
        raise ConfigError(f"grupo inválido: {spec!r}")
    if "cyclic" in spec:
        return FiniteGroupTable.cyclic(int(spec["cyclic"]))
    if "symmetric" in spec:
        return FiniteGroupTable.symmetric(int(spec["symmetric"]))
    if spec.get("trivial"):
        return FiniteGroupTable.trivial()
    if "table" in spec:
        labels = tuple(spec.get("labels", ()))
        return FiniteGroupTable(table=tuple(map(tuple, spec["table"])),
                                identity=int(spec.get("identity", 0)), labels=labels)
    if "presentation" in spec:
        problems: List[str] = []
        pres = parse_presentation(spec["presentation"], problems)
        if pres is None:
            raise ConfigError("; ".join(problems))
        return pres
    raise ConfigError(f"grupo sem tipo reconhecido: {sorted(spec)}")


def _element(G: LocalGroup, spec: Any):
    if isinstance(G, FiniteGroupTable):
        return G.element(tuple(spec) if isinstance(spec, list) else spec)
    return G.word(str(spec))


def parse_scwol(data: Dict[str, Any]) -> Scwol:
    if "complex" in data:
        c = data["complex"]
        cells = CellComplex(
            tuple(c.get("vertices", ())),
            tuple(tuple(e) for e in c.get("edges", ())),
            tuple(tuple(t) for t in c.get("triangles", ())),
        )
        return scwol_from_complex(cells)
    if "scwol" not in data:
        raise ConfigError("entrada precisa de scwol ou complex")
    s = data["scwol"]
    return Scwol(
        tuple(s.get("vertices", ())),
        tuple(tuple(e) for e in s.get("edges", ())),
        tuple(tuple(c) for c in s.get("compositions", ())),
        tuple(s.get("dims", ())),
    )


def parse_cog(scwol: Scwol, data: Dict[str, Any]) -> ComplexOfGroups:
    groups = tuple(parse_group(g) for g in data["groups"])
    if len(groups) != scwol.n_vertices:
        raise ConfigError(f"{len(groups)} grupos para {scwol.n_vertices} vértices")
    psi = []
    for a, images in enumerate(data.get("psi", [])):
        dst = groups[scwol.t(a)]
        psi.append(tuple(_element(dst, x) for x in images))
    twisting = {}
    for a, b, g in data.get("twisting", []):
        twisting[(int(a), int(b))] = _element(groups[scwol.t(int(a))], g)
    return ComplexOfGroups(scwol, groups, tuple(psi), twisting)


def parse_morphism(data: Dict[str, Any]) -> GroupMorphism:
    target = parse_group(data["target"])
    if not isinstance(target, FiniteGroupTable):
        raise ConfigError("o alvo do morfismo precisa ser finito")
    local = tuple(tuple(_element(target, x) for x in m) for m in data["local"])
    twist = tuple(_element(target, x) for x in data["twist"])
    return GroupMorphism(target, local, twist)


def parse_action(scwol: Scwol, data: Dict[str, Any]) -> ScwolAction:
    group = parse_group(data["group"])
    if not isinstance(group, FiniteGroupTable):
        raise ConfigError("ação exige grupo finito")
    vm = tuple(tuple(int(v) for v in row) for row in data["vertex_map"])
    em = tuple(tuple(int(e) for e in row) for row in data["edge_map"])
    return ScwolAction(scwol, group, vm, em)


def load_scwol_input(path: str) -> ScwolInput:
    data = _read_json(path)
    try:
        scwol = parse_scwol(data)
        out = ScwolInput(path=path, scwol=scwol, base=int(data.get("base", 0)))
        if "groups" in data:
            out.cog = parse_cog(scwol, data)
        if "morphism" in data:
            out.morphism = parse_morphism(data["morphism"])
        if "action" in data:
            out.action = parse_action(scwol, data["action"])
    except ConfigError as e:
        raise ConfigError(f"{path}: {e}", path=path, problems=e.problems) from e
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise ConfigError(f"{path}: entrada inválida ({type(e).__name__}: {e})", path=path) from e
    return out
