"""
reports/writers.py
──────────────────
Escrita determinística: JSON (dataclasses → dict) e DOT escrito à mão.

A ordem de nós, arestas e chaves é sempre a mesma para a mesma entrada,
então dois relatórios da mesma configuração saem idênticos byte a byte.
"""

import json
import logging
from dataclasses import asdict, is_dataclass
from pathlib import Path
from typing import Any, Dict, List

import networkx as nx

from complexes import ComplexOfGroups, GroupMorphism, LocalGroup
from fields import INF, Valuation
from groups import AbelianInvariants, FiniteGroupTable, GroupPresentation, Word
from scwols import Scwol, ScwolAction

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────
# JSON
# ─────────────────────────────────────────────────────────

def valuation_text(v: Valuation):
    return "+inf" if v == INF else int(v)


def to_json_text(report: Any) -> str:
    data = asdict(report) if is_dataclass(report) else report
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def save_json(report: Any, output_path: str) -> None:
    path = Path(output_path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_json_text(report))
    logger.info(f"✅ relatório salvo em: {output_path}")


def presentation_to_dict(pres: GroupPresentation, ab: AbelianInvariants) -> Dict[str, Any]:
    return {
        "generators": list(pres.generators),
        "relators": [pres.format(r) for r in pres.relators],
        "abelianization": {"free_rank": ab.free_rank, "torsion": list(ab.torsion), "text": str(ab)},
    }


def scwol_to_dict(s: Scwol) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "vertices": list(s.vertices),
        "edges": [list(e) for e in s.edges],
        "compositions": [list(c) for c in s.compositions],
    }
    if any(d is not None for d in s.dims):
        out["dims"] = list(s.dims)
    return out


def group_to_dict(G: LocalGroup) -> Dict[str, Any]:
    if isinstance(G, FiniteGroupTable):
        return {"table": [list(r) for r in G.table], "identity": G.identity, "labels": list(G.labels)}
    return {"presentation": {"generators": list(G.generators),
                             "relators": [G.format(r) for r in G.relators]}}


def _element_text(G: LocalGroup, x):
    return G.format(x) if isinstance(x, Word) else x


def cog_to_dict(cog: ComplexOfGroups) -> Dict[str, Any]:
    """Mesmo formato lido por jobs.load_scwol_input."""
    s = cog.scwol
    return {
        "schema": 1,
        "scwol": scwol_to_dict(s),
        "groups": [group_to_dict(G) for G in cog.groups],
        "psi": [[_element_text(cog.groups[s.t(a)], x) for x in m] for a, m in enumerate(cog.psi)],
        "twisting": [[a, b, _element_text(cog.groups[s.t(a)], g)]
                     for (a, b), g in sorted(cog.twisting.items())],
    }


def morphism_to_dict(phi: GroupMorphism) -> Dict[str, Any]:
    return {
        "target": group_to_dict(phi.target),
        "local": [list(m) for m in phi.local],
        "twist": list(phi.twist),
    }


def action_to_dict(action: ScwolAction) -> Dict[str, Any]:
    return {
        "group": group_to_dict(action.group),
        "vertex_map": [list(r) for r in action.vertex_map],
        "edge_map": [list(r) for r in action.edge_map],
    }


# ─────────────────────────────────────────────────────────
# DOT
# ─────────────────────────────────────────────────────────

def _quote(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def orbit_to_dot(graph: nx.MultiDiGraph, name: str = "orbit") -> str:
    lines = [f"digraph {name} {{"]
    for n in sorted(graph.nodes):
        data = graph.nodes[n]
        label = _quote(f"{n} (tipo {data['type']})")
        lines.append(f"  {n} [label={label}, depth={data['depth']}];")
    edges: List[tuple] = sorted((u, v, d.get("label", "")) for u, v, d in graph.edges(data=True))
    for u, v, label in edges:
        lines.append(f"  {u} -> {v} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def scwol_to_dot(s: Scwol, name: str = "scwol") -> str:
    """Arestas de i(a) para t(a); composições ficam implícitas."""
    lines = [f"digraph {name} {{"]
    for v, label in enumerate(s.vertices):
        extra = f", dim={s.dims[v]}" if s.dims[v] is not None else ""
        lines.append(f"  {v} [label={_quote(label)}{extra}];")
    for a, (i, t) in enumerate(s.edges):
        lines.append(f"  {i} -> {t} [label={_quote(f'e{a}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_text(text: str, output_path: str) -> None:
    with open(output_path, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"✅ arquivo salvo em: {output_path}")
