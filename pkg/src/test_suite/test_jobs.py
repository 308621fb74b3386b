"""
test_suite/test_jobs.py
───────────────────────
Testes de jobs.py e reports/writers.py: leitura dos JSON de entrada, a lista
completa de problemas no ConfigError e a escrita determinística.
"""

import json
import os
import tempfile
from typing import Tuple

from test_suite.conftest import _title, data_path, sample_files
from test_suite.runner import TestRunner, raises

from complexes import quotient_cog
from errors import ConfigError
from jobs import load_job, load_scwol_input
from reports.writers import cog_to_dict, morphism_to_dict, scwol_to_dot, to_json_text
from scwols import cycle_complex, scwol_from_complex


def _write(d: str, name: str, data) -> str:
    path = os.path.join(d, name)
    with open(path, "w", encoding="utf-8") as f:
        f.write(data if isinstance(data, str) else json.dumps(data))
    return path


def _problems(path: str, loader=load_job):
    return raises(ConfigError, loader, path).problems


def test_jobs() -> Tuple[int, int]:
    print(_title("MÓDULO: jobs.py / reports/writers.py"))
    runner = TestRunner()

    # ── Exemplos em data/ ────────────────────────────────

    def t_sample_files_load():
        names = sample_files()
        assert "triangle_333.json" in names and "z2_z3.json" in names
        for name in names:
            with open(data_path(name), encoding="utf-8") as f:
                data = json.load(f)
            if "complex" in data or "scwol" in data:
                assert load_scwol_input(data_path(name)).scwol.n_vertices > 0
            else:
                assert load_job(data_path(name)).representation is not None

    def t_triangle_job():
        job = load_job(data_path("triangle_333.json"))
        assert job.triangle == (3, 3, 3) and job.mode == "number-field"
        assert job.representation.presentation.generators == ("a", "b", "c")
        assert [str(p) for p in job.places] == [str(p) for p in load_job(data_path("delta_333.json")).places]
        assert job.word_length == 4 and len(job.words) == 3
        assert load_job(data_path("delta_333.json")).words is None

    def t_explicit_job():
        job = load_job(data_path("sqrt2_unipotent.json"))
        assert job.mode == "number-field" and job.field.K.d == 2
        assert job.representation.dimension == 2
        mod3 = load_job(data_path("mod3_diagonal.json"))
        assert mod3.field.K.characteristic == 3 and mod3.words == []

    # ── Problemas acumulados ─────────────────────────────

    def t_missing_and_malformed():
        with tempfile.TemporaryDirectory() as d:
            raises(ConfigError, load_job, os.path.join(d, "nada.json"))
            raises(ConfigError, load_job, _write(d, "quebrado.json", "{ nope"))
            raises(ConfigError, load_job, _write(d, "lista.json", [1, 2]))
            raises(ConfigError, load_job, _write(d, "schema.json", {"schema": 2}))

    def t_field_and_presentation_problems():
        with tempfile.TemporaryDirectory() as d:
            probs = _problems(_write(d, "a.json", {"field": {"mode": "bogus"}}))
            assert len(probs) == 2
            assert "mode desconhecido" in probs[0] and "generators" in probs[1]

    def t_mode_mismatch():
        with tempfile.TemporaryDirectory() as d:
            path = _write(d, "b.json", {
                "field": {"mode": "mod-p", "prime": 3, "minpoly": [1, 1]},
                "presentation": {"generators": ["x"]},
                "images": {"x": [["1", "t"], ["0", "1"]]},
            })
            assert any("minpoly não combina" in p for p in _problems(path))

    def t_image_problems():
        with tempfile.TemporaryDirectory() as d:
            path = _write(d, "c.json", {
                "field": {"mode": "rational"},
                "presentation": {"generators": ["x", "y"]},
                "images": {"x": [["1", "0"], ["0", "1"]], "z": [["1"]]},
            })
            probs = _problems(path)
            assert any("faltam imagens" in p for p in probs)
            assert any("inexistentes" in p for p in probs)
            path = _write(d, "d.json", {
                "field": {"mode": "rational"},
                "presentation": {"generators": ["x"]},
                "images": {"x": [["1", "0", "0"], ["0", "1"]]},
            })
            assert any("quadrada" in p for p in _problems(path))

    def t_all_problems_reported():
        with tempfile.TemporaryDirectory() as d:
            path = _write(d, "e.json", {
                "field": {"mode": "rational"},
                "presentation": {"generators": ["x"]},
                "images": {"x": [["1", "t"], ["0", "1"]]},
                "places": ["zero", "norte"],
                "words": ["xq"],
                "orbit_depth": -1,
            })
            probs = _problems(path)
            assert len(probs) == 3
            assert "norte" in probs[0] and "xq" in probs[1] and "orbit_depth" in probs[2]

    def t_triangle_problems():
        with tempfile.TemporaryDirectory() as d:
            probs = _problems(_write(d, "f.json", {"triangle": {"p": 3, "q": 3, "r": 3},
                                                  "field": {"mode": "rational"}}))
            assert probs == ["field não combina com triangle"]
            probs = _problems(_write(d, "g.json", {"triangle": {"p": 3, "q": 3, "r": 7}}))
            assert "não suportado" in probs[0]
            probs = _problems(_write(d, "h.json", {"triangle": {"p": 3, "q": 3, "r": 3, "group": "pi"}}))
            assert "triangle.group" in probs[0]

    # ── Entradas de scwol ────────────────────────────────

    def t_scwol_input():
        data = load_scwol_input(data_path("z2_z3.json"))
        assert data.scwol.vertices == ("u", "w", "uw")
        assert [G.order for G in data.cog.groups] == [2, 3, 1]
        assert data.morphism.target.order == 6 and data.action is None
        hexagon = load_scwol_input(data_path("hexagon_z2.json"))
        assert hexagon.cog is None and hexagon.action.group.order == 2

    def t_scwol_input_problems():
        with tempfile.TemporaryDirectory() as d:
            edge = {"complex": {"vertices": ["u", "w"], "edges": [[0, 1]]}}
            raises(ConfigError, load_scwol_input, _write(d, "a.json", {"groups": []}))
            raises(ConfigError, load_scwol_input, _write(d, "b.json", {**edge, "groups": [{"cyclic": 2}]}))
            err = raises(ConfigError, load_scwol_input,
                         _write(d, "c.json", {**edge, "groups": [{"weird": 1}] * 3}))
            assert "sem tipo" in str(err)
            bad_action = {**edge, "action": {"group": {"cyclic": 2}, "vertex_map": ["x"], "edge_map": []}}
            raises(ConfigError, load_scwol_input, _write(d, "d.json", bad_action))
            free_target = {**edge, "morphism": {"target": {"presentation": {"generators": ["z"]}},
                                                "local": [], "twist": []}}
            raises(ConfigError, load_scwol_input, _write(d, "e.json", free_target))

    # ── Escrita ──────────────────────────────────────────

    def t_quotient_round_trip():
        cog, phi = quotient_cog(load_scwol_input(data_path("hexagon_z2.json")).action)
        with tempfile.TemporaryDirectory() as d:
            out = cog_to_dict(cog)
            out["morphism"] = morphism_to_dict(phi)
            back = load_scwol_input(_write(d, "q.json", to_json_text(out)))
        assert back.scwol == cog.scwol
        assert [G.order for G in back.cog.groups] == [1] * 6
        assert back.morphism.local == phi.local and back.morphism.twist == phi.twist

    def t_deterministic_text():
        cog, phi = quotient_cog(load_scwol_input(data_path("hexagon_z2.json")).action)
        assert to_json_text(cog_to_dict(cog)) == to_json_text(cog_to_dict(quotient_cog(
            load_scwol_input(data_path("hexagon_z2.json")).action)[0]))
        dot = scwol_to_dot(scwol_from_complex(cycle_complex(3)))
        assert dot.startswith("digraph scwol {") and dot.count("->") == 6
        assert '"v0v1"' in dot

    runner.run("Exemplos em data/ carregam",                   t_sample_files_load)
    runner.run("Job de triângulo",                             t_triangle_job)
    runner.run("Jobs explícitos: Q(√2) e F_3",                 t_explicit_job)
    runner.run("Arquivo ausente, JSON inválido, schema",       t_missing_and_malformed)
    runner.run("Modo e apresentação inválidos",                t_field_and_presentation_problems)
    runner.run("minpoly com mod-p",                            t_mode_mismatch)
    runner.run("Imagens faltando, sobrando, não quadradas",    t_image_problems)
    runner.run("Todos os problemas num único ConfigError",     t_all_problems_reported)
    runner.run("Triângulo com chaves conflitantes",            t_triangle_problems)
    runner.run("Entrada de scwol com grupos e morfismo",       t_scwol_input)
    runner.run("Entradas de scwol inválidas",                  t_scwol_input_problems)
    runner.run("Quociente escrito e relido",                   t_quotient_round_trip)
    runner.run("Escrita determinística e DOT",                 t_deterministic_text)

    return runner.summary()
