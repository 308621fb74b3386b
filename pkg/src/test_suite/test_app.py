"""
test_suite/test_app.py
──────────────────────
Testes de ponta a ponta da CLI (app.main): analyze, triangle, orbit, link e
scwol, com os códigos de saída 0 / 1 / 2.
"""

import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from typing import Tuple

from test_suite.conftest import _title, data_path
from test_suite.runner import TestRunner

from app import EXIT_CHECK, EXIT_INPUT, EXIT_OK, main
from characters import CERTIFIED, NO_POLE


def _run(*argv) -> Tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(["--quiet", *argv])
    return code, out.getvalue()


def _load(path: str):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def test_app() -> Tuple[int, int]:
    print(_title("MÓDULO: app.py (CLI)"))
    runner = TestRunner()

    # ── analyze ──────────────────────────────────────────

    def t_analyze_free():
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "r.json")
            code, _ = _run("analyze", data_path("free_hyperbolic.json"), "--output", out)
            assert code == EXIT_OK
            report = _load(out)
        assert report["schema"] == 1 and report["verification_passed"]
        assert report["words_source"] == "config"
        assert [e["word"] for e in report["traces"]] == ["x", "y", "xy", "xy^-1"]
        for entry in report["places"]:
            assert entry["verdict"] == CERTIFIED
            assert entry["witness"] == "x" and entry["witness_valuation"] == -1
            assert entry["certificate"] == "x"
        assert [fv["fixed"] for fv in report["fixed_vertices"]] == [False, True, False, True]
        assert report["fixed_vertices"][0]["coefficient_valuation"] == -1

    def t_analyze_triangle():
        code, text = _run("analyze", data_path("triangle_333.json"))
        assert code == EXIT_OK
        report = json.loads(text)
        assert report["generators"] == ["a", "b", "c"]
        assert len(report["relators"]) == 6 and all(r["passed"] for r in report["relators"])
        zero = report["places"][0]
        assert zero["place"] == "zero" and zero["witness"] == "abac"
        assert zero["certificate"] == "abc" and zero["certificate_valuation"] == -1

    def t_analyze_no_words():
        code, text = _run("analyze", data_path("mod3_diagonal.json"))
        assert code == EXIT_OK
        report = json.loads(text)
        assert report["traces"] == []
        assert report["places"][0]["verdict"] == NO_POLE
        assert report["places"][0]["min_valuation"] is None

    def t_analyze_not_sl():
        code, text = _run("analyze", data_path("not_sl.json"))
        assert code == EXIT_CHECK
        report = json.loads(text)
        assert not report["verification_passed"]
        assert not report["determinants"][0]["passed"]
        assert report["traces"] == [] and report["places"] == []

    def t_analyze_bad_input():
        assert _run("analyze", data_path("nao_existe.json"))[0] == EXIT_INPUT
        assert _run("analyze")[0] == EXIT_INPUT
        assert _run("nada")[0] == EXIT_INPUT

    # ── triangle ─────────────────────────────────────────

    def t_triangle_command():
        code, text = _run("triangle", "--p", "3", "--q", "3", "--r", "3")
        assert code == EXIT_OK
        assert "s + 1 + s^-1" in text

    def t_triangle_seifert():
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "t.json")
            code, text = _run("triangle", "--p", "3", "--q", "3", "--r", "3",
                              "--a", "1", "--b", "1", "--c", "2", "--output", out)
            assert code == EXIT_OK
            report = _load(out)
        assert "haken = true" in text
        assert report["equal"] and report["seifert"]["haken"]
        assert sorted(report["certificates"]) == ["infinity", "zero"]
        assert report["certificates"]["zero"]["witness"] == "x^2y"

    def t_triangle_bad_flags():
        assert _run("triangle", "--p", "3", "--q", "3", "--r", "3", "--a", "1")[0] == EXIT_INPUT
        assert _run("triangle", "--p", "3", "--q", "3", "--r", "7")[0] == EXIT_INPUT
        assert _run("triangle", "--p", "3")[0] == EXIT_INPUT

    # ── orbit / link ─────────────────────────────────────

    def t_orbit():
        with tempfile.TemporaryDirectory() as d:
            prefix = os.path.join(d, "orbita")
            code, _ = _run("orbit", data_path("mod3_diagonal.json"), "--output", prefix)
            assert code == EXIT_OK
            report = _load(prefix + ".json")
            with open(prefix + ".dot", encoding="utf-8") as f:
                dot = f.read()
        assert report["depth"] == 3 and report["place"] == "zero"
        assert len(report["nodes"]) == 7 and len(report["edges"]) == 10
        assert report["nodes"][0]["depth"] == 0
        assert dot.startswith("digraph orbit {")

    def t_orbit_depth_flag():
        code, text = _run("orbit", data_path("mod3_diagonal.json"), "--depth", "1", "--place", "infinity")
        assert code == EXIT_OK
        report = json.loads(text)
        assert report["place"] == "infinity" and len(report["nodes"]) == 3

    def t_link():
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "l.json")
            code, text = _run("link", "--prime", "2", "--dim", "2", "--output", out)
            assert code == EXIT_OK
            report = _load(out)
        assert text.splitlines()[0] == "3"
        assert report["count"] == report["expected"] == 3 and len(report["neighbors"]) == 3

    def t_link_bad():
        assert _run("link", "--prime", "4", "--dim", "2")[0] == EXIT_INPUT
        assert _run("link", "--prime", "2", "--dim", "5")[0] == EXIT_INPUT

    # ── scwol ────────────────────────────────────────────

    def t_scwol_validate():
        with tempfile.TemporaryDirectory() as d:
            dot = os.path.join(d, "s.dot")
            code, text = _run("scwol", "validate", data_path("z2_z3.json"), "--dot", dot)
            assert code == EXIT_OK
            with open(dot, encoding="utf-8") as f:
                assert f.read().startswith("digraph scwol {")
        out = json.loads(text)
        assert out["valid"] and out["cog"]["valid"] and out["dimension"] == 1
        code, text = _run("scwol", "validate", data_path("triangle_disk.json"))
        assert code == EXIT_OK and json.loads(text)["dimension"] == 2

    def t_scwol_validate_violation():
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "laco.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"scwol": {"vertices": ["x", "y"], "edges": [[0, 0]]}}, f)
            code, text = _run("scwol", "validate", path)
        assert code == EXIT_CHECK
        out = json.loads(text)
        assert not out["valid"] and out["dimension"] is None
        assert "Scw4" in {v["axiom"] for v in out["violations"]}

    def t_scwol_pi1():
        code, text = _run("scwol", "pi1", data_path("z2_z3.json"))
        assert code == EXIT_OK
        out = json.loads(text)
        assert out["pi1"]["abelianization"]["text"] == "Z/6"
        assert out["universal_group"]["abelianization"]["torsion"] == [6]
        assert out["universal_group"]["abelianization"]["free_rank"] == 2
        code, text = _run("scwol", "pi1", data_path("triangle_disk.json"))
        assert json.loads(text)["pi1"]["abelianization"]["text"] == "0"

    def t_scwol_develop():
        code, text = _run("scwol", "develop", data_path("z2_z3.json"))
        assert code == EXIT_OK
        out = json.loads(text)
        assert (out["vertex_count"], out["edge_count"]) == (11, 12)
        assert out["cells_by_dimension"] == {"0": 5, "1": 6}
        assert out["connected"]
        assert len(out["action"]["vertex_map"]) == 6

    def t_scwol_not_developable():
        data = _load(data_path("z2_z3.json"))
        data["morphism"]["local"][1] = [[0, 1, 2]] * 3
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "colapso.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(data, f)
            assert _run("scwol", "develop", path)[0] == EXIT_CHECK

    def t_scwol_quotient_then_develop():
        with tempfile.TemporaryDirectory() as d:
            q = os.path.join(d, "q.json")
            code, _ = _run("scwol", "quotient", data_path("hexagon_z2.json"), "--output", q)
            assert code == EXIT_OK
            out = _load(q)
            assert out["command"] == "quotient" and len(out["groups"]) == 6
            code, text = _run("scwol", "develop", q)
        assert code == EXIT_OK
        assert json.loads(text)["vertex_count"] == 12

    def t_scwol_missing_parts():
        assert _run("scwol", "develop", data_path("hexagon_z2.json"))[0] == EXIT_INPUT
        assert _run("scwol", "quotient", data_path("z2_z3.json"))[0] == EXIT_INPUT
        assert _run("scwol", "rodar", data_path("z2_z3.json"))[0] == EXIT_INPUT

    runner.run("analyze: grupo livre em Q(t)",                  t_analyze_free)
    runner.run("analyze: Γ(3,3,3) com palavras da config",      t_analyze_triangle)
    runner.run("analyze: lista de palavras vazia",              t_analyze_no_words)
    runner.run("analyze: det ≠ 1 sai com código 2",             t_analyze_not_sl)
    runner.run("analyze: entradas inválidas saem com 1",        t_analyze_bad_input)
    runner.run("triangle: identidade do traço",                 t_triangle_command)
    runner.run("triangle: Seifert (3,3,3;1,1,2)",               t_triangle_seifert)
    runner.run("triangle: flags incompletas",                   t_triangle_bad_flags)
    runner.run("orbit: JSON e DOT",                             t_orbit)
    runner.run("orbit: --depth e --place",                      t_orbit_depth_flag)
    runner.run("link: p + 1 vizinhos em SL(2, F_2)",            t_link)
    runner.run("link: primo e dimensão inválidos",              t_link_bad)
    runner.run("scwol validate",                                t_scwol_validate)
    runner.run("scwol validate com violação",                   t_scwol_validate_violation)
    runner.run("scwol pi1",                                     t_scwol_pi1)
    runner.run("scwol develop sobre S₃",                        t_scwol_develop)
    runner.run("scwol develop não desenvolvível",               t_scwol_not_developable)
    runner.run("scwol quotient e develop do resultado",         t_scwol_quotient_then_develop)
    runner.run("scwol: partes faltando",                        t_scwol_missing_parts)

    return runner.summary()
