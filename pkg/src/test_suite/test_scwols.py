"""
test_suite/test_scwols.py
─────────────────────────
Testes de scwols.py: axiomas, subdivisão baricêntrica, caminhos de arestas,
π₁ por árvore geradora e ações de grupos finitos.
"""

from typing import Tuple

from test_suite.conftest import _title, C2, hexagon_antipodal_action
from test_suite.runner import TestRunner, raises

from errors import Disconnected, InconsistentIncidence
from groups import Word, abelianization
from scwols import (
    CellComplex, EdgePath, Scwol, ScwolAction, cycle_complex, edge_path_word, graph_complex,
    reduce_edge_path, scwol_from_complex, scwol_pi1_presentation, spanning_tree_edges,
    tetrahedron_boundary, torus_complex, validate_action, validate_scwol,
)

TRIANGLE = CellComplex(("a", "b", "c"), ((0, 1), (1, 2), (0, 2)), ((0, 1, 2),))


def _axioms(report):
    return sorted({v.axiom for v in report.violations})


def test_scwols() -> Tuple[int, int]:
    print(_title("MÓDULO: scwols.py"))
    runner = TestRunner()

    # ── Axiomas ──────────────────────────────────────────

    def t_triangle_scwol():
        s = scwol_from_complex(TRIANGLE)
        assert (s.n_vertices, s.n_edges, len(s.compositions)) == (7, 12, 6)
        assert s.vertices[3:] == ("ab", "bc", "ac", "T0")
        assert s.cells_by_dimension() == {0: 3, 1: 3, 2: 1}
        assert s.dimension() == 2
        assert validate_scwol(s).valid

    def t_builders_valid():
        for cells in (cycle_complex(5), tetrahedron_boundary(), torus_complex(3)):
            s = scwol_from_complex(cells)
            assert validate_scwol(s).valid
            assert s.is_connected()

    def t_graph_dimension():
        s = scwol_from_complex(cycle_complex(3))
        assert s.dimension() == 1
        assert Scwol(("x",), ()).dimension() == 0

    def t_violation_loop_and_missing():
        assert "Scw4" in _axioms(validate_scwol(Scwol(("x", "y"), ((0, 0),))))
        assert _axioms(validate_scwol(Scwol(("x", "y"), ((0, 5),)))) == ["Scw1"]
        missing = Scwol(("0", "1", "2"), ((1, 0), (2, 1)))
        report = validate_scwol(missing)
        assert _axioms(report) == ["Scw2"]
        assert report.violations[0].witness == (0, 1)

    def t_violation_bad_endpoints():
        s = Scwol(("0", "1", "2"), ((1, 0), (2, 1), (2, 1)), ((0, 1, 2),))
        assert "Scw2" in _axioms(validate_scwol(s))

    def t_violation_associativity():
        # a: 1→0, b: 2→1, c: 3→2, ab, bc, e dois candidatos distintos para abc
        s = Scwol(
            ("0", "1", "2", "3"),
            ((1, 0), (2, 1), (3, 2), (2, 0), (3, 1), (3, 0), (3, 0)),
            ((0, 1, 3), (1, 2, 4), (3, 2, 5), (0, 4, 6)),
        )
        report = validate_scwol(s)
        assert _axioms(report) == ["Scw3"]
        assert report.violations[0].witness == (0, 1, 2)

    def t_inconsistent_incidence():
        raises(InconsistentIncidence, scwol_from_complex, graph_complex(2, [(0, 0)]))
        open_path = CellComplex(("0", "1", "2", "3"), ((0, 1), (1, 2), (2, 3)), ((0, 1, 2),))
        raises(InconsistentIncidence, scwol_from_complex, open_path)
        raises(InconsistentIncidence, scwol_from_complex, CellComplex(("0", "1"), ((0, 1),), ((0, 0, 0),)))

    # ── Caminhos ─────────────────────────────────────────

    def t_edge_path_loop():
        s = scwol_from_complex(cycle_complex(3))
        loop = EdgePath(0, ((0, 1), (1, -1), (2, 1), (3, -1), (4, 1), (5, -1)))
        assert loop.is_loop(s)
        assert reduce_edge_path(s, loop) == loop
        back = loop.inverse(s)
        both = EdgePath(0, loop.steps + back.steps)
        assert reduce_edge_path(s, both).steps == ()
        assert edge_path_word(s, loop) == Word([1, -2, 3, -4, 5, -6])

    def t_edge_path_collapse():
        s = scwol_from_complex(TRIANGLE)
        ab = s.compose(0, 6)
        assert ab == 9
        up = EdgePath(0, ((0, 1), (6, 1)))
        assert up.end(s) == 6
        assert reduce_edge_path(s, up).steps == ((9, 1),)
        down = EdgePath(6, ((6, -1), (0, -1)))
        assert reduce_edge_path(s, down).steps == ((9, -1),)

    def t_edge_path_invalid():
        s = scwol_from_complex(cycle_complex(3))
        raises(ValueError, EdgePath(1, ((0, 1),)).end, s)

    # ── π₁ ───────────────────────────────────────────────

    def t_pi1_values():
        cases = [
            (cycle_complex(3), "Z"),
            (TRIANGLE, "0"),
            (tetrahedron_boundary(), "0"),
            (torus_complex(3), "Z ⊕ Z"),
        ]
        for cells, expected in cases:
            s = scwol_from_complex(cells)
            assert str(abelianization(scwol_pi1_presentation(s))) == expected

    def t_torus_counts():
        cells = torus_complex(3)
        assert (len(cells.vertices), len(cells.edges), len(cells.triangles)) == (9, 27, 18)
        s = scwol_from_complex(cells)
        assert s.n_vertices == 54
        assert s.cells_by_dimension() == {0: 9, 1: 27, 2: 18}

    def t_spanning_tree():
        s = scwol_from_complex(tetrahedron_boundary())
        assert s.n_vertices == 14
        tree = spanning_tree_edges(s, 0)
        assert len(tree) == s.n_vertices - 1
        assert spanning_tree_edges(s, 5) != [] and len(spanning_tree_edges(s, 5)) == 13
        pres = scwol_pi1_presentation(s, base=3)
        assert pres.generators[0] == "e0" and pres.n_gens == s.n_edges

    def t_disconnected():
        s = scwol_from_complex(graph_complex(2, []))
        assert not s.is_connected()
        raises(Disconnected, spanning_tree_edges, s, 0)

    # ── Ações ────────────────────────────────────────────

    def t_hexagon_action():
        action = hexagon_antipodal_action()
        assert validate_action(action).valid
        assert len(action.vertex_orbits()) == 6
        assert len(action.edge_orbits()) == 6
        assert action.vertex_orbits()[0] == [0, 3]
        assert action.stabilizer(0) == [0]

    def t_action_condition_ii():
        s = scwol_from_complex(graph_complex(2, [(0, 1)]))
        flip = ScwolAction(s, C2, ((0, 1, 2), (1, 0, 2)), ((0, 1), (1, 0)))
        report = validate_action(flip)
        assert not report.valid
        assert any("(ii)" in v for v in report.violations)
        assert flip.stabilizer(2) == [0, 1]

    def t_action_bad_maps():
        s = scwol_from_complex(graph_complex(2, [(0, 1)]))
        broken = ScwolAction(s, C2, ((0, 1, 2), (0, 1, 2)), ((0, 1), (1, 0)))
        assert any("extremos" in v for v in validate_action(broken).violations)
        short = ScwolAction(s, C2, ((0, 1, 2),), ((0, 1),))
        assert not validate_action(short).valid

    runner.run("Triângulo: 7 vértices, 12 arestas, 6 composições", t_triangle_scwol)
    runner.run("Construtores produzem scwols válidos",            t_builders_valid)
    runner.run("Dimensão de grafos e de um ponto",                t_graph_dimension)
    runner.run("Violações Scw4, Scw1 e par sem composição",       t_violation_loop_and_missing)
    runner.run("Violação de extremos da composição",              t_violation_bad_endpoints)
    runner.run("Violação de associatividade",                     t_violation_associativity)
    runner.run("Incidências inconsistentes",                      t_inconsistent_incidence)
    runner.run("Laço no 3-ciclo e redução",                       t_edge_path_loop)
    runner.run("Colapso a⁺b⁺ → (ab)⁺ e b⁻a⁻ → (ab)⁻",             t_edge_path_collapse)
    runner.run("Passo que não parte do vértice atual",            t_edge_path_invalid)
    runner.run("H₁: ciclo, triângulo, esfera e toro",             t_pi1_values)
    runner.run("Toro 3×3: contagens",                             t_torus_counts)
    runner.run("Árvore geradora BFS",                             t_spanning_tree)
    runner.run("Scwol desconexo",                                 t_disconnected)
    runner.run("Z/2 antipodal no hexágono",                       t_hexagon_action)
    runner.run("Ação que move aresta com origem fixa",            t_action_condition_ii)
    runner.run("Ações com mapas inválidos",                       t_action_bad_maps)

    return runner.summary()
