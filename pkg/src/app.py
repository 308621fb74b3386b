"""
app.py
──────
Entrada de linha de comando do Tribranch.

    python app.py analyze CONFIG [--output REPORT] [--dot PREFIX]
    python app.py triangle --p 3 --q 3 --r 3 [--a 1 --b 1 --c 2] [--output REPORT]
    python app.py orbit CONFIG [--depth N] [--place zero] [--output PREFIX]
    python app.py link --prime 2 --dim 3
    python app.py scwol {validate|pi1|develop|quotient} INPUT.json [--output OUT] [--dot DOT]

Códigos de saída: 0 sucesso, 1 entrada inválida, 2 verificação matemática falhou.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

sys.path.insert(0, str(Path(__file__).parent))

from building import (
    Certificate, NoFixedVertex, fixed_vertex, link_of_vertex, nontriviality_certificate, orbit_ball,
    subspace_count, verify_relators,
)
from characters import analyze_ideal_point, procesi_words, trace_table
from complexes import (
    check_cog, cog_pi1_presentation, development, quotient_cog, universal_group_presentation,
)
from errors import (
    ConfigError, InvalidAction, NotDevelopable, RelatorFailure,
)
from fields import Place
from groups import abelianization
from jobs import JobConfig, load_job, load_scwol_input
from lattices import standard_vertex, vertex_type
from polytext import format_element, parse_place
from reports.models import (
    AnalyzeReport, CheckEntry, FixedVertexEntry, LinkReport, OrbitEdge, OrbitNode, OrbitReport,
    PlaceEntry, SeifertEntry, TraceEntry, TriangleReport,
)
from reports.writers import (
    action_to_dict, cog_to_dict, morphism_to_dict, orbit_to_dot, presentation_to_dict, save_json,
    save_text, scwol_to_dict, scwol_to_dot, to_json_text, valuation_text,
)
from scwols import scwol_pi1_presentation, validate_scwol
from triangle import SeifertData, TriangleData, certify_triangle_curve, seifert_group, trace_abac
from utils.display import _fail, _info, _matrix, _verdict, _warn

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK = 2


def _emit(report, output: Optional[str]) -> None:
    if output:
        save_json(report, output)
    else:
        print(to_json_text(report), end="")


# ─────────────────────────────────────────────────────────
# analyze
# ─────────────────────────────────────────────────────────

def _place_entry(report) -> PlaceEntry:
    return PlaceEntry(
        place=str(report.place),
        verdict=report.verdict,
        witness=report.witness_text,
        witness_valuation=report.witness_valuation,
        min_valuation=None if report.min_valuation is None else valuation_text(report.min_valuation),
        poles=report.poles,
        valuations=[valuation_text(v) for v in report.valuations],
    )


def run_analyze(job: JobConfig) -> Tuple[AnalyzeReport, int]:
    """verify_relators → traços → pontos ideais → vértices fixos."""
    rep = job.representation
    pres = rep.presentation
    report = AnalyzeReport(config=job.path, mode=job.mode, dimension=rep.dimension,
                           generators=list(pres.generators))

    verification = verify_relators(rep)
    report.verification_passed = verification.passed
    report.determinants = [CheckEntry(d.generator, d.passed, str(d.determinant)) for d in verification.determinants]
    report.relators = [
        CheckEntry(r.text, r.passed, "" if r.matrix is None else json.dumps(r.matrix.to_text(), ensure_ascii=False))
        for r in verification.relators
    ]
    if not verification.passed:
        logger.warning("⚠️ verificação falhou; traços e pontos ideais não calculados")
        return report, EXIT_CHECK

    if job.words is None:
        words = procesi_words(rep.dimension, pres.n_gens, job.procesi_cap) if rep.dimension >= 2 else []
    else:
        words = job.words
        report.words_source = "config"
    report.traces = [TraceEntry(tf.text, str(tf.value)) for tf in trace_table(rep, words)]

    for place in job.places:
        entry = _place_entry(analyze_ideal_point(rep, place, words))
        if job.word_length > 0:
            cert = nontriviality_certificate(rep, place, job.word_length)
            if isinstance(cert, Certificate):
                entry.certificate, entry.certificate_valuation = cert.text, cert.valuation
            entry.words_checked = getattr(cert, "words_checked", 0)
        report.places.append(entry)

        for name, g in zip(pres.generators, rep.images):
            fv = fixed_vertex(g, place)
            if isinstance(fv, NoFixedVertex):
                report.fixed_vertices.append(FixedVertexEntry(
                    name, str(place), False, coefficient_index=fv.index,
                    coefficient=str(fv.coefficient), coefficient_valuation=fv.valuation,
                ))
            else:
                report.fixed_vertices.append(FixedVertexEntry(
                    name, str(place), True, basis=fv.canonical_basis.to_text(), type=vertex_type(fv),
                ))
    return report, EXIT_OK


def cmd_analyze(args) -> int:
    job = load_job(args.config)
    report, code = run_analyze(job)
    _emit(report, args.output)
    if args.dot and job.places:
        base = standard_vertex(job.field, job.representation.dimension, job.places[0])
        graph = orbit_ball(job.representation, job.places[0], base, job.orbit_depth)
        save_text(orbit_to_dot(graph), f"{args.dot}.dot")
    if code == EXIT_CHECK:
        print(_fail("verificação dos relatores falhou"), file=sys.stderr)
    return code


# ─────────────────────────────────────────────────────────
# triangle
# ─────────────────────────────────────────────────────────

def cmd_triangle(args) -> int:
    td = TriangleData.builtin(args.p, args.q, args.r)
    identity = trace_abac(td)
    computed, closed = format_element(identity.computed), format_element(identity.closed_form)
    print(f"tr ρ_s(abac)  = {computed}")
    print(f"forma fechada = {closed}")
    print(_verdict(identity.equal, "identidade confere" if identity.equal else "identidade NÃO confere"))

    report = TriangleReport(args.p, args.q, args.r, computed, closed, identity.equal)
    for key, ip in certify_triangle_curve(td).items():
        report.certificates[key] = _place_entry(ip)

    if args.a is not None or args.b is not None or args.c is not None:
        if None in (args.a, args.b, args.c):
            raise ConfigError("--a, --b e --c vão juntos")
        sg = seifert_group(SeifertData(args.p, args.q, args.r, args.a, args.b, args.c))
        report.seifert = SeifertEntry(args.a, args.b, args.c, sg.haken, str(sg.homology),
                                      sg.relation_determinant)
        print(f"haken = {str(sg.haken).lower()}  (H₁ = {sg.homology})")

    if args.output:
        save_json(report, args.output)
    return EXIT_OK if identity.equal else EXIT_CHECK


# ─────────────────────────────────────────────────────────
# orbit / link
# ─────────────────────────────────────────────────────────

def cmd_orbit(args) -> int:
    job = load_job(args.config)
    place = parse_place(args.place, job.field) if args.place else (job.places[0] if job.places else Place.zero())
    depth = job.orbit_depth if args.depth is None else args.depth
    rep = job.representation
    base = standard_vertex(job.field, rep.dimension, place)
    graph = orbit_ball(rep, place, base, depth)

    report = OrbitReport(config=job.path, place=str(place), depth=depth)
    for n in sorted(graph.nodes):
        data = graph.nodes[n]
        report.nodes.append(OrbitNode(n, data["type"], data["depth"], data["vertex"].canonical_basis.to_text()))
    report.edges = [OrbitEdge(u, v, d["label"]) for u, v, d in sorted(
        graph.edges(data=True), key=lambda e: (e[0], e[1], e[2]["label"]))]

    if args.output:
        save_json(report, f"{args.output}.json")
        save_text(orbit_to_dot(graph), f"{args.output}.dot")
    else:
        print(to_json_text(report), end="")
    print(_info(f"{graph.number_of_nodes()} vértices, {graph.number_of_edges()} arestas"), file=sys.stderr)
    return EXIT_OK


def cmd_link(args) -> int:
    found = link_of_vertex(args.dim, args.prime)
    expected = subspace_count(args.dim, args.prime)
    print(len(found))
    for v in found:
        print(_matrix(v.canonical_basis.to_text()))
        print()
    if args.output:
        save_json(LinkReport(args.prime, args.dim, len(found), expected,
                             neighbors=[v.canonical_basis.to_text() for v in found]), args.output)
    if len(found) != expected:
        print(_fail(f"esperado {expected} vizinhos"), file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


# ─────────────────────────────────────────────────────────
# scwol
# ─────────────────────────────────────────────────────────

def cmd_scwol(args) -> int:
    data = load_scwol_input(args.input)
    s = data.scwol
    out: dict = {"schema": 1, "command": args.action}
    code = EXIT_OK

    if args.action == "validate":
        report = validate_scwol(s)
        out["valid"] = report.valid
        out["violations"] = [{"axiom": v.axiom, "message": v.message, "witness": list(v.witness)}
                             for v in report.violations]
        out["dimension"] = s.dimension() if report.valid else None
        if data.cog is not None and report.valid:
            cr = check_cog(data.cog)
            out["cog"] = {"valid": cr.valid, "simple": cr.simple, "symbolic": cr.symbolic,
                          "violations": cr.violations}
            report_ok = cr.valid
        else:
            report_ok = True
        if not (report.valid and report_ok):
            code = EXIT_CHECK
        dot_source = s

    elif args.action == "pi1":
        if data.cog is not None:
            fg = universal_group_presentation(data.cog)
            out["universal_group"] = presentation_to_dict(fg, abelianization(fg))
            pres = cog_pi1_presentation(data.cog, data.base)
        else:
            pres = scwol_pi1_presentation(s, data.base)
        out["pi1"] = presentation_to_dict(pres, abelianization(pres))
        dot_source = s

    elif args.action == "develop":
        if data.cog is None or data.morphism is None:
            raise ConfigError("develop exige groups, psi e morphism")
        X, action = development(data.cog, data.morphism)
        out["scwol"] = scwol_to_dict(X)
        out["vertex_count"], out["edge_count"] = X.n_vertices, X.n_edges
        out["cells_by_dimension"] = {str(k): v for k, v in X.cells_by_dimension().items()}
        out["connected"] = X.is_connected()
        out["action"] = action_to_dict(action)
        dot_source = X

    else:
        if data.action is None:
            raise ConfigError("quotient exige action")
        cog, phi = quotient_cog(data.action)
        out.update(cog_to_dict(cog))
        out["command"] = args.action
        out["morphism"] = morphism_to_dict(phi)
        dot_source = cog.scwol

    _emit(out, args.output)
    if args.dot:
        save_text(scwol_to_dot(dot_source), args.dot)
    return code


# ─────────────────────────────────────────────────────────
# CLI
# ─────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tribranch", description="Cálculos exatos de Culler–Shalen para SL(n)")
    parser.add_argument("--quiet", action="store_true", help="Logging só a partir de WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Relatório completo de um job JSON")
    p.add_argument("config")
    p.add_argument("--output", metavar="REPORT")
    p.add_argument("--dot", metavar="PREFIX", help="Também exporta a bola de órbita no primeiro lugar")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("triangle", help="Identidade do traço de abac e certificados")
    for flag in ("--p", "--q", "--r"):
        p.add_argument(flag, type=int, required=True)
    for flag in ("--a", "--b", "--c"):
        p.add_argument(flag, type=int)
    p.add_argument("--output", metavar="REPORT")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("orbit", help="Bola de órbita de [L₀]")
    p.add_argument("config")
    p.add_argument("--depth", type=int)
    p.add_argument("--place")
    p.add_argument("--output", metavar="PREFIX")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("link", help="Vizinhos de [L₀] com corpo residual F_p")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--output", metavar="REPORT")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("scwol", help="Scwols e complexos de grupos")
    p.add_argument("action", choices=["validate", "pi1", "develop", "quotient"])
    p.add_argument("input")
    p.add_argument("--output", metavar="OUT")
    p.add_argument("--dot", metavar="DOT")
    p.set_defaults(func=cmd_scwol)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT

    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s | %(name)s | %(message)s",
    )
    try:
        return args.func(args)
    except ConfigError as e:
        logger.error(f"entrada inválida: {e}")
        for problem in e.problems:
            print(_warn(problem), file=sys.stderr)
        return EXIT_INPUT
    except (RelatorFailure, NotDevelopable, InvalidAction) as e:
        logger.error(f"verificação falhou: {e}")
        details = getattr(e, "violations", None) or getattr(getattr(e, "report", None), "violations", [])
        for line in details:
            print(_fail(line), file=sys.stderr)
        return EXIT_CHECK
    except (ValueError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
