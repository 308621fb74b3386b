"""
test.py — Entrypoint principal da suite de testes Tribranch
===========================================================
Delega toda a lógica para as suítes em test_suite/.

Uso:
    python test.py                          # menu interativo
    python test.py --all                    # todas as suítes
    python test.py --module complexes       # suíte específica
    python test.py --module fields --module lattices
"""

import sys
import argparse
from pathlib import Path

# Garantir que src/ está no path (necessário ao rodar como script direto)
sys.path.insert(0, str(Path(__file__).parent))

from test_suite.conftest import _title, _warn, GREEN, RED, BOLD, RESET
from test_suite.test_fields     import test_fields
from test_suite.test_lattices   import test_lattices
from test_suite.test_building   import test_building
from test_suite.test_characters import test_characters
from test_suite.test_triangle   import test_triangle
from test_suite.test_scwols     import test_scwols
from test_suite.test_complexes  import test_complexes
from test_suite.test_jobs       import test_jobs
from test_suite.test_app        import test_app

# ordem de baixo para cima: corpos antes de reticulados antes do prédio
SUITES = {
    "fields":     test_fields,
    "lattices":   test_lattices,
    "building":   test_building,
    "characters": test_characters,
    "triangle":   test_triangle,
    "scwols":     test_scwols,
    "complexes":  test_complexes,
    "jobs":       test_jobs,
    "app":        test_app,
}


# ─────────────────────────────────────────────────────────
# Agregador
# ─────────────────────────────────────────────────────────

def run_suites(names) -> bool:
    """Executa as suítes pedidas e retorna True se tudo passou."""
    totals = {"passed": 0, "total": 0}
    for name in names:
        p, t = SUITES[name]()
        totals["passed"] += p
        totals["total"]  += t

    color = GREEN if totals["passed"] == totals["total"] else RED
    print(f"\n{color}{BOLD}{'═'*60}")
    print(f"  TOTAL GERAL: {totals['passed']}/{totals['total']} testes passaram")
    print(f"{'═'*60}{RESET}\n")
    return totals["passed"] == totals["total"]


def run_all_tests() -> bool:
    return run_suites(list(SUITES))


# ─────────────────────────────────────────────────────────
# Menu interativo
# ─────────────────────────────────────────────────────────

def interactive_menu() -> None:
    names = list(SUITES)
    while True:
        print(_title("Tribranch — Suite de Testes"))
        for k, name in enumerate(names, 1):
            print(f"  {k}. Testar {name}")
        print(f"  {len(names) + 1}. Rodar TODOS os testes")
        print("  0. Sair")
        print()

        choice = input("Escolha: ").strip()

        if choice == "0":
            break
        elif choice.isdigit() and 1 <= int(choice) <= len(names):
            SUITES[names[int(choice) - 1]]()
        elif choice == str(len(names) + 1):
            run_all_tests()
        else:
            print(_warn("Opção inválida."))

        input("\nPressione ENTER para continuar...")


# ─────────────────────────────────────────────────────────
# CLI
# ─────────────────────────────────────────────────────────

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Tribranch — suite de testes")
    parser.add_argument("--all",    action="store_true", help="Rodar todas as suítes")
    parser.add_argument("--module", choices=list(SUITES), action="append",
                        help="Suíte específica (pode repetir)")
    args = parser.parse_args()

    if args.all:
        sys.exit(0 if run_all_tests() else 1)
    elif args.module:
        sys.exit(0 if run_suites(args.module) else 1)
    else:
        interactive_menu()
