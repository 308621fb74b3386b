"""
errors.py
─────────
Exceções do Tribranch.

Todas herdam de TribranchError (subclasse de ValueError), então quem já trata
ValueError para entrada inválida continua funcionando. Falhas aritméticas
também herdam de ArithmeticError / ZeroDivisionError.
"""

from typing import Any, List, Optional


class TribranchError(ValueError):
    """Raiz de todas as exceções do projeto."""


# ── Corpos e valorações ───────────────────────────────────

class ZeroInput(TribranchError):
    pass


class UnsupportedPlace(TribranchError):
    pass


class DivisionByZero(TribranchError, ZeroDivisionError):
    pass


class NonInvertible(TribranchError, ArithmeticError):
    """Inversão falhou: o polinômio mínimo é redutível. `factor` é o fator achado."""

    def __init__(self, message: str, factor: Any = None):
        super().__init__(message)
        self.factor = factor


class UnsupportedTriple(TribranchError):
    pass


# ── Reticulados ───────────────────────────────────────────

class SingularBasis(TribranchError):
    pass


class PlaceMismatch(TribranchError):
    pass


class TooManyVertices(TribranchError):
    pass


# ── Grupos e ações ────────────────────────────────────────

class IndexOutOfRange(TribranchError, IndexError):
    pass


class NotUnimodular(TribranchError):
    pass


class UnsupportedDimension(TribranchError):
    pass


class NotPrime(TribranchError):
    pass


class RelatorFailure(TribranchError):
    """Um relator não avaliou para a identidade."""

    def __init__(self, message: str, relator: Any = None, matrix: Any = None):
        super().__init__(message)
        self.relator = relator
        self.matrix = matrix


class SizeOverflow(TribranchError):
    pass


class CoprimalityViolation(TribranchError):
    pass


# ── Scwols e complexos de grupos ──────────────────────────

class InconsistentIncidence(TribranchError):
    pass


class Disconnected(TribranchError):
    pass


class NotDevelopable(TribranchError):
    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class InvalidAction(TribranchError):
    def __init__(self, message: str, violations: Optional[List[str]] = None):
        super().__init__(message)
        self.violations = list(violations or [])


# ── Configuração ──────────────────────────────────────────

class ConfigError(TribranchError):
    """Job inválido. `problems` lista todos os erros encontrados."""

    def __init__(self, message: str, path: Optional[str] = None, problems: Optional[List[str]] = None):
        super().__init__(message)
        self.path = path
        self.problems = list(problems or [])
