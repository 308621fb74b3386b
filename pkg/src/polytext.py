"""
polytext.py
───────────
Formato textual de elementos de F(t), usado em jobs e relatórios.

  "3/2*t^2 - t + 1"     polinômio
  "1/(1-t)"             função racional
  "[0, 1/2]*t + 1"      coeficiente em Q(α) na base de potências
  "a/2"                 o gerador α escrito diretamente

A leitura passa pelo parser do sympy; a escrita é determinística.
"""

import logging
import re
from typing import Dict, List

from sympy import Poly as SymPoly, Symbol, fraction, together
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from errors import ConfigError
from fields import (
    FieldElement, FunctionField, NumberField, Place, Poly, PrimeField, format_rational,
)

logger = logging.getLogger(__name__)

_TRANSFORMS = standard_transformations + (convert_xor,)
_BRACKET = re.compile(r"\[([^\[\]]*)\]")


def _expand_brackets(text: str, gen: str) -> str:
    """Troca "[c0, c1, …]" por "(c0 + c1*gen + …)"."""
    def repl(m: re.Match) -> str:
        parts = [p.strip() for p in m.group(1).split(",") if p.strip()]
        terms = [f"({c})*{gen}**{i}" for i, c in enumerate(parts)]
        return "(" + (" + ".join(terms) or "0") + ")"
    return _BRACKET.sub(repl, text)


def _coefficient(ff: FunctionField, expr, gen: Symbol):
    K = ff.K
    if isinstance(K, NumberField) and K.d > 1:
        poly = SymPoly(expr, gen)
        coeffs = list(reversed(poly.all_coeffs()))
        return K.from_coefficients(coeffs)
    if expr.free_symbols:
        raise ConfigError(f"coeficiente não racional: {expr}")
    return K(expr)


def parse_element(text: str, ff: FunctionField) -> FieldElement:
    """Lê um elemento de F(t) no formato textual."""
    K = ff.K
    gen_name = K.name if isinstance(K, NumberField) else "a"
    var, gen = Symbol(ff.var), Symbol(gen_name)
    source = _expand_brackets(str(text), gen_name)
    try:
        expr = parse_expr(source, local_dict={ff.var: var, gen_name: gen},
                          transformations=_TRANSFORMS)
    except Exception as e:
        raise ConfigError(f"expressão inválida {text!r}: {e}") from e

    extra = expr.free_symbols - {var, gen}
    if extra:
        raise ConfigError(f"símbolos desconhecidos em {text!r}: {sorted(map(str, extra))}")
    if gen in expr.free_symbols and not (isinstance(K, NumberField) and K.d > 1):
        raise ConfigError(f"{text!r} usa o gerador {gen_name}, mas o corpo não tem extensão")

    num, den = fraction(together(expr))
    parts = []
    for side in (num, den):
        sp = SymPoly(side, var)
        coeffs = [_coefficient(ff, c, gen) for c in reversed(sp.all_coeffs())]
        parts.append(ff(0) if not coeffs else _assemble(ff, coeffs))
    if parts[1].is_zero():
        raise ConfigError(f"denominador nulo em {text!r}")
    return parts[0] / parts[1]


def _assemble(ff: FunctionField, coeffs: List) -> FieldElement:
    return ff(Poly(ff.K, coeffs))


def parse_place(text: str, ff: FunctionField) -> Place:
    """"zero" | "infinity" | "finite:<coeficiente>"."""
    text = text.strip()
    if text == "zero":
        return Place.zero()
    if text == "infinity":
        return Place.infinity()
    if text.startswith("finite:"):
        value = parse_element(text.split(":", 1)[1], ff)
        if not value.is_constant():
            raise ConfigError(f"lugar finito precisa de constante: {text!r}")
        return Place.finite(value.constant())
    raise ConfigError(f"lugar desconhecido: {text!r}")


# ── Escrita ───────────────────────────────────────────────

def _term(coeff, var: str, k: int, first: bool) -> str:
    """Um termo coeff·var^k com sinal, para escrita em ordem decrescente."""
    negative = False
    if coeff.is_rational() and not isinstance(coeff.field, PrimeField):
        q = coeff.rational()
        negative = q < 0
        body = format_rational(-q if negative else q)
    else:
        body = str(coeff)
    if k == 0:
        mono = body
    else:
        power = var if k == 1 else f"{var}^{k}"
        mono = power if body == "1" else f"{body}*{power}"
    if first:
        return f"-{mono}" if negative else mono
    return f" - {mono}" if negative else f" + {mono}"


def _format_terms(terms: Dict[int, object], var: str) -> str:
    if not terms:
        return "0"
    out = []
    for i, k in enumerate(sorted(terms, reverse=True)):
        out.append(_term(terms[k], var, k, i == 0))
    return "".join(out)


def format_element(x: FieldElement) -> str:
    """Texto determinístico; denominador monomial vira polinômio de Laurent."""
    var = x.field.var
    num = {k: c for k, c in enumerate(x.num.c) if c}
    if x.den.is_one():
        return _format_terms(num, var)
    if len([c for c in x.den.c if c]) == 1:
        shift = x.den.degree
        return _format_terms({k - shift: c for k, c in num.items()}, var)
    top = _format_terms(num, var)
    bottom = _format_terms({k: c for k, c in enumerate(x.den.c) if c}, var)
    if len(num) > 1:
        top = f"({top})"
    return f"{top}/({bottom})"


def format_place(place: Place) -> str:
    return str(place)
