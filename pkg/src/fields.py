"""
fields.py
─────────
Aritmética exata da torre de coeficientes Q → Q(α) → F(t).

NumberField / NFElement — Q[x]/(m), com uma única extensão algébrica.
PrimeField / FpElement  — F_p (modo de corpo residual finito).
Poly                    — polinômios densos em t sobre qualquer um dos dois.
FunctionField / FieldElement — o corpo F(t), frações normalizadas.
Place / LaurentSeries   — lugares da reta projetiva e expansões truncadas.

Todos os valores são imutáveis.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import isprime
from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.domains import GF, QQ
from sympy.polys.euclidtools import dup_gcdex

from errors import (
    DivisionByZero, NonInvertible, NotPrime, UnsupportedPlace,
    UnsupportedTriple, ZeroInput,
)

logger = logging.getLogger(__name__)

# ── Configurações ─────────────────────────────────────────
#
# INF: valoração de 0, acima de qualquer inteiro.
# COSINE_TOLERANCE: conferência numérica de cos(π/k) na construção da tabela.
#
INF = math.inf
COSINE_TOLERANCE = 1e-9

Valuation = Union[int, float]


def _qq(value):
    """Converte int / Fraction / str / racional do sympy para QQ."""
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        f = Fraction(value.strip())
        return QQ(f.numerator, f.denominator)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        num, den = value.numerator, value.denominator
        num = num() if callable(num) else num
        den = den() if callable(den) else den
        return QQ(int(num), int(den))
    raise TypeError(f"coeficiente racional inválido: {value!r}")


def format_rational(q) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


# ─────────────────────────────────────────────────────────
# Corpo de números Q(α)
# ─────────────────────────────────────────────────────────

class NumberField:
    """
    Q[x]/(m) com m mônico de grau d ≥ 1, coeficientes em ordem crescente.

    A irredutibilidade de m não é verificada: uma inversão que encontra um
    fator não trivial levanta NonInvertible com o fator.
    `embedding` é um intervalo real (lo, hi) que contém α; só serve para
    conferências numéricas.
    """

    characteristic = 0

    def __init__(self, minpoly: Sequence, embedding: Optional[Tuple[float, float]] = None,
                 name: str = "a"):
        coeffs = _strip(_qq(c) for c in minpoly)
        if len(coeffs) < 2:
            raise ValueError("polinômio mínimo precisa ter grau ≥ 1")
        if coeffs[-1] != QQ.one:
            raise ValueError("polinômio mínimo precisa ser mônico")
        self.minpoly: Tuple = coeffs
        self.d = len(coeffs) - 1
        self.name = name
        if embedding is None and self.d == 1:
            root = float(-coeffs[0])
            embedding = (root, root)
        self.embedding = embedding
        self._mod = list(reversed(coeffs))          # dup: grau decrescente
        self.zero = NFElement(self, ())
        self.one = NFElement(self, (QQ.one,))

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls([0, 1])

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    @property
    def gen(self) -> "NFElement":
        if self.d == 1:
            return NFElement(self, _strip((-self.minpoly[0],)))
        return NFElement(self, (QQ.zero, QQ.one))

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field != self:
                raise TypeError("elemento de outro corpo de números")
            return value
        if isinstance(value, (list, tuple)):
            return self.from_coefficients(value)
        return NFElement(self, _strip((_qq(value),)))

    def from_coefficients(self, coeffs: Sequence) -> "NFElement":
        c = [_qq(x) for x in coeffs]
        if len(c) > self.d:
            c = list(reversed(dup_rem(list(reversed(c)), self._mod, QQ)))
        return NFElement(self, _strip(c))

    def embed(self, x: "NFElement") -> float:
        """Valor real aproximado de x pelo ponto médio do intervalo de α."""
        if self.embedding is None:
            raise ValueError("corpo sem mergulho real declarado")
        alpha = (self.embedding[0] + self.embedding[1]) / 2
        return sum(float(c) * alpha ** i for i, c in enumerate(x.c))

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(("nf", self.minpoly))

    def __repr__(self) -> str:
        if self.d == 1:
            return "NumberField(Q)"
        return f"NumberField(minpoly={[format_rational(c) for c in self.minpoly]})"


class NFElement:
    """Elemento reduzido de Q(α): coeficientes crescentes, grau < d."""

    __slots__ = ("field", "c")

    def __init__(self, field: NumberField, c: tuple):
        self.field = field
        self.c = c

    def _coerce(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise TypeError("mistura de corpos de números diferentes")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.c), len(other.c))
        a = self.c + (QQ.zero,) * (n - len(self.c))
        b = other.c + (QQ.zero,) * (n - len(other.c))
        return NFElement(self.field, _strip(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-x for x in self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.c or not other.c:
            return self.field.zero
        if self.field.d == 1:
            return NFElement(self.field, (self.c[0] * other.c[0],))
        prod = dup_mul(list(reversed(self.c)), list(reversed(other.c)), QQ)
        rem = dup_rem(prod, self.field._mod, QQ)
        return NFElement(self.field, _strip(reversed(rem)))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self.c:
            raise DivisionByZero("inversão de zero no corpo de números")
        if self.field.d == 1:
            return NFElement(self.field, (QQ.one / self.c[0],))
        s, _, h = dup_gcdex(list(reversed(self.c)), self.field._mod, QQ)
        if h != [QQ.one]:
            factor = tuple(reversed(h))
            logger.warning(f"⚠️ polinômio mínimo redutível: fator {[format_rational(x) for x in factor]}")
            raise NonInvertible("polinômio mínimo redutível", factor=factor)
        return NFElement(self.field, _strip(reversed(dup_rem(s, self.field._mod, QQ))))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        return isinstance(other, NFElement) and other.field == self.field and other.c == self.c

    def __hash__(self) -> int:
        return hash(self.c)

    def is_rational(self) -> bool:
        return len(self.c) <= 1

    def rational(self):
        """Valor racional (QQ); exige is_rational()."""
        if len(self.c) > 1:
            raise ValueError("elemento não racional")
        return self.c[0] if self.c else QQ.zero

    def coefficients(self) -> List:
        return list(self.c) + [QQ.zero] * (self.field.d - len(self.c))

    def __str__(self) -> str:
        if self.is_rational():
            return format_rational(self.rational())
        return "[" + ", ".join(format_rational(x) for x in self.coefficients()) + "]"

    __repr__ = __str__


# ─────────────────────────────────────────────────────────
# Corpo primo F_p
# ─────────────────────────────────────────────────────────

class PrimeField:
    """F_p sobre o domínio GF(p) do sympy (representantes 0..p-1)."""

    def __init__(self, p: int):
        if not isprime(p):
            raise NotPrime(f"{p} não é primo")
        self.p = p
        self.characteristic = p
        self.domain = GF(p, symmetric=False)
        self.zero = FpElement(self, self.domain.zero)
        self.one = FpElement(self, self.domain.one)

    def __call__(self, value) -> "FpElement":
        K = self.domain
        if isinstance(value, FpElement):
            if value.field != self:
                raise TypeError("elemento de outro corpo primo")
            return value
        if isinstance(value, int):
            return FpElement(self, K.convert(value % self.p))
        q = _qq(value)
        num, den = int(q.numerator), int(q.denominator)
        if den % self.p == 0:
            raise DivisionByZero(f"denominador {den} se anula em F_{self.p}")
        return FpElement(self, K.quo(K.convert(num % self.p), K.convert(den % self.p)))

    def elements(self) -> List["FpElement"]:
        return [self(i) for i in range(self.p)]

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("fp", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class FpElement:
    __slots__ = ("field", "v")

    def __init__(self, field: PrimeField, v):
        self.field = field
        self.v = v

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field != self.field:
                raise TypeError("mistura de corpos primos diferentes")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __int__(self) -> int:
        return int(self.field.domain.to_int(self.v))

    def __bool__(self) -> bool:
        return not self.field.domain.is_zero(self.v)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.field, self.field.domain.add(self.v, other.v))

    __radd__ = __add__

    def __neg__(self):
        return FpElement(self.field, self.field.domain.neg(self.v))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.field, self.field.domain.sub(self.v, other.v))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.field, self.field.domain.mul(self.v, other.v))

    __rmul__ = __mul__

    def inverse(self) -> "FpElement":
        if not self:
            raise DivisionByZero(f"inversão de zero em F_{self.field.p}")
        K = self.field.domain
        return FpElement(self.field, K.quo(K.one, self.v))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self.field(pow(int(self), k, self.field.p))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return int(self) == other % self.field.p
        return isinstance(other, FpElement) and other.field == self.field and int(other) == int(self)

    def __hash__(self) -> int:
        return hash(int(self))

    def is_rational(self) -> bool:
        return True

    def __str__(self) -> str:
        return str(int(self))

    __repr__ = __str__


CoefficientField = Union[NumberField, PrimeField]


# ─────────────────────────────────────────────────────────
# Polinômios densos em t
# ─────────────────────────────────────────────────────────

class Poly:
    """Polinômio em t com coeficientes crescentes; `c == ()` é o zero."""

    __slots__ = ("K", "c")

    def __init__(self, K: CoefficientField, coeffs: Iterable = ()):
        self.K = K
        self.c = _strip(coeffs)

    @classmethod
    def monomial(cls, K: CoefficientField, k: int, coeff=None) -> "Poly":
        coeff = K.one if coeff is None else coeff
        return cls(K, (K.zero,) * k + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1]

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return len(self.c) == 1 and self.c[0] == self.K.one

    def ord0(self) -> Valuation:
        """Ordem de anulação em t = 0."""
        for i, x in enumerate(self.c):
            if x:
                return i
        return INF

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.c), len(other.c))
        z = self.K.zero
        return Poly(self.K, (
            (self.c[i] if i < len(self.c) else z) + (other.c[i] if i < len(other.c) else z)
            for i in range(n)
        ))

    def __neg__(self) -> "Poly":
        return Poly(self.K, (-x for x in self.c))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.c or not other.c:
            return Poly(self.K)
        out = [self.K.zero] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if not x:
                continue
            for j, y in enumerate(other.c):
                out[i + j] = out[i + j] + x * y
        return Poly(self.K, out)

    def scale(self, k) -> "Poly":
        return Poly(self.K, (x * k for x in self.c))

    def shift_exponent(self, k: int) -> "Poly":
        """Multiplica por t^k (k ≥ 0)."""
        if not self.c:
            return self
        return Poly(self.K, (self.K.zero,) * k + self.c)

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if not other.c:
            raise DivisionByZero("divisão por polinômio nulo")
        rem = list(self.c)
        q = [self.K.zero] * max(len(rem) - len(other.c) + 1, 0)
        inv_lc = other.lc.inverse()
        dg = other.degree
        for k in range(len(rem) - 1, dg - 1, -1):
            coef = rem[k] * inv_lc
            if not coef:
                continue
            q[k - dg] = coef
            for j, y in enumerate(other.c):
                rem[k - dg + j] = rem[k - dg + j] - coef * y
        return Poly(self.K, q), Poly(self.K, rem[:dg] if dg > 0 else [])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if not self.c or self.lc == self.K.one:
            return self
        return self.scale(self.lc.inverse())

    @staticmethod
    def gcd(a: "Poly", b: "Poly") -> "Poly":
        while b.c:
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        acc = self.K.zero
        for coeff in reversed(self.c):
            acc = acc * x + coeff
        return acc

    def taylor_shift(self, a) -> "Poly":
        """f(t + a)."""
        if not a or len(self.c) < 2:
            return self
        lin = Poly(self.K, (a, self.K.one))
        acc = Poly(self.K)
        for coeff in reversed(self.c):
            acc = acc * lin + Poly(self.K, (coeff,))
        return acc

    def reversed(self) -> "Poly":
        """t^deg · f(1/t)."""
        return Poly(self.K, reversed(self.c))

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.K == other.K and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return f"Poly({list(self.c)})"


# ─────────────────────────────────────────────────────────
# Lugares
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Place:
    kind: str                   # zero | infinity | finite
    a: object = None            # ponto t = a quando finite

    @classmethod
    def zero(cls) -> "Place":
        return cls("zero")

    @classmethod
    def infinity(cls) -> "Place":
        return cls("infinity")

    @classmethod
    def finite(cls, a) -> "Place":
        if not a:
            return cls("zero")
        return cls("finite", a)

    def __str__(self) -> str:
        if self.kind == "finite":
            return f"finite:{self.a}"
        return self.kind


@dataclass(frozen=True)
class LaurentSeries:
    """Expansão truncada Σ coeffs[k]·ϖ^(valuation + k)."""
    valuation: int
    coeffs: Tuple


# ─────────────────────────────────────────────────────────
# Corpo de funções F(t)
# ─────────────────────────────────────────────────────────

class FunctionField:
    """F(t) sobre um corpo de coeficientes (NumberField ou PrimeField)."""

    def __init__(self, K: CoefficientField, var: str = "t"):
        self.K = K
        self.var = var
        self._one_poly = Poly(K, (K.one,))
        self.zero = FieldElement(self, Poly(K), self._one_poly)
        self.one = FieldElement(self, self._one_poly, self._one_poly)
        self.t = FieldElement(self, Poly.monomial(K, 1), self._one_poly)

    def __eq__(self, other) -> bool:
        return isinstance(other, FunctionField) and self.K == other.K and self.var == other.var

    def __hash__(self) -> int:
        return hash((self.K, self.var))

    def __repr__(self) -> str:
        return f"FunctionField({self.K!r}, var={self.var!r})"

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise TypeError("elemento de outro corpo de funções")
            return value
        if isinstance(value, Poly):
            return FieldElement(self, value, self._one_poly)
        return FieldElement(self, Poly(self.K, (self.K(value),)), self._one_poly)

    def fraction(self, num: Poly, den: Poly) -> "FieldElement":
        """num/den normalizado: mdc removido, denominador mônico."""
        if den.is_zero():
            raise DivisionByZero("denominador nulo")
        if num.is_zero():
            return self.zero
        g = Poly.gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lc
        if lc != self.K.one:
            inv = lc.inverse()
            num, den = num.scale(inv), den.scale(inv)
        return FieldElement(self, num, den)

    def monomial(self, k: int, coeff=None) -> "FieldElement":
        """coeff · t^k, k ∈ Z."""
        coeff = self.K.one if coeff is None else self.K(coeff)
        if k >= 0:
            return FieldElement(self, Poly.monomial(self.K, k, coeff), self._one_poly)
        return FieldElement(self, Poly(self.K, (coeff,)), Poly.monomial(self.K, -k))

    def uniformizer(self, place: Place) -> "FieldElement":
        if place.kind == "zero":
            return self.t
        if place.kind == "infinity":
            return self.t.inverse()
        return self.t - self(place.a)

    def from_laurent(self, series: LaurentSeries, place: Place) -> "FieldElement":
        """Ressoma a série truncada como elemento de F(t) no lugar dado."""
        acc = self.zero
        for k, coeff in enumerate(series.coeffs):
            if coeff:
                acc = acc + self.monomial(series.valuation + k, coeff)
        return from_zero(acc, place)


class FieldElement:
    """Elemento de F(t) em forma canônica num/den (mdc 1, den mônico)."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: FunctionField, num: Poly, den: Poly):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError("mistura de corpos de funções diferentes")
            return other
        if isinstance(other, (int, Fraction, NFElement, FpElement)):
            return self.field(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant(self):
        if not self.is_constant():
            raise ValueError("elemento não constante")
        return self.num.c[0] if self.num.c else self.field.K.zero

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.c:
            return other
        if not other.num.c:
            return self
        if self.den == other.den:
            return self.field.fraction(self.num + other.num, self.den)
        return self.field.fraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.c or not other.num.c:
            return self.field.zero
        return self.field.fraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.num.c:
            raise DivisionByZero("inversão de zero em F(t)")
        return self.field.fraction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, NFElement, FpElement)):
            other = self.field(other)
        return (isinstance(other, FieldElement) and other.field == self.field
                and other.num.c == self.num.c and other.den.c == self.den.c)

    def __hash__(self) -> int:
        return hash((self.num.c, self.den.c))

    def __str__(self) -> str:
        from polytext import format_element
        return format_element(self)

    __repr__ = __str__


# ─────────────────────────────────────────────────────────
# Valorações e expansões
# ─────────────────────────────────────────────────────────

def valuation(x: FieldElement, place: Place) -> Valuation:
    """ν_place(x); ν(0) = INF."""
    if x.is_zero():
        return INF
    if place.kind == "zero":
        return x.num.ord0() - x.den.ord0()
    if place.kind == "infinity":
        return x.den.degree - x.num.degree
    a = x.field.K(place.a)
    return x.num.taylor_shift(a).ord0() - x.den.taylor_shift(a).ord0()


def to_zero(x: FieldElement, place: Place) -> FieldElement:
    """Automorfismo de F(t) que leva o lugar dado para t = 0."""
    ff = x.field
    if place.kind == "zero" or x.is_zero():
        return x
    if place.kind == "finite":
        a = ff.K(place.a)
        return ff.fraction(x.num.taylor_shift(a), x.den.taylor_shift(a))
    # t ↦ 1/t: f(1/t) = t^(-deg f) · rev(f)
    shift = x.den.degree - x.num.degree
    num, den = x.num.reversed(), x.den.reversed()
    if shift >= 0:
        num = num.shift_exponent(shift)
    else:
        den = den.shift_exponent(-shift)
    return ff.fraction(num, den)


def from_zero(x: FieldElement, place: Place) -> FieldElement:
    """Inverso de to_zero."""
    if place.kind == "finite":
        ff = x.field
        if x.is_zero():
            return x
        a = -ff.K(place.a)
        return ff.fraction(x.num.taylor_shift(a), x.den.taylor_shift(a))
    return to_zero(x, place)


def series_expand(x: FieldElement, place: Place, n_terms: int) -> LaurentSeries:
    """Expansão de Laurent de x no lugar, com n_terms coeficientes exatos."""
    if x.is_zero():
        raise ZeroInput("expansão de zero")
    if place.kind == "infinity":
        raise UnsupportedPlace("expansão no infinito: substitua t → 1/t antes")
    y = to_zero(x, place)
    a, b = y.num.ord0(), y.den.ord0()
    u, w = y.num.c[a:], y.den.c[b:]
    K = x.field.K
    inv_w0 = w[0].inverse()
    coeffs: List = []
    for k in range(n_terms):
        acc = u[k] if k < len(u) else K.zero
        for j in range(1, min(k, len(w) - 1) + 1):
            acc = acc - w[j] * coeffs[k - j]
        coeffs.append(acc * inv_w0)
    return LaurentSeries(valuation=a - b, coeffs=tuple(coeffs))


def truncate_below(x: FieldElement, place: Place, bound: int) -> FieldElement:
    """Parte da expansão de x com expoentes < bound (zero se ν(x) ≥ bound)."""
    if x.is_zero():
        return x
    v = valuation(x, place)
    if v >= bound:
        return x.field.zero
    if place.kind == "infinity":
        y = to_zero(x, place)
        series = series_expand(y, Place.zero(), bound - v)
        return to_zero(x.field.from_laurent(series, Place.zero()), place)
    return x.field.from_laurent(series_expand(x, place, bound - v), place)


# ─────────────────────────────────────────────────────────
# Tabela de cossenos cos(π/k)
# ─────────────────────────────────────────────────────────
#
# k → (polinômio mínimo crescente | None, coeficientes de cos(π/k), intervalo de α)
#
_COSINE_TABLE = {
    3: (None, (Fraction(1, 2),), None),
    4: ((-2, 0, 1), (0, Fraction(1, 2)), (1.4142135623730, 1.4142135623731)),
    5: ((-5, 0, 1), (Fraction(1, 4), Fraction(1, 4)), (2.2360679774997, 2.2360679774998)),
    6: ((-3, 0, 1), (0, Fraction(1, 2)), (1.7320508075688, 1.7320508075689)),
}


def builtin_cosine_field(p: int, q: int, r: int) -> Tuple[NumberField, Tuple[NFElement, NFElement, NFElement]]:
    """Menor corpo da tabela que contém cos(π/p), cos(π/q), cos(π/r)."""
    for k in (p, q, r):
        if k not in _COSINE_TABLE:
            raise UnsupportedTriple(f"cos(π/{k}) fora da tabela embutida (k ∈ 3..6)")
    fields = {(_COSINE_TABLE[k][0], _COSINE_TABLE[k][2]) for k in (p, q, r) if _COSINE_TABLE[k][0]}
    if len(fields) > 1:
        raise UnsupportedTriple(
            f"({p},{q},{r}) exige mais de uma extensão quadrática; forneça um NumberField próprio"
        )
    if fields:
        minpoly, interval = fields.pop()
        field = NumberField(minpoly, embedding=interval)
    else:
        field = NumberField.rationals()
    values = tuple(field.from_coefficients(_COSINE_TABLE[k][1]) for k in (p, q, r))
    for k, v in zip((p, q, r), values):
        check_cosine(field, v, k)
    logger.info(f"✅ corpo de cossenos para ({p},{q},{r}): {field!r}")
    return field, values


def check_cosine(field: NumberField, value: NFElement, k: int) -> None:
    approx = field.embed(value)
    if abs(approx - math.cos(math.pi / k)) >= COSINE_TOLERANCE:
        raise UnsupportedTriple(f"representante de cos(π/{k}) não confere numericamente ({approx})")
