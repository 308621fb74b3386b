"""
matrices.py
───────────
MatrixK — matrizes exatas sobre F(t).

Usadas como bases de reticulados (colunas) e como imagens de geradores.
Aceita formatos n×m para conjuntos geradores; determinante, inversa e
polinômio característico exigem matriz quadrada.
"""

from itertools import combinations
from typing import Callable, List, Sequence, Tuple

from errors import SingularBasis
from fields import FieldElement, FunctionField, INF, Place, valuation


class MatrixK:
    __slots__ = ("field", "rows", "n", "m")

    def __init__(self, field: FunctionField, rows: Sequence[Sequence]):
        self.field = field
        self.rows: Tuple[Tuple[FieldElement, ...], ...] = tuple(
            tuple(field(x) for x in row) for row in rows
        )
        self.n = len(self.rows)
        self.m = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.m for r in self.rows):
            raise ValueError("linhas com tamanhos diferentes")

    # ── Construtores ─────────────────────────────────────────

    @classmethod
    def identity(cls, field: FunctionField, n: int) -> "MatrixK":
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, field: FunctionField, entries: Sequence) -> "MatrixK":
        n = len(entries)
        return cls(field, [[entries[i] if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: FunctionField, cols: Sequence[Sequence]) -> "MatrixK":
        return cls(field, list(zip(*cols)))

    # ── Acesso ───────────────────────────────────────────────

    def __getitem__(self, ij: Tuple[int, int]) -> FieldElement:
        return self.rows[ij[0]][ij[1]]

    @property
    def is_square(self) -> bool:
        return self.n == self.m

    def columns(self) -> List[Tuple[FieldElement, ...]]:
        return [tuple(self.rows[i][j] for i in range(self.n)) for j in range(self.m)]

    def map(self, fn: Callable[[FieldElement], FieldElement]) -> "MatrixK":
        return MatrixK(self.field, [[fn(x) for x in row] for row in self.rows])

    def hstack(self, other: "MatrixK") -> "MatrixK":
        return MatrixK(self.field, [a + b for a, b in zip(self.rows, other.rows)])

    def transpose(self) -> "MatrixK":
        return MatrixK(self.field, list(zip(*self.rows)))

    # ── Aritmética ───────────────────────────────────────────

    def __matmul__(self, other: "MatrixK") -> "MatrixK":
        if self.m != other.n:
            raise ValueError(f"dimensões incompatíveis {self.n}×{self.m} · {other.n}×{other.m}")
        cols = other.columns()
        out = []
        for row in self.rows:
            line = []
            for col in cols:
                acc = self.field.zero
                for x, y in zip(row, col):
                    if x.num.c and y.num.c:
                        acc = acc + x * y
                line.append(acc)
            out.append(line)
        return MatrixK(self.field, out)

    def __mul__(self, scalar) -> "MatrixK":
        return self.map(lambda x: x * scalar)

    __rmul__ = __mul__

    def __add__(self, other: "MatrixK") -> "MatrixK":
        return MatrixK(self.field, [[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "MatrixK") -> "MatrixK":
        return MatrixK(self.field, [[x - y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __pow__(self, k: int) -> "MatrixK":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = MatrixK.identity(self.field, self.n)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> FieldElement:
        acc = self.field.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def det(self) -> FieldElement:
        """Eliminação gaussiana exata."""
        if not self.is_square:
            raise ValueError("determinante de matriz não quadrada")
        a = [list(r) for r in self.rows]
        n = self.n
        det = self.field.one
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                return self.field.zero
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            inv = p.inverse()
            for r in range(col + 1, n):
                if not a[r][col]:
                    continue
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def inverse(self) -> "MatrixK":
        """Gauss–Jordan; SingularBasis se det = 0."""
        if not self.is_square:
            raise ValueError("inversa de matriz não quadrada")
        n = self.n
        ff = self.field
        a = [list(r) + [ff.one if i == j else ff.zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                raise SingularBasis("matriz singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return MatrixK(ff, [row[n:] for row in a])

    def minor(self, idx: Sequence[int]) -> "MatrixK":
        return MatrixK(self.field, [[self.rows[i][j] for j in idx] for i in idx])

    def charpoly_coefficients(self) -> List[FieldElement]:
        """
        Coeficientes e_1..e_n de det(xI − g) = x^n − e_1 x^(n−1) + … ± e_n,
        onde e_k é a soma dos menores principais k×k. Vale em qualquer característica.
        """
        n = self.n
        return [
            sum((self.minor(idx).det() for idx in combinations(range(n), k)), self.field.zero)
            for k in range(1, n + 1)
        ]

    # ── Valorações ───────────────────────────────────────────

    def min_valuation(self, place: Place):
        return min((valuation(x, place) for row in self.rows for x in row), default=INF)

    def is_integral(self, place: Place) -> bool:
        return self.min_valuation(place) >= 0

    def is_identity(self) -> bool:
        return all(
            (x == self.field.one) if i == j else x.is_zero()
            for i, row in enumerate(self.rows) for j, x in enumerate(row)
        )

    # ── Igualdade ────────────────────────────────────────────

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixK) and self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_text(self) -> List[List[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def __repr__(self) -> str:
        return f"MatrixK({self.to_text()})"
