"""
groups.py
─────────
Grupos do lado combinatório:

  Word               — palavra livremente reduzida em índices com sinal ±(i+1)
  GroupPresentation  — geradores nomeados + relatores
  GroupHom           — homomorfismo dado por palavras-imagem dos geradores
  FiniteGroupTable   — grupo finito por tabela de multiplicação (sympy.combinatorics)
  abelianization     — invariantes de H₁ via forma normal de Smith inteira
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import CyclicGroup, SymmetricGroup
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from errors import IndexOutOfRange

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────
# Palavras
# ─────────────────────────────────────────────────────────

def _free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for x in letters:
        if x == 0:
            raise IndexOutOfRange("índice 0 não é letra válida")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    """Palavra livremente reduzida; letra ±(i+1) é o gerador i ou seu inverso."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self.letters = _free_reduce(letters)

    @classmethod
    def gen(cls, i: int, power: int = 1) -> "Word":
        x = i + 1 if power > 0 else -(i + 1)
        return cls([x] * abs(power))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def inverse(self) -> "Word":
        return Word(-x for x in reversed(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and other.letters == self.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({list(self.letters)})"

    def rotations(self) -> List["Word"]:
        n = len(self.letters)
        return [Word(self.letters[k:] + self.letters[:k]) for k in range(max(n, 1))]

    def format(self, names: Sequence[str]) -> str:
        """Texto com potências agrupadas: "x^2y^-1"; "1" para a palavra vazia."""
        if not self.letters:
            return "1"
        sep = "" if all(len(n) == 1 for n in names) else "*"
        out: List[str] = []
        i = 0
        while i < len(self.letters):
            x = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == x:
                j += 1
            power = (j - i) * (1 if x > 0 else -1)
            name = names[abs(x) - 1]
            out.append(name if power == 1 else f"{name}^{power}")
            i = j
        return sep.join(out)


def letter_order(x: int) -> Tuple[int, int]:
    """Ordem das letras: g1, g1⁻¹, g2, g2⁻¹, …"""
    return (abs(x), 0 if x > 0 else 1)


def enumerate_words(n_gens: int, max_len: int, include_empty: bool = False) -> Iterator[Word]:
    """Palavras reduzidas por comprimento, depois lexicográficas (inverso após o gerador)."""
    letters = sorted([i for g in range(1, n_gens + 1) for i in (g, -g)], key=letter_order)
    if include_empty:
        yield Word()
    layer: List[Tuple[int, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in letters:
                if w and w[-1] == -x:
                    continue
                nw = w + (x,)
                nxt.append(nw)
                yield Word(nw)
        layer = nxt


# ─────────────────────────────────────────────────────────
# Apresentações e homomorfismos
# ─────────────────────────────────────────────────────────

_TOKEN = re.compile(r"\s*(\^\s*\(?\s*-?\d+\s*\)?|\*|\(|\)|\[|\]|,|[A-Za-z_][A-Za-z_0-9]*|1)")


@dataclass(frozen=True)
class GroupPresentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(Word(r) for r in self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"nomes de geradores repetidos: {self.generators}")
        for r in self.relators:
            self.check_word(r)

    @property
    def n_gens(self) -> int:
        return len(self.generators)

    def gen(self, name: str) -> Word:
        return Word.gen(self.generators.index(name))

    def check_word(self, w: Word) -> None:
        for x in w:
            if abs(x) > self.n_gens:
                raise IndexOutOfRange(f"letra {x} fora de {self.n_gens} geradores")

    def format(self, w: Word) -> str:
        return w.format(self.generators)

    def word(self, text: str) -> Word:
        """
        Lê "abac", "x^2*y^-1", "[x,h]" (comutador x h x⁻¹ h⁻¹), "(xy)^3" ou "1".
        Nomes com mais de uma letra precisam de separadores.
        """
        tokens = _tokenize(text, self.generators)
        w, rest = self._parse_product(tokens)
        if rest:
            raise ValueError(f"sobra na palavra {text!r}: {rest}")
        return w

    def _parse_product(self, tokens: List[str]) -> Tuple[Word, List[str]]:
        w = Word()
        while tokens and tokens[0] not in (")", "]", ","):
            tok = tokens.pop(0)
            if tok == "*":
                continue
            if tok == "(":
                inner, tokens = self._parse_product(tokens)
                if not tokens or tokens.pop(0) != ")":
                    raise ValueError("parêntese sem fechamento")
                atom = inner
            elif tok == "[":
                left, tokens = self._parse_product(tokens)
                if not tokens or tokens.pop(0) != ",":
                    raise ValueError("comutador sem vírgula")
                right, tokens = self._parse_product(tokens)
                if not tokens or tokens.pop(0) != "]":
                    raise ValueError("comutador sem fechamento")
                atom = left * right * left.inverse() * right.inverse()
            elif tok == "1":
                atom = Word()
            elif tok in self.generators:
                atom = self.gen(tok)
            else:
                raise ValueError(f"gerador desconhecido {tok!r}")
            if tokens and tokens[0].startswith("^"):
                power = int(tokens.pop(0)[1:].replace("(", "").replace(")", "").strip())
                atom = atom ** power
            w = w * atom
        return w, tokens


def _tokenize(text: str, names: Sequence[str]) -> List[str]:
    tokens: List[str] = []
    pos = 0
    text = text.strip()
    singles = all(len(n) == 1 for n in names)
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"caractere inesperado em {text!r} na posição {pos}")
        tok = m.group(1).replace(" ", "")
        if singles and tok[0].isalpha() and tok not in names:
            tokens.extend(tok)           # "abac" → a b a c
        else:
            tokens.append(tok)
        pos = m.end()
    return tokens


@dataclass(frozen=True)
class GroupHom:
    source: GroupPresentation
    target: GroupPresentation
    images: Tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source.n_gens:
            raise ValueError("número de imagens difere do número de geradores")
        for w in self.images:
            self.target.check_word(w)

    @classmethod
    def identity(cls, pres: GroupPresentation) -> "GroupHom":
        return cls(pres, pres, tuple(Word.gen(i) for i in range(pres.n_gens)))

    def apply(self, w: Word) -> Word:
        self.source.check_word(w)
        out = Word()
        for x in w:
            img = self.images[abs(x) - 1]
            out = out * (img if x > 0 else img.inverse())
        return out


# ─────────────────────────────────────────────────────────
# Abelianização
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank ⊕ Z/d_1 ⊕ … com d_1 | d_2 | …"""
    free_rank: int
    torsion: Tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " ⊕ ".join(parts) if parts else "0"


def exponent_matrix(pres: GroupPresentation) -> List[List[int]]:
    rows = []
    for r in pres.relators:
        row = [0] * pres.n_gens
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def invariants_from_diagonal(n_gens: int, diagonal: Iterable[int]) -> AbelianInvariants:
    """Normaliza uma diagonal qualquer em fatores invariantes via divisores elementares."""
    nonzero = [abs(int(d)) for d in diagonal if int(d) != 0]
    prime_powers: Dict[int, List[int]] = {}
    for d in nonzero:
        for p, e in factorint(d).items():
            prime_powers.setdefault(p, []).append(e)
    length = max((len(v) for v in prime_powers.values()), default=0)
    factors = [1] * length
    for p, exps in prime_powers.items():
        for k, e in enumerate(sorted(exps, reverse=True)):
            factors[k] *= p ** e
    return AbelianInvariants(free_rank=n_gens - len(nonzero), torsion=tuple(sorted(factors)))


def abelianization(pres: GroupPresentation) -> AbelianInvariants:
    rows = [r for r in exponent_matrix(pres) if any(r)]
    if not rows or pres.n_gens == 0:
        return AbelianInvariants(free_rank=pres.n_gens)
    m = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), pres.n_gens), ZZ)
    return invariants_from_diagonal(pres.n_gens, invariant_factors(m))


# ─────────────────────────────────────────────────────────
# Grupos finitos por tabela
# ─────────────────────────────────────────────────────────

def _perm_label(p: Permutation) -> str:
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True)
class FiniteGroupTable:
    """Tabela de multiplicação; elementos são índices 0..n-1. Axiomas conferidos na carga."""
    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    labels: Tuple[str, ...] = ()
    perms: Tuple[Permutation, ...] = field(default=(), compare=False, repr=False)
    inverse: Tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        elements = set(range(n))
        for row in table:
            if len(row) != n or set(row) != elements:
                raise ValueError("tabela não é um quadrado latino")
        e = self.identity
        if any(table[e][g] != g or table[g][e] != g for g in range(n)):
            raise ValueError(f"{e} não é identidade")
        inv = tuple(next(h for h in range(n) if table[g][h] == e) for g in range(n))
        if any(table[inv[g]][g] != e for g in range(n)):
            raise ValueError("inverso à esquerda difere do inverso à direita")
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise ValueError(f"tabela não associativa em ({a},{b},{c})")
        object.__setattr__(self, "inverse", inv)

    # ── Construtores ─────────────────────────────────────────

    @classmethod
    def from_permutations(cls, perms: Sequence[Permutation]) -> "FiniteGroupTable":
        perms = list(perms)
        index = {tuple(p.array_form): i for i, p in enumerate(perms)}
        table = [[index[tuple((a * b).array_form)] for b in perms] for a in perms]
        ident = next(i for i, p in enumerate(perms) if p.is_Identity)
        return cls(table=tuple(map(tuple, table)), identity=ident,
                   labels=tuple(_perm_label(p) for p in perms), perms=tuple(perms))

    @classmethod
    def from_permutation_group(cls, G: PermutationGroup) -> "FiniteGroupTable":
        return cls.from_permutations(sorted(G.elements, key=lambda p: p.array_form))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroupTable":
        """Z/n com o elemento k = g^k."""
        g = CyclicGroup(n).generators[0] if n > 1 else Permutation([0])
        table = cls.from_permutations([g ** k for k in range(n)])
        return cls(table=table.table, identity=0, labels=tuple(str(k) for k in range(n)),
                   perms=table.perms)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroupTable":
        return cls.from_permutation_group(SymmetricGroup(n))

    @classmethod
    def trivial(cls) -> "FiniteGroupTable":
        return cls(table=((0,),), identity=0, labels=("1",))

    @classmethod
    def direct_product(cls, A: "FiniteGroupTable", B: "FiniteGroupTable") -> "FiniteGroupTable":
        nb = B.order
        table = [
            [A.mul(a1, a2) * nb + B.mul(b1, b2) for a2 in range(A.order) for b2 in range(nb)]
            for a1 in range(A.order) for b1 in range(nb)
        ]
        labels = tuple(f"({A.labels[a]},{B.labels[b]})" for a in range(A.order) for b in range(nb))
        return cls(table=tuple(map(tuple, table)), identity=A.identity * nb + B.identity, labels=labels)

    # ── Operações ────────────────────────────────────────────

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def conj(self, g: int, x: int) -> int:
        """g x g⁻¹."""
        return self.mul(g, x, self.inv(g))

    def element(self, spec) -> int:
        """Índice, rótulo ou forma de arranjo de uma permutação."""
        if isinstance(spec, int):
            if not 0 <= spec < self.order:
                raise IndexOutOfRange(f"elemento {spec} fora de 0..{self.order - 1}")
            return spec
        if isinstance(spec, str):
            if spec in self.labels:
                return self.labels.index(spec)
            raise ValueError(f"rótulo desconhecido {spec!r}")
        if self.perms:
            target = Permutation(list(spec), size=self.perms[0].size)
            for i, p in enumerate(self.perms):
                if p == target:
                    return i
        raise ValueError(f"elemento desconhecido {spec!r}")

    def generated_subgroup(self, gens: Iterable[int]) -> frozenset:
        sub = {self.identity}
        frontier = list(sub)
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
        return frozenset(sub)

    def left_coset(self, g: int, H: Iterable[int]) -> frozenset:
        return frozenset(self.mul(g, h) for h in H)

    def left_cosets(self, H: Iterable[int]) -> List[frozenset]:
        """Classes laterais gH, ordenadas pelo menor representante."""
        H = frozenset(H)
        seen: List[frozenset] = []
        for g in self.elements:
            c = self.left_coset(g, H)
            if c not in seen:
                seen.append(c)
        return seen

    def is_homomorphism(self, f: Sequence[int], target: "FiniteGroupTable") -> Optional[Tuple[int, int]]:
        """None se f: self → target é homomorfismo; senão um par testemunha."""
        for a in self.elements:
            for b in self.elements:
                if f[self.mul(a, b)] != target.mul(f[a], f[b]):
                    return (a, b)
        return None

    def presentation(self, prefix: str = "g") -> GroupPresentation:
        """Apresentação pela tabela: um gerador por elemento."""
        names = tuple(f"{prefix}{i}" for i in self.elements)
        rels = [Word.gen(self.identity)]
        for a in self.elements:
            for b in self.elements:
                rels.append(Word.gen(a) * Word.gen(b) * Word.gen(self.mul(a, b)).inverse())
        return GroupPresentation(names, tuple(r for r in rels if len(r)))
