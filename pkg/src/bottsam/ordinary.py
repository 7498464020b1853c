"""Ordinary (non-equivariant) cohomology of the space of a word.

The ring is generated by one degree-2 class ``x_i`` per letter, subject to
one relation per position: ``x_i^2 + sum_{j<i} a_{j,i} x_j x_i = 0`` with
``a_{j,i}`` the Cartan number of letter i against the coroot of letter j.
Square-free monomials ``x_eps`` form a basis, so products are computed by
rewriting squares away.  Evaluation at the origin (dropping all root
variables) maps the equivariant ring onto this one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import WordMismatch
from .bott_samelson import BSWord, CohClass, Gallery


@dataclass(frozen=True)
class Relation:
    """The relation of position ``i``: x_i^2 + sum of coeff * x_j * x_i = 0."""

    position: int
    terms: tuple[tuple[int, int], ...]  # (j, a_{j,i}) with a_{j,i} != 0, j < i

    def __str__(self) -> str:
        parts = [f"x{self.position}^2"]
        for j, a in self.terms:
            body = f"x{j}*x{self.position}"
            if abs(a) != 1:
                body = f"{abs(a)}*{body}"
            parts.append(f"+ {body}" if a > 0 else f"- {body}")
        return " ".join(parts) + " = 0"


def relations(word: BSWord) -> list[Relation]:
    """One relation per position, in position order."""
    A = word.rs.cartan
    out = []
    for i in range(1, word.n + 1):
        li = word.letters[i - 1]
        terms = []
        for j in range(1, i):
            lj = word.letters[j - 1]
            a = A[lj - 1][li - 1]
            if a:
                terms.append((j, a))
        out.append(Relation(i, tuple(terms)))
    return out


class OrdinaryClass:
    """A class in the square-free monomial basis, with rational coefficients."""

    __slots__ = ("word", "coords")

    def __init__(self, word: BSWord, coords: dict[Gallery, Fraction]):
        self.word = word
        clean: dict[Gallery, Fraction] = {}
        for e, c in coords.items():
            word.check_gallery(e)
            c = Fraction(c)
            if c:
                clean[e] = c
        self.coords = clean

    @classmethod
    def zero(cls, word: BSWord) -> "OrdinaryClass":
        return cls(word, {})

    @classmethod
    def basis(cls, word: BSWord, e: Gallery) -> "OrdinaryClass":
        return cls(word, {e: Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other) -> "OrdinaryClass":
        if not isinstance(other, OrdinaryClass):
            return NotImplemented
        if self.word != other.word:
            raise WordMismatch("classes over different words")
        out = dict(self.coords)
        for e, c in other.coords.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return OrdinaryClass(self.word, out)

    def scaled(self, c: Fraction | int) -> "OrdinaryClass":
        return OrdinaryClass(self.word, {e: p * c for e, p in self.coords.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrdinaryClass):
            return NotImplemented
        return self.word == other.word and self.coords == other.coords

    __hash__ = None

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        parts: list[str] = []
        for e in sorted(self.coords, key=Gallery.sort_key):
            c = self.coords[e]
            if e.ones == 0:
                body = str(abs(c))
            else:
                body = f"x_{{{e}}}"
                if abs(c) != 1:
                    body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"OrdinaryClass({self})"

    def to_json_dict(self) -> dict:
        coords = {}
        for e in sorted(self.coords, key=Gallery.sort_key):
            c = self.coords[e]
            coords[str(e)] = int(c) if c.denominator == 1 else str(c)
        return {"word": list(self.word.letters), "coords": coords}

    @classmethod
    def from_json_dict(cls, rs, doc: dict, cap: int = 20) -> "OrdinaryClass":
        if not isinstance(doc, dict) or "word" not in doc or "coords" not in doc:
            raise ValueError("expected an object with 'word' and 'coords'")
        word = BSWord(rs, tuple(doc["word"]), cap=cap)
        coords = {
            Gallery.from_string(bits): Fraction(val)
            for bits, val in doc["coords"].items()
        }
        return cls(word, coords)


def ordinary_multiply(c1: OrdinaryClass, c2: OrdinaryClass) -> OrdinaryClass:
    """Bilinear product rewritten to the square-free basis.

    Squares are eliminated largest position first; the relation for x_i^2
    only produces monomials whose extra factor sits strictly left of i, so
    the reversed exponent vector drops lexicographically and the rewriting
    terminates.
    """
    if c1.word != c2.word:
        raise WordMismatch("classes over different words")
    word = c1.word
    A = word.rs.cartan
    letters = word.letters

    pending: dict[tuple[int, ...], Fraction] = {}
    for e1, a in c1.coords.items():
        for e2, b in c2.coords.items():
            exp = tuple(x + y for x, y in zip(e1.bits, e2.bits))
            s = pending.get(exp, Fraction(0)) + a * b
            if s:
                pending[exp] = s
            else:
                del pending[exp]

    while True:
        target = None
        for exp in pending:
            i = max((k for k, v in enumerate(exp) if v >= 2), default=-1)
            if i >= 0:
                target = (exp, i)
                break
        if target is None:
            break
        exp, i = target
        coef = pending.pop(exp)
        # x_{i+1}^2 -> -sum_{j<i} a_{j,i} x_{j+1} x_{i+1} (0-based i, j here)
        for j in range(i):
            a = A[letters[j] - 1][letters[i] - 1]
            if not a:
                continue
            nexp = list(exp)
            nexp[i] -= 1
            nexp[j] += 1
            key = tuple(nexp)
            s = pending.get(key, Fraction(0)) - a * coef
            if s:
                pending[key] = s
            else:
                del pending[key]

    return OrdinaryClass(word, {Gallery(exp): c for exp, c in pending.items()})


def evaluate_at_origin(c: CohClass) -> OrdinaryClass:
    """Project each coordinate to its constant term.

    A ring homomorphism onto ordinary cohomology: products computed
    equivariantly and then evaluated agree with :func:`ordinary_multiply`.
    """
    return OrdinaryClass(
        c.word, {e: p.constant_term() for e, p in c.coords.items()}
    )
