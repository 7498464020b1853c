"""Galleries over a word of simple reflections and the restriction classes
they index.

A word ``(i_1, .., i_N)`` in the simple reflections of a root system has one
T-fixed point per bit string ``eps`` of length N.  Everything here is
computed through those fixed points: a cohomology class is stored as finitely
many coordinates in the triangular basis ``sigma_eps``, whose value at a
fixed point ``eps'`` is an explicit product of roots.  Expansion inverts
that triangular system; multiplication is pointwise on fixed points followed
by expansion; integration is the localization sum, an alternating sum of
fractions that always cancels to a polynomial.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    CapExceeded,
    IndexOutOfRange,
    LengthMismatch,
    NotDivisible,
    NotInSpan,
    WordMismatch,
)
from .polyring import (
    LinearCombFraction,
    Polynomial,
    divide_exact,
    format_polynomial,
    fraction_sum,
    fraction_to_polynomial,
    parse_polynomial,
)
from .rootsystem import RootSystem, Weight, WeylElement

DEFAULT_GALLERY_CAP = 20

Bits = tuple[int, ...]


class Gallery:
    """A bit string selecting a subset of the letters of a word.

    Printed as e.g. ``101``; position ``i`` (1-based) is *on* when the
    corresponding letter participates.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: Bits):
        self.bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("gallery bits must be 0 or 1")

    @classmethod
    def from_string(cls, text: str) -> "Gallery":
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"not a gallery bit string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def zero(cls, n: int) -> "Gallery":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "Gallery":
        """The gallery with a single 1 in (1-based) position ``i``."""
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"position {i} out of range 1..{n}")
        return cls(tuple(int(k == i - 1) for k in range(n)))

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def ones(self) -> int:
        """Number of on positions (the dimension grading)."""
        return sum(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        """On positions, 1-based and increasing."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)

    def leq(self, other: "Gallery") -> bool:
        """Componentwise order: every on position of self is on in other."""
        if len(self.bits) != len(other.bits):
            raise LengthMismatch("galleries of different lengths")
        return all(a <= b for a, b in zip(self.bits, other.bits))

    def flipped(self, i: int) -> "Gallery":
        """The gallery with (1-based) position ``i`` toggled."""
        if not 1 <= i <= len(self.bits):
            raise IndexOutOfRange(f"position {i} out of range 1..{len(self.bits)}")
        return Gallery(
            self.bits[: i - 1] + (1 - self.bits[i - 1],) + self.bits[i:]
        )

    def sort_key(self) -> tuple:
        # grade first, then on-positions as early as possible
        return (self.ones, tuple(1 - b for b in self.bits))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gallery):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __repr__(self) -> str:
        return f"Gallery({self})"


def gallery_leq(e1: Gallery, e2: Gallery) -> bool:
    return e1.leq(e2)


class BSWord:
    """A word of simple reflections together with its gallery combinatorics.

    Caches, per gallery, the list of localization weights
    ``alpha_i(eps) = v_{i-1}(eps)(mu_i)``, where ``v_j(eps)`` is the product
    of the reflections at the on positions up to ``j`` (applied
    left-to-right), and from them the triangular restriction values
    ``sigma_eps(eps')``.
    """

    def __init__(
        self,
        rs: RootSystem,
        letters: tuple[int, ...] | list[int],
        cap: int = DEFAULT_GALLERY_CAP,
    ):
        letters = tuple(int(i) for i in letters)
        if not letters:
            raise ValueError("a word needs at least one letter")
        for i in letters:
            if not 1 <= i <= rs.rank:
                raise IndexOutOfRange(f"letter {i} out of range 1..{rs.rank}")
        if len(letters) > cap:
            raise CapExceeded(
                f"word of length {len(letters)} exceeds the gallery cap {cap}"
                " (2^N fixed points; raise the cap explicitly if intended)"
            )
        self.rs = rs
        self.letters = letters
        self.n = len(letters)
        self._galleries: list[Gallery] | None = None
        self._alphas: dict[Bits, tuple[Weight, ...]] = {}
        self._sigma: dict[tuple[Bits, Bits], Polynomial] = {}
        self._form_poly: dict[Weight, Polynomial] = {}

    # ---- basic structure -------------------------------------------------

    def simple_root(self, i: int) -> Weight:
        """mu_i, the simple root of the (1-based) i-th letter."""
        self._check_pos(i)
        return self.rs.simple_roots[self.letters[i - 1] - 1]

    def galleries(self) -> list[Gallery]:
        """All 2^N galleries, graded by number of on bits, earlier on bits
        first within a grade."""
        if self._galleries is None:
            alls = [Gallery(bits) for bits in itertools.product((0, 1), repeat=self.n)]
            alls.sort(key=Gallery.sort_key)
            self._galleries = alls
        return self._galleries

    def check_gallery(self, e: Gallery) -> None:
        if len(e) != self.n:
            raise LengthMismatch(
                f"gallery of length {len(e)} against a word of length {self.n}"
            )

    def _check_pos(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"position {i} out of range 1..{self.n}")

    # ---- Weyl data per gallery --------------------------------------------

    def v_segment(self, e: Gallery, i: int, j: int) -> WeylElement:
        """Product of the reflections at on positions in ``i..j`` (1-based,
        inclusive), taken in position order; identity when j < i."""
        self.check_gallery(e)
        w = WeylElement.identity(self.rs.rank)
        for k in range(max(i, 1), min(j, self.n) + 1):
            if e.bits[k - 1]:
                w = w @ self.rs.simple_reflection(self.letters[k - 1])
        return w

    def v(self, e: Gallery) -> WeylElement:
        """The Weyl-group point of the gallery: all on reflections in order."""
        return self.v_segment(e, 1, self.n)

    def alphas(self, e: Gallery) -> tuple[Weight, ...]:
        """The localization weights (alpha_1(e), .., alpha_N(e))."""
        self.check_gallery(e)
        cached = self._alphas.get(e.bits)
        if cached is None:
            out = []
            w = WeylElement.identity(self.rs.rank)
            for pos in range(self.n):
                out.append(w.apply(self.rs.simple_roots[self.letters[pos] - 1]))
                if e.bits[pos]:
                    w = w @ self.rs.simple_reflection(self.letters[pos])
            cached = tuple(out)
            self._alphas[e.bits] = cached
        return cached

    def alpha(self, e: Gallery, i: int) -> Weight:
        self._check_pos(i)
        return self.alphas(e)[i - 1]

    def _poly_of(self, w: Weight) -> Polynomial:
        p = self._form_poly.get(w)
        if p is None:
            p = Polynomial.from_weight(w)
            self._form_poly[w] = p
        return p

    # ---- the triangular basis ---------------------------------------------

    def sigma(self, e: Gallery, ep: Gallery) -> Polynomial:
        """Value of the basis class of gallery ``e`` at fixed point ``ep``:
        ``prod_{i on in e} alpha_i(ep)`` when e <= ep, else 0."""
        self.check_gallery(e)
        self.check_gallery(ep)
        if not e.leq(ep):
            return Polynomial.zero(self.rs.rank)
        key = (e.bits, ep.bits)
        cached = self._sigma.get(key)
        if cached is not None:
            return cached
        weights = self.alphas(ep)
        out = Polynomial.one(self.rs.rank)
        for i in e.support:
            out = out * self._poly_of(weights[i - 1])
        if self.n <= 10:  # 4^N pairs; skip the memo for huge words
            self._sigma[key] = out
        return out

    def sigma_diagonal(self, e: Gallery) -> list[Weight]:
        """The linear factors of sigma_e(e), in position order."""
        weights = self.alphas(e)
        return [weights[i - 1] for i in e.support]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BSWord):
            return NotImplemented
        return self.rs == other.rs and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.rs, self.letters))

    def __repr__(self) -> str:
        return f"BSWord({self.rs.label or self.rs.cartan}, {list(self.letters)})"


class CohClass:
    """A cohomology class in the triangular basis: finitely many gallery
    coordinates, each a polynomial in the simple roots."""

    __slots__ = ("word", "coords")

    def __init__(self, word: BSWord, coords: dict[Gallery, Polynomial]):
        self.word = word
        clean: dict[Gallery, Polynomial] = {}
        for e, p in coords.items():
            word.check_gallery(e)
            if isinstance(p, (int, Fraction)):
                p = Polynomial.constant(word.rs.rank, p)
            if not p.is_zero:
                clean[e] = p
        self.coords = clean

    @classmethod
    def zero(cls, word: BSWord) -> "CohClass":
        return cls(word, {})

    @classmethod
    def basis(cls, word: BSWord, e: Gallery) -> "CohClass":
        return cls(word, {e: Polynomial.one(word.rs.rank)})

    @classmethod
    def unit(cls, word: BSWord) -> "CohClass":
        """The identity of the ring: the basis class of the empty gallery."""
        return cls.basis(word, Gallery.zero(word.n))

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def restriction(self, ep: Gallery) -> Polynomial:
        """Value at the fixed point ``ep``; only coordinates below ``ep``
        contribute."""
        self.word.check_gallery(ep)
        out = Polynomial.zero(self.word.rs.rank)
        for e, c in self.coords.items():
            if e.leq(ep):
                out = out + c * self.word.sigma(e, ep)
        return out

    def restriction_fn(self) -> "RestrictionFn":
        return RestrictionFn(self.word, self.restriction)

    def __add__(self, other) -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        if self.word != other.word:
            raise WordMismatch("classes over different words")
        out = dict(self.coords)
        for e, c in other.coords.items():
            s = out.get(e, Polynomial.zero(self.word.rs.rank)) + c
            if s.is_zero:
                out.pop(e, None)
            else:
                out[e] = s
        return CohClass(self.word, out)

    def __sub__(self, other) -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        return self + other.scaled(-1)

    def scaled(self, c: Polynomial | Fraction | int) -> "CohClass":
        return CohClass(self.word, {e: p * c for e, p in self.coords.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.word == other.word and self.coords == other.coords

    __hash__ = None

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        items = sorted(self.coords.items(), key=lambda kv: kv[0].sort_key())
        return ", ".join(f"{e}: {p}" for e, p in items)

    def __repr__(self) -> str:
        return f"CohClass({self})"

    # ---- JSON form ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        items = sorted(self.coords.items(), key=lambda kv: kv[0].sort_key())
        return {
            "word": list(self.word.letters),
            "coords": {str(e): format_polynomial(p) for e, p in items},
        }

    @classmethod
    def from_json_dict(
        cls, rs: RootSystem, doc: dict, cap: int = DEFAULT_GALLERY_CAP
    ) -> "CohClass":
        if not isinstance(doc, dict) or "word" not in doc or "coords" not in doc:
            raise ValueError("expected an object with 'word' and 'coords'")
        word = BSWord(rs, tuple(doc["word"]), cap=cap)
        coords: dict[Gallery, Polynomial] = {}
        for bits, text in doc["coords"].items():
            e = Gallery.from_string(bits)
            word.check_gallery(e)
            if isinstance(text, (int, float)):
                if isinstance(text, float) and not text.is_integer():
                    raise ValueError("non-exact coefficient; use a string 'p/q'")
                p = Polynomial.constant(rs.rank, int(text))
            else:
                p = parse_polynomial(text, rs.rank)
            coords[e] = p
        return cls(word, coords)


class RestrictionFn:
    """A gallery-indexed family of polynomials, evaluated lazily and memoized.

    The image of a class under restriction to the fixed points; products of
    classes are computed pointwise here before being expanded back into
    coordinates.
    """

    __slots__ = ("word", "_fn", "_memo")

    def __init__(self, word: BSWord, fn):
        self.word = word
        self._fn = fn
        self._memo: dict[Bits, Polynomial] = {}

    @classmethod
    def from_class(cls, c: CohClass) -> "RestrictionFn":
        return c.restriction_fn()

    @classmethod
    def from_values(cls, word: BSWord, values: dict[Gallery, Polynomial]) -> "RestrictionFn":
        table = {}
        for e, p in values.items():
            word.check_gallery(e)
            if isinstance(p, (int, Fraction)):
                p = Polynomial.constant(word.rs.rank, p)
            table[e.bits] = p

        def fn(e: Gallery) -> Polynomial:
            try:
                return table[e.bits]
            except KeyError:
                raise ValueError(f"no value supplied for gallery {e}") from None

        return cls(word, fn)

    def __call__(self, e: Gallery) -> Polynomial:
        self.word.check_gallery(e)
        val = self._memo.get(e.bits)
        if val is None:
            val = self._fn(e)
            self._memo[e.bits] = val
        return val

    def pointwise_product(self, other: "RestrictionFn") -> "RestrictionFn":
        if self.word != other.word:
            raise WordMismatch("restriction functions over different words")
        return RestrictionFn(self.word, lambda e: self(e) * other(e))


def expand(f: RestrictionFn) -> CohClass:
    """Invert the triangular system: find the unique coordinates whose
    restriction equals ``f``.

    Walks galleries by grade; at each gallery the residual after subtracting
    the already-found lower terms must factor as the full product of that
    gallery's localization weights, which is checked by exact division.
    Raises :class:`NotInSpan` when the input is not a polynomial combination
    of the basis classes.
    """
    word = f.word
    coords: dict[Gallery, Polynomial] = {}
    for e in word.galleries():
        acc = f(e)
        for ep, c in coords.items():
            if ep.leq(e):
                acc = acc - c * word.sigma(ep, e)
        if acc.is_zero:
            continue
        q = acc
        try:
            for form in word.sigma_diagonal(e):
                q = divide_exact(q, form)
        except NotDivisible:
            raise NotInSpan(
                f"residual at gallery {e} is not a multiple of its weight product"
            ) from None
        coords[e] = q
    return CohClass(word, coords)


def multiply(c1: CohClass, c2: CohClass) -> CohClass:
    """Product of two classes: pointwise on fixed points, then expanded."""
    if c1.word != c2.word:
        raise WordMismatch("classes over different words")
    return expand(c1.restriction_fn().pointwise_product(c2.restriction_fn()))


def multiply_generator(word: BSWord, i: int, e: Gallery) -> CohClass:
    """Product of the one-bit basis class at position ``i`` with the basis
    class of ``e``, by the closed combinatorial rule (no expansion).

    When position ``i`` is off in ``e`` the product is the single basis class
    with that bit turned on.  When it is on, the product is
    ``sigma_i(e) * basis(e)`` plus one correction per earlier off position
    ``j``, with integer coefficient given by a Cartan pairing against the
    partial product of reflections strictly between ``j`` and ``i``.
    """
    word._check_pos(i)
    word.check_gallery(e)
    rank = word.rs.rank
    if not e.bits[i - 1]:
        return CohClass.basis(word, e.flipped(i))
    out: dict[Gallery, Polynomial] = {}
    diag = word.sigma(Gallery.unit(word.n, i), e)
    if not diag.is_zero:
        out[e] = diag
    mu_i = word.rs.simple_roots[word.letters[i - 1] - 1]
    for j in range(1, i):
        if e.bits[j - 1]:
            continue
        # alpha_j^i(e) = v_{j+1..i-1}(e)(mu_i), then pair against letter j
        w_mid = word.v_segment(e, j + 1, i - 1)
        alpha_ji = w_mid.apply(mu_i)
        coeff = -word.rs.cartan_pairing(alpha_ji, word.letters[j - 1])
        if coeff:
            eg = e.flipped(j)
            prev = out.get(eg, Polynomial.zero(rank))
            s = prev + Polynomial.constant(rank, coeff)
            if s.is_zero:
                out.pop(eg, None)
            else:
                out[eg] = s
    return CohClass(word, out)


def table_lines(word: BSWord) -> list[str]:
    """The full restriction table as text: a column-header comment, then one
    row per basis class with its values at every fixed point."""
    gals = word.galleries()
    lines = ["# columns: " + ", ".join(str(g) for g in gals)]
    for e in gals:
        row = ", ".join(format_polynomial(word.sigma(e, ep)) for ep in gals)
        lines.append(f"{e}: {row}")
    return lines


def integrate(word: BSWord, e: Gallery, c: CohClass) -> Polynomial:
    """Localization integral over the subvariety of gallery ``e``.

    The alternating sum, over fixed points below ``e``, of the class value
    divided by the product of the weights of ``e``'s on positions at that
    fixed point.  The fractions cancel exactly; a residual denominator means
    the input was not a genuine class and raises
    :class:`ResidualDenominator`.
    """
    word.check_gallery(e)
    if c.word != word:
        raise WordMismatch("class over a different word")
    rank = word.rs.rank
    support = e.support
    sign_e = (-1) ** e.ones
    fractions: list[LinearCombFraction] = []
    for on in itertools.chain.from_iterable(
        itertools.combinations(support, k) for k in range(len(support) + 1)
    ):
        bits = [0] * word.n
        for pos in on:
            bits[pos - 1] = 1
        ep = Gallery(tuple(bits))
        num = c.restriction(ep)
        if num.is_zero:
            continue
        sign = sign_e * (-1) ** ep.ones
        weights = word.alphas(ep)
        forms = [weights[i - 1] for i in support]
        fractions.append(LinearCombFraction(num * sign, forms))
    if not fractions:
        return Polynomial.zero(rank)
    return fraction_to_polynomial(fraction_sum(fractions))
