"""Exact sparse arithmetic in the free associative algebra.

Monomials are words over non-commuting graded variables; a polynomial is a
finite map from words to nonzero integer coefficients, so ``a*b != b*a`` and
nothing ever rounds or overflows.

The canonical text form orders terms by total degree (descending), then by
word length, then lexicographically with named letters ``a < b < x`` before
indexed letters such as ``a_{1,2}``.  ``parse_polynomial`` inverts
``canonical_string``; ``to_json_terms`` / ``from_json_terms`` do the same for
the structured wire form used by the CLI and the HTTP service.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Union


class ParseError(ValueError):
    """A polynomial text or JSON form that cannot be decoded."""


class Variable:
    """A non-commuting indeterminate with a fixed positive grading weight.

    Identity is the pair ``(name, indices)``; the degree belongs to the
    symbol itself, not to any expression context.  ``indices`` marks matrix
    entries, printed as ``a_{1,2}``.
    """

    __slots__ = ("name", "indices", "degree", "_hash")

    def __init__(self, name: str, indices: tuple[int, int] | None = None, degree: int = 1):
        if not name or not name.isalpha():
            raise ValueError(f"variable name must be alphabetic, got {name!r}")
        if indices is not None:
            row, col = indices
            if row < 1 or col < 1:
                raise ValueError("matrix indices must be positive")
            indices = (int(row), int(col))
        if degree < 1:
            raise ValueError("variable degree must be a positive integer")
        self.name = name
        self.indices = indices
        self.degree = int(degree)
        self._hash = hash((name, indices))

    def sort_key(self) -> tuple:
        if self.indices is None:
            return (0, self.name, (0, 0))
        return (1, self.name, self.indices)

    def text(self) -> str:
        if self.indices is None:
            return self.name
        row, col = self.indices
        return f"{self.name}_{{{row},{col}}}"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Variable)
            and self.name == other.name
            and self.indices == other.indices
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.indices is None:
            return f"Variable({self.name!r}, degree={self.degree})"
        return f"Variable({self.name!r}, indices={self.indices}, degree={self.degree})"


class Word:
    """An ordered sequence of variables; the monomial basis of the algebra.

    Degree is the sum of the letter degrees; the empty word is the
    multiplicative identity and has degree 0.
    """

    __slots__ = ("letters", "degree", "_hash")

    def __init__(self, letters: Iterable[Variable] = ()):
        self.letters = tuple(letters)
        self.degree = sum(v.degree for v in self.letters)
        self._hash = hash(self.letters)

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def sort_key(self) -> tuple:
        return (-self.degree, len(self.letters), tuple(v.sort_key() for v in self.letters))

    def text(self) -> str:
        """Letters joined by spaces, with runs folded to exponents (``x x`` -> ``x^2``)."""
        if not self.letters:
            return "1"
        parts = []
        i = 0
        while i < len(self.letters):
            letter = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == letter:
                j += 1
            parts.append(letter.text() if j - i == 1 else f"{letter.text()}^{j - i}")
            i = j
        return " ".join(parts)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Variable]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Word({self.text()})"


EMPTY_WORD = Word()

PolynomialLike = Union[int, "NcPolynomial"]


class NcPolynomial:
    """A finite map from words to nonzero exact integer coefficients.

    Values are immutable after construction; all operators return fresh
    polynomials.  The zero polynomial has degree -1 by convention.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] | None = None):
        data: dict[Word, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coeff in items:
                if not coeff:
                    continue
                acc = data.get(word, 0) + coeff
                if acc:
                    data[word] = acc
                elif word in data:
                    del data[word]
        self._terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "NcPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NcPolynomial":
        return cls({EMPTY_WORD: 1})

    @classmethod
    def constant(cls, value: int) -> "NcPolynomial":
        return cls({EMPTY_WORD: int(value)})

    @classmethod
    def monomial(cls, word: Word | Variable | Iterable[Variable], coeff: int = 1) -> "NcPolynomial":
        if isinstance(word, Variable):
            word = Word((word,))
        elif not isinstance(word, Word):
            word = Word(word)
        return cls({word: coeff})

    @staticmethod
    def _coerce(value: object) -> "NcPolynomial | None":
        if isinstance(value, NcPolynomial):
            return value
        if isinstance(value, int):
            return NcPolynomial({EMPTY_WORD: value})
        return None

    @classmethod
    def _from_raw(cls, data: dict[Word, int]) -> "NcPolynomial":
        poly = cls.__new__(cls)
        poly._terms = data
        return poly

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return max((w.degree for w in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({w.degree for w in self._terms}) <= 1

    def monomial_count(self) -> int:
        return len(self._terms)

    def coefficient(self, word: Word) -> int:
        return self._terms.get(word, 0)

    def constant_term(self) -> int:
        return self._terms.get(EMPTY_WORD, 0)

    def items(self):
        """Raw (word, coefficient) view in arbitrary order."""
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[Word, int]]:
        """Terms in canonical order: degree descending, then length, then lex."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def homogeneous_component(self, degree: int) -> "NcPolynomial":
        return NcPolynomial._from_raw(
            {w: c for w, c in self._terms.items() if w.degree == degree}
        )

    def homogeneous_degrees(self) -> list[int]:
        return sorted({w.degree for w in self._terms})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: PolynomialLike) -> "NcPolynomial":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        data = dict(self._terms)
        for word, coeff in coerced._terms.items():
            acc = data.get(word, 0) + coeff
            if acc:
                data[word] = acc
            elif word in data:
                del data[word]
        return NcPolynomial._from_raw(data)

    __radd__ = __add__

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial._from_raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: PolynomialLike) -> "NcPolynomial":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self + (-coerced)

    def __rsub__(self, other: PolynomialLike) -> "NcPolynomial":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced + (-self)

    def mul(self, other: PolynomialLike, max_degree: int | None = None) -> "NcPolynomial":
        """Non-commutative product, optionally discarding terms above max_degree."""
        coerced = self._coerce(other)
        if coerced is None:
            raise TypeError(f"cannot multiply NcPolynomial by {type(other).__name__}")
        out: dict[Word, int] = {}

        def accumulate(w1: Word, c1: int, w2: Word, c2: int) -> None:
            word = Word(w1.letters + w2.letters)
            acc = out.get(word, 0) + c1 * c2
            if acc:
                out[word] = acc
            elif word in out:
                del out[word]

        if max_degree is None:
            for w1, c1 in self._terms.items():
                for w2, c2 in coerced._terms.items():
                    accumulate(w1, c1, w2, c2)
        else:
            buckets: dict[int, list[tuple[Word, int]]] = {}
            for w2, c2 in coerced._terms.items():
                buckets.setdefault(w2.degree, []).append((w2, c2))
            degrees = sorted(buckets)
            for w1, c1 in self._terms.items():
                budget = max_degree - w1.degree
                if budget < 0:
                    continue
                for d in degrees:
                    if d > budget:
                        break
                    for w2, c2 in buckets[d]:
                        accumulate(w1, c1, w2, c2)
        return NcPolynomial._from_raw(out)

    def __mul__(self, other: PolynomialLike) -> "NcPolynomial":
        if self._coerce(other) is None:
            return NotImplemented
        return self.mul(other)

    def __rmul__(self, other: PolynomialLike) -> "NcPolynomial":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced.mul(self)

    def __pow__(self, exponent: int) -> "NcPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = NcPolynomial.one()
        for _ in range(exponent):
            result = result.mul(self)
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        coerced = self._coerce(other)
        return coerced is not None and self._terms == coerced._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitution --------------------------------------------------------

    def substitute(self, images: Mapping[Variable, PolynomialLike]) -> "NcPolynomial":
        """Apply the algebra homomorphism sending each variable to its image.

        Variables without an image map to themselves.  Within each word the
        images are multiplied in letter order.
        """
        table: dict[Variable, NcPolynomial] = {}
        for var, image in images.items():
            coerced = self._coerce(image)
            if coerced is None:
                raise TypeError("images must be polynomials or integers")
            table[var] = coerced
        lifted: dict[Variable, NcPolynomial] = {}

        def image_of(letter: Variable) -> NcPolynomial:
            img = table.get(letter)
            if img is not None:
                return img
            mono = lifted.get(letter)
            if mono is None:
                mono = lifted[letter] = NcPolynomial.monomial(letter)
            return mono

        out: dict[Word, int] = {}
        for word, coeff in self._terms.items():
            partial = NcPolynomial.constant(coeff)
            for letter in word.letters:
                partial = partial.mul(image_of(letter))
            for w, c in partial._terms.items():
                acc = out.get(w, 0) + c
                if acc:
                    out[w] = acc
                elif w in out:
                    del out[w]
        return NcPolynomial._from_raw(out)

    # -- text and JSON forms --------------------------------------------------

    def canonical_string(self) -> str:
        """Deterministic text form; see the module docstring for the order."""
        if not self._terms:
            return "0"
        rendered = []
        for word, coeff in self.sorted_terms():
            magnitude = abs(coeff)
            if not word.letters:
                body = str(magnitude)
            elif magnitude == 1:
                body = word.text()
            else:
                body = f"{magnitude} {word.text()}"
            rendered.append((coeff < 0, body))
        negative, body = rendered[0]
        pieces = [("-" if negative else "") + body]
        for negative, body in rendered[1:]:
            pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.canonical_string()

    def __repr__(self) -> str:
        return f"NcPolynomial({self.canonical_string()})"


STANDARD_DEGREES: Mapping[str, int] = {"a": 1, "b": 1, "x": 2}

_TOKEN_RE = re.compile(r"[+-]|\d+|[A-Za-z]+(?:_\{\d+,\d+\})?(?:\^\d+)?|\S")
_LETTER_RE = re.compile(
    r"(?P<name>[A-Za-z]+)(?:_\{(?P<row>\d+),(?P<col>\d+)\})?(?:\^(?P<exp>\d+))?$"
)


def _symbol(name: str, indices: tuple[int, int] | None, symbols: Mapping[str, int]) -> Variable:
    if indices is not None:
        row, col = indices
        # matrix-entry grading: diagonal entries weigh 2, off-diagonal 1
        return Variable(name, indices, 2 if row == col else 1)
    try:
        degree = symbols[name]
    except KeyError:
        raise ParseError(f"unknown variable {name!r}") from None
    return Variable(name, None, degree)


def parse_polynomial(text: str, symbols: Mapping[str, int] | None = None) -> NcPolynomial:
    """Parse the canonical text form back into a polynomial.

    Named letters take their degree from ``symbols`` (default a=1, b=1, x=2);
    indexed letters ``a_{i,j}`` use the matrix-entry grading.
    """
    if symbols is None:
        symbols = STANDARD_DEGREES
    tokens = _TOKEN_RE.findall(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    terms: list[tuple[Word, int]] = []
    pos = 0
    while pos < len(tokens):
        sign = 1
        while pos < len(tokens) and tokens[pos] in "+-":
            if tokens[pos] == "-":
                sign = -sign
            pos += 1
        if pos >= len(tokens):
            raise ParseError("dangling sign")
        coeff: int | None = None
        if tokens[pos].isdigit():
            coeff = int(tokens[pos])
            pos += 1
        letters: list[Variable] = []
        while pos < len(tokens) and tokens[pos] not in "+-":
            token = tokens[pos]
            match = _LETTER_RE.match(token)
            if match is None:
                raise ParseError(f"unexpected token {token!r}")
            indices = None
            if match["row"] is not None:
                indices = (int(match["row"]), int(match["col"]))
            letter = _symbol(match["name"], indices, symbols)
            letters.extend([letter] * int(match["exp"] or 1))
            pos += 1
        if coeff is None and not letters:
            raise ParseError("empty term")
        terms.append((Word(letters), sign * (1 if coeff is None else coeff)))
    return NcPolynomial(terms)


def to_json_terms(poly: NcPolynomial) -> list[dict]:
    """Structured wire form: a list of {word, coefficient} objects.

    Named letters encode as bare strings, indexed letters as
    ``{"name": ..., "row": ..., "col": ...}``; coefficients are decimal
    strings so arbitrary precision survives JSON.
    """
    out = []
    for word, coeff in poly.sorted_terms():
        encoded: list[object] = []
        for letter in word.letters:
            if letter.indices is None:
                encoded.append(letter.name)
            else:
                encoded.append(
                    {"name": letter.name, "row": letter.indices[0], "col": letter.indices[1]}
                )
        out.append({"word": encoded, "coefficient": str(coeff)})
    return out


def from_json_terms(data: Iterable[Mapping], symbols: Mapping[str, int] | None = None) -> NcPolynomial:
    """Decode the structured wire form produced by to_json_terms."""
    if symbols is None:
        symbols = STANDARD_DEGREES
    terms: list[tuple[Word, int]] = []
    try:
        for entry in data:
            letters: list[Variable] = []
            for item in entry["word"]:
                if isinstance(item, str):
                    letters.append(_symbol(item, None, symbols))
                else:
                    letters.append(
                        _symbol(item["name"], (int(item["row"]), int(item["col"])), symbols)
                    )
            terms.append((Word(letters), int(entry["coefficient"])))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed term list: {exc}") from exc
    return NcPolynomial(terms)
