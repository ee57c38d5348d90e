"""Lattice-walk oracles for the polynomial families.

Staircase walks step right (weight a), up (weight b) or diagonally
(weight x), stay weakly below the diagonal i >= j, and never step right
then immediately up.  Their weight enumerator reproduces d_n; wrapping a
walk in a leading right step and a trailing up step gives the strictly
sub-diagonal walks behind c_n.

Expanding every diagonal of such a walk into ab (sign +) or ba (sign -)
yields signed parent/child pairs whose total is c_n(a, b, ab-ba).  A child
is *bad* when it contains a valley (a b immediately followed by an a) whose
middle vertex misses the diagonal.  ``involution`` re-tiles the parent at
the first such valley - one contracted diagonal swaps against the
literal-step/neighbouring-peak cover of the same two letters - which flips
the sign, keeps the child, and is self-inverse, so bad pairs cancel.  The
surviving good children are exactly the words a^{i_1} b^{i_1} ... a^{i_s}
b^{i_s} for compositions (i_1, ..., i_s) of n, each from a unique parent
with sign (-1)^{s-1}.

Dyck words give a second oracle: collapsing every peak ab to x sums to the
series D, and keeping the peaks at level 0 sums to 1 + aUb.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from time import perf_counter
from typing import Iterator

from . import symbols
from .families import D_series, U_series, c_poly, substitute_commutator
from .freealg import NcPolynomial, Word
from .report import Report, Witness, first_mismatch
from .series import TruncatedSeries


class Step(enum.Enum):
    HORIZONTAL = "a"
    DIAGONAL = "x"
    VERTICAL = "b"


_STEP_LETTER = {
    Step.HORIZONTAL: symbols.a,
    Step.DIAGONAL: symbols.x,
    Step.VERTICAL: symbols.b,
}
_STEP_MOVE = {Step.HORIZONTAL: (1, 0), Step.DIAGONAL: (1, 1), Step.VERTICAL: (0, 1)}
# fixed exploration order, purely for reproducible listings
_DFS_ORDER = (Step.HORIZONTAL, Step.DIAGONAL, Step.VERTICAL)


@dataclass(frozen=True)
class StaircasePath:
    steps: tuple[Step, ...]

    def weight_word(self) -> Word:
        return Word(_STEP_LETTER[step] for step in self.steps)

    def positions(self) -> Iterator[tuple[int, int]]:
        i = j = 0
        yield (i, j)
        for step in self.steps:
            di, dj = _STEP_MOVE[step]
            i, j = i + di, j + dj
            yield (i, j)

    def diagonal_count(self) -> int:
        return sum(1 for step in self.steps if step is Step.DIAGONAL)


def enumerate_staircase(n: int) -> list[StaircasePath]:
    """All walks from (0,0) to (n-1,n-1); there are Catalan(n-1) of them."""
    if n < 1:
        raise ValueError("n must be >= 1")
    target = n - 1
    found: list[StaircasePath] = []

    def extend(i: int, j: int, last: Step | None, acc: list[Step]) -> None:
        if i == target and j == target:
            found.append(StaircasePath(tuple(acc)))
            return
        for step in _DFS_ORDER:
            if last is Step.HORIZONTAL and step is Step.VERTICAL:
                continue
            di, dj = _STEP_MOVE[step]
            ni, nj = i + di, j + dj
            if ni > target or nj > ni:
                continue
            acc.append(step)
            extend(ni, nj, step, acc)
            acc.pop()

    extend(0, 0, None, [])
    return found


def staircase_weight_enumerator(n: int) -> NcPolynomial:
    """Sum of ordered step-weight products; equals d_poly(n)."""
    return NcPolynomial((path.weight_word(), 1) for path in enumerate_staircase(n))


def enumerate_cn_paths(n: int) -> list[StaircasePath]:
    """Walks from (0,0) to (n,n) strictly below the diagonal in the interior."""
    if n < 1:
        raise ValueError("n must be >= 1")
    head, tail = Step.HORIZONTAL, Step.VERTICAL
    return [
        StaircasePath((head,) + path.steps + (tail,)) for path in enumerate_staircase(n)
    ]


def cn_weight_enumerator(n: int) -> NcPolynomial:
    return NcPolynomial((path.weight_word(), 1) for path in enumerate_cn_paths(n))


# -- children and the sign-reversing involution --------------------------------


@dataclass(frozen=True)
class ExpandedPair:
    parent: StaircasePath
    choices: tuple[bool, ...]  # one flag per diagonal step, True = the -ba option
    child: str  # the induced walk over {a, b}
    sign: int


def _make_pair(parent: StaircasePath, choices: tuple[bool, ...]) -> ExpandedPair:
    pieces = []
    chosen = iter(choices)
    for step in parent.steps:
        if step is Step.DIAGONAL:
            pieces.append("ba" if next(chosen) else "ab")
        elif step is Step.HORIZONTAL:
            pieces.append("a")
        else:
            pieces.append("b")
    sign = -1 if sum(choices) % 2 else 1
    return ExpandedPair(parent, choices, "".join(pieces), sign)


def expand_children(path: StaircasePath) -> list[ExpandedPair]:
    """All 2^r signed children of a walk with r diagonal steps."""
    r = path.diagonal_count()
    return [_make_pair(path, bits) for bits in product((False, True), repeat=r)]


def all_pairs(n: int) -> list[ExpandedPair]:
    return [pair for path in enumerate_cn_paths(n) for pair in expand_children(path)]


class PairKind(enum.Enum):
    GOOD = "good"
    BAD = "bad"


def _first_subdiagonal_valley(child: str) -> int | None:
    """Index of the first b,a factor whose middle vertex is off the diagonal.

    Children stay weakly below the diagonal, so the vertex reached after a
    prefix lies on the diagonal exactly when #a - #b is zero there.
    """
    height = 0
    last = len(child) - 1
    for i, letter in enumerate(child):
        height += 1 if letter == "a" else -1
        if letter == "b" and height > 0 and i < last and child[i + 1] == "a":
            return i
    return None


def classify_pair(pair: ExpandedPair) -> PairKind:
    return PairKind.GOOD if _first_subdiagonal_valley(pair.child) is None else PairKind.BAD


def _tiles(pair: ExpandedPair) -> list[tuple[str, ...]]:
    tiles: list[tuple[str, ...]] = []
    chosen = iter(pair.choices)
    for step in pair.parent.steps:
        if step is Step.DIAGONAL:
            tiles.append(("D", "ba" if next(chosen) else "ab"))
        elif step is Step.HORIZONTAL:
            tiles.append(("H",))
        else:
            tiles.append(("V",))
    return tiles


def _pair_from_tiles(tiles: list[tuple[str, ...]]) -> ExpandedPair:
    steps: list[Step] = []
    choices: list[bool] = []
    for tile in tiles:
        if tile[0] == "D":
            steps.append(Step.DIAGONAL)
            choices.append(tile[1] == "ba")
        elif tile[0] == "H":
            steps.append(Step.HORIZONTAL)
        else:
            steps.append(Step.VERTICAL)
    return _make_pair(StaircasePath(tuple(steps)), tuple(choices))


def involution(pair: ExpandedPair) -> ExpandedPair:
    """Flip the parent structure at the child's first sub-diagonal valley.

    If the valley's two letters come from one contracted diagonal (x -> ba),
    release it: the freed b joins a peak diagonal with a literal a on its
    left when one is there (a literal pair a,b is never a legal parent), and
    the freed a symmetrically absorbs a literal b on its right.  Otherwise
    contract the valley into a diagonal, re-literalizing whatever its two
    letters were attached to.  Exactly one ba-choice appears or disappears,
    so the sign flips; the child is untouched.
    """
    child = pair.child
    valley = _first_subdiagonal_valley(child)
    if valley is None:
        raise ValueError("involution is only defined on bad pairs")
    tiles = _tiles(pair)
    letter_tile: list[int] = []
    for index, tile in enumerate(tiles):
        letter_tile.extend([index] * (2 if tile[0] == "D" else 1))
    covering = letter_tile[valley]
    if tiles[covering] == ("D", "ba") and letter_tile[valley + 1] == covering:
        left = letter_tile[valley - 1]
        absorb_left = tiles[left] == ("H",)
        after = valley + 2
        absorb_right = (
            after < len(child)
            and child[after] == "b"
            and tiles[letter_tile[after]] == ("V",)
        )
        start = left if absorb_left else covering
        end = letter_tile[after] if absorb_right else covering
        segment = [
            ("D", "ab") if absorb_left else ("V",),
            ("D", "ab") if absorb_right else ("H",),
        ]
    else:
        partner = letter_tile[valley + 1]
        release_left = tiles[covering] == ("D", "ab")
        release_right = tiles[partner] == ("D", "ab")
        start, end = covering, partner
        segment = (
            ([("H",)] if release_left else [])
            + [("D", "ba")]
            + ([("V",)] if release_right else [])
        )
    flipped = _pair_from_tiles(tiles[:start] + segment + tiles[end + 1 :])
    if flipped.child != child:
        raise AssertionError("involution altered the child word")
    return flipped


# -- the composition census ----------------------------------------------------


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def composition_child(parts: tuple[int, ...]) -> str:
    return "".join("a" * i + "b" * i for i in parts)


def composition_sign(parts: tuple[int, ...]) -> int:
    return -1 if (len(parts) - 1) % 2 else 1


def composition_parent(parts: tuple[int, ...]) -> ExpandedPair:
    """The unique good pair whose child encodes the composition.

    Each boundary valley between blocks is a contracted diagonal expanded as
    ba; each block of size >= 2 carries its top peak as a diagonal expanded
    as ab; size-1 blocks are absorbed by the boundary diagonals, except the
    single-block composition of 1 whose walk is the bare a,b pair.
    """
    tiles: list[tuple[str, ...]] = []
    count = len(parts)
    for t, size in enumerate(parts):
        first = t == 0
        last = t == count - 1
        if size >= 2:
            a_free = size - (0 if first else 1)
            b_free = size - (0 if last else 1)
            tiles += [("H",)] * (a_free - 1) + [("D", "ab")] + [("V",)] * (b_free - 1)
        elif first and last:
            tiles += [("H",), ("V",)]
        elif first:
            tiles.append(("H",))
        elif last:
            tiles.append(("V",))
        if not last:
            tiles.append(("D", "ba"))
    return _pair_from_tiles(tiles)


def _child_word(child: str) -> Word:
    return Word(symbols.a if letter == "a" else symbols.b for letter in child)


def good_pairs_sum(n: int) -> NcPolynomial:
    """Signed sum of the good children; equals c_n(a, b, ab-ba)."""
    return NcPolynomial(
        (_child_word(pair.child), pair.sign)
        for pair in all_pairs(n)
        if classify_pair(pair) is PairKind.GOOD
    )


# -- Dyck words and peak reduction ----------------------------------------------


def enumerate_dyck_words(semilength: int) -> list[str]:
    """All balanced words of the given semilength, lexicographically."""
    if semilength < 0:
        raise ValueError("semilength must be nonnegative")
    found: list[str] = []

    def extend(acc: list[str], opens: int, closes: int) -> None:
        if len(acc) == 2 * semilength:
            found.append("".join(acc))
            return
        if opens < semilength:
            acc.append("a")
            extend(acc, opens + 1, closes)
            acc.pop()
        if closes < opens:
            acc.append("b")
            extend(acc, opens, closes + 1)
            acc.pop()

    extend([], 0, 0)
    return found


def is_dyck_word(word: str) -> bool:
    height = 0
    for letter in word:
        if letter == "a":
            height += 1
        elif letter == "b":
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def dyck_reduce(word: str, keep_level0: bool = False) -> Word:
    """Collapse every peak ab to the letter x.

    With keep_level0 set, peaks whose opening letter starts at level 0 stay
    as the two letters a, b.  Degree is preserved either way.
    """
    if not is_dyck_word(word):
        raise ValueError(f"not a Dyck word: {word!r}")
    letters = []
    height = 0
    i = 0
    while i < len(word):
        if (
            word[i] == "a"
            and i + 1 < len(word)
            and word[i + 1] == "b"
            and (height > 0 or not keep_level0)
        ):
            letters.append(symbols.x)
            i += 2
        elif word[i] == "a":
            letters.append(symbols.a)
            height += 1
            i += 1
        else:
            letters.append(symbols.b)
            height -= 1
            i += 1
    return Word(letters)


def dyck_reduction_sum(order: int, keep_level0: bool = False) -> TruncatedSeries:
    """Sum of the reduced forms of all Dyck words of degree at most the order."""
    acc: dict[Word, int] = {}
    for semilength in range(order // 2 + 1):
        for word in enumerate_dyck_words(semilength):
            reduced = dyck_reduce(word, keep_level0)
            acc[reduced] = acc.get(reduced, 0) + 1
    return TruncatedSeries(NcPolynomial(acc.items()), order)


# -- verifiers -------------------------------------------------------------------


def verify_dyck_reduction(order: int) -> list[Report]:
    """Peak reduction sums to D; keeping level-0 peaks sums to 1 + aUb."""
    reports = []
    started = perf_counter()
    witness = first_mismatch(dyck_reduction_sum(order, False), D_series(order))
    reports.append(Report("dyck-D", witness is None, witness, perf_counter() - started))

    started = perf_counter()
    a_mono = NcPolynomial.monomial(symbols.a)
    b_mono = NcPolynomial.monomial(symbols.b)
    wrapped = 1 + a_mono * U_series(order) * b_mono
    witness = first_mismatch(dyck_reduction_sum(order, True), wrapped)
    reports.append(Report("dyck-aUb", witness is None, witness, perf_counter() - started))
    return reports


def verify_involution_suite(n_max: int) -> list[Report]:
    """Exhaustively check the involution and the composition census for n <= n_max."""
    reports = []
    for n in range(1, n_max + 1):
        reports.extend(_verify_involution_for(n))
    return reports


def _verify_involution_for(n: int) -> list[Report]:
    reports = []
    pairs = all_pairs(n)
    pair_set = set(pairs)
    bad = [pair for pair in pairs if classify_pair(pair) is PairKind.BAD]
    good = [pair for pair in pairs if classify_pair(pair) is PairKind.GOOD]
    degree = 2 * n

    # the involution is a sign-reversing, child-preserving, fixed-point-free
    # self-inverse map of the bad pairs into themselves
    started = perf_counter()
    witness = None
    for pair in bad:
        image = involution(pair)
        if not (
            image in pair_set
            and image.child == pair.child
            and image.sign == -pair.sign
            and image != pair
            and classify_pair(image) is PairKind.BAD
            and involution(image) == pair
        ):
            witness = Witness(degree, pair.child, "sign-reversing involution", "violated")
            break
    reports.append(
        Report(f"involution-n{n}", witness is None, witness, perf_counter() - started)
    )

    started = perf_counter()
    bad_total = NcPolynomial((_child_word(pair.child), pair.sign) for pair in bad)
    witness = first_mismatch(bad_total, NcPolynomial.zero())
    reports.append(
        Report(f"bad-cancellation-n{n}", witness is None, witness, perf_counter() - started)
    )

    started = perf_counter()
    witness = None
    expected = {
        composition_child(parts): (composition_parent(parts), composition_sign(parts))
        for parts in compositions(n)
    }
    by_child: dict[str, list[ExpandedPair]] = {}
    for pair in good:
        by_child.setdefault(pair.child, []).append(pair)
    if set(by_child) != set(expected):
        stray = sorted(set(by_child) ^ set(expected))[0]
        witness = Witness(degree, stray, "composition child", "missing or extra")
    else:
        for child, group in sorted(by_child.items()):
            want_pair, want_sign = expected[child]
            if len(group) != 1 or group[0] != want_pair or group[0].sign != want_sign:
                witness = Witness(degree, child, "one parent per composition", "violated")
                break
    reports.append(
        Report(f"good-census-n{n}", witness is None, witness, perf_counter() - started)
    )

    started = perf_counter()
    total = NcPolynomial((_child_word(pair.child), pair.sign) for pair in pairs)
    witness = first_mismatch(total, substitute_commutator(c_poly(n)))
    if witness is None:
        witness = first_mismatch(good_pairs_sum(n), substitute_commutator(c_poly(n)))
    reports.append(
        Report(f"children-sum-n{n}", witness is None, witness, perf_counter() - started)
    )
    return reports
