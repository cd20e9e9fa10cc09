"""
Combinatorics of the dihedral Coxeter system I2(m).

The group has generators ``s`` and ``t`` with ``(st)^m = e`` and 2m elements.
Every non-identity element has a unique reduced word, except the longest
element ``w0`` (length m) which has two.  Elements are stored in a canonical
form: the identity, or a pair (first letter, length), where the longest
element always records ``"s"`` as its first letter.

    >>> x = parse_element("st", 5)
    >>> x.word, x.length
    ('st', 2)
    >>> parse_element("ststs", 5) == parse_element("tstst", 5)
    True
    >>> [str(w) for w in elements(3)]
    ['e', 's', 't', 'st', 'ts', 'w0']
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

GENERATORS = ("s", "t")


class ElementParseError(ValueError):
    """Raised for text that does not denote an element of I2(m)."""


def other(g: str) -> str:
    return "t" if g == "s" else "s"


def _check_generator(g: str) -> None:
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}")


@dataclass(frozen=True)
class GroupParams:
    """Parameters of I2(m); only finite m >= 2 is supported."""

    m: int

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int):
            raise ValueError(f"m must be an integer, got {self.m!r}")
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")

    @property
    def order(self) -> int:
        return 2 * self.m


def _params(params: GroupParams | int) -> GroupParams:
    if isinstance(params, GroupParams):
        return params
    return GroupParams(params)


@dataclass(frozen=True)
class DihedralElement:
    """
    An element of I2(m) in canonical form.

    ``first`` is ``None`` exactly for the identity.  For the longest element
    (``length == m``) ``first`` is always ``"s"``.
    """

    m: int
    first: str | None
    length: int

    def __post_init__(self):
        GroupParams(self.m)
        if not 0 <= self.length <= self.m:
            raise ValueError(f"length {self.length} out of range for m={self.m}")
        if (self.length == 0) != (self.first is None):
            raise ValueError("identity must have no first letter and length 0")
        if self.first is not None:
            _check_generator(self.first)
        if self.length == self.m and self.first != "s":
            raise ValueError("longest element must be stored with first letter 's'")

    @classmethod
    def identity(cls, m: int) -> DihedralElement:
        return cls(m, None, 0)

    @classmethod
    def longest(cls, m: int) -> DihedralElement:
        return cls(m, "s", m)

    @classmethod
    def from_alternating(cls, m: int, first: str, length: int) -> DihedralElement:
        """Canonicalize the alternating word of ``length`` starting at ``first``."""
        if length == 0:
            return cls.identity(m)
        if length == m:
            return cls.longest(m)
        return cls(m, first, length)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def is_longest(self) -> bool:
        return self.length == self.m

    @property
    def word(self) -> str:
        """The canonical reduced word ("" for the identity)."""
        return _alternating(self.first, self.length)

    def reduced_words(self) -> list[str]:
        if self.is_identity:
            return [""]
        if self.is_longest:
            return [_alternating("s", self.m), _alternating("t", self.m)]
        return [self.word]

    def left_descents(self) -> set[str]:
        if self.is_longest:
            return set(GENERATORS)
        return {self.first} if self.first else set()

    def right_descents(self) -> set[str]:
        if self.is_longest:
            return set(GENERATORS)
        if self.is_identity:
            return set()
        return {self.word[-1]}

    def __str__(self) -> str:
        if self.is_identity:
            return "e"
        if self.is_longest:
            return "w0"
        return self.word

    def sort_key(self) -> tuple[int, int]:
        return (self.length, 0 if self.first in (None, "s") else 1)


def _alternating(first: str | None, length: int) -> str:
    if length == 0:
        return ""
    return "".join(first if k % 2 == 0 else other(first) for k in range(length))


def parse_element(text: str | Sequence[str], params: GroupParams | int) -> DihedralElement:
    """
    Parse ``"e"``, ``"w0"`` or an alternating word over ``{s, t}``.

    ``text`` may also be a sequence of single-letter tokens.
    """
    m = _params(params).m
    if isinstance(text, str):
        stripped = text.strip()
        if stripped == "e":
            return DihedralElement.identity(m)
        if stripped == "w0":
            return DihedralElement.longest(m)
        tokens = list(stripped)
    else:
        tokens = list(text)
    if not tokens:
        return DihedralElement.identity(m)
    for tok in tokens:
        if tok not in GENERATORS:
            raise ElementParseError(f"unknown token {tok!r} in {text!r}")
    for a, b in zip(tokens, tokens[1:]):
        if a == b:
            raise ElementParseError(f"word {''.join(tokens)!r} is not reduced")
    if len(tokens) > m:
        raise ElementParseError(
            f"word {''.join(tokens)!r} has length {len(tokens)} > m = {m}, not reduced"
        )
    return DihedralElement.from_alternating(m, tokens[0], len(tokens))


def mult_gen(side: str, g: str, w: DihedralElement) -> tuple[DihedralElement, int]:
    """
    Multiply ``w`` by the generator ``g`` on the given side.

    Returns the product and +1 if the length went up, -1 if it went down.
    """
    _check_generator(g)
    m = w.m
    if side == "left":
        if g in w.left_descents():
            if w.is_longest:
                # g * w0 is the length m-1 element starting with the other letter
                return DihedralElement.from_alternating(m, other(g), m - 1), -1
            return DihedralElement.from_alternating(m, other(g), w.length - 1), -1
        return DihedralElement.from_alternating(m, g, w.length + 1), 1
    if side == "right":
        if g in w.right_descents():
            if w.is_longest:
                # w0 * g ends in other(g); parity of m - 1 fixes its first letter
                first = other(g) if (m - 1) % 2 == 1 else g
                return DihedralElement.from_alternating(m, first, m - 1), -1
            return DihedralElement.from_alternating(m, w.first, w.length - 1), -1
        first = w.first if w.first is not None else g
        return DihedralElement.from_alternating(m, first, w.length + 1), 1
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def multiply_word(word: str, params: GroupParams | int) -> DihedralElement:
    """Evaluate an arbitrary (possibly non-reduced) word in the group."""
    m = _params(params).m
    w = DihedralElement.identity(m)
    for g in word:
        w, _ = mult_gen("right", g, w)
    return w


def _same_group(x: DihedralElement, y: DihedralElement) -> None:
    if x.m != y.m:
        raise ValueError(f"elements belong to different groups (m={x.m}, m={y.m})")


def bruhat_leq(x: DihedralElement, y: DihedralElement) -> bool:
    """Bruhat order; in a dihedral group x <= y iff x == y or l(x) < l(y)."""
    _same_group(x, y)
    return x == y or x.length < y.length


def _is_subword(small: str, big: str) -> bool:
    it = iter(big)
    return all(c in it for c in small)


@functools.lru_cache(maxsize=None)
def _reduced_words_by_search(w: DihedralElement) -> tuple[str, ...]:
    # every word of length l(w) evaluating to w; such words are reduced
    found = []
    for letters in itertools.product(GENERATORS, repeat=w.length):
        word = "".join(letters)
        if multiply_word(word, w.m) == w:
            found.append(word)
    return tuple(found)


def bruhat_leq_subword_oracle(x: DihedralElement, y: DihedralElement) -> bool:
    """Brute-force subword property: some reduced word of x sits inside one of y."""
    _same_group(x, y)
    xs = _reduced_words_by_search(x)
    ys = _reduced_words_by_search(y)
    return any(_is_subword(a, b) for a in xs for b in ys)


def elements(params: GroupParams | int) -> list[DihedralElement]:
    """All 2m elements by ascending length, s-first before t-first."""
    m = _params(params).m
    out = [DihedralElement.identity(m)]
    for k in range(1, m):
        out.append(DihedralElement(m, "s", k))
        out.append(DihedralElement(m, "t", k))
    out.append(DihedralElement.longest(m))
    return out


def iter_pairs(params: GroupParams | int) -> Iterator[tuple[DihedralElement, DihedralElement]]:
    elts = elements(params)
    return itertools.product(elts, elts)
