"""Lyndon words, the Chen-Fox-Lyndon factorization, and anti-Lyndon tools.

Letters are compared either in the standard integer order or in its inverse,
and the order is an explicit argument throughout: anti-Lyndon words (Lyndon
words for the inverse order) control both the greediness criterion of the
numeration systems and the fractional-power structure of the fixed points.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .errors import DomainError
from .words import ParamWord, Word


class LetterOrder(Enum):
    STANDARD = "standard"
    INVERSE = "inverse"


STANDARD = LetterOrder.STANDARD
INVERSE = LetterOrder.INVERSE


def _cmp_letters(a: int, b: int, order: LetterOrder) -> int:
    if order is INVERSE:
        a, b = b, a
    return (a > b) - (a < b)


def lex_cmp(x: Sequence[int], y: Sequence[int], order: LetterOrder = STANDARD) -> int:
    """Lexicographic comparison, -1/0/1.  In either order a proper prefix is
    smaller than the word it starts."""
    for a, b in zip(x, y):
        c = _cmp_letters(a, b, order)
        if c:
            return c
    return (len(x) > len(y)) - (len(x) < len(y))


def gen_cmp(x: Sequence[int], y: Sequence[int], order: LetterOrder = STANDARD) -> int:
    """Genealogical (length first, then lexicographic) comparison, -1/0/1."""
    if len(x) != len(y):
        return -1 if len(x) < len(y) else 1
    return lex_cmp(x, y, order)


def _border_lengths(w: Sequence[int]) -> list[int]:
    """Failure table: border[i] = longest proper border of w[:i+1]."""
    table = [0] * len(w)
    b = 0
    for i in range(1, len(w)):
        while b > 0 and w[i] != w[b]:
            b = table[b - 1]
        if w[i] == w[b]:
            b += 1
        table[i] = b
    return table


def smallest_period(w: Sequence[int]) -> int:
    if not w:
        raise DomainError("empty word has no period")
    return len(w) - _border_lengths(w)[-1]


def is_primitive(w: Sequence[int]) -> bool:
    """True when w is not a proper integer power of a shorter word."""
    if not w:
        raise DomainError("empty word is neither primitive nor a power")
    p = smallest_period(w)
    return p == len(w) or len(w) % p != 0


def conjugates(w: Sequence[int]) -> list[Word]:
    """All rotations of w, starting with w itself."""
    if not w:
        raise DomainError("empty word has no conjugates")
    t = tuple(w)
    return [t[i:] + t[:i] for i in range(len(t))]


def is_max_conjugate(w: Sequence[int]) -> bool:
    """True when w is >= all of its rotations in the standard order.

    Non-strict on purpose: a non-primitive word such as 1010 ties with one of
    its rotations and still counts as maximal.
    """
    t = tuple(w)
    return all(lex_cmp(t, r) >= 0 for r in conjugates(t))


def is_lyndon(w: Sequence[int], order: LetterOrder = STANDARD) -> bool:
    """Primitive and strictly minimal among its rotations for the order."""
    if not w:
        raise DomainError("empty word is not Lyndon")
    t = tuple(w)
    return is_primitive(t) and all(
        lex_cmp(t, r, order) <= 0 for r in conjugates(t)
    )


def is_anti_lyndon(w: Sequence[int]) -> bool:
    """Lyndon for the inverse order: primitive and maximal among rotations."""
    if not w:
        raise DomainError("empty word is not anti-Lyndon")
    return is_primitive(w) and is_max_conjugate(w)


def duval_factorization(w: Sequence[int], order: LetterOrder = STANDARD) -> list[Word]:
    """Chen-Fox-Lyndon factorization: the unique way to write w as a
    concatenation of Lyndon words (for the order) that never increases.

    Classical three-way comparison loop.  Running off the end of the word
    plays the role of the sentinel letter smaller than all others; it stays
    out of band rather than being appended.
    """
    if not w:
        raise DomainError("empty word has no factorization")
    t = tuple(w)
    n = len(t)
    out: list[Word] = []
    start = 0
    while start < n:
        i, j = start, start + 1
        while j < n and _cmp_letters(t[i], t[j], order) <= 0:
            i = start if _cmp_letters(t[i], t[j], order) < 0 else i + 1
            j += 1
        p = j - i
        while start <= i:
            out.append(t[start:start + p])
            start += p
    return out


def longest_anti_lyndon_prefix(w: Sequence[int]) -> Word:
    """Longest prefix of w that is anti-Lyndon: the first factor of the
    Chen-Fox-Lyndon factorization for the inverse order."""
    return duval_factorization(w, INVERSE)[0]


def anti_lyndon_root(c: ParamWord) -> Word:
    """Longest anti-Lyndon prefix of c_0 ... c_{k-2}."""
    if c.k < 2:
        raise DomainError("need an alphabet of size >= 2")
    return longest_anti_lyndon_prefix(c.digits[:-1])


def anti_lyndon_stream(c: ParamWord, length: int) -> Word:
    """First `length` digits of the periodic stream obtained by repeating
    anti_lyndon_root(c); these digits are the exponents of the longest
    fractional-power prefixes."""
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    root = anti_lyndon_root(c)
    return tuple(root[i % len(root)] for i in range(length))
