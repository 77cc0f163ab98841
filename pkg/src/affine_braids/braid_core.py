"""Word-level arithmetic in the braid group B_k and its pure subgroup P_k.

A braid is stored as a freely reduced tuple of signed Artin generator
indices: ``+i`` is sigma_i, ``-i`` is its inverse. No braid relations are
applied here; equality in B_k is decided by :mod:`affine_braids.garside`.

Permutations use 1-based image sequences. For a braid, ``perm[i-1]`` is the
final position of the strand that starts at position ``i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidError, ParseError, StrandMismatchError


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs with a single stack pass."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Permutation(tuple):
    """A bijection of {1..k}, stored as its image sequence."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @property
    def size(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        if len(other) != len(self):
            raise StrandMismatchError(len(self), len(other))
        return Permutation(other[v - 1] for v in self)

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in the Artin generators of B_k."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"a braid needs at least 2 strands, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"letter {x} out of range for B_{self.strands}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def identity(cls, k: int) -> "BraidWord":
        return cls(k, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return inverse(self)

    def __pow__(self, n: int) -> "BraidWord":
        return power(self, n)

    def __str__(self) -> str:
        return format_braid(self)


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise StrandMismatchError(a.strands, b.strands)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-x for x in reversed(a.letters)))


def power(a: BraidWord, n: int) -> BraidWord:
    base = a if n >= 0 else inverse(a)
    return BraidWord(a.strands, base.letters * abs(n))


def product(words: Sequence[BraidWord], strands: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strands != strands:
            raise StrandMismatchError(strands, w.strands)
        letters.extend(w.letters)
    return BraidWord(strands, letters)


def permutation_of(a: BraidWord) -> Permutation:
    # track which strand sits at each position, then read off final positions
    at = list(range(1, a.strands + 1))
    for x in a.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    final = [0] * a.strands
    for pos, strand in enumerate(at, 1):
        final[strand - 1] = pos
    return Permutation(final)


def is_pure(a: BraidWord) -> bool:
    return permutation_of(a).is_identity()


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def half_twist(k: int) -> BraidWord:
    """Garside element: (s1)(s2 s1)(s3 s2 s1)...(s_{k-1}...s1)."""
    if k < 2:
        raise BraidError(f"half twist needs k >= 2, got {k}")
    letters = [i for top in range(1, k) for i in range(top, 0, -1)]
    return BraidWord(k, letters)


def full_twist(k: int) -> BraidWord:
    """Square of the half twist; generates the center of P_k and of B_k."""
    d = half_twist(k)
    return BraidWord(k, d.letters * 2)


def band_generator(i: int, j: int, k: int) -> BraidWord:
    """Pure braid A_ij: strand j loops once around strand i."""
    if not (1 <= i < j <= k):
        raise BraidError(f"band generator needs 1 <= i < j <= k, got i={i}, j={j}, k={k}")
    prefix = list(range(j - 1, i, -1))
    return BraidWord(k, prefix + [i, i] + [-x for x in reversed(prefix)])


# -- text syntax -----------------------------------------------------------

_HEADER = re.compile(r"B(\d+)$")
_SYMBOL = re.compile(r"[sS](\d+)(?:\^(-?\d+))?$")
_INT = re.compile(r"[+-]?\d+$")


def parse_braid(text: str, strands: int | None = None, line: int = 1) -> BraidWord:
    """Parse ``"B4: 1 -3 2"`` or ``"s1 s2 s1^-1"``.

    Without a ``B<k>`` header the strand count is ``strands`` if given,
    otherwise one more than the largest generator index (at least 2).
    """
    letters: list[int] = []
    header = None
    for m in re.finditer(r"[^\s:]+|:", text):
        tok, col = m.group(), m.start() + 1
        if tok == ":":
            continue
        if h := _HEADER.match(tok):
            if header is not None or letters:
                raise ParseError(f"unexpected header {tok!r}", line, col)
            header = int(h.group(1))
            continue
        if _INT.match(tok):
            letters.append(int(tok))
        elif s := _SYMBOL.match(tok):
            gen, exp = int(s.group(1)), int(s.group(2) or 1)
            letters.extend([gen if exp > 0 else -gen] * abs(exp))
        else:
            raise ParseError(f"cannot read braid token {tok!r}", line, col)
        if letters and letters[-1] == 0:
            raise ParseError("generator index 0 is not allowed", line, col)
    k = header or strands or max([abs(x) + 1 for x in letters] + [2])
    try:
        return BraidWord(k, letters)
    except BraidError as exc:
        raise ParseError(str(exc), line, 1) from exc


def format_braid(a: BraidWord) -> str:
    body = " ".join(str(x) for x in a.letters)
    return f"B{a.strands}: {body}" if body else f"B{a.strands}:"
