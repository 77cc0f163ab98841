"""The k = 4 case: loops of four-point affine configurations form a free
group of rank 11, the fundamental group of a sphere with 12 punctures.

Generators are abstract indices 1..11; nothing here ties them to specific
punctures or to loops in the plane.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .braid_core import free_reduce
from .errors import BraidError, ParseError

RANK = 11


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > RANK:
                raise BraidError(f"free generator {x} out of range 1..{RANK}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __str__(self) -> str:
        return format_free(self)


def _word(w) -> FreeWord:
    return w if isinstance(w, FreeWord) else FreeWord(tuple(w))


def reduce(w: FreeWord | Iterable[int]) -> FreeWord:
    return FreeWord(free_reduce(_word(w).letters))


def multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    return reduce(_word(a).letters + _word(b).letters)


def invert(a: FreeWord) -> FreeWord:
    return reduce(tuple(-x for x in reversed(_word(a).letters)))


def cyclic_reduce(w: FreeWord) -> FreeWord:
    letters = reduce(w).letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return FreeWord(letters[lo:hi])


def free_conjugate(a: FreeWord, b: FreeWord) -> bool:
    """Conjugate iff the cyclic reductions are rotations of each other."""
    x, y = cyclic_reduce(_word(a)).letters, cyclic_reduce(_word(b)).letters
    if len(x) != len(y):
        return False
    if not x:
        return True
    # y is a rotation of x iff it occurs in x doubled
    doubled = x + x
    n = len(x)
    return any(doubled[i:i + n] == y for i in range(n))


@dataclass(frozen=True)
class PunctureModel:
    """Punctures of the four-point configuration sphere.

    One puncture per coincidence p_i = p_j (i < j) and orientation sign.
    """

    puncture_labels: tuple[tuple[int, int, int], ...]

    @property
    def puncture_count(self) -> int:
        return len(self.puncture_labels)

    @property
    def rank(self) -> int:
        # a sphere with n punctures has free fundamental group of rank n - 1
        return self.puncture_count - 1


def puncture_table() -> PunctureModel:
    labels = tuple((i, j, sign) for i, j in combinations(range(1, 5), 2) for sign in (1, -1))
    return PunctureModel(labels)


def parse_free(text: str, line: int = 1) -> FreeWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        try:
            letters.append(int(m.group()))
        except ValueError:
            raise ParseError(f"cannot read free-group letter {m.group()!r}", line, m.start() + 1) from None
    try:
        return FreeWord(tuple(letters))
    except BraidError as exc:
        raise ParseError(str(exc), line, 1) from exc


def format_free(w: FreeWord) -> str:
    return " ".join(str(x) for x in w.letters)
