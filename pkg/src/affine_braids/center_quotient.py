"""The quotient P_k / Z_k, i.e. the fundamental group of oriented affine
configurations of k >= 5 distinct points in the plane.

Z_k is generated by the full twist. Since the full twist has exponent sum
k(k-1) and exponent sum is a homomorphism, two pure braids can only agree
modulo the center through one candidate power of the full twist; that
candidate is then checked with a single normal-form comparison.

Conjugacy here lets the conjugator range over all of B_k, not only P_k.
That relation is coarser than conjugacy inside P_k/Z_k: a ``False`` answer
is definitive, a ``True`` answer means "conjugate in B_k modulo the center".
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .braid_core import (
    BraidWord,
    band_generator,
    compose,
    exponent_sum,
    full_twist,
    permutation_of,
    power,
    _check_same,
)
from .errors import BraidError, NotPureError, HypothesisWarning
from .garside import DEFAULT_SSS_CAP, conjugate_in_braid_group, words_equal

MIN_STRANDS = 5


@dataclass(frozen=True)
class CosetClass:
    """A pure braid read modulo the full twist."""

    representative: BraidWord
    hypothesis_met: bool = field(init=False)

    def __post_init__(self):
        perm = permutation_of(self.representative)
        if not perm.is_identity():
            raise NotPureError(perm)
        object.__setattr__(self, "hypothesis_met", self.strands >= MIN_STRANDS)

    @property
    def strands(self) -> int:
        return self.representative.strands

    def invariant(self) -> int:
        """Exponent sum reduced mod k(k-1); constant on each coset."""
        k = self.strands
        return exponent_sum(self.representative) % (k * (k - 1))

    def __mul__(self, other: "CosetClass") -> "CosetClass":
        return CosetClass(compose(self.representative, other.representative))


def make_class(w: BraidWord, warn: bool = True) -> CosetClass:
    cls = CosetClass(w)
    if warn and not cls.hypothesis_met:
        warnings.warn(
            f"k = {w.strands} < {MIN_STRANDS}: computing in P_k/Z_k, which is not "
            "identified with the loop group of affine configurations here",
            HypothesisWarning,
            stacklevel=2,
        )
    return cls


def identity_class(k: int) -> CosetClass:
    return CosetClass(BraidWord.identity(k))


def center_shift(x: CosetClass, y: CosetClass) -> int | None:
    """The unique m with x possibly equal to y * twist^m, or None if none exists."""
    _check_same(x.representative, y.representative)
    k = x.strands
    d = exponent_sum(x.representative) - exponent_sum(y.representative)
    q, r = divmod(d, k * (k - 1))
    return None if r else q


def cosets_equal(x: CosetClass, y: CosetClass) -> bool:
    m = center_shift(x, y)
    if m is None:
        return False
    shifted = compose(y.representative, power(full_twist(x.strands), m))
    return words_equal(x.representative, shifted)


def cosets_conjugate(x: CosetClass, y: CosetClass, cap: int = DEFAULT_SSS_CAP) -> bool:
    """Conjugacy modulo the center, with conjugators taken from all of B_k."""
    m = center_shift(x, y)
    if m is None:
        return False
    shifted = compose(y.representative, power(full_twist(x.strands), m))
    return conjugate_in_braid_group(x.representative, shifted, cap=cap)


# -- presentation -------------------------------------------------------------

Generator = tuple[int, int]
Relator = tuple[tuple[Generator, int], ...]


@dataclass(frozen=True)
class Presentation:
    strands: int
    generators: tuple[Generator, ...]
    relators: tuple[Relator, ...]
    # index of the relator that kills the full twist
    center_relator: int

    def sigma_word(self, relator: Relator) -> BraidWord:
        return relator_to_braid(relator, self.strands)

    def as_dict(self) -> dict:
        return {
            "strands": self.strands,
            "generators": [f"A_{i}_{j}" for i, j in self.generators],
            "relators": [
                {
                    "letters": [[i, j, e] for (i, j), e in r],
                    "text": format_relator(r),
                    "sigma": list(self.sigma_word(r).letters),
                    "kind": "center" if t == self.center_relator else "pure_braid",
                }
                for t, r in enumerate(self.relators)
            ],
        }


def relator_to_braid(relator: Relator, k: int) -> BraidWord:
    letters: list[int] = []
    for (i, j), e in relator:
        a = band_generator(i, j, k)
        letters.extend(power(a, e).letters)
    return BraidWord(k, letters)


def _inv(word: list[tuple[Generator, int]]) -> list[tuple[Generator, int]]:
    return [(g, -e) for g, e in reversed(word)]


def _a(p: int, q: int, e: int = 1) -> tuple[Generator, int]:
    return (p, q), e


def _pure_braid_relators(k: int) -> list[Relator]:
    """Relators A_rs^-1 A_ij A_rs = W, one per pair of generators with s < j.

    The right-hand side W follows the relative position of r, s, i, j.
    """
    relators = []
    for j in range(2, k + 1):
        for i in range(1, j):
            for s in range(2, j):
                for r in range(1, s):
                    if s < i or i < r:
                        rhs = [_a(i, j)]
                    elif s == i:
                        rhs = [_a(r, j), _a(i, j), _a(r, j, -1)]
                    elif i == r:
                        rhs = [_a(r, j), _a(s, j), _a(i, j), _a(s, j, -1), _a(r, j, -1)]
                    else:  # r < i < s < j
                        comm = [_a(r, j), _a(s, j), _a(r, j, -1), _a(s, j, -1)]
                        rhs = comm + [_a(i, j)] + _inv(comm)
                    lhs = [_a(r, s, -1), _a(i, j), _a(r, s)]
                    relators.append(tuple(lhs + _inv(rhs)))
    return relators


def _center_relator(k: int) -> Relator:
    return tuple(((i, j), 1) for j in range(2, k + 1) for i in range(1, j))


def emit_presentation(k: int) -> Presentation:
    """Band-generator presentation of P_k with the full twist added as a relator.

    Every relator is checked against the braid group before it is returned.
    """
    if k < 2:
        raise BraidError(f"presentation needs k >= 2, got {k}")
    gens = tuple((i, j) for j in range(2, k + 1) for i in range(1, j))
    relators = _pure_braid_relators(k)
    identity = BraidWord.identity(k)
    for r in relators:
        if not words_equal(relator_to_braid(r, k), identity):
            raise AssertionError(f"pure braid relator {format_relator(r)} fails in B_{k}")
    center = _center_relator(k)
    if not words_equal(relator_to_braid(center, k), full_twist(k)):
        raise AssertionError(f"center relator does not equal the full twist in B_{k}")
    relators.append(center)
    return Presentation(k, gens, tuple(relators), len(relators) - 1)


def format_relator(relator: Relator) -> str:
    out = []
    for (i, j), e in relator:
        tok = f"A_{i}_{j}"
        out.append(tok if e == 1 else f"{tok}^{e}")
    return " ".join(out)


def format_presentation(p: Presentation) -> str:
    lines = ["generators: " + " ".join(f"A_{i}_{j}" for i, j in p.generators)]
    lines += [f"relator: {format_relator(r)}" for r in p.relators]
    return "\n".join(lines)
