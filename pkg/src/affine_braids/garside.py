"""Left normal forms, cycling/decycling and super summit sets in B_k.

Uses the classical Garside structure: simple elements are the permutation
braids, one per element of S_k, with the half twist Delta as the Garside
element. Internally a simple element is a plain tuple of images (the same
convention as :func:`affine_braids.braid_core.permutation_of`); products are
read left to right, so ``(a * b)(i) = b(a(i))``.

A normal form ``Delta^p s_1 ... s_r`` is left-weighted: every atom that can
start ``s_{t+1}`` already finishes ``s_t``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .braid_core import (
    BraidWord,
    Permutation,
    compose,
    exponent_sum,
    half_twist,
    inverse,
    power,
    _check_same,
)
from .errors import BraidError, ParseError, ResourceLimitError

DEFAULT_SSS_CAP = 100_000

Perm = tuple[int, ...]


# -- simple elements --------------------------------------------------------

@lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


@lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[v - 1] for v in a)


def _inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a, 1):
        out[v - 1] = i
    return tuple(out)


@lru_cache(maxsize=None)
def _tau(a: Perm) -> Perm:
    """Conjugation by Delta: i -> n+1 - a(n+1-i)."""
    n = len(a)
    return tuple(n + 1 - a[n - i] for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _left_complement(a: Perm) -> Perm:
    """The simple element x with x * a = Delta."""
    return _mul(_delta(len(a)), _inv(a))


@lru_cache(maxsize=None)
def _starting_set(a: Perm) -> frozenset[int]:
    """Atoms sigma_j that a simple element can begin with (left descents)."""
    return frozenset(j for j in range(1, len(a)) if a[j - 1] > a[j])


@lru_cache(maxsize=None)
def _finishing_set(a: Perm) -> frozenset[int]:
    """Atoms sigma_j that a simple element can end with (right descents)."""
    inv = _inv(a)
    return frozenset(j for j in range(1, len(a)) if inv[j - 1] > inv[j])


def _swap_images(a: Perm, j: int) -> Perm:
    """a followed by the transposition (j, j+1)."""
    return tuple(j + 1 if v == j else j if v == j + 1 else v for v in a)


def _swap_positions(a: Perm, j: int) -> Perm:
    """The transposition (j, j+1) followed by a."""
    b = list(a)
    b[j - 1], b[j] = b[j], b[j - 1]
    return tuple(b)


@lru_cache(maxsize=None)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move atoms from the front of b to the back of a until the pair is left-weighted."""
    while True:
        movable = _starting_set(b) - _finishing_set(a)
        if not movable:
            return a, b
        j = min(movable)
        a = _swap_images(a, j)
        b = _swap_positions(b, j)


@lru_cache(maxsize=None)
def simple_word(a: Perm) -> tuple[int, ...]:
    """A positive Artin word for the permutation braid of ``a``."""
    letters = []
    while True:
        starts = _starting_set(a)
        if not starts:
            return tuple(letters)
        j = min(starts)
        letters.append(j)
        a = _swap_positions(a, j)


def all_simples(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


# -- normal forms -------------------------------------------------------------

@dataclass(frozen=True)
class GarsideNormalForm:
    """``Delta^infimum * factors[0] * ... * factors[-1]`` in left normal form.

    Factors are image sequences of permutation braids, never the identity
    and never Delta. Ordering follows :meth:`sort_key`.
    """

    strands: int
    infimum: int
    factors: tuple[Perm, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def sort_key(self):
        return (self.infimum, len(self.factors), self.factors)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def permutations(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(f) for f in self.factors)

    def word(self) -> BraidWord:
        """Rebuild a braid word: the half twist to the infimum, then each factor."""
        letters = list(power(half_twist(self.strands), self.infimum).letters)
        for f in self.factors:
            letters.extend(simple_word(f))
        return BraidWord(self.strands, letters)

    def is_left_weighted(self) -> bool:
        return all(
            _starting_set(b) <= _finishing_set(a)
            for a, b in zip(self.factors, self.factors[1:])
        )

    def __str__(self) -> str:
        return format_normal_form(self)


def _normalize(n: int, p: int, factors: list[Perm]) -> GarsideNormalForm:
    """Left-weight every adjacent pair, then absorb leading Deltas and drop trailing identities."""
    changed = True
    while changed:
        changed = False
        for t in range(len(factors) - 2, -1, -1):
            pair = _left_weight(factors[t], factors[t + 1])
            if pair != (factors[t], factors[t + 1]):
                factors[t], factors[t + 1] = pair
                changed = True
    delta, ident = _delta(n), _identity(n)
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == delta:
        lo += 1
    while hi > lo and factors[hi - 1] == ident:
        hi -= 1
    return GarsideNormalForm(n, p + lo, tuple(factors[lo:hi]))


def _atom(n: int, j: int) -> Perm:
    return _swap_positions(_identity(n), j)


def normal_form(a: BraidWord) -> GarsideNormalForm:
    n = a.strands
    p = 0
    factors: list[Perm] = []
    for x in a.letters:
        if x > 0:
            factors.append(_atom(n, x))
        else:
            # s^-1 = (left complement of s) * Delta^-1, and Delta^-1 moves left through tau
            p -= 1
            factors = [_tau(f) for f in factors]
            factors.append(_left_complement(_atom(n, -x)))
    return _normalize(n, p, factors)


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    _check_same(a, b)
    return normal_form(a) == normal_form(b)


def _tau_power(f: Perm, p: int) -> Perm:
    return _tau(f) if p % 2 else f


def conjugate_by_simple(nf: GarsideNormalForm, s: Perm) -> GarsideNormalForm:
    """``s^-1 * x * s`` for a simple element s."""
    p = nf.infimum
    head = _tau_power(_left_complement(s), p)
    return _normalize(nf.strands, p - 1, [head, *nf.factors, s])


def cycling(nf: GarsideNormalForm) -> GarsideNormalForm:
    return _cycling(nf)[0]


def decycling(nf: GarsideNormalForm) -> GarsideNormalForm:
    return _decycling(nf)[0]


def _cycling(nf: GarsideNormalForm) -> tuple[GarsideNormalForm, BraidWord]:
    """Cycled form and the word c with result = c * x * c^-1."""
    n = nf.strands
    if not nf.factors:
        return nf, BraidWord.identity(n)
    moved = _tau_power(nf.factors[0], nf.infimum)
    out = _normalize(n, nf.infimum, [*nf.factors[1:], moved])
    return out, inverse(BraidWord(n, simple_word(moved)))


def _decycling(nf: GarsideNormalForm) -> tuple[GarsideNormalForm, BraidWord]:
    n = nf.strands
    if not nf.factors:
        return nf, BraidWord.identity(n)
    last = nf.factors[-1]
    out = _normalize(n, nf.infimum, [_tau_power(last, nf.infimum), *nf.factors[:-1]])
    return out, BraidWord(n, simple_word(last))


def summit_representative(a: BraidWord) -> tuple[GarsideNormalForm, BraidWord]:
    """Reach the super summit set by cycling then decycling.

    Returns ``(y, c)`` with ``y`` in the super summit set of ``a`` and
    ``c * a * c^-1`` equal to ``y``. Each phase stops once the sequence of
    forms repeats without improving the bound it controls; cycling raises
    a non-maximal infimum within a bounded number of steps, so a repeat
    means the infimum is already maximal (and dually for decycling).
    """
    x = normal_form(a)
    c = BraidWord.identity(a.strands)
    while True:
        x, c, improved_inf = _run_phase(x, c, _cycling, lambda y: y.infimum)
        inf = x.infimum
        x, c, improved_sup = _run_phase(x, c, _decycling, lambda y: -y.supremum)
        if not (improved_inf or improved_sup) and x.infimum == inf:
            return x, c


def _run_phase(x, c, step, score):
    improved = False
    seen = {x}
    while True:
        y, d = step(x)
        c = compose(d, c)
        if score(y) > score(x):
            improved = True
            seen = {y}
        elif y in seen:
            return y, c, improved
        else:
            seen.add(y)
        x = y


def _summit_closure(
    a: BraidWord, cap: int
) -> dict[GarsideNormalForm, BraidWord]:
    """Every super summit element of a, each with a conjugator from a."""
    start, c0 = summit_representative(a)
    n = a.strands
    inf, sup = start.infimum, start.supremum
    simples = [s for s in all_simples(n) if s != _identity(n)]
    found = {start: c0}
    queue = deque([start])
    while queue:
        y = queue.popleft()
        cy = found[y]
        for s in simples:
            z = conjugate_by_simple(y, s)
            if z.infimum != inf or z.supremum != sup or z in found:
                continue
            # z = s^-1 y s, so its conjugator from a is s^-1 * cy
            found[z] = compose(inverse(BraidWord(n, simple_word(s))), cy)
            if len(found) > cap:
                raise ResourceLimitError(
                    f"super summit set exceeds {cap} elements (B_{n}, inf={inf}, sup={sup})"
                )
            queue.append(z)
    return found


def super_summit_set(a: BraidWord, cap: int = DEFAULT_SSS_CAP) -> tuple[GarsideNormalForm, ...]:
    """The super summit set of a, canonically sorted."""
    return tuple(sorted(_summit_closure(a, cap), key=GarsideNormalForm.sort_key))


def conjugate_in_braid_group(
    a: BraidWord,
    b: BraidWord,
    cap: int = DEFAULT_SSS_CAP,
    witness: bool = False,
):
    """Decide whether ``c * a * c^-1 == b`` for some braid c.

    With ``witness=True`` returns ``(verdict, c)``, where ``c`` is None when
    the braids are not conjugate.
    """
    _check_same(a, b)
    verdict, c = False, None
    if exponent_sum(a) == exponent_sum(b):
        yb, cb = summit_representative(b)
        ya, _ = summit_representative(a)
        if (ya.infimum, ya.supremum) == (yb.infimum, yb.supremum):
            closure = _summit_closure(a, cap)
            if yb in closure:
                verdict = True
                # yb = ca a ca^-1 = cb b cb^-1
                c = compose(inverse(cb), closure[yb])
                shorter = normal_form(c).word()
                if len(shorter) < len(c):
                    c = shorter
    return (verdict, c) if witness else verdict


# -- text rendering -----------------------------------------------------------

def format_normal_form(nf: GarsideNormalForm) -> str:
    parts = [f"D^{nf.infimum}"]
    parts += [" ".join(map(str, f)) for f in nf.factors]
    return " | ".join(parts)


def parse_normal_form(text: str, strands: int | None = None, line: int = 1) -> GarsideNormalForm:
    """Inverse of :func:`format_normal_form`. Input must already be a normal form.

    A bare ``D^p`` carries no strand count, so ``strands`` is required then.
    """
    chunks = [c.strip() for c in text.strip().split("|")]
    head = chunks[0]
    if not head.startswith("D^"):
        raise ParseError(f"normal form must start with 'D^p', got {head!r}", line, 1)
    try:
        p = int(head[2:])
    except ValueError:
        raise ParseError(f"bad infimum {head[2:]!r}", line, 3) from None
    factors = []
    for c in chunks[1:]:
        try:
            factors.append(tuple(Permutation(int(v) for v in c.split())))
        except (ValueError, BraidError) as exc:
            raise ParseError(f"bad factor {c!r}: {exc}", line, text.find(c) + 1) from None
    sizes = {len(f) for f in factors}
    if len(sizes) > 1:
        raise ParseError("factors have different sizes", line, 1)
    if sizes:
        n = sizes.pop()
        if strands is not None and strands != n:
            raise ParseError(f"factors have {n} strands, expected {strands}", line, 1)
    elif strands is None:
        raise ParseError("strand count cannot be inferred from a bare Delta power", line, 1)
    else:
        n = strands
    nf = GarsideNormalForm(n, p, tuple(factors))
    if _normalize(n, p, list(factors)) != nf:
        raise ParseError("factors are not in left normal form", line, 1)
    return nf
