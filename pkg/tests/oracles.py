"""Brute-force reference procedures, kept independent of the library's algorithms."""

from __future__ import annotations

import itertools
from functools import lru_cache


# -- permutations ---------------------------------------------------------------

def permutation_by_transpositions(letters, k):
    """Final position of each strand, composing transposition dictionaries."""
    where = {s: s for s in range(1, k + 1)}  # strand -> current position
    for x in letters:
        i = abs(x)
        swap = {i: i + 1, i + 1: i}
        where = {s: swap.get(p, p) for s, p in where.items()}
    return tuple(where[s] for s in range(1, k + 1))


# -- word problem in B_3 by rewriting -------------------------------------------

def _symmetrized_rules(relators):
    """All (u, v) with u = v, from every cyclic rotation of each relator and its inverse."""
    rules = set()
    for r in relators:
        inv = tuple(-x for x in reversed(r))
        for rel in (r, inv):
            for t in range(len(rel)):
                c = rel[t:] + rel[:t]
                for cut in range(1, len(c)):
                    u = c[:cut]
                    v = tuple(-x for x in reversed(c[cut:]))
                    rules.add((u, v))
    return sorted(rules)


def braid_relators(k):
    rels = []
    for i in range(1, k - 1):
        # s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
        rels.append((i, i + 1, i, -(i + 1), -i, -(i + 1)))
    for i in range(1, k):
        for j in range(i + 2, k):
            # far commutation
            rels.append((i, j, -i, -j))
    return rels


@lru_cache(maxsize=None)
def rewriting_classes(k: int = 3, cap: int = 8):
    """Union-find over all words of length <= cap, closed under relator rewrites
    and free insertion/cancellation. Returns ``word -> class id``.

    For B_3 and words of length <= 6, cap 8 is enough to connect every pair
    of equal words (checked by the class count).
    """
    gens = [g for i in range(1, k) for g in (i, -i)]
    words = [w for n in range(cap + 1) for w in itertools.product(gens, repeat=n)]
    index = {w: n for n, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    rules = _symmetrized_rules(braid_relators(k))
    for w in words:
        n = len(w)
        me = index[w]
        for t in range(n - 1):
            if w[t] == -w[t + 1]:
                union(me, index[w[:t] + w[t + 2:]])
        for u, v in rules:
            m = len(u)
            if n - m + len(v) > cap:
                continue
            for t in range(n - m + 1):
                if w[t:t + m] == u:
                    union(me, index[w[:t] + v + w[t + m:]])
    return {w: find(index[w]) for w in words}


# -- free groups ------------------------------------------------------------------

def naive_reduce(letters):
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for t in range(len(letters) - 1):
            if letters[t] == -letters[t + 1]:
                del letters[t:t + 2]
                changed = True
                break
    return tuple(letters)


def free_conjugate_bruteforce(a, b, rank=11):
    """Shrink both words by single-letter conjugations, then search the
    equal-length conjugates of one core for the other."""

    def conj(w, x):
        return naive_reduce((x,) + w + (-x,))

    def core(w):
        w = naive_reduce(w)
        while len(w) >= 2 and w[0] == -w[-1]:
            w = conj(w, -w[0])
        return w

    ca, cb = core(a), core(b)
    if len(ca) != len(cb):
        return False
    seen = {ca}
    frontier = [ca]
    letters = [g for i in range(1, rank + 1) for g in (i, -i)]
    while frontier:
        nxt = []
        for w in frontier:
            for x in letters:
                z = conj(w, x)
                if len(z) == len(ca) and z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return cb in seen
