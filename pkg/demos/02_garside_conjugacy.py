"""Normal forms, cycling, super summit sets and conjugacy in B_k."""

from affine_braids.braid_core import BraidWord, compose, format_braid, inverse
from affine_braids.garside import (
    conjugate_in_braid_group,
    cycling,
    decycling,
    normal_form,
    super_summit_set,
    words_equal,
)

# the braid relation s1 s2 s1 = s2 s1 s2: both are the half twist of B_3
a, b = BraidWord(3, [1, 2, 1]), BraidWord(3, [2, 1, 2])
print(normal_form(a), "|", normal_form(b), "| equal:", words_equal(a, b))

# a left normal form is Delta^p followed by permutation factors
x = BraidWord(4, [1, 1, -2, 3, 2, -1, 3])
nf = normal_form(x)
print("normal form:", nf, " inf", nf.infimum, "sup", nf.supremum)

# cycling moves the first factor to the back, decycling the last to the front
print("cycled:  ", cycling(nf))
print("decycled:", decycling(nf))

# the super summit set is a finite, conjugation invariant set of normal forms
sss = super_summit_set(x)
print("super summit set size:", len(sss))

# conjugate x by something and ask for it back
c = BraidWord(4, [2, -3, 1, 1])
y = compose(compose(c, x), inverse(c))
ok, wit = conjugate_in_braid_group(x, y, witness=True)
print("conjugate:", ok, " witness:", format_braid(wit))
print("witness checks out:", words_equal(compose(compose(wit, x), inverse(wit)), y))

# same exponent sum is necessary but not sufficient
print("s1 s2^-1 ~ identity?", conjugate_in_braid_group(BraidWord(3, [1, -2]), BraidWord(3, [])))
