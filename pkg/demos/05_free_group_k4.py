"""Words in the free group of rank 11 that appears for four points."""

from affine_braids.a4_free import (
    FreeWord,
    cyclic_reduce,
    format_free,
    free_conjugate,
    multiply,
    invert,
    puncture_table,
    reduce,
)

model = puncture_table()
print("punctures:", model.puncture_count, "rank:", model.rank)
for label in model.puncture_labels[:4]:
    print("  puncture", label)

w = FreeWord((1, -2, 2, 3, -3, 5))
print("reduce:", format_free(reduce(w)))

a = FreeWord((4, 7, -1))
c = FreeWord((2, 11))
b = multiply(multiply(c, a), invert(c))
print("a =", format_free(a), " b =", format_free(b))
print("cyclically reduced b:", format_free(cyclic_reduce(b)))
print("conjugate:", free_conjugate(a, b))
print("a ~ a^-1:", free_conjugate(a, invert(a)))
