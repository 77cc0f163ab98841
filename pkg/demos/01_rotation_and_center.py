"""Spinning k points one full turn gives the full twist, which is central."""

from affine_braids import loop_tracer
from affine_braids.braid_core import exponent_sum, format_braid, full_twist
from affine_braids.center_quotient import cosets_equal, identity_class, make_class
from affine_braids.garside import normal_form, words_equal

k = 5
loop = loop_tracer.rotation_loop(k, 144 * k)   # one counterclockwise turn about the centroid
print("frames:", len(loop), "points:", loop.k)

w = loop_tracer.trace(loop)                    # read off crossings along the x direction
print("traced word:", format_braid(w))
print("exponent sum:", exponent_sum(w))        # k(k-1) = 20 for k = 5

# the traced word and the standard full twist have the same normal form
print("normal form:", normal_form(w))
print("equals full twist:", words_equal(w, full_twist(k)))

# in P_k modulo its center, the rotation is trivial
print("trivial in quotient:", cosets_equal(make_class(w), identity_class(k)))

# the result does not depend on the projection direction
for theta in (0.3, 1.7, 4.0):
    print(f"direction {theta}:", words_equal(loop_tracer.trace(loop, direction=theta), w))
