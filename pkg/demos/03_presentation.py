"""A presentation of P_k modulo its center in band generators A_ij."""

from affine_braids.center_quotient import emit_presentation, format_presentation, relator_to_braid
from affine_braids.braid_core import format_braid, full_twist
from affine_braids.garside import words_equal

p = emit_presentation(4)
print(format_presentation(p))

# every relator was checked when emitted; repeat one check by hand
center = p.relators[p.center_relator]
print("center relator as sigma word:", format_braid(relator_to_braid(center, 4)))
print("equals full twist:", words_equal(relator_to_braid(center, 4), full_twist(4)))

for k in range(3, 7):
    print(f"k = {k}: {len(emit_presentation(k).generators)} generators, "
          f"{len(emit_presentation(k).relators)} relators")
