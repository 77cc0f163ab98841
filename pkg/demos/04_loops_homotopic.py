"""Comparing loops of point configurations up to homotopy in the quotient."""

import numpy as np

from affine_braids import loop_tracer
from affine_braids.braid_core import format_braid
from affine_braids.center_quotient import center_shift, make_class

rng = np.random.default_rng(11)
loop, centers, coeffs = loop_tracer.random_trig_loop(5, 300, rng)
print("random loop word:", format_braid(loop_tracer.trace(loop)))
print(loop_tracer.validate(loop).summary())

# spinning the base configuration first changes the braid by the full twist only
spun = loop_tracer.rotation_loop(5, 720, base=loop.frames[0])
combined = loop_tracer.concatenate(spun, loop)
print("spun then loop ~ loop:", loop_tracer.loops_homotopic(combined, loop))
x = make_class(loop_tracer.trace(combined))
y = make_class(loop_tracer.trace(loop))
print("center shift:", center_shift(x, y))

# a loop where points 1 and 2 orbit each other once is not trivial
base = loop_tracer.generic_configuration(5)
swap = loop_tracer.pair_twist_loop(base, 1, 2, turns=1, samples=200)
still = loop_tracer.stationary_loop(base, 3)
print("pair twist ~ stationary:", loop_tracer.loops_homotopic(swap, still))

# sampling more finely changes nothing
print("refined trace equal:", loop_tracer.trace(loop_tracer.refine(loop)) == loop_tracer.trace(loop))
