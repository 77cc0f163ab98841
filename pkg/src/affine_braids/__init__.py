"""Pure braids, the quotient P_k/Z_k, and loops of affine point configurations."""

from .braid_core import (
    BraidWord,
    Permutation,
    band_generator,
    compose,
    exponent_sum,
    format_braid,
    full_twist,
    half_twist,
    inverse,
    is_pure,
    parse_braid,
    permutation_of,
)
from .center_quotient import (
    CosetClass,
    cosets_conjugate,
    cosets_equal,
    emit_presentation,
    make_class,
)
from .errors import (
    BraidError,
    HypothesisWarning,
    NotPureError,
    ParseError,
    ResourceLimitError,
    StrandMismatchError,
    TraceError,
)
from .garside import (
    GarsideNormalForm,
    conjugate_in_braid_group,
    cycling,
    decycling,
    normal_form,
    super_summit_set,
    words_equal,
)
from .loop_tracer import LoopTrajectory, loops_homotopic, rotation_loop, trace, validate

__version__ = "0.1.0"
