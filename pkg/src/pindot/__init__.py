"""Pinned dot products, incidence moments and sumsets over finite planes."""

from .errors import DirectionNotDetermined, NoQualifyingDirection, PreconditionError, VerificationError
from .ffield import FieldSpec, arith, elements, make_field, parse_field, subfield_elements
from .incidence import (
    MomentProfile,
    directional_second_moment,
    first_moment,
    incidence_count,
    moment_profile,
    total_second_moment,
)
from .pinned import PinnedWitness, best_direction, good_vector, pair_with_direction, pinned_pair, verify_imp
from .plane import (
    INFINITY,
    Direction,
    Line,
    Point,
    PointSet,
    difference_set,
    direction_of,
    direction_vector,
    directions_determined,
    dot,
    dot_set,
    line_through,
    on_line,
)
from .sumsets import (
    ScalarSet,
    aa_plus_aa_stats,
    complete_pair_check,
    full_field_pinned_sum,
    glibichuk_check,
    iterated_sumset,
    mult_subgroup,
    productset,
    subfield_example,
    sumset,
)

__version__ = "0.1.0"
