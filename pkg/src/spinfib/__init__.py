"""Double-recurrence Fibonacci numbers and spin-function grids, in exact arithmetic."""

from .grid import (
    BoundaryConvention,
    DomainError,
    Prop3Variant,
    SpinSeeds,
    double_fib,
    f_ab,
    grid_eval_closed,
    grid_eval_recurrence,
    grid_render,
    prop3_decompose,
)
from .kernel import (
    IndexOutOfBounds,
    KernelError,
    fib,
    fib_convolution,
    fib_pair,
    gfs_term,
    lucas,
    weighted_fib_sum,
)
from .sums import (
    Region,
    region_sum,
    square_sum_closed,
    sum_sequence,
    triangle_sum_closed,
    weighted_gfs_sum_closed,
)

__version__ = "0.1.0"
