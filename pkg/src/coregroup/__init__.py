"""Core groups and cyclic branched cover presentations of codimension-two embeddings."""

from .covering import (
    T,
    Y,
    KernelSymbol,
    NotInKernelError,
    branched_presentation,
    direct_branched_presentation,
    expand_kernel_word,
    gk_image,
    kernel_presentation,
    rewrite_kernel_word,
    tau_power_conjugate,
)
from .diagrams import (
    Arc,
    Diagram,
    OrientationError,
    core_presentation,
    unoriented_wirtinger,
    wirtinger_presentation,
)
from .presentations import (
    IntegerMatrix,
    Presentation,
    add_free_generators,
    free_group,
    free_product,
    relator_matrix,
    simplify,
)
from .words import (
    Letter,
    Word,
    conjugate,
    cyclic_normalize,
    exponent_sum,
    format_word,
    free_reduce,
    invert,
    parse_word,
)

__version__ = "0.1.0"
