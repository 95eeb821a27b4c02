"""Presentation invariants and the cover consistency checks built on them."""

from .abelian import AbelianInvariants, abelian_invariants, merge
from .groups import BUILTIN_NAMES, FiniteGroup, builtin_group, builtin_groups
from .homcount import DEFAULT_BUDGET, BudgetExceeded, hom_count
from .snf import smith_decomposition, smith_normal_form
from .verify import (
    Check,
    VerificationReport,
    verify_core_double_cover,
    verify_cyclic_cover,
    verify_redundancy,
)
