"""Cyclic and linear permutation statistics, shuffle sets, and exhaustive
checks of (cyclic) shuffle compatibility."""
from .bijections import (
    BijectionWitness,
    DistributionMismatch,
    build_theta,
    lifting_bijection,
    max_removal,
    max_removal_inv,
    split,
    swap_map,
    theta_prime,
)
from .compatibility import (
    CompatReport,
    LiftingReport,
    check_cyclic_compat,
    check_lifting_a,
    check_lifting_b,
    check_linear_compat,
)
from .patterns import avoidance_poly, avoiders, cyclic_contains
from .perm_core import (
    Cycle,
    canonical_cycle,
    restrict,
    rotations,
    shift_mod,
    standardize,
    standardize_cycle,
)
from .qpoly import QPoly
from .shuffles import (
    cyclic_shuffle_count,
    cyclic_shuffles,
    cyclic_shuffles_at,
    linear_shuffles,
    maj_shuffle_poly,
    q_binomial,
)
from .stats import (
    cdes_set_linear,
    cpk_set_linear,
    cyclic_stat,
    distribution,
    linear_stat,
)

__version__ = "0.1.0"
