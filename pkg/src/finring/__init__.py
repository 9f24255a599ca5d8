"""Finite noncommutative ring kernel and maximal-subring verification harness.

Rings are explicit Cayley tables over dense element indices; subrings and
ideals are membership masks.  On top of the table kernel sit closure/lattice
engines, conductor and primality predicates for maximal-subring pairs,
quotient-module and endomorphism-ring machinery, and a check suite that
exhaustively verifies the conductor theory over a corpus of small rings.

Hot kernels are numba-compiled with a pure-numpy fallback; set
``FINRING_NUMBA=0`` to force the fallback (see ``finring._kernels``).
"""

from ._kernels import ACTIVE_BACKEND
from .rings import (
    AxiomViolation,
    CapExceeded,
    InvalidRingError,
    RingTable,
    Subset,
    additive_order,
    center,
    centralizer,
    characteristic,
    check_ring_axioms,
    find_isomorphism,
    is_commutative,
    is_division_ring,
    is_domain,
    make_cyclic_ring,
    make_matrix_ring,
    make_product_ring,
    make_triangular_ring,
    matrix_entry_digits,
    opposite_ring,
    quotient_ring,
    scope_quotient,
    subring_as_ring,
)
from .substructures import (
    Side,
    additive_closure,
    annihilator,
    core_of,
    enumerate_ideals,
    enumerate_subrings,
    ideal_closure,
    idealizer,
    is_duo,
    is_ideal,
    is_maximal_subring,
    is_quasi_duo,
    is_subring,
    jacobson_radical,
    maximal_ideals,
    maximal_one_sided_above,
    maximal_subrings,
    subring_closure,
)
from .ideals import (
    ExtensionPair,
    conductor,
    conductor_masks,
    is_completely_prime_ideal,
    is_completely_prime_right_ideal,
    is_left_n_integral,
    is_n_integrally_closed,
    is_nilpotent_ideal,
    is_prime_ideal,
    is_prime_one_sided_ideal,
    is_right_n_integral,
    is_semiprime_ideal,
    is_square_closed,
    make_extension_pair,
    minimal_primes_over,
    prime_radical,
)
from .modules import (
    EndoRing,
    ModuleView,
    endomorphism_ring,
    is_left_primitive_ideal,
    is_right_primitive_ideal,
    is_semisimple_isotypic,
    is_simple_module,
    is_torsionfree_module,
    maximal_submodules,
    module_annihilator,
    phi_isomorphism_check,
    psi_embedding_check,
    quotient_module,
)
from .dsl import parse_ring_expr, parse_ring_table_file, parse_ring_table_text
from .harness import (
    CHECKS,
    Caps,
    Check,
    CheckResult,
    DEFAULT_CAPS,
    corpus_pairs,
    default_corpus,
    discover_extensions,
    emit_report,
    run_check,
    run_suite,
)

__version__ = "0.1.0"
