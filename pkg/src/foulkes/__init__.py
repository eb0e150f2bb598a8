"""Exact combinatorics of Foulkes characters and symmetric-group blocks.

Partitions, James' abacus (p-cores, weights, Nakayama labels), ordinary
character tables via Murnaghan-Nakayama, the Foulkes character h_n[h_a] in
the power-sum basis, fixed set partitions under order-p elements, and the
resulting decomposition-matrix column bounds, all in exact arithmetic.
"""

__version__ = "0.1.0"

from .abacus import AbacusState, BlockLabel, block_label, from_abacus, p_core, p_weight, to_abacus
from .bounds import (
    BoundsReport,
    FGammaSet,
    column_zero_predictions,
    f_gamma,
    maximal_members,
    ttt1_report,
)
from .chars import (
    MN_BACKEND,
    CharacterTable,
    ClassData,
    character_table,
    class_data,
    inner_product,
    mn_character,
)
from .partitions import (
    Partition,
    conjugate,
    dominates,
    hook_lengths,
    is_p_regular,
    partition_count,
    partitions_of,
)
from .perms import (
    GroupSpec,
    Permutation,
    closure,
    cycle_type,
    make_C,
    make_E,
    make_P,
    make_Q,
    make_R,
    make_z,
    normalizer_bruteforce,
)
from .plethysm import (
    FoulkesCharacter,
    PowerSumPolynomial,
    foulkes_char_value,
    foulkes_character,
    foulkes_class_function,
    foulkes_multiplicity,
    h_in_p,
    plethysm_h,
)
from .setparts import (
    SetPartition,
    TypeLabel,
    act,
    factorize,
    fixed_constructive,
    fixed_filter,
    omega_size,
    omega_stream,
    type_of,
    verify_lemmas,
)
