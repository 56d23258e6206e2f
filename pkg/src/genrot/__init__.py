"""Generalized rotation of binary words, its orbit statistics, and the
toggle dynamics on words with well-separated ones."""

__version__ = "0.1.0"

from .bitword import (
    BinaryWord,
    all_words,
    from_one_run_encoding,
    necklace_period,
    one_run_encoding,
    parse_word,
    reverse,
)
from .encoding import (
    EncodedPair,
    check_conjugacy,
    decode,
    decompose_space,
    encode,
    max_orbit_size,
    max_orbit_witness,
    orbit_size,
    theta,
)
from .grot import (
    ExtensionTrace,
    IndexDecomposition,
    Orbit,
    extension_trace,
    index_decomposition,
    orbit,
    rotate,
    rotate_inv,
)
from .orbitstats import (
    IntMultiset,
    check_alternative_expressions,
    check_corollary_column_sums,
    check_lemma_identities,
    check_reflection,
    check_theorem1,
    frequency_table,
    left_from_blocks,
    left_multiset,
    m_ab,
    m_table,
    right_multiset,
)
from .report import CheckReport, Verdict
from .toggle import (
    OrbitBoard,
    Snake,
    SnakeError,
    ToggleWord,
    check_orbit_bijection,
    check_phi_symmetry,
    check_snake_rotation,
    check_Z_symmetry,
    column_sums_via_frequency,
    decompose_X,
    decompose_Z,
    enumerate_X,
    enumerate_Y,
    enumerate_Z,
    find_snakes,
    orbit_board,
    phi,
    phi_orbit_size_fast,
    snake_tilde,
    toggle_at,
)
from .verify import SweepResult, run_sweep
