"""Online coloring of triangle-free graphs of bounded tree-width, matching
adversaries, and exhaustive oracles to check both."""

from .adversary import (
    AdversaryResult,
    ForcingState,
    build_forced,
    build_kfree_adversary,
    extend_forcing,
    forcing_bound,
    transcript,
)
from .config import Caps, SizeError, get_caps
from .decomposition import (
    DecompositionError,
    NicePathDecomposition,
    PathDecomposition,
    RootedNiceTreeDecomposition,
    TreeDecomposition,
    ValidationReport,
    assert_nice_path,
    make_nice,
    normalize_rooted,
    root_leaf_paths,
    validate,
    width,
)
from .generate import gen_random_instance
from .graph import (
    Graph,
    InputError,
    enumerate_independent_sets,
    is_clique_free,
    is_independent,
    is_proper,
)
from .offline import color_via_tree_decomposition
from .online import (
    ContractViolation,
    FirstFit,
    ForbiddenReport,
    NoQualifyingColorError,
    OnlineAlgorithm,
    RevealStep,
    TriangleFreeColoring,
    VICTIMS,
    count_bound_check,
    first_fit_choose,
    forbidden_colors,
    is_valid_coloring,
    make_victim,
    palette_size,
    paper_choose,
    run_online,
)
from .oracles import chromatic_number_exact, treewidth_exact
from .pace import read_pace_gr, read_pace_td, write_pace_gr, write_pace_td

__version__ = "0.1.0"
