"""Graph squares, spanning eulerian decompositions, and certified
hamiltonian-path search, with desk-scale verification sweeps."""

from ._kernel import BACKEND
from .cycles import CycleWitness, best_w_cycle, find_vw1w2_maximal_cycle, iter_cycles
from .decomposition import (
    block_forest,
    is_block_chain,
    is_dt_graph,
    is_two_connected,
    suspended_paths,
    v2,
)
from .eps import (
    DegreeConstraint,
    EpsDecomposition,
    JepsDecomposition,
    check_lemma1,
    check_theorem1,
    find_eps,
    find_jeps,
    normalize_eps,
    verify_eps,
)
from .graph import Graph, build
from .hamilton import (
    FkCertificate,
    FkQuery,
    HamCycleConstraint,
    check_corollary1,
    check_corollary2,
    check_fk,
    g_plus,
    ham_cycle_in_square,
    ham_path_in_square,
    verify_certificate,
)
from .powers import power, square
from .result import Outcome
from .verify import hunt_fk_failures, sweep

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CycleWitness",
    "DegreeConstraint",
    "EpsDecomposition",
    "FkCertificate",
    "FkQuery",
    "Graph",
    "HamCycleConstraint",
    "JepsDecomposition",
    "Outcome",
    "best_w_cycle",
    "block_forest",
    "build",
    "check_corollary1",
    "check_corollary2",
    "check_fk",
    "check_lemma1",
    "check_theorem1",
    "find_eps",
    "find_jeps",
    "find_vw1w2_maximal_cycle",
    "g_plus",
    "ham_cycle_in_square",
    "ham_path_in_square",
    "hunt_fk_failures",
    "is_block_chain",
    "is_dt_graph",
    "is_two_connected",
    "iter_cycles",
    "normalize_eps",
    "power",
    "square",
    "suspended_paths",
    "sweep",
    "v2",
    "verify_certificate",
    "verify_eps",
]
