"""Consensus core experiments module"""

from consensus_core.experiments.bounds import flexible_lower_bound
from consensus_core.experiments.bounds import level1_upper_bound
from consensus_core.experiments.bounds import p_equal_approx
from consensus_core.experiments.bounds import p_equal_exact
from consensus_core.experiments.datatypes import GeneratorSpec
from consensus_core.experiments.datatypes import ImpartialParams
from consensus_core.experiments.datatypes import LowerBound
from consensus_core.experiments.datatypes import MallowsParams
from consensus_core.experiments.datatypes import Model
from consensus_core.experiments.datatypes import TrialStats
from consensus_core.experiments.datatypes import UpperBound
from consensus_core.experiments.generators import impartial_profile
from consensus_core.experiments.generators import mallows_probabilities
from consensus_core.experiments.generators import mallows_profile
from consensus_core.experiments.generators import reference_profile
from consensus_core.experiments.streams import trial_rng
from consensus_core.experiments.sweeps import Check
from consensus_core.experiments.sweeps import run_grid
from consensus_core.experiments.sweeps import run_sweep

__all__ = [
    "Check",
    "GeneratorSpec",
    "ImpartialParams",
    "LowerBound",
    "MallowsParams",
    "Model",
    "TrialStats",
    "UpperBound",
    "flexible_lower_bound",
    "impartial_profile",
    "level1_upper_bound",
    "mallows_probabilities",
    "mallows_profile",
    "p_equal_approx",
    "p_equal_exact",
    "reference_profile",
    "run_grid",
    "run_sweep",
    "trial_rng",
]
