"""Consensus core preferences module"""

from consensus_core.preferences.datatypes import MahonianTable
from consensus_core.preferences.datatypes import Preference
from consensus_core.preferences.datatypes import Profile
from consensus_core.preferences.distances import count_inversions
from consensus_core.preferences.distances import inversion_distance
from consensus_core.preferences.distances import pair_scan_distance
from consensus_core.preferences.factories import enumerate_preferences
from consensus_core.preferences.factories import profile_from_ballots
from consensus_core.preferences.mahonian import mahonian_cumulative
from consensus_core.preferences.mahonian import mahonian_table
from consensus_core.preferences.switches import apply_switch

__all__ = [
    "MahonianTable",
    "Preference",
    "Profile",
    "apply_switch",
    "count_inversions",
    "enumerate_preferences",
    "inversion_distance",
    "mahonian_cumulative",
    "mahonian_table",
    "pair_scan_distance",
    "profile_from_ballots",
]
