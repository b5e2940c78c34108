"""
*Randomised campaigns, witness words and certified bounds*
"""
from ._base_campaign_ import _base_campaign_
from .estimate_defect import estimate_defect, estimate_theta_subadditivity
from .check_invariance import check_invariance, invariance_bound
from .witness_words import witness_spec, default_witness_spec, witness_word, check_witness_growth, linear_independence_probe
from .commutator_witness import default_commutator_letters, witness_commutator_word
from .bounds import scl_lower_bound, norm_lower_bound
from .sampling import sample_word, sample_concatenable_pair
from . import reports
