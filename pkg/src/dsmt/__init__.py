"""Plausible and paradoxical reasoning: DSm fusion on hyper-power sets.

Frames and propositions live in ``frame``, granules and their measures in
``mass``, combination rules in ``fusion``; ``entropy``, ``interval_model``,
``neutro`` and ``nfusion`` build on those.  ``dsmt`` on the command line
wraps the lot.
"""

from .errors import (
    ConditioningError, DSMTError, ExprSyntaxError, FrameError, FullConflict, GranuleError,
    TotalContradiction, UnknownLabel,
)
from .frame import (
    Frame, Inter, Proposition, Singleton, Union, enumerate_hyper_power_set, format_expr,
    hyper_power_masks, iis, irreducible_form, parse_expr, strength, to_canonical,
)
from .mass import (
    DomainMode, Granule, HyperPowerSet, PowerSet, belief, belief_table, core, is_bayesian,
    make_granule, mass_from_belief, pignistic_classical, pignistic_general, pignistic_weights,
    plausibility, vacuous,
)
from .fusion import (
    ConflictReport, FusionTable, bayes_fuse, condition_bel, condition_pl, dempster_combine,
    dsm_combine, dsm_combine_n, fusion_table, normalize,
)
from .entropy import (
    conditional_entropy, entropy_of_combined, generalized_entropy, joint_entropy, shannon,
)
from .interval_model import BinaryGranule, IntervalEvidence, appriou_dst, interval_to_bpa, solve_mstar
from .neutro import NValue, SubsetU, classify, parse_nvalue, parse_subset
from .nfusion import NItem, NReport, combine_report, fuse_reports, nvalue_to_granules

__version__ = "0.1.0"
