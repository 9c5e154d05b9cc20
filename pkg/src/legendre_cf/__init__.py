"""Exact criteria for p/q being a convergent of alpha, with a brute-force oracle."""

from .cf_engine import (
    CF,
    Convergent,
    both_expansions,
    companion_of,
    convergents_of,
    cylinder_interval,
    evaluate_cf,
    expand_canonical,
)
from .criteria import (
    CriterionWitness,
    compute_theta,
    consecutive_interval,
    legendre_check,
    legendre_interval,
    lehmer_raw_check,
    lucas_check,
    select_expansion,
    theorem_a_check,
)
from .exact_arith import (
    Rat,
    RatInterval,
    format_rat,
    interval_contains,
    interval_intersect,
    interval_union,
    mediant,
    parse_rat,
)
from .farey import FareyNeighbors, FareySeries, farey_neighbors, farey_series
from .generalizations import DujellaDecomp, FatouClass, FatouForm, dujella_decompose, fatou_classify
from .harness import EquivalenceReport, VerifyConfig, run_equivalence_report
from .kernels import BACKEND as KERNEL_BACKEND
from .oracle import Verdict, consecutive_pair_oracle, is_convergent_oracle

__version__ = "0.1.0"
