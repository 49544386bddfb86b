"""Exact and simulated outcomes of k-jump games on Galton-Watson trees."""

from .errors import BracketError, DomainError, HorizonError, InvalidOrder, NoConvergence
from .ladder import Ladder, c_ladder, f_deriv, f_eval
from .offspring import FiniteSupport, OffspringDistribution, Poisson, pgf, pgf_deriv
from .recursors import GameSpec, Variant, class_probs, g_eval, gamma_eval, h_eval, j_eval, system_residual_k2
from .simulate import (
    Label,
    LabelTable,
    SampledTree,
    label_game,
    mc_duration,
    mc_estimate,
    minimax,
    sample_tree,
)
from .solve import (
    OutcomeTriple,
    PhaseReport,
    duration_check,
    eta,
    eta_curve_extremum,
    h_slope_at_ck,
    horizon_sequence,
    lambda_c,
    outcomes,
    phase_report,
    poisson_slope,
    solve_chat,
    solve_ml,
    solve_nl,
)

__version__ = "0.1.0"
