"""takasym: exact Takeuchi/Bell/Catalan sequences, generating-function
identity verification, and high-precision asymptotics."""

from .errors import (BranchTrackingError, BudgetExceededError,
                     InsufficientDepthError, PrecisionStarvationError,
                     StructureFalsifiedError, TailBoundError, TakasymError)
from .numerics import (GaussianRational, LambdaPoly, Poly, binomial_general,
                       format_gaussian, format_rational, lagrange_interpolate,
                       parse_gaussian, parse_rational, poly_shift_argument)
from .sequences import (RecurrenceSpec, SequenceTable, bell_numbers,
                        bell_spec, catalan_numbers, catalan_partial_sums,
                        family_numbers, family_spec, run_general_recurrence,
                        takeuchi_numbers, takeuchi_spec)
from .tak_oracle import oracle_table, tak_count, tak_plain, tak_value
from .series import (TruncatedPowerSeries, series_catalan, series_compose,
                     series_exp, series_log, series_pow_exact,
                     series_sqrt_one_minus_4z, solve_y, verify_bell_egf,
                     verify_family_functional_equation, verify_identity,
                     verify_special_case_identity,
                     verify_takeuchi_functional_equation)
from .asymptotics import (CT_REFERENCE, HExpansion, WValue, bell_log_asymptotic,
                          bell_sum_approx, bell_sum_peak, conjecture1_log_t,
                          ct_reference, figure2_ratio, growth_gap,
                          growth_gap_exceeds_one, hat_t_log,
                          knuth_bounds_check, lambert_w, w_value)
from .ansatz import (AnsatzTable, DepthPlan, ExpPolyCombination,
                     FamilyAnsatzSpec, LambdaTable, TakeuchiAnsatzSpec,
                     build_f, extract_r_table, fit_exp_poly, fit_level,
                     h_partial_sums, h_series_family, lambda_table,
                     plan_depths, prepare_table, rl_series,
                     verify_f_consistency)
from .extrapolation import (ExtrapolationResult, accelerate, estimate_ct,
                            estimate_d_lambda, family_display_residual,
                            w_arithmetic_nodes)

__version__ = "0.1.0"
