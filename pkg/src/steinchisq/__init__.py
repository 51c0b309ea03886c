"""Stein characterizing operators for weighted sums of independent chi-square laws.

Exact coefficient tables and operator images (rational arithmetic), an
exact moment oracle that checks the operators have zero expectation, a
sharded Monte Carlo sampler, and a bootstrap goodness-of-fit test.
"""
from .coefficients import (CoefficientTable, build_table, elementary_symmetric,
                           leave_one_out, mu_sequence)
from .errors import *  # noqa: F401,F403
from .gof import (FunctionBattery, GofResult, bootstrap_pvalue,
                  default_battery, stein_statistic)
from .moments import (MomentTable, central_moments, central_moments_direct,
                      chisq_raw_moments, cumulants, expect_operator,
                      expect_polynomial, moment_table, verify_ibp)
from .polynomial import Polynomial
from .simulation import MCEstimate, mc_expect_operator, sample
from .spec import WeightSpec
from .stein import (apply_centered, apply_noncentered, operator_polynomial,
                    single_chisq_operator)
from .testfuncs import TestFunction, derivative, evaluate, integrability_check

__version__ = "0.1.0"
