"""Gamma-function products, the variational hydrogen atom, and their numerical checks."""

from .errors import (
    BudgetExceededError,
    ConvergenceError,
    DomainError,
    GammaprodError,
    IdentityCheckError,
    PoleError,
    PreconditionError,
)
from .evaluation import Evaluation, Method
from .gamma_kernel import gamma, log_gamma, pochhammer
from .product_engine import GammaRatioSpec, ProductFamily, closed_form_target, evaluate, partial_product
from .variational_atom import TrialParams, UnitSystem, min_energy_analytic

__version__ = "0.1.0"
