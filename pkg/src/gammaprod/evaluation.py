from __future__ import annotations

import enum
from dataclasses import dataclass


class Method(str, enum.Enum):
    PARTIAL = "partial"
    TAIL_CORRECTED = "tail_corrected"
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    CONTINUED_FRACTION = "continued_fraction"


@dataclass(frozen=True)
class Evaluation:
    """A numeric value together with how it was obtained.

    ``error_bound`` is an absolute bound on ``|value - exact|``.
    ``terms_used`` counts product factors, quadrature panels or
    continued-fraction levels depending on ``method``.
    """

    value: float
    error_bound: float
    terms_used: int
    method: Method

    def __post_init__(self):
        if not self.error_bound >= 0.0:
            raise ValueError(f"error_bound must be non-negative, got {self.error_bound}")
        if self.terms_used < 0:
            raise ValueError(f"terms_used must be non-negative, got {self.terms_used}")

    def __float__(self):
        return float(self.value)
