from dataclasses import dataclass
from typing import Optional

import numpy as np

__all__ = ('CsiQuality', 'CsiEstimate')


@dataclass(frozen=True)
class CsiQuality:
    Q: float


@dataclass(frozen=True, eq=False)
class CsiEstimate:
    h_hat: np.ndarray
    h_err: Optional[np.ndarray]
    beta: float
    Q: float
    c: float

    @property
    def cov_hat_scale(self) -> float:
        return self.c * self.Q * self.beta**2

    @property
    def cov_err_scale(self) -> float:
        return self.beta * (1.0 - self.c * self.Q * self.beta)

    def cov_hat(self, basis) -> np.ndarray:
        return self.cov_hat_scale * basis.projector()

    def cov_err(self, basis) -> np.ndarray:
        return self.cov_err_scale * basis.projector()
