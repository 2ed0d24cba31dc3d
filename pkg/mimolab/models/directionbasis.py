from dataclasses import dataclass

import numpy as np

__all__ = ('DirectionBasis', 'ChannelDraw')


@dataclass(frozen=True, eq=False)
class DirectionBasis:
    A: np.ndarray
    delta: int
    c: float

    @property
    def M(self) -> int:
        return self.A.shape[0]

    def projector(self) -> np.ndarray:
        return self.A @ self.A.conj().T

    def to_beamspace(self, h: np.ndarray) -> np.ndarray:
        return self.A.conj().T @ h

    def from_beamspace(self, z: np.ndarray) -> np.ndarray:
        return self.A @ z


@dataclass(frozen=True, eq=False)
class ChannelDraw:
    h: np.ndarray
    z: np.ndarray
    beta: float
