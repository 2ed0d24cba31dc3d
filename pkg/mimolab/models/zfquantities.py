from dataclasses import asdict, dataclass

__all__ = ('ZfQuantities', 'ZfRealizedTerms')


@dataclass(frozen=True)
class ZfQuantities:
    lambda_: float
    p_e_bar: float
    sinr: float
    chi_tilde: float

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ZfRealizedTerms:
    """Per-trial powers at the victim user, all scaled by rho * lambda."""

    signal: float
    pilot_interference: float
    error_power: float
    sinr: float

    def to_dict(self):
        return asdict(self)
