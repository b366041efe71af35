import enum
from dataclasses import dataclass, field
from fractions import Fraction


class BoundMode(enum.Enum):
    EXACT = 'exact'
    ANALYTIC = 'analytic-bound'
    ASYMPTOTIC = 'asymptotic'


@dataclass(frozen=True)
class BoundReport:
    """A named bound value with the parameters it was evaluated at.

    value is an int or Fraction in exact mode and a float otherwise.
    raw_value keeps the unclamped value when a bound was clamped at zero.
    """
    name: str
    params: dict
    value: object
    mode: BoundMode
    vacuous: bool = False
    raw_value: object = None
    note: str = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        report = {
            'name': self.name,
            'params': dict(self.params),
            'value': self.value,
            'value_float': float(self.value),
            'mode': self.mode,
            'vacuous': self.vacuous,
        }
        if self.raw_value is not None:
            report['raw_value'] = self.raw_value
        if self.note:
            report['note'] = self.note
        if self.details:
            report['details'] = dict(self.details)
        return report

    @property
    def is_exact(self):
        return isinstance(self.value, (int, Fraction))


@dataclass(frozen=True)
class CriticalPoint:
    """Root d* of a rate bound, below which the bound is positive."""
    q: int
    kind: object
    d_star: float
    residual: float
    boundary: bool = False

    def to_dict(self):
        return {
            'q': self.q,
            'kind': self.kind,
            'd_star': self.d_star,
            'residual': self.residual,
            'boundary': self.boundary,
        }
