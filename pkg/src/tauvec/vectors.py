"""Small value types for sequences indexed from -1 (or 0)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class ShiftedSeq:
    """Immutable sequence whose first entry has index ``start``.

    ``v[i]`` returns the entry with mathematical index ``i``; indices outside
    the stored range read as zero, which matches how Betti numbers and
    τ-values vanish above the dimension.
    """

    values: tuple
    start: int = -1

    def __getitem__(self, i: int):
        k = i - self.start
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    @property
    def stop(self) -> int:
        """Largest stored index."""
        return self.start + len(self.values) - 1

    def indices(self) -> range:
        return range(self.start, self.stop + 1)

    def items(self):
        return zip(self.indices(), self.values)


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BettiVector(ShiftedSeq):
    field_name: str = "GF(2)"


@dataclass(frozen=True)
class TauVector(ShiftedSeq):
    """Exact τ-values (or σ/μ variants) with the ground-set size used."""

    n: int = 0
    field_name: str = "GF(2)"

    def as_strings(self) -> list[str]:
        return [fmt_rational(x) for x in self.values]

    def __str__(self):
        return "(" + ", ".join(self.as_strings()) + ")"


def tau_of(values: Sequence, n: int = 0, field_name: str = "GF(2)", start: int = -1) -> TauVector:
    return TauVector(tuple(Fraction(v) for v in values), start, n, field_name)
