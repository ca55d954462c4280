import re
from fractions import Fraction
from typing import Any, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator


class SurfacePoint(BaseModel):
    """A point of projective space, scaled so its first nonzero coordinate is 1."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coordinates: Tuple[Fraction, ...]

    @field_validator("coordinates", mode="before")
    @classmethod
    def _normalize(cls, value):
        coords = tuple(Fraction(v) for v in value)
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("a projective point needs a nonzero coordinate")
        return tuple(c / lead for c in coords)

    @classmethod
    def of(cls, *coordinates: Any) -> "SurfacePoint":
        return cls(coordinates=coordinates)

    @classmethod
    def parse(cls, text: str) -> "SurfacePoint":
        """Read ``1:0:0:1``, ``1,0,0,1`` or ``3/4 -2 1 1``."""
        parts = [p for p in re.split(r"[\s,:]+", text.strip()) if p]
        return cls(coordinates=[Fraction(p) for p in parts])

    def __len__(self) -> int:
        return len(self.coordinates)

    def __iter__(self):
        return iter(self.coordinates)

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coordinates) + ")"


def as_coordinates(point: Any) -> Sequence[Fraction]:
    """Coordinates of a SurfacePoint, or a raw sequence taken as is (no projective scaling)."""
    if isinstance(point, SurfacePoint):
        return point.coordinates
    return tuple(Fraction(v) for v in point)


class MembershipVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    on_surface: bool
    evaluated_rank: int
    generic_rank: int
