from enum import Enum


class Geometry(str, Enum):
    """Resonator geometry. Values double as CLI choices."""

    FABRY_PEROT = "fp"
    CHIRAL_RING = "ring"

    @classmethod
    def parse(cls, value) -> "Geometry":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"Unknown geometry '{value}'. Expected one of {[g.value for g in cls]}.") from None
