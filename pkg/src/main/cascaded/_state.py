from dataclasses import asdict, dataclass

REGIONS = ("phi1", "phi2", "phi3", "phi4")


@dataclass(frozen=True)
class FpSteadyState:
    """
    Steady-state amplitudes of the cascaded model.

    ``phi1``..``phi4`` are the per-length running-wave amplitudes of the four
    cavity regions: phi1 leaves mirror 1 towards the emitter, phi2 leaves the
    emitter towards mirror 2, phi3 returns from mirror 2 and phi4 travels
    from the emitter back to mirror 1. ``denom_N`` is the common denominator
    of the closed forms (``nan`` for oracle results).
    """

    phi1: complex
    phi2: complex
    phi3: complex
    phi4: complex
    phi0: complex
    phi_ref: complex
    phi_trans: complex
    denom_N: complex = complex("nan")

    def region(self, index: int) -> complex:
        """Return phi_index for index in 0..4."""
        if index == 0:
            return self.phi0
        if 1 <= index <= 4:
            return getattr(self, REGIONS[index - 1])
        raise IndexError(f"Region index must lie in 0..4, got {index}.")

    def as_dict(self) -> dict:
        return asdict(self)
