"""Central desk-scale limits.

Every potentially exponential entry point checks one of these caps and
raises CapExceededError instead of silently starting a multi-hour run.
The CLI maps CapExceededError to exit code 3.
"""

ENUM_CELLS = 20  # (w-1)*(l-1) for exhaustive MMN enumeration: 2^20 structures
BRUTE_FORCE_SIZE = 24  # device count for the 2^n state-space oracle
COMPOSE_M = 12  # composition word length; resulting degree is 2^m
POSET_SH_M = 13
POSET_POINTWISE_M = 8
RANK_PROFILE_M = 20
ASYMPTOTIC_M = 24


class CapExceededError(ValueError):
    """A requested computation exceeds its configured desk-scale cap."""

    def __init__(self, what: str, value, cap):
        super().__init__(f"{what} = {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


def check(what: str, value, cap) -> None:
    if value > cap:
        raise CapExceededError(what, value, cap)
