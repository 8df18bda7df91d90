import math
from dataclasses import dataclass, replace

MODES = ("timeseries", "database")
WINDOW_UNITS = ("symbols", "time")


class ConfigurationError(ValueError):
    """
    Raised for invalid mining parameters or configuration values
    """

    category = "E_CONFIG"


@dataclass(frozen=True)
class MiningParams:
    """
    Parameters of a mining run

    - mode: "timeseries" (symbol stream) or "database" (records)
    - prior: prior belief p in (0, 1)
    - selector: selector s in [0, 1]
    - ow: observation window, in symbols (integer >= 2) or in time units
      (window_unit = "time"); required in timeseries mode
    - window_unit: "symbols" or "time"
    - self_rules: pair a window head with later occurrences of its own symbol
    - confidence_threshold, bayes_factor_threshold: filter thresholds
    - minsup: minimum support of frequent rule mining, in (0, 1]
    - rng_seed: seed of all random draws
    """

    mode: str = "timeseries"
    prior: float = 0.5
    selector: float = 1.0
    ow: float | None = None
    window_unit: str = "symbols"
    self_rules: bool = True
    confidence_threshold: float = 0.5
    bayes_factor_threshold: float = 1.0
    minsup: float = 0.1
    rng_seed: int = 0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigurationError(
                f"Mode needs to be one of {MODES}, got '{self.mode}'"
            )
        if not 0 < self.prior < 1:
            raise ConfigurationError(
                f"The prior needs to be in the open interval (0, 1), got {self.prior}; "
                f"a prior of 0 or 1 saturates every belief"
            )
        if not 0 <= self.selector <= 1:
            raise ConfigurationError(
                f"The selector needs to be in [0, 1], got {self.selector}"
            )
        if self.window_unit not in WINDOW_UNITS:
            raise ConfigurationError(
                f"Window unit needs to be one of {WINDOW_UNITS}, got "
                f"'{self.window_unit}'"
            )
        if self.ow is not None:
            if self.window_unit == "symbols":
                if int(self.ow) != self.ow or self.ow < 2:
                    raise ConfigurationError(
                        f"An observation window in symbols needs to be an integer "
                        f">= 2, got {self.ow}"
                    )
                object.__setattr__(self, "ow", int(self.ow))
            elif not (math.isfinite(self.ow) and self.ow > 0):
                raise ConfigurationError(
                    f"An observation window in time units needs to be positive, got "
                    f"{self.ow}"
                )
        if not 0 < self.minsup <= 1:
            raise ConfigurationError(
                f"Minimum support needs to be in (0, 1], got {self.minsup}"
            )
        if self.confidence_threshold < 0 or self.bayes_factor_threshold < 0:
            raise ConfigurationError("Filter thresholds cannot be negative")

    def with_updates(self, **changes) -> "MiningParams":
        """
        Returns a copy with some parameters changed (validated again)

        :return: updated parameters
        :rtype: MiningParams
        """
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "prior": self.prior,
            "selector": self.selector,
            "ow": self.ow,
            "window_unit": self.window_unit,
            "self_rules": self.self_rules,
            "confidence_threshold": self.confidence_threshold,
            "bayes_factor_threshold": self.bayes_factor_threshold,
            "minsup": self.minsup,
            "rng_seed": self.rng_seed,
        }
