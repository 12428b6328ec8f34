"""
Module for prokit configuration options.

NOTE: Do NOT use from imports as global variables might not work as you expect.

Only use:

import prokit.config

or

import prokit.config as whatever

The command line flags --seed, --tolerance, --format, --quiet and --debug overwrite these
globals before any command runs.
"""

import typing

import prokit.error as err

debug_output: bool = False
quiet_output: bool = False

# Used when a representation or automaton file does not name its semiring.
default_semiring: str = "rational"

# Absolute tolerance of equality in the complex semiring.
tolerance: float = 1e-12

seed: int = 20240611

output_format: str = "json"
valid_output_formats: list[str] = ["json", "pretty"]

# Random instances per law in the invariant suites.
check_trials: int = 200


class WorkspaceConfig:
    """
    Snapshot of the configuration a command runs with.

    Reports embed it so that every randomized result can be reproduced.
    """

    def __init__(self, default_semiring_tag: str, tol: float, rng_seed: int,
                 fmt: str):
        self.default_semiring = default_semiring_tag
        self.tolerance = tol
        self.seed = rng_seed
        self.output_format = fmt

    @staticmethod
    def current() -> "WorkspaceConfig":
        """
        Returns the configuration described by the module globals.
        """
        return WorkspaceConfig(default_semiring, tolerance, seed,
                               output_format)

    def validate(self):
        """
        Raises ConfigError if some value is out of range.
        """
        # Imported here, the semiring module reads this module at import time.
        from prokit.lib import semiring

        if not self.tolerance > 0:
            raise err.ConfigError(
                f"Tolerance must be positive, got {self.tolerance}.")
        if self.default_semiring not in semiring.names():
            raise err.ConfigError(
                f"Unknown default semiring '{self.default_semiring}'.")
        if self.output_format not in valid_output_formats:
            raise err.ConfigError(
                f"Unknown output format '{self.output_format}'.")

    def as_dict(self) -> dict[str, typing.Any]:
        """
        Returns the JSON form recorded in reports.
        """
        return {
            "default_semiring": self.default_semiring,
            "tolerance": self.tolerance,
            "seed": self.seed,
        }
