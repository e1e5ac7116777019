"""Dunkl parameter sets for a run.

A parameter string is either an explicit list (``1/2,1/3,1/4``) or
``random:SEED``. Random sets draw numerators and denominators uniformly from
[1, SAMPLE_BOUND] with a numpy generator seeded by (SEED, n), so every
dimension gets its own reproducible stream.
"""

from fractions import Fraction

import numpy as np
from loguru import logger

from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.algebra.rational import parse_rational
from dunkl_dirac.constants import SAMPLE_BOUND
from dunkl_dirac.exceptions import InvalidConfigError

RANDOM_PREFIX = "random:"


def sample_parameter_sets(n: int, count: int, seed: int, bound: int = SAMPLE_BOUND) -> list[ParameterSet]:
    """``count`` random positive rational parameter sets of length ``n``."""
    if count < 1:
        raise InvalidConfigError("parameter_sets", count, "at least one parameter set is required")
    rng = np.random.default_rng([seed, n])
    draws = rng.integers(1, bound, size=(count, n, 2), endpoint=True)
    return [ParameterSet(tuple(Fraction(int(num), int(den)) for num, den in row)) for row in draws]


def parse_seed(mu_text: str) -> int | None:
    """The seed of a ``random:SEED`` string, or None for an explicit list."""
    if not mu_text.startswith(RANDOM_PREFIX):
        return None
    text = mu_text.removeprefix(RANDOM_PREFIX)
    try:
        return int(text)
    except ValueError as e:
        raise InvalidConfigError("mu", mu_text, "seed must be an integer") from e


def parse_explicit(mu_text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(part) for part in mu_text.split(","))
    except ValueError as e:
        raise InvalidConfigError("mu", mu_text, str(e)) from e


def resolve_parameter_sets(mu_text: str, n: int, count: int) -> list[ParameterSet]:
    """The parameter sets a run uses at dimension ``n``.

    Raises:
        InvalidConfigError: If an explicit list has the wrong length or a
            non-positive entry, or the seed is malformed.
    """
    seed = parse_seed(mu_text)
    if seed is not None:
        sets = sample_parameter_sets(n, count, seed)
        logger.debug("Sampled {} parameter sets for n={}: {}", count, n, ", ".join(str(p) for p in sets))
        return sets
    values = parse_explicit(mu_text)
    if len(values) != n:
        raise InvalidConfigError("mu", mu_text, f"expected {n} parameters for n={n}, got {len(values)}")
    return [ParameterSet(values)]
