"""Rational points of bounded height on hypersurfaces over F_q[t].

Polynomials, ring elements and matrices are passed as text, for example
``"x0*x2 + x1^2"`` or ``"t,1;1,t"``, and results come back the same way.
"""

import json

from ._core import (
    BudgetError,
    ConsistencyError,
    Error,
    ParseError,
    PreconditionError,
    auxiliary,
    bad_primes,
    beta,
    count,
    determinant,
    gcd,
    hermite,
    normalize,
    points,
    prime_count,
    primes,
    regime,
    thue_siegel,
)
from ._core import _run


def run(command, **config):
    """Runs a CLI command ("count", "aux" or "verify") in process.

    Keyword arguments use the config file keys. Returns the parsed records
    (or the verify report).
    """
    return json.loads(_run(command, json.dumps(config)))


__all__ = [
    "BudgetError",
    "ConsistencyError",
    "Error",
    "ParseError",
    "PreconditionError",
    "auxiliary",
    "bad_primes",
    "beta",
    "count",
    "determinant",
    "gcd",
    "hermite",
    "normalize",
    "points",
    "prime_count",
    "primes",
    "regime",
    "run",
    "thue_siegel",
]
