"""Exact arithmetic for the two-parameter q-Eulerian polynomials E_{n,k}(alpha, beta, q).

Polynomials in q are plain coefficient lists of python ints (index = power
of q, trimmed, [] for the zero polynomial). See ``help(qeuler._core)`` for
the full operation list.
"""

import json as _json

from ._core import *  # noqa: F401,F403
from . import _core as _core

__version__ = _core.__version__


def verify(only=None, **ranges):
    """Run the identity verification suite and return the report as a dict.

    ``only`` selects checks by name (all of them by default); keyword
    arguments (n_max, ab_max, r_max, j_max, truncation, enum_cap) override
    the sweep bounds.
    """
    return _json.loads(_core.verify_report_json(list(only or []), **ranges))
