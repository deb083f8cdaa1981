"""Exact algebra for (1+pw)-constacyclic codes over Z_{p^s} + u Z_{p^s}.

The heavy lifting lives in the C++ extension ``chainring._core``; this
wrapper converts its JSON payloads into dicts and its decimal-string counts
into Python ints.
"""

import json as _json

from chainring._core import (  # noqa: F401
    BoundExceededError,
    CapExceededError,
    InvalidInputError,
    NotAUnitError,
    NotSelfDualCompatibleError,
    factor_xn_minus_1,
)
from chainring import _core


def count_ideals(p, d, m):
    """Number of ideals of R_i + uR_i for residue degree d and m = p^k s."""
    return int(_core._count_ideals(p, d, m))


def omega(p, d, m):
    return int(_core._omega(p, d, m))


def psi(p, d, m):
    return int(_core._psi(p, d, m))


class System(_core.System):
    """One problem instance: factors, idempotents, rings and code machinery."""

    def context(self):
        return _json.loads(self._context())

    def count_ideals(self, i):
        return int(self._count_ideals(i))

    def count_codes(self):
        return int(self._count_codes())

    def enumerate_ideals(self, i, limit=0):
        return [_json.loads(s) for s in self._enumerate_ideals(i, limit)]

    def dual(self, code):
        return _json.loads(self._dual(_json.dumps(code)))

    def is_self_dual(self, code):
        return self._is_self_dual(_json.dumps(code))

    def count_self_dual(self):
        return int(self._count_self_dual())

    def self_dual_fixed_candidates(self, i):
        return [_json.loads(s) for s in self._self_dual_fixed_candidates(i)]

    def enumerate_self_dual(self, limit=0):
        return [_json.loads(s) for s in self._enumerate_self_dual(limit)]


__all__ = [
    "System",
    "factor_xn_minus_1",
    "count_ideals",
    "omega",
    "psi",
    "NotAUnitError",
    "InvalidInputError",
    "NotSelfDualCompatibleError",
    "CapExceededError",
    "BoundExceededError",
]
