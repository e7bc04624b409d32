"""Numeric certificates for the three cosine-product identities used by the
determinant derivations.

Each check evaluates both sides in double precision and reports the
absolute error against a configured tolerance.  For k beyond ~20 the
products decay like 4**-k, so the suite switches from an absolute to a
relative tolerance anchored at the identity's generic magnitude scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_SIN_HALF_PI = (0.0, 1.0, 0.0, -1.0)


@dataclass(frozen=True)
class IdentityReport:
    k: int
    lhs: float
    rhs: float
    abs_error: float
    tolerance: float
    passed: bool


def sin_half_pi(j: int) -> float:
    """sin(j*pi/2) evaluated exactly from j mod 4.

    Avoids calling sin() on large arguments, where argument reduction in
    floating point would smear the exact zeros and units.
    """
    return _SIN_HALF_PI[j % 4]


def _report(k: int, lhs: float, rhs: float, atol: float, rtol: float, scale: float) -> IdentityReport:
    err = abs(lhs - rhs)
    tol = atol + rtol * scale
    return IdentityReport(k, lhs, rhs, err, tol, err <= tol)


def check_parity_identity(k: int, atol: float = 1e-12, rtol: float = 0.0) -> IdentityReport:
    """prod_{m=1..k} cos(2m*pi/(2k+1)) = (-1)^k * prod_{m=1..k} cos((2m-1)*pi/(2k+1))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    d = 2 * k + 1
    lhs = 1.0
    rhs = 1.0
    for m in range(1, k + 1):
        lhs *= math.cos(2 * m * math.pi / d)
        rhs *= math.cos((2 * m - 1) * math.pi / d)
    if k % 2 == 1:
        rhs = -rhs
    # Both sides have magnitude exactly 2**-k, the identity's natural scale.
    return _report(k, lhs, rhs, atol, rtol, 2.0 ** -k)


def check_halfrange_product(k: int, atol: float = 1e-12, rtol: float = 0.0) -> IdentityReport:
    """prod_{m=1..k} cos(m*pi/(k+1)) = sin((k+1)*pi/2) / 2**k.

    The right side is evaluated from the (k+1) mod 4 residue, never through
    floating sin at a large argument, so it is one of {0, +-2**-k} exactly.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    lhs = 1.0
    for m in range(1, k + 1):
        lhs *= math.cos(m * math.pi / (k + 1))
    rhs = sin_half_pi(k + 1) / 2.0 ** k
    return _report(k, lhs, rhs, atol, rtol, 2.0 ** -k)


def check_squared_product(k: int, atol: float = 1e-12, rtol: float = 0.0) -> IdentityReport:
    """(prod_{m=1..k} cos(2m*pi/(2k+1)))**2 = (1/4)**k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    d = 2 * k + 1
    p = 1.0
    for m in range(1, k + 1):
        p *= math.cos(2 * m * math.pi / d)
    lhs = p * p
    rhs = 4.0 ** -k
    return _report(k, lhs, rhs, atol, rtol, rhs)


_CHECKS = (check_parity_identity, check_halfrange_product, check_squared_product)


def identity_suite(k_max: int = 50, switch_k: int = 20,
                   atol: float = 1e-12, rtol: float = 1e-10) -> list[IdentityReport]:
    """Run all three identities for k in [1, k_max].

    Up to switch_k the comparison is absolute at ``atol``; beyond it the
    products are geometrically small and the comparison switches to
    ``rtol`` relative to each identity's scale.
    """
    reports = []
    for k in range(1, k_max + 1):
        for check in _CHECKS:
            if k <= switch_k:
                reports.append(check(k, atol=atol, rtol=0.0))
            else:
                reports.append(check(k, atol=0.0, rtol=rtol))
    return reports
