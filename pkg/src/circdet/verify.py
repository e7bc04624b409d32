"""Executable verification sweeps: every invariant the library promises,
runnable as one deterministic, seeded suite.

Each check returns a CheckResult with pass/fail counts and a few failure
descriptions; ``run_all`` bundles them.  Checks call into the sibling
modules through their module objects so a test harness can substitute a
deliberately broken implementation and confirm the suite notices.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import binomial, circulant, trig
from .gaussint import GaussInt

_MAX_DETAILS = 5

UNIT_Z = (GaussInt(1, 0), GaussInt(-1, 0), GaussInt(0, 1), GaussInt(0, -1))


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, describe: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if describe and len(self.details) < _MAX_DETAILS:
                self.details.append(describe)


def _close(a: complex, b: complex, rtol: float, floor: float = 1.0) -> bool:
    return abs(a - b) <= rtol * max(floor, abs(a), abs(b))


def _random_gauss(rng: random.Random, bound: int) -> GaussInt:
    return GaussInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def check_ring_axioms(rng: random.Random, samples: int = 1000) -> CheckResult:
    """Associativity, commutativity, distributivity, conjugation, powers, division."""
    res = CheckResult("ring_axioms")
    bound = 10 ** 6
    for _ in range(samples):
        a = _random_gauss(rng, bound)
        b = _random_gauss(rng, bound)
        c = _random_gauss(rng, bound)
        ok = ((a + b) + c == a + (b + c)
              and (a * b) * c == a * (b * c)
              and a + b == b + a
              and a * b == b * a
              and a * (b + c) == a * b + a * c
              and (a * b).conjugate() == a.conjugate() * b.conjugate()
              and (a + b).conjugate() == a.conjugate() + b.conjugate())
        res.record(ok, f"ring axiom violated for {a}, {b}, {c}")
    for _ in range(200):
        a = _random_gauss(rng, 50)
        e1, e2 = rng.randint(0, 64), rng.randint(0, 64)
        res.record(a ** (e1 + e2) == (a ** e1) * (a ** e2),
                   f"power splitting failed for {a}^{e1}+{e2}")
    for _ in range(300):
        a = _random_gauss(rng, bound)
        b = _random_gauss(rng, bound)
        if not b:
            b = GaussInt(1, 1)
        res.record((a * b).exact_div(b) == a, f"exact_div(({a})*({b}), {b}) != {a}")
    return res


def check_oracle_equivalence(max_n: int = 64) -> CheckResult:
    """Closed-form determinants equal fraction-free elimination, exactly."""
    res = CheckResult("oracle_equivalence")
    for n in range(2, max_n + 1):
        for z in UNIT_Z:
            row = binomial.binomial_row(n, z)
            for orientation in (circulant.RIGHT, circulant.LEFT):
                closed = binomial.closed_form_det(n, z, orientation).value
                exact = circulant.bareiss_det(circulant.dense_matrix(row, orientation))
                res.record(closed == exact,
                           f"n={n} z={z} {orientation}: closed {closed} != exact {exact}")
    return res


def check_spectral_consistency(max_n: int = 24, rtol: float = 1e-6) -> CheckResult:
    """Family spectral determinant matches the closed form at relative rtol."""
    res = CheckResult("spectral_consistency")
    for n in range(2, min(max_n, 24) + 1):
        for z in UNIT_Z:
            for orientation in (circulant.RIGHT, circulant.LEFT):
                closed = binomial.closed_form_det(n, z, orientation).value.to_complex()
                spectral = binomial.det_spectral(n, z, orientation)
                ok = abs(spectral - closed) <= rtol * max(1.0, abs(closed))
                res.record(ok, f"n={n} z={z} {orientation}: {spectral} vs {closed}")
    return res


def check_eigenvalue_agreement(max_n: int = 32, rtol: float = 1e-8) -> CheckResult:
    """DFT-sum eigenvalues match the closed form, relative to the row mass.

    The comparison scale is max(1, sum|a_k|): a length-n sum cannot resolve
    eigenvalues below eps times its mass, so a per-eigenvalue relative check
    would be meaningless for the family's near-zero eigenvalues.
    """
    res = CheckResult("eigenvalue_agreement")
    zs = [z.to_complex() for z in UNIT_Z] + [0.6 + 0.8j]
    for n in range(2, min(max_n, 32) + 1):
        for z in zs:
            row = binomial.binomial_row(n, z)
            lam = circulant.eigenvalues(row)
            scale = max(1.0, float(np.abs(np.asarray(row, dtype=complex)).sum()))
            for m in range(n):
                closed = binomial.closed_eigenvalue(n, z, m)
                ok = abs(lam[m] - closed) <= rtol * scale
                res.record(ok, f"n={n} z={z} m={m}: dft {lam[m]} vs closed {closed}")
    return res


def check_pair_and_special(max_n: int = 33, rtol: float = 1e-9) -> CheckResult:
    """Eigenvalue pair products and the distinguished z=i eigenvalues."""
    res = CheckResult("pair_and_special_lambdas")
    z = 1j
    for n in range(2, min(max_n, 32) + 1):
        lam = [binomial.closed_eigenvalue(n, z, m) for m in range(n)]
        for m in range(1, n):
            lhs = lam[m] * lam[n - m]
            rhs = binomial.pair_product(n, m)
            ok = lhs == rhs or abs(lhs - rhs) <= rtol * max(abs(lhs), abs(rhs))
            res.record(ok, f"n={n} m={m}: pair {lhs} vs {rhs}")
        if n % 2 == 0:
            target = 2.0 ** (n - 1)
            res.record(_close(lam[0] * lam[n // 2], target, rtol),
                       f"n={n}: lam0*lam(n/2) = {lam[0] * lam[n // 2]} vs {target}")
            if n % 4 == 0:
                res.record(abs(lam[n // 4]) <= rtol * target,
                           f"n={n}: |lam(n/4)| = {abs(lam[n // 4])}")
    for n in range(3, min(max_n, 33) + 1, 2):
        lam0 = binomial.closed_eigenvalue(n, z, 0)
        target = (GaussInt(0, 2) ** ((n - 1) // 2)).to_complex()
        res.record(_close(lam0, target, rtol), f"n={n}: lam0 = {lam0} vs {target}")
    return res


def check_left_right_exchange(rng: random.Random, rows: int = 100, max_n: int = 12) -> CheckResult:
    """Direct elimination on both orientations obeys the exchange sign, exactly."""
    res = CheckResult("left_right_exchange")
    for idx in range(rows):
        n = 1 + idx % max_n
        row = [_random_gauss(rng, 5) for _ in range(n)]
        right = circulant.bareiss_det(circulant.dense_matrix(row, circulant.RIGHT))
        left = circulant.bareiss_det(circulant.dense_matrix(row, circulant.LEFT))
        expected = right if circulant.exchange_sign(n) == 1 else -right
        res.record(left == expected, f"n={n} row={row}: left {left} vs {expected}")
    return res


def check_random_row_spectral(rng: random.Random, max_n: int = 16,
                              rows_per_n: int = 3, rtol: float = 1e-8) -> CheckResult:
    """Generic DFT determinant agrees with elimination on random small rows."""
    res = CheckResult("random_row_spectral")
    for n in range(2, min(max_n, 16) + 1):
        for _ in range(rows_per_n):
            row = [_random_gauss(rng, 5) for _ in range(n)]
            exact = circulant.bareiss_det(circulant.dense_matrix(row)).to_complex()
            spectral = circulant.det_spectral(row)
            ok = abs(spectral - exact) <= rtol * max(1.0, abs(exact))
            res.record(ok, f"n={n} row={row}: {spectral} vs {exact}")
    return res


def check_rotation_invariance(rng: random.Random, rows: int = 24, max_n: int = 12) -> CheckResult:
    """Rotating the first row and counter-rotating the rows reproduces the matrix."""
    res = CheckResult("rotation_invariance")
    for idx in range(rows):
        n = 2 + idx % (max_n - 1)
        row = [_random_gauss(rng, 5) for _ in range(n)]
        s = rng.randrange(n)
        rotated = row[s:] + row[:s]
        base = circulant.dense_matrix(row)
        derived = circulant.dense_matrix(rotated)
        derived = [derived[(i + s) % n] for i in range(n)]
        same = derived == base
        det_match = (circulant.bareiss_det(derived) == circulant.bareiss_det(base))
        res.record(same and det_match, f"n={n} s={s} row={row}")
    return res


def check_row_properties(max_n: int = 64) -> CheckResult:
    """Row sums and symmetry of the family rows, exactly."""
    res = CheckResult("row_properties")
    for n in range(1, max_n + 1):
        ones = binomial.binomial_row(n, 1)
        res.record(sum(ones) == 2 ** (n - 1), f"n={n}: sum {sum(ones)}")
        res.record(ones == ones[::-1], f"n={n}: z=1 row not palindromic")
        alt = binomial.binomial_row(n, -1)
        res.record(all(alt[k] == (-1) ** k * ones[k] for k in range(n)),
                   f"n={n}: z=-1 row not alternating")
    return res


def check_conjugation_and_cross(max_n: int = 64) -> CheckResult:
    """Conjugation symmetry and the right/left cross identities."""
    res = CheckResult("conjugation_and_cross")
    i, mi = GaussInt(0, 1), GaussInt(0, -1)
    for n in range(2, max_n + 1):
        for orientation in (circulant.RIGHT, circulant.LEFT):
            lhs = binomial.closed_form_det(n, mi, orientation).value
            rhs = binomial.closed_form_det(n, i, orientation).value.conjugate()
            res.record(lhs == rhs, f"n={n} {orientation}: conj {lhs} vs {rhs}")
        res.record(binomial.cross_identities_hold(n), f"n={n}: cross identities")
    for n in range(2, min(max_n, 24) + 1):
        for z in (1j, 0.6 + 0.8j, 2 + 0j):
            res.record(binomial.conjugation_agrees(n, z),
                       f"n={n} z={z}: numeric conjugation")
    return res


def check_trig_identities(k_max: int = 50) -> CheckResult:
    res = CheckResult("trig_identities")
    for report in trig.identity_suite(k_max):
        res.record(report.passed,
                   f"k={report.k}: lhs={report.lhs} rhs={report.rhs} err={report.abs_error}")
    for k in range(1, k_max + 1):
        naive = math.sin((k + 1) * math.pi / 2.0)
        res.record(abs(trig.sin_half_pi(k + 1) - naive) <= 1e-12,
                   f"k={k}: residue-table sin vs naive sin")
    return res


def check_zero_row_and_dc_term(rng: random.Random, max_n: int = 16) -> CheckResult:
    """All-zero rows give an exact zero; lambda_0 is the plain row sum."""
    res = CheckResult("zero_row_and_dc_term")
    for n in (1, 2, 3, 5, 8, 13):
        if n > max_n:
            continue
        res.record(circulant.det_spectral([0.0] * n) == 0,
                   f"n={n}: zero row determinant not exactly 0")
    for n in range(2, min(max_n, 16) + 1):
        row = [complex(rng.uniform(-9, 9), rng.uniform(-9, 9)) for _ in range(n)]
        lam0 = circulant.eigenvalues(row)[0]
        plain = sum(row, start=0j)
        res.record(abs(lam0 - plain) <= 1e-12 * max(1.0, abs(plain)),
                   f"n={n}: lambda_0 {lam0} vs plain sum {plain}")
    return res


def run_all(max_n: int = 24, seed: int = 42, rtol: float = 1e-6) -> list[CheckResult]:
    """Run every invariant sweep, capped per check at its stated range."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    rng = random.Random(seed)
    return [
        check_ring_axioms(rng),
        check_oracle_equivalence(min(max_n, 64)),
        check_spectral_consistency(min(max_n, 24), rtol=rtol),
        check_eigenvalue_agreement(min(max_n, 32)),
        check_pair_and_special(min(max_n + 1, 33)),
        check_left_right_exchange(rng, max_n=min(max_n, 12)),
        check_random_row_spectral(rng, max_n=min(max_n, 16)),
        check_rotation_invariance(rng, max_n=max(2, min(max_n, 12))),
        check_row_properties(min(max_n, 64)),
        check_conjugation_and_cross(min(max_n, 64)),
        check_trig_identities(),
        check_zero_row_and_dc_term(rng, max_n=min(max_n, 16)),
    ]
