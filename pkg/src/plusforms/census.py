"""Discriminant sieves, class-number batches, and density censuses.

The bulk class-number engine enumerates every reduced positive-definite
form (a, b, c) with discriminant in a target window and accumulates the
counts with strided numpy slice additions, so the per-form cost is a C
loop rather than a Python one.  Primitivity is enforced with a Mobius
inclusion-exclusion over gcd(a, b).  The per-discriminant route in
class_numbers stays the oracle; the tests hold the two against each other.

Ranges are processed in fixed-size chunks whose layout does not depend on
the worker count, so results are bit-identical no matter how the work is
distributed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .class_numbers import _factorize, class_number_of_field

_CHUNK = 1 << 18

NINE_OVER_8PI2 = "0.11398"
NINE_OVER_16PI2 = "0.05699"


class BridgeViolationError(AssertionError):
    """A discriminant where the coefficient test and the class-number test
    disagree; this is a build-failing bug, not a data condition."""

    def __init__(self, d: int):
        self.discriminant = d
        super().__init__("bridge violated at D = %d" % d)


def starstar_ok(m: int, n: int) -> bool:
    """Arithmetic compatibility of the progression D = m mod N:
    every odd prime dividing gcd(m, N) must not divide m twice, and an even
    N must have 4 | N with m = 1 mod 4, or 16 | N with m = 8, 12 mod 16."""
    if m < 1 or n < 1:
        raise ValueError("m and N must be positive")
    g = gcd(m, n)
    for p, _ in _factorize(g):
        if p % 2 and m % (p * p) == 0:
            return False
    if n % 2 == 0:
        if n % 4 == 0 and m % 4 == 1:
            return True
        if n % 16 == 0 and m % 16 in (8, 12):
            return True
        return False
    return True


def _squarefree_flags(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[0] = False
    for p in range(2, isqrt(limit) + 1):
        flags[p * p::p * p] = False
    return flags


def fundamental_negative_mask(x: int) -> np.ndarray:
    """mask[j] (1 <= j < x) says whether D = -j is a fundamental discriminant."""
    sf = _squarefree_flags(x)
    j = np.arange(x, dtype=np.int64)
    mask = np.zeros(x, dtype=bool)
    odd = (j % 4 == 3) & sf[:x]
    mask |= odd
    quarters = j // 4
    four = (j % 4 == 0) & (j > 0) & np.isin(quarters % 4, (1, 2)) & sf[quarters]
    mask |= four
    mask[0] = False
    return mask


def fundamental_positive_mask(x: int) -> np.ndarray:
    """mask[d] (1 <= d < x) says whether d is a fundamental discriminant."""
    sf = _squarefree_flags(x)
    d = np.arange(x, dtype=np.int64)
    mask = np.zeros(x, dtype=bool)
    mask |= (d % 4 == 1) & sf[:x]
    quarters = d // 4
    mask |= (d % 4 == 0) & (d > 0) & np.isin(quarters % 4, (2, 3)) & sf[quarters]
    mask[0] = False
    return mask


def n2minus(x: int, m: int, n: int) -> int:
    """Number of fundamental discriminants D with -x < D < 0, D = m mod N."""
    if x < 1 or n < 1 or m < 0:
        raise ValueError("x and N must be positive, m nonnegative")
    if n > 1 and (m < 1 or not starstar_ok(m, n)):
        import warnings

        warnings.warn("progression (%d mod %d) fails the compatibility "
                      "condition; the count is still well-defined" % (m, n))
    mask = fundamental_negative_mask(x)
    j = np.arange(x, dtype=np.int64)
    return int(np.count_nonzero(mask & ((-j) % n == m % n)))


# -- bulk primitive class numbers -------------------------------------------


@lru_cache(maxsize=None)
def _mobius_divisors(g: int) -> tuple[tuple[int, int], ...]:
    # (e, mu(e)) over squarefree divisors e of g
    out = [(1, 1)]
    for p, _ in _factorize(g):
        out += [(e * p, -mu) for e, mu in out]
    return tuple(out)


def _count_chunk(lo: int, hi: int) -> np.ndarray:
    """h(-d) for d in (lo, hi] at index d - lo - 1 (zero off 0,3 mod 4)."""
    counts = np.zeros(hi - lo, dtype=np.int64)
    for a in range(1, isqrt(hi // 3) + 1):
        four_a = 4 * a
        for beta in range(a + 1):
            bb = beta * beta
            cmax = (hi + bb) // four_a
            if cmax < a:
                continue
            cmin = max(a, -(-(lo + 1 + bb) // four_a))
            starts = [cmin] if beta in (0, a) else [cmin, max(cmin, a + 1)]
            for e, mu in _mobius_divisors(gcd(a, beta) if beta else a):
                step = four_a * e
                for c_from in starts:
                    c0 = c_from if e == 1 else -(-c_from // e) * e
                    if c0 > cmax:
                        continue
                    first = four_a * c0 - bb - lo - 1
                    last = four_a * (c0 + (cmax - c0) // e * e) - bb - lo - 1
                    counts[first:last + 1:step] += mu
    return counts


def class_number_table(limit: int, workers: int = 1) -> np.ndarray:
    """h(-d) for 1 <= d <= limit (index d - 1), chunked deterministically."""
    spans = [(lo, min(lo + _CHUNK, limit)) for lo in range(0, limit, _CHUNK)]
    if workers > 1 and len(spans) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_chunk_star, spans))
    else:
        parts = [_count_chunk(lo, hi) for lo, hi in spans]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def _count_chunk_star(span: tuple[int, int]) -> np.ndarray:
    return _count_chunk(*span)


# -- the census ---------------------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    x: int
    n2minus_count: int
    n2minus_density: Fraction
    nonvanishing_count: int
    nonvanishing_density: Fraction
    ratio_nonvanishing_to_n2minus: Fraction | None

    def to_json_dict(self) -> dict:
        ratio = self.ratio_nonvanishing_to_n2minus
        return {
            "x": self.x,
            "n2minus_count": self.n2minus_count,
            "n2minus_density": "%.6f" % float(self.n2minus_density),
            "nonvanishing_count": self.nonvanishing_count,
            "nonvanishing_density": "%.6f" % float(self.nonvanishing_density),
            "ratio_nonvanishing_to_n2minus":
                None if ratio is None else "%.6f" % float(ratio),
            "reference_densities": {
                "nine_over_8pi2": NINE_OVER_8PI2,
                "nine_over_16pi2": NINE_OVER_16PI2,
            },
        }


def _census_population(x: int):
    """Fundamental D with 0 < D < x, D = 1 mod 3, plus the discriminant of
    Q(sqrt(-D)) for each."""
    mask = fundamental_positive_mask(x)
    d = np.arange(x, dtype=np.int64)
    mask &= d % 3 == 1
    ds = d[mask]
    quarters = ds // 4
    field = np.where(ds % 4 == 1, -4 * ds,
                     np.where(quarters % 4 == 2, -ds, -quarters))
    return ds, field


def nonvanishing_census(x: int, workers: int = 1) -> CensusReport:
    """Count fundamental D = 1 mod 3 in (0, x) whose imaginary quadratic
    class number h(-D) is prime to 3, against the negative-side progression
    count N_2^-(x, 1, 3)."""
    if x < 12:
        raise ValueError("x must be at least 12")
    ds, field = _census_population(x)
    table = class_number_table(int((-field).max()) if len(ds) else 0,
                               workers=workers)
    h = table[-field - 1]
    nonvanishing = int(np.count_nonzero(h % 3 != 0))
    n2m = n2minus(x, 1, 3)
    return CensusReport(
        x=x,
        n2minus_count=n2m,
        n2minus_density=Fraction(n2m, x),
        nonvanishing_count=nonvanishing,
        nonvanishing_density=Fraction(nonvanishing, x),
        ratio_nonvanishing_to_n2minus=(
            Fraction(nonvanishing, n2m) if n2m else None),
    )


def census_rows(x: int, workers: int = 1):
    """(D, field_discriminant, h, h mod 3) per fundamental D = 1 mod 3 in
    (0, x), for the CSV output."""
    ds, field = _census_population(x)
    table = class_number_table(int((-field).max()) if len(ds) else 0,
                               workers=workers)
    h = table[-field - 1]
    return [(int(d), int(f), int(hh), int(hh % 3))
            for d, f, hh in zip(ds, field, h)]


def beta_census_crosscheck(x: int, phi_form=None) -> int:
    """For every fundamental D = 1 mod 3 with 1 < D < x on the plus-space
    support, assert that the q^D coefficient of phi(9) is nonzero mod 3
    exactly when 3 does not divide h(Q(sqrt(-D))).  Returns the number of
    discriminants checked; a violation raises."""
    if phi_form is None:
        from .constructions import phi

        phi_form = phi(9, x)
    if phi_form.series.precision < x:
        raise ValueError("phi(9) precision %d < x = %d"
                         % (phi_form.series.precision, x))
    mask = fundamental_positive_mask(x)
    checked = 0
    for d in range(2, x):
        if not mask[d] or d % 3 != 1 or d % 4 not in (0, 3):
            continue
        beta = phi_form.series.coeffs[d]
        beta_res = beta.numerator * pow(beta.denominator, -1, 3) % 3
        h = class_number_of_field(-d)
        if (beta_res != 0) != (h % 3 != 0):
            raise BridgeViolationError(d)
        checked += 1
    return checked
