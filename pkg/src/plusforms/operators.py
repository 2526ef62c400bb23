"""Coefficient-side operators on q-expansions.

U_d and V_d act by a(n) -> a(nd) and q^n -> q^(dn); quadratic twists
multiply a(n) by a character value; T(l^2, k) is the half-integral weight
Hecke operator in its coefficient form; R_t is the Eisenstein monomial
E_4(4z)^i E_6(4z)^j of weight t used to equalize weights mod 3; ap_project
restricts a series to an arithmetic progression of exponents.

Each operator comes with a conservative level-bound rule.  The bounds are
upper bounds only - that is all a Sturm cutoff needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import _cache
from .class_numbers import kronecker
from .level_one_forms import Form, FormMeta, eisenstein
from .qseries import QSeries, RATIONAL


class NotOddPrimeError(ValueError):
    """The Hecke operator index must be an odd prime."""


@dataclass(frozen=True)
class OperatorTrace:
    """Applied-operator tags plus the resulting conservative level bound."""

    description: tuple[str, ...]
    level_bound_out: int

    def extended(self, tag: str, level: int) -> "OperatorTrace":
        return OperatorTrace(self.description + (tag,), level)


@dataclass(frozen=True)
class Character:
    """A residue character given by its value table mod `modulus`."""

    modulus: int
    values: tuple[int, ...]
    label: str

    def __post_init__(self):
        if self.modulus < 1 or len(self.values) != self.modulus:
            raise ValueError("value table must have length = modulus")

    def __call__(self, n: int) -> int:
        return self.values[n % self.modulus]

    @classmethod
    def kronecker(cls, d: int) -> "Character":
        m = abs(d)
        return cls(m, tuple(kronecker(d, n) for n in range(m)),
                   "kronecker(%d)" % d)

    @classmethod
    def trivial(cls) -> "Character":
        return cls(1, (1,), "trivial")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def level_after_u(level: int, d: int) -> int:
    return _lcm(level, 4 * d)


def level_after_v(level: int, d: int) -> int:
    return level * d


def level_after_twist(level: int, modulus: int) -> int:
    return level * modulus * modulus


level_after_ap = level_after_twist


def u_op(g: QSeries, d: int) -> QSeries:
    """a(n) -> a(nd); output knows ceil(P/d) coefficients."""
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return g
    out_prec = (g.precision + d - 1) // d
    return QSeries(g.ring, tuple(g.coeffs[n * d] for n in range(out_prec)))


def v_op(g: QSeries, d: int) -> QSeries:
    """q^n -> q^(dn).  Every exponent below d*(P-1)+1 is determined by the
    input, so the output carries that full precision (the gaps are exact
    zeros, not unknowns)."""
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return g
    out_prec = d * (g.precision - 1) + 1
    out = [0] * out_prec
    for n, c in enumerate(g.coeffs):
        out[n * d] = c
    return QSeries(g.ring, tuple(out))


def twist(g: QSeries, chi: Character) -> QSeries:
    """a(n) -> chi(n) a(n)."""
    return QSeries(g.ring,
                   tuple(chi(n) * c for n, c in enumerate(g.coeffs)))


def ap_project(g: QSeries, a: int, modulus: int) -> QSeries:
    """Keep coefficients with n = a mod modulus, zero the rest."""
    if not 0 <= a < modulus:
        raise ValueError("need 0 <= a < modulus")
    return QSeries(g.ring,
                   tuple(c if n % modulus == a else 0
                         for n, c in enumerate(g.coeffs)))


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def hecke_t(g: QSeries, ell: int, k: int) -> QSeries:
    """Half-integral weight Hecke operator T(l^2, k) on coefficients:

    c(n) -> c(l^2 n) + l^(k-1) ((-1)^k n / l) c(n)
                     + ((-1)^k / l^2) l^(2k-1) c(n / l^2),

    with c(n/l^2) = 0 unless l^2 | n.  Input precision l^2 * P yields
    output precision P.
    """
    if not _is_odd_prime(ell):
        raise NotOddPrimeError("%r is not an odd prime" % (ell,))
    ell2 = ell * ell
    out_prec = (g.precision + ell2 - 1) // ell2
    sign = -1 if k % 2 else 1
    mid_scale = ell ** (k - 1)
    top_scale = kronecker(sign, ell2) * ell ** (2 * k - 1)
    m = g.ring.modulus
    if m is not None:
        mid_scale %= m
        top_scale %= m
    out = []
    for n in range(out_prec):
        val = g.coeffs[n * ell2]
        if mid_scale:
            kr = kronecker(sign * n, ell)
            if kr:
                val = val + kr * mid_scale * g.coeffs[n]
        if top_scale and n % ell2 == 0:
            val = val + top_scale * g.coeffs[n // ell2]
        out.append(val if m is None else val % m)
    return QSeries(g.ring, tuple(out))


def m_of(t: int) -> int:
    """The E_6 exponent (t - 4*floor(t/4)) / 2 of the weight-t monomial."""
    if t < 0 or t % 2:
        raise ValueError("t must be a nonnegative even integer")
    return (t - 4 * (t // 4)) // 2


def _r_series(t: int, precision: int) -> QSeries:
    e6_pow = m_of(t)
    e4_pow = t // 4 - e6_pow
    # v_op by 4 on precision p covers exponents < 4(p-1)+1, so this
    # choice guarantees the dilation spans the whole requested window
    small = (precision + 2) // 4 + 1
    acc = None
    for weight, e in ((4, e4_pow), (6, e6_pow)):
        if e:
            dilated = v_op(eisenstein(weight, small).series, 4).truncate(precision)
            piece = dilated ** e
            acc = piece if acc is None else acc * piece
    if acc is None:
        acc = QSeries.one(RATIONAL, precision)
    return acc


def r_t(t: int, precision: int) -> Form:
    """The weight-t monomial E_4(4z)^(floor(t/4) - m) E_6(4z)^m with
    m = (t - 4 floor(t/4))/2; identically 1 mod 3 for every valid even t.
    t = 2 is rejected: no monomial in E_4, E_6 has weight 2."""
    if t < 0 or t % 2:
        raise ValueError("t must be a nonnegative even integer")
    if t // 4 - m_of(t) < 0:
        raise ValueError("t = %d has no nonnegative monomial exponents" % t)
    series = _cache.series_at(("r_t", t), precision, lambda p: _r_series(t, p))
    return Form(series, FormMeta(2 * t, 4))


def _w2_series(precision: int) -> QSeries:
    # 2 E_2(2z) - E_2(z) = 1 + 24 sum((sigma_1(n) - 2 sigma_1(n/2)) q^n),
    # dilated by 4; every nonconstant coefficient is a multiple of 24
    small = (precision + 2) // 4 + 1
    coeffs = [0] * small
    for d in range(1, small):
        for n in range(d, small, d):
            coeffs[n] += 24 * d
    # subtract the doubled even part: sigma_1(n/2) terms
    for d in range(1, (small - 1) // 2 + 1):
        for n in range(2 * d, small, 2 * d):
            coeffs[n] -= 48 * d
    coeffs[0] = 1
    return v_op(QSeries.rational(coeffs), 4).truncate(precision)


def w2_bridge(precision: int) -> Form:
    """A weight-2 stand-in for the missing monomial: 2 E_2(8z) - E_2(4z),
    a holomorphic weight-2 form on level 8, supported on exponents
    divisible by 4 and identically 1 mod 3."""
    series = _cache.series_at(("w2",), precision, _w2_series)
    return Form(series, FormMeta(4, 8))
