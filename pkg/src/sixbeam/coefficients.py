"""Closed-form Galerkin expansion coefficients and projection/synthesis.

Provides the inner products of derivatives and monomials against the
orthonormal eigenbasis:

- ``beta``  : <psi_n'', psi_m>      (second derivative)
- ``gamma`` : <psi_n'''', psi_m>    (fourth derivative, including the even
  m = 0 row <psi_n'''', 1>)
- ``chi``   : <x^p, psi_m^c>        (even powers p = 2..12)

All closed forms are evaluated through the same exponent-scaling strategy as
the eigenfunction kernel: raw expressions contain cosh/sinh(sqrt(3) lam) and
cosh(2 sqrt(3) lam) factors that overflow doubles at moderate mode numbers, so
every ratio is refolded into O(1) quantities built from e^{-s} and e^{-2s}.

Three branches ship *corrected* closed forms whose commonly tabulated variants
fail independent quadrature verification: the even diagonal beta (superseded
variant is exactly 1/4 of the true integral), the odd-family beta (garbled
off-diagonal symbols; structurally wrong diagonal — replaced by a form derived
from elementary integrals of (psi')^2), and the p = 12 monomial coefficient
(prefactor exponent).  ``superseded_variant_notes`` documents all three; the
``verify`` command cross-checks every shipped form against quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .eigenbasis import SQRT3, Basis, Parity, _parity, psi_block

__all__ = [
    "CoefficientSet",
    "OperatorMatrix",
    "CHI_POWERS",
    "beta",
    "gamma",
    "chi",
    "chi_vector",
    "operator_matrix",
    "project",
    "synthesize",
    "superseded_variant_notes",
]

#: Monomial powers with closed-form expansion coefficients.
CHI_POWERS = (2, 4, 6, 8, 10, 12)

_CHI_PREF = {2: -4.0, 4: 8.0, 6: 6.0, 8: 8.0, 10: 20.0, 12: 12.0}
_CHI_EXP = {2: 3, 4: 4, 6: 6, 8: 9, 10: 10, 12: 12}


# ---------------------------------------------------------------------------
# Scaled per-family data
# ---------------------------------------------------------------------------

def _family(basis: Basis, parity: Parity):
    """(lam, c, q, e1) arrays for modes 1..M of one family."""
    if parity is Parity.EVEN:
        return (basis.lam_even[1:], basis.c_even[1:],
                basis.q_even[1:], basis.e1_even[1:])
    return (basis.lam_odd[1:], basis.c_odd[1:],
            basis.q_odd[1:], basis.e1_odd[1:])


def _ratio_T(lam, q, e1):
    """Scaled (cos 2l - sqrt3 sin l sinh s - cos l cosh s)/(cos l - cosh s)."""
    e2 = e1 * e1
    sh1, ch1 = 0.5 * (1.0 - e2), 0.5 * (1.0 + e2)
    num = np.cos(2.0 * lam) * e1 - SQRT3 * np.sin(lam) * sh1 - np.cos(lam) * ch1
    return num / (-0.5 * q)


def _ratio_V(lam, q, e1):
    """Scaled (-3 + cos 2l + 2 cos l cosh s)/(cos l - cosh s)."""
    e2 = e1 * e1
    ch1 = 0.5 * (1.0 + e2)
    num = (-3.0 + np.cos(2.0 * lam)) * e1 + 2.0 * np.cos(lam) * ch1
    return num / (-0.5 * q)


def _ratio_U(lam, q, e1):
    """Scaled (sin 2l - sqrt3 cos l sinh s + sin l cosh s)/(cos l + cosh s)."""
    e2 = e1 * e1
    sh1, ch1 = 0.5 * (1.0 - e2), 0.5 * (1.0 + e2)
    num = np.sin(2.0 * lam) * e1 - SQRT3 * np.cos(lam) * sh1 + np.sin(lam) * ch1
    return num / (0.5 * q)


def _ratio_W(lam, q, e1):
    """Scaled (cosh s - cos l)/(cos l + cosh s)."""
    e2 = e1 * e1
    ch1 = 0.5 * (1.0 + e2)
    return (ch1 - np.cos(lam) * e1) / (0.5 * q)


# ---------------------------------------------------------------------------
# Diagonal closed forms
# ---------------------------------------------------------------------------

def _beta_diagonal(parity: Parity, lam, c, q, e1):
    """<psi_n'', psi_n> = -int (psi_n')^2, from elementary product integrals.

    The eigenfunction is written as c*(trig + A cos(l x/2) {sinh|cosh}(s x/2)
    + B sin(l x/2) {cosh|sinh}(s x/2)); squaring the derivative leaves
    integrals of cos(a x) cosh(b x) and sin(a x) sinh(b x) only.  Everything
    is stored in exponent-scaled form (factors of e^{-s/2}, e^{-s} folded).
    """
    L = lam
    S = SQRT3 * L
    e2 = e1 * e1
    sh1, ch1 = 0.5 * (1.0 - e2), 0.5 * (1.0 + e2)   # e^{-s} sinh/cosh(s)
    gg, hh = 0.5 * (1.0 - e1), 0.5 * (1.0 + e1)     # e^{-s/2} sinh/cosh(s/2)
    sinL, cosL = np.sin(L), np.cos(L)
    sin_h, cos_h = np.sin(0.5 * L), np.cos(0.5 * L)
    if parity is Parity.EVEN:
        a = 8.0 * sinL * cos_h * gg / q
        b = -8.0 * sinL * sin_h * hh / q
    else:
        a = -8.0 * cosL * cos_h * hh / q
        b = 8.0 * cosL * sin_h * gg / q
    p = 0.5 * (a * L + b * S)
    r = 0.5 * (a * S - b * L)
    L2 = L * L
    # Full-band integrals, scaled by e^{-s}:
    icc = 2.0 * (L * sinL * ch1 + S * cosL * sh1) / (4.0 * L2)
    iss = 2.0 * (S * sinL * ch1 - L * cosL * sh1) / (4.0 * L2)
    i6 = 0.25 * iss
    # Half-band integrals at frequencies 3L/2 and L/2, scaled by e^{-s/2}:
    s15, c15 = np.sin(1.5 * L), np.cos(1.5 * L)
    icc3 = 2.0 * (1.5 * L * s15 * hh + 0.5 * S * c15 * gg) / (3.0 * L2)
    icc1 = 2.0 * (0.5 * L * sin_h * hh + 0.5 * S * cos_h * gg) / L2
    iss3 = 2.0 * (0.5 * S * s15 * hh - 1.5 * L * c15 * gg) / (3.0 * L2)
    iss1 = 2.0 * (0.5 * S * sin_h * hh - 0.5 * L * cos_h * gg) / L2
    sin2_term = np.sin(2.0 * L) / (2.0 * L)
    se_L = sinL * e1 / L
    sh_S = sh1 / S
    if parity is Parity.EVEN:
        j1 = 1.0 - sin2_term
        j2 = 0.25 * (2.0 * sh_S - 2.0 * e1 + icc - 2.0 * se_L)
        j3 = 0.25 * (2.0 * e1 + 2.0 * sh_S - 2.0 * se_L - icc)
        cross_p = 0.5 * (iss3 + iss1)
        cross_r = 0.5 * (icc1 - icc3)
        val = (L2 * j1 + p * p * j2 + r * r * j3
               - 2.0 * L * p * cross_p - 2.0 * L * r * cross_r + 2.0 * p * r * i6)
    else:
        j1 = 1.0 + sin2_term
        j2 = 0.25 * (2.0 * e1 + 2.0 * se_L + 2.0 * sh_S + icc)
        j3 = 0.25 * (2.0 * sh_S - 2.0 * e1 - icc + 2.0 * se_L)
        cross_p = 0.5 * (icc3 + icc1)
        cross_r = 0.5 * (iss3 - iss1)
        val = (L2 * j1 + p * p * j2 + r * r * j3
               + 2.0 * L * p * cross_p + 2.0 * L * r * cross_r + 2.0 * p * r * i6)
    return -c * c * val


def _gamma_diagonal(parity: Parity, lam, c, q, e1):
    """<psi_n'''', psi_n> via the scaled diagonal closed form."""
    L = lam
    e2 = e1 * e1
    e4 = e2 * e2
    sh1, ch1 = 0.5 * (1.0 - e2), 0.5 * (1.0 + e2)   # e^{-s} sinh/cosh(s)
    ch2 = 0.5 * (1.0 + e4)                          # e^{-2s} cosh(2s)
    sin1, cos1 = np.sin(L), np.cos(L)
    sin2, cos2 = np.sin(2.0 * L), np.cos(2.0 * L)
    pref = L ** 3 * c * c / (2.0 * q * q)
    if parity is Parity.EVEN:
        bracket = (6.0 * sin2 * (ch2 + 4.0 * e2)
                   - 3.0 * np.sin(4.0 * L) * e2
                   - 48.0 * sin1 * ch1 * e1
                   + 4.0 * L * (-4.0 * SQRT3 * sin1 ** 3 * sh1 * e1
                                - 4.0 * cos1 ** 3 * ch1 * e1
                                + 3.0 * cos2 * e2 + ch2))
    else:
        bracket = (6.0 * sin2 * (cos2 * e2 - ch2)
                   + 4.0 * L * (-cos2 * e2 + ch2
                                + 2.0 * sin2 * e1 * (sin1 * ch1
                                                     + SQRT3 * cos1 * sh1)))
    return pref * bracket


# ---------------------------------------------------------------------------
# chi bracket decomposition: bracket = A + B cosh s + C sinh s
# ---------------------------------------------------------------------------

def _chi_abc(p: int, lam):
    sin1, cos1 = np.sin(lam), np.cos(lam)
    sin2, cos2 = np.sin(2.0 * lam), np.cos(2.0 * lam)
    L = lam
    if p == 2:
        a = -L * cos2 + 3.0 * sin1 * cos1
        b = L * cos1 - 3.0 * sin1
        cc = SQRT3 * L * sin1
    elif p == 4:
        a = (L ** 2 - 6.0) * cos2 - 9.0 * L * sin1 * cos1
        b = -(L ** 2 - 6.0) * cos1 + 9.0 * L * sin1
        cc = -SQRT3 * (L ** 2 + 6.0) * sin1
    elif p == 6:
        a = 360.0 + 2.0 * (L ** 4 - 20.0 * L ** 2 - 60.0) * cos2 - 15.0 * L ** 3 * sin2
        b = 30.0 * L ** 3 * sin1 - 2.0 * (L ** 4 - 20.0 * L ** 2 + 120.0) * cos1
        cc = -2.0 * SQRT3 * L ** 2 * (L ** 2 + 20.0) * sin1
    elif p == 8:
        a = (2520.0 * L ** 3 - 21.0 * (L ** 6 - 720.0) * sin2
             + 2.0 * (L ** 6 - 42.0 * L ** 4 - 420.0 * L ** 2 - 5040.0) * L * cos2)
        b = 2.0 * (21.0 * (L ** 6 - 720.0) * sin1
                   - L * (L ** 6 - 42.0 * L ** 4 + 840.0 * L ** 2 - 5040.0) * cos1)
        cc = -2.0 * SQRT3 * L * (L ** 6 + 42.0 * L ** 4 - 5040.0) * sin1
    elif p == 10:
        a = (4536.0 * L ** 4 - 13.5 * (L ** 6 - 20160.0) * L * sin2
             + (L ** 8 - 72.0 * L ** 6 - 1512.0 * L ** 4 - 60480.0 * L ** 2
                + 362880.0) * cos2)
        b = (27.0 * L * (L ** 6 - 20160.0) * sin1
             - (L ** 8 - 72.0 * L ** 6 + 3024.0 * L ** 4 - 60480.0 * L ** 2
                + 362880.0) * cos1)
        cc = -SQRT3 * (L ** 8 + 72.0 * L ** 6 - 60480.0 * L ** 2 - 362880.0) * sin1
    elif p == 12:
        a = (23760.0 * (L ** 6 - 5040.0)
             - 33.0 * L ** 3 * (L ** 6 - 151200.0) * sin2
             + 2.0 * (L ** 10 - 110.0 * L ** 8 - 3960.0 * L ** 6
                      - 332640.0 * L ** 4 + 6652800.0 * L ** 2
                      + 19958400.0) * cos2)
        b = 2.0 * (33.0 * L ** 3 * (L ** 6 - 151200.0) * sin1
                   - (L ** 10 - 110.0 * L ** 8 + 7920.0 * L ** 6
                      - 332640.0 * L ** 4 + 6652800.0 * L ** 2
                      - 39916800.0) * cos1)
        cc = -2.0 * SQRT3 * L ** 2 * (L ** 8 + 110.0 * L ** 6
                                      - 332640.0 * L ** 2 - 6652800.0) * sin1
    else:
        raise ValueError(f"power p must be even and in [2, 12], got {p!r}")
    return a, b, cc


def _chi_values(p: int, lam, c, q, e1):
    """chi for one power across modes (scaled evaluation)."""
    e2 = e1 * e1
    sh1, ch1 = 0.5 * (1.0 - e2), 0.5 * (1.0 + e2)
    a, b, cc = _chi_abc(p, lam)
    bracket = a * e1 + b * ch1 + cc * sh1
    return _CHI_PREF[p] * c / lam ** _CHI_EXP[p] * bracket / (-0.5 * q)


# ---------------------------------------------------------------------------
# Scalar entry points
# ---------------------------------------------------------------------------

def _check_index(basis: Basis, parity: Parity, m, allow_zero: bool) -> int:
    if not isinstance(m, (int, np.integer)):
        raise ValueError(f"mode index must be an integer, got {m!r}")
    lo = 0 if allow_zero else 1
    if not (lo <= m <= basis.M):
        raise ValueError(f"mode index {m} out of range [{lo}, {basis.M}]")
    return int(m)


def _mode_data(basis: Basis, parity: Parity, m: int):
    lam, c, q, e1 = _family(basis, parity)
    i = m - 1
    return lam[i], c[i], q[i], e1[i]


def beta(basis: Basis, parity, n: int, m: int) -> float:
    """<psi_n'', psi_m> within one parity family.

    Index 0 (the even constant mode) gives 0 in either slot: psi_0'' = 0 and
    <psi_n'', psi_0> vanishes because psi_n'(+-1) = 0.
    """
    parity = _parity(parity)
    n = _check_index(basis, parity, n, allow_zero=True)
    m = _check_index(basis, parity, m, allow_zero=True)
    if parity is Parity.ODD and (n == 0 or m == 0):
        return 0.0  # no odd mode 0; the coefficient is 0 by convention
    if n == 0 or m == 0:
        return 0.0
    ln, cn, qn, e1n = _mode_data(basis, parity, n)
    if n == m:
        return float(_beta_diagonal(parity, ln, cn, qn, e1n))
    lm, cm, qm, e1m = _mode_data(basis, parity, m)
    pref = 6.0 * cn * cm * (lm * ln) ** 3 / (lm ** 6 - ln ** 6)
    if parity is Parity.EVEN:
        tm = float(_ratio_T(lm, qm, e1m))
        tn = float(_ratio_T(ln, qn, e1n))
        bracket = lm * math.sin(ln) * tm - ln * math.sin(lm) * tn
    else:
        um = float(_ratio_U(lm, qm, e1m))
        un = float(_ratio_U(ln, qn, e1n))
        bracket = -lm * math.cos(ln) * um + ln * math.cos(lm) * un
    return float(pref * bracket)


def gamma(basis: Basis, parity, n: int, m: int) -> float:
    """<psi_n'''', psi_m> within one parity family (m = 0 allowed for even)."""
    parity = _parity(parity)
    n = _check_index(basis, parity, n, allow_zero=True)
    if m == 0:
        if parity is Parity.ODD:
            raise ValueError(
                "gamma(odd, n, 0) is identically zero by parity and is not "
                "a valid request")
        if n == 0:
            return 0.0
        ln, cn, _, _ = _mode_data(basis, parity, n)
        return float(6.0 * cn * ln ** 3 * math.sin(ln))
    m = _check_index(basis, parity, m, allow_zero=False)
    if n == 0:
        return 0.0  # psi_0'''' = 0
    ln, cn, qn, e1n = _mode_data(basis, parity, n)
    if n == m:
        return float(_gamma_diagonal(parity, ln, cn, qn, e1n))
    lm, cm, qm, e1m = _mode_data(basis, parity, m)
    if parity is Parity.EVEN:
        pref = 3.0 * cn * cm * ln ** 6 / (lm ** 6 - ln ** 6)
        vn = float(_ratio_V(ln, qn, e1n))
        vm = float(_ratio_V(lm, qm, e1m))
        bracket = -lm ** 3 * math.sin(lm) * vn + ln ** 3 * math.sin(ln) * vm
    else:
        pref = 6.0 * cn * cm * ln ** 6 / (ln ** 6 - lm ** 6)
        wn = float(_ratio_W(ln, qn, e1n))
        wm = float(_ratio_W(lm, qm, e1m))
        bracket = (lm ** 3 * math.cos(lm) * math.sin(ln) * wn
                   - ln ** 3 * math.sin(lm) * math.cos(ln) * wm)
    return float(pref * bracket)


def chi(basis: Basis, p: int, m: int) -> float:
    """<x^p, psi_m^c> for even p in [2, 12] and even-family mode m >= 1."""
    if not isinstance(p, (int, np.integer)) or p not in CHI_POWERS:
        raise ValueError(f"power p must be one of {CHI_POWERS}, got {p!r}")
    m = _check_index(basis, Parity.EVEN, m, allow_zero=False)
    lam, c, q, e1 = _mode_data(basis, Parity.EVEN, m)
    return float(_chi_values(int(p), lam, c, q, e1))


def chi_vector(basis: Basis, p: int) -> np.ndarray:
    """chi values for modes m = 1..M at one power (vectorized)."""
    if not isinstance(p, (int, np.integer)) or p not in CHI_POWERS:
        raise ValueError(f"power p must be one of {CHI_POWERS}, got {p!r}")
    lam, c, q, e1 = _family(basis, Parity.EVEN)
    return np.asarray(_chi_values(int(p), lam, c, q, e1), dtype=float)


# ---------------------------------------------------------------------------
# Matrix assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OperatorMatrix:
    """Dense M x M table of expansion coefficients for one derivative order.

    ``entries[n-1, m-1]`` is <psi_n^{(k)}, psi_m>; ``mean_row[n-1]`` holds
    <psi_n'''', 1> for the even fourth-derivative matrix (None otherwise).
    """

    parity: Parity
    kind: str
    entries: np.ndarray
    mean_row: np.ndarray | None = None


_KINDS = ("second_derivative", "fourth_derivative", "sixth_derivative")


def operator_matrix(basis: Basis, parity, kind: str) -> OperatorMatrix:
    """Assemble the full coefficient matrix for modes 1..M (vectorized)."""
    parity = _parity(parity)
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    lam, c, q, e1 = _family(basis, parity)
    if kind == "sixth_derivative":
        return OperatorMatrix(parity=parity, kind=kind,
                              entries=np.diag(-lam ** 6))
    ln, lm = lam[:, None], lam[None, :]
    cn, cm = c[:, None], c[None, :]
    sin_n, sin_m = np.sin(lam)[:, None], np.sin(lam)[None, :]
    cos_n, cos_m = np.cos(lam)[:, None], np.cos(lam)[None, :]
    if kind == "second_derivative":
        den = lm ** 6 - ln ** 6
        np.fill_diagonal(den, 1.0)
        pref = 6.0 * cn * cm * (lm * ln) ** 3 / den
        if parity is Parity.EVEN:
            tt = _ratio_T(lam, q, e1)
            bracket = lm * sin_n * tt[None, :] - ln * sin_m * tt[:, None]
        else:
            uu = _ratio_U(lam, q, e1)
            bracket = -lm * cos_n * uu[None, :] + ln * cos_m * uu[:, None]
        entries = pref * bracket
        np.fill_diagonal(entries, _beta_diagonal(parity, lam, c, q, e1))
        return OperatorMatrix(parity=parity, kind=kind, entries=entries)
    # fourth derivative
    mean_row = None
    if parity is Parity.EVEN:
        den = lm ** 6 - ln ** 6
        np.fill_diagonal(den, 1.0)
        pref = 3.0 * cn * cm * ln ** 6 / den
        vv = _ratio_V(lam, q, e1)
        bracket = (-lm ** 3 * sin_m * vv[:, None]
                   + ln ** 3 * sin_n * vv[None, :])
        mean_row = 6.0 * c * lam ** 3 * np.sin(lam)
    else:
        den = ln ** 6 - lm ** 6
        np.fill_diagonal(den, 1.0)
        pref = 6.0 * cn * cm * ln ** 6 / den
        ww = _ratio_W(lam, q, e1)
        bracket = (lm ** 3 * cos_m * sin_n * ww[:, None]
                   - ln ** 3 * sin_m * cos_n * ww[None, :])
    entries = pref * bracket
    np.fill_diagonal(entries, _gamma_diagonal(parity, lam, c, q, e1))
    return OperatorMatrix(parity=parity, kind=kind, entries=entries,
                          mean_row=mean_row)


# ---------------------------------------------------------------------------
# Coefficient sets: projection and synthesis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientSet:
    """Spectral coefficients of a function in the eigenbasis.

    ``uc``/``us`` have length M + 1 and are indexed by mode number; slot 0 is
    unused (fixed to 0) — the constant-mode coefficient lives in ``u0c`` and
    enters synthesis with weight 1/2 because psi_0 = 1 is not unit-normalized.
    """

    basis: Basis
    u0c: float
    uc: np.ndarray
    us: np.ndarray

    def __post_init__(self):
        uc = np.asarray(self.uc, dtype=float)
        us = np.asarray(self.us, dtype=float)
        if uc.shape != (self.basis.M + 1,) or us.shape != (self.basis.M + 1,):
            raise ValueError(
                f"coefficient arrays must have shape ({self.basis.M + 1},)")
        if uc[0] != 0.0 or us[0] != 0.0:
            raise ValueError("slot 0 of uc/us is unused and must be 0")
        object.__setattr__(self, "u0c", float(self.u0c))
        object.__setattr__(self, "uc", uc)
        object.__setattr__(self, "us", us)

    @classmethod
    def zeros(cls, basis: Basis) -> "CoefficientSet":
        return cls(basis=basis, u0c=0.0, uc=np.zeros(basis.M + 1),
                   us=np.zeros(basis.M + 1))


def synthesize(coeffs: CoefficientSet, x, k: int = 0):
    """Evaluate the k-th derivative of the expansion at x (scalar or array)."""
    if not isinstance(k, (int, np.integer)) or not (0 <= k <= 6):
        raise ValueError(f"derivative order k must be an integer in [0, 6], got {k!r}")
    xa = np.asarray(x, dtype=float)
    scalar = xa.ndim == 0
    xa = np.atleast_1d(xa)
    if np.any(np.abs(xa) > 1.0):
        raise ValueError("evaluation points must satisfy |x| <= 1")
    vals = np.zeros_like(xa)
    if k == 0:
        vals += 0.5 * coeffs.u0c
    if np.any(coeffs.uc[1:]):
        vals = vals + coeffs.uc[1:] @ psi_block(coeffs.basis, Parity.EVEN, xa, int(k))
    if np.any(coeffs.us[1:]):
        vals = vals + coeffs.us[1:] @ psi_block(coeffs.basis, Parity.ODD, xa, int(k))
    return float(vals[0]) if scalar else vals


def _projection_at(f, basis: Basis, rule) -> tuple:
    fx = np.asarray(f(rule.nodes), dtype=float)
    wf = rule.weights * fx
    u0c = float(np.sum(wf))
    uc = psi_block(basis, Parity.EVEN, rule.nodes, 0) @ wf
    us = psi_block(basis, Parity.ODD, rule.nodes, 0) @ wf
    l1 = float(np.sum(np.abs(wf)))
    return u0c, uc, us, l1


def project(f, basis: Basis, tol: float = 1e-12) -> CoefficientSet:
    """Project a function onto the basis by adaptive composite quadrature.

    Panels double until every coefficient changes by less than
    tol * max(1, |coefficient|) between successive refinements, plus a
    rounding floor of 500 eps scaled by int |f| (quadrature noise is
    absolute at the integrand's magnitude, so coefficients smaller than
    that can never satisfy a pure relative-or-unit gate).
    """
    if not (tol >= 1e-14):
        raise ValueError(f"tol must be >= 1e-14, got {tol!r}")
    lam_max = max(float(basis.lam_even[basis.M]), float(basis.lam_odd[basis.M]))
    panels = max(8, int(math.ceil(4.0 * lam_max / math.pi)))
    prev = _projection_at(f, basis, oracle.make_rule(panels, tol))
    eps_floor = 500.0 * np.finfo(float).eps
    for _ in range(8):
        panels *= 2
        if panels * oracle.PANEL_ORDER > 4_000_000:
            break
        cur = _projection_at(f, basis, oracle.make_rule(panels, tol))
        floor = eps_floor * max(1.0, cur[3])
        ok0 = abs(cur[0] - prev[0]) < tol * max(1.0, abs(cur[0])) + floor
        okc = bool(np.all(np.abs(cur[1] - prev[1])
                          < tol * np.maximum(1.0, np.abs(cur[1])) + floor))
        oks = bool(np.all(np.abs(cur[2] - prev[2])
                          < tol * np.maximum(1.0, np.abs(cur[2])) + floor))
        if ok0 and okc and oks:
            u0c, uc_body, us_body = cur[0], cur[1], cur[2]
            uc = np.concatenate(([0.0], uc_body))
            us = np.concatenate(([0.0], us_body))
            return CoefficientSet(basis=basis, u0c=u0c, uc=uc, us=us)
        prev = cur
    raise RuntimeError(f"projection quadrature did not converge to tol={tol:g}")


# ---------------------------------------------------------------------------
# Superseded-variant documentation
# ---------------------------------------------------------------------------

def _superseded_beta_even_diag(basis: Basis, n: int) -> float:
    """Superseded even-diagonal variant (prefactor denominator 8, not 2)."""
    ln, cn, _, _ = _mode_data(basis, Parity.EVEN, n)
    sn = SQRT3 * ln
    if sn > 700.0:
        raise ValueError("superseded variant evaluated unscaled; index too large")
    pref = -ln * cn ** 2 / (8.0 * (math.cos(ln) - math.cosh(sn)) ** 2)
    b1 = ln * (3.0 * math.cos(2 * ln) + math.sinh(sn) ** 2 + math.cosh(sn) ** 2
               + 4.0 * SQRT3 * math.sin(ln) ** 3 * math.sinh(sn)
               - 4.0 * math.cos(ln) ** 3 * math.cosh(sn))
    b2 = (2.0 * math.sin(ln) * (math.cos(ln) - math.cosh(sn))
          * (SQRT3 * math.sin(ln) * math.sinh(sn)
             + math.cos(ln) * math.cosh(sn) - math.cos(2 * ln)))
    return pref * (b1 + b2)


def _superseded_beta_odd_offdiag(basis: Basis, n: int, m: int) -> float:
    """Superseded odd off-diagonal variant (garbled second term, read literally)."""
    ln, cn, _, _ = _mode_data(basis, Parity.ODD, n)
    lm, cm, _, _ = _mode_data(basis, Parity.ODD, m)
    sn, sm = SQRT3 * ln, SQRT3 * lm
    if max(sn, sm) > 700.0:
        raise ValueError("superseded variant evaluated unscaled; index too large")
    pref = 6.0 * cn * cm * lm ** 3 * ln ** 3 / (lm ** 6 - ln ** 6)
    t1 = -lm * math.cos(ln) * (math.sin(2 * lm) - SQRT3 * math.cos(lm) * math.sinh(sm)
                               + math.sin(lm) * math.cosh(sm)) \
        / (math.cos(lm) + math.cosh(sm))
    t2 = ln * math.cos(lm) * (math.sin(2 * ln) - SQRT3 * math.cos(ln) * math.sinh(sn)
                              + math.cos(ln) * math.cosh(sn)) \
        / (math.cos(ln) - math.cosh(sn))
    return pref * (t1 + t2)


def _superseded_beta_odd_diag(basis: Basis, n: int) -> float:
    """Superseded odd-diagonal variant (structurally wrong; fails quadrature)."""
    ln, cn, _, _ = _mode_data(basis, Parity.ODD, n)
    sn = SQRT3 * ln
    if sn > 700.0:
        raise ValueError("superseded variant evaluated unscaled; index too large")
    pref = ln * cn ** 2 / (2.0 * (math.cos(ln) + math.cosh(sn)) ** 2)
    b1 = ln * (-math.cos(2 * ln) + math.sinh(sn) ** 2 + math.cosh(sn) ** 2
               - 4.0 * SQRT3 * math.cos(ln) ** 2 * math.sin(ln) * math.sinh(sn)
               + 4.0 * math.sin(ln) ** 2 * math.cos(ln) * math.cosh(sn))
    b2 = (2.0 * math.cos(ln) * (math.cos(ln) + math.cosh(sn))
          * (SQRT3 * math.cos(ln) * math.sinh(sn)
             - math.sin(ln) * math.cosh(sn) - math.sin(2 * ln)))
    return pref * (b1 + b2)


def _superseded_chi12(basis: Basis, m: int) -> float:
    """Superseded p = 12 variant: prefactor exponent 10 instead of 12."""
    lam, _, _, _ = _mode_data(basis, Parity.EVEN, m)
    return chi(basis, 12, m) * lam ** 2


def superseded_variant_notes(basis: Basis) -> list:
    """Document the three corrected closed-form branches with examples.

    Each entry compares the shipped (corrected, quadrature-verified) value
    against the superseded variant at a sample index.
    """
    notes = [
        {
            "formula": "beta, even parity, diagonal",
            "issue": "superseded variant carries prefactor denominator 8 "
                     "instead of 2 and evaluates to exactly 1/4 of the "
                     "true integral",
            "example_indices": [1, 1],
            "superseded_value": _superseded_beta_even_diag(basis, 1),
            "corrected_value": beta(basis, Parity.EVEN, 1, 1),
        },
        {
            "formula": "beta, odd parity, off-diagonal",
            "issue": "superseded variant mixes even-family symbols into the "
                     "second term; the shipped form mirrors the first term "
                     "with the index roles swapped",
            "example_indices": [1, 2],
            "superseded_value": _superseded_beta_odd_offdiag(basis, 1, 2),
            "corrected_value": beta(basis, Parity.ODD, 1, 2),
        },
        {
            "formula": "beta, odd parity, diagonal",
            "issue": "superseded variant is structurally wrong (its ratio to "
                     "the true integral varies with the index); the shipped "
                     "form is derived from elementary integrals of (psi')^2",
            "example_indices": [1, 1],
            "superseded_value": _superseded_beta_odd_diag(basis, 1),
            "corrected_value": beta(basis, Parity.ODD, 1, 1),
        },
        {
            "formula": "chi, p = 12",
            "issue": "superseded variant carries prefactor exponent 10 "
                     "(copied from p = 10) instead of 12",
            "example_indices": [12, 1],
            "superseded_value": _superseded_chi12(basis, 1),
            "corrected_value": chi(basis, 12, 1),
        },
    ]
    return notes
