"""Mean curvature of graph-chart states and its compactified excess.

The excess ``sqrt(det g(a)) (H - 1/2)`` is the quantity every solver works
with: pointwise it is an exact 0*inf product at ``r = 1``.  This module
evaluates it through an algebraically cancelled bracket: a rational kernel
(generated, divided exactly by ``(1-r^2)^4``) plus a square-root tail summed
as a series, so values and derivatives are accurate up to and including the
boundary circle.

Normalization: the determinant weight is taken in Cartesian disk
coordinates, i.e. ``sqrt(det g)/r`` in polar terms, so the weight is positive
on the whole closed disk including the origin.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._gen_disk import psi_terms
from .errors import ChartMismatch, NotImmersed
from .fields import FieldJet, ScalarField
from .metric import area_factor, gradient_square_poly

_SERIES_CUT = 0.35
_NTERMS = 64


def _f_coeffs(n):
    # f(X) = (1+X)/(1+sqrt(1+X)) = sum f_k X^k, f_k = C(1/2,k) + C(1/2,k+1)
    b = np.empty(n + 2)
    b[0] = 1.0
    for k in range(n + 1):
        b[k + 1] = b[k] * (0.5 - k) / (k + 1)
    return b[:-1] + b[1:]


_F = _f_coeffs(_NTERMS + 4)
_G_COEF = _F[3:_NTERMS + 3]          # G(X) = sum_j f_{j+3} X^j
_GP_COEF = _G_COEF[1:] * np.arange(1, _NTERMS)


def _tail_G(X):
    """G(X) = (f(X) - 1/2 - 3X/8 + X^2/16)/X^3 and its derivative, stably."""
    X = np.asarray(X, dtype=float)
    if np.any(X <= -1.0):
        raise NotImmersed("induced metric degenerates (w^2 <= 0)")
    small = np.abs(X) < _SERIES_CUT
    Xc = np.where(small, X, 0.0)
    G = np.polynomial.polynomial.polyval(Xc, _G_COEF)
    Gp = np.polynomial.polynomial.polyval(Xc, _GP_COEF)
    if np.any(~small):
        Xb = np.where(small, 1.0, X)
        w = np.sqrt(1.0 + Xb)
        f = (1.0 + Xb) / (1.0 + w)
        fp = (w + 2.0) / (2.0 * (1.0 + w) ** 2)
        Gd = (f - 0.5 - 0.375 * Xb + Xb ** 2 / 16.0) / Xb ** 3
        Gpd = (fp - 0.375 + Xb / 8.0) / Xb ** 3 - 3.0 * Gd / Xb
        G = np.where(small, G, Gd)
        Gp = np.where(small, Gp, Gpd)
    return G, Gp


def residual_core(jet: FieldJet, r):
    """Psi(jet, r): the cancelled bracket; H = 1/2 + u^4 Psi/(16 q^2 w^3)."""
    return _core(jet, r, partials=False)[0]


def residual_core_partials(jet: FieldJet, r):
    """Psi and its six partials w.r.t. (value, dr, dt, drr, drt, dtt)."""
    return _core(jet, r, partials=True)


def _core(jet: FieldJet, r, partials):
    r = np.asarray(r, dtype=float)
    u = 1 - r ** 2
    q = 1 + r ** 2
    m = np.exp(-2 * jet.value)
    out = psi_terms(r, m, jet.dr, jet.dt, jet.drr, jet.drt, jet.dtt)
    p0, pm, p1, p2, p11, p12, p22 = np.broadcast_arrays(*out)

    x1 = 2 * r * jet.dr / q
    x2 = jet.dr ** 2 / 4 + (m - 1) / q ** 2
    x4 = jet.dt ** 2 / (4 * r ** 2 * q ** 2)
    Y = x1 + x2 * u + x4 * u ** 3          # X/u, exact at u = 0
    X = Y * u
    G, Gp = _tail_G(X)
    psi = p0 - 8 * q ** 2 * Y ** 4 * G
    if not partials:
        return (psi,)

    # tail partial: d/dv[-8 q^2 Y^4 G(X)] = -8 q^2 Y^3 Y_v (4G + u Y G')
    fac = -8 * q ** 2 * Y ** 3 * (4 * G + u * Y * Gp)
    Y_eta = -2 * m * u / q ** 2
    Y_n1 = 2 * r / q + jet.dr * u / 2
    Y_n2 = jet.dt * u ** 3 / (2 * r ** 2 * q ** 2)
    d_eta = -2 * m * pm + fac * Y_eta
    d_n1 = p1 + fac * Y_n1
    d_n2 = p2 + fac * Y_n2
    return psi, (d_eta, d_n1, d_n2, p11, p12, p22)


def mean_curvature(jet: FieldJet, r):
    """Pointwise mean curvature of the graph; exactly 1/2 on the zero jet."""
    r = np.asarray(r, dtype=float)
    if np.any(r >= 1.0):
        raise ChartMismatch("pointwise H needs r < 1; use the compactified form")
    u = 1 - r ** 2
    q = 1 + r ** 2
    w = area_factor(jet, r)
    psi = residual_core(jet, r)
    return 0.5 + u ** 4 * psi / (16 * q ** 2 * w ** 3)


def base_weight(base_jet: FieldJet, r):
    """e^a w(a): the compactified determinant weight over its blow-up rate."""
    return np.exp(base_jet.value) * area_factor(base_jet, r)


def hbar_from_jets(base_jet: FieldJet, eta_jet: FieldJet, r):
    """Compactified excess sqrt(det g(a))(H(eta) - 1/2), Cartesian weight."""
    X, _ = gradient_square_poly(eta_jet, r)
    if np.any(X <= -1.0):
        raise NotImmersed("deformation leaves the immersion regime")
    w_eta = np.sqrt(1.0 + X)
    psi = residual_core(eta_jet, r)
    return base_weight(base_jet, r) * psi / w_eta ** 3


def hbar_partials(base_jet: FieldJet, eta_jet: FieldJet, r):
    """Residual value and its six partials w.r.t. the total-field jet."""
    r = np.asarray(r, dtype=float)
    u = 1 - r ** 2
    q = 1 + r ** 2
    X, _ = gradient_square_poly(eta_jet, r)
    if np.any(X <= -1.0):
        raise NotImmersed("deformation leaves the immersion regime")
    w3 = (1.0 + X) ** 1.5
    pref = base_weight(base_jet, r)
    psi, parts = _core(eta_jet, r, partials=True)
    m = np.exp(-2 * eta_jet.value)
    X_eta = -2 * m * u ** 2 / q ** 2
    X_n1 = (2 * r / q + eta_jet.dr * u / 2) * u
    X_n2 = eta_jet.dt * u ** 4 / (2 * r ** 2 * q ** 2)
    fac = 1.5 * psi / ((1.0 + X) * w3)
    value = pref * psi / w3
    coeffs = (
        pref * (parts[0] / w3 - fac * X_eta),
        pref * (parts[1] / w3 - fac * X_n1),
        pref * (parts[2] / w3 - fac * X_n2),
        pref * parts[3] / w3,
        pref * parts[4] / w3,
        pref * parts[5] / w3,
    )
    return value, coeffs


def gauge_factor(base_jet: FieldJet, r):
    """c(a): converts deformation fields to normal speeds; equals w(a)/2.

    Positive on the closed disk with boundary value exactly 1/2, so the
    deformation field and the total field share boundary traces.
    """
    return area_factor(base_jet, r) / 2


def total_field_values(base_state, xi: ScalarField):
    """eta = a + 2 c(a) xi as grid values."""
    r = base_state.grid.rr
    base_jet = base_state.jet()
    return base_jet.value + 2 * gauge_factor(base_jet, r) * xi.values


def compactified_residual(base_state, xi: ScalarField) -> ScalarField:
    """Residual field of the deformation ``xi`` about ``base_state``.

    Zero exactly when the deformed surface has mean curvature 1/2; finite up
    to and including ``r = 1``.
    """
    if base_state.chart != "graph":
        raise ChartMismatch("graph-chart residual")
    grid = base_state.grid
    if xi.grid != grid:
        raise ChartMismatch("deformation grid differs from base grid")
    r = grid.rr
    base_jet = base_state.jet()
    off = ScalarField(grid, 2 * gauge_factor(base_jet, r) * xi.values)
    eta_jet = base_jet + off.jet()
    return ScalarField(grid, hbar_from_jets(base_jet, eta_jet, r))


def expansion_coefficients(base_jet: FieldJet, xi_prime_jet: FieldJet, r):
    """Coefficient matrix of the second-derivative part and the remainder.

    Writes the residual as ``A11 d_rr + 2 A12 d_rt + A22 d_tt + B`` applied to
    the raw deformation ``xi' = 2 c(a) xi``; ``B`` is defined residually so
    the identity is exact.  At ``r = 1`` with zero deformation the matrix is
    ``diag(e^-a, e^a)``.
    """
    r = np.asarray(r, dtype=float)
    u = 1 - r ** 2
    q = 1 + r ** 2
    eta_jet = base_jet + xi_prime_jet
    X, _ = gradient_square_poly(eta_jet, r)
    if np.any(X <= -1.0):
        raise NotImmersed("deformation leaves the immersion regime")
    w3 = (1.0 + X) ** 1.5
    wa = area_factor(base_jet, r)
    pref = np.exp(base_jet.value) * wa / w3
    m = np.exp(-2 * eta_jet.value)
    br11 = (1 + 2 * r * eta_jet.dr * u / q
            + (eta_jet.dr ** 2 / 4 + (m - 1) / q ** 2) * u ** 2)
    br12 = 2 * r / q + eta_jet.dr * u / 2
    br22 = 1 + eta_jet.dt ** 2 * u ** 2 / (4 * r ** 2 * m)
    A11 = pref * m * br22
    A22 = pref * br11 / r ** 2
    A12 = -pref * eta_jet.dt * br12 * u / (2 * r ** 2)
    hbar = hbar_from_jets(base_jet, eta_jet, r)
    B = hbar - (A11 * xi_prime_jet.drr + 2 * A12 * xi_prime_jet.drt
                + A22 * xi_prime_jet.dtt)
    return A11, A12, A22, B


@dataclass
class KernelData:
    """Vertical normal component and the deformation gauge of a base state."""

    vertical: ScalarField   # <N, e3>: positive inside, zero at r = 1
    gauge: ScalarField      # c(a) = w(a)/2; boundary value exactly 1/2


def kernel_data(base_state) -> KernelData:
    """Vertical unit-normal component 1/W and the gauge c(a) on the grid."""
    if base_state.chart != "graph":
        raise ChartMismatch("graph-chart kernel data")
    grid = base_state.grid
    r = grid.rr
    jet = base_state.jet()
    w = area_factor(jet, r)
    phi = (1 - r ** 2) * np.exp(-jet.value) / ((1 + r ** 2) * w)
    return KernelData(vertical=ScalarField(grid, phi),
                      gauge=ScalarField(grid, w / 2))
