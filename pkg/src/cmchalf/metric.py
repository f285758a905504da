"""Closed forms of the chart metric and the induced graph metric.

All induced quantities are evaluated in bracketed form:
``prefactor * [1 + c1 (1-r^2) + ...]``.  The raw products ``sigma + dh dh``
blow up like ``(1-r^2)^-4`` individually while the brackets stay finite up to
``r = 1``; every routine here works at the boundary.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fields import FieldJet


@dataclass
class MetricSample:
    """Induced graph-metric data at a point (or array of points)."""

    g11: np.ndarray
    g12: np.ndarray
    g22: np.ndarray
    det: np.ndarray
    w: np.ndarray      # reduced area factor; w = 1 on the model surface
    W: np.ndarray      # tilt factor sqrt(1 + |grad h|^2)


@dataclass
class ChristoffelSample:
    """The three nonzero chart Christoffel symbols; all others vanish."""

    g111: float   # Gamma_{11}^1
    g122: float   # Gamma_{12}^2 = Gamma_{21}^2
    g221: float   # Gamma_{22}^1

    def symbol(self, i, j, k):
        """Gamma_{ij}^k with 1-based indices; zero outside the three stored."""
        if (i, j, k) == (1, 1, 1):
            return self.g111
        if (i, j, k) in ((1, 2, 2), (2, 1, 2)):
            return self.g122
        if (i, j, k) == (2, 2, 1):
            return self.g221
        return 0.0


def sigma_metric(r):
    """Chart metric components (sigma11, sigma22, det sigma); r < 1."""
    r = np.asarray(r, dtype=float)
    if np.any(r >= 1.0):
        raise DomainError("sigma blows up at r = 1; use compactified forms")
    u = 1 - r ** 2
    q = 1 + r ** 2
    s11 = 16.0 / u ** 2
    s22 = 16.0 * r ** 2 * q ** 2 / u ** 4
    return s11, s22, s11 * s22


def christoffel(r):
    """Chart Christoffel symbols at 0 < r < 1."""
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError("christoffel defined for 0 < r < 1")
    u = 1 - r ** 2
    q = 1 + r ** 2
    Q = 1 + 6 * r ** 2 + r ** 4
    return ChristoffelSample(
        g111=2 * r / u,
        g122=Q / (r * q * u),
        g221=-r * q * Q / u ** 3,
    )


def gradient_square_poly(jet: FieldJet, r):
    """X = w^2 - 1 as the exact polynomial in (1 - r^2).

    Returns ``(X, X/u)`` where ``u = 1 - r^2``; the second form stays exact
    at the boundary.
    """
    r = np.asarray(r, dtype=float)
    u = 1 - r ** 2
    q = 1 + r ** 2
    x1 = 2 * r * jet.dr / q
    x2 = jet.dr ** 2 / 4 + np.expm1(-2 * jet.value) / q ** 2
    x4 = jet.dt ** 2 / (4 * r ** 2 * q ** 2)
    X = x1 * u + x2 * u ** 2 + x4 * u ** 4
    X_over_u = x1 + x2 * u + x4 * u ** 3
    return X, X_over_u


def area_factor(jet: FieldJet, r):
    """w = sqrt(1 + X): reduced area factor, finite and 1 at the boundary."""
    X, _ = gradient_square_poly(jet, r)
    return np.sqrt(1.0 + X)


def tilt_factor(jet: FieldJet, r):
    """W = (1+r^2) e^eta w / (1-r^2); blows up at r = 1."""
    r = np.asarray(r, dtype=float)
    return (1 + r ** 2) * np.exp(jet.value) * area_factor(jet, r) / (1 - r ** 2)


def induced_metric(jet: FieldJet, r):
    """Bracketed induced-metric components, valid up to r = 1 (r > 0)."""
    r = np.asarray(r, dtype=float)
    u = 1 - r ** 2
    q = 1 + r ** 2
    e2 = np.exp(2 * jet.value)
    br11 = (1 + 2 * r * jet.dr * u / q
            + (jet.dr ** 2 / 4 + np.expm1(-2 * jet.value) / q ** 2) * u ** 2)
    br12 = 2 * r / q + jet.dr * u / 2
    br22 = 1 + jet.dt ** 2 * e2 * u ** 2 / (4 * r ** 2)
    g11 = 16 * q ** 2 * e2 * br11 / u ** 4
    g12 = 8 * q ** 2 * jet.dt * e2 * br12 / u ** 3
    g22 = 16 * r ** 2 * q ** 2 * br22 / u ** 4
    w = area_factor(jet, r)
    det = (16 * r * q ** 2 * np.exp(jet.value) / u ** 4) ** 2 * w ** 2
    W = q * np.exp(jet.value) * w / u
    return MetricSample(g11=g11, g12=g12, g22=g22, det=det, w=w, W=W)


def metric_brackets(jet: FieldJet, r):
    """The three bracket factors (br11, br12, br22) of the induced metric."""
    r = np.asarray(r, dtype=float)
    u = 1 - r ** 2
    q = 1 + r ** 2
    br11 = (1 + 2 * r * jet.dr * u / q
            + (jet.dr ** 2 / 4 + np.expm1(-2 * jet.value) / q ** 2) * u ** 2)
    br12 = 2 * r / q + jet.dr * u / 2
    br22 = 1 + jet.dt ** 2 * np.exp(2 * jet.value) * u ** 2 / (4 * r ** 2)
    return br11, br12, br22


_HEIGHT_CEIL = 1e300


def height(eta, r):
    """Graph height h = 2 e^eta (1+r^2)/(1-r^2); +inf sentinel past overflow."""
    eta = np.asarray(eta, dtype=float)
    r = np.asarray(r, dtype=float)
    u = 1 - r ** 2
    with np.errstate(divide='ignore', over='ignore'):
        h = 2 * np.exp(eta) * (1 + r ** 2) / u
    return np.where((u <= 0) | (h > _HEIGHT_CEIL), np.inf, h)
