"""Grids, scalar fields and their discrete jets.

Two chart grids are used everywhere:

* ``DiskGrid`` -- polar grid on the closed disk (or an exterior annulus
  ``R <= r <= 1``).  Radial nodes are uniformly spaced; on the full disk they
  sit at half-offsets ``r_j = (j + 1/2) h`` with ``h = 2/(2m + 1)`` so that
  the last node is exactly ``r = 1`` and ``r = 0`` is never a node.  The
  coordinate singularity at the origin is closed by the exact reflection
  ``f(-r, theta) = f(r, theta + pi)``.
* ``CylinderGrid`` -- uniform grid on ``[-T, T] x S^1`` including both ends.

Differentiation is spectral (FFT) in theta and second-order finite
differences in the radial/axial direction.  Boundary nodes use one-sided
second-order stencils so jets are defined up to and including the boundary.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def fourier_diff(values, order=1):
    """Spectral theta-derivative along the last axis (periodic, even count)."""
    n = values.shape[-1]
    k = np.fft.rfftfreq(n, d=1.0 / n)  # 0..n/2
    coef = np.fft.rfft(values, axis=-1)
    if order == 1:
        coef = coef * (1j * k)
        if n % 2 == 0:
            coef[..., -1] = 0.0  # drop the unmatched Nyquist mode
    elif order == 2:
        coef = coef * -(k ** 2)
    else:
        raise ValueError("order must be 1 or 2")
    return np.fft.irfft(coef, n=n, axis=-1)


def fourier_interp(values, theta):
    """Evaluate the trigonometric interpolant of periodic samples at theta."""
    n = values.shape[-1]
    coef = np.fft.rfft(values, axis=-1) / n
    k = np.arange(coef.shape[-1])
    phases = np.exp(1j * np.outer(np.asarray(theta), k))
    # real signal: f = c0 + 2 Re sum_{k>0} c_k e^{ik t}  (Nyquist counted once)
    weights = np.full(coef.shape[-1], 2.0)
    weights[0] = 1.0
    if n % 2 == 0:
        weights[-1] = 1.0
    return np.real(phases @ (weights * coef))


class _RadialStencils:
    """Second-order radial difference data for a uniform node set."""

    def __init__(self, r, closure):
        self.r = np.asarray(r, dtype=float)
        self.h = self.r[1] - self.r[0]
        self.closure = closure  # 'reflect' (through the origin) or 'onesided'

    def d1(self, values):
        h = self.h
        out = np.empty_like(values)
        out[1:-1] = (values[2:] - values[:-2]) / (2 * h)
        if self.closure == 'reflect':
            ghost = np.roll(values[0], values.shape[1] // 2, axis=-1)
            out[0] = (values[1] - ghost) / (2 * h)
        else:
            out[0] = (-3 * values[0] + 4 * values[1] - values[2]) / (2 * h)
        out[-1] = (3 * values[-1] - 4 * values[-2] + values[-3]) / (2 * h)
        return out

    def d2(self, values):
        h = self.h
        out = np.empty_like(values)
        out[1:-1] = (values[2:] - 2 * values[1:-1] + values[:-2]) / h ** 2
        if self.closure == 'reflect':
            ghost = np.roll(values[0], values.shape[1] // 2, axis=-1)
            out[0] = (values[1] - 2 * values[0] + ghost) / h ** 2
        else:
            out[0] = (2 * values[0] - 5 * values[1] + 4 * values[2]
                      - values[3]) / h ** 2
        out[-1] = (2 * values[-1] - 5 * values[-2] + 4 * values[-3]
                   - values[-4]) / h ** 2
        return out


class DiskGrid:
    """Polar tensor grid on the closed disk or an exterior annulus.

    Parameters
    ----------
    nr : int
        Number of radial intervals; the grid carries ``nr + 1`` radial nodes.
    ntheta : int
        Number of equispaced angular nodes (even).
    r_inner : float
        Inner radius.  ``0`` selects the full disk with half-offset nodes and
        the origin reflection closure; ``R > 0`` selects the exterior domain
        ``[R, 1]`` with both boundary circles as node rows.
    """

    chart = "graph"

    def __init__(self, nr=63, ntheta=128, r_inner=0.0):
        if ntheta % 2:
            raise ValueError("ntheta must be even")
        self.ntheta = int(ntheta)
        self.r_inner = float(r_inner)
        if r_inner == 0.0:
            h = 2.0 / (2 * nr + 1)
            self.r = (np.arange(nr + 1) + 0.5) * h
            self.r[-1] = 1.0
            self._stencils = _RadialStencils(self.r, 'reflect')
        else:
            self.r = np.linspace(r_inner, 1.0, nr + 1)
            self._stencils = _RadialStencils(self.r, 'onesided')
        self.theta = 2 * np.pi * np.arange(ntheta) / ntheta
        self.rr, self.tt = np.meshgrid(self.r, self.theta, indexing='ij')

    @property
    def shape(self):
        return (self.r.size, self.ntheta)

    @property
    def h(self):
        return self._stencils.h

    def quad_weights(self):
        """Weights for integrals against the plane Lebesgue measure r dr dtheta."""
        w = np.full(self.r.size, self.h)
        if self.r_inner == 0.0:
            w[-1] = 0.5 * self.h
        else:
            w[0] = w[-1] = 0.5 * self.h
        return np.outer(w * self.r, np.full(self.ntheta, 2 * np.pi / self.ntheta))

    def d_r(self, values, order=1):
        return self._stencils.d1(values) if order == 1 else self._stencils.d2(values)

    def __eq__(self, other):
        return (isinstance(other, DiskGrid) and self.shape == other.shape
                and self.r_inner == other.r_inner)

    def __repr__(self):
        return (f"DiskGrid(nr={self.r.size - 1}, ntheta={self.ntheta}, "
                f"r_inner={self.r_inner})")


class CylinderGrid:
    """Uniform tensor grid on [-T, T] x S^1, both end circles included."""

    chart = "cylinder"

    def __init__(self, half_period, ns=128, ntheta=64):
        if ntheta % 2:
            raise ValueError("ntheta must be even")
        self.T = float(half_period)
        self.ntheta = int(ntheta)
        self.s = np.linspace(-self.T, self.T, ns + 1)
        self.theta = 2 * np.pi * np.arange(ntheta) / ntheta
        self.ss, self.tt = np.meshgrid(self.s, self.theta, indexing='ij')
        self._stencils = _RadialStencils(self.s, 'onesided')

    @property
    def shape(self):
        return (self.s.size, self.ntheta)

    @property
    def h(self):
        return self._stencils.h

    def quad_weights(self):
        """Weights for integrals against ds dtheta on the cylinder."""
        w = np.full(self.s.size, self.h)
        w[0] = w[-1] = 0.5 * self.h
        return np.outer(w, np.full(self.ntheta, 2 * np.pi / self.ntheta))

    def d_r(self, values, order=1):
        return self._stencils.d1(values) if order == 1 else self._stencils.d2(values)

    def __eq__(self, other):
        return (isinstance(other, CylinderGrid) and self.shape == other.shape
                and abs(self.T - other.T) < 1e-14)

    def __repr__(self):
        return (f"CylinderGrid(T={self.T!r}, ns={self.s.size - 1}, "
                f"ntheta={self.ntheta})")


@dataclass
class FieldJet:
    """Pointwise 2-jet of a scalar field: value and derivatives in (r, theta).

    Components may be scalars or arrays of a common shape.
    """

    value: np.ndarray
    dr: np.ndarray
    dt: np.ndarray
    drr: np.ndarray
    drt: np.ndarray
    dtt: np.ndarray

    @classmethod
    def zero(cls, shape=()):
        z = np.zeros(shape)
        return cls(z, z.copy(), z.copy(), z.copy(), z.copy(), z.copy())

    @classmethod
    def constant(cls, c, shape=()):
        z = np.zeros(shape)
        return cls(np.full(shape, float(c)), z, z.copy(), z.copy(), z.copy(),
                   z.copy())

    def __add__(self, other):
        return FieldJet(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        return FieldJet(*(a - b for a, b in zip(self, other)))

    def __iter__(self):
        return iter((self.value, self.dr, self.dt, self.drr, self.drt,
                     self.dtt))


class ScalarField:
    """Scalar samples on a grid with spectral/FD differentiation."""

    def __init__(self, grid, values):
        values = np.asarray(values, dtype=float)
        if values.shape != grid.shape:
            raise ValueError(f"values shape {values.shape} != grid {grid.shape}")
        self.grid = grid
        self.values = values

    @classmethod
    def zero(cls, grid):
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def from_function(cls, grid, fn):
        if isinstance(grid, DiskGrid):
            return cls(grid, fn(grid.rr, grid.tt))
        return cls(grid, fn(grid.ss, grid.tt))

    def copy(self):
        return ScalarField(self.grid, self.values.copy())

    def jet(self):
        """Discrete 2-jet: spectral in theta, second-order FD radially."""
        v = self.values
        dr = self.grid.d_r(v, 1)
        return FieldJet(
            value=v,
            dr=dr,
            dt=fourier_diff(v, 1),
            drr=self.grid.d_r(v, 2),
            drt=fourier_diff(dr, 1),
            dtt=fourier_diff(v, 2),
        )

    def trace(self):
        """Boundary values read directly at boundary nodes.

        Disk/exterior grids return the ``r = 1`` row; cylinder grids return
        the pair ``(top, bottom)`` at ``s = +T`` and ``s = -T``.
        """
        if isinstance(self.grid, CylinderGrid):
            return self.values[-1].copy(), self.values[0].copy()
        return self.values[-1].copy()

    def inner_trace(self):
        if isinstance(self.grid, DiskGrid) and self.grid.r_inner > 0:
            return self.values[0].copy()
        raise ValueError("inner trace only defined on exterior domains")

    def integral(self):
        return float(np.sum(self.values * self.grid.quad_weights()))

    def l2_inner(self, other):
        other_values = other.values if isinstance(other, ScalarField) else other
        return float(np.sum(self.values * other_values * self.grid.quad_weights()))

    def l2_norm(self):
        return np.sqrt(max(self.l2_inner(self), 0.0))

    def __add__(self, other):
        o = other.values if isinstance(other, ScalarField) else other
        return ScalarField(self.grid, self.values + o)

    def __sub__(self, other):
        o = other.values if isinstance(other, ScalarField) else other
        return ScalarField(self.grid, self.values - o)

    def __mul__(self, scalar):
        return ScalarField(self.grid, self.values * scalar)

    __rmul__ = __mul__


def circle_mean(values):
    """Mean over equispaced circle samples (exact for resolved trig)."""
    return float(np.mean(values, axis=-1))
