"""Models of H^2 x R, the boundary chart map, and isometry actions on states.

Points carry either a Poincare-disk coordinate or a Minkowski 4-vector.  A
``SurfaceState`` is a discretized surface in one of two charts: a graph over
the disk (or an exterior annulus) carrying the log-height field, or a
cylinder ``[-T, T] x S^1`` for deformed rotational annuli.  States built from
closed forms carry an exact jet callable so curvature evaluations are not
limited by grid differentiation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field as dc_field

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from .errors import (ChartMismatch, DomainError, DomainShrunk, NotMonotone,
                     VerticalShiftTooNegative)
from .fields import (CylinderGrid, DiskGrid, FieldJet, ScalarField,
                     fourier_interp)
from .metric import height


@dataclass(frozen=True)
class PointH2xR:
    """Point of H^2 x R: Poincare-disk coordinate and height."""

    w: complex
    x3: float

    def __post_init__(self):
        if abs(self.w) >= 1.0:
            raise DomainError("|w| must be < 1 in the Poincare disk")


@dataclass(frozen=True)
class PointMinkowski:
    """Point on the hyperboloid sheet of Minkowski 4-space, with height x3."""

    x0: float
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        defect = self.x1 ** 2 + self.x2 ** 2 - self.x0 ** 2 + 1.0
        if abs(defect) > 1e-12 * max(1.0, self.x0 ** 2) or self.x0 < 1.0 - 1e-12:
            raise DomainError(f"not on the hyperboloid: defect {defect:.3e}")


@dataclass(frozen=True)
class Isometry:
    """Isometry of H^2 x R in the fixed order reflect -> horizontal -> vertical.

    ``horizontal_center`` is the image of the origin under the horizontal
    Moebius part, ``rotation`` its rotation angle, ``vertical_shift`` the
    final height translation, and ``reflect`` conjugates the disk coordinate
    first.
    """

    vertical_shift: float = 0.0
    horizontal_center: complex = 0j
    rotation: float = 0.0
    reflect: bool = False

    def __post_init__(self):
        if abs(self.horizontal_center) >= 1.0:
            raise DomainError("horizontal center must lie in the open disk")

    @property
    def is_identity(self):
        return (self.vertical_shift == 0.0 and self.horizontal_center == 0j
                and self.rotation == 0.0 and not self.reflect)

    def apply_point(self, p: PointH2xR) -> PointH2xR:
        w = p.w
        if self.reflect:
            w = w.conjugate()
        w0 = self.horizontal_center
        w = (w + w0) / (1 + w0.conjugate() * w) * cmath.exp(1j * self.rotation)
        return PointH2xR(w, p.x3 + self.vertical_shift)


def chart_map(r, theta):
    """Boundary chart F(r, theta) = 2r/(1+r^2) e^{i theta} on 0 <= r <= 1."""
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r > 1)):
        raise DomainError("chart map defined for 0 <= r <= 1")
    return 2 * r / (1 + r ** 2) * np.exp(1j * np.asarray(theta, dtype=float))


def chart_radius(r):
    """|F(r, .)| = 2r/(1+r^2)."""
    r = np.asarray(r, dtype=float)
    return 2 * r / (1 + r ** 2)


def chart_map_inverse(w):
    """Inverse of the chart map: (r, theta) with r in [0, 1]."""
    w = np.asarray(w, dtype=complex)
    a = np.abs(w)
    # r = (1 - sqrt(1 - a^2))/a, stable form a/(1 + sqrt(1 - a^2))
    r = a / (1 + np.sqrt(np.maximum(1 - a ** 2, 0.0)))
    return r, np.angle(w)


def hyperbolic_radius(w):
    """rho(w) = 2 artanh |w| = log((1+|w|)/(1-|w|))."""
    a = np.abs(np.asarray(w, dtype=complex))
    if np.any(a >= 1.0):
        raise DomainError("hyperbolic radius needs |w| < 1")
    return np.log1p(a) - np.log1p(-a)


def hyperbolic_distance(w1, w2):
    """Geodesic distance of two Poincare-disk points."""
    w1 = complex(w1)
    w2 = complex(w2)
    num = 2 * abs(w1 - w2) ** 2
    den = (1 - abs(w1) ** 2) * (1 - abs(w2) ** 2)
    return math.acosh(1 + num / den)


def minkowski_lift(p: PointH2xR) -> PointMinkowski:
    """Lift the Poincare coordinate to the Minkowski hyperboloid sheet."""
    a2 = abs(p.w) ** 2
    den = 1 - a2
    return PointMinkowski(
        x0=(1 + a2) / den,
        x1=2 * p.w.real / den,
        x2=2 * p.w.imag / den,
        x3=p.x3,
    )


def minkowski_project(q: PointMinkowski) -> PointH2xR:
    """Inverse of the lift."""
    return PointH2xR(complex(q.x1, q.x2) / (1 + q.x0), q.x3)


def minkowski_distance(a: PointMinkowski, b: PointMinkowski):
    """Hyperbolic distance from the Lorentz pairing of the lifts."""
    c = a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2
    return math.acosh(max(c, 1.0))


class SurfaceState:
    """Discretized surface in the graph chart or the cylinder chart.

    ``field`` holds the chart deformation field (log-height offset for
    graphs).  ``jet_fn`` optionally evaluates the exact 2-jet of closed-form
    states; grid states fall back to discrete jets.
    """

    def __init__(self, grid, field, base="hyperboloid", jet_fn=None,
                 annulus=None):
        if not isinstance(field, ScalarField):
            field = ScalarField(grid, field)
        if field.grid is not grid and field.grid != grid:
            raise ValueError("field grid mismatch")
        self.grid = grid
        self.field = field
        self.base = base
        self.jet_fn = jet_fn
        self.annulus = annulus

    @property
    def chart(self):
        return self.grid.chart

    def jet(self) -> FieldJet:
        if self.jet_fn is not None:
            if isinstance(self.grid, DiskGrid):
                return self.jet_fn(self.grid.rr, self.grid.tt)
            return self.jet_fn(self.grid.ss, self.grid.tt)
        return self.field.jet()

    def trace(self):
        return self.field.trace()

    def height_values(self):
        if self.chart != "graph":
            raise ChartMismatch("height field defined in the graph chart")
        return height(self.field.values, self.grid.rr)

    def copy(self):
        return SurfaceState(self.grid, self.field.copy(), base=self.base,
                            jet_fn=self.jet_fn, annulus=self.annulus)

    def with_values(self, values):
        return SurfaceState(self.grid, ScalarField(self.grid, values),
                            base=self.base, annulus=self.annulus)


def hyperboloid_state(grid=None, nr=63, ntheta=128):
    """The rotational entire graph: zero field with exact (zero) jets."""
    grid = grid or DiskGrid(nr=nr, ntheta=ntheta)

    def jets(r, t):
        return FieldJet.zero(np.broadcast(r, t).shape)

    return SurfaceState(grid, ScalarField.zero(grid), base="hyperboloid",
                        jet_fn=jets)


def translated_hyperboloid_jet(eps, theta0):
    """Exact jet closure of the horizontally translated entire graph.

    The field is ``log|1 - eps e^{-i theta0} F(r, theta)| - log sqrt(1-eps^2)``.
    """
    if not 0 <= eps < 1:
        raise DomainError("translation parameter must satisfy 0 <= eps < 1")

    def jets(r, t):
        r = np.asarray(r, dtype=float)
        t = np.asarray(t, dtype=float)
        q = 1 + r ** 2
        u = 1 - r ** 2
        F = 2 * r / q
        Fp = 2 * u / q ** 2
        Fpp = -4 * r * (3 - r ** 2) / q ** 3
        c = np.cos(t - theta0)
        s = np.sin(t - theta0)
        # eta = (1/2) log P - (1/2) log(1-eps^2),  P = 1 - 2 eps F c + eps^2 F^2
        P = 1 - 2 * eps * F * c + eps ** 2 * F ** 2
        P_r = (-2 * eps * c + 2 * eps ** 2 * F) * Fp
        P_t = 2 * eps * F * s
        P_rr = (-2 * eps * c + 2 * eps ** 2 * F) * Fpp + 2 * eps ** 2 * Fp ** 2
        P_rt = 2 * eps * s * Fp
        P_tt = 2 * eps * F * c
        val = 0.5 * np.log(P) - 0.5 * math.log1p(-eps ** 2)
        dr = 0.5 * P_r / P
        dt = 0.5 * P_t / P
        return FieldJet(
            value=val,
            dr=dr,
            dt=dt,
            drr=0.5 * P_rr / P - 2 * dr ** 2,
            drt=0.5 * P_rt / P - 2 * dr * dt,
            dtt=0.5 * P_tt / P - 2 * dt ** 2,
        )

    return jets


def translated_hyperboloid_state(eps, theta0=0.0, grid=None, nr=63,
                                 ntheta=128):
    """Horizontal translate of the hyperboloid by eps e^{i theta0}."""
    grid = grid or DiskGrid(nr=nr, ntheta=ntheta)
    jet_fn = translated_hyperboloid_jet(eps, theta0)
    values = jet_fn(grid.rr, grid.tt).value
    return SurfaceState(grid, ScalarField(grid, values),
                        base="hyperboloid-translate", jet_fn=jet_fn)


def boundary_trace_of_translate(eps, theta0, theta):
    """Closed-form boundary trace of the translated hyperboloid."""
    theta = np.asarray(theta, dtype=float)
    mod = np.abs(1 - eps * np.exp(1j * (theta - theta0)))
    return np.log(mod) - 0.5 * math.log1p(-eps ** 2)


def _shifted_jet(base_jet_fn, t):
    """Jet closure of a vertical shift: field + log(1 + t e^{-f} u/(2q))."""

    def jets(r, th):
        r = np.asarray(r, dtype=float)
        J = base_jet_fn(r, th)
        q = 1 + r ** 2
        u = 1 - r ** 2
        A = u / (2 * q)
        Ap = -2 * r / q ** 2
        App = (6 * r ** 2 - 2) / q ** 3
        E = np.exp(-J.value)
        g = t * E * A
        g_r = -J.dr * g + t * E * Ap
        g_t = -J.dt * g
        g_rr = -J.drr * g - J.dr * g_r + t * E * (App - J.dr * Ap)
        g_rt = -J.drt * g - J.dr * g_t - J.dt * t * E * Ap
        g_tt = -J.dtt * g - J.dt * g_t
        one = 1.0 + g
        L_r, L_t = g_r / one, g_t / one
        return FieldJet(
            value=J.value + np.log1p(g),
            dr=J.dr + L_r,
            dt=J.dt + L_t,
            drr=J.drr + g_rr / one - L_r ** 2,
            drt=J.drt + g_rt / one - L_r * L_t,
            dtt=J.dtt + g_tt / one - L_t ** 2,
        )

    return jets


def _mode_splines(state: SurfaceState):
    """Radial cubic splines of the angular Fourier modes of the field."""
    grid = state.grid
    coef = np.fft.rfft(state.field.values, axis=1) / grid.ntheta
    r = grid.r
    if grid.r_inner == 0.0:
        # extend across the origin: mode n is (-1)^n-symmetric in r
        p = min(6, r.size)
        r_ext = np.concatenate([-r[:p][::-1], r])
        signs = (-1.0) ** np.arange(coef.shape[1])
        coef_ext = np.concatenate([coef[:p][::-1] * signs[None, :], coef])
        return CubicSpline(r_ext, coef_ext, axis=0)
    return CubicSpline(r, coef, axis=0)


def sample_state(state: SurfaceState, r_pts, theta_pts):
    """Evaluate the field interpolant at scattered polar points."""
    spl = _mode_splines(state)
    coef = spl(np.asarray(r_pts, dtype=float))          # (npts, nmodes)
    k = np.arange(coef.shape[-1])
    weights = np.full(coef.shape[-1], 2.0)
    weights[0] = 1.0
    if state.grid.ntheta % 2 == 0:
        weights[-1] = 1.0
    phases = np.exp(1j * np.outer(np.asarray(theta_pts, dtype=float), k))
    return np.real(np.sum(phases * weights * coef, axis=-1))


def apply_isometry(state: SurfaceState, iso: Isometry) -> SurfaceState:
    """Act on a graph state; composition order reflect -> horizontal -> vertical.

    Raises ``VerticalShiftTooNegative`` if the shift is <= -min(height) and
    ``DomainShrunk`` when a horizontal move forces a smaller exterior domain.
    """
    if state.chart != "graph":
        raise ChartMismatch("isometries act on graph-chart states here")
    if iso.is_identity:
        return state.copy()

    grid = state.grid
    out = state
    if iso.reflect:
        values = out.field.values[:, ::-1]
        values = np.roll(values, 1, axis=1)  # theta_k -> -theta_k node map
        jf = out.jet_fn
        if jf is not None:
            def reflected(r, t, _jf=jf):
                J = _jf(r, -t)
                return FieldJet(J.value, J.dr, -J.dt, J.drr, -J.drt, J.dtt)
            jf = reflected
        out = SurfaceState(grid, ScalarField(grid, values), base=out.base,
                           jet_fn=jf)

    w0 = iso.horizontal_center
    if w0 != 0j or iso.rotation != 0.0:
        W = chart_map(grid.rr, grid.tt)
        W_pre = ((W * cmath.exp(-1j * iso.rotation) - w0)
                 / (1 - np.conj(w0) * W * cmath.exp(-1j * iso.rotation)))
        r_pre, t_pre = chart_map_inverse(W_pre)
        if grid.r_inner > 0.0 and np.min(r_pre) < grid.r_inner - 1e-12:
            W_inner = chart_map(np.full(grid.ntheta, grid.r_inner), grid.theta)
            W_img = ((W_inner + w0) / (1 + np.conj(w0) * W_inner)
                     * cmath.exp(1j * iso.rotation))
            r_img, _ = chart_map_inverse(W_img)
            raise DomainShrunk(float(np.max(r_img)))
        vals = sample_state(out, r_pre.ravel(), t_pre.ravel()).reshape(grid.shape)
        gain = np.log(np.abs(1 - np.conj(w0) * W)) - 0.5 * math.log1p(-abs(w0) ** 2)
        out = SurfaceState(grid, ScalarField(grid, vals + gain), base=out.base)

    t = iso.vertical_shift
    if t != 0.0:
        hmin = float(np.min(height(out.field.values, grid.rr)))
        if t <= -hmin:
            raise VerticalShiftTooNegative(
                f"shift {t} <= -min height {-hmin:.6f}")
        u = 1 - grid.rr ** 2
        q = 1 + grid.rr ** 2
        gain = np.log1p(t * np.exp(-out.field.values) * u / (2 * q))
        jf = _shifted_jet(out.jet_fn, t) if out.jet_fn is not None else None
        out = SurfaceState(grid, ScalarField(grid, out.field.values + gain),
                           base=out.base, jet_fn=jf)
    return out


def _chi_infty(rho):
    return 2 * (np.log1p(rho) - np.log1p(-rho))


def normal_graph_to_eta(zeta, nr=63, ntheta=128, fine=2048):
    """Chart the normal graph over the model surface at offset ``zeta``.

    ``zeta`` is a callable ``(rho, theta) -> offset`` on the closed disk (a
    ``ScalarField`` on a disk grid is also accepted).  The radial
    reparametrization is inverted by bisection with a Newton polish on a fine
    monotone-checked table, per angular node.
    """
    if isinstance(zeta, ScalarField):
        src = SurfaceState(zeta.grid, zeta)

        def zfun(rho, th):
            rho = np.asarray(rho, dtype=float)
            th = np.broadcast_to(th, rho.shape)
            return sample_state(src, rho.ravel(), th.ravel()).reshape(rho.shape)
    else:
        zfun = zeta

    grid = DiskGrid(nr=nr, ntheta=ntheta)
    rho_tab = 1 - np.geomspace(1.0, 1e-9, fine)
    rho_tab[0] = 0.0
    eta = np.empty(grid.shape)
    for k, th in enumerate(grid.theta):
        zt = zfun(rho_tab, np.full_like(rho_tab, th))
        m_tab = _chi_infty(rho_tab) - 2 * rho_tab * zt / (1 + rho_tab ** 2)
        dm = np.diff(m_tab)
        if np.any(dm <= 0):
            bad = np.max(np.nonzero(dm <= 0)[0])
            if bad >= fine - 2:
                raise NotMonotone(
                    "radial reparametrization not increasing near r = 1")
            lo = bad + 1
        else:
            lo = 0
        if lo > 0:
            raise DomainShrunk(rho_tab[lo],
                               "offset too large for an entire-graph chart")

        def mfun(rho, _th=th):
            z = float(zfun(np.array([rho]), np.array([_th]))[0])
            return _chi_infty(rho) - 2 * rho * z / (1 + rho ** 2)

        for j, rt in enumerate(grid.r[:-1]):
            target = _chi_infty(rt)
            idx = int(np.searchsorted(m_tab, target))
            lo_b = rho_tab[max(idx - 1, 0)]
            hi_b = rho_tab[min(idx, fine - 1)]
            if lo_b == hi_b:
                rho = lo_b
            else:
                rho = brentq(lambda x: mfun(x) - target, lo_b, hi_b,
                             xtol=1e-15, rtol=8.9e-16)
            z = float(zfun(np.array([rho]), np.array([th]))[0])
            u, q = 1 - rho ** 2, 1 + rho ** 2
            h_new = 2 * q / u + z * u / q
            ut, qt = 1 - rt ** 2, 1 + rt ** 2
            eta[j, k] = np.log(h_new * ut / (2 * qt))
        eta[-1, k] = 0.5 * float(zfun(np.array([1.0]), np.array([th]))[0])
    return SurfaceState(grid, ScalarField(grid, eta), base="normal-graph")


def asymptotic_distance(s1: SurfaceState, s2: SurfaceState):
    """Asymptotic horizontal signed distance, as a function of theta.

    Returns ``theta -> 2 (trace_1 - trace_2)``: twice the difference of the
    values at infinity, the distance of ``s1`` from ``s2`` measured by how far
    inward ``s1`` sits.
    """
    if s1.chart != "graph" or s2.chart != "graph":
        raise ChartMismatch("asymptotic distance needs graph-chart states")
    if s1.grid.ntheta == s2.grid.ntheta:
        diff = s1.trace() - s2.trace()
    else:
        th = s1.grid.theta
        diff = s1.trace() - fourier_interp(s2.trace(), th)
    samples = 2.0 * diff
    theta_nodes = s1.grid.theta

    def dist(theta):
        return fourier_interp(samples, np.atleast_1d(theta))

    dist.samples = samples
    dist.theta = theta_nodes
    return dist
