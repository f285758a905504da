"""The one-parameter family of rotational critical-curvature annuli.

For shape parameter ``beta > 0, beta != 1`` the upper half of the annulus is
the radial graph of a profile integral over ``r >= R = |1-sqrt(beta)|/(1+sqrt(beta))``;
a conformal change of the radial variable maps the bigraph onto the cylinder
``[-T, T] x S^1``.  Both defining integrals carry inverse-square-root
endpoint singularities which are removed by explicit substitutions:

* conformal time: ``x = R cosh v`` flattens the neck endpoint, leaving a
  smooth integrand on ``[0, arccosh(1/R)]``;
* profile height: ``t = t0 + tau^2`` at the lower limit ``t0 = |log beta|``,
  with the radicand evaluated through ``cosh(tau^2) - 1`` so the zero at the
  neck is exact.

The end regions are re-charted as graphs at infinity: the profile factor
``p(rho) = hbar(rho) (1-rho^2)/(2 (1+rho^2))`` extends analytically to
``rho = 1`` with value ``1/sqrt(beta)``, and is stored as a Chebyshev series
on the outer radial range so its log-jet is available up to the boundary.
"""
from __future__ import annotations

import math

import numpy as np
from numpy.polynomial import chebyshev as C
from scipy.integrate import quad

from .errors import DegenerateBeta, DomainError
from .fields import CylinderGrid, FieldJet
from .geometry import PointH2xR, chart_map

_GAUSS_N = 12
_GX, _GW = np.polynomial.legendre.leggauss(_GAUSS_N)


def neck_radius(beta):
    """Neck radius |1 - sqrt(beta)|/(1 + sqrt(beta)); beta = 1 is rejected."""
    if beta <= 0:
        raise DomainError("beta must be positive")
    if beta == 1:
        raise DegenerateBeta("beta = 1 is the entire graph, not an annulus")
    g = math.sqrt(beta)
    return abs(1 - g) / (1 + g)


def _radicand(beta, tau2):
    # 2 beta cosh(t0 + tau^2) - 1 - beta^2, exact zero at tau = 0
    return ((1 + beta ** 2) * (np.cosh(tau2) - 1.0)
            + abs(beta ** 2 - 1) * np.sinh(tau2))


def _profile_integrand(beta, tau):
    tau2 = tau ** 2
    cosh_t0 = (beta + 1 / beta) / 2
    sinh_t0 = abs(beta - 1 / beta) / 2
    cosh_t = cosh_t0 * np.cosh(tau2) + sinh_t0 * np.sinh(tau2)
    return 2 * tau * (cosh_t - beta) / np.sqrt(_radicand(beta, tau2))


def _panel_cumsum(fn, lo, hi, panels):
    """Cumulative Gauss-Legendre panel integrals of a smooth integrand."""
    edges = np.linspace(lo, hi, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    nodes = mid[:, None] + half * _GX[None, :]
    vals = fn(nodes)
    panel = half * vals @ _GW
    return edges, np.concatenate([[0.0], np.cumsum(panel)])


class CutoffFunction:
    """Smooth even cutoff: 1 on |s| <= T/3, 0 on |s| >= 2T/3.

    The transition is the standard C-infinity partition bump, monotone on
    each half.  First and second derivatives are exact.
    """

    def __init__(self, half_period):
        self.T = float(half_period)

    def _pieces(self, s):
        x = (np.abs(np.asarray(s, dtype=float)) - self.T / 3) / (self.T / 3)
        return x, np.sign(np.asarray(s, dtype=float)) / (self.T / 3)

    def __call__(self, s):
        return self.value(s)

    def value(self, s):
        x, _ = self._pieces(s)
        return self._omega(x)[0]

    def jet(self, s):
        """(chi, chi', chi'') with exact chain factors."""
        x, dxds = self._pieces(s)
        w, wp, wpp = self._omega(x)
        return w, wp * dxds, wpp * dxds ** 2

    @staticmethod
    def _omega(x):
        x = np.asarray(x, dtype=float)
        inside = np.clip(x, 1e-12, 1 - 1e-12)
        with np.errstate(over='ignore'):
            a = np.exp(-1.0 / inside)            # g(x)
            b = np.exp(-1.0 / (1 - inside))      # g(1-x)
        ap = a / inside ** 2
        bp = -b / (1 - inside) ** 2
        app = a * (1 - 2 * inside) / inside ** 4
        bpp = b * (2 * inside - 1) / (1 - inside) ** 4
        D = a + b
        N = bp * a - ap * b
        w = b / D
        wp = N / D ** 2
        wpp = (bpp * a - app * b) / D ** 2 - 2 * N * (ap + bp) / D ** 3
        flat = (x <= 0) | (x >= 1)
        w = np.where(x <= 0, 1.0, np.where(x >= 1, 0.0, w))
        wp = np.where(flat, 0.0, wp)
        wpp = np.where(flat, 0.0, wpp)
        return w, wp, wpp


class RotationalAnnulus:
    """Quadrature tables and interpolants of one rotational annulus."""

    def __init__(self, beta, quadrature_tol=1e-12, panels=1600, cheb_deg=160):
        self.beta = float(beta)
        self.quadrature_tol = float(quadrature_tol)
        self.neck = neck_radius(beta)
        R = self.neck
        # neck consistency: the chart radius of the neck matches |log beta|
        chi_R = 2 * math.log((1 + R) / (1 - R))
        if abs(chi_R - abs(math.log(beta))) > 1e-12 * max(1.0, abs(math.log(beta))):
            raise DomainError("neck identity violated; beta out of range")

        self._v1 = math.acosh(1.0 / R)
        pref = 4.0 / abs(1 - beta)

        def ds_dv(v):
            return pref / np.sqrt(1.0 / R ** 2 - R ** 2 * np.cosh(v) ** 2)

        v_edges, s_cum = _panel_cumsum(ds_dv, 0.0, self._v1, panels)
        self.total_time = float(s_cum[-1])
        self._v_edges = v_edges
        self._s_cum = s_cum
        # monotone spline pair: forward s(v) and backward v(s)
        from scipy.interpolate import CubicSpline
        self._s_of_v = CubicSpline(v_edges, s_cum)
        self._v_of_s = CubicSpline(s_cum, v_edges)

        # radius where the profile turns positive: the upper half of an
        # immersed annulus (beta > 1) dips below the symmetry slice first
        if beta > 1:
            from scipy.optimize import brentq
            self.profile_zero = brentq(self.profile_height,
                                       R + 1e-9, 1 - 1e-9, xtol=1e-13)
        else:
            self.profile_zero = R

        # chart switch: outside it the surface is charted as a graph at
        # infinity, so the height must be safely positive there; inside,
        # direct ambient evaluation is well conditioned (radius << 1)
        lo = self.profile_zero + 0.25 * (1 - self.profile_zero)
        two_thirds = self.radius_of_time(2 * self.total_time / 3)
        self.switch_radius = max(float(two_thirds), lo + 0.25 * (1 - lo))
        self.switch_time = self.conformal_time(self.switch_radius)

        def dh_dv(v):
            x = R * np.cosh(v)
            u = 1 - x ** 2
            Q = u ** 2 + 8 * x ** 2
            return (Q - beta * u ** 2) / u ** 2 * ds_dv(v)

        # height along the cylinder coordinate, covering past the switch
        r_hmax = min(0.5 * (1 + self.switch_radius), 0.995)
        v_mid = math.acosh(r_hmax / R)
        vm_edges, h_cum = _panel_cumsum(dh_dv, 0.0, v_mid, panels)
        self._h_of_v = CubicSpline(vm_edges, h_cum)
        self._v_mid = v_mid

        # boundary-chart profile factor p = hbar u / (2 q) on the outer range
        k = np.arange(cheb_deg + 1)
        nodes = np.cos(np.pi * k / cheb_deg)          # Lobatto, includes +-1
        rho = lo + (nodes + 1) * (1 - lo) / 2
        vals = np.empty_like(rho)
        for i, rv in enumerate(rho):
            if rv >= 1.0 - 1e-14:
                vals[i] = 1.0 / math.sqrt(beta)
            else:
                hb = self.profile_height(rv)
                vals[i] = hb * (1 - rv ** 2) / (2 * (1 + rv ** 2))
        self._p_lo = lo
        coef = C.chebfit(nodes, vals, cheb_deg)
        # truncate at the decay floor: trailing roundoff-level coefficients
        # would otherwise dominate endpoint derivatives (T_k'' ~ k^4 at +-1)
        mag = np.abs(coef) / np.max(np.abs(coef))
        above = np.nonzero(mag > 1e-13)[0]
        cut = int(above.max()) + 4 if above.size else cheb_deg
        self._p_coef = coef[:cut + 1]

        # boundary constants of the height remainder D = hbar - asymptote:
        # D(1) by quadrature of the subtracted integrand plus its tail
        # series, D'(1) in closed form
        self._D1 = self._height_remainder_limit()
        self._Dp1 = (1 - 3 * beta ** 2) / (4 * beta * math.sqrt(beta))
        rb = math.sqrt(beta)
        b1_boundary = -rb * self._D1 / 2
        p2_boundary = self._D1 / 2 - self._Dp1 - 1 / (2 * rb)
        self._b_boundary = (-0.5 * math.log(beta), b1_boundary,
                            p2_boundary * rb - b1_boundary ** 2)

    def _height_remainder_limit(self, t_cut=14.0):
        """D(1) = lim (hbar - (1+r)/((1-r) sqrt(beta))), via the integral of
        g - e^{t/2}/(2 sqrt(beta)) with a series tail."""
        beta = self.beta
        rb = math.sqrt(beta)
        t0 = abs(math.log(beta))
        # g1 = g - e^{t/2}/(2 rb), integrated in t = t0 + tau^2
        def integrand(tau):
            t = t0 + tau ** 2
            return (_profile_integrand(beta, tau)
                    - 2 * tau * np.exp(t / 2) / (2 * rb))
        head, _ = quad(integrand, 0.0, math.sqrt(t_cut - t0),
                       epsabs=1e-13, epsrel=1e-13, limit=200)
        # tail: g1 = sum_k c_k e^{-(2k-1)t/2}/(2 rb) from the z-expansion of
        # (1 - 2 beta z + z^2)(1 - (1+beta^2) z/beta + z^2)^(-1/2) - 1
        P = np.polynomial.polynomial
        x = np.array([0.0, -(1 + beta ** 2) / beta, 1.0])
        inv_sqrt = np.zeros(7)
        inv_sqrt[0] = 1.0
        xa = np.array([1.0])
        for ck in (-0.5, 3 / 8, -5 / 16, 35 / 128, -63 / 256, 231 / 1024):
            xa = P.polymul(xa, x)[:7]
            inv_sqrt[:xa.size] += ck * xa
        bracket = P.polymul(np.array([1.0, -2 * beta, 1.0]), inv_sqrt)[:7]
        bracket[0] = 0.0
        tail = sum(bracket[k] * (2.0 / (2 * k - 1))
                   * math.exp(-(2 * k - 1) * t_cut / 2)
                   for k in range(1, 7)) / (2 * rb)
        return -math.exp(t0 / 2) / rb + head + tail

    # -- scalar geometry ---------------------------------------------------
    @property
    def value_at_infinity(self):
        """Boundary trace of the end in the graph chart: -(log beta)/2."""
        return -0.5 * math.log(self.beta)

    def radicand(self, x):
        """16 beta x^2 - (1-beta)^2 (1-x^2)^2, in exact factored form."""
        x = np.asarray(x, dtype=float)
        R = self.neck
        return ((1 - self.beta) ** 2 * (x ** 2 - R ** 2)
                * (1.0 / R ** 2 - x ** 2))

    def profile_height(self, r):
        """hbar(r) by adaptive quadrature with the neck desingularized."""
        r = float(r)
        if not self.neck <= r < 1.0:
            raise DomainError(f"profile defined on [{self.neck:.6f}, 1)")
        beta = self.beta
        chi_r = 2 * math.log((1 + r) / (1 - r))
        t0 = abs(math.log(beta))
        if chi_r <= t0:
            return 0.0
        tau_max = math.sqrt(chi_r - t0)
        val, _ = quad(lambda tau: _profile_integrand(beta, tau), 0.0, tau_max,
                      epsabs=self.quadrature_tol, epsrel=self.quadrature_tol,
                      limit=200)
        return val

    def conformal_time(self, x):
        """psi(x): conformal time of radius x, increasing onto [0, T]."""
        x = float(x)
        if not self.neck <= x <= 1.0:
            raise DomainError("conformal time defined on [neck, 1]")
        if x == 1.0:
            return self.total_time
        return float(self._s_of_v(math.acosh(x / self.neck)))

    def radius_of_time(self, s):
        """Even inverse r(s) of the conformal time."""
        s = np.abs(np.asarray(s, dtype=float))
        v = self._v_of_s(np.clip(s, 0.0, self.total_time))
        return np.minimum(self.neck * np.cosh(v), 1.0)

    def radius_jet(self, s):
        """(r, r', r'') along the cylinder coordinate, odd/even in s."""
        s = np.asarray(s, dtype=float)
        r = self.radius_of_time(s)
        rp = np.sign(s) * np.sqrt(np.maximum(self.radicand(r), 0.0)) / 4
        x = r
        Sp = 32 * self.beta * x + 4 * (1 - self.beta) ** 2 * x * (1 - x ** 2)
        return r, rp, Sp / 32

    def height_jet(self, s):
        """(h, h', h'') of the odd height profile; |s| within the inner range."""
        s = np.asarray(s, dtype=float)
        v = self._v_of_s(np.abs(s))
        if np.any(v > self._v_mid * (1 + 1e-9)):
            raise DomainError("height profile tabulated on the inner range only")
        h = np.sign(s) * self._h_of_v(np.minimum(v, self._v_mid))
        r, rp, _ = self.radius_jet(s)
        u = 1 - r ** 2
        Q = u ** 2 + 8 * r ** 2
        hp = (Q - self.beta * u ** 2) / u ** 2    # even in s
        Qp = -4 * r * u + 16 * r
        dhp_dr = ((Qp + 4 * self.beta * u * r) / u ** 2
                  + 4 * r * (Q - self.beta * u ** 2) / u ** 3)
        hpp = dhp_dr * rp
        return h, hp, hpp

    # -- boundary-chart profile jets ----------------------------------------
    def profile_factor(self, rho):
        """p = hbar (1-r^2)/(2 (1+r^2)) on the outer radial range."""
        rho = np.asarray(rho, dtype=float)
        if np.any(rho < self._p_lo - 1e-12):
            raise DomainError("profile factor tabulated on the outer range only")
        x = np.clip(2 * (rho - self._p_lo) / (1 - self._p_lo) - 1, -1.0, 1.0)
        return C.chebval(x, self._p_coef)

    def end_chart_jet(self, rho, u_floor=2e-4):
        """Log-jet of the end written as a graph at infinity: b = log p.

        Interior points use closed forms of the profile slope; within
        ``u_floor`` of the boundary (in 1-r^2) the jet switches to the exact
        boundary constants with a Taylor correction.
        """
        rho = np.asarray(rho, dtype=float)
        u = 1 - rho ** 2
        q = 1 + rho ** 2
        near = u < u_floor
        safe = np.where(near, (1 + self._p_lo) / 2, rho)
        us, qs = 1 - safe ** 2, 1 + safe ** 2
        p = self.profile_factor(safe)
        hb = 2 * qs * p / us
        Q = us ** 2 + 8 * safe ** 2
        a = Q - self.beta * us ** 2
        S = self.radicand(safe)
        Qp = 16 * safe - 4 * safe * us
        ap = Qp + 4 * self.beta * safe * us
        Sp = 2 * self.beta * Qp + 4 * (1 + self.beta ** 2) * safe * us
        hbp = 4 * a / (us ** 2 * np.sqrt(S))
        hbpp = (4 / (us ** 2 * np.sqrt(S))) * (ap + 4 * safe * a / us
                                               - a * Sp / (2 * S))
        ratio = hbp / hb
        b = np.log(p)
        b1 = ratio - 2 * safe / us - 2 * safe / qs
        b2 = (hbpp / hb - ratio ** 2
              - (2 / us + 4 * safe ** 2 / us ** 2)
              - (2 / qs - 4 * safe ** 2 / qs ** 2))
        b0c, b1c, b2c = self._b_boundary
        if np.any(near):
            d = rho - 1.0
            b = np.where(near, b0c + b1c * d + 0.5 * b2c * d ** 2, b)
            b1 = np.where(near, b1c + b2c * d, b1)
            b2 = np.where(near, b2c, b2)
        return b, b1, b2

    def time_of_radius_jet(self, rho):
        """(s, s', s'') of the conformal time as a function of radius."""
        rho = np.asarray(rho, dtype=float)
        S = self.radicand(rho)
        sp = 4.0 / np.sqrt(S)
        Spr = (32 * self.beta * rho
               + 4 * (1 - self.beta) ** 2 * rho * (1 - rho ** 2))
        spp = -2.0 * Spr / S ** 1.5
        v = np.arccosh(np.clip(rho / self.neck, 1.0, None))
        s = self._s_of_v(v)
        return s, sp, spp

    def sturm_potential(self, s):
        """Potential of the conformal stability operator, q(s); even in s.

        Closed form obtained from the profile curvatures:
        ``q = sigma22 (phi^2 - 2 k1 k2)`` with the compactification
        cancellation performed exactly; ``q(+-T) = 1 + beta^2``.
        """
        r = self.radius_of_time(s)
        b = self.beta
        r2 = r ** 2
        even = r2 ** 4 + 4 * r2 ** 3 + 22 * r2 ** 2 + 4 * r2 + 1
        odd = r2 ** 4 + 4 * r2 ** 3 - 10 * r2 ** 2 + 4 * r2 + 1
        num = (1 + b ** 2) * even - 2 * b * odd
        return num / (8 * r2 * (1 + r2) ** 2)

    def vertical_normal_profile(self, s):
        """<N, e3> along the cylinder coordinate: odd, zero at s = 0, +-T."""
        s = np.asarray(s, dtype=float)
        r = self.radius_of_time(s)
        u = 1 - r ** 2
        q = 1 + r ** 2
        S = np.maximum(self.radicand(r), 0.0)
        return np.sign(s) * u * np.sqrt(S) / (4 * r * q)

    def grid(self, ns=128, ntheta=64):
        return CylinderGrid(self.total_time, ns=ns, ntheta=ntheta)

    def table(self, n=200):
        """Rows (r, hbar, psi) for export."""
        r = np.linspace(self.neck, 1.0 - 1e-8, n)
        r[0] = self.neck
        rows = []
        for rv in r:
            rows.append((rv, self.profile_height(rv), self.conformal_time(rv)))
        return rows


def annulus_immersion(annulus: RotationalAnnulus, cutoff: CutoffFunction,
                      eta_fn, s, theta) -> PointH2xR:
    """Point of the deformed annulus at cylinder coordinates (s, theta).

    ``eta_fn`` is a callable ``(s, theta) -> field value`` (0 gives the
    rotational annulus itself).  The deformation scales the horizontal
    coordinate by ``e^{-chi eta}`` and the height by ``e^{(1-chi) eta}``.
    """
    s = float(s)
    if abs(s) > annulus.total_time:
        raise DomainError("|s| exceeds the half-period")
    chi = float(cutoff.value(s))
    eta = float(eta_fn(s, theta)) if callable(eta_fn) else float(eta_fn)
    r = float(annulus.radius_of_time(s))
    try:
        h, _, _ = annulus.height_jet(np.array([s]))
        hv = float(h[0])
    except DomainError:
        hb = annulus.profile_height(min(r, 1 - 1e-13))
        hv = math.copysign(hb, s)
    w = math.exp(-chi * eta) * complex(chart_map(r, theta))
    if abs(w) >= 1.0:
        w = w / abs(w) * (1 - 1e-15)
    return PointH2xR(w, math.exp((1 - chi) * eta) * hv)
