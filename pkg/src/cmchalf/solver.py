"""Bordered Newton solves for prescribed asymptotic data, and flux checks.

Three problems share one Newton engine:

* entire graphs over the disk (one trace, one-dimensional kernel, Keller
  bordering by the vertical-normal field);
* exterior-domain graphs (two traces, strictly stable, no bordering);
* deformed annuli on the cylinder (two traces, bordered; the unknown is the
  chart deformation field itself, since the normal-speed gauge changes sign
  for shape parameters > 1 and cannot be divided out globally).

The kernel-projected component of the residual is never forced to zero; it
is reported as the solvability obstruction, which vanishes precisely on the
constraint manifold of admissible boundary data.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import curvature, jacobi
from .annulus_ops import AnnulusChart
from .errors import (ChartMismatch, DomainError, LeftNeighborhood,
                     LinearSolveSingular, MaxIterations, UnexpectedKernel)
from .fields import CylinderGrid, DiskGrid, ScalarField, circle_mean
from .geometry import SurfaceState, hyperboloid_state
from .metric import height
from .rotational import RotationalAnnulus


# -- boundary data -------------------------------------------------------------

class BoundaryData:
    """Circle function stored as Fourier coefficients (real field)."""

    def __init__(self, coeffs, ntheta):
        self.coeffs = np.asarray(coeffs, dtype=complex)
        self.ntheta = int(ntheta)

    @classmethod
    def from_values(cls, values):
        values = np.asarray(values, dtype=float)
        return cls(np.fft.rfft(values) / values.size, values.size)

    @classmethod
    def constant(cls, c, ntheta=128):
        values = np.full(ntheta, float(c))
        return cls.from_values(values)

    @classmethod
    def from_terms(cls, terms, ntheta=128):
        """terms: mapping mode -> coefficient of cos, or (cos, sin) pair."""
        values = np.zeros(ntheta)
        theta = 2 * np.pi * np.arange(ntheta) / ntheta
        for n, c in terms.items():
            re, im = (c if isinstance(c, (tuple, list)) else (c, 0.0))
            values += re * np.cos(n * theta) + im * np.sin(n * theta)
        return cls.from_values(values)

    @classmethod
    def eps_translate(cls, eps, theta0=0.0, ntheta=128):
        """Trace of the horizontally translated model graph."""
        theta = 2 * np.pi * np.arange(ntheta) / ntheta
        vals = (np.log(np.abs(1 - eps * np.exp(1j * (theta - theta0))))
                - 0.5 * np.log1p(-eps ** 2))
        return cls.from_values(vals)

    def values(self, ntheta=None):
        n = ntheta or self.ntheta
        coeffs = np.zeros(n // 2 + 1, dtype=complex)
        m = min(coeffs.size, self.coeffs.size)
        coeffs[:m] = self.coeffs[:m]
        return np.fft.irfft(coeffs * n, n=n)

    def mean_exp_neg2(self, oversample=4):
        """Circle mean of e^{-2 gamma} by (spectrally exact) quadrature."""
        n = max(512, oversample * self.ntheta)
        return circle_mean(np.exp(-2.0 * self.values(n)))

    @property
    def constraint_residual(self):
        return abs(self.mean_exp_neg2() - 1.0)

    def __add__(self, c):
        out = self.coeffs.copy()
        out[0] += c
        return BoundaryData(out, self.ntheta)


def project_to_constraint(gamma: BoundaryData) -> BoundaryData:
    """Additive offset landing on mean(e^{-2 gamma}) = 1; idempotent."""
    return gamma + 0.5 * np.log(gamma.mean_exp_neg2())


def pair_constraint_residual(top: BoundaryData, bottom: BoundaryData):
    """Flux-conservation defect |mean e^{-2 top} - mean e^{-2 bottom}|."""
    return abs(top.mean_exp_neg2() - bottom.mean_exp_neg2())


def tangent_constraint_check(gamma_a: BoundaryData, gamma_b: BoundaryData):
    """Normalized pairing <dgamma, e^{-2 gamma}> along a data path."""
    n = max(512, 4 * gamma_a.ntheta)
    va, vb = gamma_a.values(n), gamma_b.values(n)
    d = vb - va
    norm = np.sqrt(circle_mean(d ** 2))
    if norm == 0:
        return 0.0
    return circle_mean(d * np.exp(-2 * va)) / norm


def tangent_constraint_check_pair(pair_a, pair_b):
    """Annulus analogue: difference of the top and bottom pairings."""
    n = 512
    (ta, ba), (tb, bb) = pair_a, pair_b
    dt_ = tb.values(n) - ta.values(n)
    db_ = bb.values(n) - ba.values(n)
    norm = np.sqrt(circle_mean(dt_ ** 2) + circle_mean(db_ ** 2))
    if norm == 0:
        return 0.0
    top = circle_mean(dt_ * np.exp(-2 * ta.values(n)))
    bot = circle_mean(db_ * np.exp(-2 * ba.values(n)))
    return (top - bot) / norm


def axis_from_trace(gamma: BoundaryData) -> complex:
    """Horizontal translation best matching a trace: first harmonic of
    e^{-2 gamma} (the Poisson-kernel signature of a translated model end)."""
    n = max(512, 4 * gamma.ntheta)
    theta = 2 * np.pi * np.arange(n) / n
    c1 = np.mean(np.exp(-2 * gamma.values(n)) * np.exp(-1j * theta))
    return np.conj(c1)


# -- harmonic extensions ---------------------------------------------------------

def harmonic_extension(grid, outer, inner=None) -> ScalarField:
    """Flat-Laplacian harmonic field with the given boundary trace(s).

    Disk grids use the exact per-mode solution r^|n|; exterior grids combine
    r^n and (R/r)^n; cylinder grids combine sinh profiles.  ``outer`` and
    ``inner`` may be BoundaryData or node-value arrays.
    """
    def vals(b):
        if b is None:
            return None
        if isinstance(b, BoundaryData):
            return b.values(grid.ntheta)
        return np.asarray(b, dtype=float)

    vo, vi = vals(outer), vals(inner)
    n = grid.ntheta
    co = np.fft.rfft(vo) / n
    modes = np.arange(co.size)
    if isinstance(grid, DiskGrid) and grid.r_inner == 0.0:
        if vi is not None:
            raise DomainError("full disk takes a single trace")
        prof = grid.r[:, None] ** modes[None, :]
        return ScalarField(grid, np.fft.irfft(prof * co[None, :] * n, n=n,
                                              axis=1))
    if isinstance(grid, DiskGrid):
        R = grid.r_inner
        ci = np.fft.rfft(vi) / n
        r = grid.r[:, None]
        f1 = r ** modes[None, :]
        f2 = (R / r) ** modes[None, :]
        out = np.zeros((grid.r.size, co.size), dtype=complex)
        # mode 0: a + b log r / log R
        out[:, 0] = co[0] + (ci[0] - co[0]) * np.log(grid.r) / np.log(R)
        for k in modes[1:]:
            # basis r^k, (R/r)^k: values [[R^k, 1], [1, R^k]] at (R, 1)
            Rk = R ** k
            A = np.array([[Rk, 1.0], [1.0, Rk]])
            sol = np.linalg.solve(A, np.array([ci[k], co[k]]))
            out[:, k] = sol[0] * f1[:, k] + sol[1] * f2[:, k]
        return ScalarField(grid, np.fft.irfft(out * n, n=n, axis=1))
    # cylinder
    T = grid.T
    cb = np.fft.rfft(vi) / n      # bottom trace at s = -T
    s = grid.s[:, None]
    out = np.zeros((grid.s.size, co.size), dtype=complex)
    out[:, 0] = (co[0] * (s[:, 0] + T) + cb[0] * (T - s[:, 0])) / (2 * T)
    for k in modes[1:]:
        # sinh(k(s+T))/sinh(2kT), exponential-scaled for large kT
        e_top = np.exp(k * (s[:, 0] - T))
        e_bot = np.exp(-k * (s[:, 0] + T))
        den = -np.expm1(-4 * k * T)
        out[:, k] = (co[k] * e_top * (1 - np.exp(-2 * k * (s[:, 0] + T))) / den
                     + cb[k] * e_bot * (1 - np.exp(-2 * k * (T - s[:, 0]))) / den)
    return ScalarField(grid, np.fft.irfft(out * n, n=n, axis=1))


# -- decomposition ----------------------------------------------------------------

@dataclass
class Decomposition:
    """Trace, kernel coordinate, and boundary-zero remainder of a field."""

    trace: BoundaryData
    kernel_coord: float
    remainder: ScalarField
    orthogonality_defect: float
    harmonic_part: ScalarField
    base: SurfaceState


def decompose(eta, base: SurfaceState) -> Decomposition:
    """Split eta = a + 2 c(a) (mu + lambda phi + sigma) about a graph base."""
    if base.chart != "graph":
        raise ChartMismatch("decomposition lives on graph-chart states")
    grid = base.grid
    values = eta.values if isinstance(eta, (ScalarField, SurfaceState)) else np.asarray(eta)
    if isinstance(eta, SurfaceState):
        values = eta.field.values
    kd = curvature.kernel_data(base)
    phi = kd.vertical
    two_c = 2 * kd.gauge.values
    base_vals = base.field.values
    xi = (values - base_vals) / two_c
    gamma_vals = values[-1].copy()
    mu = harmonic_extension(grid, gamma_vals - base_vals[-1])
    lam = phi.l2_inner(ScalarField(grid, xi - mu.values)) / phi.l2_inner(phi)
    sigma = ScalarField(grid, xi - mu.values - lam * phi.values)
    sig_norm = sigma.l2_norm()
    defect = (abs(sigma.l2_inner(phi)) / (sig_norm * phi.l2_norm())
              if sig_norm > 0 else 0.0)
    return Decomposition(trace=BoundaryData.from_values(gamma_vals),
                         kernel_coord=float(lam), remainder=sigma,
                         orthogonality_defect=float(defect),
                         harmonic_part=mu, base=base)


def reconstruct(dec: Decomposition) -> ScalarField:
    """Inverse of decompose: a + 2c (mu + lambda phi + sigma)."""
    base = dec.base
    kd = curvature.kernel_data(base)
    vals = (base.field.values + 2 * kd.gauge.values
            * (dec.harmonic_part.values
               + dec.kernel_coord * kd.vertical.values
               + dec.remainder.values))
    return ScalarField(base.grid, vals)


# -- reports ----------------------------------------------------------------------

@dataclass
class SolveReport:
    """Outcome of one Newton solve."""

    converged: bool
    newton_iters: int
    final_residual: float
    kappa_residual: float
    state: SurfaceState
    residual_history: list = dc_field(default_factory=list)
    constraint_residual: float = float('nan')
    tolerances: dict = dc_field(default_factory=dict)
    wall_time: float = 0.0
    message: str = ""

    def as_dict(self):
        return {
            "converged": bool(self.converged),
            "newton_iters": int(self.newton_iters),
            "final_residual": float(self.final_residual),
            "kappa_residual": float(self.kappa_residual),
            "residual_history": [float(x) for x in self.residual_history],
            "constraint_residual": float(self.constraint_residual),
            "tolerances": self.tolerances,
            "wall_time": float(self.wall_time),
            "message": self.message,
            "grid": list(self.state.grid.shape),
        }


# -- Newton engine ----------------------------------------------------------------

def _newton(x0, residual_fn, operator_fn, dirichlet_rows, weights,
            border_left=None, border_right=None, tol=1e-9, max_iter=30,
            min_step=2 ** -12):
    """Damped bordered Newton; returns (x, history, kappa, message)."""
    x = x0.copy()
    wl2 = None
    if border_left is not None:
        wl2 = float(np.sum(border_left ** 2 * weights))

    def split(F):
        if border_left is None:
            return F, 0.0
        coef = float(np.sum(F * border_left * weights)) / wl2
        return F - coef * border_left, coef

    def offnorm(F):
        Fo, _ = split(F)
        m = Fo.copy()
        for i in dirichlet_rows:
            m[i] = 0.0
        return float(np.max(np.abs(m))), Fo

    F = residual_fn(x)
    resid, _ = offnorm(F)
    history = [resid]
    kappa = split(F)[1]
    it = 0
    while resid > tol:
        if it >= max_iter:
            raise MaxIterations(f"no convergence in {max_iter} iterations "
                                f"(residual {resid:.3e})")
        op = operator_fn(x)
        rhs = -F
        delta, mult = jacobi.solve_bordered(
            op, rhs, border_col=border_right,
            border_row=(border_left * weights if border_left is not None
                        else None),
            boundary_values={i: np.zeros(x.shape[1]) for i in dirichlet_rows})
        step = 1.0
        while True:
            xn = x + step * delta
            try:
                Fn = residual_fn(xn)
                rn, _ = offnorm(Fn)
            except Exception:
                rn = np.inf
            if rn <= (1 - 1e-4 * step) * resid or rn < tol:
                break
            step *= 0.5
            if step < min_step:
                raise LeftNeighborhood(
                    f"line search failed at residual {resid:.3e}")
        x, F, resid = xn, Fn, rn
        history.append(resid)
        kappa = split(F)[1]
        it += 1
    return x, history, kappa, it


# -- graph solves -----------------------------------------------------------------

def solve_entire_graph(base: SurfaceState, gamma: BoundaryData, lam=0.0,
                       tol=1e-9, kappa_tol=1e-7, max_iter=30) -> SolveReport:
    """Newton solve for an entire graph with prescribed value at infinity.

    The deformation is bordered by the kernel field; the bordered multiplier
    (the kernel-projected residual) is reported, not suppressed.
    """
    t0 = time.perf_counter()
    grid = base.grid
    if base.chart != "graph" or grid.r_inner != 0.0:
        raise ChartMismatch("entire-graph solve needs a full-disk base")
    kd = curvature.kernel_data(base)
    phi = kd.vertical.values
    gamma_vals = gamma.values(grid.ntheta)
    base_trace = base.field.values[-1]
    mu = harmonic_extension(grid, gamma_vals - base_trace)
    x0 = mu.values + lam * phi
    x0[-1] = gamma_vals - base_trace          # exact Dirichlet row

    def residual(x):
        return curvature.compactified_residual(
            base, ScalarField(grid, x)).values

    def operator(x):
        return jacobi.assemble_linearization(base, xi=ScalarField(grid, x))

    w = grid.quad_weights()
    x, history, kappa_coef, iters = _newton(
        x0, residual, operator, dirichlet_rows=(grid.r.size - 1,),
        weights=w, border_left=phi, border_right=phi, tol=tol,
        max_iter=max_iter)
    kappa = abs(kappa_coef) * np.sqrt(float(np.sum(phi ** 2 * w)))
    eta = base.field.values + 2 * kd.gauge.values * x
    state = SurfaceState(grid, ScalarField(grid, eta), base="solved-graph")
    dt = time.perf_counter() - t0
    return SolveReport(converged=history[-1] < tol and kappa < kappa_tol,
                       newton_iters=iters, final_residual=history[-1],
                       kappa_residual=kappa, state=state,
                       residual_history=history,
                       constraint_residual=gamma.constraint_residual,
                       tolerances={"tol": tol, "kappa_tol": kappa_tol},
                       wall_time=dt,
                       message="" if history[-1] < tol else "not converged")


def solve_exterior_graph(base: SurfaceState, gamma_int: BoundaryData,
                         gamma_ext: BoundaryData, tol=1e-9,
                         max_iter=30) -> SolveReport:
    """Two-boundary solve on an exterior domain; strictly stable, unbordered."""
    t0 = time.perf_counter()
    grid = base.grid
    if base.chart != "graph" or grid.r_inner <= 0.0:
        raise ChartMismatch("exterior solve needs an exterior-domain base")
    kd = curvature.kernel_data(base)
    two_c_in = 2 * kd.gauge.values[0]
    vi = (gamma_int.values(grid.ntheta) - base.field.values[0]) / two_c_in
    vo = gamma_ext.values(grid.ntheta) - base.field.values[-1]
    mu = harmonic_extension(grid, vo, inner=vi)
    x0 = mu.values

    def residual(x):
        return curvature.compactified_residual(
            base, ScalarField(grid, x)).values

    def operator(x):
        return jacobi.assemble_linearization(base, xi=ScalarField(grid, x))

    try:
        x, history, _, iters = _newton(
            x0, residual, operator,
            dirichlet_rows=(0, grid.r.size - 1),
            weights=grid.quad_weights(), tol=tol, max_iter=max_iter)
    except LinearSolveSingular as exc:
        raise UnexpectedKernel(
            "exterior operator numerically singular (grid too coarse?)"
        ) from exc
    eta = base.field.values + 2 * kd.gauge.values * x
    state = SurfaceState(grid, ScalarField(grid, eta), base="solved-exterior")
    dt = time.perf_counter() - t0
    return SolveReport(converged=history[-1] < tol, newton_iters=iters,
                       final_residual=history[-1], kappa_residual=0.0,
                       state=state, residual_history=history,
                       tolerances={"tol": tol}, wall_time=dt)


def solve_annulus(annulus: RotationalAnnulus, gamma_top: BoundaryData,
                  gamma_bottom: BoundaryData, lam=0.0, ns=128, ntheta=64,
                  tol=1e-9, kappa_tol=1e-7, max_iter=30) -> SolveReport:
    """Deform a rotational annulus to prescribed traces at both ends.

    Works directly in the chart deformation field (the normal-speed gauge is
    sign-indefinite for beta > 1).  Bordered by the conformal kernel on the
    left and a numerically continued near-null direction on the right.
    """
    t0 = time.perf_counter()
    grid = annulus.grid(ns=ns, ntheta=ntheta)
    chart = AnnulusChart(annulus, grid)
    base_state = SurfaceState(grid, ScalarField.zero(grid), base="rotational",
                              annulus=annulus)
    vt = gamma_top.values(ntheta)
    vb = gamma_bottom.values(ntheta)
    mu = harmonic_extension(grid, vt, inner=vb)

    phi = np.broadcast_to(
        annulus.vertical_normal_profile(grid.s)[:, None], grid.shape).copy()

    def residual(x):
        return chart.residual(ScalarField(grid, x).jet())

    def operator(x):
        return jacobi.assemble_linearization(
            base_state, xi=ScalarField(grid, x))

    op0 = operator(np.zeros(grid.shape))
    kright = jacobi.near_null_vector(op0, start=phi)
    nrm = np.sqrt(float(np.sum(phi ** 2)))
    kright *= nrm / np.sqrt(float(np.sum(kright ** 2)))
    if float(np.sum(kright * phi)) < 0:
        kright = -kright

    x0 = mu.values + lam * kright
    x0[0] = vb
    x0[-1] = vt
    w = grid.quad_weights()
    x, history, kappa_coef, iters = _newton(
        x0, residual, operator, dirichlet_rows=(0, grid.s.size - 1),
        weights=w, border_left=phi, border_right=kright, tol=tol,
        max_iter=max_iter)
    kappa = abs(kappa_coef) * np.sqrt(float(np.sum(phi ** 2 * w)))
    state = SurfaceState(grid, ScalarField(grid, x), base="deformed-annulus",
                         annulus=annulus)
    dt = time.perf_counter() - t0
    return SolveReport(converged=history[-1] < tol and kappa < kappa_tol,
                       newton_iters=iters, final_residual=history[-1],
                       kappa_residual=kappa, state=state,
                       residual_history=history,
                       constraint_residual=pair_constraint_residual(
                           gamma_top, gamma_bottom),
                       tolerances={"tol": tol, "kappa_tol": kappa_tol},
                       wall_time=dt)


# -- vertical flux -----------------------------------------------------------------

def slice_area(R):
    """Area of the model disk of chart radius R: 16 pi R^2/(1-R^2)^2."""
    return 16 * np.pi * R ** 2 / (1 - R ** 2) ** 2


def vertical_flux(state: SurfaceState, R, n_r=160):
    """(surface_flux, slice_area, defect) of a graph state inside radius R.

    The surface flux integrates the vertical normal component against the
    induced area by Gauss-Legendre x trapezoid quadrature.
    """
    if state.chart != "graph":
        raise ChartMismatch("vertical flux is a graph-chart diagnostic")
    if not 0 < R < 1:
        raise DomainError("0 < R < 1")
    from .metric import area_factor
    nodes, wts = np.polynomial.legendre.leggauss(n_r)
    r = (nodes + 1) * R / 2
    wr = wts * R / 2
    theta = state.grid.theta
    if state.jet_fn is not None:
        rr, tt = np.meshgrid(r, theta, indexing='ij')
        jet = state.jet_fn(rr, tt)
    else:
        from .geometry import sample_state
        rr, tt = np.meshgrid(r, theta, indexing='ij')
        jet = _interp_jet(state, rr, tt)
    u = 1 - rr ** 2
    q = 1 + rr ** 2
    w_fac = area_factor(jet, rr)
    sqrt_g = 16 * rr * q ** 2 * np.exp(jet.value) * w_fac / u ** 4
    W = q * np.exp(jet.value) * w_fac / u
    integrand = sqrt_g / W
    ring = np.mean(integrand, axis=1) * 2 * np.pi
    flux = float(np.sum(wr * ring))
    area = float(slice_area(R))
    return flux, area, flux - area


def _interp_jet(state, rr, tt):
    """First-order jet of a grid state at scattered points (for quadrature)."""
    from .fields import FieldJet
    from .geometry import _mode_splines
    spl = _mode_splines(state)
    dspl = spl.derivative()
    k = np.arange(spl(0.6).shape[-1] if False else state.grid.ntheta // 2 + 1)
    weights = np.full(k.size, 2.0)
    weights[0] = 1.0
    if state.grid.ntheta % 2 == 0:
        weights[-1] = 1.0
    shape = rr.shape
    r_flat, t_flat = rr.ravel(), tt.ravel()
    phases = np.exp(1j * np.outer(t_flat, k))
    c0 = spl(r_flat)
    c1 = dspl(r_flat)
    val = np.real(np.sum(phases * weights * c0, axis=-1)).reshape(shape)
    dr = np.real(np.sum(phases * weights * c1, axis=-1)).reshape(shape)
    dt = np.real(np.sum(phases * weights * (1j * k) * c0, axis=-1)).reshape(shape)
    z = np.zeros(shape)
    return FieldJet(val, dr, dt, z, z.copy(), z.copy())


def annulus_end_flux(annulus: RotationalAnnulus, R=None, fd_step=1e-6):
    """Conserved vertical flux of one rotational end, measured at radius R.

    Boundary Stokes form: the co-normal height flux through the circle of
    chart radius R minus the slice area; the profile slope is differenced
    from the quadrature table, not taken from a closed form.
    """
    if R is None:
        R = 0.5 * (annulus.neck + 1)
    hp = (annulus.profile_height(R + fd_step)
          - annulus.profile_height(R - fd_step)) / (2 * fd_step)
    u = 1 - R ** 2
    q = 1 + R ** 2
    s11 = 16 / u ** 2
    s22 = 16 * R ** 2 * q ** 2 / u ** 4
    ring = 2 * np.pi * hp * np.sqrt(s22 / (s11 + hp ** 2))
    return float(ring - slice_area(R))


# -- vertical translation structure ------------------------------------------------

def translation_parameter_map(base: SurfaceState, a_tilde, t):
    """Kernel coordinate of the vertical translate of a graph by t.

    Quadrature of the closed-form integrand; strictly increasing in t on
    t > -min(height).
    """
    vals = (a_tilde.field.values if isinstance(a_tilde, SurfaceState)
            else np.asarray(a_tilde.values if isinstance(a_tilde, ScalarField)
                            else a_tilde))
    grid = base.grid
    h_tilde = height(vals, grid.rr)
    hmin = float(np.min(h_tilde))
    if t <= -hmin:
        raise DomainError(f"shift {t} <= -min height {-hmin:.6f}")
    dec = decompose(ScalarField(grid, vals), base)
    kd = curvature.kernel_data(base)
    phi = kd.vertical
    gain = np.log1p(t / h_tilde) / (2 * kd.gauge.values)
    lam_shift = phi.l2_inner(ScalarField(grid, gain)) / phi.l2_inner(phi)
    return dec.kernel_coord + float(lam_shift)
