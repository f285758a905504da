"""Stability operator assembly, mode shooting, and Green-identity checks.

The discrete linearization is block-tridiagonal along the radial/axial
direction with dense spectral theta-blocks, plus optional bordering by a
kernel column and a constraint row (Keller bordering for the rank-one
deficiency of the entire-graph problem).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import lu_factor, lu_solve

from . import curvature
from .annulus_ops import AnnulusChart
from .errors import (BaseNotCMC, ChartMismatch, LinearSolveSingular,
                     UnexpectedKernel)
from .fields import CylinderGrid, DiskGrid, FieldJet, ScalarField

_JETS = ('value', 'dr', 'dt', 'drr', 'drt', 'dtt')
_THETA_CACHE = {}


def theta_matrices(n):
    """Dense spectral differentiation matrices (D1, D2) on n circle nodes."""
    if n not in _THETA_CACHE:
        from .fields import fourier_diff
        eye = np.eye(n)
        _THETA_CACHE[n] = (fourier_diff(eye, 1).T.copy(),
                           fourier_diff(eye, 2).T.copy())
    return _THETA_CACHE[n]


@dataclass
class LinearizedOperator:
    """Assembled compactified stability operator about a base state."""

    grid: object
    coeffs: dict                       # jet name -> (K, N) coefficient field
    gauge: np.ndarray | None           # graph chart: multiplies the unknown
    method: str
    base_residual_sup: float
    base_state: object = None
    chart_data: object = None          # AnnulusChart for cylinder operators
    beta: float = None                 # set for cylinder-chart operators

    # -- structure -----------------------------------------------------------
    def _radial(self):
        K, N = self.grid.shape
        h = self.grid.h
        reflect = isinstance(self.grid, DiskGrid) and self.grid.r_inner == 0.0
        return K, N, h, reflect

    def blocks(self, row):
        """(A, B, C): sub/diag/super theta-blocks of the operator row."""
        K, N, h, reflect = self._radial()
        D1, D2 = theta_matrices(N)
        c = {k: self.coeffs[k][row] for k in _JETS}
        eye = np.eye(N)
        diag = (c['value'][:, None] * eye + c['dt'][:, None] * D1
                + c['dtt'][:, None] * D2)
        A = np.zeros((N, N))
        Cb = np.zeros((N, N))
        if 0 < row < K - 1:
            A += (-c['dr'][:, None] / (2 * h)) * eye
            A += (c['drr'][:, None] / h ** 2) * eye
            A += (-c['drt'][:, None] / (2 * h)) * D1
            Cb += (c['dr'][:, None] / (2 * h)) * eye
            Cb += (c['drr'][:, None] / h ** 2) * eye
            Cb += (c['drt'][:, None] / (2 * h)) * D1
            diag += (-2 * c['drr'][:, None] / h ** 2) * eye
        elif row == 0 and reflect:
            P = np.roll(eye, N // 2, axis=1)
            Cb += (c['dr'][:, None] / (2 * h)) * eye
            Cb += (c['drr'][:, None] / h ** 2) * eye
            Cb += (c['drt'][:, None] / (2 * h)) * D1
            diag += (-c['dr'][:, None] / (2 * h)) * P
            diag += (c['drr'][:, None] / h ** 2) * (P - 2 * eye)
            diag += (-c['drt'][:, None] / (2 * h)) * (P @ D1)
        if self.gauge is not None:
            g = self.gauge
            if row > 0:
                A = A * g[row - 1][None, :]
            diag = diag * g[row][None, :]
            if row < K - 1:
                Cb = Cb * g[row + 1][None, :]
        return A, diag, Cb

    def dirichlet_rows(self):
        K = self.grid.shape[0]
        if isinstance(self.grid, CylinderGrid):
            return (0, K - 1)
        if self.grid.r_inner > 0:
            return (0, K - 1)
        return (K - 1,)

    # -- matrix-free apply -----------------------------------------------------
    def apply(self, values):
        """Operator applied to grid values (no boundary-row replacement)."""
        g = self.grid
        v = values * self.gauge if self.gauge is not None else values
        f = ScalarField(g, v)
        jet = f.jet()
        out = np.zeros(g.shape)
        for k, j in zip(_JETS, jet):
            out += self.coeffs[k] * j
        return out

    def apply_field(self, xi: ScalarField) -> ScalarField:
        return ScalarField(self.grid, self.apply(xi.values))


def assemble_linearization(base_state, method="analytic", xi=None,
                           cmc_tol=1e-6):
    """Assemble the linearization about a graph or cylinder state.

    ``method='analytic'`` uses exact pointwise jet partials of the residual
    kernel; ``method='fd'`` replaces them by central differences in jet space
    with one Richardson step.  Both share the discrete derivative structure,
    so they agree to the finite-difference accuracy of the partials.
    """
    if base_state.chart == "graph":
        return _assemble_graph(base_state, method, xi, cmc_tol)
    return _assemble_cylinder(base_state, method, xi, cmc_tol)


def _jet_partials_fd(fun, jet, scale=1e-6):
    """Central jet-space differences with one Richardson extrapolation."""
    parts = []
    for name in _JETS:
        step = scale * max(1.0, float(np.max(np.abs(getattr(jet, name)))))
        deriv = {}
        for hh in (step, step / 2):
            plus = FieldJet(*(getattr(jet, k) + (hh if k == name else 0.0)
                              for k in _JETS))
            minus = FieldJet(*(getattr(jet, k) - (hh if k == name else 0.0)
                               for k in _JETS))
            deriv[hh] = (fun(plus) - fun(minus)) / (2 * hh)
        parts.append((4 * deriv[step / 2] - deriv[step]) / 3)
    return parts


def _assemble_graph(base_state, method, xi, cmc_tol):
    grid = base_state.grid
    r = grid.rr
    base_jet = base_state.jet()
    gauge = 2 * curvature.gauge_factor(base_jet, r)
    if xi is None:
        eta_jet = base_jet
    else:
        off = ScalarField(grid, gauge * xi.values)
        eta_jet = base_jet + off.jet()
    if method == "analytic":
        value, coeffs = curvature.hbar_partials(base_jet, eta_jet, r)
        coeffs = dict(zip(_JETS, coeffs))
    elif method == "fd":
        value = curvature.hbar_from_jets(base_jet, eta_jet, r)
        parts = _jet_partials_fd(
            lambda j: curvature.hbar_from_jets(base_jet, j, r), eta_jet)
        coeffs = dict(zip(_JETS, parts))
    else:
        raise ValueError(f"unknown assembly method {method!r}")
    sup = float(np.max(np.abs(value)))
    if xi is None and sup > cmc_tol:
        warnings.warn(f"base residual sup {sup:.2e} exceeds {cmc_tol:.0e}",
                      BaseNotCMC)
    return LinearizedOperator(grid=grid, coeffs=coeffs, gauge=gauge,
                              method=method, base_residual_sup=sup,
                              base_state=base_state)


def _assemble_cylinder(base_state, method, xi, cmc_tol):
    grid = base_state.grid
    chart = AnnulusChart(base_state.annulus, grid)
    eta = base_state.field if xi is None else xi
    jet = eta.jet()
    value = chart.residual(jet)
    if method == "analytic":
        coeffs = chart.coefficients(jet)
    elif method == "fd":
        parts = _jet_partials_fd(lambda j: chart.residual(j), jet)
        coeffs = dict(zip(_JETS, parts))
    else:
        raise ValueError(f"unknown assembly method {method!r}")
    sup = float(np.max(np.abs(value)))
    if xi is None and np.max(np.abs(eta.values)) < 1e-14 and sup > cmc_tol:
        warnings.warn(f"base residual sup {sup:.2e} exceeds {cmc_tol:.0e}",
                      BaseNotCMC)
    return LinearizedOperator(grid=grid, coeffs=coeffs, gauge=None,
                              method=method, base_residual_sup=sup,
                              base_state=base_state, chart_data=chart,
                              beta=base_state.annulus.beta)


def conformal_operator(annulus, ns=128, ntheta=64):
    """The conformal-chart stability operator sqrt(beta) (Delta + q(s)).

    This is the operator of the Green identity and the angular-mode Dirichlet
    problems; the solver Jacobian composes it with the deformation gauge.
    """
    grid = CylinderGrid(annulus.total_time, ns=ns, ntheta=ntheta)
    rootb = np.sqrt(annulus.beta)
    q = annulus.sturm_potential(grid.s)
    zeros = np.zeros(grid.shape)
    coeffs = {
        'value': rootb * np.broadcast_to(q[:, None], grid.shape).copy(),
        'dr': zeros, 'dt': zeros.copy(),
        'drr': np.full(grid.shape, rootb),
        'drt': zeros.copy(),
        'dtt': np.full(grid.shape, rootb),
    }
    return LinearizedOperator(grid=grid, coeffs=coeffs, gauge=None,
                              method="analytic", base_residual_sup=0.0,
                              beta=annulus.beta)


# -- bordered block-tridiagonal solver ----------------------------------------

def solve_bordered(op: LinearizedOperator, rhs, border_col=None,
                   border_row=None, boundary_values=None, shift=0.0):
    """Solve the Dirichlet problem with optional rank-one bordering.

    Interior rows carry the operator (+ optional diagonal ``shift``),
    boundary rows pin the unknown to ``boundary_values``; when bordering is
    given, the system is augmented by the column/row pair and the bordered
    multiplier is returned alongside the solution.
    """
    K, N = op.grid.shape
    dir_rows = set(op.dirichlet_rows())
    rhs = np.array(rhs, dtype=float).reshape(K, N)
    if boundary_values is not None:
        for i, vals in boundary_values.items():
            rhs[i] = vals
    nb = 1 if border_col is not None else 0
    col = (np.zeros((K, N)) if border_col is None
           else np.array(border_col, dtype=float).reshape(K, N))
    row = (np.zeros((K, N)) if border_row is None
           else np.array(border_row, dtype=float).reshape(K, N))
    for i in dir_rows:
        col[i] = 0.0
        row[i] = 0.0

    Us = [None] * K
    Fs = [None] * K
    Rs = [None] * K
    g_carry = row[0].copy()
    d_carry = 0.0
    rho_carry = 0.0
    eye = np.eye(N)
    for i in range(K):
        A, B, Cb = op.blocks(i)
        if shift:
            B = B + shift * eye
        if i in dir_rows:
            A = np.zeros((N, N))
            B = eye.copy()
            Cb = np.zeros((N, N))
        if i == 0:
            Bt, ct, rt = B, col[0].copy(), rhs[0].copy()
        else:
            Bt = B - A @ Us[i - 1]
            ct = col[i] - A @ Fs[i - 1]
            rt = rhs[i] - A @ Rs[i - 1]
        try:
            lu = lu_factor(Bt)
        except np.linalg.LinAlgError as exc:
            raise LinearSolveSingular(f"block {i} singular") from exc
        Us[i] = lu_solve(lu, Cb) if i < K - 1 else None
        Fs[i] = lu_solve(lu, ct)
        Rs[i] = lu_solve(lu, rt)
        if nb:
            rho_carry -= g_carry @ Rs[i]
            d_carry -= g_carry @ Fs[i]
            if i < K - 1:
                g_carry = row[i + 1] - g_carry @ Us[i]
    if nb:
        denom = d_carry
        if abs(denom) < 1e-300 or not np.isfinite(denom):
            raise LinearSolveSingular("bordered corner vanished")
        mult = rho_carry / denom
    else:
        mult = 0.0
    x = np.empty((K, N))
    x[K - 1] = Rs[K - 1] - Fs[K - 1] * mult
    for i in range(K - 2, -1, -1):
        x[i] = Rs[i] - Us[i] @ x[i + 1] - Fs[i] * mult
    if not np.all(np.isfinite(x)):
        raise LinearSolveSingular("non-finite solution")
    return x, mult


def near_null_vector(op: LinearizedOperator, start=None, iters=4,
                     shift=1e-10):
    """Inverse iteration for the Dirichlet near-null direction."""
    K, N = op.grid.shape
    rng = np.random.default_rng(0)
    x = (np.array(start, dtype=float).reshape(K, N) if start is not None
         else rng.standard_normal((K, N)))
    for i in op.dirichlet_rows():
        x[i] = 0.0
    x /= np.linalg.norm(x)
    for _ in range(iters):
        y, _ = solve_bordered(op, x, boundary_values=None, shift=shift)
        for i in op.dirichlet_rows():
            y[i] = 0.0
        n = np.linalg.norm(y)
        if not np.isfinite(n) or n == 0:
            break
        x = y / n
    return x


def kernel_singular_values(op: LinearizedOperator, k=3):
    """Smallest singular values/vector of the Dirichlet-restricted operator.

    Dense; intended for modest diagnostic grids.
    """
    K, N = op.grid.shape
    M = np.zeros((K * N, K * N))
    for i in range(K):
        A, B, Cb = op.blocks(i)
        if i in set(op.dirichlet_rows()):
            A = np.zeros((N, N))
            B = np.eye(N)
            Cb = np.zeros((N, N))
        M[i * N:(i + 1) * N, i * N:(i + 1) * N] = B
        if i > 0:
            M[i * N:(i + 1) * N, (i - 1) * N:i * N] = A
        if i < K - 1:
            M[i * N:(i + 1) * N, (i + 1) * N:(i + 2) * N] = Cb
    sv = np.linalg.svd(M, compute_uv=False)
    u, s, vt = np.linalg.svd(M)
    return s[-k:], vt[-1].reshape(K, N)


# -- rotational-annulus mode analysis -----------------------------------------

@dataclass
class ModeProblem:
    """One angular-mode Dirichlet shoot along the cylinder axis."""

    n: int
    s: np.ndarray
    u: np.ndarray
    end_value: float
    sup: float
    classification: str
    margin: float


def potential_q(annulus, s=None):
    """Sturm potential of the conformal stability operator; even in s."""
    if s is None:
        s = np.linspace(-annulus.total_time, annulus.total_time, 257)
    return annulus.sturm_potential(s)


def mode_shoot(annulus, n, kernel_tol=1e-6, rtol=1e-11, num=513) -> ModeProblem:
    """Shoot u'' + (q - n^2) u = 0 from (0, 1) at s = -T to s = +T."""
    T = annulus.total_time

    def rhs(s, y):
        q = float(annulus.sturm_potential(s))
        return [y[1], (n ** 2 - q) * y[0]]

    s_eval = np.linspace(-T, T, num)
    sols = {}
    for tol in (rtol, rtol / 10):
        sol = solve_ivp(rhs, (-T, T), [0.0, 1.0], method='DOP853',
                        rtol=tol, atol=1e-14, dense_output=True)
        if not sol.success:
            raise RuntimeError(f"mode {n} integration failed: {sol.message}")
        sols[tol] = sol
    u = sols[rtol / 10].sol(s_eval)[0]
    sup = float(np.max(np.abs(u)))
    endv = float(u[-1])
    margin = abs(endv) / sup
    stable = abs(sols[rtol].sol(np.array([T]))[0][0] - endv) < 10 * kernel_tol * sup
    classification = ("kernel" if margin < kernel_tol and stable
                      else "nondegenerate")
    return ModeProblem(n=n, s=s_eval, u=u, end_value=endv, sup=sup,
                       classification=classification, margin=margin)


# -- Green identity ------------------------------------------------------------

def _boundary_normal_derivative(values, h, side):
    """Third-order one-sided derivative at the first/last row."""
    if side == 'last':
        return (11 * values[-1] - 18 * values[-2] + 9 * values[-3]
                - 2 * values[-4]) / (6 * h)
    return -(11 * values[0] - 18 * values[1] + 9 * values[2]
             - 2 * values[3]) / (6 * h)


def green_identity_defect(op: LinearizedOperator, u, v):
    """Defect of the compactified Green identity for a field pair.

    Graph chart: area term against the plane measure, boundary weight
    ``e^{-trace(base)}``.  Cylinder chart: plane measure on the cylinder,
    boundary weight ``sqrt(beta)`` at both ends with opposite signs.
    """
    grid = op.grid
    uu = u.values if isinstance(u, ScalarField) else np.asarray(u)
    vv = v.values if isinstance(v, ScalarField) else np.asarray(v)
    Lu = op.apply(uu)
    Lv = op.apply(vv)
    w = grid.quad_weights()
    area = float(np.sum((uu * Lv - vv * Lu) * w))
    h = grid.h
    dtheta = 2 * np.pi / grid.ntheta
    if isinstance(grid, CylinderGrid):
        beta = op.beta
        top = (uu[-1] * _boundary_normal_derivative(vv, h, 'last')
               - vv[-1] * _boundary_normal_derivative(uu, h, 'last'))
        bot = (uu[0] * _boundary_normal_derivative(vv, h, 'first')
               - vv[0] * _boundary_normal_derivative(uu, h, 'first'))
        boundary = np.sqrt(beta) * dtheta * (np.sum(top) - np.sum(bot))
    else:
        trace = op.base_state.jet()
        gamma = trace.value[-1]
        du = _boundary_normal_derivative(uu, h, 'last')
        dv = _boundary_normal_derivative(vv, h, 'last')
        boundary = dtheta * float(np.sum(np.exp(-gamma)
                                         * (uu[-1] * dv - vv[-1] * du)))
        if grid.r_inner > 0:
            raise ChartMismatch("Green defect implemented on the full disk "
                                "and the cylinder")
    return abs(area - boundary)


def nosolution_certificate(op: LinearizedOperator, boundary=None):
    """Normalized least-squares residual of the obstructed Dirichlet problem.

    Solves the homogeneous equation with the given boundary data in the
    complement of the numerical kernel; the returned floor stays bounded away
    from zero under refinement exactly when the problem is unsolvable.
    """
    grid = op.grid
    K, N = grid.shape
    if isinstance(grid, CylinderGrid):
        bvals = {0: np.full(N, -1.0), K - 1: np.full(N, 1.0)}
    else:
        bvals = {K - 1: np.ones(N)}
    if boundary is not None:
        bvals = boundary
    if op.gauge is not None and op.base_state is not None:
        border = curvature.kernel_data(op.base_state).vertical.values
    else:
        border = near_null_vector(op)
    w = grid.quad_weights()
    x, mult = solve_bordered(op, np.zeros((K, N)), border_col=border,
                             border_row=border * w, boundary_values=bvals)
    resid = op.apply(x)
    for i in op.dirichlet_rows():
        resid[i] = 0.0
    num = np.sqrt(float(np.sum(resid ** 2 * w)))
    den = np.sqrt(float(np.sum(x ** 2 * w)))
    return num / max(den, 1e-300)
