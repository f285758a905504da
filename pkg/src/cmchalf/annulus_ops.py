"""Compactified residual and linearization data on the annulus cylinder.

The residual is ``sqrt(beta) * sigma22(r(s)) * (H - 1/2)``: the conformal
determinant weight normalized so the Green identity carries the boundary
weight ``sqrt(beta)`` and the base linearization is ``sqrt(beta) (Delta + q)``.

Evaluation splits the cylinder:

* inner band ``|s| < 2T/3`` (cutoff active, radius far from 1): direct
  ambient-geometry evaluation through the generated cylindrical kernel;
* end bands ``|s| >= 2T/3`` (cutoff identically zero, vertical graphs):
  re-chart as a graph at infinity and use the cancelled boundary-stable
  bracket, exact up to and including ``s = +-T``.

Jet partial derivatives follow the same split with the chain rule of the
radius/time change, so assembled operators and residuals are consistent.
"""
from __future__ import annotations

import math

import numpy as np

from ._gen_cyl import immersion_terms
from .curvature import _core as _disk_core
from .errors import NotImmersed
from .fields import FieldJet
from .metric import gradient_square_poly
from .rotational import CutoffFunction, RotationalAnnulus

_JETS = ('value', 'dr', 'dt', 'drr', 'drt', 'dtt')


def _end_mask(annulus, s):
    return np.abs(s) >= annulus.switch_time * (1 - 1e-12)


class AnnulusChart:
    """Frozen per-grid profile data for residual/operator evaluation."""

    def __init__(self, annulus: RotationalAnnulus, grid):
        self.annulus = annulus
        self.grid = grid
        self.cutoff = CutoffFunction(annulus.total_time)
        s = grid.s
        self.end = _end_mask(annulus, s)
        mid = ~self.end
        self.mid = mid
        r, rp, rpp = annulus.radius_jet(s)
        self.r = r
        h = np.zeros_like(s)
        hp = np.zeros_like(s)
        hpp = np.zeros_like(s)
        if np.any(mid):
            h[mid], hp[mid], hpp[mid] = annulus.height_jet(s[mid])
        self.mid_profile = (r[mid], rp[mid], rpp[mid], h[mid], hp[mid],
                            hpp[mid])
        self.mid_chi = self.cutoff.jet(s[mid])
        rho = r[self.end]
        self.end_sign = np.sign(s[self.end])
        self.end_rho = rho
        self.end_b = annulus.end_chart_jet(rho)          # (b, b', b'')
        _, sp, spp = annulus.time_of_radius_jet(rho)
        self.end_sp = sp
        self.end_spp = spp
        u = 1 - rho ** 2
        q = 1 + rho ** 2
        self.end_weight = math.sqrt(annulus.beta) * rho ** 2
        self.mid_weight = (math.sqrt(annulus.beta)
                           * 16 * r[mid] ** 2 * (1 + r[mid] ** 2) ** 2
                           / (1 - r[mid] ** 2) ** 4)

    # -- jet transport -----------------------------------------------------
    def _end_disk_jet(self, jet: FieldJet) -> FieldJet:
        """Boundary-chart jet of  b(rho) + eta(s(rho), theta)  at end nodes."""
        sgn = self.end_sign[:, None]
        sp = self.end_sp[:, None]
        spp = self.end_spp[:, None]
        b, b1, b2 = (a[:, None] for a in self.end_b)
        e = {k: getattr(jet, k)[self.end] for k in _JETS}
        return FieldJet(
            value=e['value'] + b,
            dr=sgn * sp * e['dr'] + b1,
            dt=e['dt'],
            drr=sp ** 2 * e['drr'] + sgn * spp * e['dr'] + b2,
            drt=sgn * sp * e['drt'],
            dtt=e['dtt'],
        )

    def _mid_args(self, jet: FieldJet):
        r, rp, rpp, h, hp, hpp = self.mid_profile
        chi, chip, chipp = self.mid_chi
        cols = lambda a: a[:, None]
        m = self.mid
        return (cols(r), cols(rp), cols(rpp), cols(h), cols(hp), cols(hpp),
                cols(chi), cols(chip), cols(chipp),
                jet.value[m], jet.dr[m], jet.dt[m],
                jet.drr[m], jet.drt[m], jet.dtt[m])

    # -- residual ----------------------------------------------------------
    def residual(self, jet: FieldJet):
        """sqrt(beta) sigma22 (H(eta) - 1/2) on the grid."""
        out = np.empty(self.grid.shape)
        if np.any(self.mid):
            vals = immersion_terms(*self._mid_args(jet))
            Hnum, detg, norm2 = vals[0], vals[1], vals[2]
            if np.any(detg <= 0) or np.any(norm2 <= 0):
                raise NotImmersed("cylindrical immersion degenerates")
            H = Hnum / (2 * detg * np.sqrt(norm2))
            out[self.mid] = self.mid_weight[:, None] * (H - 0.5)
        if np.any(self.end):
            dj = self._end_disk_jet(jet)
            rho = self.end_rho[:, None]
            X, _ = gradient_square_poly(dj, rho)
            if np.any(X <= -1.0):
                raise NotImmersed("end deformation leaves the immersion regime")
            psi = _disk_core(dj, rho, partials=False)[0]
            out[self.end] = (self.end_weight[:, None]
                             * psi / (1.0 + X) ** 1.5)
        return out

    # -- linearization coefficients -----------------------------------------
    def coefficients(self, jet: FieldJet):
        """Pointwise partials of the residual in the six cylinder jets."""
        coeffs = {k: np.empty(self.grid.shape) for k in _JETS}
        if np.any(self.mid):
            vals = immersion_terms(*self._mid_args(jet))
            (Hnum, detg, norm2) = vals[0], vals[1], vals[2]
            Hn = dict(zip(_JETS, vals[8:14]))
            dg = dict(zip(_JETS[:3], vals[14:17]))
            n2 = dict(zip(_JETS[:3], vals[17:20]))
            den = 2 * detg * np.sqrt(norm2)
            H = Hnum / den
            w = self.mid_weight[:, None]
            for k in _JETS:
                dden = 0.0
                if k in dg:
                    dden = (2 * dg[k] * np.sqrt(norm2)
                            + detg * n2[k] / np.sqrt(norm2))
                coeffs[k][self.mid] = w * (Hn[k] - H * dden) / den
        if np.any(self.end):
            dj = self._end_disk_jet(jet)
            rho = self.end_rho[:, None]
            X, _ = gradient_square_poly(dj, rho)
            if np.any(X <= -1.0):
                raise NotImmersed("end deformation leaves the immersion regime")
            w3 = (1.0 + X) ** 1.5
            psi, parts = _disk_core(dj, rho, partials=True)
            d_eta, d_n1, d_n2, d_n11, d_n12, d_n22 = parts
            # d(psi/w^3) = psi_v / w^3 - (3/2) psi X_v / w^5
            u = 1 - rho ** 2
            q = 1 + rho ** 2
            mm = np.exp(-2 * dj.value)
            X_eta = -2 * mm * u ** 2 / q ** 2
            X_n1 = (2 * rho / q + dj.dr * u / 2) * u
            X_n2 = dj.dt * u ** 4 / (2 * rho ** 2 * q ** 2)
            fac = 1.5 * psi / ((1.0 + X) * w3)
            D = {
                'value': d_eta / w3 - fac * X_eta,
                'dr': d_n1 / w3 - fac * X_n1,
                'dt': d_n2 / w3 - fac * X_n2,
                'drr': d_n11 / w3,
                'drt': d_n12 / w3,
                'dtt': d_n22 / w3,
            }
            sgn = self.end_sign[:, None]
            sp = self.end_sp[:, None]
            spp = self.end_spp[:, None]
            w = self.end_weight[:, None]
            coeffs['value'][self.end] = w * D['value']
            coeffs['dr'][self.end] = w * (sgn * sp * D['dr']
                                          + sgn * spp * D['drr'])
            coeffs['dt'][self.end] = w * D['dt']
            coeffs['drr'][self.end] = w * sp ** 2 * D['drr']
            coeffs['drt'][self.end] = w * sgn * sp * D['drt']
            coeffs['dtt'][self.end] = w * D['dtt']
        return coeffs

    # -- base-geometry fields -------------------------------------------------
    def vertical_normal(self):
        """<N, e3> of the rotational base along s: odd, zero at s = +-T."""
        return self.annulus.vertical_normal_profile(self.grid.s)

    def deformation_pairing(self):
        """<dX/d eta, N> of the base: the reciprocal gauge; sign-indefinite
        for beta > 1."""
        out = np.empty(self.grid.s.size)
        if np.any(self.mid):
            args = self._mid_args(FieldJet.zero(self.grid.shape))
            vals = immersion_terms(*[a[:, :1] if a.ndim == 2 else a
                                     for a in args])
            out[self.mid] = (vals[4] / np.sqrt(vals[2]))[:, 0]
        if np.any(self.end):
            rho = self.end_rho
            S = self.annulus.radicand(rho)
            p = self.annulus.profile_factor(rho)
            out[self.end] = np.sqrt(S) * p / (2 * rho)
        return out


