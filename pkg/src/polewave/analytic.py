"""Closed-form references for potentials that admit them.

The square well is solvable in Riccati-Bessel functions and the
exponential well in Bessel functions of scaled argument, so both serve
as independent checks on the grid solvers: every frozen number in the
test suite traces back to the expressions here (or to free-field
limits), not to the code under test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import gamma, jv

from ._riccati import hhat_plus, hhat_plus_d, jhat, jhat_d, yhat
from .errors import NoBoundStateError, SpecError


def free_decay(l: int, alpha: float, r) -> np.ndarray:
    """Decaying free solution with unit coefficient, exp(-alpha r) times
    the exact inverse-power dressing for l > 0.

    This is i^{l+1} hhat_l^+(i alpha r); for l = 0 it is exp(-alpha r)
    and for l = 1 it is exp(-alpha r) (1 + 1/(alpha r)).
    """
    z = 1j * alpha * np.asarray(r, dtype=float)
    return ((1j) ** (l + 1) * hhat_plus(l, z)).real


def free_decay_d(l: int, alpha: float, r) -> np.ndarray:
    """d/dr of free_decay."""
    z = 1j * alpha * np.asarray(r, dtype=float)
    return ((1j) ** (l + 1) * 1j * alpha * hhat_plus_d(l, z)).real


def _brackets(fn, lo: float, hi: float, n: int = 2000):
    """Sign-change brackets of a scalar function on [lo, hi]."""
    xs = np.linspace(lo, hi, n)
    vals = np.array([fn(x) for x in xs])
    out = []
    for i in range(n - 1):
        if vals[i] == 0.0:
            out.append((xs[i], xs[i]))
        elif vals[i] * vals[i + 1] < 0:
            out.append((xs[i], xs[i + 1]))
    return out


@dataclass(frozen=True)
class SquareWellOracle:
    """Everything about U(r) = -depth on r < radius, in closed form.

    Only l = 0 and l = 1 are supported; that covers every reference
    case in the test suite.
    """

    depth: float
    radius: float

    def _interior_k(self, k):
        return np.sqrt(np.asarray(k, dtype=complex) ** 2 + self.depth)

    def jost(self, l: int, k) -> np.ndarray:
        """Jost function F_l(k), normalized so that F = 1 at U = 0.

        Matches the interior regular solution jhat_l(K r) / K^{l+1}
        against the free outgoing solution at the well edge.
        """
        a = self.radius
        k = np.asarray(k, dtype=complex)
        bigk = self._interior_k(k)
        fe = (-1) ** l * 1j * hhat_plus(l, k * a)
        fe_d = (-1) ** l * 1j * k * hhat_plus_d(l, k * a)
        b = jhat(l, bigk * a) * fe_d / bigk - jhat_d(l, bigk * a) * fe
        return (-1) ** (l + 1) * (k / bigk) ** l * b

    def phase_shift(self, l: int, k) -> np.ndarray:
        """delta_l(k) = -arg F_l(k), principal value."""
        return -np.angle(self.jost(l, np.asarray(k, dtype=float)))

    def scattering_length(self) -> float:
        """s-wave scattering length a - tan(sqrt(U0) a) / sqrt(U0)."""
        q = math.sqrt(self.depth)
        return self.radius - math.tan(q * self.radius) / q

    def bound_condition(self, l: int, alpha: float) -> float:
        """Real function of alpha whose zeros on (0, sqrt(U0)) are the
        bound-state wavenumbers. Written in product form so there are
        no cotangent poles to confuse a bracketing search."""
        a = self.radius
        bigk = math.sqrt(self.depth - alpha * alpha)
        if l == 0:
            return bigk * math.cos(bigk * a) + alpha * math.sin(bigk * a)
        if l == 1:
            e = free_decay(1, alpha, a)
            e_d = free_decay_d(1, alpha, a)
            return float(
                bigk * jhat_d(1, bigk * a).real * e - jhat(1, bigk * a).real * e_d
            )
        raise SpecError("square-well oracle covers l = 0 and l = 1 only")

    def bound_alphas(self, l: int) -> list[float]:
        """All bound-state alphas, deepest first."""
        top = math.sqrt(self.depth) if self.depth > 0 else 0.0
        if top <= 0:
            return []
        lo, hi = 1e-9 * top, top * (1.0 - 1e-9)
        roots = []
        for x0, x1 in _brackets(lambda x: self.bound_condition(l, x), lo, hi):
            roots.append(x0 if x0 == x1 else brentq(
                lambda x: self.bound_condition(l, x), x0, x1, xtol=1e-14, rtol=1e-15))
        return sorted(roots, reverse=True)

    def _interior_coefficient(self, l: int, alpha: float) -> float:
        a = self.radius
        bigk = math.sqrt(self.depth - alpha * alpha)
        return float(free_decay(l, alpha, a) / jhat(l, bigk * a).real)

    def normalization(self, l: int, alpha: float) -> float:
        """Asymptotic coefficient N of the unit-norm bound state,
        u(r) -> N exp(-alpha r) (times the l-dependent dressing)."""
        a = self.radius
        bigk = math.sqrt(self.depth - alpha * alpha)
        a_in = self._interior_coefficient(l, alpha)
        if l == 0:
            inner = a_in**2 * (a / 2.0 - math.sin(2.0 * bigk * a) / (4.0 * bigk))
            outer = math.exp(-2.0 * alpha * a) / (2.0 * alpha)
        else:
            inner = quad(lambda r: (a_in * jhat(l, bigk * r).real) ** 2, 0.0, a)[0]
            outer = quad(lambda r: free_decay(l, alpha, r) ** 2, a, 60.0 / alpha)[0]
        return 1.0 / math.sqrt(inner + outer)

    def bound_u(self, l: int, alpha: float, r) -> np.ndarray:
        """Unit-norm bound radial function, positive at large r."""
        r = np.asarray(r, dtype=float)
        a = self.radius
        bigk = math.sqrt(self.depth - alpha * alpha)
        n = self.normalization(l, alpha)
        a_in = self._interior_coefficient(l, alpha)
        inside = r < a
        out = np.empty_like(r)
        out[inside] = a_in * jhat(l, bigk * r[inside]).real
        out[~inside] = free_decay(l, alpha, r[~inside])
        return n * out

    def physical_wave(self, l: int, k: float, r) -> np.ndarray:
        """Scattering solution behaving as sin(k r - l pi/2 + delta)/k."""
        r = np.asarray(r, dtype=float)
        a = self.radius
        bigk = float(self._interior_k(k).real)
        delta = float(self.phase_shift(l, k))
        out = np.empty_like(r)
        outside = r >= a
        out[outside] = (
            jhat(l, k * r[outside]).real * math.cos(delta)
            - yhat(l, k * r[outside]).real * math.sin(delta)
        ) / k
        edge = (
            jhat(l, k * a).real * math.cos(delta) - yhat(l, k * a).real * math.sin(delta)
        ) / k
        c_in = edge / jhat(l, bigk * a).real
        out[~outside] = c_in * jhat(l, bigk * r[~outside]).real
        return out


def exp_well_bound_alpha(depth: float, radius: float) -> float:
    """Ground-state alpha of U = -depth exp(-r/radius), from the Bessel
    closed form: the bound state is J_nu(2 a sqrt(U0) e^{-r/2a}) with
    nu = 2 a alpha, and regularity at r = 0 pins J_nu(2 a sqrt(U0)) = 0.
    """
    z0 = 2.0 * radius * math.sqrt(depth)
    fn = lambda nu: jv(nu, z0)
    brackets = _brackets(fn, 1e-6, z0, 4000)
    if not brackets:
        raise NoBoundStateError("exponential well too shallow for a bound state")
    # the largest nu root is the ground state (deepest binding)
    x0, x1 = brackets[-1]
    nu = brentq(fn, x0, x1, xtol=1e-14, rtol=1e-15)
    return nu / (2.0 * radius)


def exp_well_bound_u(depth: float, radius: float, alpha: float, r) -> np.ndarray:
    """Unnormalized exponential-well bound state J_nu(z(r)), scaled to
    unit asymptotic coefficient so it tends to exp(-alpha r)."""
    r = np.asarray(r, dtype=float)
    nu = 2.0 * radius * alpha
    z = 2.0 * radius * math.sqrt(depth) * np.exp(-r / (2.0 * radius))
    c_inf = (radius * math.sqrt(depth)) ** nu / gamma(nu + 1.0)
    return jv(nu, z) / c_inf
