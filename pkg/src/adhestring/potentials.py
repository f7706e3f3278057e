"""Adhesion potentials for the debonding string.

The exact potential is a quadratic well clamped at the debonding
threshold ``|u| = 1``: stored energy ``u**2`` while glued, constant 1
once the bond is broken.  Its derivative drops from 2 to 0 across the
threshold.  Four one-parameter families bridge that drop:

* ``tilde(eps)`` -- continuous potential with a ramp carved inside
  ``[1-eps, 1]``; the derivative vanishes at the threshold, so ``u = 1``
  is an equilibrium.
* ``bar(eps)`` -- continuous derivative, ramp appended outside on
  ``[1, 1+eps]``; the derivative at the threshold stays 2.
* ``quad(eps)`` -- softened well ``(2-eps)/2 * u**2`` with an outside
  ramp; the derivative at the threshold is ``2-eps``.  Requires
  ``eps < 2`` so the well keeps positive stiffness.
* ``mollified(delta)`` -- convolution of the exact potential with a
  normalized C-infinity bump of radius ``delta``; genuinely smooth.

All evaluators are pure, accept scalars or numpy arrays, and broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterDomainError

THRESHOLD = 1.0

_KINDS = ("exact", "tilde", "bar", "quad", "mollified")


@dataclass(frozen=True)
class PotentialSpec:
    """Immutable description of one potential variant.

    ``param`` is the ramp width eps for tilde/bar/quad, the bump radius
    delta for mollified, and must be None for exact.
    """

    kind: str
    param: float | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterDomainError(f"unknown potential kind {self.kind!r}")
        if self.kind == "exact":
            if self.param is not None:
                raise ParameterDomainError("exact potential takes no parameter")
            return
        if self.param is None or not np.isfinite(self.param) or self.param <= 0:
            raise ParameterDomainError(
                f"{self.kind} potential needs a positive parameter, got {self.param!r}"
            )
        # tilde's inner ramp [1-eps, 1] degenerates for eps > 1
        if self.kind == "tilde" and self.param > 1:
            raise ParameterDomainError("tilde ramp width must satisfy eps <= 1")
        if self.kind == "quad" and self.param >= 2:
            raise ParameterDomainError("quad softening must satisfy eps < 2")

    @property
    def support_radius(self) -> float:
        """Half-width of the region where the derivative can be nonzero."""
        if self.kind in ("exact", "tilde"):
            return THRESHOLD
        return THRESHOLD + self.param


def exact() -> PotentialSpec:
    return PotentialSpec("exact")


def tilde(eps: float) -> PotentialSpec:
    return PotentialSpec("tilde", float(eps))


def bar(eps: float) -> PotentialSpec:
    return PotentialSpec("bar", float(eps))


def quad(eps: float) -> PotentialSpec:
    return PotentialSpec("quad", float(eps))


def mollified(delta: float) -> PotentialSpec:
    return PotentialSpec("mollified", float(delta))


# --- mollifier quadrature -------------------------------------------------
# Composite Simpson with 64 intervals on [-1, 1].  Weights are folded with
# the bump and normalized so that convolving a constant is exact.

_SIMPSON_INTERVALS = 64


def _bump_rule() -> tuple[np.ndarray, np.ndarray]:
    n = _SIMPSON_INTERVALS
    r = np.linspace(-1.0, 1.0, n + 1)
    w = np.ones(n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    psi = np.zeros(n + 1)
    inner = np.abs(r) < 1.0
    psi[inner] = np.exp(-1.0 / (1.0 - r[inner] ** 2))
    wp = w * psi
    return r, wp / wp.sum()


_BUMP_R, _BUMP_W = _bump_rule()


def _phi_exact(u: np.ndarray) -> np.ndarray:
    return np.where(np.abs(u) <= THRESHOLD, u * u, 1.0)


def _phi_prime_exact(u: np.ndarray) -> np.ndarray:
    # closed branch |u| <= 1 wins the tie: a value exactly at the
    # threshold is still glued and feels the full restoring force 2u.
    return np.where(np.abs(u) <= THRESHOLD, 2.0 * u, 0.0)


def _convolve(f, u: np.ndarray, delta: float) -> np.ndarray:
    shifted = u[..., None] - delta * _BUMP_R
    return f(shifted) @ _BUMP_W


def _phi_tilde(u: np.ndarray, eps: float) -> np.ndarray:
    au = np.abs(u)
    shift = (1.0 - eps) * (eps + 1.0 / eps)
    return np.select(
        [au <= 1.0 - eps,
         (u >= 1.0 - eps) & (u <= 1.0),
         (u >= -1.0) & (u <= -1.0 + eps)],
        [u * u,
         (2.0 * u - u * u) / eps - shift,
         -(2.0 * u + u * u) / eps - shift],
        default=1.0 + eps * eps - eps,
    )


def _phi_prime_tilde(u: np.ndarray, eps: float) -> np.ndarray:
    au = np.abs(u)
    return np.select(
        [au <= 1.0 - eps,
         (u >= 1.0 - eps) & (u <= 1.0),
         (u >= -1.0) & (u <= -1.0 + eps)],
        [2.0 * u,
         2.0 * (1.0 - u) / eps,
         -2.0 * (1.0 + u) / eps],
        default=0.0,
    )


def _phi_bar(u: np.ndarray, eps: float) -> np.ndarray:
    au = np.abs(u)
    shift = 1.0 + 1.0 / eps
    return np.select(
        [au <= 1.0,
         (u >= 1.0) & (u <= 1.0 + eps),
         (u >= -1.0 - eps) & (u <= -1.0)],
        [u * u,
         (2.0 * (1.0 + eps) * u - u * u) / eps - shift,
         -(2.0 * (1.0 + eps) * u + u * u) / eps - shift],
        default=1.0 + eps,
    )


def _phi_prime_bar(u: np.ndarray, eps: float) -> np.ndarray:
    au = np.abs(u)
    return np.select(
        [au <= 1.0,
         (u >= 1.0) & (u <= 1.0 + eps),
         (u >= -1.0 - eps) & (u <= -1.0)],
        [2.0 * u,
         2.0 * (1.0 + eps - u) / eps,
         -2.0 * (1.0 + eps + u) / eps],
        default=0.0,
    )


def _phi_quad(u: np.ndarray, eps: float) -> np.ndarray:
    au = np.abs(u)
    k = (2.0 - eps) / eps
    return np.select(
        [au <= 1.0,
         (u >= 1.0) & (u <= 1.0 + eps),
         (u >= -1.0 - eps) & (u <= -1.0)],
        [0.5 * (2.0 - eps) * u * u,
         k * ((1.0 + eps) * (u - 0.5) - 0.5 * u * u),
         -k * ((1.0 + eps) * (u + 0.5) + 0.5 * u * u)],
        default=0.5 * (2.0 - eps) * (1.0 + eps),
    )


def _phi_prime_quad(u: np.ndarray, eps: float) -> np.ndarray:
    au = np.abs(u)
    k = (2.0 - eps) / eps
    return np.select(
        [au <= 1.0,
         (u >= 1.0) & (u <= 1.0 + eps),
         (u >= -1.0 - eps) & (u <= -1.0)],
        [(2.0 - eps) * u,
         k * (1.0 + eps - u),
         -k * (1.0 + eps + u)],
        default=0.0,
    )


def phi_eval(spec: PotentialSpec, u):
    """Potential value Phi(u) for the chosen variant."""
    arr = np.asarray(u, dtype=float)
    if spec.kind == "exact":
        out = _phi_exact(arr)
    elif spec.kind == "tilde":
        out = _phi_tilde(arr, spec.param)
    elif spec.kind == "bar":
        out = _phi_bar(arr, spec.param)
    elif spec.kind == "quad":
        out = _phi_quad(arr, spec.param)
    else:
        out = _convolve(_phi_exact, arr, spec.param)
    return float(out) if np.ndim(u) == 0 else out


def phi_prime_eval(spec: PotentialSpec, u):
    """Derivative Phi'(u); the source term of the wave equation is -Phi'(u)."""
    arr = np.asarray(u, dtype=float)
    if spec.kind == "exact":
        out = _phi_prime_exact(arr)
    elif spec.kind == "tilde":
        out = _phi_prime_tilde(arr, spec.param)
    elif spec.kind == "bar":
        out = _phi_prime_bar(arr, spec.param)
    elif spec.kind == "quad":
        out = _phi_prime_quad(arr, spec.param)
    else:
        out = _convolve(_phi_prime_exact, arr, spec.param)
    return float(out) if np.ndim(u) == 0 else out


# --- structural assumption report -----------------------------------------

_SAMPLE_LO, _SAMPLE_HI = -3.0, 3.0
_EXACT_TOL = 1e-12


@dataclass(frozen=True)
class AssumptionReport:
    """Sampled verification of the structural assumptions on Phi."""

    continuous: bool
    constant_outside: bool
    convex_inside: bool
    monotone_pieces: bool
    jump_at_one: float
    sup_phi_prime: float
    sampled_points: int


def check_assumptions(spec: PotentialSpec, n_samples: int) -> AssumptionReport:
    """Sample Phi on [-3, 3] and grade it against the model assumptions.

    Continuity is judged by grid refinement: halving the sample spacing
    must (roughly) halve the largest sample-to-sample increment, which
    holds for any locally Lipschitz function but not across a jump.
    Ramps narrower than the sample spacing therefore read as jumps.
    Convexity and monotonicity are checked to 1e-12 absolute, which is
    exact up to roundoff for the piecewise-polynomial families.
    """
    if n_samples < 16:
        raise ParameterDomainError("need at least 16 samples")
    x = np.linspace(_SAMPLE_LO, _SAMPLE_HI, n_samples)
    fx = phi_eval(spec, x)

    x2 = np.linspace(_SAMPLE_LO, _SAMPLE_HI, 2 * n_samples - 1)
    fx2 = phi_eval(spec, x2)
    d_coarse = np.max(np.abs(np.diff(fx)))
    d_fine = np.max(np.abs(np.diff(fx2)))
    continuous = bool(d_fine <= 0.75 * d_coarse + _EXACT_TOL)

    dx = x[1] - x[0]
    radius = spec.support_radius
    outside = np.abs(x) >= radius + dx
    ref = phi_eval(spec, 3.0)
    constant_outside = bool(np.all(np.abs(fx[outside] - ref) <= _EXACT_TOL))

    inside = np.abs(x) <= THRESHOLD
    fi = fx[inside]
    convex_inside = bool(
        np.all(fi[1:-1] <= 0.5 * (fi[:-2] + fi[2:]) + _EXACT_TOL)
    )

    xi = x[inside]
    left = xi <= 0.0
    right = xi >= 0.0
    monotone_pieces = bool(
        np.all(np.diff(fi[left]) <= _EXACT_TOL)
        and np.all(np.diff(fi[right]) >= -_EXACT_TOL)
    )

    h = 1e-6
    slope_left = (phi_eval(spec, 1.0) - phi_eval(spec, 1.0 - h)) / h
    slope_right = (phi_eval(spec, 1.0 + h) - phi_eval(spec, 1.0)) / h
    jump_at_one = float(slope_left - slope_right)

    sup_phi_prime = float(np.max(np.abs(phi_prime_eval(spec, x))))

    return AssumptionReport(
        continuous=continuous,
        constant_outside=constant_outside,
        convex_inside=convex_inside,
        monotone_pieces=monotone_pieces,
        jump_at_one=jump_at_one,
        sup_phi_prime=sup_phi_prime,
        sampled_points=n_samples,
    )


# --- string syntax ---------------------------------------------------------

def parse_potential(text: str) -> PotentialSpec:
    """Parse ``exact``, ``tilde:EPS``, ``bar:EPS``, ``quad:EPS``,
    or ``mollified:DELTA``."""
    body = text.strip()
    if body == "exact":
        return PotentialSpec("exact")
    kind, sep, rest = body.partition(":")
    if not sep or kind not in _KINDS or kind == "exact":
        raise ParameterDomainError(f"bad potential string {text!r}")
    try:
        value = float(rest)
    except ValueError:
        raise ParameterDomainError(
            f"bad numeric parameter {rest!r} in potential string {text!r}"
        ) from None
    return PotentialSpec(kind, value)


def potential_to_string(spec: PotentialSpec) -> str:
    """Canonical string form; round-trips bit-exactly through parse."""
    if spec.kind == "exact":
        return "exact"
    return f"{spec.kind}:{spec.param!r}"
