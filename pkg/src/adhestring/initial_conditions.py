"""Initial-data families (u0, u1) on [0, L] for the adhesive string.

Families by smoothness of the displacement profile:

* ``c2_cubic``       -- cubic profile, C2 on [0, L], flat at both ends.
* ``c1_arc``         -- normalized circular-arc-length profile b*c(x);
                        C1, with a jump in the second derivative at L/2.
* ``c1_arc_shift_middle`` -- arc profile recentered so u0(L/2) = 1
                        (threshold and curvature jump coincide).
* ``c1_arc_shift_half``   -- arc profile lifted by 1/2, no recentering.
* ``c1_arc_velocity``     -- arc profile as shift_middle, with initial
                        velocity proportional to the profile slope
                        (continuous, vanishing at both ends).
* ``mollified_quadratic`` -- two parabolas joined by a quadratic bridge
                        of half-width eta; C1 with a curvature jump at
                        L/2 +- eta and peak value xi0 at L/2.
* ``uniform``         -- constant displacement and velocity.
* ``tabulated``       -- linear interpolation of sampled columns.

All evaluations are closed-form and pointwise; nothing is quadrature
based.  xi0 scales the displacement shape, xi1 the initial velocity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterDomainError

_KINDS = (
    "c2", "c1", "c1mid", "c1half", "c1vel", "moll", "uniform", "tabulated",
)


def eval_b(a: float, L: float) -> float:
    """Normalizing constant of the arc-length profile: b = 1/c(L)."""
    if L <= 0:
        raise ParameterDomainError("length L must be positive")
    if a <= L / 2:
        raise ParameterDomainError(
            f"arc radius must exceed L/2 (got a={a}, L={L})"
        )
    denom = (
        -0.25 * L * np.sqrt(4 * a * a - L * L)
        - a * a * np.arcsin(L / (2 * a))
        + a * L
    )
    return float(1.0 / denom)


def eval_c(x, a: float, L: float):
    """Arc-length profile c(x); increasing, c(0) = 0, c(L) = 1/b.

    The branch boundary at x = L/2 belongs to the first branch; both
    branches agree there, and the slope dc/dx is continuous while the
    curvature jumps.
    """
    if a <= L / 2:
        raise ParameterDomainError(
            f"arc radius must exceed L/2 (got a={a}, L={L})"
        )
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0) or np.any(arr > L):
        raise ParameterDomainError("x outside [0, L]")
    # principal-branch arctan(x*sqrt(a^2-x^2)/(x^2-a^2)) == -arcsin(x/a)
    # for 0 <= x < a; the arcsin form keeps c continuous with c(0) = 0
    first = arr <= L / 2
    xl = np.where(first, arr, 0.0)
    left = (
        -0.5 * xl * np.sqrt(a * a - xl * xl)
        - 0.5 * a * a * np.arcsin(xl / a)
        + a * xl
    )
    y = np.where(first, 0.0, L - arr)
    offset = -0.25 * L * np.sqrt(4 * a * a - L * L) - a * a * np.arcsin(
        L / (2 * a)
    )
    right = offset + 0.5 * (
        y * np.sqrt(a * a - y * y)
        + a * a * np.arcsin(y / a)
        + 2 * a * np.where(first, 0.0, arr)
    )
    out = np.where(first, left, right)
    return float(out) if np.ndim(x) == 0 else out


def eval_dc_dx(x, a: float, L: float):
    """Slope of the arc profile: a - sqrt(a^2 - x^2) mirrored about L/2.

    Continuous on [0, L], zero at both ends, maximal at L/2.
    """
    if a <= L / 2:
        raise ParameterDomainError(
            f"arc radius must exceed L/2 (got a={a}, L={L})"
        )
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0) or np.any(arr > L):
        raise ParameterDomainError("x outside [0, L]")
    r = np.where(arr <= L / 2, arr, L - arr)
    out = a - np.sqrt(a * a - r * r)
    return float(out) if np.ndim(x) == 0 else out


def eval_f_eta(x, eta: float, L: float):
    """Quadratic peak profile: x^2 and (x-L)^2 tails bridged over
    [L/2 - eta, L/2 + eta]; C1, normalized to peak value 1 at L/2."""
    if not 0 < eta < L / 2:
        raise ParameterDomainError(
            f"bridge half-width must satisfy 0 < eta < L/2 (got {eta})"
        )
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0) or np.any(arr > L):
        raise ParameterDomainError("x outside [0, L]")
    m = L / 2 - eta
    pref = 2.0 / (m * L)
    out = pref * np.select(
        [arr < m, arr < L / 2 + eta],
        [arr * arr,
         -(m / eta) * arr * arr + L * (m / eta) * arr - L * m * m / (2 * eta)],
        default=(arr - L) * (arr - L),
    )
    return float(out) if np.ndim(x) == 0 else out


@dataclass(frozen=True)
class InitialCondition:
    """One member of a family; construct through the factory functions."""

    kind: str
    L: float = 10.0
    xi0: float = 0.0
    xi1: float = 0.0
    a: float = 6.0
    eta: float = 0.3
    u0_const: float = 0.0
    u1_const: float = 0.0
    x_table: np.ndarray | None = field(default=None, compare=False)
    u0_table: np.ndarray | None = field(default=None, compare=False)
    u1_table: np.ndarray | None = field(default=None, compare=False)
    source_path: str | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterDomainError(f"unknown initial-condition kind {self.kind!r}")
        if self.L <= 0 or not np.isfinite(self.L):
            raise ParameterDomainError("length L must be positive")
        if self.kind in ("c1", "c1mid", "c1half", "c1vel") and self.a <= self.L / 2:
            raise ParameterDomainError(
                f"arc radius must exceed L/2 (got a={self.a}, L={self.L})"
            )
        if self.kind == "moll" and not 0 < self.eta < self.L / 2:
            raise ParameterDomainError(
                f"bridge half-width must satisfy 0 < eta < L/2 (got {self.eta})"
            )
        if self.kind == "tabulated":
            x, u0, u1 = self.x_table, self.u0_table, self.u1_table
            if x is None or u0 is None or u1 is None:
                raise ParameterDomainError("tabulated data needs x, u0, u1 columns")
            if not (len(x) == len(u0) == len(u1)) or len(x) < 2:
                raise ParameterDomainError(
                    "tabulated columns must share one length >= 2"
                )
            if np.any(np.diff(x) <= 0):
                raise ParameterDomainError("tabulated x must be strictly increasing")
            if x[0] > 1e-12 or x[-1] < self.L - 1e-12:
                raise ParameterDomainError(
                    f"tabulated x must cover [0, {self.L}] "
                    f"(got [{x[0]}, {x[-1]}])"
                )


def c2_cubic(xi0: float, xi1: float, L: float = 10.0) -> InitialCondition:
    return InitialCondition("c2", L=L, xi0=xi0, xi1=xi1)


def c1_arc(xi0: float, xi1: float, a: float = 6.0, L: float = 10.0) -> InitialCondition:
    return InitialCondition("c1", L=L, xi0=xi0, xi1=xi1, a=a)


def c1_arc_shift_middle(
    xi0: float, xi1: float, a: float = 6.0, L: float = 10.0
) -> InitialCondition:
    return InitialCondition("c1mid", L=L, xi0=xi0, xi1=xi1, a=a)


def c1_arc_shift_half(
    xi0: float, xi1: float, a: float = 6.0, L: float = 10.0
) -> InitialCondition:
    return InitialCondition("c1half", L=L, xi0=xi0, xi1=xi1, a=a)


def c1_arc_velocity(
    xi0: float, xi1: float, a: float = 6.0, L: float = 10.0
) -> InitialCondition:
    return InitialCondition("c1vel", L=L, xi0=xi0, xi1=xi1, a=a)


def mollified_quadratic(
    xi0: float, xi1: float, eta: float = 0.3, L: float = 10.0
) -> InitialCondition:
    return InitialCondition("moll", L=L, xi0=xi0, xi1=xi1, eta=eta)


def uniform(u0: float, u1: float, L: float = 10.0) -> InitialCondition:
    return InitialCondition("uniform", L=L, u0_const=u0, u1_const=u1)


def tabulated(x, u0, u1, L: float | None = None, source_path: str | None = None) -> InitialCondition:
    x = np.asarray(x, dtype=float)
    u0 = np.asarray(u0, dtype=float)
    u1 = np.asarray(u1, dtype=float)
    if L is None:
        L = float(x[-1]) if len(x) else 0.0
    return InitialCondition(
        "tabulated", L=L, x_table=x, u0_table=u0, u1_table=u1,
        source_path=source_path,
    )


def load_tabulated(path: str, L: float | None = None) -> InitialCondition:
    """Read a 3-column CSV (x, u0, u1) with a header row."""
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if data.shape[1] != 3:
        raise ParameterDomainError(
            f"{path}: expected 3 columns (x, u0, u1), got {data.shape[1]}"
        )
    return tabulated(data[:, 0], data[:, 1], data[:, 2], L=L, source_path=path)


def sample_ic(ic: InitialCondition, x_array) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate (u0, u1) pointwise on ascending nodes within [0, L]."""
    x = np.asarray(x_array, dtype=float)
    if np.any(np.diff(x) < 0):
        raise ParameterDomainError("sample nodes must be ascending")
    if np.any(x < -1e-12) or np.any(x > ic.L + 1e-12):
        raise ParameterDomainError(f"sample nodes outside [0, {ic.L}]")
    x = np.clip(x, 0.0, ic.L)
    L = ic.L
    ones = np.ones_like(x)
    if ic.kind == "c2":
        u0 = ic.xi0 * (x**3 / 3 - L * x * x / 2)
        u1 = ic.xi1 * ones
    elif ic.kind in ("c1", "c1mid", "c1half", "c1vel"):
        b = eval_b(ic.a, L)
        bc = b * eval_c(x, ic.a, L)
        if ic.kind == "c1":
            u0 = ic.xi0 * bc
        elif ic.kind == "c1half":
            u0 = ic.xi0 * (0.5 + bc)
        else:
            u0 = ic.xi0 * (-0.5 + bc) + 1.0
        if ic.kind == "c1vel":
            u1 = ic.xi1 * b * eval_dc_dx(x, ic.a, L)
        else:
            u1 = ic.xi1 * ones
    elif ic.kind == "moll":
        u0 = ic.xi0 * eval_f_eta(x, ic.eta, L)
        u1 = ic.xi1 * ones
    elif ic.kind == "uniform":
        u0 = ic.u0_const * ones
        u1 = ic.u1_const * ones
    else:
        u0 = np.interp(x, ic.x_table, ic.u0_table)
        u1 = np.interp(x, ic.x_table, ic.u1_table)
    if not (np.all(np.isfinite(u0)) and np.all(np.isfinite(u1))):
        raise ParameterDomainError("initial data evaluated to non-finite values")
    return u0, u1


@dataclass(frozen=True)
class CompatibilityReport:
    """One-sided boundary behavior of (u0, u1) against homogeneous
    Neumann data: zero end slopes of u0 and zero end values of u1.

    Violations are recorded, never rejected; constant nonzero initial
    velocities are a deliberately admitted mismatch.
    """

    u0_slope_left: float
    u0_slope_right: float
    u1_left: float
    u1_right: float
    u0_compliant: bool
    u1_compliant: bool

    @property
    def compliant(self) -> bool:
        return self.u0_compliant and self.u1_compliant


def neumann_compatibility(
    ic: InitialCondition, tolerance: float = 1e-8
) -> CompatibilityReport:
    h = ic.L * 1e-6
    xs = np.array([0.0, h, 2 * h, ic.L - 2 * h, ic.L - h, ic.L])
    u0, u1 = sample_ic(ic, xs)
    # second-order one-sided slopes
    sl = (-3 * u0[0] + 4 * u0[1] - u0[2]) / (2 * h)
    sr = (3 * u0[5] - 4 * u0[4] + u0[3]) / (2 * h)
    return CompatibilityReport(
        u0_slope_left=float(sl),
        u0_slope_right=float(sr),
        u1_left=float(u1[0]),
        u1_right=float(u1[5]),
        u0_compliant=bool(abs(sl) <= tolerance and abs(sr) <= tolerance),
        u1_compliant=bool(abs(u1[0]) <= tolerance and abs(u1[5]) <= tolerance),
    )


# --- string syntax ----------------------------------------------------------

_PARAM_COUNT = {"c2": 2, "c1": 3, "c1mid": 3, "c1half": 3, "c1vel": 3,
                "moll": 3, "uniform": 2}


def parse_ic(text: str, L: float = 10.0) -> InitialCondition:
    """Parse ``c2:XI0,XI1``, ``c1:XI0,XI1,A``, ``c1mid:...``,
    ``c1half:...``, ``c1vel:...``, ``moll:XI0,XI1,ETA``,
    ``uniform:U0,U1`` or ``file:PATH``."""
    body = text.strip()
    kind, sep, rest = body.partition(":")
    if not sep:
        raise ParameterDomainError(f"bad initial-condition string {text!r}")
    if kind == "file":
        return load_tabulated(rest.strip(), L=L)
    if kind not in _PARAM_COUNT:
        raise ParameterDomainError(f"unknown initial-condition kind {kind!r}")
    parts = rest.split(",")
    if len(parts) != _PARAM_COUNT[kind]:
        raise ParameterDomainError(
            f"{kind} takes {_PARAM_COUNT[kind]} parameters, got {len(parts)}"
        )
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise ParameterDomainError(
            f"bad numeric parameter in initial-condition string {text!r}"
        ) from None
    if kind == "c2":
        return c2_cubic(vals[0], vals[1], L=L)
    if kind == "c1":
        return c1_arc(vals[0], vals[1], a=vals[2], L=L)
    if kind == "c1mid":
        return c1_arc_shift_middle(vals[0], vals[1], a=vals[2], L=L)
    if kind == "c1half":
        return c1_arc_shift_half(vals[0], vals[1], a=vals[2], L=L)
    if kind == "c1vel":
        return c1_arc_velocity(vals[0], vals[1], a=vals[2], L=L)
    if kind == "moll":
        return mollified_quadratic(vals[0], vals[1], eta=vals[2], L=L)
    return uniform(vals[0], vals[1], L=L)


def ic_to_string(ic: InitialCondition) -> str:
    """Canonical string form; round-trips through parse_ic for every
    kind except in-memory tabulated data, which needs a file path."""
    if ic.kind == "c2":
        return f"c2:{ic.xi0!r},{ic.xi1!r}"
    if ic.kind in ("c1", "c1mid", "c1half", "c1vel"):
        return f"{ic.kind}:{ic.xi0!r},{ic.xi1!r},{ic.a!r}"
    if ic.kind == "moll":
        return f"moll:{ic.xi0!r},{ic.xi1!r},{ic.eta!r}"
    if ic.kind == "uniform":
        return f"uniform:{ic.u0_const!r},{ic.u1_const!r}"
    if ic.source_path is not None:
        return f"file:{ic.source_path}"
    raise ParameterDomainError("in-memory tabulated data has no string form")
