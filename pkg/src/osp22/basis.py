"""Solution basis of the free 1-d equation ``i f_t = -f_xx`` and its ladder structure.

The m-th basis function chi_m is a probabilists'-Hermite wave packet whose
complex width evolves through 1 + i t:

    chi_m(x, t) = (-i)^m [m! sqrt(2 pi) (1 + i t)]^{-1/2}
                  * exp(-i m arctan t - x^2 / (4 + 4 i t)) * He_m(x / sqrt(1 + t^2))

with He_m(z) = 2^{-m/2} H_m(z / sqrt(2)).  The basis is orthonormal at every t.
Ladder coefficients are frozen as a+ chi_m = (1/2) sqrt(m+1) chi_{m+1} and
a- chi_m = (1/2) sqrt(m) chi_{m-1}; the test suite re-derives them from the
quadrature matrix elements of the first-order operators
a+- = (1/2)(i d/dx +- (t d/dx - i x/2)).

Inner products use Gauss-Hermite quadrature on the rescaled variable
x = scale * u (scale defaults to sqrt(2 (1 + t^2)), matching the squared
envelope of the basis), with an adaptive fallback for non-Gaussian tails.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate
from scipy.special import roots_hermite

__all__ = [
    "BasisMode",
    "QuadratureSpec",
    "QuadratureError",
    "SYMMETRY_OPERATORS",
    "hermite_he",
    "eval_chi",
    "eval_chi_derivatives",
    "chi_evaluator",
    "chi_matrix",
    "quad_grid",
    "quad_inner",
    "gram_matrix",
    "project_onto_modes",
    "ladder_coefficient",
    "apply_ladder",
    "ladder_pointwise",
    "symmetric_ladder_pointwise",
    "apply_symmetry_op",
    "schrodinger_residual",
]

_ROOT4_2PI = (2.0 * np.pi) ** 0.25
_I_POWERS = (1, -1j, -1, 1j)  # (-i)^m for m mod 4


class QuadratureError(RuntimeError):
    """Quadrature failed to reach the requested tolerance."""

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


@dataclass(frozen=True)
class BasisMode:
    """Raw basis index m; the derived view splits it into (sector, n).

    Even modes (sector 0) are the even-in-x functions, odd modes (sector 1)
    the odd ones, with m = 2n + sector.
    """

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("mode index must be nonnegative")

    @property
    def sector(self) -> int:
        return self.m & 1

    @property
    def n(self) -> int:
        return self.m // 2

    @classmethod
    def from_sector(cls, sector: int, n: int) -> "BasisMode":
        if sector not in (0, 1):
            raise ValueError("sector must be 0 or 1")
        return cls(2 * n + sector)


def _mode_index(m) -> int:
    m = m.m if isinstance(m, BasisMode) else int(m)
    if m < 0:
        raise ValueError("mode index must be nonnegative")
    return m


@dataclass(frozen=True)
class QuadratureSpec:
    """Inner-product quadrature configuration.

    Gauss-Hermite on x = scale*u is exact (to round-off) for integrands of the
    form polynomial * exp(-x^2/scale^2); a basis-function product of top mode
    M needs nodes >= M + 1, so the default 200 covers modes well past 20.
    """

    nodes: int = 200
    scale: float | None = None        # default sqrt(2 (1 + t^2)) at call time
    method: str = "hermite"           # "hermite" | "adaptive"
    half_width: float | None = None   # adaptive window, default 6.5 * scale
    atol: float = 1e-12

    def __post_init__(self):
        if self.nodes < 2:
            raise ValueError("need at least two quadrature nodes")
        if self.nodes > 320:
            raise ValueError("node count too large for stable Gauss-Hermite weights")
        if self.method not in ("hermite", "adaptive"):
            raise ValueError(f"unknown quadrature method {self.method!r}")
        if self.atol <= 0:
            raise ValueError("atol must be positive")


@lru_cache(maxsize=32)
def _hermite_rule(n: int):
    u, w = roots_hermite(n)
    return u, np.log(w)


def _default_scale(t: float) -> float:
    return float(np.sqrt(2.0 * (1.0 + t * t)))


def quad_grid(t: float = 0.0, spec: QuadratureSpec | None = None):
    """Nodes and total weights so that ``sum(w * F(x))`` approximates ``int F dx``."""
    spec = spec or QuadratureSpec()
    if spec.method != "hermite":
        raise ValueError("quad_grid is only defined for the Gauss-Hermite method")
    u, logw = _hermite_rule(spec.nodes)
    c = spec.scale if spec.scale is not None else _default_scale(t)
    x = c * u
    w = np.exp(logw + u * u + np.log(c))
    return x, w


def hermite_he(n: int, z):
    """Probabilists' Hermite polynomial He_n by the three-term recurrence."""
    n = int(n)
    if n < 0:
        raise ValueError("Hermite degree must be nonnegative")
    z_arr = np.asarray(z, dtype=float)
    h0 = np.ones_like(z_arr)
    if n == 0:
        return float(h0) if z_arr.ndim == 0 else h0
    h1 = z_arr.copy()
    for k in range(1, n):
        h0, h1 = h1, z_arr * h1 - k * h0
    return float(h1) if z_arr.ndim == 0 else h1


def _scaled_he_triple(n: int, z):
    """(He_n, He_{n-1}, He_{n-2}) each divided by sqrt of its factorial.

    The normalized recurrence keeps values bounded for large n where the bare
    polynomials overflow.
    """
    z = np.asarray(z, dtype=float)
    hm2 = np.zeros_like(z)
    hm1 = np.zeros_like(z)
    h = np.ones_like(z)
    for k in range(n):
        hm2, hm1, h = hm1, h, (z * h - np.sqrt(k) * hm1) / np.sqrt(k + 1)
    return h, hm1, hm2


def eval_chi(m, x, t):
    """Value of chi_m(x, t); principal branches throughout."""
    m = _mode_index(m)
    x = np.asarray(x, dtype=float)
    t = float(t)
    one_it = 1.0 + 1j * t
    s = np.sqrt(1.0 + t * t)
    h, _, _ = _scaled_he_triple(m, x / s)
    pref = _I_POWERS[m % 4] * np.exp(-1j * m * np.arctan(t)) / (_ROOT4_2PI * np.sqrt(one_it))
    val = pref * np.exp(-x * x / (4.0 * one_it)) * h
    return complex(val) if val.ndim == 0 else val


def eval_chi_derivatives(m, x, t):
    """(chi_m, d/dx chi_m, d2/dx2 chi_m) from the closed form.

    Uses He'_n = n He_{n-1} and the Gaussian chain rule; cross-checked against
    finite differences in the test suite.
    """
    m = _mode_index(m)
    x = np.asarray(x, dtype=float)
    t = float(t)
    one_it = 1.0 + 1j * t
    s = np.sqrt(1.0 + t * t)
    h, h1, h2 = _scaled_he_triple(m, x / s)
    pref = _I_POWERS[m % 4] * np.exp(-1j * m * np.arctan(t)) / (_ROOT4_2PI * np.sqrt(one_it))
    base = pref * np.exp(-x * x / (4.0 * one_it))
    g1 = -x / (2.0 * one_it)
    g2 = -1.0 / (2.0 * one_it)
    rm = np.sqrt(m)
    rmm = np.sqrt(m * (m - 1)) if m >= 2 else 0.0
    val = base * h
    d1 = base * (g1 * h + rm * h1 / s)
    d2 = base * ((g2 + g1 * g1) * h + 2.0 * g1 * rm * h1 / s + rmm * h2 / (s * s))
    if val.ndim == 0:
        return complex(val), complex(d1), complex(d2)
    return val, d1, d2


def chi_evaluator(m, t):
    """x-evaluator for a fixed mode and time."""
    m = _mode_index(m)
    return lambda x: eval_chi(m, x, t)


def chi_matrix(modes, x, t):
    """Array of chi_m(x, t) values, one row per requested mode."""
    modes = [_mode_index(m) for m in modes]
    x = np.atleast_1d(np.asarray(x, dtype=float))
    t = float(t)
    top = max(modes) if modes else 0
    one_it = 1.0 + 1j * t
    s = np.sqrt(1.0 + t * t)
    z = x / s
    env = np.exp(-x * x / (4.0 * one_it)) / (_ROOT4_2PI * np.sqrt(one_it))
    H = np.empty((top + 1, x.size))
    H[0] = 1.0
    if top >= 1:
        H[1] = z
    for k in range(1, top):
        H[k + 1] = (z * H[k] - np.sqrt(k) * H[k - 1]) / np.sqrt(k + 1)
    rot = np.exp(-1j * np.arctan(t))
    out = np.empty((len(modes), x.size), dtype=complex)
    for r, m in enumerate(modes):
        out[r] = (_I_POWERS[m % 4] * rot**m) * env * H[m]
    return out


def quad_inner(f, g, t: float = 0.0, spec: QuadratureSpec | None = None) -> complex:
    """Inner product ``int conj(f(x)) g(x) dx`` by quadrature.

    f and g must accept numpy arrays and decay like Gaussians; pass an explicit
    ``spec.scale`` when the envelope differs from the basis one.
    """
    spec = spec or QuadratureSpec()
    if spec.method == "hermite":
        x, w = quad_grid(t, spec)
        return complex(np.sum(w * np.conjugate(f(x)) * g(x)))
    return _quad_adaptive(f, g, t, spec)


def _quad_adaptive(f, g, t, spec) -> complex:
    c = spec.scale if spec.scale is not None else _default_scale(t)
    width = spec.half_width if spec.half_width is not None else 6.5 * c

    def integrand(xx, take):
        v = np.conjugate(f(np.asarray([xx]))) * g(np.asarray([xx]))
        return float(take(v[0]))

    re, re_err = integrate.quad(
        integrand, -width, width, args=(np.real,), limit=200, epsabs=spec.atol, epsrel=0.0
    )
    im, im_err = integrate.quad(
        integrand, -width, width, args=(np.imag,), limit=200, epsabs=spec.atol, epsrel=0.0
    )
    value = complex(re, im)
    err = re_err + im_err
    if err > max(100.0 * spec.atol, 1e-9):
        raise QuadratureError(
            f"adaptive quadrature error estimate {err:.3e} exceeds tolerance",
            value=value,
            error=err,
        )
    return value


def gram_matrix(modes, t: float = 0.0, spec: QuadratureSpec | None = None):
    """Quadrature Gram matrix of the requested modes at time t."""
    x, w = quad_grid(t, spec or QuadratureSpec())
    V = chi_matrix(modes, x, t)
    return (V.conj() * w) @ V.T


def project_onto_modes(f, modes, t: float = 0.0, spec: QuadratureSpec | None = None):
    """Quadrature coefficients <chi_m | f> for each requested mode."""
    x, w = quad_grid(t, spec or QuadratureSpec())
    V = chi_matrix(modes, x, t)
    return V.conj() @ (w * f(x))


# -- ladder structure ---------------------------------------------------------


def _ladder_plus(sign) -> bool:
    if sign in (1, +1, "+", "plus"):
        return True
    if sign in (-1, "-", "minus"):
        return False
    raise ValueError(f"ladder sign must be +1 or -1, got {sign!r}")


def ladder_coefficient(sign, m) -> float:
    """Frozen ladder coefficient: (1/2) sqrt(m+1) raising, (1/2) sqrt(m) lowering."""
    m = _mode_index(m)
    return 0.5 * np.sqrt(m + 1) if _ladder_plus(sign) else 0.5 * np.sqrt(m)


def apply_ladder(sign, m):
    """(coefficient, target mode) for a+- chi_m; (0.0, None) when annihilated."""
    m = _mode_index(m)
    if _ladder_plus(sign):
        return ladder_coefficient(sign, m), m + 1
    if m == 0:
        return 0.0, None
    return ladder_coefficient(sign, m), m - 1


def ladder_pointwise(sign, m, x, t):
    """a+- chi_m applied as a first-order differential operator.

    a+- = (1/2)(i K_{-1} -+ K_1) with K_1 = -t d/dx + i x/2 and K_{-1} = d/dx.
    """
    s = 1.0 if _ladder_plus(sign) else -1.0
    v, d1, _ = eval_chi_derivatives(m, x, t)
    x = np.asarray(x, dtype=float)
    out = 0.5 * (1j + s * t) * d1 - s * 0.25j * x * v
    return complex(out) if np.ndim(out) == 0 else out


def symmetric_ladder_pointwise(m, x, t):
    """(a+ a- + a- a+) chi_m as a second-order differential operator.

    Diagonal with eigenvalue m/2 + 1/4 on the basis; used as the independent
    route for the sector weights 1/4 and 3/4.
    """
    v, d1, d2 = eval_chi_derivatives(m, x, t)
    x = np.asarray(x, dtype=float)

    def compose(s1, s2):
        g = 0.5 * (1j + s1 * t) * d1 - s1 * 0.25j * x * v
        gp = 0.5 * (1j + s1 * t) * d2 - s1 * 0.25j * (v + x * d1)
        return 0.5 * (1j + s2 * t) * gp - s2 * 0.25j * x * g

    out = compose(-1.0, +1.0) + compose(+1.0, -1.0)
    return complex(out) if np.ndim(out) == 0 else out


SYMMETRY_OPERATORS = ("K2", "K1", "K0c", "Km1", "Km2", "K0")


def apply_symmetry_op(name: str, m, x, t):
    """Pointwise action of a first-layer symmetry operator on chi_m.

    Time derivatives are eliminated through the on-shell identity
    d/dt = i d2/dx2.  "K0c" is multiplication by the constant i; "K0" is the
    dilation-type operator x d/dx + 2 t d/dt + 1/2.
    """
    v, d1, d2 = eval_chi_derivatives(m, x, t)
    x = np.asarray(x, dtype=float)
    t = float(t)
    if name == "K2":
        out = -t * t * (1j * d2) - t * x * d1 - 0.5 * t * v + 0.25j * x * x * v
    elif name == "K1":
        out = -t * d1 + 0.5j * x * v
    elif name == "K0c":
        out = 1j * v
    elif name == "Km1":
        out = d1
    elif name == "Km2":
        out = 1j * d2
    elif name == "K0":
        out = x * d1 + 2.0 * t * (1j * d2) + 0.5 * v
    else:
        raise ValueError(f"unknown symmetry operator {name!r}")
    return complex(out) if np.ndim(out) == 0 else out


def schrodinger_residual(state, x, t, hx: float = 1e-3, ht: float = 1e-4) -> float:
    """|i f_t + f_xx| / max sampled |f| with 4th-order central stencils.

    ``state(x, t)`` must be defined on the stencil around (x, t).  The
    normalization uses the largest magnitude among all sampled values so that
    isolated zeros of the state do not blow up the ratio.  The t-step default
    is finer than the x-step: focusing Gaussian packets (small sigma + i t)
    have fifth t-derivatives large enough that 1e-3 would spoil the 1e-6 gate,
    while round-off in the first-derivative stencil stays near 1e-12.
    """
    x = float(x)
    t = float(t)
    if x + 2.0 * hx == x or t + 2.0 * ht == t:
        raise ValueError("finite-difference step underflow")
    ft = [complex(state(x, t + k * ht)) for k in (-2, -1, 0, 1, 2)]
    fx = [complex(state(x + k * hx, t)) for k in (-2, -1, 1, 2)]
    f0 = ft[2]
    dfdt = (ft[0] - 8.0 * ft[1] + 8.0 * ft[3] - ft[4]) / (12.0 * ht)
    d2fdx2 = (-fx[0] + 16.0 * fx[1] - 30.0 * f0 + 16.0 * fx[2] - fx[3]) / (12.0 * hx * hx)
    scale = max(max(abs(v) for v in ft + fx), 1e-30)
    return abs(1j * dfdt + d2fdx2) / scale
