"""Truncated Hilbert superspace over the even/odd solution sectors.

Vectors carry exterior-algebra coefficients over the basis
Psi_n^0 = psi_n (even sector) and Psi_n^1 = theta * phi_n (odd sector); the
structural generators theta, theta_bar never appear inside coefficients.

The super-Hermitian form restricts to the ordinary L2 product on the even
sector and to i times it on the odd sector, and Grassmann scalars move
through it by the rule

    (beta1 Phi1 | beta2 Phi2)
        = (-1)^{p(Phi1) p(beta2)} conj(beta1) beta2 (Phi1 | Phi2).

`super_inner` is the fast route built on basis orthonormality;
`super_inner_integral` is the independent oracle that assembles the full
integrand conj(Phi1) Phi2 * i exp(-i theta_bar theta), Berezin-integrates
the pair (theta, theta_bar) and quadrature-integrates x.
"""

from __future__ import annotations

import numpy as np

from . import basis as _basis
from .grassmann import (
    EVEN,
    MIXED,
    ODD,
    AlgebraMismatchError,
    GrassmannElement,
    default_algebra,
    random_element,
)

__all__ = [
    "DimensionMismatchError",
    "SuperVector",
    "super_inner_integral",
    "superadjoint_defect",
    "random_supervector",
]

_SCALARS = (int, float, complex, np.integer, np.floating, np.complexfloating)


class DimensionMismatchError(ValueError):
    """Vectors or operators with different truncations were combined."""


def _flip(p: str) -> str:
    return ODD if p == EVEN else EVEN


class SuperVector:
    """Truncated expansion sum_n c_n Psi_n^0 + sum_n d_n Psi_n^1."""

    __slots__ = ("algebra", "even", "odd")

    def __init__(self, algebra, even, odd):
        even = tuple(even)
        odd = tuple(odd)
        if len(even) != len(odd):
            raise DimensionMismatchError("even and odd slot counts must match")
        if not even:
            raise DimensionMismatchError("truncation must be at least 1")
        self.algebra = algebra
        self.even = tuple(self._coerce(algebra, c) for c in even)
        self.odd = tuple(self._coerce(algebra, c) for c in odd)

    @staticmethod
    def _coerce(algebra, c):
        if isinstance(c, GrassmannElement):
            if not algebra.compatible(c.algebra):
                raise AlgebraMismatchError("coefficient from an incompatible algebra")
        elif isinstance(c, _SCALARS):
            c = algebra.scalar(complex(c))
        else:
            raise TypeError(f"cannot use {type(c).__name__} as a coefficient")
        structural = (1 << algebra.index["theta"]) | (1 << algebra.index["theta_bar"])
        for mask in c._data:
            if mask & structural:
                raise ValueError("coefficients must not contain theta or theta_bar")
        return c

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n_max: int, algebra=None) -> "SuperVector":
        alg = algebra or default_algebra()
        zeros = [alg.zero()] * n_max
        return cls(alg, zeros, list(zeros))

    @classmethod
    def basis_state(cls, sector: int, n: int, n_max: int, algebra=None) -> "SuperVector":
        """Psi_n^sector as a unit vector."""
        alg = algebra or default_algebra()
        if sector not in (0, 1):
            raise ValueError("sector must be 0 or 1")
        if not 0 <= n < n_max:
            raise ValueError("slot index outside the truncation")
        even = [alg.zero() for _ in range(n_max)]
        odd = [alg.zero() for _ in range(n_max)]
        (even if sector == 0 else odd)[n] = alg.one()
        return cls(alg, even, odd)

    @property
    def n_max(self) -> int:
        return len(self.even)

    # -- linear structure ------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, SuperVector):
            raise TypeError("expected a SuperVector")
        if other.n_max != self.n_max:
            raise DimensionMismatchError("truncations differ")
        if not self.algebra.compatible(other.algebra):
            raise AlgebraMismatchError("vectors over incompatible algebras")

    def __add__(self, other):
        self._check(other)
        return SuperVector(
            self.algebra,
            [a + b for a, b in zip(self.even, other.even)],
            [a + b for a, b in zip(self.odd, other.odd)],
        )

    def __sub__(self, other):
        self._check(other)
        return SuperVector(
            self.algebra,
            [a - b for a, b in zip(self.even, other.even)],
            [a - b for a, b in zip(self.odd, other.odd)],
        )

    def __neg__(self):
        return SuperVector(self.algebra, [-c for c in self.even], [-c for c in self.odd])

    def __rmul__(self, beta):
        """Left multiplication by a complex number or Grassmann scalar."""
        if isinstance(beta, _SCALARS):
            beta = self.algebra.scalar(complex(beta))
        if not isinstance(beta, GrassmannElement):
            return NotImplemented
        return SuperVector(
            self.algebra,
            [beta * c for c in self.even],
            [beta * c for c in self.odd],
        )

    def __mul__(self, scalar):
        if isinstance(scalar, _SCALARS):
            return self.__rmul__(scalar)
        return NotImplemented

    # -- grading ----------------------------------------------------------------

    @property
    def total_parity(self) -> str:
        """Envelope parity: coefficient parity plus slot parity, or "mixed"."""
        seen = set()
        for c in self.even:
            if c._data:
                p = c.parity
                if p == MIXED:
                    return MIXED
                seen.add(p)
        for d in self.odd:
            if d._data:
                p = d.parity
                if p == MIXED:
                    return MIXED
                seen.add(_flip(p))
        if not seen:
            return EVEN
        return seen.pop() if len(seen) == 1 else MIXED

    # -- super-Hermitian form ----------------------------------------------------

    def super_inner(self, other) -> GrassmannElement:
        """(self | other) via sector orthonormality; odd sector weighted by i."""
        self._check(other)
        acc = self.algebra.zero()
        for c1, c2 in zip(self.even, other.even):
            if c1._data and c2._data:
                acc = acc + c1.conj() * c2
        for d1, d2 in zip(self.odd, other.odd):
            if d1._data and d2._data:
                acc = acc + 1j * (d1.conj() * (d2.even_part() - d2.odd_part()))
        return acc

    def norm(self) -> float:
        """Body-level norm sqrt(sum |c_n|^2 + sum |d_n|^2); nilpotents do not enter."""
        s = sum(abs(c.body) ** 2 for c in self.even)
        s += sum(abs(d.body) ** 2 for d in self.odd)
        return float(np.sqrt(s))

    def max_abs(self) -> float:
        vals = [c.max_abs() for c in self.even] + [d.max_abs() for d in self.odd]
        return max(vals, default=0.0)

    # -- monomial decomposition (used by operators) --------------------------------

    def component_masks(self) -> dict:
        """Coefficient vectors per Grassmann monomial, slots ordered even then odd."""
        n = self.n_max
        out: dict[int, np.ndarray] = {}
        for slot, c in enumerate(self.even + self.odd):
            for mask, coeff in c._data.items():
                vec = out.get(mask)
                if vec is None:
                    vec = np.zeros(2 * n, dtype=complex)
                    out[mask] = vec
                vec[slot] += coeff
        return out

    @classmethod
    def from_component_masks(cls, algebra, n_max: int, comps: dict) -> "SuperVector":
        even = [dict() for _ in range(n_max)]
        odd = [dict() for _ in range(n_max)]
        for mask, vec in comps.items():
            for slot in np.nonzero(vec)[0]:
                target = even[slot] if slot < n_max else odd[slot - n_max]
                target[mask] = target.get(mask, 0j) + complex(vec[slot])
        return cls(
            algebra,
            [GrassmannElement(algebra, d) for d in even],
            [GrassmannElement(algebra, d) for d in odd],
        )

    def __repr__(self):
        nz = sum(1 for c in self.even + self.odd if c._data)
        return f"SuperVector(n_max={self.n_max}, nonzero_slots={nz})"


def super_inner_integral(v1: SuperVector, v2: SuperVector, t: float = 0.0, spec=None):
    """Direct-integral oracle for the super-Hermitian form.

    Builds conj(Phi1) Phi2 * i exp(-i theta_bar theta) in the exterior algebra
    (expanding the exponential as 1 - i theta_bar theta), Berezin-integrates
    over (theta, theta_bar), and pairs the x-dependence through quadrature
    Gram matrix entries of the underlying basis functions.
    """
    v1._check(v2)
    alg = v1.algebra
    n = v1.n_max
    chi_order = [2 * k for k in range(n)] + [2 * k + 1 for k in range(n)]
    spec = spec or _basis.QuadratureSpec()
    x, w = _basis.quad_grid(t, spec)
    vals = _basis.chi_matrix(chi_order, x, t)
    gram = (vals.conj() * w) @ vals.T

    theta = alg.gen("theta")
    weight = 1j * (alg.one() - 1j * (alg.gen("theta_bar") * theta))
    bra = [c.conj() for c in v1.even] + [(d * theta).conj() for d in v1.odd]
    ket = list(v2.even) + [d * theta for d in v2.odd]

    acc = alg.zero()
    for i, a in enumerate(bra):
        if not a._data:
            continue
        for j, b in enumerate(ket):
            if not b._data:
                continue
            term = (a * b * weight).berezin(("theta", "theta_bar"))
            if term._data:
                acc = acc + complex(gram[i, j]) * term
    return acc


def superadjoint_defect(op, claimed_adjoint, v1: SuperVector, v2: SuperVector):
    """(A+_claimed v1 | v2) - (-1)^{p(v1) p(A)} (v1 | A v2); zero certifies the claim."""
    p1 = v1.total_parity
    if p1 == MIXED:
        raise ValueError("first vector must be homogeneous")
    sign = -1.0 if (p1 == ODD and op.parity_bit) else 1.0
    lhs = claimed_adjoint.apply(v1).super_inner(v2)
    rhs = v1.super_inner(op.apply(v2))
    return lhs - sign * rhs


def random_supervector(
    n_max: int, rng, algebra=None, parity=None, support: int | None = None
) -> SuperVector:
    """Random vector with Grassmann coefficients free of theta, theta_bar.

    With ``parity`` set, coefficients are chosen so the total envelope parity
    is homogeneous.  ``support`` limits the nonzero slots to n < support.
    """
    alg = algebra or default_algebra()
    top = n_max if support is None else min(support, n_max)

    def draw(slot_parity):
        want = None
        if parity is not None:
            want = parity if slot_parity == 0 else _flip(parity)
        elem = random_element(_sub_algebra(alg), rng, parity=want)
        return _lift(alg, elem)

    even = [draw(0) if k < top else alg.zero() for k in range(n_max)]
    odd = [draw(1) if k < top else alg.zero() for k in range(n_max)]
    return SuperVector(alg, even, odd)


_SUB_CACHE: dict = {}


def _sub_algebra(alg):
    """Algebra over the non-structural generators of ``alg``."""
    names = tuple(g for g in alg.generators if g not in ("theta", "theta_bar"))
    key = (id(alg), names)
    if key not in _SUB_CACHE:
        from .grassmann import GrassmannAlgebra

        _SUB_CACHE[key] = GrassmannAlgebra(names)
    return _SUB_CACHE[key]


def _lift(alg, elem):
    """Re-express an element of the non-structural subalgebra inside ``alg``."""
    return alg.element({names: coeff for names, coeff in elem.terms()})
