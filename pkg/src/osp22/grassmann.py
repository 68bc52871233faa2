"""Finite-dimensional complex exterior algebra with Berezin integration.

The algebra is generated by a fixed ordered list of anticommuting symbols,
by default (theta, theta_bar, alpha, alpha_bar), extensible with the pair
(xi, xi_bar).  Monomials are stored in canonical (ascending) generator order
and every sign comes from counting transpositions.

Two conventions are hard-wired:

* conjugation swaps each generator with its partner and conjugates the
  coefficient WITHOUT reversing factor order, so
  ``conj(a * b) == conj(a) * conj(b)`` for all a, b;
* the Berezin integral is normalized so that the only nonvanishing pair
  integral is ``int theta_bar*theta d(theta) d(theta_bar) = 1``, applied
  innermost differential first, and identically for each conjugate pair.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "EVEN",
    "ODD",
    "MIXED",
    "GENERATORS_DEFAULT",
    "GENERATORS_EXTENDED",
    "AlgebraMismatchError",
    "GrassmannAlgebra",
    "GrassmannElement",
    "default_algebra",
    "random_element",
]

EVEN = "even"
ODD = "odd"
MIXED = "mixed"

GENERATORS_DEFAULT = ("theta", "theta_bar", "alpha", "alpha_bar")
GENERATORS_EXTENDED = GENERATORS_DEFAULT + ("xi", "xi_bar")

_SCALAR_TYPES = (int, float, complex, np.integer, np.floating, np.complexfloating)


class AlgebraMismatchError(ValueError):
    """Two elements over different generator sets were combined."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mul_sign(a: int, b: int) -> int:
    """Sign of merging two ascending monomials a, b into one ascending monomial."""
    swaps = 0
    t = b
    while t:
        low = t & -t
        j = low.bit_length() - 1
        swaps += (a >> (j + 1)).bit_count()
        t ^= low
    return -1 if swaps & 1 else 1


def _perm_sign(seq) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class GrassmannAlgebra:
    """Ordered generator set with a conjugation pairing.

    The canonical order is fixed for the lifetime of the instance; the pairing
    is derived from the ``_bar`` naming convention and must be an involution
    covering every generator.
    """

    __slots__ = ("generators", "index", "pair", "drop_tol")

    def __init__(self, generators=GENERATORS_DEFAULT, drop_tol: float = 0.0):
        names = tuple(generators)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        index = {name: k for k, name in enumerate(names)}
        pair = []
        for name in names:
            partner = name[:-4] if name.endswith("_bar") else name + "_bar"
            if partner not in index:
                raise ValueError(f"generator {name!r} has no conjugation partner")
            pair.append(index[partner])
        for k, p in enumerate(pair):
            if p == k or pair[p] != k:
                raise ValueError("conjugation pairing is not an involution")
        self.generators = names
        self.index = index
        self.pair = tuple(pair)
        self.drop_tol = float(drop_tol)

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def compatible(self, other: "GrassmannAlgebra") -> bool:
        return self is other or self.generators == other.generators

    def _mask_of(self, mono) -> tuple[int, int]:
        idx = [self.index[name] for name in mono]
        mask = 0
        for k in idx:
            bit = 1 << k
            if mask & bit:
                return 0, 0
            mask |= bit
        return mask, _perm_sign(idx)

    def element(self, terms=None) -> "GrassmannElement":
        """Build an element from ``{monomial: coefficient}``.

        Monomials are tuples of generator names in any order (the permutation
        sign is applied) or a single generator name; ``()`` is the scalar slot.
        """
        data: dict[int, complex] = {}
        for mono, coeff in (terms or {}).items():
            if isinstance(mono, str):
                mono = (mono,)
            mask, sign = self._mask_of(tuple(mono))
            if sign == 0:
                continue
            data[mask] = data.get(mask, 0j) + sign * complex(coeff)
        return GrassmannElement(self, data)

    def scalar(self, c) -> "GrassmannElement":
        return GrassmannElement(self, {0: complex(c)})

    def one(self) -> "GrassmannElement":
        return self.scalar(1.0)

    def zero(self) -> "GrassmannElement":
        return GrassmannElement(self, {})

    def gen(self, name: str) -> "GrassmannElement":
        return GrassmannElement(self, {1 << self.index[name]: 1.0 + 0j})

    def monomial_name(self, mask: int) -> str:
        return "*".join(self.generators[k] for k in _bits(mask)) or "1"

    def __repr__(self):
        return f"GrassmannAlgebra({', '.join(self.generators)})"


class GrassmannElement:
    """Sparse element of the exterior algebra; treat as immutable."""

    __slots__ = ("algebra", "_data")

    def __init__(self, algebra: GrassmannAlgebra, data: dict):
        tol = algebra.drop_tol
        if tol > 0.0:
            self._data = {m: c for m, c in data.items() if abs(c) >= tol}
        else:
            self._data = {m: c for m, c in data.items() if c != 0}
        self.algebra = algebra

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GrassmannElement):
            if not self.algebra.compatible(other.algebra):
                raise AlgebraMismatchError("elements belong to different algebras")
            return other
        if isinstance(other, _SCALAR_TYPES):
            return self.algebra.scalar(complex(other))
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        data = dict(self._data)
        for m, c in o._data.items():
            data[m] = data.get(m, 0j) + c
        return GrassmannElement(self.algebra, data)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.algebra, {m: -c for m, c in self._data.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        data: dict[int, complex] = {}
        for ma, ca in self._data.items():
            for mb, cb in o._data.items():
                if ma & mb:
                    continue
                m = ma | mb
                data[m] = data.get(m, 0j) + _mul_sign(ma, mb) * ca * cb
        return GrassmannElement(self.algebra, data)

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            c = complex(other)
            return GrassmannElement(self.algebra, {m: c * v for m, v in self._data.items()})
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return (1.0 / complex(other)) * self
        if isinstance(other, GrassmannElement):
            return self * other.power(-1.0)
        return NotImplemented

    # -- involutions and grading --------------------------------------------

    def conj(self) -> "GrassmannElement":
        """Order-preserving conjugation: partners swapped in place, then re-sorted."""
        alg = self.algebra
        data: dict[int, complex] = {}
        for m, c in self._data.items():
            idx = [alg.pair[k] for k in _bits(m)]
            sign = _perm_sign(idx)
            mm = 0
            for k in idx:
                mm |= 1 << k
            data[mm] = data.get(mm, 0j) + sign * c.conjugate()
        return GrassmannElement(alg, data)

    def berezin(self, over) -> "GrassmannElement":
        """Iterated Berezin integral over the named generators, innermost first."""
        alg = self.algebra
        data = dict(self._data)
        for name in over:
            gi = alg.index[name]
            bit = 1 << gi
            new: dict[int, complex] = {}
            for m, c in data.items():
                if not (m & bit):
                    continue
                deg = m.bit_count()
                pos = (m & (bit - 1)).bit_count()
                sign = -1 if (deg - 1 - pos) & 1 else 1
                mm = m ^ bit
                new[mm] = new.get(mm, 0j) + sign * c
            data = new
        return GrassmannElement(alg, data)

    @property
    def parity(self) -> str:
        if not self._data:
            return EVEN
        ps = {m.bit_count() & 1 for m in self._data}
        if len(ps) > 1:
            return MIXED
        return ODD if ps.pop() else EVEN

    @property
    def parity_bit(self) -> int:
        p = self.parity
        if p == MIXED:
            raise ValueError("element is not homogeneous")
        return 1 if p == ODD else 0

    def even_part(self) -> "GrassmannElement":
        return GrassmannElement(
            self.algebra, {m: c for m, c in self._data.items() if not m.bit_count() & 1}
        )

    def odd_part(self) -> "GrassmannElement":
        return GrassmannElement(
            self.algebra, {m: c for m, c in self._data.items() if m.bit_count() & 1}
        )

    @property
    def body(self) -> complex:
        return self._data.get(0, 0j)

    def soul(self) -> "GrassmannElement":
        return GrassmannElement(self.algebra, {m: c for m, c in self._data.items() if m})

    # -- analytic functions of even elements ---------------------------------

    def power(self, p: float) -> "GrassmannElement":
        """Principal-branch power of an even element with nonzero body.

        The nilpotent part feeds a binomial series that terminates because the
        soul of an even element has degree >= 2.
        """
        if self.parity != EVEN:
            raise ValueError("power requires an even element")
        b = self.body
        if b == 0:
            raise ZeroDivisionError("power requires a nonzero body")
        n = (self - b) * (1.0 / b)
        acc = self.algebra.one()
        term = self.algebra.one()
        coef = 1.0
        for k in range(1, self.algebra.n_generators // 2 + 1):
            coef *= (p - (k - 1)) / k
            term = term * n
            if not term._data:
                break
            acc = acc + coef * term
        return complex(b) ** p * acc

    # -- queries -------------------------------------------------------------

    def coeff(self, mono=()) -> complex:
        if isinstance(mono, str):
            mono = (mono,)
        mask, sign = self.algebra._mask_of(tuple(mono))
        if sign == 0:
            return 0j
        return sign * self._data.get(mask, 0j)

    def terms(self):
        """Sorted list of (generator-name tuple, coefficient)."""
        out = []
        for m in sorted(self._data):
            names = tuple(self.algebra.generators[k] for k in _bits(m))
            out.append((names, self._data[m]))
        return out

    def max_abs(self) -> float:
        return max((abs(c) for c in self._data.values()), default=0.0)

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs() <= tol

    def isclose(self, other, tol: float = 1e-12) -> bool:
        o = self._coerce(other)
        return (self - o).max_abs() <= tol

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except AlgebraMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self._data == o._data

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        if not self._data:
            return "<0>"
        parts = []
        for m in sorted(self._data):
            c = self._data[m]
            name = self.algebra.monomial_name(m)
            parts.append(f"({c:.6g})" if m == 0 else f"({c:.6g})*{name}")
        return " + ".join(parts)


_DEFAULT = GrassmannAlgebra()


def default_algebra() -> GrassmannAlgebra:
    """Shared four-generator algebra (theta, theta_bar, alpha, alpha_bar)."""
    return _DEFAULT


def random_element(algebra, rng, parity=None, scale: float = 1.0) -> GrassmannElement:
    """Random element with iid complex-normal coefficients, optionally homogeneous."""
    data = {}
    for mask in range(1 << algebra.n_generators):
        odd = mask.bit_count() & 1
        if parity == EVEN and odd:
            continue
        if parity == ODD and not odd:
            continue
        re, im = rng.standard_normal(2)
        data[mask] = scale * complex(re, im) / np.sqrt(2.0)
    return GrassmannElement(algebra, data)
