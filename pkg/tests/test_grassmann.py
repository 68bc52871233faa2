import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from osp22.grassmann import (
    EVEN,
    MIXED,
    ODD,
    AlgebraMismatchError,
    GENERATORS_EXTENDED,
    GrassmannAlgebra,
    default_algebra,
    random_element,
)

ALG = default_algebra()
THETA = ALG.gen("theta")
THETA_BAR = ALG.gen("theta_bar")
ALPHA = ALG.gen("alpha")
ALPHA_BAR = ALG.gen("alpha_bar")


def coeffs():
    return st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


def elements():
    n_masks = 1 << ALG.n_generators
    return st.lists(coeffs(), min_size=n_masks, max_size=n_masks).map(
        lambda cs: sum((c * _mono(m) for m, c in enumerate(cs)), ALG.zero())
    )


def _mono(mask):
    out = ALG.one()
    for k, name in enumerate(ALG.generators):
        if mask >> k & 1:
            out = out * ALG.gen(name)
    return out


class TestProduct:
    def test_nilpotency(self):
        assert (THETA * THETA).is_zero()

    def test_anticommutation_reorders_with_sign(self):
        assert THETA_BAR * THETA == -(THETA * THETA_BAR)

    def test_expansion(self):
        got = (1 + THETA) * (1 + THETA_BAR)
        assert got == 1 + THETA + THETA_BAR + THETA * THETA_BAR

    def test_mismatched_algebras_rejected(self):
        other = GrassmannAlgebra(GENERATORS_EXTENDED)
        with pytest.raises(AlgebraMismatchError):
            THETA * other.gen("xi")

    @settings(max_examples=60, deadline=None)
    @given(elements(), elements(), elements())
    def test_associativity(self, a, b, c):
        left = (a * b) * c
        scale = max(1.0, left.max_abs())
        assert ((left - a * (b * c)).max_abs() / scale) < 1e-14

    def test_supercommutativity_random(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            pa = EVEN if rng.integers(2) else ODD
            pb = EVEN if rng.integers(2) else ODD
            a = random_element(ALG, rng, parity=pa)
            b = random_element(ALG, rng, parity=pb)
            sign = -1.0 if (pa == ODD and pb == ODD) else 1.0
            assert (a * b - sign * (b * a)).max_abs() < 1e-14


class TestConjugation:
    def test_partner_swap(self):
        assert THETA_BAR.conj() == THETA
        assert THETA.conj() == THETA_BAR

    def test_order_preserving_on_pair(self):
        # conj(i alpha_bar alpha) keeps the factor order, giving the same element back
        elem = 1j * (ALPHA_BAR * ALPHA)
        assert (elem.conj() - elem).max_abs() == 0.0

    def test_scalar_conjugation(self):
        assert ALG.scalar(2 - 3j).conj() == ALG.scalar(2 + 3j)

    @settings(max_examples=60, deadline=None)
    @given(elements(), elements())
    def test_product_homomorphism(self, a, b):
        assert ((a * b).conj() - a.conj() * b.conj()).max_abs() < 1e-13

    @settings(max_examples=60, deadline=None)
    @given(elements())
    def test_involution(self, a):
        assert (a.conj().conj() - a).max_abs() == 0.0


class TestBerezin:
    def test_pair_normalization(self):
        assert (THETA_BAR * THETA).berezin(("theta", "theta_bar")) == 1

    def test_constant_integrates_to_zero(self):
        assert ALG.one().berezin(("theta", "theta_bar")).is_zero()

    def test_linearity_example(self):
        elem = 3.5 * (THETA_BAR * THETA) + (2 + 1j) * THETA
        assert elem.berezin(("theta", "theta_bar")) == 3.5

    def test_second_pair_same_convention(self):
        assert (ALPHA_BAR * ALPHA).berezin(("alpha", "alpha_bar")) == 1

    def test_kills_elements_without_the_generator(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            a = random_element(ALG, rng)
            no_theta = ALG.element(
                {names: c for names, c in a.terms() if "theta" not in names}
            )
            assert no_theta.berezin(("theta",)).is_zero()

    def test_linearity_random(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            a = random_element(ALG, rng)
            b = random_element(ALG, rng)
            lhs = (a + 2.5 * b).berezin(("theta", "theta_bar"))
            rhs = a.berezin(("theta", "theta_bar")) + 2.5 * b.berezin(("theta", "theta_bar"))
            assert (lhs - rhs).max_abs() < 1e-14


class TestParity:
    def test_examples(self):
        assert (THETA * THETA_BAR).parity == EVEN
        assert ALPHA.parity == ODD
        assert (1 + THETA).parity == MIXED

    def test_zero_is_even(self):
        assert ALG.zero().parity == EVEN

    def test_parity_bit_raises_on_mixed(self):
        with pytest.raises(ValueError):
            (1 + THETA).parity_bit


class TestAnalytic:
    def test_power_inverse(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            a = random_element(ALG, rng, parity=EVEN) + 3.0
            assert (a * a.power(-1.0) - 1.0).max_abs() < 1e-13

    def test_power_sqrt_squares_back(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            a = random_element(ALG, rng, parity=EVEN) + 4.0
            r = a.power(0.5)
            assert (r * r - a).max_abs() < 1e-12

    def test_power_requires_even(self):
        with pytest.raises(ValueError):
            (THETA + 1j * ALPHA).power(2.0)

    def test_power_requires_body(self):
        with pytest.raises(ZeroDivisionError):
            (THETA * THETA_BAR).power(0.5)


def test_extended_algebra_has_three_pairs():
    alg6 = GrassmannAlgebra(GENERATORS_EXTENDED)
    xi, xb = alg6.gen("xi"), alg6.gen("xi_bar")
    assert (xb * xi).berezin(("xi", "xi_bar")) == 1
    assert xi.conj() == xb


def test_drop_tolerance_prunes_small_terms():
    alg = GrassmannAlgebra(drop_tol=1e-10)
    elem = alg.element({(): 1.0, ("theta",): 1e-12})
    assert elem == alg.one()
