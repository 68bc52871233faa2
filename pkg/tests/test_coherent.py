import numpy as np
import pytest
from dataclasses import replace

from osp22 import basis as b
from osp22 import coherent as coh
from osp22.grassmann import default_algebra
from osp22.representation import GENERATOR_NAMES, SuperOperator, build_generator
from osp22.superspace import SuperVector, random_supervector

ALG = default_algebra()
ROOT4 = (2.0 * np.pi) ** -0.25


class TestParams:
    def test_disk_boundary_rejected(self):
        with pytest.raises(ValueError):
            coh.CoherentParams(1.0)
        with pytest.raises(ValueError):
            coh.CoherentParams(0.8 + 0.7j)

    def test_alpha_element(self):
        p = coh.CoherentParams(0.2, 2j)
        assert p.alpha(ALG) == 2j * ALG.gen("alpha")


class TestClosedForm:
    def test_reduces_to_ground_state(self):
        cf = coh.closed_form(coh.CoherentParams(0.0))
        x = np.linspace(-4, 4, 17)
        assert np.abs(cf.psi(x, 0.0) - b.eval_chi(0, x, 0.0)).max() < 1e-15

    def test_normalizer_without_alpha(self):
        cf = coh.closed_form(coh.CoherentParams(0.4j, 0.0))
        assert cf.normalizer == ALG.one()

    def test_unit_norm_by_quadrature(self):
        for z in (0.3, 0.5j, -0.7):
            cf = coh.closed_form(coh.CoherentParams(z))
            for t in (0.0, 1.0):
                spec = replace(b.QuadratureSpec(), scale=coh.quad_scale(z, t))
                psi = lambda x: cf.psi(x, t)
                assert abs(b.quad_inner(psi, psi, t, spec) - 1.0) < 1e-10

    def test_phi_is_raised_psi(self):
        z = 0.2 - 0.4j
        cf = coh.closed_form(coh.CoherentParams(z))
        x = np.linspace(-3, 3, 13)
        for t in (0.0, 0.8):
            v = cf.psi(x, t)
            d1 = cf.dpsi(x, t)
            raised = 0.5 * (1j + t) * d1 - 0.25j * x * v
            assert np.abs(raised - cf.phi(x, t)).max() < 1e-14

    def test_phi_norm_value(self):
        z = 0.5j
        cf = coh.closed_form(coh.CoherentParams(z))
        spec = replace(b.QuadratureSpec(), scale=coh.quad_scale(z, 0.0))
        phi = lambda x: cf.phi(x, 0.0)
        got = b.quad_inner(phi, phi, 0.0, spec).real
        assert abs(got - 0.25 / (1 - abs(z) ** 2)) < 1e-12

    def test_norm_sq_identity(self):
        cf = coh.closed_form(coh.CoherentParams(0.5j, 0.7 - 0.2j))
        assert (cf.norm_sq(0.5) - 1.0).max_abs() < 1e-12


class TestExpansionCoefficients:
    def test_leading_values(self):
        z = 0.4 + 0.1j
        ge, go = coh.expansion_coefficients(z, 4)
        pref = (1 - abs(z) ** 2) ** 0.25
        assert abs(ge[0] - pref) < 1e-15
        assert abs(go[0] - 0.5 * pref) < 1e-15

    def test_first_ratio(self):
        z = 0.37 - 0.2j
        ge, _ = coh.expansion_coefficients(z, 3)
        assert abs(ge[1] / ge[0] - z * np.sqrt(0.5)) < 1e-14

    def test_even_norm_is_one(self):
        z = 0.6
        ge, _ = coh.expansion_coefficients(z, coh.series_length_for(z, 1e-14))
        assert abs(np.sum(np.abs(ge) ** 2) - 1.0) < 1e-13


class TestSeriesState:
    def test_z_zero_is_vacuum(self):
        sv = coh.series_state(coh.CoherentParams(0.0), 8, ALG)
        vac = SuperVector.basis_state(0, 0, 8, ALG)
        assert (sv - vac).max_abs() < 1e-15

    def test_unit_super_norm_exact(self):
        sv = coh.series_state(coh.CoherentParams(0.4j, 1.5 - 0.5j), 64, ALG)
        assert (sv.super_inner(sv) - 1.0).max_abs() < 1e-14

    def test_coefficient_proportionality(self):
        z = 0.3 + 0.2j
        sv = coh.series_state(coh.CoherentParams(z), 64, ALG)
        ge, _ = coh.expansion_coefficients(z, 64)
        ratio = sv.even[1].body / sv.even[0].body
        assert abs(ratio - ge[1] / ge[0]) < 1e-14

    def test_truncation_error_raised(self):
        with pytest.raises(coh.TruncationError):
            coh.series_state(coh.CoherentParams(0.8), 16, ALG, tail_tol=1e-12)


class TestCrosscheck:
    @pytest.mark.parametrize("z", [0.5, 0.5j, -0.3 + 0.4j])
    def test_three_routes(self, z):
        p = coh.CoherentParams(z, 1.0)
        r = coh.crosscheck(p, 0.0, n_max=96)
        assert r["max_pairwise_psi"] < 1e-8
        assert r["max_pairwise_phi"] < 1e-8
        assert r["coefficient_defect"] < 1e-8
        assert r["norm_defect"] < 1e-12
        assert r["max_residual"] < 1e-6

    def test_z_zero_recovers_ground(self):
        r = coh.crosscheck(coh.CoherentParams(0.0), 0.0, n_max=8)
        assert r["max_pairwise_psi"] < 1e-14


class TestDisplacement:
    def test_identity_at_origin(self):
        d = coh.displacement_operator(coh.CoherentParams(0.0, 0.0), 8, ALG)
        assert (d - SuperOperator.identity(8, ALG)).max_abs() < 1e-15

    def test_superisometry(self):
        rng = np.random.default_rng(21)
        d = coh.displacement_operator(coh.CoherentParams(0.25, 0.5 - 0.5j), 48, ALG)
        for _ in range(3):
            v1 = random_supervector(48, rng, ALG, support=7)
            v2 = random_supervector(48, rng, ALG, support=7)
            defect = (d.apply(v1).super_inner(d.apply(v2)) - v1.super_inner(v2)).max_abs()
            assert defect < 1e-6

    def test_vacuum_maps_to_disk_coordinate(self):
        for zeta in (0.3, 0.2j, 0.15 - 0.25j):
            d = coh.displacement_operator(coh.CoherentParams(zeta), 64, ALG)
            vac = SuperVector.basis_state(0, 0, 64, ALG)
            w = coh.disk_parameter(zeta)
            ref = coh.series_state(coh.CoherentParams(w), 64, ALG, tail_tol=1e-10)
            ov = ref.super_inner(d.apply(vac))
            assert abs(abs(ov.body) - 1.0) < 1e-6

    def test_naive_same_label_overlap_only_at_small_z(self):
        # the group parameter and the disk coordinate agree to O(z^3), so the
        # same-label overlap is 1 only for small |z|
        vac = SuperVector.basis_state(0, 0, 64, ALG)
        d = coh.displacement_operator(coh.CoherentParams(0.05), 64, ALG)
        ov = coh.series_state(coh.CoherentParams(0.05), 64, ALG).super_inner(d.apply(vac))
        assert abs(abs(ov.body) - 1.0) < 1e-6
        d = coh.displacement_operator(coh.CoherentParams(0.3), 64, ALG)
        ov = coh.series_state(coh.CoherentParams(0.3), 64, ALG).super_inner(d.apply(vac))
        assert abs(abs(ov.body) - 1.0) > 1e-6

    def test_disk_parameter_map(self):
        assert coh.disk_parameter(0.0) == 0.0
        assert abs(coh.disk_parameter(0.3) - np.tanh(0.3)) < 1e-15


class TestSymbols:
    def test_calibration_flag(self):
        assert coh.calibrate_convention(0.3 + 0.25j, ALG) == "conjugate"

    def test_calibration_needs_nonreal(self):
        with pytest.raises(ValueError):
            coh.calibrate_convention(0.5, ALG)

    def test_identity_symbol(self):
        p = coh.CoherentParams(0.5, 1.0)
        assert (coh.berezin_symbol(SuperOperator.identity(64, ALG), p, ALG) - 1.0).max_abs() < 1e-14

    def test_K0_at_origin(self):
        p = coh.CoherentParams(0.0, 0.0)
        got = coh.berezin_symbol(build_generator("K0", 16, ALG), p, ALG)
        assert (got - 0.25).max_abs() < 1e-15

    def test_K0_at_half(self):
        p = coh.CoherentParams(0.5, 1.0)
        got = coh.berezin_symbol(build_generator("K0", 64, ALG), p, ALG)
        assert abs(got.body - 0.25 * 1.25 / 0.75) < 1e-13
        want = coh.expected_symbol("K0", p, ALG, "conjugate")
        assert (got - want).max_abs() < 1e-13

    @pytest.mark.parametrize("name", GENERATOR_NAMES)
    def test_all_generators_match(self, name):
        for z in (0.3, 0.5j, 0.3 - 0.35j):
            n = max(64, coh.series_length_for(z, 1e-7))
            o = build_generator(name, n, ALG)
            for a in (0.0, 1.0, 0.5 + 0.5j):
                p = coh.CoherentParams(z, a)
                got = coh.berezin_symbol(o, p, ALG)
                want = coh.expected_symbol(name, p, ALG, "conjugate")
                assert (got - want).max_abs() < 1e-8

    def test_Kplus_Kminus_related_by_conjugation(self):
        z = 0.4 + 0.2j
        n = 64
        p = coh.CoherentParams(z, 0.0)
        sp = coh.berezin_symbol(build_generator("K+", n, ALG), p, ALG).body
        sm = coh.berezin_symbol(build_generator("K-", n, ALG), p, ALG).body
        assert abs(np.conjugate(sp) - sm) < 1e-12


class TestTrajectory:
    def test_line_parameters_at_origin(self):
        x0, p0 = coh.trajectory_closed_form(coh.CoherentParams(0.0))
        assert abs(x0 + 1 / np.sqrt(2)) < 1e-15
        assert abs(p0 + 1j / (2 * np.sqrt(2))) < 1e-15

    def test_momentum_constant_and_line_affine(self):
        p = coh.CoherentParams(0.3, 0.8 - 0.3j)
        x0, p0 = coh.trajectory_closed_form(p)
        abar = np.conjugate(p.alpha_coeff)
        ts = [0.0, 1.0, 2.0, 3.0]
        sx, sp = [], []
        for t in ts:
            r = coh.trajectory(p, t, ALG)
            sx.append(r["x_theta"].coeff("alpha_bar"))
            sp.append(r["p_theta"].coeff("alpha_bar"))
        sp = np.asarray(sp)
        assert np.abs(sp - p0 * abar).max() < 1e-10
        coef = np.polyfit(ts, np.asarray(sx), 1)
        assert np.abs(np.polyval(coef, ts) - np.asarray(sx)).max() < 1e-9
        assert abs(coef[0] - 2 * p0 * abar) < 1e-9
        assert abs(coef[1] - x0 * abar) < 1e-9

    def test_even_sector_is_at_rest(self):
        r = coh.trajectory(coh.CoherentParams(0.5j, 1.0), 1.0, ALG)
        for key in ("mean_x_psi", "mean_x_phi", "mean_p_psi", "mean_p_phi"):
            assert abs(r[key]) < 1e-10
