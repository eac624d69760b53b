import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import casimir_iso.lifshitz as lifshitz_mod
from casimir_iso import (
    ConvergenceError,
    IdealConductor,
    MatsubaraConfig,
    MatsubaraTruncationError,
    PlasmaModel,
    PlateSystem,
    QuadratureConfig,
    Temperature,
    casimir_force_finite_T,
    casimir_force_finite_T_detailed,
    casimir_force_zero_T,
    ideal_pressure,
    k_function,
    mode_term,
    mode_term_ideal,
)
from casimir_iso._backend import kernels

OMEGA_P = 1.37e16
AREA = 1e-4


class TestKFunction:
    def test_vacuum_grazing(self):
        assert k_function(1.0, 1.0) == 1.0

    def test_vacuum_equals_p(self):
        assert k_function(2.0, 1.0) == 2.0

    def test_dielectric(self):
        assert k_function(1.0, 5.0) == pytest.approx(math.sqrt(5.0), rel=1e-15)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            k_function(0.5, 2.0)
        with pytest.raises(ValueError):
            k_function(2.0, 0.5)

    @given(st.floats(min_value=1.0, max_value=1e3), st.floats(min_value=1.0, max_value=1e6))
    def test_lower_bounds(self, p, eps):
        k = k_function(p, eps)
        assert k >= p * (1 - 1e-15)
        assert k >= math.sqrt(eps - 1.0) * (1 - 1e-15)


class TestModeTerm:
    def test_vacuum_plates_exert_no_force(self):
        assert mode_term(1e15, 2.0, 1e-6, 1.0) == (0.0, 0.0)

    def test_infinite_eps_rejected(self):
        with pytest.raises(ValueError):
            mode_term(1e15, 2.0, 1e-6, math.inf)

    def test_ideal_branch_is_planck_like(self):
        xi, p, d = 1e15, 1.5, 1e-6
        tm, te = mode_term_ideal(xi, p, d)
        expected = 1.0 / math.expm1(2.0 * d * xi * p / 299792458.0)
        assert tm == pytest.approx(expected, rel=1e-14)
        assert te == tm

    def test_exponential_suppression(self):
        tm, te = mode_term(1e18, 5.0, 1e-5, 2.0)
        assert tm == 0.0 and te == 0.0  # e^{-y} underflows for y ~ 3e5

    def test_large_eps_approaches_ideal(self):
        xi, p, d = 2e14, 1.3, 1e-6
        tm, _ = mode_term(xi, p, d, 1e12)
        ideal_tm, _ = mode_term_ideal(xi, p, d)
        assert tm == pytest.approx(ideal_tm, rel=1e-4)

    @settings(max_examples=200)
    @given(st.floats(min_value=1e12, max_value=1e17),
           st.floats(min_value=1.0, max_value=50.0),
           st.floats(min_value=1e-8, max_value=1e-4),
           st.floats(min_value=1.0, max_value=1e8))
    def test_terms_nonnegative(self, xi, p, d, eps):
        tm, te = mode_term(xi, p, d, eps)
        assert tm >= 0.0
        assert te >= 0.0
        assert math.isfinite(tm) and math.isfinite(te)

    def test_matches_reduced_kernel(self):
        # the public per-point operation and the hot kernel agree
        xi, d, eps = 3e14, 1e-6, 40.0
        x = 2.0 * d * xi / 299792458.0
        for p in (1.0, 1.7, 4.2):
            y = x * p
            tm, te = mode_term(xi, p, d, eps)
            kernel_value = kernels.reduced_integrand(np.array([y]), x, eps)[0]
            assert kernel_value == pytest.approx(y * y * (tm + te), rel=1e-13)


class TestPlateSystem:
    def test_rejects_bad_geometry(self):
        with pytest.raises(ValueError):
            PlateSystem(0.0, AREA, IdealConductor())
        with pytest.raises(ValueError):
            PlateSystem(1e-6, -1.0, IdealConductor())

    def test_rejects_mixed_plates(self):
        with pytest.raises(ValueError):
            PlateSystem(1e-6, AREA, IdealConductor(), PlasmaModel(1e16))
        with pytest.raises(ValueError):
            PlateSystem(1e-6, AREA, PlasmaModel(1e16), PlasmaModel(2e16))

    def test_identical_plates_accepted(self):
        s = PlateSystem(1e-6, AREA, PlasmaModel(1e16), PlasmaModel(1e16))
        assert s.model == PlasmaModel(1e16)
        assert PlateSystem(1e-6, AREA, IdealConductor()).model_2 == IdealConductor()


def test_matsubara_config_invariants():
    with pytest.raises(ValueError):
        MatsubaraConfig(Temperature(300.0), term_rel_tol=0.0)
    with pytest.raises(ValueError):
        MatsubaraConfig(Temperature(300.0), consecutive_small=1)


class TestZeroTemperature:
    def test_ideal_reduction_across_separations(self):
        for d in (0.1e-6, 1e-6, 10e-6):
            engine = casimir_force_zero_T(PlateSystem(d, AREA, IdealConductor()))
            exact = ideal_pressure(d) * AREA
            assert engine == pytest.approx(exact, rel=1e-3)
            assert engine < 0.0

    def test_inverse_fourth_power_scaling(self):
        cfg = QuadratureConfig(rel_tol=1e-9)
        f1 = casimir_force_zero_T(PlateSystem(1e-6, AREA, IdealConductor()), cfg)
        f2 = casimir_force_zero_T(PlateSystem(2e-6, AREA, IdealConductor()), cfg)
        assert f1 / f2 == pytest.approx(16.0, rel=1e-7)

    def test_area_linearity_exact(self):
        cfg = QuadratureConfig(rel_tol=1e-9)
        f1 = casimir_force_zero_T(PlateSystem(1e-6, AREA, PlasmaModel(OMEGA_P)), cfg)
        f2 = casimir_force_zero_T(PlateSystem(1e-6, 2 * AREA, PlasmaModel(OMEGA_P)), cfg)
        assert f2 == pytest.approx(2.0 * f1, rel=1e-15)

    def test_plasma_below_ideal_and_monotone_in_omega_p(self):
        cfg = QuadratureConfig(rel_tol=1e-9)
        d = 1e-6
        ideal = abs(casimir_force_zero_T(PlateSystem(d, AREA, IdealConductor()), cfg))
        weaker = abs(casimir_force_zero_T(PlateSystem(d, AREA, PlasmaModel(OMEGA_P)), cfg))
        stronger = abs(casimir_force_zero_T(PlateSystem(d, AREA, PlasmaModel(4 * OMEGA_P)), cfg))
        assert weaker < stronger < ideal

    def test_plasma_bracket_at_five_skin_depths(self):
        # d = 5 * (2 pi c / omega_p): magnitude between half the ideal value and it
        d = 5.0 * 2.0 * math.pi * 299792458.0 / OMEGA_P
        full = abs(casimir_force_zero_T(PlateSystem(d, AREA, PlasmaModel(OMEGA_P))))
        ideal = abs(ideal_pressure(d) * AREA)
        assert 0.5 * ideal < full < ideal

    def test_magnitude_decreases_with_separation(self):
        cfg = QuadratureConfig(rel_tol=1e-8)
        mags = [abs(casimir_force_zero_T(PlateSystem(d, AREA, PlasmaModel(OMEGA_P)), cfg))
                for d in (0.5e-6, 1e-6, 2e-6)]
        assert mags[0] > mags[1] > mags[2]


class TestFiniteTemperature:
    def test_cold_ideal_plates_approach_zero_T_pressure(self):
        # T = 1 K, d = 1 um: thermal corrections far below 1%
        force = casimir_force_finite_T(
            PlateSystem(1e-6, AREA, IdealConductor()),
            MatsubaraConfig(Temperature(1.0)),
        )
        exact = ideal_pressure(1e-6) * AREA
        assert force == pytest.approx(exact, rel=1e-2)
        assert force < 0.0
        assert abs(force) == pytest.approx(1.3e-7, rel=0.02)

    def test_area_linearity(self):
        mcfg = MatsubaraConfig(Temperature(300.0))
        f1 = casimir_force_finite_T(PlateSystem(1e-6, AREA, IdealConductor()), mcfg)
        f2 = casimir_force_finite_T(PlateSystem(1e-6, 2 * AREA, IdealConductor()), mcfg)
        assert f2 == pytest.approx(2.0 * f1, rel=1e-15)

    def test_plasma_room_temperature_pinned_by_oracle(self):
        # frozen output of the independent fixed-grid Simpson oracle
        # (oracle_force_finite_T, n_p=2001, stable to 2e-12 under refinement)
        result = casimir_force_finite_T_detailed(
            PlateSystem(1e-6, AREA, PlasmaModel(OMEGA_P)),
            MatsubaraConfig(Temperature(300.0)),
        )
        assert result.force == pytest.approx(-1.1648534981786489e-07, rel=1e-7)
        assert result.matsubara_terms > 10
        assert result.error_estimate < 1e-9 * abs(result.force)

    def test_rejects_zero_temperature(self):
        with pytest.raises(ValueError):
            casimir_force_finite_T(
                PlateSystem(1e-6, AREA, IdealConductor()),
                MatsubaraConfig(Temperature(0.0)),
            )

    def test_truncation_cap_raises(self, monkeypatch):
        monkeypatch.setattr(lifshitz_mod, "HARD_TERM_CAP", 3)
        with pytest.raises(MatsubaraTruncationError) as exc:
            casimir_force_finite_T(
                PlateSystem(1e-6, AREA, IdealConductor()),
                MatsubaraConfig(Temperature(1.0)),
            )
        assert exc.value.terms_used == 3

    def test_quadrature_failure_propagates(self):
        with pytest.raises(ConvergenceError) as exc:
            casimir_force_finite_T(
                PlateSystem(1e-6, AREA, PlasmaModel(OMEGA_P)),
                MatsubaraConfig(Temperature(300.0)),
                QuadratureConfig(rel_tol=1e-13, max_refinements=1),
            )
        assert exc.value.estimate > 0.0


class TestTabulatedPath:
    """The engine with a dense table sampled from the plasma model.

    The l >= 1 terms must match the plasma terms to interpolation accuracy.
    The l = 0 term intentionally differs: a table has no xi -> 0 model, so
    the engine takes the finite-static-permittivity limit (TE contribution
    zero) instead of the plasma TE limit, making the total force smaller.
    """

    WP = 1.37e16

    def _table(self):
        from casimir_iso import TabulatedModel
        xis = np.geomspace(1e13, 1e18, 301)
        eps = 1.0 + (self.WP / xis) ** 2
        return TabulatedModel(tuple(xis), tuple(eps))

    def test_matsubara_terms_match_plasma(self):
        from casimir_iso.lifshitz import _mode_sum_integral
        from casimir_iso import PlasmaModel, QuadratureConfig, Temperature, \
            matsubara_frequency
        table, plasma = self._table(), PlasmaModel(self.WP)
        cfg = QuadratureConfig(rel_tol=1e-10)
        d = 1e-6
        for l in (1, 3, 10):
            xi = matsubara_frequency(l, Temperature(300.0))
            x = 2.0 * d * xi / 299792458.0
            from_table, _ = _mode_sum_integral(table, x, xi, cfg)
            from_plasma, _ = _mode_sum_integral(plasma, x, xi, cfg)
            assert from_table == pytest.approx(from_plasma, rel=1e-4)

    def test_total_force_attractive_and_below_plasma(self):
        table = self._table()
        mcfg = MatsubaraConfig(Temperature(300.0))
        f_table = casimir_force_finite_T(PlateSystem(1e-6, AREA, table), mcfg)
        f_plasma = casimir_force_finite_T(
            PlateSystem(1e-6, AREA, PlasmaModel(self.WP)), mcfg)
        assert f_table < 0.0
        assert abs(f_table) < abs(f_plasma)
        assert abs(f_table) > 0.7 * abs(f_plasma)

    def test_zero_T_propagates_range_error(self):
        from casimir_iso import TabulatedRangeError
        with pytest.raises(TabulatedRangeError):
            casimir_force_zero_T(PlateSystem(1e-6, AREA, self._table()))


@settings(max_examples=60)
@given(st.floats(min_value=0.05, max_value=30.0),
       st.floats(min_value=0.01, max_value=5.0),
       st.floats(min_value=1.0 + 1e-12, max_value=1e9))
def test_reduced_integrand_nonnegative(y_over_x, x, eps):
    # force integrand has definite sign for every valid input
    y = np.array([x * (1.0 + y_over_x)])
    value = kernels.reduced_integrand(y, x, eps)[0]
    assert value >= 0.0
    assert math.isfinite(value)
