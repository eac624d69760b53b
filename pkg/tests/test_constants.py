import dataclasses

import pytest
from hypothesis import given, strategies as st

from casimir_iso import (
    CONSTANTS,
    InfiniteThermalWavelength,
    PhysicalConstants,
    Temperature,
    matsubara_frequency,
    pascal_to_dyn_per_cm2,
    thermal_wavelength,
)


def test_thermal_wavelength_room_temperature():
    # quoted as 3.8 um; exact CODATA arithmetic gives 3.8165e-6
    lam = thermal_wavelength(Temperature(300.0))
    assert lam == pytest.approx(3.8e-6, rel=0.02)
    assert lam == pytest.approx(3.816474198679464e-06, rel=1e-12)


def test_thermal_wavelength_liquid_helium():
    assert thermal_wavelength(Temperature(4.0)) == pytest.approx(0.29e-3, rel=0.02)


def test_thermal_wavelength_inverse_temperature_scaling():
    assert thermal_wavelength(Temperature(600.0)) == pytest.approx(
        0.5 * thermal_wavelength(Temperature(300.0)), rel=1e-15)


def test_thermal_wavelength_zero_temperature_is_not_a_number():
    with pytest.raises(InfiniteThermalWavelength):
        thermal_wavelength(Temperature(0.0))


def test_temperature_rejects_negative_and_nan():
    with pytest.raises(ValueError):
        Temperature(-1.0)
    with pytest.raises(ValueError):
        Temperature(float("nan"))


@given(st.floats(min_value=1e-3, max_value=1e4))
def test_thermal_wavelength_times_T_is_constant(kelvin):
    product = thermal_wavelength(Temperature(kelvin)) * kelvin
    assert product == pytest.approx(CONSTANTS.hbar * CONSTANTS.c / (2 * CONSTANTS.k_B),
                                    rel=1e-14)


def test_matsubara_frequency_zero_mode():
    assert matsubara_frequency(0, Temperature(300.0)) == 0.0


def test_matsubara_frequency_room_temperature_fundamental():
    # 2*pi*k_B*300/hbar, direct arithmetic
    assert matsubara_frequency(1, Temperature(300.0)) == pytest.approx(
        246779025515306.06, rel=1e-12)


def test_matsubara_frequency_linear_in_index():
    xi1 = matsubara_frequency(1, Temperature(300.0))
    assert matsubara_frequency(2, Temperature(300.0)) == pytest.approx(2 * xi1, rel=1e-15)


@given(st.integers(min_value=0, max_value=10**6), st.floats(min_value=0.1, max_value=2000.0))
def test_matsubara_frequency_linearity(l, kelvin):
    T = Temperature(kelvin)
    assert matsubara_frequency(l, T) == pytest.approx(
        l * matsubara_frequency(1, T), rel=1e-14, abs=0.0)
    assert matsubara_frequency(l, Temperature(2 * kelvin)) == pytest.approx(
        2 * matsubara_frequency(l, T), rel=1e-14, abs=0.0)


def test_matsubara_frequency_rejects_bad_input():
    with pytest.raises(ValueError):
        matsubara_frequency(-1, Temperature(300.0))
    with pytest.raises(ValueError):
        matsubara_frequency(1, Temperature(0.0))


def test_constants_are_frozen():
    with pytest.raises(dataclasses.FrozenInstanceError):
        CONSTANTS.hbar = 1.0


def test_constants_validated():
    with pytest.raises(ValueError):
        PhysicalConstants(hbar=-1.0, c=3e8, k_B=1.4e-23, G=6.7e-11,
                          e_charge=1.6e-19, m_e=9.1e-31, vacuum_permittivity=8.85e-12)


def test_pressure_unit_conversion():
    assert pascal_to_dyn_per_cm2(1.0) == 10.0
    assert pascal_to_dyn_per_cm2(-1.3e-3) == pytest.approx(-1.3e-2, rel=1e-15)
