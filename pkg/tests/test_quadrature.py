import math

import numpy as np
import pytest

from casimir_iso import ConvergenceError, QuadratureConfig
from casimir_iso.quadrature import integrate_adaptive, integrate_exp_tail

ZETA3 = 1.2020569031595943


def test_polynomial_exact_for_kronrod_degree():
    # K15 integrates degree <= 22 exactly; one panel suffices
    value, err = integrate_adaptive(lambda x: x**22, 0.0, 1.0, QuadratureConfig())
    assert value == pytest.approx(1.0 / 23.0, rel=1e-14)
    assert err < 1e-12


def test_sine_integral():
    value, _ = integrate_adaptive(np.sin, 0.0, math.pi, QuadratureConfig(rel_tol=1e-12))
    assert value == pytest.approx(2.0, rel=1e-13)


def test_oscillatory_needs_refinement():
    value, _ = integrate_adaptive(lambda x: np.sin(40.0 * x) ** 2, 0.0, math.pi,
                                  QuadratureConfig(rel_tol=1e-10))
    assert value == pytest.approx(math.pi / 2.0, rel=1e-9)


def test_empty_interval():
    assert integrate_adaptive(np.exp, 1.0, 1.0, QuadratureConfig()) == (0.0, 0.0)


def test_convergence_error_carries_state():
    nasty = lambda x: 1.0 / np.sqrt(np.abs(x) + 1e-30)
    with pytest.raises(ConvergenceError) as exc:
        integrate_adaptive(nasty, 0.0, 1.0, QuadratureConfig(rel_tol=1e-13, max_refinements=2))
    assert exc.value.estimate > 0.0
    assert math.isfinite(exc.value.value)


def test_config_invariants():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=1.5)
    with pytest.raises(ValueError):
        QuadratureConfig(max_refinements=0)
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=-1.0)


def exp_tail_bound(cut):
    # bound for integrands dominated by y^2 exp(-y)
    return 2.0 * math.exp(-cut) * (cut * cut + 2.0 * cut + 2.0) / -math.expm1(-cut)


def test_semi_infinite_gamma_integral():
    # int_0^inf y^2 exp(-y) dy = 2
    f = lambda y: y * y * np.exp(-y)
    value, err = integrate_exp_tail(f, 0.0, QuadratureConfig(rel_tol=1e-11), exp_tail_bound)
    assert value == pytest.approx(2.0, rel=1e-11)
    assert err < 1e-9


def test_semi_infinite_bose_integral():
    # int_0^inf y^2/(e^y - 1) dy = 2 zeta(3)
    def f(y):
        out = np.zeros_like(y)
        pos = y > 0
        out[pos] = y[pos] ** 2 / np.expm1(y[pos])
        return out

    value, _ = integrate_exp_tail(f, 0.0, QuadratureConfig(rel_tol=1e-11), exp_tail_bound)
    assert value == pytest.approx(2.0 * ZETA3, rel=1e-10)


def test_shifted_lower_limit():
    # int_3^inf y^2 exp(-y) dy = e^-3 (9 + 6 + 2)
    f = lambda y: y * y * np.exp(-y)
    value, _ = integrate_exp_tail(f, 3.0, QuadratureConfig(rel_tol=1e-11), exp_tail_bound)
    assert value == pytest.approx(math.exp(-3.0) * 17.0, rel=1e-11)


def test_deterministic_repeatability():
    f = lambda y: y * y * np.exp(-y) / (1.0 + 0.3 * np.sin(y) ** 2)
    cfg = QuadratureConfig(rel_tol=1e-10)
    first = integrate_exp_tail(f, 0.0, cfg, exp_tail_bound)
    second = integrate_exp_tail(f, 0.0, cfg, exp_tail_bound)
    assert first == second  # bitwise: fixed panel order, fsum reduction
