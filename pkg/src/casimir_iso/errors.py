"""Exception and warning types shared across the package."""


class CasimirIsoError(Exception):
    """Base class for all errors raised by casimir_iso."""


class InfiniteThermalWavelength(CasimirIsoError):
    """The thermal wavelength hbar*c/(2*k_B*T) is infinite at T = 0."""


class ConvergenceError(CasimirIsoError):
    """Adaptive quadrature failed to reach its tolerance.

    Carries the best value obtained and the achieved error estimate so the
    caller can decide whether the partial result is still usable.
    """

    def __init__(self, message, value, estimate):
        super().__init__(f"{message} (value={value:.6e}, error estimate={estimate:.3e})")
        self.value = value
        self.estimate = estimate


class MatsubaraTruncationError(CasimirIsoError):
    """The Matsubara sum did not terminate within the hard term cap."""

    def __init__(self, terms_used, partial_sum, last_term):
        super().__init__(
            f"Matsubara sum not converged after {terms_used} terms "
            f"(partial sum {partial_sum:.6e}, last term {last_term:.3e})"
        )
        self.terms_used = terms_used
        self.partial_sum = partial_sum
        self.last_term = last_term


class TabulatedRangeError(CasimirIsoError):
    """A tabulated permittivity was queried outside its sampled interval."""

    def __init__(self, xi, xi_min, xi_max):
        super().__init__(
            f"xi = {xi:.6e} rad/s outside tabulated range [{xi_min:.6e}, {xi_max:.6e}]"
        )
        self.xi = xi
        self.xi_min = xi_min
        self.xi_max = xi_max


class TableFormatError(CasimirIsoError):
    """A data file (permittivity table or isotope table) failed to parse."""

    def __init__(self, path, line_number, message):
        super().__init__(f"{path}:{line_number}: {message}")
        self.path = path
        self.line_number = line_number


class BracketingError(CasimirIsoError):
    """A root finder could not bracket a sign change on its search interval."""


class RegimeWarning(UserWarning):
    """An asymptotic formula was evaluated outside its validity regime."""
