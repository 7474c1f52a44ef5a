"""Exception types shared by all model modules."""


class LefcorrError(Exception):
    """Base class for domain errors raised by this package."""


class NotACovering(LefcorrError):
    """A projection of the correspondence fails to be a finite covering map."""


class NonTransversal(LefcorrError):
    """The correspondence meets the diagonal non-transversally; fixed-point
    operations are undefined."""


class PoincareDualityFailure(LefcorrError):
    """A pairing matrix that should be invertible by Poincare duality is
    singular."""


class MultiplierNotInRing(LefcorrError):
    """A multiplier does not lie in the endomorphism ring of the declared
    lattice."""


class DegenerateEigenvalues(LefcorrError):
    """The point map has a repeated eigenvalue, so its graph is tangent to
    the diagonal."""


class IrrationalEigenvaluesWarning(UserWarning):
    """Eigenvalues left the exact scalar field; results fall back to
    floating-point arithmetic."""
