"""Exception types shared across the package."""


class TrigsumError(Exception):
    """Base class for all package-specific errors."""


class DomainError(TrigsumError):
    """A closed-form expression was requested outside its real domain.

    For fractional exponents the product form is only defined where the
    half-angle cosine is positive, i.e. for angles inside (-pi, pi).
    """


class PoleError(DomainError):
    """The half-angle cosine vanishes and a negative power of it is needed."""


class DivergentSeriesError(TrigsumError):
    """The series has no value under the requested summation method."""


class ConjugacyError(TrigsumError):
    """Conjugate-pair evaluation failed to cancel its imaginary part.

    This indicates a bug in the evaluation path, not bad input: for real
    coefficients the two phase evaluations are exact conjugates.
    """
