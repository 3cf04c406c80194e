"""Exception hierarchy shared by every gfkit module."""

from __future__ import annotations


class GfkitError(Exception):
    """Base class for all library errors."""


class ZeroConstantTerm(GfkitError, ZeroDivisionError):
    """A series reciprocal was requested for a series with zero constant term."""


class InvalidExponent(GfkitError, ValueError):
    """A generalized Lambert term has a nonpositive exponent in range."""


class UnknownFunction(GfkitError, KeyError):
    """No builtin arithmetic function is registered under the given name."""


class NotInvertible(GfkitError, ZeroDivisionError):
    """A function or kernel has no inverse under the requested convolution."""


class PreconditionFailed(GfkitError, ValueError):
    """An input violates the normalization a closed formula depends on."""


class SingularWeight(GfkitError, ZeroDivisionError):
    """A divisor-sum weight vanishes where it must be inverted."""


class SingularW(GfkitError, ZeroDivisionError):
    """The indeterminate w was given a value with w**k == 1 for some k in range."""


class SingularKernel(GfkitError, ZeroDivisionError):
    """A convolution kernel is not invertible."""


class SingularToeplitz(GfkitError, ZeroDivisionError):
    """A Toeplitz generator has zero leading entry."""


class CompositionError(GfkitError, ValueError):
    """Series composition needs an inner series without constant term."""


class SingularFactorization(GfkitError, ZeroDivisionError):
    """A factorization matrix has a zero diagonal entry."""


class DegenerateRow(GfkitError, ZeroDivisionError):
    """A correlation row has zero variance in one of its factors."""
