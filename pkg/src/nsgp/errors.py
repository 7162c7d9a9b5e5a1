"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and the exit status the
command-line front end uses when it escapes a command.
"""

from __future__ import annotations


class NsgpError(Exception):
    code = "error"
    exit_code = 1


class ValidationError(NsgpError, ValueError):
    code = "invalid"
    exit_code = 2


class EmptyGenerators(ValidationError):
    code = "empty_generators"


class GcdNotOne(ValidationError):
    code = "gcd_not_one"


class GeneratorTooLarge(ValidationError):
    code = "generator_too_large"


class TooManyGenerators(ValidationError):
    code = "too_many_generators"


class NotAnElement(ValidationError):
    code = "not_an_element"


class SingleGenerator(ValidationError):
    code = "single_generator"


class NotTwoGenerated(ValidationError):
    code = "not_two_generated"


class UnsupportedInvariant(ValidationError):
    code = "unsupported_invariant"


class TableTooShort(NsgpError, IndexError):
    code = "table_too_short"


class ExplosionGuard(NsgpError):
    code = "explosion_guard"
    exit_code = 4


class NotStable(NsgpError):
    code = "not_stable"
    exit_code = 3


class IdentityMismatch(NsgpError, AssertionError):
    """Two independent evaluations of the same series disagree (a bug)."""

    code = "identity_mismatch"


class AnchorUnverified(NsgpError):
    code = "anchor_unverified"


class NoDissonance(NsgpError):
    code = "no_dissonance"


class NoDecomposition(NsgpError):
    code = "no_decomposition"
