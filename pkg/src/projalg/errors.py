"""Exception types shared across the package."""


class GroupConstructionError(ValueError):
    """Table data fails a group axiom (identity, associativity, inverses)."""


class ContextMismatchError(ValueError):
    """Operands were built over different groups or different cocycles."""


class BackingMismatchError(TypeError):
    """A cocycle or phase backing is incompatible with the given group kind."""


class UnsupportedOperationError(TypeError):
    """The operation is not defined for this kind of group."""


class NormalizationRequiredError(ValueError):
    """The operation needs a cocycle whose identity and inverse-pair phases vanish."""


class RepresentationInconsistencyError(ValueError):
    """Matrix data does not realize a single consistent projective representation."""


class CrossCheckError(RuntimeError):
    """Two independent computation routes disagreed beyond tolerance."""
