"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: InputError -> 2, CapExceeded -> 3.
"""


class InputError(ValueError):
    """Malformed or shape-inconsistent input data."""


class DimensionError(InputError):
    """Operands with incompatible dimensions."""


class CapExceeded(RuntimeError):
    """A resource guardrail was hit; the message names the cap and override."""


class UndecidedSize(CapExceeded):
    """A decision procedure refused to run above its size cap.

    Raised instead of guessing: the verdict is 'undecided: size', never a
    silent default.
    """
