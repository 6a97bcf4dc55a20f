class ZeroRepresentationError(ValueError):
    """A highest weight with more rows than variables: the module is zero."""

    def __init__(self, parts, n):
        self.parts = tuple(parts)
        self.n = n
        super().__init__(
            f"partition {list(self.parts)} has {len(self.parts)} rows > n={n}; "
            "V_n(lambda) is the zero representation"
        )


class NonSymmetricError(ValueError):
    """Raised by Schur elimination when the input is not a symmetric polynomial."""


class InconsistencyError(RuntimeError):
    """An internal identity failed (non-exact halving, negative multiplicity...)."""


class VerificationFailure(AssertionError):
    """A transcription of a paper claim disagrees with the engine."""
