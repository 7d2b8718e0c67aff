"""Exception hierarchy shared across the package."""


class AtomGraphError(Exception):
    """Base class for domain errors (CLI maps these to exit code 1)."""


class IncompatibleElements(AtomGraphError):
    """Raised when a partial operation is applied to a non-compatible pair."""

    def __init__(self, msg="incompatible elements"):
        super().__init__(msg)


class ClosureBlowup(AtomGraphError):
    def __init__(self, cap):
        super().__init__(f"closure blowup: more than {cap} elements")
        self.cap = cap


class NotAtomGraph(AtomGraphError):
    def __init__(self, detail=""):
        msg = "graph is not an acepBA atom graph"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class InternalConsistencyError(AssertionError):
    """A proven identity failed to hold; this indicates a bug, not bad input."""
