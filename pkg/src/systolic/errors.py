"""Exception hierarchy shared by every module."""


class SystolicError(Exception):
    """Base class for errors raised by this package."""


class MalformedInputError(SystolicError, ValueError):
    """Input that cannot describe a simplicial complex (or a file that cannot be parsed)."""


class NotASimplexError(SystolicError, KeyError):
    def __init__(self, simplex):
        self.simplex = tuple(simplex)
        super().__init__(f"{self.simplex} is not a simplex of the complex")

    def __str__(self):
        return self.args[0]


class JoinError(SystolicError, ValueError):
    pass


class ContainmentError(SystolicError, ValueError):
    """A complex that was required to be a subcomplex is not."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"simplex {self.witness} is not contained in the ambient complex")


class SystolicityViolation(SystolicError):
    """A conclusion that holds in systolic complexes failed on the given input.

    ``witness`` carries the offending data (a simplex, a vertex set, ...)
    so the failure can be reported as a counterexample.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ChamberStructureError(SystolicError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class RConditionViolation(SystolicError):
    """The link-complement condition failed at ``vertex``."""

    def __init__(self, vertex, simplex=None, message=None):
        self.vertex = vertex
        self.simplex = simplex
        super().__init__(message or f"R-condition fails at vertex {vertex}")


class GroupAxiomError(SystolicError, ValueError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class GeneratingSetError(SystolicError, ValueError):
    """A Cayley-graph generating set contains the identity or is not closed under inverses."""
