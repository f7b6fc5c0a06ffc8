"""Exception hierarchy.

Every error carries an optional ``witness``: the element ids (or subspaces,
or line numbers) that made the check fail, so callers can print them.
"""


class LatticeError(Exception):
    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownElement(LatticeError):
    pass


class TooLarge(LatticeError):
    pass


# -- building a lattice from covers

class NotALattice(LatticeError):
    pass


class CycleDetected(NotALattice):
    pass


class NoUniqueBound(NotALattice):
    pass


class NoBottomTop(NotALattice):
    pass


# -- orthocomplements

class OrthoError(LatticeError):
    pass


class NotInvolution(OrthoError):
    pass


class ComplementLawFails(OrthoError):
    pass


class NotAntitone(OrthoError):
    pass


class NotDominated(LatticeError):
    pass


# -- structural preconditions

class NotModular(LatticeError):
    pass


class NotRegular(LatticeError):
    pass


class AxiomFails(LatticeError):
    """A dimension-function axiom or one of its preconditions does not hold."""

    def __init__(self, axiom, witness=None, message=""):
        super().__init__(message or f"axiom {axiom} fails (witness {witness!r})", witness)
        self.axiom = axiom


class NotFactorial(AxiomFails):
    def __init__(self, witness=None, message=""):
        super().__init__("factorial", witness, message or "lattice is not factorial")


class NoMinimalBelow(LatticeError):
    pass


class NotMinimal(LatticeError):
    pass


class NotDecomposable(LatticeError):
    pass


# -- subspace model

class WidthMismatch(LatticeError):
    pass


class AmbientMismatch(LatticeError):
    pass


class DimensionMismatch(LatticeError):
    pass


# -- lattice files

class ParseError(LatticeError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message, line)
        self.line = line


class DuplicatePair(ParseError):
    pass


class IncompleteInvolution(ParseError):
    pass
