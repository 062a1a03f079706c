"""Exception hierarchy shared by all modules."""


class LatticeError(Exception):
    """Base class for errors raised by lgmirror."""


class DegenerateInput(LatticeError):
    """Input points do not affinely span a rank-3 lattice."""


class LatticeOverflowError(LatticeError, OverflowError):
    """A coordinate or intermediate value left the checked 64-bit range."""


class NotReflexive(LatticeError):
    pass


class InvalidPair(LatticeError):
    """The two polytopes handed over are not polar duals of each other."""


class NotOnBoundary(LatticeError):
    pass


class DegenerateFace(LatticeError):
    pass


class InvalidParameter(LatticeError, ValueError):
    pass


class ParseError(LatticeError, ValueError):
    """Base class for input-format errors."""


class MalformedHeader(ParseError):
    pass


class MatrixShapeMismatch(ParseError):
    pass


class NonInteger(ParseError):
    pass


class WrongDimension(ParseError):
    pass


class SchemaError(ParseError):
    pass
