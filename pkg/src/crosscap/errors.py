class CrosscapError(Exception):
    """Base exception for every failure raised by the crosscap library."""

    pass


class DimensionMismatchError(CrosscapError, ValueError):
    """Raised when vectors, matrices or forms of different dimensions are combined."""

    pass


class OneSidedCurveError(CrosscapError):
    """Raised when a Dehn twist is requested along a one-sided class."""

    pass


class SingularMatrixError(CrosscapError):
    """Raised when a singular matrix is inverted."""

    pass


class PermutationError(CrosscapError, ValueError):
    """Raised for malformed permutations or cycle strings."""

    pass


class ParityMismatchError(CrosscapError, ValueError):
    """Raised when a puncture count does not match the requested parity."""

    pass


class UnsupportedParamsError(CrosscapError, ValueError):
    """Raised for a (genus, punctures) pair outside the supported range."""

    pass


class ChartError(CrosscapError):
    """Base exception for curve chart problems."""

    pass


class ChartParseError(ChartError):
    """Raised when a chart file cannot be parsed.

    Attributes
    ----------
    location : str
        Dotted path of the offending entry in the file.
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ChartConsistencyError(ChartError):
    """Raised when a chart that must validate does not."""

    pass


class CertificationError(CrosscapError):
    """Base exception for certificate construction failures."""

    pass


class NotRequiredGeneratorError(CertificationError):
    """Raised when a certificate is requested for a symbol outside the target set."""

    pass


class UnboundCurveError(CertificationError):
    """Raised when the chart does not bind a curve the recursion needs."""

    pass


class UnresolvedSymbolError(CrosscapError):
    """Raised when a generator symbol has no image in the chart."""

    pass


class CertificateFileError(CrosscapError):
    """Raised when a certificate file is malformed."""

    pass
