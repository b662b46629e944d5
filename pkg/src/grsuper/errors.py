"""Exception hierarchy shared by every layer of the package."""


class GrSuperError(Exception):
    """Base class for all package errors."""


class GroupError(GrSuperError, ValueError):
    """Element does not conform to its group specification."""


class StructureError(GrSuperError, ValueError):
    """Structurally malformed algebra (bad index, duplicate name, ...)."""


class ParseError(GrSuperError, ValueError):
    """Malformed algebra document.

    ``where`` names the offending field (``"brackets[2].result[0]"``) and
    ``line`` is set when the underlying JSON decoder reported one.
    """

    def __init__(self, message, where=None, line=None):
        self.where = where
        self.line = line
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if where:
            prefix += f"{where}: "
        super().__init__(prefix + message)


class ValidationError(GrSuperError):
    """The algebra violates the Lie superalgebra or grading axioms."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"algebra failed validation ({len(report.violations)} violations)")


class HypothesesNotMet(GrSuperError):
    """A structure theorem was invoked outside its hypotheses.

    ``failed`` lists the names of the failed predicates and ``witnesses``
    maps each of them to a human-readable description.
    """

    def __init__(self, failed, witnesses=None, message=None):
        self.failed = list(failed)
        self.witnesses = dict(witnesses or {})
        super().__init__(message or "hypotheses not met: " + ", ".join(self.failed))


class VerificationFailure(GrSuperError):
    """An invariant guaranteed by the theory did not hold. Signals a bug."""


class DirectSumFailure(VerificationFailure):
    pass


class NonSymmetricSupport(HypothesesNotMet, ValueError):
    """The G-support is not closed under inversion."""

    def __init__(self, message):
        super().__init__(["symmetric_support"], {"symmetric_support": [message]}, message)
