"""Exception types and the validation report shared by the axiom checkers."""

from dataclasses import dataclass, field


class OmError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(OmError):
    """Malformed input file. Carries a position when one is known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class RealizationError(OmError):
    """Vector configuration cannot realize a chirotope of the requested rank."""


class DeletionError(OmError):
    """Deletion precondition failed, or the deletion result is not a chirotope."""


class ContractionError(OmError):
    """Contraction precondition failed."""


class NoDeletableElement(OmError):
    """No element can be removed while keeping a rank-preserving chirotope."""


class ConstructionError(OmError):
    """The hyperline construction could not complete on the given sign data."""


class ArrangementError(OmError):
    """Rank 1 or rank 2 arrangement data is internally inconsistent."""


class SizeGuardError(OmError):
    """Input exceeds the default size guard. Guards exist because the axiom
    scans are exponential in rank; they can be lifted explicitly."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    message: str

    def __str__(self):
        return f"{self.axiom} violated: {self.message}"


@dataclass
class ValidationReport:
    """Outcome of an axiom check: every violated axiom with one witness each,
    plus non-fatal warnings (e.g. degenerate period bodies)."""

    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, axiom, witness, message):
        self.violations.append(Violation(axiom, tuple(witness), message))

    def warn(self, message):
        self.warnings.append(message)

    def lines(self):
        out = [str(v) for v in self.violations]
        out.extend(f"warning: {w}" for w in self.warnings)
        return out

    def __str__(self):
        return "\n".join(self.lines()) if self.lines() else "ok"
