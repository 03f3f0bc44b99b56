"""Exception types shared across the package."""


class TerminflectError(Exception):
    """Base class for all package-specific errors."""


class ConlluParseError(TerminflectError):
    """Malformed CoNLL-U input; carries the offending line number."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class TreeValidationError(TerminflectError):
    """Dependency heads do not form a single-rooted acyclic tree."""

    def __init__(self, message, sent_id=None):
        if sent_id is not None:
            message = f"sentence {sent_id!r}: {message}"
        super().__init__(message)
        self.sent_id = sent_id


class UnsupportedPosError(TerminflectError):
    """Part of speech outside the supported inventory."""


class InvalidTagError(TerminflectError):
    """Morphological tag violates slot constraints or cannot be parsed."""


class LexiconFormatError(TerminflectError):
    """Bad row in a lexicon TSV file."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class RulesFormatError(TerminflectError):
    """Bad entry in an inference-rules file."""


class DataFormatError(TerminflectError):
    """Bad row in an auxiliary data file (dictionary, counts, declension table)."""


class SuiteValidationError(TerminflectError):
    """Test-suite entry violates its invariants."""


class EvaluationError(TerminflectError):
    """Evaluation inputs are unusable (misaligned, empty, or incomplete)."""


class AnnotationOverlapError(TerminflectError):
    """Two constraint occurrences claim overlapping token spans."""
