"""Exception types shared across the package."""


class TaxsimError(Exception):
    """Base class for all taxsim errors."""


class TaxonomyError(TaxsimError):
    """Structural problem in taxonomy input: cycle, dangling reference,
    duplicate concept id, malformed or empty file."""


class ModelError(TaxsimError):
    """Problem building the probability model, e.g. malformed counts or a
    corpus that attaches no frequency mass to the taxonomy (N = 0)."""


class UnknownConceptError(TaxsimError):
    """A concept id is not present in the taxonomy."""


class UnknownWordError(TaxsimError):
    """A word has no senses in the taxonomy."""


class SimilarityError(TaxsimError):
    """A similarity query cannot produce a finite score."""


class EvaluationError(TaxsimError):
    """Degenerate evaluation input: too few usable rows or zero variance."""
