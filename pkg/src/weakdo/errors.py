"""Exception types raised across the package.

Every error a caller is expected to handle distinctly gets its own class;
they all descend from WeakdoError so CLI and scenario code can catch the
lot in one clause.
"""


class WeakdoError(Exception):
    """Base class for all package errors."""


class WorldSpecError(WeakdoError):
    """Bad world description: no states, duplicate names, unknown references."""


class MismatchError(WeakdoError):
    """Objects from different worlds or vocabularies were mixed."""


class InvalidStatementError(WeakdoError):
    """A statement outside the language was passed where validity is required."""


class TaskDefinitionError(WeakdoError):
    """Ill-formed task: empty situations, decisions outside the decision space,
    bad bounds, or an out-of-range removal count."""


class SilentHypothesisError(WeakdoError):
    """The hypothesis licenses no decision in the given situation."""


class NoValidModelError(WeakdoError):
    """The task has no valid model in this vocabulary."""


class NoParentTaskError(WeakdoError):
    """No strict parent task exists within the given bounds."""


class EnumerationBudgetError(WeakdoError):
    """The bounded task space is too large to enumerate; use sampling."""


class MalformedEventError(WeakdoError):
    """Intervention event where the forced content is not part of the event."""


class NetDefinitionError(WeakdoError):
    """Bad discrete network: cyclic, incomplete or non-normalised tables,
    unknown variables or values."""


class ZeroProbabilityEvidenceError(WeakdoError):
    """Conditioning on evidence with zero probability mass."""


class GoalMismatchError(WeakdoError):
    """Behaviour outside the projected goal: no refinement of the anchor
    can account for the observed decision."""


class ScenarioFormatError(WeakdoError):
    """Scenario file failed to parse or validate; message carries a location."""
