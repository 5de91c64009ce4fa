"""Intent inference from observed behaviour and mirror rationales.

Watching another party produce decisions in situations yields a task; the
weakest models of that task are the intent those decisions served. A mirror
rationale refines one's own goal model into a strictly lower-level statement
that still accounts for a single observed decision. Nested intent composes
the two, depth two only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GoalMismatchError, InvalidStatementError, NoValidModelError
from .induction import InductionResult, Policy, induce
from .lang import Language, Statement
from .task import _model_masks, make_task


@dataclass(frozen=True)
class Observation:
    """One watched situation-decision pair; the decision extends the situation."""

    situation: Statement
    decision: Statement

    def __post_init__(self):
        if self.situation.vocab != self.decision.vocab:
            raise InvalidStatementError(
                "observation statements come from different vocabularies"
            )
        if self.situation.mask & ~self.decision.mask:
            raise InvalidStatementError(
                f"decision {self.decision} does not extend situation {self.situation}"
            )


@dataclass(frozen=True)
class Rationale:
    """A strictly lower-level refinement of an anchor goal model."""

    model: Statement
    anchor: Statement

    def __post_init__(self):
        if self.model.vocab != self.anchor.vocab:
            raise InvalidStatementError("rationale statements mix vocabularies")
        if self.model.mask == self.anchor.mask or self.anchor.mask & ~self.model.mask:
            raise GoalMismatchError(
                f"{self.model} is not a strict refinement of {self.anchor}"
            )


def infer_intent(lang: Language, observations) -> InductionResult:
    """Weakest models of the task assembled from the observations.

    The argmax set is the full inferred intent; the chosen statement is its
    deterministic representative.
    """
    observations = list(observations)
    if not observations:
        raise NoValidModelError("cannot infer intent from no observations")
    task = make_task(
        lang,
        (o.situation for o in observations),
        (o.decision for o in observations),
    )
    if not _model_masks(lang, task):
        raise NoValidModelError("no rationale exists in this vocabulary")
    return induce(lang, task, Policy("weakest"))


def mirror_rationale(lang: Language, anchor: Statement, observation: Observation) -> Rationale:
    """Weakest strict refinement of `anchor` that licenses the observed decision.

    Candidates sit strictly below the anchor in the abstraction order and
    inside the observed decision; ties resolve to the smallest mask. Raises
    when the decision falls outside the anchor's extension or no candidate
    remains.
    """
    a = lang.require_valid(anchor)
    lang.require_valid(observation.situation)
    d = lang.require_valid(observation.decision)
    if a & ~d or a == d:
        if a & ~d:
            raise GoalMismatchError(
                f"behaviour outside projected goal: {observation.decision} "
                f"does not extend {anchor}"
            )
        raise GoalMismatchError(
            f"behaviour outside projected goal: no strict refinement of {anchor} "
            f"can license {observation.decision}"
        )
    candidates = [m for m in lang.extension_masks(a) if m != a and m & ~d == 0]
    best = max(lang.weakness_of_mask(m) for m in candidates)
    chosen = min(m for m in candidates if lang.weakness_of_mask(m) == best)
    return Rationale(lang.statement(chosen), anchor)


def nested_intent(lang: Language, observations_of_other, anchor: Statement) -> Rationale:
    """Depth-two modelling: infer the other party's intent, then refine our own
    anchor towards it.

    The inferred intent plays the role of the observed decision: the result is
    the weakest strict refinement of `anchor` contained in that intent.
    """
    intent = infer_intent(lang, observations_of_other).chosen
    a = lang.require_valid(anchor)
    t = intent.mask
    if a & ~t or a == t:
        raise GoalMismatchError(
            f"behaviour outside projected goal: inferred intent {intent} "
            f"admits no strict refinement of {anchor}"
        )
    candidates = [m for m in lang.extension_masks(a) if m != a and m & ~t == 0]
    best = max(lang.weakness_of_mask(m) for m in candidates)
    chosen = min(m for m in candidates if lang.weakness_of_mask(m) == best)
    return Rationale(lang.statement(chosen), anchor)
