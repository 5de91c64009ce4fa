"""Tasks: situations, correct decisions, model sets, completion and enumeration.

A task pairs a set of situations with the decisions that count as correct.
Its models are the statements that, intersected with the decision space,
produce exactly the correct decisions while licensing nothing outside their
union. Enumeration of the bounded task space underpins the generalisation
experiments; `strict` mode restricts it to tasks whose correct decisions do
not exhaust the decision space and whose situations do not exhaust the
language, which is the space the generalisation propositions quantify over.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .errors import (
    EnumerationBudgetError,
    MismatchError,
    SilentHypothesisError,
    TaskDefinitionError,
)
from .lang import Language, Statement

DEFAULT_ENUMERATION_CEILING = 10_000_000


@dataclass(frozen=True)
class Task:
    situations: frozenset[Statement]
    decisions: frozenset[Statement]

    def render(self) -> str:
        s = ",".join(str(x) for x in sorted(self.situations, key=lambda t: t.mask))
        d = ",".join(str(x) for x in sorted(self.decisions, key=lambda t: t.mask))
        return f"S=[{s}] D=[{d}]"


@dataclass(frozen=True)
class Decision:
    value: Statement
    correct: bool


@dataclass(frozen=True)
class TaskBounds:
    max_situations: int
    max_decisions: int

    def __post_init__(self):
        if self.max_situations < 1 or self.max_decisions < 1:
            raise TaskDefinitionError("task bounds must be at least (1, 1)")


def make_task(lang: Language, situations, decisions) -> Task:
    """Validate and build a task over `lang`.

    Situations must be valid and not exhaust the language; every decision must
    extend at least one situation.
    """
    situations = frozenset(situations)
    decisions = frozenset(decisions)
    if not situations:
        raise TaskDefinitionError("a task needs at least one situation")
    if not decisions:
        raise TaskDefinitionError("a task needs at least one correct decision")
    s_masks = [lang.require_valid(s) for s in situations]
    space = set()
    for m in s_masks:
        space |= lang.extension_masks(m)
    for d in decisions:
        if lang.require_valid(d) not in space:
            raise TaskDefinitionError(f"decision {d} extends no situation")
    return Task(situations, decisions)


def decision_space(lang: Language, situations) -> frozenset[Statement]:
    """Every decision available in the given situations."""
    situations = frozenset(situations)
    if not situations:
        raise TaskDefinitionError("decision space of an empty situation set")
    masks = set()
    for s in situations:
        masks |= lang.extension_masks(lang.require_valid(s))
    return frozenset(lang.statement(m) for m in masks)


def _space_masks(lang: Language, situations) -> frozenset[int]:
    masks = set()
    for s in situations:
        masks |= lang.extension_masks(lang.check(s))
    return frozenset(masks)


def _is_model_mask(lang: Language, m: int, space: frozenset[int], d_masks: frozenset[int],
                   union_d: int) -> bool:
    z_m = lang.extension_masks(m)
    if space & z_m != d_masks:
        return False
    return all(z & ~union_d == 0 for z in z_m)


def _model_masks(lang: Language, task: Task) -> frozenset[int]:
    space = _space_masks(lang, task.situations)
    d_masks = frozenset(lang.check(d) for d in task.decisions)
    union_d = 0
    for d in d_masks:
        union_d |= d
    # every model is contained in every correct decision
    meet = ~0
    for d in d_masks:
        meet &= d
    return frozenset(
        m for m in lang.valid_masks()
        if m & ~meet == 0 and _is_model_mask(lang, m, space, d_masks, union_d)
    )


def valid_models(lang: Language, task: Task) -> frozenset[Statement]:
    """All statements that obtain exactly the correct decisions from the situations.

    May be empty: the task is then unlearnable in this vocabulary.
    """
    return frozenset(lang.statement(m) for m in _model_masks(lang, task))


def is_model(lang: Language, model: Statement, task: Task) -> bool:
    """Membership test equivalent to `model in valid_models(lang, task)`."""
    m = lang.require_valid(model)
    space = _space_masks(lang, task.situations)
    d_masks = frozenset(lang.check(d) for d in task.decisions)
    union_d = 0
    for d in d_masks:
        union_d |= d
    return _is_model_mask(lang, m, space, d_masks, union_d)


def generalises(lang: Language, model: Statement, task: Task) -> bool:
    """Whether a model of one task is also a model of `task`."""
    return is_model(lang, model, task)


def complete(lang: Language, hypothesis: Statement, situation: Statement, task: Task) -> Decision:
    """Select the decision the hypothesis licenses in `situation`.

    Deterministic: the lexicographically smallest mask in the intersection of
    the situation's and the hypothesis's extensions.
    """
    if situation not in task.situations:
        raise TaskDefinitionError(f"{situation} is not a situation of this task")
    h = lang.require_valid(hypothesis)
    s = lang.require_valid(situation)
    choices = lang.extension_masks(s) & lang.extension_masks(h)
    if not choices:
        raise SilentHypothesisError(
            f"hypothesis {hypothesis} licenses no decision in situation {situation}"
        )
    value = lang.statement(min(choices))
    return Decision(value, value in task.decisions)


def is_child(child: Task, parent: Task) -> bool:
    """Strictly fewer situations, no new decisions of its own."""
    a = next(iter(child.situations))
    b = next(iter(parent.situations))
    if a.vocab != b.vocab:
        raise MismatchError("tasks come from different vocabularies")
    return child.situations < parent.situations and child.decisions <= parent.decisions


def count_tasks(lang: Language, bounds: TaskBounds, strict: bool = False,
                ceiling: int = DEFAULT_ENUMERATION_CEILING) -> int:
    """Exact size of the bounded task space (enumerates situation sets only)."""
    _guard_budget(lang, bounds, ceiling)
    stmts = lang.valid_masks()
    max_s = min(bounds.max_situations, len(stmts) - 1 if strict else len(stmts))
    total = 0
    for ns in range(1, max_s + 1):
        for s in combinations(stmts, ns):
            space = set()
            for m in s:
                space |= lang.extension_masks(m)
            n = len(space)
            hi = min(bounds.max_decisions, n - 1 if strict else n)
            total += sum(comb(n, nd) for nd in range(1, hi + 1))
    return total


def _guard_budget(lang: Language, bounds: TaskBounds, ceiling: int) -> None:
    n = lang.size
    upper_s = sum(comb(n, k) for k in range(1, min(bounds.max_situations, n) + 1))
    upper_d = sum(comb(n, j) for j in range(1, min(bounds.max_decisions, n) + 1))
    if upper_s * upper_d > ceiling:
        raise EnumerationBudgetError(
            f"bounded task space may exceed {ceiling} tasks; use sampling mode"
        )


def enumerate_tasks(lang: Language, bounds: TaskBounds, strict: bool = False,
                    ceiling: int = DEFAULT_ENUMERATION_CEILING) -> Iterator[Task]:
    """Yield every bounded task exactly once, in deterministic order.

    Order: situation sets by size then lexicographically by mask tuple, then
    decision sets likewise within each situation set.
    """
    _guard_budget(lang, bounds, ceiling)
    stmts = lang.valid_masks()
    max_s = min(bounds.max_situations, len(stmts) - 1 if strict else len(stmts))
    for ns in range(1, max_s + 1):
        for s in combinations(stmts, ns):
            space = set()
            for m in s:
                space |= lang.extension_masks(m)
            ordered = sorted(space)
            hi = min(bounds.max_decisions, len(ordered) - 1 if strict else len(ordered))
            s_stmts = frozenset(lang.statement(m) for m in s)
            for nd in range(1, hi + 1):
                for d in combinations(ordered, nd):
                    yield Task(s_stmts, frozenset(lang.statement(m) for m in d))


def forget_outliers(lang: Language, task: Task, k: int) -> Task:
    """Drop `k` correct decisions, greedily keeping the surviving model set as
    weak as possible.

    Each round removes the decision whose removal maximises the weakness of
    the weakest remaining model (a task left with no model scores lowest);
    ties prefer dropping the decision with the most programs, then the
    smallest mask. Situations left without any decision are dropped too.
    """
    if k < 0 or k >= len(task.decisions):
        raise TaskDefinitionError(
            f"cannot forget {k} of {len(task.decisions)} decisions"
        )
    current = task
    for _ in range(k):
        best = None
        for d in sorted(current.decisions, key=lambda t: (-t.mask.bit_count(), t.mask)):
            decisions = current.decisions - {d}
            situations = frozenset(
                s for s in current.situations
                if any(lang.check(s) & ~lang.check(dd) == 0 for dd in decisions)
            )
            if not situations:
                continue
            candidate = Task(situations, decisions)
            mm = _model_masks(lang, candidate)
            score = max((lang.weakness_of_mask(m) for m in mm), default=-1)
            if best is None or score > best[0]:
                best = (score, candidate)
        if best is None:
            raise TaskDefinitionError("every removal empties the situation set")
        current = best[1]
    return current
