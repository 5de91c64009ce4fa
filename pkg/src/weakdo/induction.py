"""Hypothesis selection policies and exact generalisation probability.

Induction picks a hypothesis from a task's model set; the headline policy
maximises weakness. Generalisation probability is the fraction of the task's
bounded strict parents whose model set contains the hypothesis, an exact
rational computed by enumeration (or estimated from a uniform sample of the
parent space when enumeration is out of budget).

The parent space here is the strict task space: correct decisions never
exhaust a decision space and situations never exhaust the language. The
generalisation propositions quantify over that space; the permissive
enumeration of `task.enumerate_tasks` remains available for everything else.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    EnumerationBudgetError,
    NoParentTaskError,
    NoValidModelError,
    TaskDefinitionError,
)
from .lang import Language, Statement
from .task import (
    DEFAULT_ENUMERATION_CEILING,
    Task,
    TaskBounds,
    _model_masks,
    enumerate_tasks,
    is_child,
)

POLICY_KINDS = ("weakest", "strongest", "random", "lexicographic")


@dataclass(frozen=True)
class Policy:
    kind: str
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise TaskDefinitionError(f"unknown policy {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            raise TaskDefinitionError("random policy needs an explicit seed")

    def label(self) -> str:
        if self.kind == "random":
            return f"random(seed={self.seed})"
        return self.kind


@dataclass(frozen=True)
class InductionResult:
    argmax_set: frozenset[Statement]
    chosen: Statement
    weakness_value: int


def induce(lang: Language, task: Task, policy: Policy) -> InductionResult:
    """Select a hypothesis from the task's model set according to `policy`.

    The argmax set carries every tied selection; the chosen representative is
    always the smallest mask within it, so identical inputs reproduce
    identical results.
    """
    models = sorted(_model_masks(lang, task))
    if not models:
        raise NoValidModelError("task has no valid model in this vocabulary")
    if policy.kind == "weakest":
        best = max(lang.weakness_of_mask(m) for m in models)
        selected = [m for m in models if lang.weakness_of_mask(m) == best]
    elif policy.kind == "strongest":
        best = min(lang.weakness_of_mask(m) for m in models)
        selected = [m for m in models if lang.weakness_of_mask(m) == best]
    elif policy.kind == "lexicographic":
        selected = [models[0]]
    else:
        selected = [random.Random(policy.seed).choice(models)]
    chosen = min(selected)
    return InductionResult(
        frozenset(lang.statement(m) for m in selected),
        lang.statement(chosen),
        lang.weakness_of_mask(chosen),
    )


def enumerate_parents(lang: Language, task: Task, bounds: TaskBounds,
                      ceiling: int = DEFAULT_ENUMERATION_CEILING) -> list[Task]:
    """Every strict parent of `task` within `bounds`, from the strict task space."""
    return [
        parent
        for parent in enumerate_tasks(lang, bounds, strict=True, ceiling=ceiling)
        if is_child(task, parent)
    ]


def count_parents(lang: Language, task: Task, bounds: TaskBounds) -> int:
    """Count bounded strict parents without enumerating decision sets."""
    stmts = lang.valid_masks()
    s_masks = frozenset(lang.check(s) for s in task.situations)
    d_masks = frozenset(lang.check(d) for d in task.decisions)
    if len(d_masks) > bounds.max_decisions:
        return 0
    pool = sorted(set(stmts) - s_masks)
    max_extra = min(bounds.max_situations, len(stmts) - 1) - len(s_masks)
    base_space = set()
    for m in s_masks:
        base_space |= lang.extension_masks(m)
    total = 0
    for e in range(1, max_extra + 1):
        for extra in combinations(pool, e):
            space = set(base_space)
            for m in extra:
                space |= lang.extension_masks(m)
            n_free = len(space) - len(d_masks)
            budget = bounds.max_decisions - len(d_masks)
            for j in range(0, min(budget, n_free) + 1):
                total += comb(n_free, j)
            if n_free <= budget:
                total -= 1  # the full take would exhaust the decision space
    return total


def generalisation_probability(lang: Language, task: Task, model: Statement,
                               bounds: TaskBounds,
                               ceiling: int = DEFAULT_ENUMERATION_CEILING) -> Fraction:
    """Exact fraction of bounded strict parents that `model` is a model of."""
    m = lang.require_valid(model)
    if m not in _model_masks(lang, task):
        raise NoValidModelError(f"{model} is not a valid model of this task")
    parents = enumerate_parents(lang, task, bounds, ceiling)
    if not parents:
        raise NoParentTaskError("task has no strict parent within these bounds")
    hits = sum(1 for p in parents if m in _model_masks(lang, p))
    return Fraction(hits, len(parents))


def sample_parents(lang: Language, task: Task, bounds: TaskBounds, count: int,
                   rng: random.Random) -> list[Task]:
    """Draw `count` parents uniformly from the bounded strict parent space.

    Rejection sampling: propose a uniformly random extra-situation set, accept
    it proportionally to the number of decision completions it admits, then
    draw the extra decisions uniformly. Exactly uniform over parents.
    """
    stmts = lang.valid_masks()
    s_masks = sorted(lang.check(s) for s in task.situations)
    d_masks = frozenset(lang.check(d) for d in task.decisions)
    pool = sorted(set(stmts) - set(s_masks))
    max_extra = min(bounds.max_situations, len(stmts) - 1) - len(s_masks)
    budget = bounds.max_decisions - len(d_masks)
    base_space = set()
    for m in s_masks:
        base_space |= lang.extension_masks(m)
    exists = (
        max_extra >= 1
        and budget >= 0
        and (not base_space <= d_masks
             or any(not lang.extension_masks(x) <= d_masks for x in pool))
    )
    if not exists:
        raise NoParentTaskError("task has no strict parent within these bounds")
    n_all = lang.size - len(d_masks)
    w_max = sum(comb(n_all, j) for j in range(0, min(budget, n_all) + 1))
    size_weights = [comb(len(pool), e) for e in range(1, max_extra + 1)]

    out: list[Task] = []
    attempts = 0
    limit = 10_000 * max(count, 1)
    while len(out) < count:
        attempts += 1
        if attempts > limit:
            raise EnumerationBudgetError(
                "parent sampling acceptance rate too low; enumerate instead"
            )
        e = rng.choices(range(1, max_extra + 1), weights=size_weights)[0]
        extra = rng.sample(pool, e)
        space = set(base_space)
        for m in extra:
            space |= lang.extension_masks(m)
        free = sorted(space - d_masks)
        n_free = len(free)
        hi = min(budget, n_free)
        weights = [comb(n_free, j) for j in range(0, hi + 1)]
        if n_free <= budget:
            weights[-1] -= 1  # taking everything would exhaust the space
        w = sum(weights)
        if w == 0 or rng.random() * w_max >= w:
            continue
        j = rng.choices(range(0, hi + 1), weights=weights)[0]
        extra_d = rng.sample(free, j)
        out.append(Task(
            frozenset(task.situations) | frozenset(lang.statement(m) for m in extra),
            frozenset(task.decisions) | frozenset(lang.statement(m) for m in extra_d),
        ))
    return out


@dataclass(frozen=True)
class PolicyRow:
    policy: str
    chosen: Statement
    weakness_value: int
    probability: Fraction
    sample_count: int | None = None  # None when exact


@dataclass(frozen=True)
class PolicyReport:
    rows: tuple[PolicyRow, ...]
    weakest_dominates: bool | None


def compare_policies(lang: Language, task: Task, policies, bounds: TaskBounds,
                     samples: int | None = None, rng: random.Random | None = None,
                     ceiling: int = DEFAULT_ENUMERATION_CEILING) -> PolicyReport:
    """Generalisation probability of each policy's chosen hypothesis.

    With `samples`, one uniform parent sample is shared by all policies and
    probabilities are estimates; otherwise the parent space is enumerated and
    probabilities are exact.
    """
    results = {p: induce(lang, task, p) for p in policies}
    if samples is None:
        parents = enumerate_parents(lang, task, bounds, ceiling)
        if not parents:
            raise NoParentTaskError("task has no strict parent within these bounds")
    else:
        parents = sample_parents(lang, task, bounds, samples, rng or random.Random(0))
    prob: dict[int, Fraction] = {}
    for res in results.values():
        m = res.chosen.mask
        if m not in prob:
            hits = sum(1 for p in parents if m in _model_masks(lang, p))
            prob[m] = Fraction(hits, len(parents))
    rows = tuple(
        PolicyRow(p.label(), results[p].chosen, results[p].weakness_value,
                  prob[results[p].chosen.mask],
                  None if samples is None else len(parents))
        for p in policies
    )
    weakest_rows = [r for r, p in zip(rows, policies) if p.kind == "weakest"]
    dominates = None
    if weakest_rows:
        dominates = all(weakest_rows[0].probability >= r.probability for r in rows)
    return PolicyReport(rows, dominates)
