"""Scenario files: declarative worlds, tasks, events, nets and assertions.

A scenario is a JSON document with sections `world`, `vocabularies`, `tasks`,
`events`, `observations`, `nets`, `assertions`, `bounds` and `seed`. Running
one executes its assertions in order and reports expected versus actual per
row; the run fails if any assertion does. Parse and reference errors carry
the offending location.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .causality import (
    DiscreteNet,
    InterventionEvent,
    conditional,
    do_surgery,
    intervention_residue,
    is_distinguishable,
    make_net,
    shared_identity,
    switch_equivalence_check,
)
from .errors import ScenarioFormatError, WeakdoError
from .experiments import Report
from .induction import Policy, induce
from .lang import Language, Statement, weakness
from .mind import Observation, infer_intent
from .task import Task, TaskBounds, make_task
from .world import World, build_world, make_vocabulary


@dataclass
class Scenario:
    seed: int
    world: World
    languages: dict[str, Language]
    tasks: dict[str, tuple[str, Task]] = field(default_factory=dict)
    events: dict[str, tuple[str, InterventionEvent]] = field(default_factory=dict)
    observations: dict[str, tuple[str, tuple[Observation, ...]]] = field(default_factory=dict)
    nets: dict[str, DiscreteNet] = field(default_factory=dict)
    bounds: dict[str, TaskBounds] = field(default_factory=dict)
    assertions: list[dict] = field(default_factory=list)


def _need(obj: dict, key: str, where: str):
    if key not in obj:
        raise ScenarioFormatError(f"{where}: missing required field {key!r}")
    return obj[key]


def _statement(scenario: Scenario, vocabulary: str, names, where: str) -> Statement:
    lang = _language(scenario, vocabulary, where)
    try:
        return lang.statement_of(names)
    except WeakdoError as exc:
        raise ScenarioFormatError(f"{where}: {exc}") from exc


def _language(scenario: Scenario, vocabulary: str, where: str) -> Language:
    if vocabulary not in scenario.languages:
        raise ScenarioFormatError(f"{where}: unknown vocabulary {vocabulary!r}")
    return scenario.languages[vocabulary]


def load_scenario(path) -> Scenario:
    """Parse and resolve a scenario file; all cross-references must resolve."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ScenarioFormatError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise ScenarioFormatError(f"{path}: top level must be an object")

    world_doc = _need(doc, "world", "world")
    try:
        world = build_world(
            _need(world_doc, "states", "world"),
            _need(world_doc, "programs", "world"),
        )
    except WeakdoError as exc:
        raise ScenarioFormatError(f"world: {exc}") from exc

    languages = {}
    for name, names in doc.get("vocabularies", {}).items():
        try:
            languages[name] = Language(make_vocabulary(world, names))
        except WeakdoError as exc:
            raise ScenarioFormatError(f"vocabularies.{name}: {exc}") from exc

    scenario = Scenario(int(doc.get("seed", 0)), world, languages)

    for name, spec in doc.get("bounds", {}).items():
        if not (isinstance(spec, list) and len(spec) == 2):
            raise ScenarioFormatError(f"bounds.{name}: expected [max_situations, max_decisions]")
        try:
            scenario.bounds[name] = TaskBounds(int(spec[0]), int(spec[1]))
        except WeakdoError as exc:
            raise ScenarioFormatError(f"bounds.{name}: {exc}") from exc

    for name, spec in doc.get("tasks", {}).items():
        where = f"tasks.{name}"
        vocabulary = _need(spec, "vocabulary", where)
        lang = _language(scenario, vocabulary, where)
        try:
            task = make_task(
                lang,
                [_statement(scenario, vocabulary, s, where) for s in _need(spec, "situations", where)],
                [_statement(scenario, vocabulary, d, where) for d in _need(spec, "decisions", where)],
            )
        except WeakdoError as exc:
            raise ScenarioFormatError(f"{where}: {exc}") from exc
        scenario.tasks[name] = (vocabulary, task)

    for name, spec in doc.get("events", {}).items():
        where = f"events.{name}"
        vocabulary = _need(spec, "vocabulary", where)
        try:
            event = InterventionEvent(
                _statement(scenario, vocabulary, _need(spec, "a", where), where),
                _statement(scenario, vocabulary, _need(spec, "c", where), where),
            )
        except WeakdoError as exc:
            raise ScenarioFormatError(f"{where}: {exc}") from exc
        scenario.events[name] = (vocabulary, event)

    for name, spec in doc.get("observations", {}).items():
        where = f"observations.{name}"
        vocabulary = _need(spec, "vocabulary", where)
        try:
            pairs = tuple(
                Observation(
                    _statement(scenario, vocabulary, pair[0], where),
                    _statement(scenario, vocabulary, pair[1], where),
                )
                for pair in _need(spec, "pairs", where)
            )
        except (WeakdoError, IndexError) as exc:
            raise ScenarioFormatError(f"{where}: {exc}") from exc
        scenario.observations[name] = (vocabulary, pairs)

    for name, spec in doc.get("nets", {}).items():
        where = f"nets.{name}"
        try:
            scenario.nets[name] = make_net([
                (
                    _need(v, "name", where),
                    tuple(_need(v, "domain", where)),
                    tuple(v.get("parents", ())),
                    [
                        (
                            tuple(row.get("given", {}).get(p) for p in v.get("parents", ())),
                            {value: Fraction(p) for value, p in _need(row, "p", where).items()},
                        )
                        for row in _need(v, "cpt", where)
                    ],
                )
                for v in _need(spec, "variables", where)
            ])
        except (WeakdoError, ValueError, ZeroDivisionError) as exc:
            raise ScenarioFormatError(f"{where}: {exc}") from exc

    assertions = doc.get("assertions", [])
    if not isinstance(assertions, list):
        raise ScenarioFormatError("assertions: expected a list")
    for i, a in enumerate(assertions):
        if not isinstance(a, dict) or "check" not in a:
            raise ScenarioFormatError(f"assertions[{i}]: expected an object with a 'check' field")
        if a["check"] not in _CHECKS:
            raise ScenarioFormatError(
                f"assertions[{i}]: unknown check {a['check']!r}; "
                f"known: {', '.join(sorted(_CHECKS))}"
            )
    scenario.assertions = assertions
    return scenario


# -- assertion execution -------------------------------------------------------


def _names_cell(names) -> str:
    return "{" + ",".join(names) + "}"


def _check_weakness(scenario, a, where):
    vocabulary = _need(a, "vocabulary", where)
    stmt = _statement(scenario, vocabulary, _need(a, "statement", where), where)
    lang = _language(scenario, vocabulary, where)
    return str(stmt), _cellify(_need(a, "equals", where)), weakness(lang, stmt)


def _check_valid(scenario, a, where):
    vocabulary = _need(a, "vocabulary", where)
    stmt = _statement(scenario, vocabulary, _need(a, "statement", where), where)
    lang = _language(scenario, vocabulary, where)
    return str(stmt), bool(_need(a, "equals", where)), lang.valid_mask(stmt.mask)


def _check_induce(scenario, a, where):
    name = _need(a, "task", where)
    if name not in scenario.tasks:
        raise ScenarioFormatError(f"{where}: unknown task {name!r}")
    vocabulary, task = scenario.tasks[name]
    lang = _language(scenario, vocabulary, where)
    kind = a.get("policy", "weakest")
    seed = a.get("seed", scenario.seed) if kind == "random" else None
    result = induce(lang, task, Policy(kind, seed))
    actual = str(result.chosen)
    expected = _names_cell(_need(a, "chosen", where))
    if "weakness" in a:
        actual += f" w={result.weakness_value}"
        expected += f" w={a['weakness']}"
    return name, expected, actual


def _check_infer_intent(scenario, a, where):
    name = _need(a, "observations", where)
    if name not in scenario.observations:
        raise ScenarioFormatError(f"{where}: unknown observations {name!r}")
    vocabulary, obs = scenario.observations[name]
    lang = _language(scenario, vocabulary, where)
    result = infer_intent(lang, obs)
    actual = str(result.chosen)
    expected = _names_cell(_need(a, "chosen", where))
    if "weakness" in a:
        actual += f" w={result.weakness_value}"
        expected += f" w={a['weakness']}"
    return name, expected, actual


def _event_of(scenario, a, where, key="event"):
    name = _need(a, key, where)
    if name not in scenario.events:
        raise ScenarioFormatError(f"{where}: unknown event {name!r}")
    return scenario.events[name][1]


def _check_residue(scenario, a, where):
    event = _event_of(scenario, a, where)
    residue = intervention_residue(event)
    return _need(a, "event", where), _names_cell(_need(a, "equals", where)), str(residue)


def _check_distinguishable(scenario, a, where):
    event = _event_of(scenario, a, where)
    return _need(a, "event", where), bool(_need(a, "equals", where)), is_distinguishable(event)


def _check_shared_identity(scenario, a, where):
    names = _need(a, "events", where)
    events = []
    for name in names:
        if name not in scenario.events:
            raise ScenarioFormatError(f"{where}: unknown event {name!r}")
        events.append(scenario.events[name][1])
    identity = shared_identity(events, a.get("label", "party"))
    return ",".join(names), _names_cell(_need(a, "equals", where)), str(identity.residue)


def _net_of(scenario, a, where):
    name = _need(a, "net", where)
    if name not in scenario.nets:
        raise ScenarioFormatError(f"{where}: unknown net {name!r}")
    return name, scenario.nets[name]


def _check_conditional(scenario, a, where):
    name, net = _net_of(scenario, a, where)
    qvar, qval = _need(a, "query", where)
    p = conditional(net, (qvar, qval), a.get("given", {}))
    return name, str(Fraction(_need(a, "equals", where))), str(p)


def _check_do_conditional(scenario, a, where):
    name, net = _net_of(scenario, a, where)
    dvar, dval = _need(a, "do", where)
    qvar, qval = _need(a, "query", where)
    p = conditional(do_surgery(net, dvar, dval), (qvar, qval), a.get("given", {}))
    return name, str(Fraction(_need(a, "equals", where))), str(p)


def _check_switch_equivalence(scenario, a, where):
    name, net = _net_of(scenario, a, where)
    verdict = switch_equivalence_check(net, Fraction(_need(a, "prior", where)))
    return name, bool(_need(a, "equals", where)), verdict


_CHECKS = {
    "weakness": _check_weakness,
    "valid": _check_valid,
    "induce": _check_induce,
    "infer_intent": _check_infer_intent,
    "residue": _check_residue,
    "distinguishable": _check_distinguishable,
    "shared_identity": _check_shared_identity,
    "conditional": _check_conditional,
    "do_conditional": _check_do_conditional,
    "switch_equivalence": _check_switch_equivalence,
}


def _cellify(value):
    if isinstance(value, list):
        return _names_cell(value)
    return value


def run_scenario(path) -> Report:
    """Execute a scenario file's assertions and report each outcome.

    Reference and schema problems raise ScenarioFormatError; a computation
    error inside an assertion is reported as that row failing.
    """
    scenario = load_scenario(path)
    rows = []
    ok = True
    for i, a in enumerate(scenario.assertions):
        where = f"assertions[{i}]"
        try:
            target, expected, actual = _CHECKS[a["check"]](scenario, a, where)
        except ScenarioFormatError:
            raise
        except WeakdoError as exc:
            target, expected, actual = a.get("check", "?"), "no error", f"error: {exc}"
        passed = expected == actual
        ok &= passed
        rows.append({
            "index": i, "check": a["check"], "target": target,
            "expected": _cell_str(expected), "actual": _cell_str(actual), "ok": passed,
        })
    header = (
        ("scenario", str(path)),
        ("seed", str(scenario.seed)),
        ("assertions", str(len(scenario.assertions))),
    )
    summary = (("failures", str(sum(1 for r in rows if not r["ok"]))),)
    return Report("scenario run", header, ("index", "check", "target", "expected", "actual", "ok"),
                  rows, summary, ok)


def _cell_str(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
