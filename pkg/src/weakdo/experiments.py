"""Verification harness, canned demos, world enumeration and report writing.

The premise harness enumerates child tasks of a language, induces a
hypothesis under each policy, and measures each hypothesis's generalisation
probability over the bounded strict parent space, exactly (or by uniform
sampling when asked). The sweep variant runs that over every small world up
to isomorphism. Reports are plain data rendered deterministically: two runs
with the same inputs write byte-identical files.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from .causality import (
    InterventionEvent,
    add_switch,
    conditional,
    do_surgery,
    intervention_residue,
    is_distinguishable,
    raincoat_net,
    shared_identity,
    switch_equivalence_check,
)
from .errors import NoParentTaskError
from .induction import Policy, induce, sample_parents
from .lang import Language, project_statement
from .task import TaskBounds, _model_masks, enumerate_tasks
from .world import Vocabulary, World, build_world, make_vocabulary

FULL_PARENT_BOUNDS = "full"


# -- generic report structure -------------------------------------------------


@dataclass
class Report:
    title: str
    header: tuple[tuple[str, str], ...]
    columns: tuple[str, ...]
    rows: list[dict]
    summary: tuple[tuple[str, str], ...]
    ok: bool


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def frac_dec(x: Fraction) -> str:
    return format(float(x), ".12g")


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return frac_str(value)
    return str(value)


def render_text(report: Report) -> str:
    lines = [f"# {report.title}"]
    for key, value in report.header:
        lines.append(f"{key}: {value}")
    lines.append("")
    widths = {
        c: max(len(c), *(len(_cell(r.get(c, ""))) for r in report.rows)) if report.rows else len(c)
        for c in report.columns
    }
    lines.append("  ".join(c.ljust(widths[c]) for c in report.columns).rstrip())
    for row in report.rows:
        lines.append(
            "  ".join(_cell(row.get(c, "")).ljust(widths[c]) for c in report.columns).rstrip()
        )
    lines.append("")
    for key, value in report.summary:
        lines.append(f"{key}: {value}")
    lines.append(f"verdict: {'PASS' if report.ok else 'FAIL'}")
    lines.append("")
    return "\n".join(lines)


def render_csv(report: Report) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(row.get(c, "")) for c in report.columns])
    return buf.getvalue()


def render_json(report: Report) -> str:
    import json

    payload = {
        "title": report.title,
        "header": dict(report.header),
        "rows": [{c: _cell(r.get(c, "")) for c in report.columns} for r in report.rows],
        "summary": dict(report.summary),
        "verdict": "PASS" if report.ok else "FAIL",
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_report(report: Report, out_dir, basename: str, fmt: str = "csv") -> list[str]:
    """Write the text report plus a csv or json row file; returns the paths."""
    import os

    os.makedirs(out_dir, exist_ok=True)
    text_path = os.path.join(out_dir, f"{basename}.txt")
    with open(text_path, "w", newline="\n") as fh:
        fh.write(render_text(report))
    if fmt == "json":
        rows_path = os.path.join(out_dir, f"{basename}.json")
        content = render_json(report)
    else:
        rows_path = os.path.join(out_dir, f"{basename}.csv")
        content = render_csv(report)
    with open(rows_path, "w", newline="\n") as fh:
        fh.write(content)
    return [text_path, rows_path]


# -- world enumeration --------------------------------------------------------


def enumerate_world_specs(max_states: int, max_vocab: int) -> list[tuple[int, tuple[int, ...]]]:
    """Canonical (state count, program truth vectors) pairs, one per world up to
    state-permutation isomorphism.

    Vectors are bitmasks over states; only non-empty vectors qualify since a
    vocabulary program must be true somewhere. The language depends only on
    the vocabulary's vectors, so each spec doubles as its own vocabulary.
    """
    out = []
    seen = set()
    for n in range(1, max_states + 1):
        vectors = list(range(1, 1 << n))
        perms = list(permutations(range(n)))
        for k in range(1, max_vocab + 1):
            for combo in combinations(vectors, k):
                canon = min(
                    tuple(sorted(
                        sum(((v >> i) & 1) << perm[i] for i in range(n)) for v in combo
                    ))
                    for perm in perms
                )
                if (n, canon) in seen:
                    continue
                seen.add((n, canon))
                out.append((n, canon))
    return out


def world_from_spec(spec: tuple[int, tuple[int, ...]]) -> tuple[World, Vocabulary]:
    n, vectors = spec
    states = [f"s{i}" for i in range(n)]
    programs = {
        "p" + format(v, f"0{n}b"): [states[i] for i in range(n) if (v >> i) & 1]
        for v in vectors
    }
    world = build_world(states, programs)
    return world, make_vocabulary(world, list(programs))


def world_label(spec: tuple[int, tuple[int, ...]]) -> str:
    n, vectors = spec
    return f"w{n}s:" + "+".join(format(v, f"0{n}b") for v in vectors)


def random_world(rng: random.Random, max_states: int, max_vocab: int) -> tuple[World, Vocabulary]:
    """A seeded random world and full vocabulary within the given bounds."""
    n = rng.randint(1, max_states)
    k = rng.randint(1, min(max_vocab, (1 << n) - 1))
    vectors = sorted(rng.sample(range(1, 1 << n), k))
    return world_from_spec((n, tuple(vectors)))


# -- premise verification -----------------------------------------------------


@dataclass(frozen=True)
class PremiseRow:
    world: str
    task: str
    policy: str
    chosen: str
    weakness_value: int
    probability: Fraction
    sample_count: int | None
    dominant: bool


@dataclass
class PremiseReport:
    mode: str  # exhaustive | sampling
    child_bounds: TaskBounds
    parent_bounds: TaskBounds | str
    policies: tuple[str, ...]
    rows: list[PremiseRow] = field(default_factory=list)
    worlds: int = 0
    tasks: int = 0

    @property
    def dominance(self) -> bool:
        return all(r.dominant for r in self.rows)

    def mean_probability(self) -> dict[str, Fraction]:
        sums: dict[str, Fraction] = {}
        counts: dict[str, int] = {}
        for r in self.rows:
            sums[r.policy] = sums.get(r.policy, Fraction(0)) + r.probability
            counts[r.policy] = counts.get(r.policy, 0) + 1
        return {p: sums[p] / counts[p] for p in sums}

    def to_report(self, seed: int) -> Report:
        bounds = self.parent_bounds
        parent_desc = bounds if isinstance(bounds, str) else (
            f"{bounds.max_situations},{bounds.max_decisions}"
        )
        header = (
            ("mode", self.mode),
            ("seed", str(seed)),
            ("child_bounds", f"{self.child_bounds.max_situations},{self.child_bounds.max_decisions}"),
            ("parent_bounds", parent_desc),
            ("policies", ",".join(self.policies)),
            ("worlds", str(self.worlds)),
            ("tasks", str(self.tasks)),
        )
        columns = ("world", "task", "policy", "chosen_mask", "weakness",
                   "numerator", "denominator", "probability", "samples", "dominant")
        rows = [
            {
                "world": r.world,
                "task": r.task,
                "policy": r.policy,
                "chosen_mask": r.chosen,
                "weakness": r.weakness_value,
                "numerator": r.probability.numerator,
                "denominator": r.probability.denominator,
                "probability": frac_dec(r.probability),
                "samples": "" if r.sample_count is None else r.sample_count,
                "dominant": r.dominant,
            }
            for r in self.rows
        ]
        summary = tuple(
            (f"mean_probability[{p}]", f"{frac_str(v)} ({frac_dec(v)})")
            for p, v in sorted(self.mean_probability().items())
        ) + (("dominance", "true" if self.dominance else "false"),)
        return Report("premise verification", header, columns, rows, summary, self.dominance)


def _resolve_parent_bounds(lang: Language, parent_bounds) -> TaskBounds:
    if parent_bounds == FULL_PARENT_BOUNDS:
        return TaskBounds(max(lang.size - 1, 1), lang.size)
    return parent_bounds


def verify_premises(lang: Language, child_bounds: TaskBounds, parent_bounds,
                    policies, *, world: str = "world", samples: int | None = None,
                    rng: random.Random | None = None,
                    report: PremiseReport | None = None) -> PremiseReport:
    """Premise check for one language: every bounded child task with a model
    and a strict parent, under every policy.

    Child tasks and parents come from the strict task space. Exhaustive mode
    shares one enumerated parent pool (with precomputed model sets) across all
    children; sampling mode draws one uniform parent sample per child shared
    by all policies.
    """
    policies = tuple(policies)
    if report is None:
        report = PremiseReport(
            "exhaustive" if samples is None else "sampling",
            child_bounds, parent_bounds, tuple(p.label() for p in policies),
        )
    bounds = _resolve_parent_bounds(lang, parent_bounds)
    pool = None
    if samples is None:
        pool = [
            (frozenset(t.situations), frozenset(t.decisions), _model_masks(lang, t))
            for t in enumerate_tasks(lang, bounds, strict=True)
        ]

    eligible = 0
    for child in enumerate_tasks(lang, child_bounds, strict=True):
        if not _model_masks(lang, child):
            continue
        if samples is None:
            parents = [
                models for s, d, models in pool
                if child.situations < s and child.decisions <= d
            ]
        else:
            try:
                drawn = sample_parents(lang, child, bounds, samples,
                                       rng or random.Random(0))
            except NoParentTaskError:
                continue
            parents = [_model_masks(lang, t) for t in drawn]
        if not parents:
            continue
        eligible += 1
        chosen = {p: induce(lang, child, p) for p in policies}
        prob: dict[int, Fraction] = {}
        for res in chosen.values():
            m = res.chosen.mask
            if m not in prob:
                prob[m] = Fraction(sum(1 for models in parents if m in models),
                                   len(parents))
        weakest = [p for p in policies if p.kind == "weakest"]
        best = max(prob[chosen[p].chosen.mask] for p in policies)
        for p in policies:
            res = chosen[p]
            dominant = (
                prob[chosen[weakest[0]].chosen.mask] >= best if weakest else True
            )
            report.rows.append(PremiseRow(
                world, child.render(), p.label(), str(res.chosen),
                res.weakness_value, prob[res.chosen.mask],
                None if samples is None else len(parents), dominant,
            ))
    if eligible == 0:
        raise NoParentTaskError(
            "no eligible child task (with a model and a strict parent) within these bounds"
        )
    report.worlds += 1
    report.tasks += eligible
    return report


def _sweep_one(args) -> PremiseReport:
    spec, index, child_bounds, parent_bounds, policy_specs, samples, seed = args
    world, vocab = world_from_spec(spec)
    lang = Language(vocab)
    policies = [Policy(kind, seed if kind == "random" else None) for kind in policy_specs]
    try:
        return verify_premises(
            lang, child_bounds, parent_bounds, policies,
            world=world_label(spec), samples=samples,
            rng=random.Random(seed * 1_000_003 + index) if samples else None,
        )
    except NoParentTaskError:
        return PremiseReport(
            "exhaustive" if samples is None else "sampling",
            child_bounds, parent_bounds,
            tuple(Policy(k, seed if k == "random" else None).label() for k in policy_specs),
        )


def verify_premises_sweep(max_states: int, max_vocab: int, child_bounds: TaskBounds,
                          parent_bounds, policy_kinds, *, samples: int | None = None,
                          seed: int = 0, threads: int = 1) -> PremiseReport:
    """Premise check over every world up to (max_states, max_vocab), merged.

    Worlds with no eligible child task are counted but contribute no rows.
    Results are merged in enumeration order regardless of thread count.
    """
    specs = enumerate_world_specs(max_states, max_vocab)
    policy_specs = tuple(policy_kinds)
    jobs = [(spec, i, child_bounds, parent_bounds, policy_specs, samples, seed)
            for i, spec in enumerate(specs)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_sweep_one, jobs, chunksize=4))
    else:
        parts = [_sweep_one(job) for job in jobs]
    merged = PremiseReport(
        "exhaustive" if samples is None else "sampling",
        child_bounds, parent_bounds,
        tuple(Policy(k, seed if k == "random" else None).label() for k in policy_specs),
    )
    for part in parts:
        merged.rows.extend(part.rows)
        merged.worlds += 1
        merged.tasks += part.tasks
    return merged


# -- canned scenarios ----------------------------------------------------------


def raincoat_world() -> World:
    """Rain r, coat c, forced-by-us u, over four states of affairs."""
    return build_world(
        ["calm", "rainy_coat", "forced_dry", "forced_rain"],
        {
            "r": ["rainy_coat", "forced_rain"],
            "c": ["rainy_coat", "forced_dry", "forced_rain"],
            "u": ["forced_dry", "forced_rain"],
        },
    )


def scenario_raincoat() -> Report:
    """Distinguishability of a forced coat under a full and a reduced vocabulary."""
    world = raincoat_world()
    full = Language(make_vocabulary(world, ["r", "c", "u"]))
    reduced = Language(make_vocabulary(world, ["r", "c"]))

    rows = []

    def check(name, vocabulary, event, expect_dist, expect_residue, lang):
        residue = intervention_residue(event)
        dist = is_distinguishable(event)
        ok = (dist == expect_dist
              and residue.names() == tuple(expect_residue)
              and lang.valid_mask(residue.mask))
        rows.append({
            "check": name, "vocabulary": vocabulary,
            "event": str(event.a), "forced": str(event.c),
            "residue": str(residue), "distinguishable": dist, "ok": ok,
        })
        return ok

    forced_coat = InterventionEvent(full.statement_of(["c", "u"]), full.statement_of(["c"]))
    forced_in_rain = InterventionEvent(
        full.statement_of(["r", "c", "u"]), full.statement_of(["r", "c"])
    )
    ok = check("forced coat", "r,c,u", forced_coat, True, ("u",), full)

    reduced_event = InterventionEvent(
        project_statement(forced_coat.a, reduced.vocabulary),
        project_statement(forced_coat.c, reduced.vocabulary),
    )
    ok &= check("forced coat", "r,c", reduced_event, False, (), reduced)

    identity = shared_identity([forced_coat, forced_in_rain], "we")
    identity_ok = identity.stable and identity.residue.names() == ("u",)
    rows.append({
        "check": "shared identity", "vocabulary": "r,c,u",
        "event": str(forced_coat.a) + ";" + str(forced_in_rain.a),
        "forced": str(forced_coat.c) + ";" + str(forced_in_rain.c),
        "residue": str(identity.residue), "distinguishable": identity.stable,
        "ok": identity_ok,
    })
    ok &= identity_ok

    header = (("world", "raincoat"), ("states", "4"), ("programs", "r,c,u"))
    columns = ("check", "vocabulary", "event", "forced", "residue",
               "distinguishable", "ok")
    summary = (("distinguishable_full", "true"), ("distinguishable_reduced", "false"))
    return Report("raincoat intervention", header, columns, rows, summary, ok)


def random_prior(rng: random.Random) -> Fraction:
    den = rng.randint(1, 999)
    return Fraction(rng.randint(0, den), den)


def scenario_do_switch(seed: int = 0, sweep: int = 100) -> Report:
    """Switch-variable equivalence on the canonical net plus seeded random priors."""
    prior = Fraction(1, 5)
    base = raincoat_net(prior)
    switched = add_switch(base, "C")
    rows = []

    def row(name, expected, actual):
        ok = expected == actual
        rows.append({
            "check": name,
            "expected": frac_str(expected) if isinstance(expected, Fraction) else _cell(expected),
            "actual": frac_str(actual) if isinstance(actual, Fraction) else _cell(actual),
            "ok": ok,
        })
        return ok

    ok = row("p(R=true | C=true, A=none)", Fraction(1),
             conditional(switched, ("R", "true"), {"C": "true", "A": "none"}))
    ok &= row("p(R=true | A=force_true)", prior,
              conditional(switched, ("R", "true"), {"A": "force_true"}))
    ok &= row("p(R=true) after do C=true", prior,
              conditional(do_surgery(base, "C", "true"), ("R", "true")))
    ok &= row("switch equivalence, prior 1/5", True,
              switch_equivalence_check(base, prior))
    for degenerate in (Fraction(0), Fraction(1)):
        ok &= row(f"switch equivalence, prior {frac_str(degenerate)}", True,
                  switch_equivalence_check(raincoat_net(degenerate), degenerate))

    rng = random.Random(seed)
    failures = 0
    for _ in range(sweep):
        p = random_prior(rng)
        if not switch_equivalence_check(raincoat_net(p), p):
            failures += 1
    ok &= row(f"switch equivalence, {sweep} random priors", 0, failures)

    header = (("net", "R -> C, C copies R"), ("prior", frac_str(prior)),
              ("seed", str(seed)), ("sweep", str(sweep)))
    columns = ("check", "expected", "actual", "ok")
    summary = (("random_prior_failures", str(failures)),)
    return Report("do operator as a switch variable", header, columns, rows, summary, ok)
