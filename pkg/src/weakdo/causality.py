"""Emergent interventions, identity residues, and the switch-variable engine.

At statement level: an intervention event pairs the full sensorimotor
statement with the content it forces; what is left over once the forced
content is removed is the residue, and stable residues across events act as
identities. Whether an intervention is distinguishable from passive
observation at all depends on the vocabulary.

At variable level: a small exact-probability network engine (enumeration
inference, rational arithmetic throughout) demonstrates that conditioning on
an added three-state switch variable reproduces graph surgery exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    MalformedEventError,
    MismatchError,
    NetDefinitionError,
    ZeroProbabilityEvidenceError,
)
from .lang import Statement

SWITCH_IDLE = "none"
SWITCH_STATES = (SWITCH_IDLE, "force_true", "force_false")


@dataclass(frozen=True)
class InterventionEvent:
    """Full event statement `a` forcing content `c`, with c contained in a."""

    a: Statement
    c: Statement

    def __post_init__(self):
        if self.a.vocab != self.c.vocab:
            raise MismatchError("event statements come from different vocabularies")
        if self.c.mask & ~self.a.mask:
            raise MalformedEventError(
                f"forced content {self.c} is not part of the event {self.a}"
            )


@dataclass(frozen=True)
class Identity:
    """Residue left by a party's interventions; empty means no stable identity."""

    label: str
    residue: Statement

    @property
    def stable(self) -> bool:
        return self.residue.mask != 0


def intervention_residue(event: InterventionEvent) -> Statement:
    """What remains of the event once the forced content is removed."""
    return Statement(event.a.mask & ~event.c.mask, event.a.vocab)


def is_distinguishable(event: InterventionEvent) -> bool:
    """Whether the event differs from passively observing the forced content."""
    return event.a.mask != event.c.mask


def shared_identity(events, label: str) -> Identity:
    """Intersection of the residues of all events; flagged unstable when empty."""
    events = list(events)
    if not events:
        raise MalformedEventError("an identity needs at least one event")
    mask = intervention_residue(events[0]).mask
    vocab = events[0].a.vocab
    for e in events[1:]:
        if e.a.vocab != vocab:
            raise MismatchError("events come from different vocabularies")
        mask &= intervention_residue(e).mask
    return Identity(label, Statement(mask, vocab))


@dataclass(frozen=True)
class Attribution:
    kind: str  # attributed | unattributed | ambiguous
    matches: tuple[Identity, ...]


def attribute_party(observed: Statement, forced: Statement, identities) -> Attribution:
    """Which known identities could have produced the observed intervention.

    An identity matches when its residue is non-empty and sits inside the
    observed residue. One match attributes the event; none means a passive
    observation; several leave it ambiguous.
    """
    if observed.vocab != forced.vocab:
        raise MismatchError("statements come from different vocabularies")
    if forced.mask & ~observed.mask:
        raise MalformedEventError(
            f"forced content {forced} is not part of the observation {observed}"
        )
    residue = observed.mask & ~forced.mask
    matches = tuple(
        i for i in identities if i.stable and i.residue.mask & ~residue == 0
    )
    if len(matches) == 1:
        return Attribution("attributed", matches)
    if not matches:
        return Attribution("unattributed", ())
    return Attribution("ambiguous", matches)


# -- exact discrete networks --------------------------------------------------


@dataclass(frozen=True)
class NetVariable:
    name: str
    domain: tuple[str, ...]
    parents: tuple[str, ...]
    # rows keyed by parent value tuple (in `parents` order), each an exact
    # distribution over `domain`
    cpt: tuple[tuple[tuple[str, ...], tuple[Fraction, ...]], ...]

    def row(self, parent_values: tuple[str, ...]) -> tuple[Fraction, ...]:
        for key, dist in self.cpt:
            if key == parent_values:
                return dist
        raise NetDefinitionError(
            f"{self.name}: no table row for parent values {parent_values}"
        )


@dataclass(frozen=True)
class DiscreteNet:
    variables: tuple[NetVariable, ...]

    def variable(self, name: str) -> NetVariable:
        for v in self.variables:
            if v.name == name:
                return v
        raise NetDefinitionError(f"unknown variable {name!r}")

    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)


def make_net(variables) -> DiscreteNet:
    """Validate and build a network from (name, domain, parents, cpt) specs.

    `cpt` maps each full tuple of parent values to a {value: Fraction} row;
    rows must cover every parent combination exactly once and sum to one
    exactly. The parent graph must be acyclic.
    """
    specs = list(variables)
    names = [s[0] for s in specs]
    if len(set(names)) != len(names):
        raise NetDefinitionError("duplicate variable name")
    domains = {s[0]: tuple(s[1]) for s in specs}
    for name, domain in domains.items():
        if not domain or len(set(domain)) != len(domain):
            raise NetDefinitionError(f"{name}: domain must be non-empty and unique")
    built: list[NetVariable] = []
    for name, domain, parents, cpt in specs:
        parents = tuple(parents)
        for p in parents:
            if p not in domains:
                raise NetDefinitionError(f"{name}: unknown parent {p!r}")
        expected = set(product(*(domains[p] for p in parents)))
        seen = set()
        rows = []
        for key, row in cpt.items() if hasattr(cpt, "items") else cpt:
            key = tuple(key)
            if key not in expected:
                raise NetDefinitionError(f"{name}: unexpected parent values {key}")
            if key in seen:
                raise NetDefinitionError(f"{name}: duplicate row for {key}")
            seen.add(key)
            dist = []
            for value in domains[name]:
                if value not in row:
                    raise NetDefinitionError(f"{name}: row {key} misses value {value!r}")
                p = Fraction(row[value])
                if p < 0:
                    raise NetDefinitionError(f"{name}: negative probability in row {key}")
                dist.append(p)
            if set(row) - set(domains[name]):
                raise NetDefinitionError(f"{name}: row {key} has values outside the domain")
            if sum(dist) != 1:
                raise NetDefinitionError(f"{name}: row {key} does not sum to one")
            rows.append((key, tuple(dist)))
        if seen != expected:
            raise NetDefinitionError(f"{name}: table misses {len(expected - seen)} rows")
        built.append(NetVariable(name, tuple(domains[name]), parents, tuple(rows)))
    net = DiscreteNet(tuple(built))
    _topological_order(net)  # raises on cycles
    return net


def _topological_order(net: DiscreteNet) -> tuple[str, ...]:
    order: list[str] = []
    marked: dict[str, int] = {}

    def visit(name: str):
        state = marked.get(name, 0)
        if state == 1:
            raise NetDefinitionError("parent graph has a cycle")
        if state == 2:
            return
        marked[name] = 1
        for p in net.variable(name).parents:
            visit(p)
        marked[name] = 2
        order.append(name)

    for v in net.variables:
        visit(v.name)
    return tuple(order)


def joint(net: DiscreteNet) -> dict[tuple[str, ...], Fraction]:
    """Exact joint distribution, keyed by value tuples in declaration order."""
    names = net.names()
    index = {n: i for i, n in enumerate(names)}
    out: dict[tuple[str, ...], Fraction] = {}
    for values in product(*(v.domain for v in net.variables)):
        p = Fraction(1)
        for v in net.variables:
            key = tuple(values[index[q]] for q in v.parents)
            p *= v.row(key)[v.domain.index(values[index[v.name]])]
            if p == 0:
                break
        out[values] = p
    return out


def conditional(net: DiscreteNet, query: tuple[str, str], given: dict | None = None) -> Fraction:
    """Exact conditional probability of `query` given a partial assignment."""
    given = dict(given or {})
    names = net.names()
    index = {n: i for i, n in enumerate(names)}
    qvar, qval = query
    if qval not in net.variable(qvar).domain:
        raise NetDefinitionError(f"{qvar}: value {qval!r} outside the domain")
    for var, val in given.items():
        if val not in net.variable(var).domain:
            raise NetDefinitionError(f"{var}: value {val!r} outside the domain")
    num = Fraction(0)
    den = Fraction(0)
    for values, p in joint(net).items():
        if any(values[index[var]] != val for var, val in given.items()):
            continue
        den += p
        if values[index[qvar]] == qval:
            num += p
    if den == 0:
        raise ZeroProbabilityEvidenceError("conditioning on a zero-probability event")
    return num / den


def do_surgery(net: DiscreteNet, var: str, value: str) -> DiscreteNet:
    """Replace a variable's mechanism with a point mass, severing its parents."""
    target = net.variable(var)
    if value not in target.domain:
        raise NetDefinitionError(f"{var}: value {value!r} outside the domain")
    point = ((), tuple(Fraction(1) if v == value else Fraction(0) for v in target.domain))
    replaced = NetVariable(var, target.domain, (), (point,))
    return DiscreteNet(tuple(replaced if v.name == var else v for v in net.variables))


def add_switch(net: DiscreteNet, var: str, switch: str = "A",
               prior: dict | None = None) -> DiscreteNet:
    """Augment a binary variable with a three-state switch parent.

    When the switch is idle the variable keeps its original mechanism; the two
    forcing states pin it to true or false. The switch prior must be strictly
    positive so conditioning on any switch state is well defined.
    """
    target = net.variable(var)
    if tuple(sorted(target.domain)) != ("false", "true"):
        raise NetDefinitionError(f"{var}: switch construction needs a true/false domain")
    if switch in net.names():
        raise NetDefinitionError(f"variable {switch!r} already exists")
    prior = {k: Fraction(v) for k, v in (prior or {}).items()} or {
        s: Fraction(1, 3) for s in SWITCH_STATES
    }
    if set(prior) != set(SWITCH_STATES) or any(p <= 0 for p in prior.values()):
        raise NetDefinitionError("switch prior must be strictly positive over all states")
    if sum(prior.values()) != 1:
        raise NetDefinitionError("switch prior must sum to one")

    switch_var = NetVariable(
        switch, SWITCH_STATES, (),
        (((), tuple(prior[s] for s in SWITCH_STATES)),),
    )
    rows = []
    for key, dist in target.cpt:
        rows.append(((SWITCH_IDLE,) + key, dist))
        for state, forced in (("force_true", "true"), ("force_false", "false")):
            pinned = tuple(Fraction(1) if v == forced else Fraction(0) for v in target.domain)
            rows.append(((state,) + key, pinned))
    rewired = NetVariable(var, target.domain, (switch,) + target.parents, tuple(rows))
    variables = (switch_var,) + tuple(
        rewired if v.name == var else v for v in net.variables
    )
    return DiscreteNet(variables)


def raincoat_net(prior_true: Fraction) -> DiscreteNet:
    """Two-variable observational net: rain R, coat C, with C copying R."""
    prior_true = Fraction(prior_true)
    if not 0 <= prior_true <= 1:
        raise NetDefinitionError("prior must lie in [0, 1]")
    return make_net([
        ("R", ("true", "false"), (), {(): {"true": prior_true, "false": 1 - prior_true}}),
        ("C", ("true", "false"), ("R",), {
            ("true",): {"true": Fraction(1), "false": Fraction(0)},
            ("false",): {"true": Fraction(0), "false": Fraction(1)},
        }),
    ])


def switch_equivalence_check(net2: DiscreteNet, prior_true: Fraction,
                             switch_prior: dict | None = None) -> bool:
    """Whether conditioning on a switch reproduces graph surgery on the base net.

    The base net must be the two-variable observational net (a root copied
    deterministically by its child) with the given root prior. Builds the
    switch-augmented net and compares, exactly, the root's distribution under
    each forced switch state against its post-surgery marginal.
    """
    prior_true = Fraction(prior_true)
    if len(net2.variables) != 2:
        raise NetDefinitionError("base net must have exactly two variables")
    roots = [v for v in net2.variables if not v.parents]
    children = [v for v in net2.variables if v.parents]
    if len(roots) != 1 or len(children) != 1 or children[0].parents != (roots[0].name,):
        raise NetDefinitionError("base net must be a single root with a single child")
    root, child = roots[0], children[0]
    if tuple(sorted(root.domain)) != ("false", "true") or child.domain != root.domain:
        raise NetDefinitionError("base net variables need matching true/false domains")
    for key, dist in child.cpt:
        expected = tuple(Fraction(1) if v == key[0] else Fraction(0) for v in child.domain)
        if dist != expected:
            raise NetDefinitionError("child must copy the root deterministically")
    if root.row(())[root.domain.index("true")] != prior_true:
        raise NetDefinitionError("stated prior disagrees with the base net")

    switched = add_switch(net2, child.name, prior=switch_prior)
    for state, forced in (("force_true", "true"), ("force_false", "false")):
        surgered = do_surgery(net2, child.name, forced)
        for value in root.domain:
            lhs = conditional(switched, (root.name, value), {"A": state})
            rhs = conditional(surgered, (root.name, value))
            if lhs != rhs:
                return False
    return True
