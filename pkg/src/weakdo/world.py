"""Finite worlds: states, declarative programs, totalities and vocabularies.

A world is a finite set of named states plus a set of declarative programs,
each a boolean function over the states (stored extensionally as a truth
vector). The totality of a state is the set of programs true there. A
vocabulary is an ordered subset of the programs; its order fixes the bit
positions used by statement masks everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MismatchError, WorldSpecError

DEFAULT_MAX_STATES = 64
DEFAULT_MAX_VOCAB = 16


@dataclass(frozen=True)
class Program:
    """A named boolean function over the world's states, one truth entry per state."""

    name: str
    truth: tuple[bool, ...]

    def true_states(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.truth) if t)


@dataclass(frozen=True)
class World:
    """Ordered states and extensionally-deduplicated programs."""

    states: tuple[str, ...]
    programs: tuple[Program, ...]
    # maps every declared name (including collapsed duplicates) onto the
    # canonical program index; two names with equal truth vectors denote
    # the same function
    aliases: dict[str, int] = field(compare=False, hash=False, default_factory=dict)

    def state_index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise WorldSpecError(f"unknown state {state!r}") from None

    def program(self, name: str) -> Program:
        try:
            return self.programs[self.aliases[name]]
        except KeyError:
            raise WorldSpecError(f"unknown program {name!r}") from None


@dataclass(frozen=True)
class Totality:
    """All programs true at one state."""

    world: World
    state: str
    members: frozenset[str]


@dataclass(frozen=True)
class Vocabulary:
    """Ordered subset of a world's programs; index order defines mask bits."""

    world: World
    names: tuple[str, ...]

    @property
    def width(self) -> int:
        return len(self.names)

    def bit(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise WorldSpecError(f"program {name!r} not in vocabulary") from None

    def mask_of(self, names) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.bit(name)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in range(self.width) if mask >> i & 1)

    def render(self, mask: int) -> str:
        return "{" + ",".join(self.names_of(mask)) + "}"


def build_world(states, programs, max_states: int = DEFAULT_MAX_STATES) -> World:
    """Build a world from state names and per-program truth assignments.

    `programs` maps each program name to the collection of states where it is
    true. Programs with identical truth vectors collapse to the first
    occurrence; later names become aliases of it.
    """
    states = tuple(states)
    if not states:
        raise WorldSpecError("a world needs at least one state")
    if len(set(states)) != len(states):
        raise WorldSpecError("duplicate state name")
    if len(states) > max_states:
        raise WorldSpecError(f"{len(states)} states exceeds the bound {max_states}")
    index = {s: i for i, s in enumerate(states)}

    kept: list[Program] = []
    aliases: dict[str, int] = {}
    by_truth: dict[tuple[bool, ...], int] = {}
    for name, true_at in programs.items() if hasattr(programs, "items") else programs:
        if name in aliases:
            raise WorldSpecError(f"duplicate program name {name!r}")
        truth = [False] * len(states)
        for s in true_at:
            if s not in index:
                raise WorldSpecError(f"program {name!r} references unknown state {s!r}")
            truth[index[s]] = True
        vec = tuple(truth)
        if vec in by_truth:
            aliases[name] = by_truth[vec]
        else:
            by_truth[vec] = len(kept)
            aliases[name] = len(kept)
            kept.append(Program(name, vec))
    return World(states, tuple(kept), aliases)


def totality(world: World, state: str) -> Totality:
    """The set of programs true at `state`."""
    i = world.state_index(state)
    return Totality(world, state, frozenset(p.name for p in world.programs if p.truth[i]))


def make_vocabulary(world: World, names, max_vocab: int = DEFAULT_MAX_VOCAB) -> Vocabulary:
    """Fix bit positions for the given programs, in the given order.

    Rejects programs that are true in no state: they belong to no totality,
    so no statement could ever use them.
    """
    names = tuple(names)
    if len(set(names)) != len(names):
        raise WorldSpecError("duplicate name in vocabulary")
    if len(names) > max_vocab:
        raise WorldSpecError(
            f"vocabulary of {len(names)} exceeds the bound {max_vocab}; "
            "pass a larger max_vocab explicitly to override"
        )
    canonical = []
    for name in names:
        prog = world.program(name)
        if not any(prog.truth):
            raise WorldSpecError(f"program {name!r} is true in no state")
        canonical.append(prog.name)
    if len(set(canonical)) != len(canonical):
        raise WorldSpecError("two vocabulary names denote the same program")
    return Vocabulary(world, tuple(canonical))


def projections(world: World, vocab: Vocabulary) -> frozenset[int]:
    """Distinct per-state restrictions of the totalities to the vocabulary.

    These masks are the membership oracle for the language: a statement is
    valid exactly when contained in one of them.
    """
    if vocab.world != world:
        raise MismatchError("vocabulary was not built from this world")
    bits = {p.name: i for i, p in enumerate(world.programs)}
    out = set()
    for si in range(len(world.states)):
        mask = 0
        for vi, name in enumerate(vocab.names):
            if world.programs[bits[name]].truth[si]:
                mask |= 1 << vi
        out.add(mask)
    return frozenset(out)
