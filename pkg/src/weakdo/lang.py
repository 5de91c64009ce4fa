"""Statements, validity, extensions, weakness and the abstraction order.

A statement is a subset of the vocabulary, stored as a bitmask. It is valid
when some state's projection contains it. The extension of a statement is the
set of valid statements containing it; weakness is the size of that set.
Weaker statements sit higher in the abstraction lattice.

Construction materialises validity and weakness tables for the whole
2**width lattice (the vocabulary bound keeps this affordable), so validity
and weakness queries are O(1) afterwards. Weakness is also computable by
inclusion-exclusion over the distinct projections; the two routes must agree
and the test suite holds them to that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidStatementError, MismatchError
from .world import Vocabulary, projections as world_projections

_MAX_WIDTH = 24  # 2**24 table entries; hard stop well past any sensible use


@dataclass(frozen=True)
class Statement:
    """A subset of the vocabulary's programs, as a bitmask over its bit order."""

    mask: int
    vocab: Vocabulary

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.vocab.width:
            raise InvalidStatementError(
                f"mask {self.mask:#x} has bits outside the vocabulary width {self.vocab.width}"
            )

    def names(self) -> tuple[str, ...]:
        return self.vocab.names_of(self.mask)

    def __str__(self) -> str:
        return self.vocab.render(self.mask)


class Language:
    """A vocabulary together with its projections and cached lattice tables."""

    def __init__(self, vocab: Vocabulary):
        world = vocab.world
        if vocab.width > _MAX_WIDTH:
            raise InvalidStatementError(
                f"vocabulary width {vocab.width} too large to materialise the lattice"
            )
        self.vocabulary = vocab
        self.projection_masks: tuple[int, ...] = tuple(sorted(world_projections(world, vocab)))
        size = 1 << vocab.width
        valid = bytearray(size)
        for p in self.projection_masks:
            valid[p] = 1
        for i in range(vocab.width):
            bit = 1 << i
            for mask in range(size):
                if mask & bit and valid[mask]:
                    valid[mask ^ bit] = 1
        counts = [int(v) for v in valid]
        for i in range(vocab.width):
            bit = 1 << i
            for mask in range(size):
                if not mask & bit:
                    counts[mask] += counts[mask | bit]
        self._valid = valid
        self._weakness = counts  # valid supersets of each mask, any mask
        self.size = sum(valid)  # |L|
        self._extensions: dict[int, frozenset[int]] = {}

    # -- mask-level interface (hot paths) ------------------------------------

    def check(self, statement: Statement) -> int:
        if statement.vocab != self.vocabulary:
            raise MismatchError("statement belongs to a different vocabulary")
        return statement.mask

    def valid_mask(self, mask: int) -> bool:
        return bool(self._valid[mask])

    def require_valid(self, statement: Statement) -> int:
        mask = self.check(statement)
        if not self._valid[mask]:
            raise InvalidStatementError(f"{statement} is not contained in any totality")
        return mask

    def weakness_of_mask(self, mask: int) -> int:
        return self._weakness[mask]

    def extension_masks(self, mask: int) -> frozenset[int]:
        cached = self._extensions.get(mask)
        if cached is not None:
            return cached
        out = []
        comp = ((1 << self.vocabulary.width) - 1) & ~mask
        sub = comp
        while True:
            m = mask | sub
            if self._valid[m]:
                out.append(m)
            if sub == 0:
                break
            sub = (sub - 1) & comp
        result = frozenset(out)
        self._extensions[mask] = result
        return result

    def valid_masks(self) -> tuple[int, ...]:
        return tuple(m for m in range(1 << self.vocabulary.width) if self._valid[m])

    def statement(self, mask: int) -> Statement:
        return Statement(mask, self.vocabulary)

    def statement_of(self, names) -> Statement:
        return Statement(self.vocabulary.mask_of(names), self.vocabulary)

    def statements(self) -> tuple[Statement, ...]:
        return tuple(self.statement(m) for m in self.valid_masks())

    @property
    def projections(self) -> tuple[Statement, ...]:
        return tuple(self.statement(m) for m in self.projection_masks)

    def render(self, mask: int) -> str:
        return self.vocabulary.render(mask)


def is_valid(lang: Language, statement: Statement) -> bool:
    """Whether some projection contains the statement."""
    return lang.valid_mask(lang.check(statement))


def is_true(statement: Statement, tot) -> bool:
    """Whether every program of the statement belongs to the totality."""
    if statement.vocab.world != tot.world:
        raise MismatchError("statement and totality come from different worlds")
    return all(name in tot.members for name in statement.names())


def extension(lang: Language, statement: Statement) -> frozenset[Statement]:
    """All valid statements containing `statement`."""
    mask = lang.require_valid(statement)
    return frozenset(lang.statement(m) for m in lang.extension_masks(mask))


def extension_of_set(lang: Language, statements) -> frozenset[Statement]:
    """Union of the extensions of the given statements (empty for an empty set)."""
    masks = set()
    for s in statements:
        masks |= lang.extension_masks(lang.require_valid(s))
    return frozenset(lang.statement(m) for m in masks)


def weakness(lang: Language, statement: Statement) -> int:
    """Number of valid statements containing `statement` (its extension size)."""
    return lang.weakness_of_mask(lang.require_valid(statement))


def weakness_inclusion_exclusion(lang: Language, statement: Statement) -> int:
    """Weakness by alternating sums over the projections containing the statement.

    Counts the union of intervals [statement, projection] without touching the
    lattice tables; serves as the independent cross-check of `weakness`.
    """
    a = lang.require_valid(statement)
    ups = [p for p in lang.projection_masks if a & ~p == 0]
    maximal = [p for p in ups if not any(p != q and p & ~q == 0 for q in ups)]
    base = a.bit_count()
    total = 0
    for r in range(1, len(maximal) + 1):
        sign = 1 if r % 2 else -1
        for combo in combinations(maximal, r):
            inter = combo[0]
            for p in combo[1:]:
                inter &= p
            total += sign * (1 << (inter.bit_count() - base))
    return total


def project_statement(statement: Statement, vocab: Vocabulary) -> Statement:
    """Restrict a statement to another vocabulary over the same world.

    Programs absent from the target vocabulary drop out; this is how a
    narrower vocabulary can collapse an intervention into a plain observation.
    """
    if statement.vocab.world != vocab.world:
        raise MismatchError("target vocabulary belongs to a different world")
    mask = 0
    for name in statement.names():
        if name in vocab.names:
            mask |= 1 << vocab.bit(name)
    return Statement(mask, vocab)


def is_higher_level(lang: Language, candidate: Statement, reference: Statement) -> bool:
    """Whether `candidate` sits strictly above `reference` in the abstraction order.

    Equivalent to the extension of `reference` being a strict subset of the
    extension of `candidate`; for valid statements this reduces to strict
    reversed containment of the masks.
    """
    c = lang.require_valid(candidate)
    a = lang.require_valid(reference)
    return c != a and c & ~a == 0
