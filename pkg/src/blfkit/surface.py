"""Curves on surfaces and the homological mapping class action.

Curves are stored as free-group words in the standard generators of the
fiber (the richer datum); their homology classes are derived by exponent
sums. Mapping classes act through Sp(2g, Z): a positive Dehn twist along a
class c is the transvection x -> x + <x, c> c.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DimensionError, FibrationError, WordError
from .exact import IntMatrix, pairing
from .words import (
    cyclic_reduce,
    exponent_sums,
    format_surface_letters,
    invert,
    parse_surface_tokens,
)


class Parity(enum.Enum):
    """Round-handle parity; AUTO is only meaningful as a declared value."""

    UNTWISTED = "untwisted"
    TWISTED = "twisted"
    NOT_PRESERVED = "not-preserved"
    AUTO = "auto"


@dataclass(frozen=True)
class CurveWord:
    """A free-homotopy class of loops, stored cyclically reduced."""

    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", cyclic_reduce(self.letters))

    @classmethod
    def parse(cls, text: str) -> "CurveWord":
        return cls(parse_surface_tokens(text))

    @classmethod
    def from_letters(cls, letters) -> "CurveWord":
        return cls(tuple(int(x) for x in letters))

    def to_text(self) -> str:
        return format_surface_letters(self.letters)

    def inverse(self) -> "CurveWord":
        return CurveWord(invert(self.letters))

    def shift(self, handles: int) -> "CurveWord":
        # include into a larger surface by reindexing past `handles` new handles
        if handles == 0:
            return self
        off = 2 * handles
        return CurveWord(tuple(x + off if x > 0 else x - off for x in self.letters))

    def needed_genus(self) -> int:
        if not self.letters:
            return 0
        return (max(abs(x) for x in self.letters) + 1) // 2

    def is_empty(self) -> bool:
        return not self.letters


def abelianize_word(word: CurveWord, genus: int) -> tuple[int, ...]:
    """Exponent-sum vector of the word in the interleaved basis."""
    if word.needed_genus() > genus:
        raise WordError(
            f"word {word.to_text()!r} needs genus {word.needed_genus()}, "
            f"surface has genus {genus}"
        )
    return exponent_sums(word.letters, 2 * genus)


@dataclass(frozen=True)
class MappingClassRep:
    """Symplectic matrix plus the signed twist list that produced it."""

    matrix: IntMatrix
    twists: tuple[tuple[tuple[int, ...], int], ...]
    genus: int

    @classmethod
    def identity(cls, genus: int) -> "MappingClassRep":
        return cls(IntMatrix.identity(2 * genus), (), genus)


def transvection_matrix(gamma, genus: int, sign: int = 1) -> IntMatrix:
    gamma = tuple(int(x) for x in gamma)
    if len(gamma) != 2 * genus:
        raise DimensionError(
            f"class has length {len(gamma)}, genus {genus} needs {2 * genus}"
        )
    if sign not in (1, -1):
        raise FibrationError(f"twist sign must be +1 or -1, got {sign}")
    n = 2 * genus
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        coef = sign * pairing(e, gamma, genus)
        cols.append(tuple(e[i] + coef * gamma[i] for i in range(n)))
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    m = IntMatrix.from_rows(rows)
    return m if m.rows else IntMatrix((), 0)


def dehn_twist_action(gamma, genus: int, sign: int = 1) -> MappingClassRep:
    gamma = tuple(int(x) for x in gamma)
    return MappingClassRep(transvection_matrix(gamma, genus, sign), ((gamma, sign),), genus)


def compose_monodromy(twists, genus: int) -> MappingClassRep:
    """Product of transvections in list order.

    The result is the matrix product T(c_1) * T(c_2) * ... * T(c_n); acting
    on column vectors, the last-listed twist hits a class first. This is the
    reading under which a relation in the mapping class group, written as a
    word in its twists, maps to the identity matrix.
    """
    m = IntMatrix.identity(2 * genus)
    recorded = []
    for gamma, sign in twists:
        gamma = tuple(int(x) for x in gamma)
        m = m * transvection_matrix(gamma, genus, sign)
        recorded.append((gamma, sign))
    return MappingClassRep(m, tuple(recorded), genus)


def classify_round_parity(monodromy, gamma, genus: int) -> Parity:
    """Untwisted if the monodromy fixes gamma, twisted if it reverses it."""
    matrix = monodromy.matrix if isinstance(monodromy, MappingClassRep) else monodromy
    gamma = tuple(int(x) for x in gamma)
    if len(gamma) != 2 * genus or matrix.ncols != 2 * genus:
        raise DimensionError(
            f"genus {genus}: class length {len(gamma)}, matrix {matrix.nrows}x{matrix.ncols}"
        )
    if all(x == 0 for x in gamma):
        raise FibrationError("round-handle class is zero: not a curve class")
    image = matrix.apply(gamma)
    if image == gamma:
        return Parity.UNTWISTED
    if image == tuple(-x for x in gamma):
        return Parity.TWISTED
    return Parity.NOT_PRESERVED


def stabilize_vector(vec, genus_from: int, genus_to: int) -> tuple[int, ...]:
    """Image of a class under the inclusion of a genus_from subsurface."""
    vec = tuple(int(x) for x in vec)
    if len(vec) != 2 * genus_from:
        raise DimensionError(
            f"vector has length {len(vec)}, genus {genus_from} needs {2 * genus_from}"
        )
    if genus_to < genus_from:
        raise DimensionError(
            f"cannot stabilize genus {genus_from} down to {genus_to}"
        )
    return vec + (0,) * (2 * (genus_to - genus_from))
