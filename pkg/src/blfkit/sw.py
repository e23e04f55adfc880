"""Exact bookkeeping for gauge-theoretic constraints on declared class data.

Nothing here solves any equations: values, squares and pairings of basic
classes are user-declared integers, and this module applies the standard
sign formulas and inequalities to them, exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import FibrationError, InapplicableError

SIGNS = ("+", "-")


@dataclass(frozen=True)
class ChamberData:
    """Signs of the pairings A.H and A.H' placing a period point in a chamber.

    Both pairings are assumed nonzero; only their signs matter to the
    wall-crossing correction.
    """

    sign_h: str
    sign_h_prime: str

    def __post_init__(self):
        for s in (self.sign_h, self.sign_h_prime):
            if s not in SIGNS:
                raise FibrationError(f"chamber sign must be '+' or '-', got {s!r}")


def wall_crossing(sw_h: int, d: int, chamber: ChamberData) -> int:
    """Value of the invariant after moving to the chamber of H'.

    Same signs: unchanged. Crossing downward (+,-) adds (-1)^(d/2);
    crossing upward (-,+) adds (-1)^(1 + d/2). d is the (even) dimension
    of the moduli space for the class.
    """
    if d < 0 or d % 2:
        raise FibrationError(f"moduli dimension must be even and nonnegative, got {d}")
    if chamber.sign_h == chamber.sign_h_prime:
        return sw_h
    if (chamber.sign_h, chamber.sign_h_prime) == ("+", "-"):
        return sw_h + (-1) ** (d // 2)
    return sw_h + (-1) ** (1 + d // 2)


def adjunction_check(genus: int, square: int, pairing: int) -> bool:
    """Genus bound for an embedded surface against a basic class.

    True iff 2*genus - 2 >= square + |pairing|. Stated only for surfaces
    of positive genus and nonnegative square; anything else is outside the
    inequality's hypotheses and raises.
    """
    if genus <= 0:
        raise InapplicableError(f"adjunction bound needs genus > 0, got {genus}")
    if square < 0:
        raise InapplicableError(f"adjunction bound needs square >= 0, got {square}")
    return 2 * genus - 2 >= square + abs(pairing)


def simple_type_check(square: int, e: int, sigma: int) -> bool:
    """True iff the class square equals 2e + 3*sigma."""
    return square == 2 * e + 3 * sigma


def sw_symmetry(value: int, e: int, sigma: int) -> int:
    """Value on the conjugate class: multiply by (-1)^((e+sigma)/4)."""
    if (e + sigma) % 4:
        raise FibrationError(
            f"e + sigma = {e + sigma} is not divisible by 4; symmetry sign undefined"
        )
    return value * (-1) ** ((e + sigma) // 4)


class SectionVerdict(enum.Enum):
    ADMISSIBLE = "Admissible"
    FORBIDDEN = "Forbidden"


def section_constraint(b_plus: int, sw_nontrivial: bool, k: int) -> SectionVerdict:
    """Whether a section of self-intersection k is ruled out.

    With b+ > 1 and a nontrivial invariant, sections must have negative
    self-intersection, so k >= 0 is Forbidden; every other combination is
    Admissible (b+ = 1 admits sections of any self-intersection).
    """
    if b_plus > 1 and sw_nontrivial and k >= 0:
        return SectionVerdict.FORBIDDEN
    return SectionVerdict.ADMISSIBLE


@dataclass(frozen=True)
class SWClassRecord:
    """Declared basic-class data: square, named pairings, moduli dimension, value."""

    square: int
    pairings: tuple[tuple[str, int], ...] = ()
    d: int = 0
    value: int = 0

    def __post_init__(self):
        if self.d < 0 or self.d % 2:
            raise FibrationError(
                f"moduli dimension must be even and nonnegative, got {self.d}"
            )
        object.__setattr__(self, "pairings", tuple((str(n), int(v)) for n, v in self.pairings))

    def pairing(self, name: str) -> int:
        for n, v in self.pairings:
            if n == name:
                return v
        raise FibrationError(f"no declared pairing with surface {name!r}")

    def crossed(self, chamber: ChamberData) -> "SWClassRecord":
        return SWClassRecord(
            self.square, self.pairings, self.d, wall_crossing(self.value, self.d, chamber)
        )

    def is_simple_type(self, e: int, sigma: int) -> bool:
        return simple_type_check(self.square, e, sigma)


VANISHING_FLAG = "flag: SW == 0 (identically)"


@dataclass(frozen=True)
class PipelineReport:
    lines: tuple[str, ...]
    vanishes: bool

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def sphere_torus_vanishing(torus_square: int = 0, sphere_square: int = 0) -> PipelineReport:
    """Vanishing argument for a square-0 essential sphere meeting a torus once.

    Blow up at the intersection point (the sphere's transform then has
    square -1), blow that transform down; the torus's image picks up the
    square of the meeting number and lands at torus_square + 1. Feeding the
    new torus to adjunction_check yields a violation, which forces the
    invariant to vanish in every chamber; the report ends with the flag
    line exactly when that happens.
    """
    if sphere_square != 0:
        raise InapplicableError(
            f"the argument needs an essential sphere of square 0, got {sphere_square}"
        )
    new_square = torus_square + 1
    lines = [
        f"sphere: square {sphere_square}, meets the torus once",
        "blow up at the intersection point: sphere transform has square -1",
        f"blow down the sphere transform: torus square {torus_square} -> {new_square}",
    ]
    ok = adjunction_check(1, new_square, 0)
    if ok:
        lines.append(f"adjunction (genus 1): 0 >= {new_square} holds; no constraint")
        return PipelineReport(tuple(lines), False)
    lines.append(f"adjunction (genus 1): 0 >= {new_square} fails for every basic class")
    lines.append(VANISHING_FLAG)
    return PipelineReport(tuple(lines), True)
