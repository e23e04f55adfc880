"""The combinatorial model of a broken fibration.

A fibration over the sphere (or torus) is stored as a directed chain: a
lower Lefschetz piece, an ordered list of round cobordisms, and a higher
Lefschetz piece. Crossing a nonseparating cobordism toward the higher side
adds one handle to the fiber; a separating one merges two components.
Curve data (Lefschetz cycles and round-handle classes) is written in the
generators of the top fiber, into which every intermediate fiber includes
by zero-padding stabilization.

Constructors enforce only shape-level sanity (chirality signs, nonnegative
counters). Semantic coherence is the job of validate(), which returns a
report instead of raising, so structurally parseable but inconsistent data
can still be examined.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .errors import FibrationError, UnsupportedError, WordError
from .exact import IntMatrix, is_symplectic
from .surface import (
    CurveWord,
    MappingClassRep,
    Parity,
    abelianize_word,
    classify_round_parity,
    compose_monodromy,
)


class Base(enum.Enum):
    SPHERE = "sphere"
    TORUS = "torus"


@dataclass(frozen=True)
class SurfaceModel:
    """Closed oriented surface, possibly disconnected: one genus per component."""

    components: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(int(g) for g in self.components)
        if not comps or any(g < 0 for g in comps):
            raise FibrationError(f"bad component genera {self.components}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def connected(cls, genus: int) -> "SurfaceModel":
        return cls((genus,))

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def total_genus(self) -> int:
        return sum(self.components)

    def euler(self) -> int:
        return sum(2 - 2 * g for g in self.components)


@dataclass(frozen=True)
class LefschetzPiece:
    """Fibration over a disk: fiber plus the ordered vanishing-cycle list.

    Each cycle is (word, chirality); chirality -1 marks a negative critical
    point. declared_monodromy, when present, overrides the composed twists
    as the boundary monodromy of the piece (input data, never re-derived).
    """

    fiber: SurfaceModel
    cycles: tuple[tuple[CurveWord, int], ...] = ()
    declared_monodromy: IntMatrix | None = None

    def __post_init__(self):
        cycles = tuple((w, int(c)) for w, c in self.cycles)
        for w, c in cycles:
            if c not in (1, -1):
                raise FibrationError(f"cycle chirality must be +1 or -1, got {c}")
            if not isinstance(w, CurveWord):
                raise FibrationError(f"cycle word must be a CurveWord, got {type(w).__name__}")
        object.__setattr__(self, "cycles", cycles)

    @classmethod
    def trivial(cls, genus: int) -> "LefschetzPiece":
        return cls(SurfaceModel.connected(genus))

    @property
    def genus(self) -> int:
        return self.fiber.total_genus


@dataclass(frozen=True)
class RoundCobordism:
    """One round handle joining adjacent fiber levels.

    gamma is the attaching circle on the fiber just above the cobordism,
    written in top-fiber generators. The gluing tag is opaque data (0 means
    the standard gluing); it is recorded and serialized, never interpreted.
    """

    gamma: CurveWord
    parity: Parity = Parity.AUTO
    framing: int = 0
    separating: bool = False
    gluing: int = 0

    def __post_init__(self):
        if self.parity is Parity.NOT_PRESERVED:
            raise FibrationError("NOT_PRESERVED is a classification result, not a declarable parity")
        if not isinstance(self.gamma, CurveWord):
            raise FibrationError(f"gamma must be a CurveWord, got {type(self.gamma).__name__}")


@dataclass(frozen=True)
class Declared:
    """Metadata asserted by whoever built the record, not derived."""

    sigma: int | None = None
    b_plus: int | None = None
    parity: str | None = None  # parity of the intersection form: "even" | "odd"
    label: str | None = None

    def __post_init__(self):
        if self.parity not in (None, "even", "odd"):
            raise FibrationError(f"form parity must be 'even' or 'odd', got {self.parity!r}")


@dataclass(frozen=True)
class BrokenFibration:
    base: Base = Base.SPHERE
    lower: LefschetzPiece = field(default_factory=lambda: LefschetzPiece.trivial(0))
    cobordisms: tuple[RoundCobordism, ...] = ()
    higher: LefschetzPiece = field(default_factory=lambda: LefschetzPiece.trivial(0))
    sections: tuple[int, ...] = ()
    declared: Declared = Declared()
    blowups: int = 0  # exceptional spheres introduced by negative-node trades
    basepoints: int = 0  # pencil base points created by blowing down (-1)-sections
    notes: tuple[str, ...] = ()  # opaque provenance tags (e.g. gluing maps of a sum)

    def __post_init__(self):
        object.__setattr__(self, "sections", tuple(int(s) for s in self.sections))
        object.__setattr__(self, "cobordisms", tuple(self.cobordisms))
        object.__setattr__(self, "notes", tuple(str(n) for n in self.notes))
        if self.blowups < 0 or self.basepoints < 0:
            raise FibrationError("blowups and basepoints must be nonnegative")

    @property
    def cycle_count(self) -> int:
        return len(self.lower.cycles) + len(self.higher.cycles)

    @property
    def near_symplectic(self) -> bool:
        # a section positively transverse to the fibers is what the
        # near-symplectic constructions need; we only record its existence
        return bool(self.sections)

    @property
    def is_simplified(self) -> bool:
        return (
            len(self.cobordisms) == 1
            and not self.lower.cycles
            and self.lower.fiber.is_connected
            and self.higher.fiber.is_connected
        )


def simplified_blf(
    higher_genus: int,
    cycles,
    gamma: CurveWord,
    framing: int = 0,
    parity: Parity = Parity.AUTO,
    sections=(),
    declared: Declared = Declared(),
) -> BrokenFibration:
    """One round cobordism, all cycles on the higher side, connected fibers."""
    if higher_genus < 1:
        raise FibrationError("a simplified fibration needs higher-side genus >= 1")
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(higher_genus - 1),
        cobordisms=(RoundCobordism(gamma, parity, framing),),
        higher=LefschetzPiece(SurfaceModel.connected(higher_genus), tuple(cycles)),
        sections=tuple(sections),
        declared=declared,
    )


def global_monodromy(piece: LefschetzPiece) -> MappingClassRep:
    """Boundary monodromy of the piece on H1 of its fiber.

    Uses the declared matrix verbatim when present, otherwise composes the
    transvections of the cycle list in order.
    """
    if not piece.fiber.is_connected:
        raise UnsupportedError("global monodromy of a disconnected fiber is not supported")
    g = piece.genus
    if piece.declared_monodromy is not None:
        m = piece.declared_monodromy
        if m.nrows != 2 * g or m.ncols != 2 * g:
            raise FibrationError(
                f"declared monodromy is {m.nrows}x{m.ncols}, fiber genus {g} needs {2 * g}x{2 * g}"
            )
        return MappingClassRep(m, (), g)
    twists = []
    for word, chirality in piece.cycles:
        twists.append((abelianize_word(word, g), chirality))
    return compose_monodromy(twists, g)


@dataclass(frozen=True)
class Violation:
    code: str
    where: str
    message: str

    def render(self) -> str:
        return f"{self.where}: {self.code}: {self.message}"


def _check_words(piece: LefschetzPiece, where: str, top_genus: int, out: list[Violation]):
    # all words live in top-fiber coordinates, so the range bound is the
    # total genus of the top fiber, not of the piece's own fiber
    for i, (word, _) in enumerate(piece.cycles):
        if word.needed_genus() > top_genus:
            out.append(
                Violation(
                    "generator-range",
                    f"{where}.cycles[{i}]",
                    f"word {word.to_text()!r} uses generator index {word.needed_genus()}, "
                    f"top fiber has total genus {top_genus}",
                )
            )
    g = piece.fiber.total_genus
    m = piece.declared_monodromy
    if m is not None:
        if m.nrows != 2 * g or m.ncols != 2 * g:
            out.append(
                Violation(
                    "monodromy-shape",
                    where,
                    f"declared monodromy is {m.nrows}x{m.ncols}, expected {2 * g}x{2 * g}",
                )
            )
        elif not is_symplectic(m, g):
            out.append(
                Violation("monodromy-shape", where, "declared monodromy is not symplectic")
            )


def validate(f: BrokenFibration) -> tuple[Violation, ...]:
    """Semantic coherence report; empty means the record is consistent.

    Checks, in order: genus and component bookkeeping across the chain,
    generator ranges and declared monodromies of both pieces, then per
    cobordism the separating flag against [gamma] and the parity against
    the higher piece's monodromy. Parity of a separating cobordism is
    homologically invisible ([gamma] = 0), so only declared values are kept
    there and no computed check is attempted. Pure: never mutates, never
    raises on bad data that parsed.
    """
    out: list[Violation] = []
    nonsep = sum(1 for c in f.cobordisms if not c.separating)
    sep = sum(1 for c in f.cobordisms if c.separating)
    if f.higher.fiber.total_genus != f.lower.fiber.total_genus + nonsep:
        out.append(
            Violation(
                "genus",
                "chain",
                f"higher total genus {f.higher.fiber.total_genus} != lower total genus "
                f"{f.lower.fiber.total_genus} + {nonsep} nonseparating cobordisms",
            )
        )
    if len(f.lower.fiber.components) != len(f.higher.fiber.components) + sep:
        out.append(
            Violation(
                "components",
                "chain",
                f"lower fiber has {len(f.lower.fiber.components)} components, higher has "
                f"{len(f.higher.fiber.components)} with {sep} separating cobordisms",
            )
        )
    top_genus = f.higher.fiber.total_genus
    _check_words(f.lower, "lower", top_genus, out)
    _check_words(f.higher, "higher", top_genus, out)

    monodromy = None
    monodromy_failed = False
    for i, cob in enumerate(f.cobordisms):
        where = f"round[{i}]"
        if cob.gamma.needed_genus() > top_genus:
            out.append(
                Violation(
                    "generator-range",
                    where,
                    f"gamma {cob.gamma.to_text()!r} does not fit on the top fiber "
                    f"(total genus {top_genus})",
                )
            )
            continue
        gamma_class = abelianize_word(cob.gamma, top_genus)
        is_null = all(x == 0 for x in gamma_class)
        if is_null != cob.separating:
            out.append(
                Violation(
                    "separating",
                    where,
                    f"separating flag is {cob.separating} but [gamma] "
                    f"{'vanishes' if is_null else 'is nonzero'}",
                )
            )
            continue
        if cob.separating:
            continue  # parity undetectable from homology; declared value stands
        if monodromy is None and not monodromy_failed:
            if not f.higher.fiber.is_connected:
                out.append(
                    Violation(
                        "parity",
                        where,
                        "cannot classify parity: higher fiber is disconnected",
                    )
                )
                monodromy_failed = True
                continue
            try:
                monodromy = global_monodromy(f.higher)
            except (WordError, FibrationError) as e:
                out.append(Violation("parity", where, f"cannot classify parity: {e}"))
                monodromy_failed = True
                continue
        if monodromy_failed:
            continue
        computed = classify_round_parity(monodromy, gamma_class, top_genus)
        if computed is Parity.NOT_PRESERVED:
            out.append(
                Violation(
                    "parity",
                    where,
                    f"monodromy does not preserve the class of {cob.gamma.to_text()!r}",
                )
            )
        elif cob.parity is not Parity.AUTO and cob.parity is not computed:
            out.append(
                Violation(
                    "parity-mismatch",
                    where,
                    f"declared {cob.parity.value}, computed {computed.value}",
                )
            )
    return tuple(out)


def resolve_parity(f: BrokenFibration, index: int) -> Parity:
    """Effective parity of cobordism `index`: computed when possible, else declared."""
    if not 0 <= index < len(f.cobordisms):
        raise FibrationError(f"no round cobordism at index {index}")
    cob = f.cobordisms[index]
    top_genus = f.higher.fiber.total_genus
    if not cob.separating and f.higher.fiber.is_connected:
        gamma_class = abelianize_word(cob.gamma, top_genus)
        if any(gamma_class):
            return classify_round_parity(global_monodromy(f.higher), gamma_class, top_genus)
    return cob.parity


PARITY_DISPLAY = {
    Parity.UNTWISTED: "Untwisted",
    Parity.TWISTED: "Twisted",
    Parity.NOT_PRESERVED: "NotPreserved",
    Parity.AUTO: "Auto",
}


@dataclass(frozen=True)
class HandlePairDescriptor:
    """A round k-handle as a k-handle / (k+1)-handle pair.

    The (k+1)-handle always runs over the k-handle geometrically twice;
    the algebraic count is 0 for untwisted and 2 for twisted round handles.
    A round 2-handle is the round 1-handle turned upside down, so it gets
    the dual indices.
    """

    indices: tuple[int, int]
    geometric: int
    algebraic: int


def round_handle_decomposition(parity: Parity, index: int = 1) -> HandlePairDescriptor:
    if index not in (1, 2):
        raise FibrationError(f"round handles here are 1- or 2-handles, got index {index}")
    if parity is Parity.UNTWISTED:
        algebraic = 0
    elif parity is Parity.TWISTED:
        algebraic = 2
    else:
        raise FibrationError(f"parity must be resolved to untwisted/twisted, got {parity.value}")
    return HandlePairDescriptor((index, index + 1), 2, algebraic)


def with_declared(f: BrokenFibration, **kwargs) -> BrokenFibration:
    return replace(f, declared=replace(f.declared, **kwargs))
