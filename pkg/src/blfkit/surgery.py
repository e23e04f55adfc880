"""Surgery operations on fibration records.

Each operation is pure: it takes fibration records and returns a new one.
Declared metadata (sigma, b_plus, form parity) is propagated only where
the corresponding topological statement is additive; everything else is
dropped rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import FibrationError, UnsupportedError
from .exact import IntMatrix
from .fibration import (
    Base,
    BrokenFibration,
    Declared,
    LefschetzPiece,
    Parity,
    RoundCobordism,
    SurfaceModel,
    global_monodromy,
    validate,
)
from .invariants import surface_relation
from .surface import CurveWord, abelianize_word


def _require_directed(f: BrokenFibration, op: str):
    bad = [v for v in validate(f) if v.code in ("genus", "components")]
    if bad:
        raise UnsupportedError(f"{op}: input chain is not directed ({bad[0].message})")


def _require_connected(f: BrokenFibration, op: str):
    if not (f.lower.fiber.is_connected and f.higher.fiber.is_connected):
        raise UnsupportedError(f"{op}: connected fibers required")


def push_to_higher_side(f: BrokenFibration) -> BrokenFibration:
    """Slide every lower-side Lefschetz cycle onto the higher fiber.

    Words are already written in top-fiber generators, so the inclusion is
    the identity on letters; the moved cycles precede the higher piece's
    own cycles, preserving order. Framings, sections and e are unchanged.
    """
    _require_directed(f, "push")
    _require_connected(f, "push")
    if not f.lower.cycles:
        return f
    # the moved cycles change the higher piece's cycle list, so any declared
    # boundary monodromy for the old list is stale
    higher = replace(
        f.higher,
        cycles=f.lower.cycles + f.higher.cycles,
        declared_monodromy=None,
    )
    return replace(f, lower=replace(f.lower, cycles=()), higher=higher)


def _merged_cycles(f: BrokenFibration):
    # all cycles of an unbroken (no-cobordism) input, lower side first
    return f.lower.cycles + f.higher.cycles


def _require_unbroken_summand(f: BrokenFibration, op: str):
    if f.base is not Base.SPHERE:
        raise UnsupportedError(f"{op}: sphere base required")
    if f.cobordisms:
        raise UnsupportedError(
            f"{op}: summands with round cobordisms of their own are outside "
            "the directed chain model"
        )
    _require_connected(f, op)
    if f.lower.genus != f.higher.genus:
        raise UnsupportedError(f"{op}: summand pieces disagree on fiber genus")
    if f.basepoints:
        raise UnsupportedError(f"{op}: blow the pencil base points up first")


def _combined_declared_monodromy(f: BrokenFibration) -> IntMatrix | None:
    # only safe to carry over when the cycles cannot perturb it
    if f.higher.declared_monodromy is not None and not f.lower.cycles:
        return f.higher.declared_monodromy
    return None


@dataclass(frozen=True)
class BrokenFiberSumSpec:
    """Inputs of a broken fiber sum.

    gammas are the round-handle classes on the larger fiber, one per unit
    of genus difference; phi1/phi2 are opaque gluing tags that are recorded
    in the output's notes and never interpreted.
    """

    left: BrokenFibration
    right: BrokenFibration
    gammas: tuple[CurveWord, ...] = ()
    phi1: str = ""
    phi2: str = ""


def broken_fiber_sum(spec: BrokenFiberSumSpec) -> BrokenFibration:
    """Fiber sum along fibers of genus g1 >= g2, bridged by g1-g2 round handles.

    The larger-genus summand becomes the higher side with all its cycles,
    the smaller the lower side; each gamma_i yields one elementary
    untwisted-by-construction round cobordism with fiber framing 0.
    Sections splice pairwise (self-intersections add); declared sigma adds.
    """
    left, right = spec.left, spec.right
    _require_unbroken_summand(left, "broken_fiber_sum")
    _require_unbroken_summand(right, "broken_fiber_sum")
    if left.higher.genus < right.higher.genus:
        left, right = right, left
    g1, g2 = left.higher.genus, right.higher.genus
    k = g1 - g2
    if len(spec.gammas) != k:
        raise FibrationError(
            f"genus difference is {k}, got {len(spec.gammas)} round-handle classes"
        )
    cobordisms = []
    for gamma in spec.gammas:
        if gamma.needed_genus() > g1:
            raise FibrationError(
                f"gamma {gamma.to_text()!r} does not fit on the genus-{g1} fiber"
            )
        if not any(abelianize_word(gamma, g1)):
            raise FibrationError(
                f"gamma {gamma.to_text()!r} is separating; fiber-sum round handles "
                "must be nonseparating"
            )
        cobordisms.append(RoundCobordism(gamma, Parity.AUTO, framing=0))
    declared = Declared(
        sigma=(
            left.declared.sigma + right.declared.sigma
            if left.declared.sigma is not None and right.declared.sigma is not None
            else None
        )
    )
    notes = []
    if spec.phi1:
        notes.append(f"phi1={spec.phi1}")
    if spec.phi2:
        notes.append(f"phi2={spec.phi2}")
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece(
            SurfaceModel.connected(g2),
            _merged_cycles(right),
            _combined_declared_monodromy(right),
        ),
        cobordisms=tuple(cobordisms),
        higher=LefschetzPiece(
            SurfaceModel.connected(g1),
            _merged_cycles(left),
            _combined_declared_monodromy(left),
        ),
        sections=tuple(s1 + s2 for s1 in left.sections for s2 in right.sections),
        declared=declared,
        blowups=left.blowups + right.blowups,
        notes=tuple(notes),
    )


def _shift_cycles(cycles, handles):
    return tuple((w.shift(handles), c) for w, c in cycles)


def connected_sum_model(f1: BrokenFibration, f2: BrokenFibration) -> BrokenFibration:
    """Connected sum realized by one new separating round cobordism.

    The higher fibers connect-sum into one fiber (second summand's handles
    reindexed after the first's); below the new neck circle the chain is
    the disjoint union of the two input chains. e drops by 2, sigma, b+
    and section lists add, and the form is even only if both were.
    """
    for f, name in ((f1, "first"), (f2, "second")):
        if f.base is not Base.SPHERE:
            raise UnsupportedError(f"connected_sum_model: {name} summand not over the sphere")
        if not f.higher.fiber.is_connected:
            raise UnsupportedError(
                f"connected_sum_model: {name} summand has a disconnected higher fiber"
            )
        if f.basepoints:
            raise UnsupportedError("connected_sum_model: blow the pencil base points up first")
    g1 = f1.higher.genus
    g2 = f2.higher.genus
    neck = CurveWord.from_letters(surface_relation(g1))
    higher_monodromy = None
    if f1.higher.declared_monodromy is not None or f2.higher.declared_monodromy is not None:
        higher_monodromy = IntMatrix.block_diag(
            global_monodromy(f1.higher).matrix, global_monodromy(f2.higher).matrix
        )
    higher = LefschetzPiece(
        SurfaceModel.connected(g1 + g2),
        f1.higher.cycles + _shift_cycles(f2.higher.cycles, g1),
        higher_monodromy,
    )
    lower = LefschetzPiece(
        SurfaceModel(f1.lower.fiber.components + f2.lower.fiber.components),
        f1.lower.cycles + _shift_cycles(f2.lower.cycles, g1),
    )
    cobordisms = (
        f1.cobordisms
        + tuple(replace(c, gamma=c.gamma.shift(g1)) for c in f2.cobordisms)
        + (RoundCobordism(neck, Parity.UNTWISTED, framing=0, separating=True),)
    )
    d1, d2 = f1.declared, f2.declared
    declared = Declared(
        sigma=d1.sigma + d2.sigma if d1.sigma is not None and d2.sigma is not None else None,
        b_plus=d1.b_plus + d2.b_plus if d1.b_plus is not None and d2.b_plus is not None else None,
        parity=(
            ("even" if d1.parity == "even" and d2.parity == "even" else "odd")
            if d1.parity is not None and d2.parity is not None
            else None
        ),
    )
    return BrokenFibration(
        base=Base.SPHERE,
        lower=lower,
        cobordisms=cobordisms,
        higher=higher,
        sections=f1.sections + f2.sections,
        declared=declared,
        blowups=f1.blowups + f2.blowups,
        notes=f1.notes + f2.notes,
    )


def trade_negative_node(f: BrokenFibration, index: int) -> BrokenFibration:
    """Trade the negative critical point at `index` for a round handle.

    The index runs over lower-piece cycles first, then higher-piece ones.
    Blowing up replaces the negative node by one round cobordism (framing
    -1) down to a fiber with one less handle; the blow-up count goes up and
    e goes up by exactly 1. Supported inputs: chains with no round
    cobordisms (the new round circle's small disk becomes the lower side),
    or directed chains whose traded cycle is on the lower piece (the new
    trivial piece slides underneath; the remaining lower cycles are pushed
    onto the top fiber). A dip inside the higher side of an already-broken
    chain is not representable in this directed model.
    """
    cycles = _merged_cycles(f)
    if not 0 <= index < len(cycles):
        raise FibrationError(f"no Lefschetz cycle at index {index}")
    word, chirality = cycles[index]
    if chirality != -1:
        raise FibrationError(f"cycle {index} has chirality +1; only negative nodes trade")
    top_genus = f.higher.fiber.total_genus
    if word.needed_genus() > top_genus or not any(abelianize_word(word, top_genus)):
        raise UnsupportedError(
            "trading a separating (null-homologous) vanishing cycle is not supported"
        )
    _require_connected(f, "trade_negative_node")
    _require_directed(f, "trade_negative_node")

    if not f.cobordisms:
        g = f.higher.genus
        remaining = cycles[:index] + cycles[index + 1:]
        return replace(
            f,
            lower=LefschetzPiece.trivial(g - 1),
            cobordisms=(RoundCobordism(word, Parity.AUTO, framing=-1),),
            higher=LefschetzPiece(SurfaceModel.connected(g), remaining),
            blowups=f.blowups + 1,
        )

    if index >= len(f.lower.cycles):
        raise UnsupportedError(
            "trading a node on the higher side of a broken chain would create a "
            "non-monotone genus profile; not representable"
        )
    g_l = f.lower.genus
    if g_l < 1:
        raise UnsupportedError("lower fiber has genus 0; nothing to trade along")
    remaining_lower = f.lower.cycles[:index] + f.lower.cycles[index + 1:]
    higher = replace(
        f.higher,
        cycles=remaining_lower + f.higher.cycles,
        declared_monodromy=None if remaining_lower else f.higher.declared_monodromy,
    )
    return replace(
        f,
        lower=LefschetzPiece.trivial(g_l - 1),
        cobordisms=(RoundCobordism(word, Parity.AUTO, framing=-1),) + f.cobordisms,
        higher=higher,
        blowups=f.blowups + 1,
    )


def blow_down(f: BrokenFibration, section_index: int) -> BrokenFibration:
    """Blow down the (-1)-section at `section_index` into a pencil base point."""
    if not 0 <= section_index < len(f.sections):
        raise FibrationError(f"no section at index {section_index}")
    if f.sections[section_index] != -1:
        raise FibrationError(
            f"section has self-intersection {f.sections[section_index]}; "
            "only (-1)-sections blow down"
        )
    sections = f.sections[:section_index] + f.sections[section_index + 1:]
    return replace(f, sections=sections, basepoints=f.basepoints + 1)


def blow_up(f: BrokenFibration) -> BrokenFibration:
    """Re-blow-up one pencil base point into a (-1)-section (inverse of blow_down)."""
    if f.basepoints < 1:
        raise FibrationError("no pencil base point to blow up")
    return replace(f, sections=f.sections + (-1,), basepoints=f.basepoints - 1)


def step_fibration(genus: int, framing: int) -> BrokenFibration:
    """The basic one-round-handle fibration with a framing-k section.

    Trivial genus-(g+1) fibration on the higher side, trivial genus-g on
    the lower, joined by one untwisted round cobordism along a_{g+1}. For
    g = 0 the total space alternates with the framing parity between
    S2xS2 # S1xS3 (even) and S2x~S2 # S1xS3 (odd).
    """
    if genus < 0:
        raise FibrationError(f"genus must be nonnegative, got {genus}")
    gamma = CurveWord.from_letters((2 * genus + 1,))
    if genus == 0:
        even = framing % 2 == 0
        declared = Declared(
            sigma=0,
            b_plus=1,
            parity="even" if even else "odd",
            label="S2xS2 # S1xS3" if even else "S2x~S2 # S1xS3",
        )
    elif framing == 0:
        declared = Declared(sigma=0, b_plus=1, label=f"S2xSigma_{genus} # S1xS3")
    else:
        declared = Declared(sigma=0)
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(genus),
        cobordisms=(RoundCobordism(gamma, Parity.UNTWISTED, framing=framing),),
        higher=LefschetzPiece.trivial(genus + 1),
        sections=(framing,),
        declared=declared,
    )


TWO_NODE_MONODROMY = IntMatrix.from_rows([[-1, 2], [0, -1]])


def example42_family(framing: int) -> BrokenFibration:
    """Twisted family: elliptic higher side with two nodes, framing-k section.

    The higher-side boundary monodromy is the declared matrix
    [[-1, 2], [0, -1]], which reverses the round-handle class a1, so the
    single round cobordism classifies as twisted. Even framings give
    S2xS2, odd ones CP^2 # -CP^2; blowing the k = -1 member down yields
    the pencil model with (e, sigma) = (3, 1).
    """
    even = framing % 2 == 0
    higher = LefschetzPiece(
        SurfaceModel.connected(1),
        ((CurveWord.parse("b1"), 1), (CurveWord.parse("a1 a1 b1"), 1)),
        declared_monodromy=TWO_NODE_MONODROMY,
    )
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(0),
        cobordisms=(RoundCobordism(CurveWord.parse("a1"), Parity.AUTO, framing=framing),),
        higher=higher,
        sections=(framing,),
        declared=Declared(
            sigma=0,
            b_plus=1,
            parity="even" if even else "odd",
            label="S2xS2" if even else "CP^2 # -CP^2",
        ),
    )
