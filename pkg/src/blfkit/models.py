"""Stock fibration records used throughout the tests and docs."""

from __future__ import annotations

from dataclasses import replace

from .fibration import (
    Base,
    BrokenFibration,
    Declared,
    LefschetzPiece,
    Parity,
    RoundCobordism,
    SurfaceModel,
)
from .surface import CurveWord
from .surgery import BrokenFiberSumSpec, broken_fiber_sum, connected_sum_model

# genus-2 positive relator: these four words, each twisted twice, compose to
# the identity on homology (and in the mapping class group)
MATSUMOTO_WORDS = ("b1 b2", "a1 b1 A1 B1", "b2 a2 B2 a1", "b2 a2 a1 b1")


def matsumoto_fibration() -> BrokenFibration:
    """Genus-2 fibration with 8 nodes, 4 disjoint (-1)-sections.

    e = 4, sigma = -4, global monodromy trivial on H1; total space is the
    4-fold blow-up of the sphere bundle over the torus, hence the label.
    """
    words = [CurveWord.parse(w) for w in MATSUMOTO_WORDS]
    cycles = tuple((w, 1) for w in words + words)
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(2),
        cobordisms=(),
        higher=LefschetzPiece(SurfaceModel.connected(2), cycles),
        sections=(-1, -1, -1, -1),
        declared=Declared(sigma=-4, b_plus=1, parity="odd", label="S2xT2 # 4 -CP^2"),
    )


def rational_ruled(odd: bool = False) -> BrokenFibration:
    """Trivial (or odd: once-twisted) sphere bundle over the sphere."""
    if odd:
        # the exceptional sphere of CP^2 # -CP^2 is a (-1)-section of the ruling
        declared = Declared(sigma=0, b_plus=1, parity="odd", label="CP^2 # -CP^2")
        sections = (-1,)
    else:
        declared = Declared(sigma=0, b_plus=1, parity="even", label="S2xS2")
        sections = (0,)
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(0),
        higher=LefschetzPiece.trivial(0),
        sections=sections,
        declared=declared,
    )


def sphere_times_surface(genus: int) -> BrokenFibration:
    """Trivial genus-g bundle over the sphere, fiber-sum building block."""
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(genus),
        higher=LefschetzPiece.trivial(genus),
        sections=(0,),
        declared=Declared(sigma=0, b_plus=1, label=f"S2xSigma_{genus}" if genus else "S2xS2"),
    )


def s4_fibration() -> BrokenFibration:
    """The 4-sphere as a broken fibration: one untwisted round handle,
    nonstandard gluing, no section survives."""
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(0),
        cobordisms=(RoundCobordism(CurveWord.parse("a1"), Parity.UNTWISTED, framing=0, gluing=1),),
        higher=LefschetzPiece.trivial(1),
        sections=(),
        declared=Declared(sigma=0, b_plus=0, label="S4"),
    )


def s1xs3_fibration() -> BrokenFibration:
    """S1 x S3 fibered over the torus: a single round handle and nothing else."""
    return BrokenFibration(
        base=Base.TORUS,
        lower=LefschetzPiece.trivial(0),
        cobordisms=(RoundCobordism(CurveWord.parse("a1"), Parity.UNTWISTED, framing=0),),
        higher=LefschetzPiece.trivial(1),
        sections=(),
        declared=Declared(sigma=0, b_plus=0, label="S1xS3"),
    )


def matsumoto_sum() -> BrokenFibration:
    """Broken fiber sum of the 8-node genus-2 fibration with S2xS2.

    Two round handles bridge the genus gap; the total turns out simply
    connected with e = 8, sigma = -4, so it is homeomorphic to the 5-fold
    blow-up of the projective plane.
    """
    out = broken_fiber_sum(
        BrokenFiberSumSpec(
            left=matsumoto_fibration(),
            right=rational_ruled(),
            gammas=(CurveWord.parse("a1"), CurveWord.parse("b2")),
            phi1="id",
            phi2="id",
        )
    )
    return replace(
        out, declared=Declared(sigma=-4, b_plus=1, parity="odd", label="CP^2 # 5 -CP^2")
    )


def achiral_negative() -> BrokenFibration:
    """Genus-1 fibration with one negative node; e = 1.

    The smallest input on which trading the node for a round handle does
    anything interesting: the trade raises e to 2 and records a blow-up.
    """
    return BrokenFibration(
        base=Base.SPHERE,
        lower=LefschetzPiece.trivial(1),
        higher=LefschetzPiece(SurfaceModel.connected(1), ((CurveWord.parse("b1"), -1),)),
        sections=(0,),
    )


def double_rational_csum() -> BrokenFibration:
    """Connected sum of two odd ruled pieces: e = 6, sigma = 0, b+ = 2."""
    out = connected_sum_model(rational_ruled(odd=True), rational_ruled(odd=True))
    return replace(
        out, declared=replace(out.declared, label="2 CP^2 # 2 -CP^2")
    )
