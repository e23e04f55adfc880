"""Numerical and group-theoretic invariants of a fibration record.

All arithmetic is exact: integers everywhere, fractions for the holomorphic
Euler characteristic chi_h = (e + sigma)/4. sigma and the parity of the
intersection form are declared inputs propagated through surgeries, never
derived from the combinatorics; e and the fundamental-group data are
computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FibrationError, UnsupportedError, WordError
from .exact import IntMatrix, smith_normal_form
from .fibration import Base, BrokenFibration
from .surface import CurveWord
from .words import cyclic_reduce, free_reduce, invert


def euler_characteristic(f: BrokenFibration) -> int:
    """Euler characteristic of the (pencil's) total space.

    Over the sphere: sum of 2-2g over the components of both end fibers,
    plus one per Lefschetz critical point; the round handles contribute
    nothing. Over the torus the fiber terms vanish with chi(T^2), leaving
    just the critical points. Pencil base points (blown-down sections) are
    subtracted.
    """
    n = f.cycle_count
    if f.base is Base.TORUS:
        return n - f.basepoints
    return f.lower.fiber.euler() + f.higher.fiber.euler() + n - f.basepoints


def broken_sum_invariants(
    e1: int,
    sigma1: int,
    g1: int,
    e2: int,
    sigma2: int,
    g2: int,
    allow_genus_zero: bool = False,
) -> tuple[int, int, Fraction]:
    """(e, sigma, chi_h) of a fiber sum along genus g1 / g2 fibers.

    e = e1 + e2 + 2(g1 + g2) - 4 and sigma = sigma1 + sigma2. The formula
    is stated for g1, g2 >= 1; pass allow_genus_zero=True to run the
    genus-0 case (used by the rational-summand examples) anyway.
    """
    if min(g1, g2) < 1 and not allow_genus_zero:
        raise FibrationError(
            f"fiber sum formula needs genera >= 1 (got {g1}, {g2}); "
            "set allow_genus_zero=True to override"
        )
    e = e1 + e2 + 2 * (g1 + g2) - 4
    sigma = sigma1 + sigma2
    return e, sigma, Fraction(e + sigma, 4)


def almost_complex_parity(g1: int, g2: int) -> bool:
    """True when a sum along genus g1 / g2 fibers can be almost complex.

    The criterion is that g1 - g2 and g1 + g2 are both even, which is one
    condition: the genera agree mod 2.
    """
    return (g1 - g2) % 2 == 0 and (g1 + g2) % 2 == 0


@dataclass(frozen=True)
class GroupPresentation:
    """Finite presentation: generator names plus relator words.

    Relator letters are signed 1-based indices into `generators`; the
    display convention capitalizes a generator name to mean its inverse.
    """

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]

    def relator_text(self, letters) -> str:
        parts = []
        for x in letters:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else name[0].upper() + name[1:])
        return " ".join(parts)

    def display(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(self.relator_text(r) for r in self.relators)
        return f"< {gens} | {rels} >"

    def summary(self) -> str:
        if not self.generators:
            return "trivial"
        if not self.relators:
            if len(self.generators) == 1:
                return "Z"
            return f"free of rank {len(self.generators)}"
        return f"{len(self.generators)} generators, {len(self.relators)} relators"


def surface_relation(genus: int) -> tuple[int, ...]:
    letters: list[int] = []
    for i in range(1, genus + 1):
        a, b = 2 * i - 1, 2 * i
        letters += [a, b, -a, -b]
    return tuple(letters)


def surface_generator_names(genus: int) -> tuple[str, ...]:
    names = []
    for i in range(1, genus + 1):
        names += [f"a{i}", f"b{i}"]
    return tuple(names)


def pi1_presentation(
    f: BrokenFibration,
    extra_relators=(),
    assume_section: bool = False,
) -> GroupPresentation:
    """Presentation of pi1 of the total space from the fibration data.

    Generators are the standard generators of the top fiber; relators are
    the surface relation, every vanishing-cycle word, every round-handle
    class, and any extra relators. The recipe needs a section (so fiber
    classes generate); without one, and without assume_section=True, it
    refuses rather than answer for the wrong space.
    """
    if f.base is not Base.SPHERE:
        raise UnsupportedError("pi1 recipe implemented for sphere base only")
    if not (f.lower.fiber.is_connected and f.higher.fiber.is_connected):
        raise UnsupportedError("pi1 recipe needs connected fibers")
    if not f.sections and not assume_section:
        raise FibrationError(
            "no section recorded: pi1 of the total space is not determined "
            "by this recipe (pass assume_section=True to override)"
        )
    genus = f.higher.genus
    relators: list[tuple[int, ...]] = []
    rel = free_reduce(surface_relation(genus))
    if rel:
        relators.append(rel)

    def add_word(word: CurveWord):
        if word.needed_genus() > genus:
            raise WordError(
                f"relator {word.to_text()!r} does not fit on the top fiber"
            )
        if word.letters:
            relators.append(word.letters)

    for word, _ in f.lower.cycles:
        add_word(word)
    for word, _ in f.higher.cycles:
        add_word(word)
    for cob in f.cobordisms:
        add_word(cob.gamma)
    for extra in extra_relators:
        add_word(extra if isinstance(extra, CurveWord) else CurveWord.from_letters(extra))
    return GroupPresentation(surface_generator_names(genus), tuple(relators))


def _cyclic_key(letters):
    candidates = []
    for word in (letters, invert(letters)):
        for i in range(len(word)):
            candidates.append(word[i:] + word[:i])
    return min(candidates)


def tietze_simplify(p: GroupPresentation) -> GroupPresentation:
    """Bounded deterministic simplification.

    Repeats until a fixpoint: free/cyclic reduction, dropping trivial and
    duplicate relators (up to rotation and inversion), and eliminating any
    generator that occurs exactly once in some relator, preferring the
    lowest generator index and then the shortest, earliest relator. Each
    elimination is a Tietze move, so the group is unchanged.
    """
    gens = list(p.generators)
    rels = [cyclic_reduce(r) for r in p.relators]
    while True:
        cleaned = []
        seen = set()
        for r in rels:
            r = cyclic_reduce(r)
            if not r:
                continue
            key = _cyclic_key(r)
            if key in seen:
                continue
            seen.add(key)
            cleaned.append(r)
        rels = cleaned

        move = None
        for gi in range(len(gens)):
            k = gi + 1
            candidates = [
                (len(r), idx)
                for idx, r in enumerate(rels)
                if sum(1 for x in r if abs(x) == k) == 1
            ]
            if candidates:
                move = (k, min(candidates)[1])
                break
        if move is None:
            return GroupPresentation(tuple(gens), tuple(rels))

        k, ridx = move
        r = rels.pop(ridx)
        pos = next(i for i, x in enumerate(r) if abs(x) == k)
        r = r[pos:] + r[:pos]
        tail = r[1:]
        # k * tail = 1 gives k = tail^-1; k^-1 * tail = 1 gives k = tail
        replacement = tail if r[0] == -k else invert(tail)

        def renumber(x):
            s = 1 if x > 0 else -1
            v = abs(x)
            return s * (v - 1) if v > k else s * v

        new_rels = []
        for s in rels:
            expanded: list[int] = []
            for x in s:
                if x == k:
                    expanded.extend(replacement)
                elif x == -k:
                    expanded.extend(invert(replacement))
                else:
                    expanded.append(x)
            reduced = free_reduce(tuple(renumber(x) for x in expanded))
            new_rels.append(reduced)
        rels = new_rels
        del gens[k - 1]


def homology_from_presentation(p: GroupPresentation) -> tuple[int, tuple[int, ...]]:
    """(betti rank, torsion coefficients) of the abelianization.

    Smith normal form of the relator exponent matrix; torsion entries are
    the invariant factors greater than one, in divisor order.
    """
    n = len(p.generators)
    if not p.relators:
        return n, ()
    rows = []
    for r in p.relators:
        row = [0] * n
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    d, _, _ = smith_normal_form(IntMatrix.from_rows(rows))
    diag = d.diagonal()
    rank = sum(1 for x in diag if x != 0)
    torsion = tuple(x for x in diag if x > 1)
    return n - rank, torsion


def h1_text(h1: tuple[int, tuple[int, ...]] | None) -> str:
    if h1 is None:
        return "unknown"
    betti, torsion = h1
    parts = []
    if betti == 1:
        parts.append("Z")
    elif betti > 1:
        parts.append(f"Z^{betti}")
    parts += [f"Z/{d}" for d in torsion]
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class InvariantRecord:
    """Everything the reporting layer needs, already reconciled.

    sigma and b_plus mix declared data with pencil bookkeeping; pi1 is the
    Tietze-simplified presentation when the recipe applied, else None and
    the summary says "undetermined".
    """

    e: int
    sigma: int | None
    chi_h: Fraction | None
    b_plus: int | None
    b_minus: int | None
    pi1: GroupPresentation | None
    pi1_summary: str
    h1: tuple[int, tuple[int, ...]] | None
    label: str | None

    def to_text(self) -> str:
        def fmt(x):
            return "unknown" if x is None else str(x)

        chi = "unknown"
        if self.chi_h is not None:
            chi = (
                str(self.chi_h.numerator)
                if self.chi_h.denominator == 1
                else f"{self.chi_h.numerator}/{self.chi_h.denominator}"
            )
        lines = [
            f"e={self.e}",
            f"sigma={fmt(self.sigma)}",
            f"chi_h={chi}",
            f"b_plus={fmt(self.b_plus)}",
            f"b_minus={fmt(self.b_minus)}",
            f"pi1={self.pi1_summary}",
            f"h1={h1_text(self.h1)}",
        ]
        if self.label is not None:
            lines.append(f"label={self.label}")
        return "\n".join(lines) + "\n"


def build_record(f: BrokenFibration, assume_section: bool = False) -> InvariantRecord:
    e = euler_characteristic(f)
    sigma = None
    if f.declared.sigma is not None:
        # each blown-down (-1)-section removed a -CP^2 summand
        sigma = f.declared.sigma + f.basepoints
    chi_h = Fraction(e + sigma, 4) if sigma is not None else None

    pi1 = None
    summary = "undetermined"
    h1 = None
    try:
        raw = pi1_presentation(f, assume_section=assume_section)
    except (FibrationError, UnsupportedError, WordError):
        raw = None
    if raw is not None:
        pi1 = tietze_simplify(raw)
        summary = pi1.summary()
        h1 = homology_from_presentation(raw)

    b_plus = f.declared.b_plus
    b_minus = None
    if sigma is not None and summary == "trivial":
        b2 = e - 2
        if b2 >= 0 and (b2 + sigma) % 2 == 0:
            computed_plus = (b2 + sigma) // 2
            computed_minus = (b2 - sigma) // 2
            if computed_plus >= 0 and computed_minus >= 0:
                if b_plus is not None and b_plus != computed_plus:
                    raise FibrationError(
                        f"declared b_plus={b_plus} contradicts computed {computed_plus}"
                    )
                b_plus = computed_plus
                b_minus = computed_minus
    return InvariantRecord(
        e=e,
        sigma=sigma,
        chi_h=chi_h,
        b_plus=b_plus,
        b_minus=b_minus,
        pi1=pi1,
        pi1_summary=summary,
        h1=h1,
        label=f.declared.label,
    )


def homeo_report(record: InvariantRecord, form_parity: str | None) -> str:
    """Homeomorphism-type report from (pi1, e, sigma, declared form parity).

    Only the simply connected, odd indefinite case names a standard model
    (b+ copies of CP^2 and b- of -CP^2); anything else reports the numeric
    data or says why it is inconclusive.
    """
    lines = [f"e = {record.e}"]
    sigma = record.sigma
    lines.append(f"sigma = {'unknown' if sigma is None else sigma}")

    def done(conclusion):
        lines.append(f"homeomorphism type: {conclusion}")
        return "\n".join(lines) + "\n"

    lines.append(f"pi1 = {record.pi1_summary}")
    if record.pi1_summary != "trivial":
        return done(f"inconclusive (pi1 is {record.pi1_summary})")
    if sigma is None:
        return done("inconclusive (sigma not declared)")
    b2 = record.e - 2
    if b2 < 0 or (b2 + sigma) % 2 or abs(sigma) > b2:
        return done(f"inconclusive (invalid betti data: b2={b2}, sigma={sigma})")
    b_plus = (b2 + sigma) // 2
    b_minus = (b2 - sigma) // 2
    lines.append(f"b2 = {b2}")
    lines.append(f"b+ = {b_plus}")
    lines.append(f"b- = {b_minus}")
    if b2 == 0:
        return done("S4")
    lines.append(f"form parity = {'unknown' if form_parity is None else form_parity}")
    if form_parity is None:
        return done("inconclusive (form parity not declared)")
    if form_parity == "odd":
        parts = []
        if b_plus:
            parts.append("CP^2" if b_plus == 1 else f"{b_plus} CP^2")
        if b_minus:
            parts.append("-CP^2" if b_minus == 1 else f"{b_minus} -CP^2")
        return done(" # ".join(parts))
    return done(f"undetermined (b+={b_plus}, b-={b_minus}, even form)")
