"""Regenerate fixtures/*.blf from the stock models.

The canonical fixtures must stay byte-identical to what
serialize_document emits; run this after any serializer change. Files
under fixtures/broken/ are hand-written and never touched here.
"""

from pathlib import Path

from blfkit.blffile import serialize_document
from blfkit.models import (
    achiral_negative,
    double_rational_csum,
    matsumoto_fibration,
    matsumoto_sum,
    rational_ruled,
    s1xs3_fibration,
    s4_fibration,
)
from blfkit.surgery import example42_family, step_fibration

FIXTURES = {
    "matsumoto.blf": matsumoto_fibration,
    "matsumoto-sum.blf": matsumoto_sum,
    "rational-s2xs2.blf": rational_ruled,
    "rational-odd.blf": lambda: rational_ruled(odd=True),
    "example42.blf": lambda: example42_family(0),
    "example43.blf": double_rational_csum,
    "step-g0.blf": lambda: step_fibration(0, 0),
    "s4.blf": s4_fibration,
    "s1xs3.blf": s1xs3_fibration,
    "achiral-neg.blf": achiral_negative,
}


def main():
    root = Path(__file__).resolve().parent.parent / "fixtures"
    root.mkdir(exist_ok=True)
    for name, make in sorted(FIXTURES.items()):
        path = root / name
        path.write_text(serialize_document(make()), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
