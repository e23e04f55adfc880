"""Free-group words as tuples of signed generator indices.

A letter is a nonzero int: +k is the k-th generator (1-based), -k its
inverse. The surface alphabet maps a_i to index 2i-1 and b_i to index 2i,
matching the interleaved homology basis; uppercase tokens are inverses.
"""

from __future__ import annotations

import re

from .errors import WordError

_TOKEN = re.compile(r"([abAB])([0-9]+)\Z")


def free_reduce(letters) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(letters) -> tuple[int, ...]:
    out = list(free_reduce(letters))
    while len(out) > 1 and out[0] == -out[-1]:
        out = out[1:-1]
    return tuple(out)


def invert(letters) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


def exponent_sums(letters, n: int) -> tuple[int, ...]:
    out = [0] * n
    for x in letters:
        k = abs(x)
        if k > n:
            raise WordError(f"generator index {k} exceeds rank {n}")
        out[k - 1] += 1 if x > 0 else -1
    return tuple(out)


def parse_surface_tokens(text: str) -> tuple[int, ...]:
    letters = []
    for pos, token in enumerate(text.split(), start=1):
        m = _TOKEN.match(token)
        if not m:
            raise WordError(f"token {pos}: {token!r} is not a generator (a1/b1/A1/B1 style)")
        letter, num = m.groups()
        i = int(num)
        if i < 1:
            raise WordError(f"token {pos}: generator index must be >= 1, got {token!r}")
        k = 2 * i - 1 if letter in "aA" else 2 * i
        letters.append(k if letter.islower() else -k)
    return tuple(letters)


def surface_letter_name(x: int) -> str:
    k = abs(x)
    i = (k + 1) // 2
    name = f"a{i}" if k % 2 else f"b{i}"
    return name if x > 0 else name[0].upper() + name[1:]


def format_surface_letters(letters) -> str:
    return " ".join(surface_letter_name(x) for x in letters)
