"""Braid words, their text grammar, closures and Markov moves.

Letters are nonzero integers: ``+i`` is the generator sigma_i and ``-i`` its
inverse.  Strands are read from top to bottom and numbered from the left
starting at 1; a positive letter ``+i`` is a crossing of the strands in
positions ``i`` and ``i+1`` where the strand entering from the left passes
over.  With strands oriented downward this is a crossing of oriented sign
-1, so ``s1^3`` closes to the left-handed trefoil.

Grammar accepted by :func:`parse_braid`::

    word := term (WS term)*
    term := ('s' INT | SINT) ('^' SINT)?
    SINT := '-'? INT
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidSyntaxError, GeneratorIndexError, StrandMismatch

__all__ = [
    "BraidWord",
    "parse_braid",
    "closure_components",
    "conjugate",
    "stabilize",
    "writhe",
    "free_reduce",
    "random_braid",
    "all_reduced_words",
]


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent ``i, -i`` pairs until none remain."""
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        for a in self.letters:
            if a == 0:
                raise ValueError("letter 0 is not a generator")
            if abs(a) >= self.strands:
                raise GeneratorIndexError(
                    f"generator {abs(a)} needs at least {abs(a) + 1} strands, have {self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def crossings(self) -> int:
        return len(self.letters)

    def reduced(self) -> BraidWord:
        return BraidWord(self.strands, free_reduce(self.letters))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in self.letters))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise StrandMismatch(f"B_{self.strands} and B_{other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def permutation(self) -> tuple[int, ...]:
        """``perm[p]`` is the bottom position (0-based) of the strand starting at ``p``."""
        where = list(range(self.strands))  # where[pos] = strand currently there
        for a in self.letters:
            i = abs(a) - 1
            where[i], where[i + 1] = where[i + 1], where[i]
        perm = [0] * self.strands
        for pos, strand in enumerate(where):
            perm[strand] = pos
        return tuple(perm)

    def to_text(self) -> str:
        """Inverse of :func:`parse_braid`: runs of equal letters become powers."""
        out = []
        i = 0
        letters = self.letters
        while i < len(letters):
            j = i
            while j < len(letters) and letters[j] == letters[i]:
                j += 1
            a, k = letters[i], j - i
            power = k if a > 0 else -k
            out.append(f"s{abs(a)}" if power == 1 else f"s{abs(a)}^{power}")
            i = j
        return " ".join(out)

    def __str__(self) -> str:
        return self.to_text() or "1"

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}


_TOKEN = re.compile(r"(s?)(-?\d+)(?:\^(-?\d+))?")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse a braid word; ``strands`` defaults to one more than the largest generator."""
    letters: list[int] = []
    pos = 0
    n = len(text)
    expect_term = True
    while pos < n:
        if text[pos].isspace():
            while pos < n and text[pos].isspace():
                pos += 1
            expect_term = True
            continue
        if not expect_term:
            raise BraidSyntaxError("expected whitespace between terms", pos)
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise BraidSyntaxError(f"unexpected character {text[pos]!r}", pos)
        prefix, gen, power = m.groups()
        gen_value = int(gen)
        if prefix and gen_value < 0:
            # 's-2' is not in the grammar; the sign goes on the power
            raise BraidSyntaxError("generator after 's' must be positive", pos + 1)
        if gen_value == 0:
            raise BraidSyntaxError("generator index 0 does not exist", pos)
        k = int(power) if power is not None else 1
        letter = gen_value if k >= 0 else -gen_value
        letters.extend([letter] * abs(k))
        pos = m.end()
        expect_term = False
    if strands is None:
        strands = 1 + max((abs(a) for a in letters), default=0)
    return BraidWord(strands, tuple(letters))


def closure_components(b: BraidWord) -> int:
    """Number of components of the closure, i.e. cycles of the strand permutation."""
    perm = b.permutation()
    seen = [False] * b.strands
    cycles = 0
    for start in range(b.strands):
        if seen[start]:
            continue
        cycles += 1
        p = start
        while not seen[p]:
            seen[p] = True
            p = perm[p]
    return cycles


def conjugate(b: BraidWord, g: BraidWord) -> BraidWord:
    """Markov move of type I: ``g b g^-1``, freely reduced."""
    if b.strands != g.strands:
        raise StrandMismatch(f"cannot conjugate B_{b.strands} word by B_{g.strands} word")
    return BraidWord(b.strands, free_reduce(g.letters + b.letters + g.inverse().letters))


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov move of type II: append ``sigma_k^(+-1)`` in ``B_(k+1)``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    k = b.strands
    return BraidWord(k + 1, b.letters + (sign * k,))


def writhe(b: BraidWord) -> int:
    return sum(1 if a > 0 else -1 for a in b.letters)


def random_braid(
    rng: random.Random, strands: int, length: int, reduced: bool = True
) -> BraidWord:
    """Random word of exactly ``length`` letters (freely reduced when ``reduced``)."""
    if strands < 2:
        return BraidWord(strands)
    letters: list[int] = []
    while len(letters) < length:
        a = rng.randint(1, strands - 1) * rng.choice((1, -1))
        if reduced and letters and letters[-1] == -a:
            continue
        letters.append(a)
    return BraidWord(strands, tuple(letters))


def all_reduced_words(strands: int, max_length: int) -> Sequence[BraidWord]:
    """Every freely reduced word in ``B_strands`` with at most ``max_length`` letters."""
    alphabet = [s * i for i in range(1, strands) for s in (1, -1)]
    out = [BraidWord(strands)]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for a in alphabet:
                if w and w[-1] == -a:
                    continue
                nxt.append(w + (a,))
        out.extend(BraidWord(strands, w) for w in nxt)
        frontier = nxt
    return out
