"""Finite-dimensional projection algebras on generators e_1 .. e_{n-1}.

All presets share far commutation ``e_i e_j = e_j e_i`` for ``|i - j| >= 2``
and differ in two scalars::

    e_i e_i         = alpha * e_i
    e_i e_{i+-1} e_i = beta  * e_i

``paper``          alpha = 1, beta = -2   (units u_i = e_i + 1)
``parametric``     alpha = 1, beta = -(a+b) b / a^2  with symbolic a, b
``temperley_lieb`` alpha = delta, beta = 1

Rewriting a word only ever deletes letters, so the normal form of any word
is ``alpha^p * beta^q * w`` for a reduced word ``w``; the pair ``(p, q)``
does not depend on the preset and is cached once per pair of basis words.

Basis words are stored in Jones normal form: descending runs
``e_i e_{i-1} ... e_j`` with strictly increasing tops and bottoms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .braid import BraidWord
from .errors import PresetMismatch, StrandLimitExceeded
from .laurent import LaurentPoly, RationalFn

__all__ = [
    "ReducedWord",
    "RelationPreset",
    "AlgebraElement",
    "paper_preset",
    "parametric_preset",
    "temperley_lieb_preset",
    "kauffman_preset",
    "reduced_words",
    "normal_form",
    "reduce_letters",
    "rho",
    "rho_class",
    "braid_relation_check",
    "markov_trace",
    "closure_trace",
    "closure_loops",
]

DEFAULT_MAX_STRANDS = 9


@dataclass(frozen=True, order=True)
class ReducedWord:
    runs: tuple[tuple[int, int], ...] = ()

    @property
    def letters(self) -> tuple[int, ...]:
        out: list[int] = []
        for top, bottom in self.runs:
            out.extend(range(top, bottom - 1, -1))
        return tuple(out)

    def __len__(self) -> int:
        return sum(top - bottom + 1 for top, bottom in self.runs)

    def sort_key(self) -> tuple:
        return (len(self), self.letters)

    def max_index(self) -> int:
        return max((top for top, _ in self.runs), default=0)

    def to_text(self) -> str:
        if not self.runs:
            return "1"
        return "·".join(
            "".join(f"e{k}" for k in range(top, bottom - 1, -1)) for top, bottom in self.runs
        )

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {"runs": [list(r) for r in self.runs]}

    @classmethod
    def from_json(cls, data: Mapping) -> ReducedWord:
        return cls(tuple((int(i), int(j)) for i, j in data["runs"]))


IDENTITY = ReducedWord()


def _jones_words(n: int) -> list[ReducedWord]:
    out: list[ReducedWord] = []

    def extend(runs: tuple, last_top: int, last_bottom: int):
        out.append(ReducedWord(runs))
        for top in range(last_top + 1, n):
            for bottom in range(last_bottom + 1, top + 1):
                extend(runs + ((top, bottom),), top, bottom)

    extend((), 0, 0)
    return out


@lru_cache(maxsize=None)
def _basis(n: int) -> tuple[ReducedWord, ...]:
    return tuple(sorted(_jones_words(n), key=ReducedWord.sort_key))


def reduced_words(n: int) -> list[ReducedWord]:
    """The basis of the algebra on e_1 .. e_{n-1}, identity first, in canonical order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return list(_basis(n))


def _commutes(a: int, b: int) -> bool:
    return abs(a - b) >= 2


def trace_key(letters: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically least word equal to ``letters`` up to far commutation."""
    w = list(letters)
    out = []
    while w:
        best = None
        for p, a in enumerate(w):
            if best is not None and a >= w[best]:
                continue
            if all(_commutes(a, w[q]) for q in range(p)):
                best = p
        out.append(w.pop(best))
    return tuple(out)


@lru_cache(maxsize=None)
def _lookup(n: int) -> dict[tuple[int, ...], ReducedWord]:
    return {trace_key(w.letters): w for w in _basis(n)}


@lru_cache(maxsize=200_000)
def reduce_letters(letters: tuple[int, ...]) -> tuple[int, int, ReducedWord]:
    """Rewrite a word to ``(squares, sandwiches, reduced word)``.

    Two consecutive occurrences of ``e_i`` with no neighbour ``e_{i+-1}`` in
    between collapse to one (a square); with exactly one neighbour in between
    they collapse together with that neighbour (a sandwich).  Everything else
    between them commutes with ``e_i``, so these are the only patterns.
    """
    w = list(letters)
    squares = sandwiches = 0
    changed = True
    while changed:
        changed = False
        last: dict[int, int] = {}
        for pos, a in enumerate(w):
            if a in last:
                start = last[a]
                nbrs = [q for q in range(start + 1, pos) if abs(w[q] - a) == 1]
                if not nbrs:
                    del w[pos]
                    squares += 1
                    changed = True
                    break
                if len(nbrs) == 1:
                    del w[pos]
                    del w[nbrs[0]]
                    sandwiches += 1
                    changed = True
                    break
            last[a] = pos
    n = max(w, default=0) + 1
    word = _lookup(n).get(trace_key(w))
    if word is None:  # pragma: no cover - would mean the rewriting is incomplete
        raise AssertionError(f"irreducible word {w} is not in the basis")
    return squares, sandwiches, word


@lru_cache(maxsize=500_000)
def _word_product(left: ReducedWord, right: ReducedWord) -> tuple[int, int, ReducedWord]:
    return reduce_letters(left.letters + right.letters)


# ---------------------------------------------------------------------------
# presets


def _a() -> LaurentPoly:
    return LaurentPoly.var("a")


def _b() -> LaurentPoly:
    return LaurentPoly.var("b")


@dataclass(frozen=True, eq=False)
class RelationPreset:
    """Scalars of one relation family plus the unit ``u_i = a e_i + b``.

    ``kind`` is ``"paper"``, ``"parametric"``, ``"temperley_lieb"`` or
    ``"custom"``; only the Temperley-Lieb kind carries a loop value
    ``delta`` (equal to ``alpha``) and supports the Markov trace.
    """

    name: str
    alpha: object
    beta: object
    a: object = 1
    b: object = 1
    kind: str = "custom"
    _powers: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def delta(self):
        if self.kind != "temperley_lieb":
            raise PresetMismatch(f"preset {self.name!r} has no loop value")
        return self.alpha

    def scalar(self, squares: int, sandwiches: int):
        key = (squares, sandwiches)
        cached = self._powers.get(key)
        if cached is None:
            cached = _tidy(_power(self.alpha, squares) * _power(self.beta, sandwiches))
            self._powers[key] = cached
        return cached

    def one(self):
        return Fraction(1) if self.kind == "paper" else LaurentPoly.constant(1)

    def unit_inverse(self) -> tuple[object, object]:
        """Coefficients ``(c1, ce)`` with ``(a e + b)^-1 = c1 + ce * e``."""
        a, b, alpha = self.a, self.b, self.alpha
        c1 = _tidy(_ratio(1, b))
        ce = _tidy(-_ratio(a, _mul(b, _add(_mul(a, alpha), b))))
        return c1, ce

    def __repr__(self) -> str:
        return f"RelationPreset({self.name!r})"


def _power(x, k: int):
    if k == 0:
        return Fraction(1) if isinstance(x, (int, Fraction)) else LaurentPoly.constant(1)
    return x ** k


def _add(x, y):
    return x + y


def _mul(x, y):
    return x * y


def _ratio(x, y):
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return Fraction(x) / Fraction(y)
    return RationalFn.coerce(x) / RationalFn.coerce(y)


def _tidy(x):
    """Prefer Fraction, then LaurentPoly, over RationalFn when exact."""
    if isinstance(x, RationalFn):
        lp = x.is_laurent()
        if lp is None:
            return x
        x = lp
    if isinstance(x, LaurentPoly) and x.is_constant() and not x.variables:
        return Fraction(x.constant_value())
    if isinstance(x, int):
        return Fraction(x)
    return x


def paper_preset() -> RelationPreset:
    return RelationPreset("paper", Fraction(1), Fraction(-2), Fraction(1), Fraction(1), "paper")


def parametric_preset() -> RelationPreset:
    a, b = _a(), _b()
    beta = -(a + b) * b * a ** -2
    return RelationPreset("parametric", LaurentPoly.constant(1), beta, a, b, "parametric")


def temperley_lieb_preset(delta: LaurentPoly | None = None, a=1, b=1) -> RelationPreset:
    if delta is None:
        delta = LaurentPoly.var("d")
    return RelationPreset("temperley_lieb", delta, LaurentPoly.constant(1), a, b, "temperley_lieb")


def kauffman_preset() -> RelationPreset:
    """Temperley-Lieb with ``delta = -A^2 - A^-2`` and ``sigma_i -> A e_i + A^-1``.

    Under the package's crossing convention this is the bracket state sum:
    a positive letter contributes ``A`` for the cup-cap smoothing and
    ``A^-1`` for the vertical one.
    """
    A = LaurentPoly.var("A")
    delta = -(A ** 2) - A ** -2
    p = temperley_lieb_preset(delta, a=A, b=A ** -1)
    return RelationPreset("kauffman", p.alpha, p.beta, p.a, p.b, "temperley_lieb")


PRESETS = {
    "paper": paper_preset,
    "parametric": parametric_preset,
    "tl": kauffman_preset,
    "temperley_lieb": temperley_lieb_preset,
}


# ---------------------------------------------------------------------------
# elements


class AlgebraElement:
    """Finite linear combination of reduced words over the preset's scalars."""

    __slots__ = ("n", "terms", "preset")

    def __init__(self, n: int, terms: Mapping[ReducedWord, object], preset: RelationPreset):
        self.n = n
        self.preset = preset
        self.terms = {w: c for w, c in terms.items() if c}
        for w in self.terms:
            if w.max_index() >= n:
                raise ValueError(f"{w} uses a generator outside e_1..e_{n - 1}")

    @classmethod
    def identity(cls, n: int, preset: RelationPreset) -> AlgebraElement:
        return cls(n, {IDENTITY: preset.one()}, preset)

    @classmethod
    def generator(cls, n: int, i: int, preset: RelationPreset) -> AlgebraElement:
        return cls(n, {ReducedWord(((i, i),)): preset.one()}, preset)

    @classmethod
    def word(cls, n: int, w: ReducedWord, preset: RelationPreset, coeff=None) -> AlgebraElement:
        return cls(n, {w: preset.one() if coeff is None else coeff}, preset)

    def _check(self, other: AlgebraElement):
        if other.preset is not self.preset and other.preset.name != self.preset.name:
            raise PresetMismatch(f"{self.preset.name} vs {other.preset.name}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return AlgebraElement(max(self.n, other.n), out, self.preset)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, {w: -c for w, c in self.terms.items()}, self.preset)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c) -> AlgebraElement:
        return AlgebraElement(self.n, {w: x * c for w, x in self.terms.items()}, self.preset)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        out: dict[ReducedWord, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                p, q, w = _word_product(w1, w2)
                term = c1 * c2 * self.preset.scalar(p, q) if (p or q) else c1 * c2
                out[w] = out[w] + term if w in out else term
        return AlgebraElement(max(self.n, other.n), out, self.preset)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = Fraction(0)
        return all(self.terms.get(w, zero) == other.terms.get(w, zero) for w in keys)

    def __hash__(self):
        raise TypeError("AlgebraElement is unhashable")

    def coefficient(self, w: ReducedWord):
        return self.terms.get(w, Fraction(0))

    def sorted_terms(self) -> list[tuple[ReducedWord, object]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ctext = str(c)
            if isinstance(c, (LaurentPoly, RationalFn)) and (len(getattr(c, "terms", {})) > 1 or isinstance(c, RationalFn)):
                ctext = f"({ctext})"
            if w == IDENTITY:
                body = ctext
            elif ctext == "1":
                body = w.to_text()
            elif ctext == "-1":
                body = "-" + w.to_text()
            else:
                body = f"{ctext}*{w.to_text()}"
            parts.append(body)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "preset": self.preset.name,
            "terms": [
                {"word": w.to_json(), "coeff": _scalar_json(c)} for w, c in self.sorted_terms()
            ],
        }


def _scalar_json(c):
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return c.to_json()


def normal_form(letters: Iterable[int], preset: RelationPreset, n: int | None = None) -> AlgebraElement:
    """Normal form of the product ``e_{l1} e_{l2} ...`` of generators."""
    letters = tuple(letters)
    if any(a < 1 for a in letters):
        raise ValueError("generator indices start at 1")
    if n is None:
        n = max(letters, default=0) + 1
    if letters and max(letters) >= n:
        raise ValueError(f"generator e_{max(letters)} does not exist for n={n}")
    p, q, w = reduce_letters(letters)
    return AlgebraElement(n, {w: preset.scalar(p, q) if (p or q) else preset.one()}, preset)


def _times_unit(x: AlgebraElement, i: int, c1, ce) -> AlgebraElement:
    """``x * (c1 + ce * e_i)``."""
    gen = ReducedWord(((i, i),))
    preset = x.preset
    out: dict[ReducedWord, object] = {}
    for w, c in x.terms.items():
        t = c * c1
        out[w] = out[w] + t if w in out else t
        p, q, w2 = _word_product(w, gen)
        t = c * ce * preset.scalar(p, q) if (p or q) else c * ce
        out[w2] = out[w2] + t if w2 in out else t
    return AlgebraElement(x.n, out, preset)


def rho(b: BraidWord, preset: RelationPreset | None = None, max_strands: int = DEFAULT_MAX_STRANDS) -> AlgebraElement:
    """Image of a braid under ``sigma_i -> a e_i + b`` (``e_i + 1`` for the paper preset)."""
    preset = preset or paper_preset()
    if b.strands > max_strands:
        raise StrandLimitExceeded(f"{b.strands} strands exceeds the limit {max_strands}")
    pos = (_tidy(preset.b), _tidy(preset.a))
    neg = preset.unit_inverse()
    x = AlgebraElement.identity(b.strands, preset)
    for letter in b.letters:
        c1, ce = pos if letter > 0 else neg
        x = _times_unit(x, abs(letter), c1, ce)
    return x


def rho_class(b: BraidWord, max_strands: int = DEFAULT_MAX_STRANDS) -> tuple[tuple[int, ...], int]:
    """Integer coefficient vector of ``rho(b)`` over the basis, and the scale used to clear denominators."""
    x = rho(b, paper_preset(), max_strands)
    basis = _basis(b.strands)
    coeffs = [Fraction(x.coefficient(w)) for w in basis]
    scale = math.lcm(*(c.denominator for c in coeffs))
    return tuple(int(c * scale) for c in coeffs), scale


def basis_labels(n: int) -> list[str]:
    return [w.to_text() for w in _basis(n)]


def braid_relation_check(n: int, preset: RelationPreset) -> bool:
    """Whether ``u_i = a e_i + b`` satisfy both braid relations in the algebra on n strands."""
    one = AlgebraElement.identity(n, preset)

    def u(i: int) -> AlgebraElement:
        return AlgebraElement.generator(n, i, preset).scale(preset.a) + one.scale(preset.b)

    units = {i: u(i) for i in range(1, n)}
    for i in range(1, n - 1):
        if units[i] * units[i + 1] * units[i] != units[i + 1] * units[i] * units[i + 1]:
            return False
    for i in range(1, n):
        for j in range(i + 2, n):
            if units[i] * units[j] != units[j] * units[i]:
                return False
    return True


# ---------------------------------------------------------------------------
# Markov trace


@lru_cache(maxsize=None)
def closure_loops(letters: tuple[int, ...], n: int) -> int:
    """Loops in the closure of the planar diagram of ``e_{l1} e_{l2} ...`` on n points."""
    layers = len(letters) + 1
    parent = list(range(layers * n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def join(a: int, b: int):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for layer, i in enumerate(letters):
        top, bottom = layer * n, (layer + 1) * n
        join(top + i - 1, top + i)
        join(bottom + i - 1, bottom + i)
        for k in range(n):
            if k != i - 1 and k != i:
                join(top + k, bottom + k)
    last = (layers - 1) * n
    for k in range(n):
        join(last + k, k)
    return len({find(a) for a in range(layers * n)})


def closure_trace(x: AlgebraElement):
    """Unnormalised closure ``sum c_w delta^loops(w)``; equals ``delta^n tr(x)``."""
    delta = x.preset.delta
    total = LaurentPoly()
    for w, c in x.terms.items():
        total = total + c * delta ** closure_loops(w.letters, x.n)
    return _tidy(total)


def markov_trace(x: AlgebraElement):
    """Normalised trace with ``tr(1) = 1`` and ``tr(w) = delta^(loops(w) - n)``.

    The value is a Laurent polynomial when delta is a monomial and a reduced
    rational function otherwise.
    """
    if x.preset.kind != "temperley_lieb":
        raise PresetMismatch("the Markov trace needs a Temperley-Lieb preset")
    delta = x.preset.delta
    if isinstance(delta, LaurentPoly) and delta.is_monomial():
        total = LaurentPoly()
        for w, c in x.terms.items():
            total = total + c * delta ** (closure_loops(w.letters, x.n) - x.n)
        return total
    return RationalFn.coerce(closure_trace(x)) / RationalFn.coerce(delta) ** x.n
