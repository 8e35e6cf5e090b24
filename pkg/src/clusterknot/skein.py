"""Jones and HOMFLY polynomials of braid closures.

Two independent engines compute the Jones polynomial:

* :func:`jones_skein` resolves crossings with the skein relation
  ``t^-1 V(L-) - t V(L+) = (s - s^-1) V(L0)`` until every diagram is a
  descending diagram (an unlink);
* :func:`jones_via_bracket` sums over Kauffman states.

A third route, :func:`jones_via_trace`, goes through the Temperley-Lieb
representation of the braid and its Markov trace.

Crossing conventions (positive letter = left strand over, oriented sign -1):

=========================  ===============================  =====================
relation                   crossing that plays ``L+``        trefoil ``s1^3``
=========================  ===============================  =====================
Jones skein                positive letter                   ``-t^-4 + t^-3 + t^-1``
HOMFLY skein               negative letter                   ``-l^4 - 2*l^2 + l^2*m^2``
Kauffman bracket           A-smoothing of a positive letter  ``A^7 - A^3 - A^-5``
=========================  ===============================  =====================

Jones values are Laurent polynomials in ``s`` with ``s^2 = t``.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Callable

from .braid import BraidWord, closure_components, free_reduce, writhe
from .errors import LimitExceeded, NonHalfIntegerPower
from .laurent import LaurentPoly, _coeff_text

__all__ = [
    "InvariantValue",
    "SkeinNode",
    "jones_skein",
    "homfly_skein",
    "kauffman_bracket",
    "jones_via_bracket",
    "jones_via_trace",
    "skein_step",
    "first_bad_crossing",
    "bad_crossing_count",
    "default_limit",
    "bracket_to_jones",
]

DEFAULT_LIMIT = 16


def default_limit() -> int:
    """Crossing cap, overridable through the ``CK_LIMIT`` environment variable."""
    value = os.environ.get("CK_LIMIT")
    return int(value) if value else DEFAULT_LIMIT


def _check_limit(b: BraidWord, limit: int | None):
    cap = default_limit() if limit is None else limit
    if b.crossings > cap:
        raise LimitExceeded(f"{b.crossings} crossings exceeds the limit {cap}")


# ---------------------------------------------------------------------------
# values


def _half_power_text(k: int, latex: bool) -> str:
    """``t`` raised to ``k/2``."""
    if k % 2 == 0:
        e = k // 2
        if e == 1:
            return "t"
        return f"t^{{{e}}}" if latex else f"t^{e}"
    if latex:
        return f"t^{{{k}/2}}"
    return f"t^({k}/2)"


@dataclass(frozen=True)
class InvariantValue:
    """A computed invariant: ``kind`` is ``jones``, ``homfly`` or ``bracket``."""

    kind: str
    poly: LaurentPoly

    @property
    def variableset(self) -> tuple[str, ...]:
        return {"jones": ("s",), "homfly": ("l", "m"), "bracket": ("A",)}[self.kind]

    def in_t(self) -> LaurentPoly | None:
        """The Jones value as a Laurent polynomial in t, or None if odd powers of s occur."""
        p = self.poly.align(("s",))
        if any(e[0] % 2 for e in p.terms):
            return None
        return LaurentPoly({(e[0] // 2,): c for e, c in p.terms.items()}, ("t",))

    def to_text(self, latex: bool = False) -> str:
        if self.kind != "jones":
            return self.poly.to_text(latex)
        p = self.poly.align(("s",))
        if p.is_zero():
            return "0"
        out = []
        for i, ((k,), c) in enumerate(p.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            mono = _half_power_text(k, latex) if k else ""
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_coeff_text(mag)} {mono}" if latex else f"{_coeff_text(mag)}*{mono}"
            else:
                body = _coeff_text(mag)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def to_latex(self) -> str:
        return self.to_text(latex=True)

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        data = {"kind": self.kind, "variables": list(self.variableset), "poly": self.poly.to_json()}
        if self.kind == "jones":
            data["convention"] = "s^2 = t"
            data["text"] = self.to_text()
        return data

    @classmethod
    def from_json(cls, data: dict) -> InvariantValue:
        return cls(data["kind"], LaurentPoly.from_json(data["poly"]))


# ---------------------------------------------------------------------------
# skein recursion


@dataclass(frozen=True)
class SkeinNode:
    braid: BraidWord
    multiplier: LaurentPoly


def _bad_crossings(b: BraidWord):
    """Yield crossings first met from below, in traversal order.

    Components are walked in order of their smallest top position, each
    starting at the top.  A diagram where every crossing is first met on the
    overstrand is descending and its closure is an unlink.
    """
    n = b.strands
    letters = b.letters
    seen = [False] * len(letters)
    started = [False] * n
    for start in range(n):
        if started[start]:
            continue
        pos = start
        while True:
            started[pos] = True
            for j, a in enumerate(letters):
                i = abs(a) - 1
                if pos == i:
                    if not seen[j]:
                        seen[j] = True
                        if a < 0:
                            yield j
                    pos = i + 1
                elif pos == i + 1:
                    if not seen[j]:
                        seen[j] = True
                        if a > 0:
                            yield j
                    pos = i
            if pos == start:
                break


def first_bad_crossing(b: BraidWord) -> int | None:
    """Letter index of the first crossing met from below, or None for a descending word."""
    return next(_bad_crossings(b), None)


def bad_crossing_count(b: BraidWord) -> int:
    """Second component of the termination measure ``(crossings, bad crossings)``."""
    return sum(1 for _ in _bad_crossings(b))


@dataclass(frozen=True)
class _Rules:
    """Skein coefficients: ``V = sw * V(switched) + sm * V(smoothed)`` per letter sign."""

    kind: str
    pos_switch: LaurentPoly
    pos_smooth: LaurentPoly
    neg_switch: LaurentPoly
    neg_smooth: LaurentPoly
    loop: LaurentPoly  # value multiplier per extra unlink component


def _jones_rules() -> _Rules:
    s = LaurentPoly.var("s")
    diff = s - s ** -1
    return _Rules(
        "jones",
        pos_switch=s ** -4,
        pos_smooth=-diff * s ** -2,
        neg_switch=s ** 4,
        neg_smooth=diff * s ** 2,
        loop=-s - s ** -1,
    )


def _homfly_rules() -> _Rules:
    l, m = LaurentPoly.var("l"), LaurentPoly.var("m")
    return _Rules(
        "homfly",
        pos_switch=-(l ** 2),
        pos_smooth=-l * m,
        neg_switch=-(l ** -2),
        neg_smooth=-(l ** -1) * m,
        loop=-(l + l ** -1) * m ** -1,
    )


def skein_step(b: BraidWord, rules: _Rules | str = "jones") -> list[SkeinNode] | None:
    """One resolution step at the first bad crossing; None when ``b`` is descending."""
    if isinstance(rules, str):
        rules = _RULES[rules]()
    j = first_bad_crossing(b)
    if j is None:
        return None
    a = b.letters[j]
    switched = BraidWord(b.strands, b.letters[:j] + (-a,) + b.letters[j + 1:])
    smoothed = BraidWord(b.strands, b.letters[:j] + b.letters[j + 1:])
    if a > 0:
        return [SkeinNode(switched, rules.pos_switch), SkeinNode(smoothed, rules.pos_smooth)]
    return [SkeinNode(switched, rules.neg_switch), SkeinNode(smoothed, rules.neg_smooth)]


_RULES: dict[str, Callable[[], _Rules]] = {"jones": _jones_rules, "homfly": _homfly_rules}


class _SkeinEngine:
    def __init__(self, rules: _Rules, simplify: bool = True):
        self.rules = rules
        self.simplify = simplify
        self.memo: dict[tuple[int, tuple[int, ...]], LaurentPoly] = {}
        self.lock = threading.Lock()

    def _simplify(self, n: int, letters: tuple[int, ...]) -> tuple[LaurentPoly, list[tuple[int, tuple[int, ...]]]] | None:
        """Isotopies that shrink the problem: split unions and destabilisation."""
        used = {abs(a) for a in letters}
        for i in range(1, n):
            if i not in used:
                left = tuple(a for a in letters if abs(a) < i)
                right = tuple((abs(a) - i) * (1 if a > 0 else -1) for a in letters if abs(a) > i)
                return self.rules.loop, [(i, left), (n - i, right)]
        top = n - 1
        where = [k for k, a in enumerate(letters) if abs(a) == top]
        if len(where) == 1:
            k = where[0]
            rest = letters[k + 1:] + letters[:k]
            return LaurentPoly.constant(1), [(n - 1, free_reduce(rest))]
        return None

    def value(self, n: int, letters: tuple[int, ...]) -> LaurentPoly:
        letters = free_reduce(letters)
        key = (n, letters)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        result = self._compute(n, letters)
        with self.lock:
            return self.memo.setdefault(key, result)

    def _compute(self, n: int, letters: tuple[int, ...]) -> LaurentPoly:
        if n == 1:
            return LaurentPoly.constant(1)
        simple = self._simplify(n, letters) if self.simplify else None
        if simple is not None:
            factor, parts = simple
            out = factor
            for m, w in parts:
                out = out * self.value(m, w)
            return out
        b = BraidWord(n, letters)
        step = skein_step(b, self.rules)
        if step is None:
            return self.rules.loop ** (closure_components(b) - 1)
        total = LaurentPoly()
        for node in step:
            total = total + node.multiplier * self.value(n, node.braid.letters)
        return total


_ENGINES: dict[tuple[str, bool], _SkeinEngine] = {}


def _engine(kind: str, simplify: bool) -> _SkeinEngine:
    eng = _ENGINES.get((kind, simplify))
    if eng is None:
        eng = _ENGINES.setdefault((kind, simplify), _SkeinEngine(_RULES[kind](), simplify))
    return eng


def jones_skein(b: BraidWord, limit: int | None = None, simplify: bool = True) -> InvariantValue:
    """Jones polynomial of the closure of ``b`` by skein recursion.

    With ``simplify`` the recursion also splits off split unions and removes
    a top generator that occurs once (a Markov destabilisation); without it
    only crossing switches and smoothings are used.
    """
    _check_limit(b, limit)
    value = _engine("jones", simplify).value(b.strands, b.letters)
    return InvariantValue("jones", value.align(("s",)))


def homfly_skein(b: BraidWord, limit: int | None = None, simplify: bool = True) -> InvariantValue:
    """HOMFLY polynomial in ``l, m`` with ``l P(L+) + l^-1 P(L-) + m P(L0) = 0``."""
    _check_limit(b, limit)
    value = _engine("homfly", simplify).value(b.strands, b.letters)
    return InvariantValue("homfly", value.align(("l", "m")))


# ---------------------------------------------------------------------------
# Kauffman bracket


def _smooth(state: tuple[int, ...], i: int, n: int) -> tuple[tuple[int, ...], int]:
    """Compose the partial diagram with a cup-cap at bottom positions ``i, i+1``.

    ``state`` is a perfect matching on ``2n`` points: tops ``0..n-1`` and
    current bottoms ``n..2n-1``.  Returns the new matching and the number of
    closed loops created (0 or 1).
    """
    m = list(state)
    p, q = n + i, n + i + 1
    loops = 0
    if m[p] == q:
        loops = 1
    else:
        x, y = m[p], m[q]
        m[x], m[y] = y, x
    m[p], m[q] = q, p
    return tuple(m), loops


def _closure_loops(state: tuple[int, ...], n: int) -> int:
    seen = [False] * (2 * n)
    loops = 0
    for start in range(n):
        if seen[start]:
            continue
        loops += 1
        p = start
        while True:
            seen[p] = True
            q = state[p]
            seen[q] = True
            # walk across the closure arc back to the top
            p = q - n if q >= n else q + n
            if seen[p]:
                break
    return loops


def kauffman_bracket(b: BraidWord, limit: int | None = None) -> InvariantValue:
    """Bracket of the closure, normalised so that the unknot is 1 (no writhe correction)."""
    _check_limit(b, limit)
    n = b.strands
    A = LaurentPoly.var("A")
    Ainv = A ** -1
    delta = -(A ** 2) - A ** -2
    identity = tuple(list(range(n, 2 * n)) + list(range(n)))
    states: dict[tuple[int, ...], LaurentPoly] = {identity: LaurentPoly.constant(1)}
    for a in b.letters:
        i = abs(a) - 1
        w_id, w_cup = (Ainv, A) if a > 0 else (A, Ainv)
        nxt: dict[tuple[int, ...], LaurentPoly] = {}
        for st, w in states.items():
            t1 = w * w_id
            nxt[st] = nxt[st] + t1 if st in nxt else t1
            st2, loops = _smooth(st, i, n)
            t2 = w * w_cup * (delta if loops else 1)
            nxt[st2] = nxt[st2] + t2 if st2 in nxt else t2
        states = {k: v for k, v in nxt.items() if v}
    total = LaurentPoly()
    for st, w in states.items():
        total = total + w * delta ** (_closure_loops(st, n) - 1)
    return InvariantValue("bracket", total.align(("A",)))


def bracket_to_jones(bracket: LaurentPoly, w: int) -> LaurentPoly:
    """Writhe-normalise a bracket and substitute ``A = t^(-1/4)``, i.e. ``A^k -> s^(-k/2)``."""
    A = LaurentPoly.var("A")
    normalised = (bracket * (-A) ** (3 * w)).align(("A",))
    out = {}
    for (k,), c in normalised.terms.items():
        if k % 2:
            raise NonHalfIntegerPower(f"A^{k} is not a half-integer power of t")
        out[(-k // 2,)] = c
    return LaurentPoly(out, ("s",))


def jones_via_bracket(b: BraidWord, limit: int | None = None) -> InvariantValue:
    """Jones polynomial from the Kauffman bracket with writhe normalisation."""
    return InvariantValue("jones", bracket_to_jones(kauffman_bracket(b, limit).poly, writhe(b)))


def jones_via_trace(b: BraidWord, limit: int | None = None, max_strands: int = 9) -> InvariantValue:
    """Jones polynomial through the Temperley-Lieb representation and its trace.

    ``sigma_i -> A e_i + A^-1`` and the trace closure divided by ``delta``
    reproduce the bracket; the normaliser ``delta`` becomes ``-(t+1)/sqrt(t)``
    at ``A = t^(-1/4)``.
    """
    from .projection import closure_trace, kauffman_preset, rho

    _check_limit(b, limit)
    x = rho(b, kauffman_preset(), max_strands=max_strands)
    closed = LaurentPoly.coerce(closure_trace(x))
    A = LaurentPoly.var("A")
    delta = -(A ** 2) - A ** -2
    quotient = closed / delta
    bracket = quotient.is_laurent() if hasattr(quotient, "is_laurent") else quotient
    if bracket is None:  # pragma: no cover - the closure always has a loop
        raise ArithmeticError("trace closure not divisible by delta")
    return InvariantValue("jones", bracket_to_jones(LaurentPoly.coerce(bracket), writhe(b)))


def mirror_t(value: InvariantValue) -> InvariantValue:
    """Apply ``t -> 1/t`` to a Jones value."""
    p = value.poly.align(("s",))
    return InvariantValue("jones", LaurentPoly({(-e[0],): c for e, c in p.terms.items()}, ("s",)))
