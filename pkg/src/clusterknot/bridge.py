"""Comparisons between the braid representation, cluster mutation and skein theory.

* :func:`jones_bridge` evaluates the integer class of ``rho(b)`` for a
  two-strand braid at ``x = t``, ``c = -t^2`` and multiplies by
  ``(-sqrt(t)/(t+1))^N``.
* :func:`skein_exchange_identity_check` confirms symbolically that the
  rescaled Jones skein relation is the exchange relation at ``c_k = -t^2``.
* :func:`homfly_exchange_check` rebuilds the two-variable mutation system,
  the combination ``W`` and the relation ``c1 x3 + x5/c1 + c2 W = 0``, then
  specialises it to ``c1 = x1 = l`` and ``c2 = x2 = m``.
* :func:`bridge_report` sets the skein Jones polynomial beside the bridge
  value for a range of ``N``.  Agreement is recorded, never assumed.

Everything in this module is in the variable ``s`` with ``s^2 = t``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .braid import BraidWord
from .cluster import initial_seed, mutate_seed
from .errors import StrandMismatch
from .laurent import LaurentPoly, RationalFn
from .projection import basis_labels, rho_class
from .skein import jones_skein

__all__ = [
    "jones_bridge",
    "class_expression",
    "skein_exchange_identity_check",
    "skein_exchange_numeric_check",
    "homfly_exchange_system",
    "homfly_exchange_check",
    "homfly_spot_check",
    "homfly_x4_discrepancy",
    "BridgeReport",
    "bridge_report",
]

CONVENTION = "s^2 = t; x -> t, c -> -t^2; [1] -> 1, [e1] -> x; class vector with denominators cleared"


def _s() -> RationalFn:
    return RationalFn.var("s")


def _t() -> RationalFn:
    return _s() ** 2


def default_evaluation() -> dict[str, RationalFn]:
    t = _t()
    return {"x": t, "c": -(t ** 2)}


def default_class_values() -> dict[str, RationalFn]:
    return {"1": RationalFn(1), "e1": RationalFn.var("x")}


def class_expression(vector: Iterable[int], class_values: Mapping[str, RationalFn] | None = None) -> RationalFn:
    """The formal expression ``sum a_i [eps_i]`` over the two-strand basis ``{1, e1}``."""
    values = dict(default_class_values())
    if class_values:
        values.update(class_values)
    total = RationalFn(0)
    for coeff, label in zip(vector, basis_labels(2)):
        if coeff:
            total = total + RationalFn.coerce(values[label]) * coeff
    return total


def jones_bridge(
    b: BraidWord,
    N: int,
    evaluation: Mapping[str, RationalFn] | None = None,
    class_values: Mapping[str, RationalFn] | None = None,
    vector: Iterable[int] | None = None,
) -> RationalFn:
    """``(-s/(s^2+1))^N`` times the evaluated class of ``rho(b)``.

    ``vector`` overrides the class vector (used to test linearity).
    """
    if b.strands != 2:
        raise StrandMismatch("the bridge is defined on two-strand braids only")
    if N < 0:
        raise ValueError("N must be nonnegative")
    vec = tuple(vector) if vector is not None else rho_class(b)[0]
    expr = class_expression(vec, class_values)
    ev = dict(default_evaluation())
    if evaluation:
        ev.update(evaluation)
    evaluated = expr.substitute(ev)
    s = _s()
    factor = (-s / (s ** 2 + 1)) ** N
    return evaluated * factor


# ---------------------------------------------------------------------------
# symbolic identities


def skein_exchange_identity_check(
    plus_coeff: RationalFn | None = None,
    minus_coeff: RationalFn | None = None,
) -> bool:
    """Both halves of the skein-to-exchange argument, as exact identities.

    First, ``V = p W+ + q W-`` with ``W(+-) = -(t+1)/sqrt(t) V(+-)`` must
    reproduce ``t^-1 V- - t V+ = (s - 1/s) V``.  Second, putting
    ``V = x'``, ``W+ = P+/x``, ``W- = P-/x`` must give the exchange relation
    ``x' = (c P+ + P-)/((c + 1) x)`` at ``c = -t^2``.  ``p`` and ``q``
    default to ``t^2/(t^2-1)`` and ``-1/(t^2-1)``; passing other values
    perturbs the relation.
    """
    s, t = _s(), _t()
    p = plus_coeff if plus_coeff is not None else t ** 2 / (t ** 2 - 1)
    q = minus_coeff if minus_coeff is not None else -1 / (t ** 2 - 1)
    v_plus, v_minus = RationalFn.var("Vp"), RationalFn.var("Vm")
    norm = -(t + 1) / s
    v_link = p * (norm * v_plus) + q * (norm * v_minus)
    first = (s - 1 / s) * v_link - (v_minus / t - t * v_plus)

    p_plus, p_minus, x = RationalFn.var("Pp"), RationalFn.var("Pm"), RationalFn.var("xk")
    c = -(t ** 2)
    via_skein = p * (p_plus / x) + q * (p_minus / x)
    exchange = (c * p_plus + p_minus) / ((c + 1) * x)
    second = via_skein - exchange
    return first.is_zero() and second.is_zero()


def skein_exchange_numeric_check(samples: int = 10, seed: int = 0) -> list[Fraction]:
    """Residuals of the rescaled skein relation at random rational ``s`` (so ``t = s^2``)."""
    rng = random.Random(seed)
    residuals = []
    while len(residuals) < samples:
        s = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
        t = s * s
        if t in (0, 1):
            continue
        vp = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        vm = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        norm = -(t + 1) / s
        v_link = t * t / (t * t - 1) * norm * vp - 1 / (t * t - 1) * norm * vm
        residuals.append((s - 1 / s) * v_link - (vm / t - t * vp))
    return residuals


@dataclass
class HomflySystem:
    x3: RationalFn
    x4: RationalFn
    x5: RationalFn
    c3: RationalFn
    W: RationalFn

    def relation(self) -> RationalFn:
        c1, c2 = RationalFn.var("c1"), RationalFn.var("c2")
        return c1 * self.x3 + self.x5 / c1 + c2 * self.W


def homfly_exchange_system() -> HomflySystem:
    """The two-variable system exactly as written, with ``W`` kept verbatim."""
    x1, x2 = RationalFn.var("x1"), RationalFn.var("x2")
    c1, c2 = RationalFn.var("c1"), RationalFn.var("c2")
    x3 = (c1 + x2 ** 2) / ((c1 + 1) * x1)
    x4 = (c2 * x3 ** 2 + 1) / ((c2 + 1) * x2)
    c3 = 1 / c1
    x5 = (c3 + x4 ** 2) / ((c3 + 1) * x3)
    inner = (
        (c1 + x2 ** 2 - x1 * x3) / (c2 ** 2 * x1)
        + (c1 ** -1 - x3 * x5) / (c2 ** 2 * x3)
        + (1 / x3) * ((c2 * x3 ** 2 + 1) / (c2 * (c2 + 1) * x2)) ** 2
    )
    return HomflySystem(x3, x4, x5, c3, -c2 * inner)


def _homfly_substitution() -> dict[str, RationalFn]:
    l, m = RationalFn.var("l"), RationalFn.var("m")
    return {"c1": l, "x1": l, "c2": m, "x2": m}


def homfly_exchange_check() -> bool:
    """The relation holds identically, ``c3 = 1/c1`` matches mutation, and the
    specialisation has the shape ``l P+ + l^-1 P- + m P0 = 0``."""
    sys = homfly_exchange_system()
    if not sys.relation().is_zero():
        return False
    seed = initial_seed([[0, 2], [-2, 0]])
    if mutate_seed(seed, 1).coeffs[0] != sys.c3:
        return False
    sub = _homfly_substitution()
    l, m = sub["c1"], sub["c2"]
    p_plus, p_minus, p_zero = (f.substitute(sub) for f in (sys.x3, sys.x5, sys.W))
    shaped = l * p_plus + p_minus / l + m * p_zero
    return shaped.is_zero() and sys.relation().substitute(sub).is_zero()


def homfly_spot_check(l: Fraction = Fraction(2), m: Fraction = Fraction(3)) -> Fraction:
    """Residual of the specialised relation at ``c1 = x1 = l``, ``c2 = x2 = m``."""
    sys = homfly_exchange_system()
    return sys.relation().evaluate({"c1": l, "x1": l, "c2": m, "x2": m})


def homfly_x4_discrepancy() -> dict:
    """How the written ``x4`` compares with a second mutation of the seed.

    Returned for documentation: the written formula keeps ``c2`` unchanged
    and places it on the ``x3^2`` term.
    """
    sys = homfly_exchange_system()
    seed = mutate_seed(mutate_seed(initial_seed([[0, 2], [-2, 0]]), 1), 2)
    return {"written": sys.x4.to_text(), "mutation": seed.cluster[1].to_text(), "equal": sys.x4 == seed.cluster[1]}


# ---------------------------------------------------------------------------
# report


@dataclass
class BridgeReport:
    braid: BraidWord
    lhs: LaurentPoly
    candidates: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return any(c["agree"] for c in self.candidates)

    @property
    def N_used(self) -> int | None:
        for c in self.candidates:
            if c["agree"]:
                return c["N"]
        return None

    def to_json(self) -> dict:
        return {
            "braid": self.braid.to_json() | {"text": str(self.braid)},
            "lhs": {"text": _jones_text(self.lhs), "poly": self.lhs.to_json()},
            "N_candidates": [
                {"N": c["N"], "rhs": c["rhs"].to_text(), "rhs_json": c["rhs"].to_json(), "agree": c["agree"]}
                for c in self.candidates
            ],
            "N_used": self.N_used,
            "agree": self.agree,
            "convention": CONVENTION,
            "notes": self.notes,
        }


def _jones_text(p: LaurentPoly) -> str:
    from .skein import InvariantValue

    return InvariantValue("jones", p).to_text()


def bridge_report(
    b: BraidWord,
    N: int | None = None,
    N_range: Iterable[int] = range(0, 7),
    evaluation: Mapping[str, RationalFn] | None = None,
    class_values: Mapping[str, RationalFn] | None = None,
) -> BridgeReport:
    """Skein Jones polynomial against the bridge value for an explicit ``N`` or a range."""
    if b.strands != 2:
        raise StrandMismatch("the bridge is defined on two-strand braids only")
    lhs = jones_skein(b).poly
    report = BridgeReport(b, lhs)
    for n in ([N] if N is not None else list(N_range)):
        rhs = jones_bridge(b, n, evaluation, class_values)
        report.candidates.append({"N": n, "rhs": rhs, "agree": rhs == lhs})
    if not report.agree:
        report.notes.append("no candidate N reproduces the skein value under this convention")
    return report
