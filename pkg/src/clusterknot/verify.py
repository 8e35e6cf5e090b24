"""Self-check suites shared by the command line and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .braid import BraidWord, all_reduced_words, conjugate, random_braid, stabilize
from .cluster import check_laurent_phenomenon, initial_seed, preset_seed
from .laurent import LaurentPoly, RationalFn
from .projection import (
    AlgebraElement,
    RelationPreset,
    braid_relation_check,
    paper_preset,
    parametric_preset,
    reduced_words,
)
from .skein import homfly_skein, jones_skein, jones_via_bracket

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _random_poly(rng: random.Random, names=("x", "y")) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, 4)):
        exps = tuple(rng.randint(-3, 3) for _ in names)
        terms[exps] = Fraction(rng.randint(-5, 5), rng.choice((1, 1, 2, 3)))
    return LaurentPoly(terms, names)


def suite_laurent(samples: int = 300, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        a, b, c = (_random_poly(rng) for _ in range(3))
        if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
            bad += 1
        if a * (b + c) != a * b + a * c or a * b != b * a or a + b != b + a:
            bad += 1
    checks = [Check("ring axioms", bad == 0, f"{samples} triples, {bad} failures")]
    idem = 0
    for _ in range(50):
        num, den = _random_poly(rng), _random_poly(rng)
        if den.is_zero():
            continue
        f = RationalFn(num * den, den * (LaurentPoly.var("x") + 1))
        if RationalFn(f.numerator, f.denominator) != f:
            idem += 1
    checks.append(Check("rational reduction idempotent", idem == 0, "50 samples"))
    for name, preset, depth in (("S02", "S02", 6), ("S11", "S11", 4)):
        for semifield in ("universal", "trivial"):
            rep = check_laurent_phenomenon(preset_seed(preset, semifield), depth)
            checks.append(
                Check(
                    f"Laurent phenomenon {name} depth {depth} ({semifield})",
                    rep.ok,
                    f"{len(rep.entries)} variables, {len(rep.violations)} violations",
                )
            )
    return checks


def suite_catalan(max_n: int = 8) -> list[Check]:
    sizes = [len(reduced_words(n)) for n in range(1, max_n + 1)]
    return [Check("basis sizes are Catalan numbers", sizes == CATALAN[1 : max_n + 1], ",".join(map(str, sizes)))]


def suite_braid_relations(max_n: int = 5) -> list[Check]:
    checks = []
    for maker in (paper_preset, parametric_preset):
        preset = maker()
        ok = all(braid_relation_check(n, preset) for n in range(3, max_n + 1))
        checks.append(Check(f"braid relations, {preset.name} preset, n<={max_n}", ok))
    wrong = RelationPreset("sandwich=+1", Fraction(1), Fraction(1), Fraction(1), Fraction(1))
    checks.append(Check("braid relations fail for e1e2e1 = e1", not braid_relation_check(3, wrong)))
    p = paper_preset()
    inv = True
    for n in range(2, 7):
        one = AlgebraElement.identity(n, p)
        for i in range(1, n):
            e = AlgebraElement.generator(n, i, p)
            if (e + one) * (e.scale(Fraction(-1, 2)) + one) != one:
                inv = False
    checks.append(Check("(e_i + 1)(-1/2 e_i + 1) = 1 for n<=6", inv))
    return checks


def suite_markov(pairs: int = 50, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    conj_bad = stab_bad = 0
    for _ in range(pairs):
        n = rng.randint(2, 4)
        b = random_braid(rng, n, rng.randint(0, 6))
        g = random_braid(rng, n, rng.randint(0, 3))
        c = conjugate(b, g)
        if jones_skein(c) != jones_skein(b) or homfly_skein(c) != homfly_skein(b):
            conj_bad += 1
        if jones_via_bracket(c) != jones_via_bracket(b):
            conj_bad += 1
    for _ in range(pairs):
        n = rng.randint(2, 4)
        b = random_braid(rng, n, rng.randint(0, 6))
        st = stabilize(b, rng.choice((1, -1)))
        if jones_skein(st) != jones_skein(b) or homfly_skein(st) != homfly_skein(b):
            stab_bad += 1
        if jones_via_bracket(st) != jones_via_bracket(b):
            stab_bad += 1
    return [
        Check("conjugation invariance", conj_bad == 0, f"{pairs} pairs, {conj_bad} failures"),
        Check("stabilization invariance", stab_bad == 0, f"{pairs} braids, {stab_bad} failures"),
    ]


def suite_oracle(max_crossings: int = 8, random_b4: int = 100, seed: int = 0) -> list[Check]:
    count = bad = 0
    for n in (2, 3):
        for b in all_reduced_words(n, max_crossings):
            count += 1
            if jones_skein(b) != jones_via_bracket(b):
                bad += 1
    rng = random.Random(seed)
    rcount = rbad = 0
    for _ in range(random_b4):
        b = random_braid(rng, 4, rng.randint(0, 12))
        rcount += 1
        if jones_skein(b) != jones_via_bracket(b):
            rbad += 1
    return [
        Check(f"skein = bracket on B2, B3 up to {max_crossings} crossings", bad == 0, f"{count} words, {bad} mismatches"),
        Check("skein = bracket on random B4 words", rbad == 0, f"{rcount} words, {rbad} mismatches"),
    ]


def suite_bridge_identities() -> list[Check]:
    from .bridge import homfly_exchange_check, homfly_spot_check, skein_exchange_identity_check

    return [
        Check("skein relation becomes the exchange relation", skein_exchange_identity_check()),
        Check("two-variable exchange system gives the HOMFLY skein shape", homfly_exchange_check()),
        Check("spot check at l=2, m=3", homfly_spot_check() == 0, f"residual {homfly_spot_check()}"),
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "laurent": suite_laurent,
    "catalan": suite_catalan,
    "braid-relations": suite_braid_relations,
    "markov": suite_markov,
    "oracle": suite_oracle,
    "bridge-identities": suite_bridge_identities,
}


def run_suite(name: str) -> list[tuple[str, list[Check]]]:
    names = list(SUITES) if name == "all" else [name]
    return [(n, SUITES[n]()) for n in names]
