import json
import random
from fractions import Fraction

import pytest

from clusterknot.braid import BraidWord, parse_braid
from clusterknot.bridge import (
    bridge_report,
    homfly_exchange_check,
    homfly_exchange_system,
    homfly_spot_check,
    homfly_x4_discrepancy,
    jones_bridge,
    skein_exchange_identity_check,
    skein_exchange_numeric_check,
)
from clusterknot.errors import StrandMismatch
from clusterknot.laurent import RationalFn

s = RationalFn.var("s")
t = s ** 2


class TestJonesBridge:
    def test_n_zero_leaves_the_class(self):
        assert jones_bridge(parse_braid("s1"), 0) == 1 + t
        assert jones_bridge(BraidWord(2), 0) == RationalFn(1)

    def test_multiplier(self):
        base = jones_bridge(parse_braid("s1^2"), 0)
        assert jones_bridge(parse_braid("s1^2"), 3) == base * (-s / (t + 1)) ** 3

    def test_custom_class_values(self):
        got = jones_bridge(parse_braid("s1"), 0, class_values={"e1": RationalFn.var("c")})
        assert got == 1 - t ** 2

    def test_linearity(self):
        rng = random.Random(40)
        b = parse_braid("s1")
        for _ in range(10):
            v = (rng.randint(-5, 5), rng.randint(-5, 5))
            w = (rng.randint(-5, 5), rng.randint(-5, 5))
            a = rng.randint(-3, 3)
            combined = tuple(a * p + q for p, q in zip(v, w))
            assert jones_bridge(b, 0, vector=combined) == a * jones_bridge(b, 0, vector=v) + jones_bridge(b, 0, vector=w)

    def test_two_strands_only(self):
        with pytest.raises(StrandMismatch):
            jones_bridge(parse_braid("s1 s2"), 0)
        with pytest.raises(StrandMismatch):
            bridge_report(parse_braid("s1 s2"))


class TestIdentities:
    def test_skein_to_exchange(self):
        assert skein_exchange_identity_check()

    def test_perturbed_coefficient_fails(self):
        assert not skein_exchange_identity_check(plus_coeff=1 / (t ** 2 - 1))

    def test_numeric_residuals(self):
        assert skein_exchange_numeric_check(10) == [Fraction(0)] * 10

    def test_homfly_identity(self):
        assert homfly_exchange_check()
        assert homfly_exchange_system().relation().is_zero()

    def test_c3(self):
        assert homfly_exchange_system().c3 == 1 / RationalFn.var("c1")

    def test_spot_check(self):
        assert homfly_spot_check(Fraction(2), Fraction(3)) == 0

    def test_x4_as_written_differs_from_mutation(self):
        assert not homfly_x4_discrepancy()["equal"]


class TestReport:
    def test_sides_are_the_skein_value_and_the_bridge_value(self):
        from clusterknot.skein import jones_skein

        b = parse_braid("s1^-3")
        report = bridge_report(b, N=2)
        assert report.lhs == jones_skein(b).poly
        (candidate,) = report.candidates
        assert candidate["rhs"] == jones_bridge(b, 2)
        assert candidate["agree"] == (candidate["rhs"] == report.lhs)

    def test_trivial_closure_is_a_two_component_unlink(self):
        report = bridge_report(BraidWord(2), N=0)
        assert report.candidates[0]["rhs"] == RationalFn(1)
        assert not report.agree and report.notes

    def test_torus_family_reports_are_complete(self):
        for k in range(-7, 8):
            b = BraidWord(2, (1,) * k if k > 0 else (-1,) * (-k))
            data = json.loads(json.dumps(bridge_report(b).to_json()))
            assert set(data) >= {"braid", "N_candidates", "lhs", "convention"}
            assert [c["N"] for c in data["N_candidates"]] == list(range(7))
            assert all(isinstance(c["agree"], bool) for c in data["N_candidates"])

    def test_deterministic(self):
        b = parse_braid("s1^3")
        assert bridge_report(b).to_json() == bridge_report(b).to_json()
