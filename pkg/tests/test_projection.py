import itertools
import random
from fractions import Fraction

import pytest

from clusterknot.braid import BraidWord, conjugate, parse_braid, random_braid
from clusterknot.errors import PresetMismatch, StrandLimitExceeded
from clusterknot.laurent import LaurentPoly
from clusterknot.projection import (
    AlgebraElement,
    RelationPreset,
    ReducedWord,
    braid_relation_check,
    closure_loops,
    closure_trace,
    kauffman_preset,
    markov_trace,
    normal_form,
    paper_preset,
    parametric_preset,
    reduce_letters,
    reduced_words,
    rho,
    rho_class,
    temperley_lieb_preset,
    trace_key,
)

from oracles import catalan, closure_loop_count, commutation_class, rewrite_closure, tl_diagram

P = paper_preset()
TL = temperley_lieb_preset()
d = LaurentPoly.var("d")


def word(*runs):
    return ReducedWord(tuple(runs))


def elem(n, *pairs, preset=P):
    return AlgebraElement(n, {w: Fraction(c) if preset is P else c for w, c in pairs}, preset)


class TestBasis:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_catalan_sizes(self, n):
        assert len(reduced_words(n)) == catalan(n)

    def test_small_bases(self):
        assert [w.to_text() for w in reduced_words(1)] == ["1"]
        assert [w.to_text() for w in reduced_words(2)] == ["1", "e1"]
        assert {w.to_text() for w in reduced_words(3)} == {"1", "e1", "e2", "e1·e2", "e2e1"}

    def test_jones_normal_form_shape(self):
        for w in reduced_words(6):
            tops = [i for i, _ in w.runs]
            bottoms = [j for _, j in w.runs]
            assert tops == sorted(set(tops)) and bottoms == sorted(set(bottoms))
            assert all(j <= i < 6 for i, j in w.runs)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_basis_words_have_distinct_diagrams(self, n):
        diagrams = {tl_diagram(w.letters, n) for w in reduced_words(n)}
        assert len(diagrams) == catalan(n)
        assert all(loops == 0 for _, loops in diagrams)

    def test_text_and_json(self):
        w = word((2, 1), (5, 3))
        assert w.to_text() == "e2e1·e5e4e3"
        assert ReducedWord.from_json(w.to_json()) == w
        assert word().to_text() == "1"


class TestNormalForm:
    def test_sandwich(self):
        assert normal_form([1, 2, 1], P) == elem(3, (word((1, 1)), -2))

    def test_square(self):
        assert normal_form([1, 1], P) == elem(2, (word((1, 1)), 1))

    def test_far_commutation(self):
        nf = normal_form([3, 1], P)
        assert list(nf.terms) == [word((1, 1), (3, 3))]

    def test_temperley_lieb_sandwich(self):
        assert normal_form([1, 2, 1], TL) == elem(3, (word((1, 1)), LaurentPoly.constant(1)), preset=TL)
        assert normal_form([2, 2], TL) == elem(3, (word((2, 2)), d), preset=TL)

    def test_confluence_against_exhaustive_rewriting(self):
        # every word of length <= 6 over e1..e3
        for length in range(7):
            for letters in itertools.product((1, 2, 3), repeat=length):
                outcomes = rewrite_closure(letters)
                assert len(outcomes) == 1, letters
                (p, q, cls), = outcomes
                p2, q2, w = reduce_letters(letters)
                assert (p2, q2) == (p, q)
                assert w.letters in cls

    def test_agrees_with_planar_diagrams(self):
        """In TL(delta) the scalar is delta^loops and the word is the diagram."""
        rng = random.Random(7)
        n = 5
        by_diagram = {tl_diagram(w.letters, n)[0]: w for w in reduced_words(n)}
        for _ in range(300):
            letters = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 12)))
            p, q, w = reduce_letters(letters)
            matching, loops = tl_diagram(letters, n)
            assert by_diagram[matching] == w
            assert p == loops
            assert len(letters) - len(w) == p + 2 * q

    def test_trace_key_is_commutation_invariant(self):
        for letters in [(3, 1, 2), (1, 3, 2, 4), (4, 2, 1, 3)]:
            keys = {trace_key(v) for v in commutation_class(letters)}
            assert len(keys) == 1


class TestClosure:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_products_of_basis_words_are_scaled_basis_words(self, n):
        basis = reduced_words(n)
        for a in basis:
            ea = AlgebraElement.word(n, a, P)
            for b in basis:
                prod = ea * AlgebraElement.word(n, b, P)
                assert len(prod.terms) == 1

    def test_squares_against_oracle(self):
        """The square of each basis word, compared with brute-force rewriting."""
        not_proportional = []
        for n in range(1, 5):
            for w in reduced_words(n):
                p, q, w2 = reduce_letters(w.letters + w.letters)
                (p0, q0, cls), = rewrite_closure(w.letters + w.letters)
                assert (p, q) == (p0, q0) and w2.letters in cls
                scalar = P.scalar(p, q)
                assert scalar != 0
                assert (scalar == 1) == (q == 0)
                if w2 != w:
                    not_proportional.append((n, w.to_text(), w2.to_text()))
        assert all(n >= 4 for n, _, _ in not_proportional)
        # the square leaves the span of the word only when through-strands are lost
        for n, text, _ in not_proportional:
            w = next(v for v in reduced_words(n) if v.to_text() == text)
            m1, _ = tl_diagram(w.letters, n)
            m2, _ = tl_diagram(w.letters + w.letters, n)
            assert m1 != m2


class TestRepresentation:
    def test_generator_images(self):
        assert rho(parse_braid("s1"), P) == elem(2, (word(), 1), (word((1, 1)), 1))
        assert rho(parse_braid("s1^-1"), P) == elem(2, (word(), 1), (word((1, 1)), Fraction(-1, 2)))
        assert rho(parse_braid("s1^2"), P) == elem(2, (word(), 1), (word((1, 1)), 3))
        got = rho(parse_braid("s1 s2"), P)
        assert got == elem(3, (word(), 1), (word((1, 1)), 1), (word((2, 2)), 1), (word((1, 1), (2, 2)), 1))

    def test_rho_class(self):
        assert rho_class(parse_braid("s1")) == ((1, 1), 1)
        assert rho_class(parse_braid("s1^-1")) == ((2, -1), 2)
        vec, scale = rho_class(BraidWord(4))
        assert vec[0] == 1 and not any(vec[1:]) and scale == 1

    def test_homomorphism(self):
        rng = random.Random(8)
        for _ in range(100):
            n = rng.randint(2, 4)
            b1 = random_braid(rng, n, rng.randint(0, 5))
            b2 = random_braid(rng, n, rng.randint(0, 5))
            assert rho(b1 * b2, P) == rho(b1, P) * rho(b2, P)
            assert rho(b1 * b1.inverse(), P) == AlgebraElement.identity(n, P)

    def test_inverse_identity(self):
        for n in range(2, 7):
            one = AlgebraElement.identity(n, P)
            for i in range(1, n):
                e = AlgebraElement.generator(n, i, P)
                assert (e + one) * (e.scale(Fraction(-1, 2)) + one) == one

    def test_strand_limit(self):
        with pytest.raises(StrandLimitExceeded):
            rho(BraidWord(10, (1,)))

    def test_parametric_inverse(self):
        pp = parametric_preset()
        b = parse_braid("s1 s1^-1 s2^-1 s2")
        assert rho(b, pp) == AlgebraElement.identity(3, pp)

    def test_conjugation_changes_vector_but_not_trace(self):
        """Vector-level invariance fails; only the trace is invariant."""
        b = parse_braid("s1 s2")
        g = parse_braid("s1", 3)
        assert rho_class(conjugate(b, g)) != rho_class(b)


class TestBraidRelations:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_paper_and_parametric(self, n):
        assert braid_relation_check(n, paper_preset())
        assert braid_relation_check(n, parametric_preset())

    def test_kauffman_preset(self):
        assert braid_relation_check(4, kauffman_preset())

    def test_wrong_sandwich_sign_fails(self):
        bad = RelationPreset("bad", Fraction(1), Fraction(1), Fraction(1), Fraction(1))
        assert not braid_relation_check(3, bad)

    def test_beta_condition(self):
        """With alpha = 1 the relations hold exactly when beta = -(a+b)b/a^2."""
        for a, b in [(1, 1), (2, 3), (Fraction(1, 2), -1), (3, -1)]:
            a, b = Fraction(a), Fraction(b)
            good = -(a + b) * b / a ** 2
            assert braid_relation_check(3, RelationPreset("g", Fraction(1), good, a, b))
            assert not braid_relation_check(3, RelationPreset("w", Fraction(1), good + 1, a, b))


class TestMarkovTrace:
    def test_examples(self):
        assert markov_trace(AlgebraElement.identity(3, TL)) == LaurentPoly.constant(1)
        assert markov_trace(AlgebraElement.generator(2, 1, TL)) == d ** -1
        assert markov_trace(AlgebraElement.word(3, word((1, 1), (2, 2)), TL)) == d ** -2

    def test_wrong_preset(self):
        with pytest.raises(PresetMismatch):
            markov_trace(AlgebraElement.identity(2, P))

    def test_loop_counts_match_oracle(self):
        for n in range(1, 6):
            for w in reduced_words(n):
                assert closure_loops(w.letters, n) == closure_loop_count(w.letters, n)

    def _random_element(self, rng, n):
        basis = reduced_words(n)
        terms = {}
        for _ in range(3):
            terms[rng.choice(basis)] = LaurentPoly.constant(rng.randint(-3, 3)) + rng.randint(-1, 1) * d
        return AlgebraElement(n, terms, TL)

    def test_symmetry(self):
        rng = random.Random(9)
        for _ in range(100):
            x, y = self._random_element(rng, 4), self._random_element(rng, 4)
            assert markov_trace(x * y) == markov_trace(y * x)

    def test_markov_property(self):
        rng = random.Random(10)
        for _ in range(50):
            x = self._random_element(rng, 3)
            x4 = AlgebraElement(4, x.terms, TL)
            e3 = AlgebraElement.generator(4, 3, TL)
            assert markov_trace(x4 * e3) == markov_trace(x4) * d ** -1
            assert markov_trace(x4) == markov_trace(x)

    def test_non_monomial_delta_gives_rational_function(self):
        K = kauffman_preset()
        value = markov_trace(AlgebraElement.generator(2, 1, K))
        A = LaurentPoly.var("A")
        assert value * (-(A ** 2) - A ** -2) == 1

    def test_conjugation_invariance_of_represented_braids(self):
        K = kauffman_preset()
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(2, 4)
            b = random_braid(rng, n, rng.randint(0, 5))
            g = random_braid(rng, n, rng.randint(0, 3))
            assert closure_trace(rho(conjugate(b, g), K)) == closure_trace(rho(b, K))
