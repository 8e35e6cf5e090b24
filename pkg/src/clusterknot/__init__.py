"""Exact knot invariants from braid words, projection algebras and cluster mutation."""

from .braid import BraidWord, closure_components, conjugate, parse_braid, stabilize, writhe
from .cluster import (
    Seed,
    bratteli_from_mutations,
    check_laurent_phenomenon,
    initial_seed,
    mutate_seed,
    mutation_graph,
    preset_seed,
)
from .errors import ClusterKnotError
from .laurent import LaurentPoly, RationalFn, is_laurent, parse_ratfn
from .projection import (
    AlgebraElement,
    ReducedWord,
    markov_trace,
    normal_form,
    paper_preset,
    parametric_preset,
    reduced_words,
    rho,
    rho_class,
    temperley_lieb_preset,
)
from .skein import (
    InvariantValue,
    homfly_skein,
    jones_skein,
    jones_via_bracket,
    jones_via_trace,
    kauffman_bracket,
)

__version__ = "0.1.0"
