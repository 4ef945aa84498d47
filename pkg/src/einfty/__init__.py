"""Exact E-infinity structure on cubical and simplicial chains.

The counit, Serre coproduct and degree 1 product on cubical chains, the
matching simplicial structure, cup-i coproducts and shuffle-graph
cooperations, Steenrod squares, and the Cartan-Serre and Eilenberg-Zilber
comparison maps.
"""
from .algebra import GF2, ZZ, Chain, Permutation, Ring, RingMismatchError, add, koszul_sign, permute_factors
from .comparison import cs_map, ez_map, ez_word
from .complexes import (
    ComplexError, LatticeCubicalComplex, PresentedCubicalSet, SimplicialComplex, TriangulatedComplex,
    load_complex, triangulate,
)
from .cubical import CubicalOperator, apply_operator, boundary, coproduct, counit, star
from .dsl import TermSyntaxError, parse_term, render_term
from .homology import (
    Cochain, CohomologyMod2, bockstein_oracle, cup_product, homology, smith_normal_form, steenrod_sq,
)
from .simplicial import ProductSimplex, aw_coproduct, join, s_boundary, s_counit
from .terms import (
    Compose, Cop, Counit, Id, Perm, Prod, ShuffleSpec, Tensor, cup_i, cup_i_closed, cup_i_recursive,
    evaluate, iterated_coproduct, iterated_product, shuffle_graph, shuffle_sigma, validate,
)

__version__ = "0.1.0"
