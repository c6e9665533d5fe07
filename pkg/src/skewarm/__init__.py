"""Armendariz-type properties of finite rings with an endomorphism.

Rings are explicit addition/multiplication tables; polynomial predicates are
decided by enumerating zero-product pairs up to a degree bound.
"""

from .constructions import (constant_diagonal_subring, coordinate_map, corner_ring, diagonal_ring,
                            direct_product, entrywise_map, frobenius, gf4, matrix_ring,
                            negate_coordinates, pattern_ring, product_map, relabel, swap_automorphism,
                            trivial_extension, truncated_polynomial_ring, upper_triangular, zmod)
from .endo import (MapError, RingMap, compose, enumerate_endomorphisms, fixes_idempotents, identity_map,
                   induced_quotient_map, inverse, is_compatible, is_rigid, map_order, transport, verify_map)
from .fixtures import Fixture, default_corpus, fixture_ids, paper_fixture
from .properties import (PROPERTIES, check_property, degree_pack, is_armendariz, is_central_armendariz,
                         is_central_skew_armendariz, is_central_skew_armendariz_over_polyring,
                         is_skew_armendariz, recheck_witness)
from .report import (FAILS, HOLDS_EXHAUSTIVELY, HOLDS_UP_TO_BOUND, HOLDS_UP_TO_BUDGET, PropertyReport,
                     ZeroPairWitness)
from .ring import (ElementSet, FiniteRing, RingAxiomError, center, idempotents, is_abelian, is_baer,
                   is_prime, is_reduced, is_right_pp, is_semiprime, quotient, two_sided_ideals, units,
                   validate_ring)
from .skewpoly import SkewPoly, enumerate_idempotent_polys, enumerate_zero_pairs, skew_mul
from .theorems import builtin_cases, run_case, run_harness

__version__ = "0.1.0"
