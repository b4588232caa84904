"""Componentwise linear ideals over prime fields.

Groebner bases, minimal free resolutions, stable monomial ideals and several
decision procedures for componentwise linearity, together with closed-form
classifiers for Gorenstein, standard determinantal and symmetric-minor ideals.
"""
from .algebra import (DEFAULT_PRIME, DEGREVLEX, LEX, DegreeMatrix, HomogeneousMatrix, MonomialOrder,
                      Polynomial, PrimeField, linearize, normalize_degree_matrix)
from .betti import BettiTable
from .budget import Budget, BudgetExceeded
from .classifiers import (ConstructionMismatch, classify_determinantal, classify_gorenstein,
                          classify_symmetric, compute_tr, determinantal_companion, gorenstein_companion,
                          jozefiak_betti, jozefiak_shifts, minor_degeneracy_checks, symmetric_companion,
                          test_cwl_determinantal, test_cwl_symmetric)
from .criteria import (CwlVerdict, has_linear_resolution, test_cwl, test_cwl_direct, test_cwl_gin,
                       test_cwl_initial, test_cwl_linear_part)
from .groebner import GradedIdeal, RandomCoordinateChange, apply_coordinate_change, divide, gin_sample
from .monomial import (MonomialIdeal, NotStableError, SimplicialComplex, alexander_dual,
                       eliahou_kervaire, stanley_reisner)
from .resolutions import (GradedFreeComplex, UndecidedError, betti_table, is_acyclic, linear_part,
                          minimal_resolution, regularity, resolution_betti)
from .textio import ParseError, parse_document, parse_polynomial

__version__ = "0.1.0"
