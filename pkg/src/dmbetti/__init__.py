"""Exact arithmetic for Betti vectors of graded differential modules.

The pipeline: build free differential modules (directly or by folding a
complex), minimalize to read off Betti vectors, and study where those
vectors live — the pair-decomposition cone over Q[t] with its homology
barcodes, pairings against sheaf cohomology, and exact polyhedral
descriptions of cones of flattened pure vectors.
"""

from .algebra import (DomainError, GradedMatrix, NotHomogeneous, ParseError,
                      Poly, Ring, RingMismatch, ShapeMismatch, is_homogeneous,
                      matrix_mul, rational_from_str, rational_to_str)
from .betti import (BadDegreeSequence, BettiTable, BettiVector,
                    check_degree_sequence, flatten, seq_leq, twist)
from .pure import WindowTooSmall, enumerate_pure_vectors, hk_table
from .dm import (ComplexRep, FreeDM, NonzeroDegree, NotMinimal, NotSquareZero,
                 PivotOnDiagonal, WrongRing, betti_vector, cancel_step,
                 coefficient_matrix, fold, is_finite_length_kt, is_minimal,
                 koszul, minimalize, random_finite_length_dm, validate)
from .kt import (Barcode, GradedAction, NotFiniteLength, NotInCone, PurePair,
                 barcode, betti_from_barcode, decompose, homology_action,
                 in_cone_T, is_chain, sigma, tau)
from .sheaves import (BadSheafSpec, LineBundle, Supernatural, as_line_bundle,
                      as_supernatural, gamma, gamma_window, sheaf_from_json)
from .pairing import (LinearFunctional, audit_conjecture, induced_functional,
                      phi_vector)
from .cones import ConeH, ConeV, equals_positive_orthant, membership, v_to_h
