"""Exact arithmetic for base change conductors of tori over local fields.

The package computes conductors of induced tori three independent ways
(discriminant valuations, Lie-lattice cokernels, the Artin-conductor formula),
the chi/gamma Euler-characteristic invariants of bounded complexes of lattices
over a valuation ring, and the full imperfect-residue-field counterexample
pipeline where additivity and isogeny invariance fail.
"""

from .errors import (NotDivisibleError, PrecisionError, ValidationError,
                     WorkbenchError)
from .fields import PrimeField, RationalFunctionField
from .series import AtLeast, BaseDVR, LocalRingElement, dvr_valuation
from .algebras import (AlgebraElement, ExtensionData, FiniteFlatAlgebra, RingMap,
                       algebra_norm, algebra_valuation, discriminant_of_algebra,
                       embeddings_matrix, monogenic_algebra, polynomial_discriminant,
                       tower_algebra, tower_compositum, trivial_extension)
from .linalg import DVRMatrix
from .smith import (INFINITE, ElementaryDivisors, cokernel_length, matrix_rank,
                    smith_normal_form, smith_with_column_transform)
from .complexes import (BoundedComplex, cohomology_lengths, complex_chi,
                        complex_gamma, direct_sum)
from .galois import (FiniteGroup, GLattice, RamificationData, SaturatedSublattice,
                     additivity_from_formula, artin_conductor, fixed_sublattice,
                     isogeny_invariance_check, ramification_filtration_from_extension,
                     torus_conductor_formula)
from .conductor import (ConductorReport, InducedTorusSpec, ResolutionSpec,
                        additivity_defect, conductor_from_resolution,
                        conductor_induced_artin, conductor_induced_discriminant,
                        conductor_induced_liecoker, gamma_defect)
from .workbench import Workbench, load_workbench, load_workbench_file, parse_expression

__version__ = "0.1.0"
