"""Exact algorithms for rational first integrals of foliations of the
projective plane: dicritical resolution, virtual linear systems, candidate
fibre classes and the integrability decision for one dicritical divisor."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .poly import Poly, HomogeneousPolynomial, X, parse_poly
from .polyform import (AffineOneForm, ProjectiveOneForm, ProjectiveTwoForm, form_from_pencil,
                       is_first_integral, is_invariant, saturate, vector_field_to_form,
                       wedge_with_differential)
from .config import (ChartPoint, Configuration, DivisorClass, Point, canonical_class, delta_class,
                     exceptional_strict_class, intersect, line_class, primitive_representative,
                     validate)
from .resolution import resolve_dicritical
from .linsys import LinearSystemBasis, VirtualConditions, global_sections, projective_dimension
from .candidates import (SolutionSet, build_VS, compute_RFS, enumerate_Gamma, genus_degree_bound,
                         theorem1_bound)
from .integrator import (CandidatePair, FirstIntegral, algorithm1, algorithm2, algorithm3,
                         decide_dic1, genus_of_pencil, same_span)
