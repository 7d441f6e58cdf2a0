"""Bent, vectorial bent and Z_{2^k}-bent functions on GF(2^m) x GF(2^m) from
spreads and spread-like partitions, with exact verification."""

from .boolfun import (PairingSpec, Spectrum, TruthTable, algebraic_degree, anf_degree, bent_dual,
                      dot_pairing, fwht, is_bent, moebius, trace_pairing, walsh_spectrum)
from .construct import (Assignment, ExponentPair, carlet, default_assignment, default_pi, exponent_pair,
                        mm, mm_dual_form, partition_bent, psap, spread_construction, theorem_main)
from .cyclo import CycloInt, cyc_conj, cyc_mul, unit_root
from .errors import (BentError, BoundViolation, InvalidArgument, InvalidAssignment, InvalidModulus,
                     NotBentError, PreconditionViolation)
from .gf import FieldSpec, SubfieldBasis, make_field, subfield_basis, subfield_elements
from .groupfun import (GenSpectrum, GroupFunction, GroupSpec, affine_space_check, components, compose,
                       gen_walsh, is_boolean_bent, is_generalized_bent, is_group_bent, is_vectorial_bent,
                       parseval_total, vector_components)
from .spread import (HYPER, Partition, desarguesian, gamma_labels, gamma_partition, is_partial_spread,
                     preimage_partition)

__version__ = "0.1.0"
