"""Exact Burau representations of B3 and B4 and their real specializations."""

from .braid import BraidWord, concat, exponent_sum, inverse, named_word, parse_word, print_word, sigma
from .burau import (RealMatrix, SquierForm, burau, conjugated_generators, derive_squier_form,
                    generator_matrix, specialize, specialize_word, verify_duality, verify_squier)
from .classifier import SpecializationVerdict, classify, duality_check
from .errors import (BurauError, IncompatibleFieldError, InvariantError, PreconditionError,
                     WordSyntaxError, ZeroSpecializationError)
from .figures import render_disk_figure
from .forensics import (GaloisCertificate, UnfaithfulnessCertificate, b4_kernel_pair_check,
                        entry21_polynomial, galois_discreteness_certificate, hunt_unfaithful,
                        unipotent_extension_check)
from .laurent import IntPoly, LaurentMatrix, LaurentPoly, RootInterval, isolate_real_roots
from .moebius import (INF, IsometryClass, RotationData, classify_isometry, fixed_points,
                      mobius_apply, orbit_accumulation_test, pingpong_certificate,
                      rotation_data)
from .scalars import QuadNum, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
