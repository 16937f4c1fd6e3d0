"""Workbench for finitely presented graded associative algebras.

Builds quadratic algebra presentations, computes truncated noncommutative
Groebner bases, graded dimensions and Hilbert series, minimal free
resolutions with bigraded Betti tables, Yoneda products on Ext, and
machine-checks explicit complexes (composites, exactness, minimality) and
left-annihilator identities.
"""

__version__ = "0.1.0"

from .field import FieldError, PrimeField, Rationals, parse_field_spec
from .freealg import (Generator, NcPoly, Presentation,
                      graded_component_dim_free, multiply)
from .gbasis import (DegLex, GBError, IncompleteBasisError, TruncatedGB,
                     buchberger_truncated)
from .counting import NormalBasis, normal_word_counts, normal_words
from .series import PowerSeries, hilbert_series, invert_series
from .modules import (FreeModuleMap, GradedFreeModule, ModuleError, ModuleGB,
                      graded_kernel, image_dims, kernel_dims)
from .resolution import (BettiTable, KoszulityReport, koszulity_report,
                         left_annihilator_report, minimal_resolution,
                         verify_complex, verify_exactness, verify_minimality)
from .parser import (ParseError, format_presentation, parse_expression,
                     parse_presentation)
from .complexio import format_complex, parse_complex
from .yoneda import (ExtAlgebra, ExtClass, GenerationProfile, LiftError,
                     diagonal_power_span_dims, generation_profile,
                     yoneda_product)
from .constructions import (PaperComplex, build_B, build_C,
                            build_paper_complex, expected_betti_B,
                            expected_betti_C)
