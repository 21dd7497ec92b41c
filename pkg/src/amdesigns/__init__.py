"""Exact toolkit for binary codes, harmonic enumerators and support designs.

The pieces fit together like this: ``gf2`` holds the exact code algebra,
``polynomials`` the enumerator arithmetic, ``harmonics`` the kernel functions
and their MacWilliams-type transform, ``designs`` the t-design machinery,
``amcore`` the equality-form applicability analysis and identity checks, and
``search`` the parameter scans.  ``cli`` ties them to a command line.
"""

from importlib import resources

from .amcore import AmStatus, am_applicability, classify_main1, verify_det_identities
from .designs import (
    BlockDesign,
    DesignReport,
    delta_s,
    design_strength,
    is_t_design_direct,
    is_t_design_harmonic,
    support_design,
)
from .errors import CapacityError, IntegralityError, ParseError
from .gf2 import ENUMERATION_CAP, BinaryCode
from .harmonics import HarmonicFn, bachoc_transform, bachoc_z, harm_basis, harmonic_enumerator, tilde
from .polynomials import HomPoly2, RatPoly, macwilliams
from .search import (
    SearchRecord,
    bracket_t12,
    bracket_t13,
    certify_with_code,
    golay_uniqueness,
    prop52_closed_forms,
    reproduce_table_b,
    search_case_63,
)

__version__ = "0.1.0"


def data_path(name: str):
    """Path to one of the bundled fixture files."""
    return resources.files("amdesigns.data").joinpath(name)
