"""pfhat: symmetric-group modules on extended parking functions.

PF̂_{n,c} consists of the words ``x ∈ Z_n^n`` whose first ``n-1`` letters form a
parking function and whose letters sum to ``c`` mod ``n``. S_n acts by the
twisted coordinate action, giving a permutation module τ_{n,c} of dimension
``n^{n-2}``. The package computes its characters, Frobenius characteristic,
orbit counts, the isomorphism classes among ``c = 1..n``, the rational
variant PF̂_{a,b,c}, and the slim-graph polynomial spans V_n.

Example:
    >>> import pfhat
    >>> from pfhat.models import ExtendedPF, Partition, Permutation
    >>>
    >>> pfhat.chi(6, 3, Partition.of(3, 3))
    9
    >>> x = ExtendedPF((0, 0, 0, 3), 4, 3)
    >>> pfhat.apply(Permutation.parse("1432"), x).word
    '1011'
    >>> pfhat.orbits_c1(6)
    13
"""

from pfhat.action import (
    apply,
    apply_rational,
    brute_character,
    build_epf_set,
    build_rational_epf_set,
    burnside_orbit_count,
    orbit_decomposition,
)
from pfhat.character import character_vector, chi, chi_c1, chi_cn, chi_rational
from pfhat.classify import c_set, class_count, classify, d_set
from pfhat.errors import InvariantError, PfhatError, ValidationError
from pfhat.models import (
    Basis,
    CharacterVector,
    Classification,
    ExtendedPF,
    OrbitReport,
    Partition,
    Permutation,
    SymFun,
)
from pfhat.orbits import orbit_report, orbits_c1, orbits_cn, orbits_rational_c1
from pfhat.parking import enumerate_pf, enumerate_rational, is_parking, is_rational_parking
from pfhat.settings import Settings, get_settings, set_settings
from pfhat.slimgraph import build_Vn, sigma_character_vector, verify_conjecture
from pfhat.symfun import frobenius, to_h, to_schur

__version__ = "0.1.0"

__all__ = [
    # Models
    "Basis",
    "CharacterVector",
    "Classification",
    "ExtendedPF",
    # Errors
    "InvariantError",
    "OrbitReport",
    "Partition",
    "Permutation",
    "PfhatError",
    # Settings
    "Settings",
    "SymFun",
    "ValidationError",
    # Action
    "apply",
    "apply_rational",
    "brute_character",
    "build_Vn",
    "build_epf_set",
    "build_rational_epf_set",
    "burnside_orbit_count",
    # Classification
    "c_set",
    # Characters
    "character_vector",
    "chi",
    "chi_c1",
    "chi_cn",
    "chi_rational",
    "class_count",
    "classify",
    "d_set",
    # Parking functions
    "enumerate_pf",
    "enumerate_rational",
    # Symmetric functions
    "frobenius",
    "get_settings",
    "is_parking",
    "is_rational_parking",
    "orbit_decomposition",
    # Orbits
    "orbit_report",
    "orbits_c1",
    "orbits_cn",
    "orbits_rational_c1",
    "set_settings",
    # Slim graphs
    "sigma_character_vector",
    "to_h",
    "to_schur",
    "verify_conjecture",
]
