"""Exact computations around the E8 root system: root data, Artin groups and their
Garside normal forms, plane curve germs, Weierstrass gap sequences and the
homology-level transvection representation."""

from .artin_garside import (
    ArtinWord,
    GarsideNormalForm,
    are_equal,
    conjugation_by_delta,
    degree,
    garside_element,
    generator,
    inn_equal,
    is_central,
    normal_form,
    parse_word,
)
from .monodromy import (
    SymplecticConfig,
    build_config,
    check_geometric_relations,
    delta_image,
    kernel_search,
    rep_word,
    transvection,
    verify_kernel_certificate,
)
from .polynomials import BivariatePoly, parse_poly
from .root_systems import (
    DynkinDiagram,
    RootSystem,
    WeylElement,
    build_diagram,
    coxeter_number,
    enumerate_positive_roots,
    invariant_degrees,
    longest_element,
    parse_diagram,
)
from .semigroups import GapSequence, NumericalSemigroup, classify_genus4, from_generators, gaps_to_semigroup, spin_parity
from .singularities import build_versal, fiber_is_smooth, milnor, orbit_descriptor

__version__ = "0.1.0"
