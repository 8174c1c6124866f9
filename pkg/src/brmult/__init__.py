"""Exact invariants of ideals and modules over a two-dimensional regular
local ring: certified colengths, Hilbert-Samuel and Buchsbaum-Rim
multiplicities, adjoints, integral closures and mechanized checks of the
length-multiplicity inequalities relating them.
"""

from .errors import (
    BrmultError,
    ExceedsCapError,
    GenericityError,
    InputError,
    PolyParseError,
    PreconditionError,
    PresentationUnavailableError,
    ResourceError,
)
from .field import get_char, set_char
from .poly import Poly, PolyMatrix, parse_poly
from .monomial import MonomialStaircase, random_ic_ideal
from .ideals import (
    Ideal,
    colength,
    colength_value,
    contains,
    equals,
    hs_multiplicity,
    is_reduction,
    mixed_multiplicity,
    power,
    product,
)
from .modules import (
    SubmoduleOfFree,
    colength_FM,
    direct_sum,
    family_Mabc,
    is_contracted,
    min_gens,
    minimalize_gens,
    module_of_ideal,
    split_free,
)
from .multiplicity import (
    br_limit_multiplicity,
    br_multiplicity,
    check_power_identity,
    closure_approx,
    closure_member,
    is_integrally_closed,
    minimal_reduction,
    sym_power_length,
)
from .presentation import (
    PresentationMatrix,
    adjoint_via_presentation,
    fitt_r1,
    keylem_check,
    presentation,
    psi,
    psi_inverse,
    reduction_first_presentation,
)

__version__ = "0.1.0"
