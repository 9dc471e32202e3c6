"""frobcalc: exact characteristic-p commutative algebra over prime fields.

Frobenius splitting tests with re-verifiable certificates, pushforward
module decompositions, Koszul-homology codepth, graded Betti tables with a
brute-force oracle, and bound reports for pushforward levels and
generation exponents.
"""

__version__ = "0.1.0"

from .errors import (
    ExponentOverflowError,
    FrobcalcError,
    NonArtinianError,
    NotFSplitError,
    ParseError,
    ResourceGuardError,
    RingMismatchError,
    UnsupportedIdealClassError,
    VerificationError,
)
from .ideals import (
    CIIdeal,
    MonomialIdeal,
    bracket_power,
    build_ideal,
    ci_colon,
    in_bracket_max,
    max_bracket_ideal,
    monomial_colon,
    parse_ideal_spec,
    pushforward_min_generators,
)
from .koszul import (
    betti_power_formula,
    brute_betti,
    codepth,
    depth_from_codepth,
    koszul_differential,
    koszul_homology,
    strand_check,
)
from .levels import (
    BoundReport,
    f_level_bounds,
    generation_exponent,
    semisimple_pushforward_exponent,
)
from .polyring import (
    Polynomial,
    PolyRing,
    frobenius_power,
    is_prime,
    monomials_of_degree,
    parse_polynomial,
)
from .pushforward import (
    ConicDecomposition,
    CyclicDecomposition,
    FrobeniusModule,
    alpha,
    alpha_by_enumeration,
    ci_filtration_check,
    cyclic_decompose,
    pn_pushforward,
    pushforward_module,
    strand_module,
    veronese_decompose,
)
from .splitting import (
    SplitCertificate,
    TwistSpectrum,
    graded_summand_test,
    is_f_split,
    k_summand_test,
    twist_spectrum,
    witness_from_proof,
)
