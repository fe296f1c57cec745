"""Minimal symplectic fillings of lens spaces via admissible zero tuples."""

from .fillings import (
    Extremal,
    Filling,
    LensSpace,
    extremal_form,
    fib_level,
    fibonacci,
    fillings_of,
    lens_canonical,
    lens_homeomorphic,
    lens_homeomorphic_unoriented,
    pi1_order,
)
from .rationals import (
    INFINITY,
    apply_word,
    cf_eval,
    cf_len,
    cf_measures,
    cf_U,
    cf_V,
    convergents,
    hj_expand,
    make_fraction,
    op_S,
    op_T,
    st_decompose,
)
from .theorems import (
    ScanReport,
    equality_census_d2,
    equality_census_fib,
    run_all,
    verify_cf_identities,
    verify_divisibility_bound,
    verify_fibonacci_extremal,
    verify_length_bound,
)
from .tridiag import det_M, is_psd_rank_at_least, multilinearity_expand, psd_rank
from .zero_tuples import (
    blow_down,
    blow_up,
    enumerate_bounded,
    enumerate_zero_tuples,
    is_admissible_zero,
    is_admissible_zero_psd,
)

__version__ = "0.1.0"
