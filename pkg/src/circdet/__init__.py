"""circdet: determinants of circulant matrices built from binomial-expansion
rows, computed by three independent routes and cross-certified.

Routes:
  * exact closed forms (Gaussian integers) for z in {1, -1, i, -i},
  * the spectral product over the n-th roots of unity,
  * fraction-free elimination over Z[i] with exact interior divisions.
"""

from .binomial import (
    ClosedForm,
    UnsupportedZ,
    as_gaussian,
    binomial_row,
    closed_eigenvalue,
    closed_form_det,
    complex_power,
    conjugation_agrees,
    cross_identities_hold,
    det_spectral as binomial_det_spectral,
    pair_product,
    unit_name,
)
from .circulant import (
    EXACT,
    LEFT,
    RIGHT,
    SPECTRAL,
    DomainMismatch,
    bareiss_det,
    dense_matrix,
    det,
    det_spectral,
    eigenvalues,
    exchange_sign,
    product_in_order,
    unit_root,
    unit_roots,
)
from .gaussint import DivisionNotExact, GaussInt
from .trig import (
    IdentityReport,
    check_halfrange_product,
    check_parity_identity,
    check_squared_product,
    identity_suite,
    sin_half_pi,
)
from .verify import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "ClosedForm", "UnsupportedZ", "as_gaussian", "binomial_row",
    "closed_eigenvalue", "closed_form_det", "complex_power",
    "conjugation_agrees", "cross_identities_hold", "binomial_det_spectral",
    "pair_product", "unit_name",
    "EXACT", "LEFT", "RIGHT", "SPECTRAL", "DomainMismatch", "bareiss_det",
    "dense_matrix", "det", "det_spectral", "eigenvalues", "exchange_sign",
    "product_in_order", "unit_root", "unit_roots",
    "DivisionNotExact", "GaussInt",
    "IdentityReport", "check_halfrange_product", "check_parity_identity",
    "check_squared_product", "identity_suite", "sin_half_pi",
    "CheckResult", "run_all",
    "__version__",
]
