"""Binary-field arithmetic and the differential analysis of
x^(q^3+q^2+q-1) over F_(q^4), q = 2^n."""

from .decomp import (
    DecompExponents,
    Decomposition,
    decomp_exponents,
    decompose,
    enumerate_subgroup,
    find_generator,
    is_unity_root,
)
from .errors import (
    DomainError,
    FieldError,
    FieldMismatchError,
    InvariantViolation,
    ReducibleModulusError,
    ScanLimitError,
)
from .field import FieldCtx, FieldElement, make_binary_field, make_field, parse_field_spec
from .solver import (
    BClass,
    brute_force_solutions,
    classify_b,
    count_solutions,
    lambda_condition,
    lambda_enumerate,
    solve_closed,
    solve_constructive,
    solve_mu_case,
)
from .spectrum import SpectrumHistogram, brute_spectrum, closed_form_spectrum, diff_uniformity, verify_conjecture

__version__ = "0.1.0"
