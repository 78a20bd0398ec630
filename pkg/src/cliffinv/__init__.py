"""Conjugate polynomial invariants of the complex Clifford group and doubly-even self-dual codes."""
from .cyclo import Cyclo8, as_rational
from .codes import LinearCode, Codeword, dual, glue, read_code, parse_code
from .classify import CodeClass, canonical_form, enumerate_sdde
from .polynomial import ConjMonomial, ConjPolynomial
from .enumerators import ccwe, fwe, nu_by_inversion, nu_direct, macwilliams_transform
from .errors import CapExceeded, NotRational, SingularMatrix

__version__ = "0.1.0"
