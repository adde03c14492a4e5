"""1-perfect codes in Doob graphs D(m, n)."""

from .algebra import F4Element, Z4Element, f4_add, f4_dot, f4_mul, z4_dot
from .component_codes import (
    CosetLabel,
    build_component_code,
    build_substitution_map,
    coset_label,
    coset_structure,
    lemma3_counting,
    min_distance,
)
from .doob_code import (
    CapExceeded,
    DoobPerfectCode,
    InadmissibleParameters,
    check_admissibility,
)
from .hamming import HammingCode, build_check_matrix
from .metrics import (
    DoobShape,
    DoobVertex,
    ShapeMismatch,
    ball,
    doob_distance,
    k4_distance,
    neighbors,
    parse_vertex,
    shrikhande_distance,
)
from .verifier import (
    VerificationReport,
    bench_decode,
    run_lemma_suite,
    verify_exhaustive,
    verify_sampled,
)

__version__ = "0.1.0"
