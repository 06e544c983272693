"""Newton strata in minuscule Schubert cells for GSp_2n, decided exactly."""

from __future__ import annotations

from .bg import (
    GL,
    GSP,
    GroupTag,
    NewtonClass,
    embed_gsp_to_gl,
    enumerate_gsp,
    gl,
    gsp,
    is_basic,
    is_valid,
    kottwitz,
    validate,
)
from .errors import (
    CandidateLimitExceeded,
    HypothesisViolated,
    InternalConsistencyError,
    NewtonStrataError,
    ValidationError,
)
from .kernels import BACKEND
from .levi import (
    LeviBlocks,
    LeviCocharacter,
    OrderedPartition,
    build_mu_bar,
    centralizer_partition,
    levi_bruhat_leq,
    levi_degree,
    levi_dual,
    levi_kottwitz,
    split_blocks,
)
from .polygon import (
    Polygon,
    breakpoints,
    bruhat_leq,
    dual,
    partial_sums,
    polygon,
    slopewise_leq,
)
from .strata import (
    Decision,
    MinusculeShape,
    StratumCertificate,
    basic_nonempty,
    check_gap_hypothesis,
    decide,
    dual_equivalence,
    enumerate_nonempty,
    gl_necessary,
    twist_instance,
    verify_certificate,
)

__version__ = "0.1.0"
