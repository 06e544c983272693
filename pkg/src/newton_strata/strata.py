"""Nonemptiness of Newton strata in minuscule Schubert cells of GSp_2n.

Two independent routes decide a stratum for the ordinary shape:

* the direct polygon conditions (Bruhat bound, slopewise band, shared
  breakpoints), evaluated by :func:`decide` through the compiled kernel and
  by :func:`direct_conditions` through plain polygon operations;
* the Levi route of :func:`levi_certificate`, which reduces both classes to
  the centralizer M_alpha of ``nu_b``, builds the minuscule M_alpha
  cocharacter ``mu_bar`` and applies the basic-element criterion there.

Both require the gap hypothesis on ``nu_b``: distinct slopes differ by more
than 1.  Outside it :func:`decide` refuses instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import kernels
from .bg import GL, GSP, NewtonClass, enumerate_gsp, gsp, is_basic, kottwitz, validate
from .errors import (
    DimensionError,
    DiOutOfRange,
    HypothesisViolated,
    InternalConsistencyError,
    NonIntegerDi,
    NotBasic,
    NotMinuscule,
)
from .levi import (
    LeviCocharacter,
    OrderedPartition,
    build_mu_bar,
    centralizer_partition,
    has_reduction,
    is_levi_basic,
    levi_bruhat_leq,
    levi_degree,
    levi_dual,
    levi_kottwitz,
)
from .polygon import (
    Polygon,
    add,
    breakpoints,
    bruhat_leq,
    common_denominator,
    constant,
    dual,
    ordinary_cochar,
    shift,
    slopewise_leq,
)

BRUHAT = "Bruhat"
SLOPEWISE_LOWER = "SlopewiseLower"
SLOPEWISE_UPPER = "SlopewiseUpper"
BREAKPOINT = "Breakpoint"

_KERNEL_FAILURES = {
    kernels.FAIL_BRUHAT: BRUHAT,
    kernels.FAIL_SLOPEWISE_LOWER: SLOPEWISE_LOWER,
    kernels.FAIL_SLOPEWISE_UPPER: SLOPEWISE_UPPER,
    kernels.FAIL_BREAKPOINT: BREAKPOINT,
}
_CONDITION_ORDER = (BRUHAT, SLOPEWISE_LOWER, SLOPEWISE_UPPER, BREAKPOINT)

SIGN_NOTE = (
    "M_alpha Bruhat check uses nu_bt <= nu_b + dual(mu_bar); "
    "the minus-sign variant is not used"
)


@dataclass(frozen=True)
class MinusculeShape:
    """``mu = d * 1`` (central) or ``mu = d * 1 + mu_ord`` (ordinary)."""

    n: int
    d: int
    ordinary: bool

    def polygon(self) -> Polygon:
        base = ordinary_cochar(self.n) if self.ordinary else constant(2 * self.n, 0)
        return shift(base, self.d)

    def twisted(self, k: int = 1) -> "MinusculeShape":
        """``mu + k * 1``."""
        return MinusculeShape(self.n, self.d + k, self.ordinary)


@dataclass(frozen=True)
class StratumCertificate:
    alpha: OrderedPartition
    d_vector: tuple[int, ...]
    mu_bar: LeviCocharacter
    kappa_check: bool
    bruhat_check: bool
    basic_check: bool
    shift: int = 0
    kappa_b: tuple[Fraction, ...] = ()
    kappa_bt: tuple[Fraction, ...] = ()
    degree: tuple[Fraction, ...] = ()
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Decision:
    nonempty: bool
    failed_condition: Optional[str] = None
    certificate: Optional[StratumCertificate] = None
    # condition name -> True/False, or None when evaluation stopped earlier
    checks: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.nonempty != (self.certificate is not None):
            raise InternalConsistencyError("nonempty decision without certificate")
        if self.nonempty == (self.failed_condition is not None):
            raise InternalConsistencyError("failed condition on a nonempty decision")


def _require_gsp(*classes: NewtonClass) -> int:
    ns = set()
    for b in classes:
        if b.group.family != GSP:
            raise ValueError(f"expected a GSp class, got {b.group}")
        ns.add(b.group.n)
    if len(ns) != 1:
        raise DimensionError(f"classes live in different groups: {sorted(ns)}")
    return ns.pop()


def minuscule_normalize(mu: Polygon, n: int) -> MinusculeShape:
    """Recognize a minuscule dominant cocharacter of GSp_2n."""
    if len(mu) != 2 * n:
        raise DimensionError(f"need {2 * n} entries, got {len(mu)}")
    s = mu.slopes
    if any(x.denominator != 1 for x in s) or not mu.dominant:
        raise NotMinuscule(f"{mu} is not an integral dominant cocharacter")
    if len(set(s)) == 1:
        return MinusculeShape(n, int(s[0]), False)
    low = s[-1]
    if all(x == low + 1 for x in s[:n]) and all(x == low for x in s[n:]):
        return MinusculeShape(n, int(low), True)
    raise NotMinuscule(f"{mu} is neither d*1 nor d*1 + mu_ord")


def check_gap_hypothesis(b: NewtonClass) -> bool:
    distinct = sorted(set(b.nu.slopes))
    # adjacent gaps suffice: the smallest difference is between neighbours
    return all(hi - lo > 1 for lo, hi in zip(distinct, distinct[1:]))


def decide_central(b: NewtonClass, bt: NewtonClass, d: int) -> bool:
    _require_gsp(b, bt)
    return bt.nu == shift(b.nu, -d)


def direct_conditions(b: NewtonClass, bt: NewtonClass, d: int = 0) -> dict:
    """All four ordinary-shape conditions, evaluated with polygon operations.

    ``bt`` is the unshifted class; the conditions are checked for
    ``bt + d * 1`` against ``mu_ord``.
    """
    n = _require_gsp(b, bt)
    nu_bt = shift(bt.nu, d)
    star = dual(ordinary_cochar(n))
    upper_bound = add(b.nu, star)
    bt_breaks = {x for x, _ in breakpoints(nu_bt)}
    return {
        BRUHAT: bruhat_leq(nu_bt, upper_bound),
        SLOPEWISE_LOWER: slopewise_leq(nu_bt, b.nu),
        SLOPEWISE_UPPER: slopewise_leq(b.nu, shift(nu_bt, 1)),
        BREAKPOINT: all(x in bt_breaks for x, _ in breakpoints(b.nu)),
    }


def _scaled(*polys: Polygon) -> tuple[int, list[list[int]]]:
    unit = common_denominator([s for p in polys for s in p.slopes])
    return unit, [[int(s * unit) for s in p.slopes] for p in polys]


def levi_basic_criterion(
    nu_b: Polygon, nu_bt: Polygon, mu_bar: LeviCocharacter
) -> tuple[bool, bool, list, list, list]:
    """Basic-element criterion inside M_alpha.

    Returns ``(kappa_ok, bruhat_ok, kappa_b, kappa_bt, degree)``.
    """
    alpha = mu_bar.alpha
    kb = levi_kottwitz(nu_b, alpha)
    kt = levi_kottwitz(nu_bt, alpha)
    deg = levi_degree(mu_bar)
    kappa_ok = all(t == x - y for t, x, y in zip(kt, kb, deg))
    bound = LeviCocharacter(alpha, add(nu_b, levi_dual(mu_bar).slopes))
    bruhat_ok = levi_bruhat_leq(LeviCocharacter(alpha, nu_bt), bound)
    return kappa_ok, bruhat_ok, kb, kt, deg


def levi_certificate(b: NewtonClass, bt: NewtonClass, shift_by: int = 0) -> Optional[StratumCertificate]:
    """Constructive Levi route for the ordinary shape; None when it fails.

    Independent of the direct conditions: it only uses the reduction to
    M_alpha, the block-sum drops ``d_i`` and the basic criterion in M_alpha.
    ``shift_by`` is the central twist already applied to ``bt``.
    """
    _require_gsp(b, bt)
    alpha = centralizer_partition(b)
    if not has_reduction(bt, alpha):
        return None
    try:
        mb = build_mu_bar(b, bt, alpha)
    except (NonIntegerDi, DiOutOfRange):
        return None
    basic_ok = is_levi_basic(b, alpha)
    if not basic_ok:
        raise InternalConsistencyError(f"{b} is not central in its own centralizer")
    kappa_ok, bruhat_ok, kb, kt, deg = levi_basic_criterion(b.nu, bt.nu, mb.mu_bar)
    if not (kappa_ok and bruhat_ok):
        return None
    return StratumCertificate(
        alpha=alpha,
        d_vector=mb.d_vector,
        mu_bar=mb.mu_bar,
        kappa_check=kappa_ok,
        bruhat_check=bruhat_ok,
        basic_check=basic_ok,
        shift=shift_by,
        kappa_b=tuple(kb),
        kappa_bt=tuple(kt),
        degree=tuple(deg),
        notes=(SIGN_NOTE,),
    )


def _central_certificate(b: NewtonClass, d: int) -> StratumCertificate:
    alpha = centralizer_partition(b)
    zero = LeviCocharacter(alpha, constant(2 * b.n, 0))
    kb = levi_kottwitz(b, alpha)
    return StratumCertificate(
        alpha=alpha,
        d_vector=(0,) * (alpha.l + 1),
        mu_bar=zero,
        kappa_check=True,
        bruhat_check=True,
        basic_check=is_levi_basic(b, alpha),
        shift=d,
        kappa_b=tuple(kb),
        kappa_bt=tuple(kb),
        degree=tuple(levi_degree(zero)),
        notes=("central shape: the only nonempty stratum is the trivial modification",),
    )


def _checks_until(failed: Optional[str]) -> dict:
    """True before the failing condition, False at it, None after it."""
    stop = len(_CONDITION_ORDER) if failed is None else _CONDITION_ORDER.index(failed)
    return {
        name: True if i < stop else (False if i == stop else None)
        for i, name in enumerate(_CONDITION_ORDER)
    }


def decide(b: NewtonClass, bt: NewtonClass, mu: MinusculeShape) -> Decision:
    """Decide whether the stratum of ``bt`` in the cell of ``mu`` w.r.t. ``b`` is nonempty."""
    n = _require_gsp(b, bt)
    if mu.n != n:
        raise DimensionError(f"cocharacter is for n={mu.n}, classes for n={n}")
    if not check_gap_hypothesis(b):
        raise HypothesisViolated(f"two distinct slopes of {b.nu} differ by at most 1")
    # twisting bt by d * 1 moves the problem to d = 0
    nu_bt = shift(bt.nu, mu.d)
    if not mu.ordinary:
        # with mu = 0 the band collapses: nu_bt <= nu_b <= nu_bt slopewise
        failed = None
        if not bruhat_leq(nu_bt, b.nu):
            failed = BRUHAT
        elif not slopewise_leq(nu_bt, b.nu):
            failed = SLOPEWISE_LOWER
        elif not slopewise_leq(b.nu, nu_bt):
            failed = SLOPEWISE_UPPER
        checks = _checks_until(failed)
        if failed is None:
            return Decision(True, certificate=_central_certificate(b, mu.d), checks=checks)
        return Decision(False, failed_condition=failed, checks=checks)

    unit, (sb, st) = _scaled(b.nu, nu_bt)
    code = kernels.ordinary_conditions(sb, st, unit)
    failed = _KERNEL_FAILURES.get(code)
    checks = _checks_until(failed)
    if failed == BREAKPOINT:
        raise InternalConsistencyError(
            f"slopewise band holds but a breakpoint of {b.nu} is lost in {nu_bt}"
        )
    if failed is not None:
        return Decision(False, failed_condition=failed, checks=checks)
    shifted = NewtonClass(gsp(n), nu_bt)
    cert = levi_certificate(b, shifted, shift_by=mu.d)
    if cert is None:
        raise InternalConsistencyError(
            f"conditions hold for {b.nu}, {bt.nu} but the Levi route fails"
        )
    return Decision(True, certificate=cert, checks=checks)


def verify_certificate(b: NewtonClass, bt: NewtonClass, mu: MinusculeShape, cert: StratumCertificate) -> bool:
    """Re-derive a certificate from ``(b, bt, mu)`` and compare."""
    if cert.shift != mu.d:
        return False
    if not mu.ordinary:
        return shift(bt.nu, mu.d) == b.nu and cert == _central_certificate(b, mu.d)
    shifted = NewtonClass(gsp(b.n), shift(bt.nu, mu.d))
    return levi_certificate(b, shifted, shift_by=mu.d) == cert


def gl_necessary(b: NewtonClass, bt: NewtonClass, mu: Polygon) -> bool:
    """Necessary conditions for a nonempty GL stratum with a 0/1 cocharacter.

    Not sufficient: a True result does not certify nonemptiness.
    """
    for x in (b, bt):
        if x.group.family != GL:
            raise ValueError(f"expected a GL class, got {x.group}")
    if len(b.nu) != len(bt.nu) or len(mu) != len(b.nu):
        raise DimensionError("length mismatch")
    if any(x not in (0, 1) for x in mu.slopes) or not mu.dominant:
        raise ValueError(f"{mu} is not a dominant 0/1 cocharacter")
    return (
        bruhat_leq(bt.nu, add(b.nu, dual(mu)))
        and slopewise_leq(bt.nu, b.nu)
        and slopewise_leq(b.nu, shift(bt.nu, 1))
    )


def cochar_degree(group_family: str, n: int, mu: Polygon) -> Fraction:
    total = mu.total
    return total if group_family == GL else total / n


def basic_nonempty(b: NewtonClass, bt: NewtonClass, mu: Polygon) -> bool:
    """Criterion for strata attached to a basic ``b`` (split groups)."""
    if b.group != bt.group:
        raise DimensionError(f"{b.group} vs {bt.group}")
    if not is_basic(b):
        raise NotBasic(f"{b.nu} is not a line segment")
    kappa_ok = kottwitz(bt) == kottwitz(b) - cochar_degree(b.group.family, b.group.n, mu)
    return kappa_ok and bruhat_leq(bt.nu, add(b.nu, dual(mu)))


def dual_equivalence(b: NewtonClass, bt: NewtonClass, mu: MinusculeShape):
    """The equivalent problem with roles swapped and ``mu`` replaced by its dual."""
    _require_gsp(b, bt)
    if mu.ordinary:
        return bt, b, MinusculeShape(mu.n, -mu.d - 1, True)
    return bt, b, MinusculeShape(mu.n, -mu.d, False)


def twist_instance(b: NewtonClass, bt: NewtonClass, mu: MinusculeShape):
    """``(b, bt - 1, mu + 1)``, which has the same answer as ``(b, bt, mu)``."""
    return b, validate(bt.group, shift(bt.nu, -1)), mu.twisted(1)


def candidate_band(b: NewtonClass, mu: MinusculeShape) -> tuple[Polygon, Polygon, Fraction]:
    """Slopewise band and total that contain every possible ``nu_bt``."""
    n = b.n
    if mu.ordinary:
        lower = shift(b.nu, -(mu.d + 1))
        upper = shift(b.nu, -mu.d)
        return lower, upper, b.nu.total - n * (2 * mu.d + 1)
    target = shift(b.nu, -mu.d)
    return target, target, target.total


def enumerate_nonempty(
    b: NewtonClass, mu: MinusculeShape, *, max_candidates: Optional[int] = None
) -> list[NewtonClass]:
    """Every ``bt`` whose stratum is nonempty, in partial-sum lexicographic order."""
    _require_gsp(b)
    if not check_gap_hypothesis(b):
        raise HypothesisViolated(f"two distinct slopes of {b.nu} differ by at most 1")
    lower, upper, total = candidate_band(b, mu)
    candidates = enumerate_gsp(b.n, lower, upper, total, max_candidates=max_candidates)
    return [bt for bt in candidates if decide(b, bt, mu).nonempty]
