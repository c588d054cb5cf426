"""Verification suites: each maps a RunConfig to a SuiteResult of per-ℓ cases."""

# stdlib
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

# first party
from src.config import RunConfig
from src.models.module_vector import ModuleVector
from src.models.reports import CaseResult, CheckStatus, LiftStatus, SuiteResult
from src.models.ring_spec import RingKind, RingSpec
from src.models.weight_module import ModuleKind, WeightModule
from src.services import decomposition, fourier, generation, lift
from src.services.lie_realization import a_ell_generating_set, build_realization, verify_parabolic, verify_sp2n
from src.services.module_builder import (
    build_module,
    expected_dimension,
    expected_weight_range,
    graded_dimension,
)
from src.services.toric_rings import span_oracle
from src.utils import ceil_div

logger = logging.getLogger(__name__)

SuiteFunc = Callable[[RunConfig], SuiteResult]
CaseFunc = Callable[[RunConfig, int], CaseResult]
Applies = Callable[[int, int], Optional[str]]

SUITES: Dict[str, SuiteFunc] = {}


def register(name: str) -> Callable[[SuiteFunc], SuiteFunc]:
    def wrap(func: SuiteFunc) -> SuiteFunc:
        SUITES[name] = func
        return func

    return wrap


def get_suite(name: str) -> SuiteFunc:
    try:
        return SUITES[name]
    except KeyError:
        raise ValueError(f"Unknown suite: {name}. Known suites are: {sorted(SUITES)}")


def make_case(twist: Optional[int], checks: Dict[str, bool], details: Dict[str, Any]) -> CaseResult:
    """PASS iff every named check holds; failing names go into the summary."""
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        status, summary = CheckStatus.FAIL, "failed: " + ", ".join(failed)
    else:
        status, summary = CheckStatus.PASS, f"{len(checks)} checks passed"
    return CaseResult(twist=twist, status=status, summary=summary, details={"checks": checks, **details})


def _run_cases(name: str, config: RunConfig, applies: Applies, case: CaseFunc) -> SuiteResult:
    result = SuiteResult(name=name, rank=config.n)
    for ell in config.ells:
        reason = applies(config.n, ell)
        if reason:
            result.cases.append(CaseResult(twist=ell, status=CheckStatus.SKIPPED, summary=reason))
            continue
        try:
            outcome = case(config, ell)
        except ValueError as e:
            logger.error(f"Error during suite {name} at ell={ell}: {e}")
            outcome = CaseResult(
                twist=ell, status=CheckStatus.ERROR, summary=f"{type(e).__name__}: {e}"
            )
        logger.info(
            "Case finished",
            extra={"suite": name, "n": config.n, "ell": ell, "status": outcome.status.value},
        )
        result.cases.append(outcome)
    if not any(c.status != CheckStatus.SKIPPED for c in result.cases):
        result.cases.append(
            CaseResult(
                twist=None,
                status=CheckStatus.FAIL,
                summary="no twist in the requested range satisfies the hypothesis",
            )
        )
    return result


def _always(n: int, ell: int) -> Optional[str]:
    return None


def _module(config: RunConfig, kind: ModuleKind, ell: int) -> WeightModule:
    return build_module(kind, config.n, ell, window=config.window, window_depth=config.window_depth)


def weight_invariants(M: WeightModule) -> Dict[str, bool]:
    """z_ℓ acts by λ on each basis monomial; every 𝔄 generator shifts λ by −1, 0 or +1."""
    z_ok = all(
        M.act(M.weight_operator, ModuleVector.monomial(m)) == ModuleVector.monomial(m, w)
        for w in M.weights
        for m in M.basis_at(w)
    )
    shifts = {M.weight_shift(op) for _, op in a_ell_generating_set(M.realization)}
    return {"weight-eigenvalues": z_ok, "weight-shift": shifts <= {-1, 0, 1}}


def _labels_match(report, expected: Callable[[int], List[Fraction]], trusted_only: bool = True) -> bool:
    for w in report.weights:
        if trusted_only and not w.trusted:
            continue
        if not w.identified or w.profile != expected(w.weight):
            return False
    return True


def _trusted_primitive_weights(M: WeightModule) -> List[int]:
    return [p.weight for p in decomposition.find_primitive(M) if p.trusted]


# Suites


@register("relations")
def relations_suite(config: RunConfig) -> SuiteResult:
    n = config.n
    sp2n = verify_sp2n(build_realization(n, 0))

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        parabolic = verify_parabolic(build_realization(n, ell))
        return make_case(
            ell,
            {"parabolic": parabolic.passed},
            {"checks_run": len(parabolic.checks), "parabolic": parabolic},
        )

    result = _run_cases("relations", config, _always, case)
    result.cases.insert(
        0,
        make_case(
            None,
            {"sp2n": sp2n.passed},
            {"relation_failures": len(sp2n.failures), "sp2n": sp2n},
        ),
    )
    return result


@register("pbw-span")
def pbw_span_suite(config: RunConfig) -> SuiteResult:
    n = config.n
    singular = span_oracle(RingSpec(RingKind.SINGULAR_X, n), config.max_order, config.max_word_len)

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        report = span_oracle(
            RingSpec(RingKind.RESOLUTION_X, n, ell), cfg.max_order, cfg.max_word_len
        )
        return make_case(ell, {"all-spanned": report.all_spanned}, {"span": report})

    result = _run_cases("pbw-span", config, _always, case)
    result.cases.insert(0, make_case(None, {"all-spanned": singular.all_spanned}, {"span": singular}))
    return result


@register("cohres-dims")
def cohres_dims_suite(config: RunConfig) -> SuiteResult:
    def case(cfg: RunConfig, ell: int) -> CaseResult:
        n = cfg.n
        h0 = _module(cfg, ModuleKind.H0_RESX, ell)
        top = _module(cfg, ModuleKind.HTOP_RESX, ell)
        dims = {w: h0.dimension(w) for w in range(h0.window[0], h0.window[1] + 1)}
        expected = {w: expected_dimension(n, ell, w) for w in dims}
        top_range = expected_weight_range(ModuleKind.HTOP_RESX, n, ell)
        found_range = (min(top.weights), max(top.weights)) if top.weights else None
        checks = {
            "dimension-law": dims == expected,
            "h0-top-weight": h0.top_weight == expected_weight_range(ModuleKind.H0_RESX, n, ell)[1],
            "htop-nonempty-iff": (not top.is_empty()) == (ell <= -n),
            "htop-weight-range": found_range == top_range,
        }
        return make_case(
            ell,
            checks,
            {
                "h0_dimensions": dims,
                "expected_dimensions": expected,
                "htop_dimensions": {w: top.dimension(w) for w in top.weights},
            },
        )

    return _run_cases("cohres-dims", config, _always, case)


@register("module-t0pos")
def t0pos_suite(config: RunConfig) -> SuiteResult:
    def applies(n: int, ell: int) -> Optional[str]:
        return None if ell > 0 else "requires ell > 0"

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        n = cfg.n
        M = _module(cfg, ModuleKind.H0_RESX, ell)
        report = decomposition.weight_decompose(M)
        v = generation.module_generator(ModuleKind.H0_RESX, n, ell)
        report.generator = list(v)
        certificate = generation.check_generation(M, v, "certificate")
        closure = generation.check_generation(M, v, "closure")
        chain = decomposition.check_lemma_hw_chain(M)
        checks = {
            **weight_invariants(M),
            "unique-primitive-at-0": _trusted_primitive_weights(M) == [0],
            "irreducible": bool(report.irreducible),
            "labels": _labels_match(
                report, lambda w: [Fraction(0)] * (n - 2) + [Fraction(ell - 2 * w)]
            ),
            "generated-certificate": certificate.generated,
            "generated-closure": closure.generated,
            "hw-chain": chain.lemma_holds and chain.consistent,
        }
        return make_case(
            ell,
            checks,
            {"decomposition": report, "certificate": certificate, "closure": closure, "chain": chain},
        )

    return _run_cases("module-t0pos", config, applies, case)


@register("module-t0neg")
def t0neg_suite(config: RunConfig) -> SuiteResult:
    orbit = lift.weyl_orbit_check(config.n)

    def applies(n: int, ell: int) -> Optional[str]:
        return None if ell <= 0 else "requires ell <= 0"

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        n = cfg.n
        M = _module(cfg, ModuleKind.H0_RESX, ell)
        report = decomposition.weight_decompose(M)
        v = generation.module_generator(ModuleKind.H0_RESX, n, ell)
        report.generator = list(v)
        primitives = [p for p in decomposition.find_primitive(M) if p.trusted]
        hw = primitives[0].highest_weight_vectors if len(primitives) == 1 else []
        lifted = lift.lift_to_g(M, allow_zero_weight=True)
        report.lift_status = lifted.status
        expected_profile = [
            Fraction(c) for c in lift.primitive_weight_labels(n, odd=bool(ell % 2))
        ]
        certificate = generation.check_generation(M, v, "certificate")
        checks = {
            **weight_invariants(M),
            "unique-primitive-vector": hw == [list(v)],
            "irreducible": bool(report.irreducible),
            "lift": lifted.status == LiftStatus.LIFTED,
            "cartan-profile": lifted.cartan_profile == expected_profile,
            "generated-certificate": certificate.generated,
            "weyl-orbit": orbit.same_orbit,
        }
        details = {
            "primitive_vector": list(v),
            "decomposition": report,
            "lift": lifted,
            "certificate": certificate,
            "orbit": orbit,
        }
        if ell % 2 == 0:
            regular = lift.regular_functions_iso(M)
            checks["regular-functions-iso"] = regular.passed
            details["regular_functions"] = regular
        return make_case(ell, checks, details)

    return _run_cases("module-t0neg", config, applies, case)


@register("module-thres")
def thres_suite(config: RunConfig) -> SuiteResult:
    def applies(n: int, ell: int) -> Optional[str]:
        return None if ell <= -n else f"requires ell <= -{n}"

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        n = cfg.n
        M = _module(cfg, ModuleKind.HTOP_RESX, ell)
        report = decomposition.weight_decompose(M)
        v = generation.module_generator(ModuleKind.HTOP_RESX, n, ell)
        report.generator = list(v)
        certificate = generation.check_generation(M, v, "certificate")
        found = (min(M.weights), max(M.weights)) if M.weights else None
        checks = {
            **weight_invariants(M),
            "weight-range": found == (ceil_div(ell + n, 2), 0),
            "labels": _labels_match(
                report, lambda w: [Fraction(2 * w - ell - n)] + [Fraction(0)] * (n - 2)
            ),
            "irreducible": bool(report.irreducible),
            "generated-certificate": certificate.generated,
        }
        return make_case(
            ell,
            checks,
            {
                "decomposition": report,
                "certificate": certificate,
                "displayed_prefactor_matches": generation.displayed_agreement(certificate),
                "chain": decomposition.check_lemma_hw_chain(M),
            },
        )

    return _run_cases("module-thres", config, applies, case)


@register("fourier-iso")
def fourier_iso_suite(config: RunConfig) -> SuiteResult:
    n = config.n
    laws = fourier.check_automorphism_laws(n, pairs=100, max_order=3, seed=0)

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        report = fourier.verify_ring_iso(n, ell, cfg.iso_order)
        transported = fourier.transport_realization(
            build_realization(n, ell), fourier.ReflectionSpec(rank=n)
        )
        parabolic = verify_parabolic(transported)
        return make_case(
            ell,
            {"ring-iso": report.passed, "transported-parabolic": parabolic.passed},
            {"iso": report, "parabolic": parabolic},
        )

    result = _run_cases("fourier-iso", config, _always, case)
    result.cases.insert(
        0,
        make_case(None, {"automorphism-laws": laws.passed}, {"failures": [c.relation for c in laws.failures]}),
    )
    return result


@register("module-t0weight")
def t0weight_suite(config: RunConfig) -> SuiteResult:
    def applies(n: int, ell: int) -> Optional[str]:
        return None if ell >= 0 and ell % 2 == 0 else "requires even ell >= 0"

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        n = cfg.n
        M = _module(cfg, ModuleKind.H0_Y, ell)
        report = decomposition.weight_decompose(M)
        v = generation.module_generator(ModuleKind.H0_Y, n, ell)
        report.generator = list(v)
        certificate = generation.check_generation(M, v, "certificate")
        chain = decomposition.check_lemma_hw_chain(M)
        found = (min(M.weights), max(M.weights)) if M.weights else None
        checks = {
            **weight_invariants(M),
            "weight-range": found == (1, ell // 2 + 1),
            "labels": _labels_match(
                report, lambda w: [Fraction(0)] * (n - 2) + [Fraction(ell - 2 * w + 2)]
            ),
            "irreducible": bool(report.irreducible),
            "generated-certificate": certificate.generated,
            "hw-chain": chain.lemma_holds and chain.terminates and chain.reaches_all_weights,
        }
        return make_case(
            ell, checks, {"decomposition": report, "certificate": certificate, "chain": chain}
        )

    return _run_cases("module-t0weight", config, applies, case)


@register("module-tnweight")
def tnweight_suite(config: RunConfig) -> SuiteResult:
    def applies(n: int, ell: int) -> Optional[str]:
        if ell % 2:
            return "requires even ell"
        return None if ell <= -n - 2 else f"requires ell <= -{n + 2}"

    def case(cfg: RunConfig, ell: int) -> CaseResult:
        n = cfg.n
        M = _module(cfg, ModuleKind.HTOP_Y, ell)
        report = decomposition.weight_decompose(M)
        v = generation.module_generator(ModuleKind.HTOP_Y, n, ell)
        report.generator = list(v)
        certificate = generation.check_generation(M, v, "certificate")
        low = min(M.weights) if M.weights else None
        bounds = {
            "proof": ceil_div(ell + n, 2) + 1,
            "statement": ceil_div(ell + n, n) + 1,
        }
        total = sum(M.dimension(w) for w in M.weights)
        dual_twist = -ell - n - 2
        if dual_twist % 2 == 0:
            dual_module = build_module(ModuleKind.H0_Y, n, dual_twist)
            dual = sum(dual_module.dimension(w) for w in dual_module.weights)
            dual_source = "enumerated"
        else:
            # H0 on Y is only built at even twists
            dual = graded_dimension(n, dual_twist)
            dual_source = "closed form (odd dual twist)"
        checks = {
            **weight_invariants(M),
            "weight-range": low == bounds["proof"] and M.top_weight == 0,
            "labels": _labels_match(
                report, lambda w: [Fraction(-(ell + n - 2 * w + 2))] + [Fraction(0)] * (n - 2)
            ),
            "irreducible": bool(report.irreducible),
            "generated-certificate": certificate.generated,
            "pairing": total == dual,
        }
        return make_case(
            ell,
            checks,
            {
                "decomposition": report,
                "certificate": certificate,
                "lowest_weight": low,
                "bound_matches": {k: b == low for k, b in bounds.items()},
                "pairing_dimensions": {"top": total, "dual_h0": dual},
                "pairing_dual": {"twist": dual_twist, "count": dual_source},
            },
        )

    return _run_cases("module-tnweight", config, applies, case)


@register("weyl-orbit")
def weyl_orbit_suite(config: RunConfig) -> SuiteResult:
    report = lift.weyl_orbit_check(config.n)
    return SuiteResult(
        name="weyl-orbit",
        rank=config.n,
        cases=[make_case(None, {"same-orbit": report.same_orbit}, {"orbit": report})],
    )
