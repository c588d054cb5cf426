# stdlib
import logging
from typing import Dict, List, Optional, Tuple

# first party
from src.errors import StructuralError
from src.models.module_vector import Monomial
from src.models.realization import Realization
from src.models.weight_module import ModuleKind, SupportPredicate, WeightModule
from src.services.fourier import ReflectionSpec, transport_realization
from src.services.lie_realization import build_realization
from src.utils import binomial, ceil_div

logger = logging.getLogger(__name__)

DEFAULT_WINDOW_DEPTH = 6


def scan_range(n: int, ell: int) -> Tuple[int, int]:
    """Weights that can carry a nonempty space for any of the four kinds."""
    return -abs(ell) - n - 2, abs(ell) + 2


def expected_weight_range(kind: ModuleKind, n: int, ell: int) -> Optional[Tuple[Optional[int], int]]:
    """Closed-form (low, high) weight range; low is None when unbounded below.

    Returns None for a module that is zero.
    """
    if kind == ModuleKind.H0_RESX:
        return (None, min(0, ell // 2))
    if kind == ModuleKind.HTOP_RESX:
        return (ceil_div(ell + n, 2), 0) if ell <= -n else None
    if kind == ModuleKind.H0_Y:
        return (1, ell // 2 + 1) if ell >= 0 else None
    return (ceil_div(ell + n, 2) + 1, 0) if ell <= -n - 2 else None


def expected_dimension(n: int, ell: int, weight: int) -> int:
    """dim M^λ of H⁰ on the resolution: degree-(ℓ−2λ) forms in n variables."""
    degree = ell - 2 * weight
    if degree < 0 or weight > 0:
        return 0
    return binomial(degree + n - 1, n - 1)


def realization_for(kind: ModuleKind, n: int, ell: int) -> Realization:
    """𝔄_ℓ realization on the resolution, F_I of the 𝔄_{ℓ+2} one on Y."""
    if kind.on_resolution:
        return build_realization(n, ell)
    return transport_realization(build_realization(n, ell + 2), ReflectionSpec(rank=n))


def build_module(
    kind: ModuleKind,
    n: int,
    ell: int,
    window: Optional[Tuple[int, int]] = None,
    window_depth: int = DEFAULT_WINDOW_DEPTH,
) -> WeightModule:
    """Enumerate a cohomology module and wire its action table.

    Args:
        kind: Which of the four families.
        n: Rank.
        ell: Twist ℓ.
        window: Inclusive weight range; derived when omitted. Finite modules
            get their whole support, H⁰ on the resolution gets
            ``window_depth`` weights down from its top.
        window_depth: Depth of the derived window for the infinite module.

    Returns:
        The module; a zero module comes back with no weight spaces.

    Raises:
        StructuralError: If the window is reversed or the depth not positive.
        PreconditionError: For a Y-module with odd ℓ.
    """
    support = SupportPredicate(kind, n, ell)
    if window_depth < 1:
        raise StructuralError(f"window_depth must be positive, got {window_depth}")
    if window is not None and window[0] > window[1]:
        raise StructuralError(f"Window {window} is reversed")

    if window is None:
        lo, hi = scan_range(n, ell)
        found = [w for w in range(hi, lo - 1, -1) if support.monomials_of_weight(w)]
        if not found:
            window = (lo, hi)
        elif kind.finite:
            window = (min(found), max(found))
        else:
            top = max(found)
            window = (top - window_depth + 1, top)

    spaces: Dict[int, Tuple[Monomial, ...]] = {}
    for weight in range(window[0], window[1] + 1):
        basis = support.monomials_of_weight(weight)
        if basis:
            spaces[weight] = tuple(basis)

    untrusted: List[int] = []
    if spaces:
        bottom, top = min(spaces), max(spaces)
        if bottom == window[0] and support.monomials_of_weight(bottom - 1):
            untrusted.append(bottom)
        if top == window[1] and support.monomials_of_weight(top + 1):
            untrusted.append(top)

    module = WeightModule(
        support=support,
        realization=realization_for(kind, n, ell),
        window=window,
        spaces=spaces,
        untrusted=tuple(sorted(set(untrusted))),
    )
    logger.debug(
        "Built module",
        extra={
            "kind": kind.value,
            "n": n,
            "ell": ell,
            "window": list(window),
            "dims": [module.dimension(w) for w in module.weights],
        },
    )
    return module


def graded_dimension(n: int, degree: int) -> int:
    """Monomials of weighted degree ``degree`` in the ring graded by (1,…,1,2)."""
    if degree < 0:
        return 0
    return sum(
        binomial(degree - 2 * last + n - 1, n - 1) for last in range(degree // 2 + 1)
    )
