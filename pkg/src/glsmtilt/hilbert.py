"""Graded dimensions of R, Lambda and M_alpha, and the tilting vanishing check.

With ``T0 = sum_{alpha in P(k, N-k)} S^alpha T^`` on ``B = Gr_k(V^)``:

* ``R_m = H^0(B, S^m E^)``,
* ``Lambda_m = H^0(B, T0^ (x) T0 (x) S^m E^)``,
* ``(M_alpha)_m = H^0(B, S^alpha T^ (x) S^m E^)``.

Every bundle involved is completely reducible, so each graded piece is a sum
of Borel-Weil-Bott computations over the Schur constituents.
"""

from __future__ import annotations

from concurrent.futures import Executor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Literal, Sequence

from .bott import GrassmannianContext, bbw_irreducible
from .glsm import GLSMPresentation
from .partitions import MixedWeight, Partition, SchurExpansion, partitions_in_box
from .plethysm import BundleSpec, sym_power_of_bundle

SeriesName = Literal["R", "Lambda", "M"]
Route = Literal["bott", "porras", "closed_form"]


@dataclass(frozen=True)
class HilbertTable:
    series: str  # "R", "Lambda" or "M_alpha(...)"
    dims: tuple[int, ...]  # dims[m] for m = 0..max_m
    route: str
    tilting_verified: bool | None = None  # Lambda only: vanishing checked through max_m

    def __post_init__(self) -> None:
        if any(d < 0 for d in self.dims):
            raise ValueError("negative graded dimension")
        if self.series in ("R", "Lambda") and self.dims and self.dims[0] < 1:
            raise ValueError(f"{self.series}_0 must contain the constants")

    @property
    def max_m(self) -> int:
        return len(self.dims) - 1


def kapranov_collection(N: int, k: int) -> list[Partition]:
    """P(k, N-k) in lexicographic order."""
    return partitions_in_box(k, N - k)


@lru_cache(maxsize=None)
def _sym_power_t_weights(spec: BundleSpec, m: int) -> SchurExpansion:
    """``S^m E^`` in T-weights (the dual of the polynomial T^-expansion)."""
    return sym_power_of_bundle(m, spec).dual()


def dim_R(p: GLSMPresentation, m: int) -> int:
    """R_m through the higher-rank presentation: constituents of S^m(S^lam V) with <= k rows."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return sym_power_of_bundle(m, p.bundle).gl_dimension(p.N)


def dim_R_bott(p: GLSMPresentation, m: int) -> int:
    """R_m as H^0(B, S^m E^), cohomology degree by degree."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return _h0(_sym_power_t_weights(p.bundle, m), p.context)


def _h0(expansion: SchurExpansion, ctx: GrassmannianContext) -> int:
    total = 0
    for gamma, mult in expansion.items():
        res = bbw_irreducible(gamma, ctx)
        if res is not None and res.degree == 0:
            total += mult * res.dimension
    return total


@lru_cache(maxsize=None)
def _tensor_cached(a: MixedWeight, b: MixedWeight, sym: SchurExpansion) -> SchurExpansion:
    return SchurExpansion.single(a).tensor(SchurExpansion.single(b)).tensor(sym)


def hom_slice(
    p: GLSMPresentation, alpha: MixedWeight | Partition, beta: MixedWeight | Partition, m: int
) -> SchurExpansion:
    """T-weight expansion of ``S^alpha T^ (x) (S^beta T^)^ (x) S^m E^``.

    ``alpha`` and ``beta`` are T^-weights; partitions are padded to rank k.
    """
    k = p.k
    a = alpha if isinstance(alpha, MixedWeight) else MixedWeight.from_partition(alpha, k)
    b = beta if isinstance(beta, MixedWeight) else MixedWeight.from_partition(beta, k)
    return _tensor_cached(a.dual(), b, _sym_power_t_weights(p.bundle, m))


def dim_Lambda(p: GLSMPresentation, m: int, collection: Sequence[MixedWeight | Partition] | None = None) -> int:
    if m < 0:
        raise ValueError("m must be non-negative")
    coll = list(collection) if collection is not None else kapranov_collection(p.N, p.k)
    ctx = p.context
    return sum(_h0(hom_slice(p, a, b, m), ctx) for a in coll for b in coll)


def dim_Lambda_closed_form_CI(N: int, d: Sequence[int], m: int) -> int:
    """Lambda_m for the projective-space family: sum over a, b < N and |kappa| = m of dim S^{kappa.d + b - a}."""
    if m < 0:
        raise ValueError("m must be non-negative")
    d = list(d)
    if not d or any(x < 1 for x in d):
        raise ValueError("degrees must be positive")

    def compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    out = 0
    for kappa in compositions(m, len(d)):
        e0 = sum(x * y for x, y in zip(kappa, d))
        for a in range(N):
            for b in range(N):
                e = e0 + b - a
                if e >= 0:
                    out += comb(N + e - 1, e)
    return out


def dim_Lambda_ci(p: GLSMPresentation, m: int) -> int:
    """Closed-form route for a k = 1 presentation."""
    if p.k != 1:
        raise ValueError("the closed form covers the projective-space family (k = 1) only")
    return dim_Lambda_closed_form_CI(p.N, p.degrees(), m)


def dim_M_alpha(p: GLSMPresentation, alpha: Partition | Iterable[int], m: int) -> int:
    alpha = alpha if isinstance(alpha, Partition) else Partition(tuple(alpha))
    if len(alpha) > p.k or alpha[0] > p.N - p.k:
        raise ValueError(f"alpha = {alpha} is not in P({p.k}, {p.N - p.k})")
    if m < 0:
        raise ValueError("m must be non-negative")
    expansion = SchurExpansion.single(MixedWeight.from_partition(alpha, p.k).dual()).tensor(
        _sym_power_t_weights(p.bundle, m)
    )
    return _h0(expansion, p.context)


@dataclass(frozen=True)
class VanishingWitness:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    m: int
    i: int
    gamma: tuple[int, ...]  # T-weight of the offending constituent
    dimension: int


@dataclass(frozen=True)
class VanishingReport:
    passed: bool
    i_max: int
    m_max: int
    slices_checked: int
    witness: VanishingWitness | None = None
    note: str = field(default="")


def vanishing_check(
    p: GLSMPresentation,
    i_max: int,
    m_max: int,
    collection: Sequence[MixedWeight | Partition] | None = None,
) -> VanishingReport:
    """H^i(S^a T^ (x) (S^b T^)^ (x) S^m E^) = 0 for 1 <= i <= i_max, 0 <= m <= m_max, a, b in the collection.

    The collection defaults to Kapranov's; its entries are T^-weights.  Order:
    m outermost, then a, then b, then constituents in decreasing weight order.
    """
    if i_max < 0 or m_max < 0:
        raise ValueError("i_max and m_max must be non-negative")
    coll = list(collection) if collection is not None else kapranov_collection(p.N, p.k)
    coll_w = [c if isinstance(c, MixedWeight) else MixedWeight.from_partition(c, p.k) for c in coll]
    ctx = p.context
    checked = 0
    note = f"finite verification: 0 <= m <= {m_max}, 1 <= i <= {i_max}"
    for m in range(m_max + 1):
        for a in coll_w:
            for b in coll_w:
                checked += 1
                for gamma, mult in hom_slice(p, a, b, m).items():
                    res = bbw_irreducible(gamma, ctx)
                    if res is not None and 1 <= res.degree <= i_max:
                        w = VanishingWitness(a.parts, b.parts, m, res.degree, gamma.parts, mult * res.dimension)
                        return VanishingReport(False, i_max, m_max, checked, w, note)
    return VanishingReport(True, i_max, m_max, checked, None, note)


def _series_value(args: tuple[GLSMPresentation, str, str, tuple[int, ...] | None, int]) -> int:
    p, series, route, alpha, m = args
    if series == "R":
        return dim_R(p, m) if route == "porras" else dim_R_bott(p, m)
    if series == "Lambda":
        return dim_Lambda(p, m) if route == "bott" else dim_Lambda_ci(p, m)
    if series == "M":
        return dim_M_alpha(p, Partition(alpha or ()), m)
    raise ValueError(f"unknown series {series!r}")


DEFAULT_ROUTES = {"R": "porras", "Lambda": "bott", "M": "bott"}
ROUTES = {"R": ("porras", "bott"), "Lambda": ("bott", "closed_form"), "M": ("bott",)}


def hilbert_table(
    p: GLSMPresentation,
    series: SeriesName,
    max_m: int,
    route: str | None = None,
    alpha: Iterable[int] | None = None,
    executor: Executor | None = None,
) -> HilbertTable:
    """Graded dimensions for m = 0..max_m; degree slices may be farmed out to ``executor``."""
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    if series not in ROUTES:
        raise ValueError(f"unknown series {series!r}")
    route = route or DEFAULT_ROUTES[series]
    if route not in ROUTES[series]:
        raise ValueError(f"route {route!r} is not available for {series}")
    alpha_t = tuple(Partition(tuple(alpha or ())).parts)
    if series == "M" and alpha is None:
        raise ValueError("series M needs alpha")
    jobs = [(p, series, route, alpha_t, m) for m in range(max_m + 1)]
    dims = list(executor.map(_series_value, jobs)) if executor is not None else [_series_value(j) for j in jobs]
    name = f"M_alpha({','.join(map(str, alpha_t))})" if series == "M" else series
    verified = None
    if series == "Lambda":
        verified = vanishing_check(p, p.dim_B, max_m).passed
    return HilbertTable(name, tuple(dims), route, verified)
