"""Borel-Weil-Bott on B = Gr_k(V^), V of dimension N.

Convention, fixed once for the whole package:

* ``T`` is the rank-k tautological subbundle of ``V^ (x) O``, so
  ``H^0(B, T^) = V`` and ``T = O(-1)`` on ``P(V^) = Gr_1(V^)``.
* Homogeneous bundles are written in **T-weights**: the key ``g`` stands for
  ``S^g T``; ``S^a T^`` is ``S^{(-a_k, ..., -a_1)} T``.
* Cohomology is reported as a Schur functor of ``V``.

The dotted Weyl action is applied to ``(g^*, q)`` where ``g^* = dual(g)``
is the T^-weight and ``q`` is an optional weight of ``Q^``.  With
``omega_B = (det T)^N`` Serre duality reads
``H^i(S^g T) ~ H^{k(N-k)-i}(S^{g'} T)^`` with ``g' = dual(g) + N``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .partitions import MixedWeight, SchurExpansion, hook_content_dim


@dataclass(frozen=True)
class GrassmannianContext:
    N: int
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.N:
            raise ValueError(f"need 1 <= k < N, got k={self.k}, N={self.N}")

    @property
    def dim(self) -> int:
        return self.k * (self.N - self.k)


@dataclass(frozen=True)
class HomogeneousBundle:
    context: GrassmannianContext
    expansion: SchurExpansion

    def __post_init__(self) -> None:
        if self.expansion.rank != self.context.k:
            raise ValueError(f"expansion rank {self.expansion.rank} != k = {self.context.k}")

    @classmethod
    def line(cls, ctx: GrassmannianContext, d: int) -> HomogeneousBundle:
        """``(det T^)^d``, i.e. O(d) for the Pluecker polarization."""
        return cls(ctx, SchurExpansion.single(MixedWeight((-d,) * ctx.k)))


@dataclass(frozen=True)
class BottResult:
    degree: int
    weight: MixedWeight  # rank N; H^degree = S^weight V

    @property
    def dimension(self) -> int:
        return self.weight.dimension()


def weyl_shift(weight: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Dotted Weyl action: ``None`` if singular, else ``(length, sort(w+rho)-rho)``."""
    n = len(weight)
    shifted = [w + n - 1 - i for i, w in enumerate(weight)]
    if len(set(shifted)) < n:
        return None
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    return inversions, tuple(v - (n - 1 - i) for i, v in enumerate(ordered))


def bbw_irreducible(
    gamma: MixedWeight, ctx: GrassmannianContext, quotient_weight: Sequence[int] | None = None
) -> BottResult | None:
    """Cohomology of ``S^gamma T (x) S^q Q^`` on Gr_k(V^): one degree or nothing."""
    if gamma.rank != ctx.k:
        raise ValueError(f"weight {gamma} does not have rank k={ctx.k}")
    q = tuple(quotient_weight) if quotient_weight is not None else (0,) * (ctx.N - ctx.k)
    if len(q) != ctx.N - ctx.k or any(a < b for a, b in zip(q, q[1:])):
        raise ValueError(f"bad quotient weight {q}")
    out = weyl_shift(gamma.dual().parts + q)
    if out is None:
        return None
    degree, mu = out
    assert 0 <= degree <= ctx.dim
    return BottResult(degree, MixedWeight(mu))


@dataclass(frozen=True)
class CohomologyTable:
    """``(i, m) -> dim H^i`` in grading degree m; zero entries are not stored."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {key: v for key, v in sorted(self.entries.items()) if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("negative dimension")
        object.__setattr__(self, "entries", clean)

    def get(self, i: int, m: int = 0) -> int:
        return self.entries.get((i, m), 0)

    def degrees(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    @property
    def max_degree(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def euler(self, m: int | None = None) -> int:
        return sum((-1) ** i * v for (i, mm), v in self.entries.items() if m is None or mm == m)

    def merge(self, other: CohomologyTable) -> CohomologyTable:
        out = defaultdict(int, self.entries)
        for key, v in other.entries.items():
            out[key] += v
        return CohomologyTable(dict(out))


def cohomology(bundle: HomogeneousBundle, m: int = 0) -> CohomologyTable:
    """All cohomology of ``bundle``, recorded in grading degree ``m``."""
    ctx = bundle.context
    out: dict[tuple[int, int], int] = defaultdict(int)
    for gamma, mult in bundle.expansion.items():
        res = bbw_irreducible(gamma, ctx)
        if res is not None:
            out[(res.degree, m)] += mult * res.dimension
    return CohomologyTable(dict(out))


def euler_characteristic(bundle: HomogeneousBundle) -> int:
    return cohomology(bundle).euler()


def serre_dual_weight(gamma: MixedWeight, ctx: GrassmannianContext) -> MixedWeight:
    """T-weight of ``(S^gamma T)^ (x) omega_B`` with ``omega_B = (det T)^N``."""
    return gamma.dual().shift(ctx.N)


def h0_dimension(expansion: SchurExpansion, ctx: GrassmannianContext) -> int:
    """dim H^0 of the bundle with T-weight expansion ``expansion``."""
    return cohomology(HomogeneousBundle(ctx, expansion)).get(0)


def borel_weil_dimension(polynomial_t_dual: MixedWeight, N: int) -> int:
    """dim H^0(S^a T^) = dim S^a V for a partition-shaped T^-weight ``a``."""
    return hook_content_dim(polynomial_t_dual.to_partition(), N)
