"""GLSM presentations over Grassmannians and the invariants of their cones.

A presentation is ``(GL(Z), Hom(V, Z), F, det^t)`` with ``dim V = N``,
``dim Z = k`` and ``F = sum mult * S^lam Z^``.  On ``B = Gr_k(V^)`` the
matching bundle is ``E = sum mult * S^lam T``, a subbundle of the trivial
bundle with fiber ``H = sum mult * S^lam V^``; its cone ``C(E)`` is the image
of the collapsing map ``E -> H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Literal

from . import git
from .bott import GrassmannianContext
from .partitions import hook_content_dim
from .plethysm import BundleSpec


@dataclass(frozen=True)
class GLSMPresentation:
    N: int
    k: int
    t: int
    bundle: BundleSpec

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.N:
            raise ValueError(f"need 1 <= k < N for Gr_k(C^N), got k={self.k}, N={self.N}")
        if self.t < 1:
            raise ValueError(f"character exponent t must be a positive integer, got {self.t}")
        if self.bundle.rank_k != self.k:
            raise ValueError(f"bundle is over GL({self.bundle.rank_k}), expected GL({self.k})")

    @classmethod
    def of(cls, N: int, k: int, *summands: tuple[int, tuple[int, ...]], t: int = 1) -> GLSMPresentation:
        return cls(N, k, t, BundleSpec.of(k, *summands))

    @property
    def context(self) -> GrassmannianContext:
        return GrassmannianContext(self.N, self.k)

    @property
    def dim_B(self) -> int:
        return self.k * (self.N - self.k)

    @property
    def rank_E(self) -> int:
        return self.bundle.fiber_rank()

    @property
    def dim_H(self) -> int:
        return sum(mult * hook_content_dim(lam, self.N) for mult, lam in self.bundle.summands)

    @property
    def is_complete_intersection(self) -> bool:
        return self.k == 1

    def degrees(self) -> list[int]:
        """Line-bundle degrees d_i (with repetition) for the k = 1 family."""
        if self.k != 1:
            raise ValueError("degrees are defined for the projective-space family (k = 1)")
        return [lam.size for mult, lam in self.bundle.summands for _ in range(mult)]


@dataclass(frozen=True)
class Flag:
    """A conclusion drawn from verified hypotheses; ``value`` is None when some hypothesis is unknown or fails."""

    value: bool | None
    hypotheses: tuple[str, ...]


@dataclass(frozen=True)
class ConeInvariants:
    dim_B: int
    rank_E: int
    dim_E: int
    dim_H: int
    crepancy_degree: tuple[int, int]
    dim_C_E: int | None = None
    birational: bool | None = None
    exc_codims: tuple[int, ...] | None = None
    min_preimage_codim: int | None = None
    flags: dict[str, Flag] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim_E != self.dim_B + self.rank_E:
            raise ValueError("dim_E must equal dim_B + rank_E")
        dims = [self.dim_B, self.rank_E, self.dim_H] + ([self.dim_C_E] if self.dim_C_E is not None else [])
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension")


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    detail: str
    witness: object = None


@dataclass(frozen=True)
class ValidationReport:
    conditions: tuple[ConditionResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)


def validate(p: GLSMPresentation) -> ValidationReport:
    """Check the four GLSM axioms for the presentation."""
    # (1), (2): GL(Z) acts freely on the epimorphisms, which are exactly the det^t-semistable points
    sample = [[int(i == j) for j in range(p.N)] for i in range(p.k)]
    verdict = git.classify(sample, p.t)
    free_ok = verdict.status is git.Status.STABLE
    degenerate = [[0] * p.N for _ in range(p.k)]
    unstable_ok = git.classify(degenerate, p.t).status is git.Status.UNSTABLE
    c1 = ConditionResult(
        "free_action_on_semistable",
        free_ok and unstable_ok,
        "semistable locus = epimorphisms V -> Z, on which GL(Z) acts freely",
    )
    c2 = ConditionResult(
        "quotient_is_grassmannian",
        free_ok,
        f"Hom(V,Z)_ss / GL(Z) = Gr_{p.k}(C^{p.N}) of dimension {p.dim_B}",
    )
    c3 = git.condition3_check(p)
    cond3 = ConditionResult(
        "destabilizers_nonnegative_on_F",
        c3.passed,
        "optimal destabilizers (0^r,(-1)^(k-r)) act with weights >= 0 on F",
        c3.witness,
    )
    codim = git.unstable_codim(p.N, p.k)
    c4 = ConditionResult(
        "section_extends",
        codim >= 2,
        f"automatic (codim of unstable locus = {codim} >= 2)",
    )
    return ValidationReport((c1, c2, cond3, c4))


def crepancy_degree(p: GLSMPresentation) -> tuple[int, int]:
    """``(c_E, N)`` with ``det E^ = (det T^)^{c_E}`` and ``omega_B^-1 = (det T^)^N``."""
    total = sum(mult * lam.size * hook_content_dim(lam, p.k) for mult, lam in p.bundle.summands)
    assert total % p.k == 0, "weight sum of a GL(k)-module of homogeneous degree is a multiple of k"
    return total // p.k, p.N


def _common_flags(p: GLSMPresentation, birational: bool | None) -> dict[str, Flag]:
    c_E, target = crepancy_degree(p)
    gor = git.gorenstein_check(p)
    gor_value: bool | None = None
    if gor.codim_ok is True:
        gor_value = gor.det_trivial
    gor_hyps = (
        "G = GL(Z) connected",
        f"det(U + F) trivial: {gor.det_trivial}",
        "codim(non-stable locus) >= 2: "
        + ("unknown" if gor.codim_ok is None else f"{gor.codim_ok} (codim {gor.codim_nonstable})"),
    )
    return {
        "normal_CM": Flag(True, ("E is a homogeneous subbundle of a trivial bundle (Kempf collapsing)",)),
        "rational_sing": Flag(
            True if birational else None,
            (f"rho birational (dim E = dim C(E)): {'unknown' if birational is None else birational}",),
        ),
        "gorenstein": Flag(gor_value, gor_hyps),
        "crepant_hypothesis": Flag(c_E == target, (f"det E = omega_B: c_E = {c_E}, N = {target}",)),
    }


def cone_invariants(p: GLSMPresentation) -> ConeInvariants:
    """Cone data for a general presentation; the catalecticant family gets the closed forms."""
    if len(p.bundle.summands) == 1:
        mult, lam = p.bundle.summands[0]
        if mult == 1 and len(lam) == 1 and lam.size >= 2:
            return catalecticant_invariants(p.N, p.k, lam.size, t=p.t)
    return ConeInvariants(
        dim_B=p.dim_B,
        rank_E=p.rank_E,
        dim_E=p.dim_B + p.rank_E,
        dim_H=p.dim_H,
        crepancy_degree=crepancy_degree(p),
        flags=_common_flags(p, None),
    )


def catalecticant_invariants(N: int, k: int, d: int, t: int = 1) -> ConeInvariants:
    """Invariants of the collapsing of ``S^d T`` onto the rank <= k symmetric forms."""
    if d < 2:
        raise ValueError(f"the rank stratification needs d >= 2, got d={d}")
    p = GLSMPresentation.of(N, k, (1, (d,)), t=t)
    rank_E = comb(k + d - 1, d)
    dim_E = p.dim_B + rank_E
    dim_C_E = rank_E + k * (N - k)
    exc = tuple(rank_E - comb(r + d - 1, d) - r * (k - r) for r in range(k))
    birational = dim_E == dim_C_E
    return ConeInvariants(
        dim_B=p.dim_B,
        rank_E=rank_E,
        dim_E=dim_E,
        dim_H=comb(N + d - 1, d),
        crepancy_degree=crepancy_degree(p),
        dim_C_E=dim_C_E,
        birational=birational,
        exc_codims=exc,
        min_preimage_codim=min(exc),
        flags=_common_flags(p, birational),
    )


IsotropicKind = Literal["orthogonal", "symplectic"]


def isotropic_presentation(N: int, k: int, kind: IsotropicKind) -> GLSMPresentation:
    _check_isotropic(N, k, kind)
    lam = (2,) if kind == "orthogonal" else (1, 1)
    return GLSMPresentation.of(N, k, (1, lam))


def _check_isotropic(N: int, k: int, kind: str) -> None:
    if kind == "orthogonal":
        if not (1 <= k and 2 * k <= N):
            raise ValueError(f"orthogonal Grassmannian needs 1 <= k <= N/2, got N={N}, k={k}")
    elif kind == "symplectic":
        if N % 2:
            raise ValueError(f"symplectic form needs N even, got N={N}")
        if not (k >= 2 and k % 2 == 0 and 2 * k <= N):
            raise ValueError(f"symplectic Grassmannian needs even k with 2 <= k <= N/2, got N={N}, k={k}")
    else:
        raise ValueError(f"unknown isotropic kind {kind!r}")


def isotropic_dims(N: int, k: int, kind: IsotropicKind) -> tuple[int, int]:
    """(dimension of the isotropic Grassmannian, dim B - rank E)."""
    _check_isotropic(N, k, kind)
    dim_B = k * (N - k)
    dim_Z = dim_B - (comb(k + 1, 2) if kind == "orthogonal" else comb(k, 2))
    p = isotropic_presentation(N, k, kind)
    expected = p.dim_B - p.rank_E
    assert dim_Z == expected, (dim_Z, expected)
    return dim_Z, expected

