"""Hilbert-Mumford stability for GL(Z) acting on Hom(V, Z) with character det^t.

For t > 0 the semistable locus is the set of epimorphisms and an unstable
``u`` is optimally destabilized by ``diag(1 on im u, zeta^-1 on a complement)``;
for t < 0 everything is unstable and ``zeta -> zeta id_Z`` destabilizes.
These closed forms are all this family needs, so no general Kempf search.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import TYPE_CHECKING, Iterable, Sequence

from .partitions import Partition, hook_content_dim, ssyt_weight_multiset

if TYPE_CHECKING:
    from .glsm import GLSMPresentation

Matrix = Sequence[Sequence[Fraction | int]]


class Status(str, Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class OneParamSubgroup:
    """Diagonal weights of xi on Z in the basis given by the columns of ``basis``.

    ``basis`` is ``None`` for the standard basis of Z.
    """

    weights_on_Z: tuple[int, ...]
    basis: tuple[tuple[Fraction, ...], ...] | None = None

    @property
    def is_trivial(self) -> bool:
        return not any(self.weights_on_Z)


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    destabilizer: OneParamSubgroup | None = None
    pairing: int | None = None

    def __post_init__(self) -> None:
        if (self.destabilizer is not None) != (self.status is Status.UNSTABLE):
            raise ValueError("destabilizer present iff unstable")
        if self.pairing is not None and self.pairing >= 0:
            raise ValueError("a destabilizer must pair negatively with the character")


def _to_fractions(u: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in u]


def rank(u: Matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows = _to_fractions(u)
    if not rows or not rows[0]:
        return 0
    # clear denominators row by row, then work over Z
    a = []
    for row in rows:
        d = lcm(*(x.denominator for x in row))
        a.append([int(x * d) for x in row])
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == n_rows:
            break
    return r


def adapted_basis(u: Matrix) -> tuple[int, list[list[Fraction]]]:
    """``(r, P)``: first r columns of P are the pivot columns of u (a basis of im u),
    the rest are the first standard vectors that complete it."""
    rows = _to_fractions(u)
    k = len(rows)
    columns = [[rows[i][j] for i in range(k)] for j in range(len(rows[0]))]
    chosen: list[list[Fraction]] = []
    for col in columns:
        if rank(_transpose(chosen + [col])) > len(chosen):
            chosen.append(col)
    r = len(chosen)
    for i in range(k):
        e = [Fraction(int(i == j)) for j in range(k)]
        if len(chosen) == k:
            break
        if rank(_transpose(chosen + [e])) > len(chosen):
            chosen.append(e)
    return r, _transpose(chosen)


def _transpose(cols: list[list[Fraction]]) -> list[list[Fraction]]:
    if not cols:
        return [[]]
    return [[col[i] for col in cols] for i in range(len(cols[0]))]


def solve(P: list[list[Fraction]], u: Matrix) -> list[list[Fraction]]:
    """``P^{-1} u`` by Gauss-Jordan over Q."""
    k = len(P)
    aug = [list(P[i]) + list(_to_fractions(u)[i]) for i in range(k)]
    for c in range(k):
        piv = next(i for i in range(c, k) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[k:] for row in aug]


def mu_pairing(xi: OneParamSubgroup, t: int) -> int:
    """<det^t, xi> = t * (sum of the weights of xi on Z)."""
    return t * sum(xi.weights_on_Z)


def classify(u: Matrix, t: int) -> StabilityVerdict:
    """det^t-stability of ``u`` in Hom(V, Z), given as a k x N matrix."""
    k = len(u)
    N = len(u[0]) if k else 0
    if not 1 <= k < N:
        raise ValueError(f"need 1 <= k < N, got k={k}, N={N}")
    if t == 0:
        raise ValueError("t must be nonzero")
    if t < 0:
        xi = OneParamSubgroup((1,) * k)
        return StabilityVerdict(Status.UNSTABLE, xi, mu_pairing(xi, t))
    r, P = adapted_basis(u)
    if r == k:
        return StabilityVerdict(Status.STABLE)
    basis = tuple(tuple(P[i][j] for i in range(k)) for j in range(k))
    xi = OneParamSubgroup((0,) * r + (-1,) * (k - r), basis)
    return StabilityVerdict(Status.UNSTABLE, xi, mu_pairing(xi, t))


def limit_exists(u: Matrix, xi: OneParamSubgroup) -> bool:
    """Whether lim_{zeta -> 0} xi(zeta) u exists, i.e. u has only weights >= 0 under xi."""
    k = len(u)
    if xi.basis is None:
        coords = _to_fractions(u)
    else:
        P = [[xi.basis[j][i] for j in range(k)] for i in range(k)]
        coords = solve(P, u)
    return all(all(x == 0 for x in coords[i]) for i in range(k) if xi.weights_on_Z[i] < 0)


def weights_on_schur_dual(xi: OneParamSubgroup | Sequence[int], lam: Partition | Iterable[int]) -> list[int]:
    """Weights of xi on S^lam Z^, sorted, with multiplicity."""
    w = xi.weights_on_Z if isinstance(xi, OneParamSubgroup) else tuple(xi)
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if len(lam) > len(w):
        raise ValueError(f"{lam} has more than {len(w)} rows")
    out: list[int] = []
    for content, c in ssyt_weight_multiset(lam, len(w)).items():
        out.extend([-sum(a * b for a, b in zip(content, w))] * c)
    assert len(out) == hook_content_dim(lam, len(w))
    return sorted(out)


def optimal_destabilizer_patterns(k: int) -> list[tuple[int, ...]]:
    """Weight patterns (0^r, (-1)^{k-r}) for 0 <= r < k."""
    return [(0,) * r + (-1,) * (k - r) for r in range(k)]


@dataclass(frozen=True)
class Condition3Result:
    passed: bool
    witness: tuple[int, Partition, int] | None = None  # (r, lam, offending weight)


def fiber_weight_check(k: int, summands: Iterable[tuple[Partition, bool]]) -> Condition3Result:
    """Check every optimal destabilizer acts with weights >= 0 on each summand.

    Each summand is ``(lam, dual)``: ``S^lam Z^`` if dual else ``S^lam Z``.
    """
    summands = list(summands)
    for r, pattern in enumerate(optimal_destabilizer_patterns(k)):
        for lam, dual in summands:
            weights = weights_on_schur_dual(pattern, lam)
            if not dual:
                weights = sorted(-x for x in weights)
            if weights and weights[0] < 0:
                return Condition3Result(False, (r, lam, weights[0]))
    return Condition3Result(True)


def condition3_check(p: GLSMPresentation) -> Condition3Result:
    if p.t <= 0:
        raise ValueError("condition (3) is checked for t > 0")
    result = fiber_weight_check(p.k, ((lam, True) for _, lam in p.bundle.summands))
    # F is dual-polynomial by construction, so this can never fail
    assert result.passed, result
    return result


@dataclass(frozen=True)
class GorensteinCheck:
    det_trivial: bool
    weight_sum: tuple[int, ...]  # total torus weight of Hom(V,Z) + F
    codim_nonstable: int | None = None
    codim_ok: bool | None = None


def gorenstein_check(p: GLSMPresentation) -> GorensteinCheck:
    """det(Hom(V,Z) + F) trivial iff the total torus weight vanishes."""
    k, N = p.k, p.N
    total = [N] * k  # Hom(V,Z) = V^ (x) Z: each e_i appears N times
    for mult, lam in p.bundle.summands:
        for content, c in ssyt_weight_multiset(lam, k).items():
            for i in range(k):
                total[i] -= mult * c * content[i]
    scalar = sum(mult * lam.size * hook_content_dim(lam, k) for mult, lam in p.bundle.summands)
    assert all(x == total[0] for x in total) and scalar % k == 0
    assert total[0] == N - scalar // k
    codim = codim_ok = None
    if k == 1:
        # C^* with weights +1 (N times) and -d_i: non-stable = {x = 0} u {y = 0}
        r = sum(mult for mult, _ in p.bundle.summands)
        codim = min(N, r)
        codim_ok = codim >= 2
    return GorensteinCheck(not any(total), tuple(total), codim, codim_ok)


def unstable_codim(N: int, k: int) -> int:
    """Codimension of the non-surjective maps in Hom(V, Z)."""
    if not 1 <= k < N:
        raise ValueError(f"need 1 <= k < N, got k={k}, N={N}")
    return N - k + 1
