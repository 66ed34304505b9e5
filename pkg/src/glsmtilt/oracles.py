"""Brute-force oracles: Molien-Weyl invariant counts and localization Euler characteristics.

Neither oracle shares code with the routes it checks: Schur characters are
built here from raw tableau fillings or bialternants, symmetric powers from
explicit multiset enumeration, and cohomology never enters.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, factorial
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .bott import HomogeneousBundle
from .partitions import Partition

if TYPE_CHECKING:
    from .glsm import GLSMPresentation

log = logging.getLogger(__name__)

Exponent = tuple[int, ...]

MAX_MOLIEN_RANK = 2
MAX_LOCALIZATION_N = 8


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, coeffs: Mapping[Exponent, int] | None = None, nvars: int = 1):
        self.nvars = nvars
        self.coeffs: dict[Exponent, int] = {}
        for e, c in (coeffs or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                self.coeffs[tuple(e)] = self.coeffs.get(tuple(e), 0) + c
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> LaurentPoly:
        return cls({tuple(exp): coef}, len(exp))

    @classmethod
    def one(cls, nvars: int = 1) -> LaurentPoly:
        return cls.monomial((0,) * nvars)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.nvars)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.coeffs.items()}, self.nvars)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()}, self.nvars)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self.coeffs.items()))}, nvars={self.nvars})"

    def constant_term(self) -> int:
        return self.coeffs.get((0,) * self.nvars, 0)

    def constant_term_of_product(self, other: LaurentPoly) -> int:
        return sum(c * other.coeffs.get(tuple(-x for x in e), 0) for e, c in self.coeffs.items())

    def value_at_one(self) -> int:
        return sum(self.coeffs.values())

    def times_monomial(self, exp: Sequence[int]) -> LaurentPoly:
        return LaurentPoly({tuple(a + b for a, b in zip(e, exp)): c for e, c in self.coeffs.items()}, self.nvars)

    def divide_one_minus(self, m: int) -> LaurentPoly:
        """Exact quotient by ``1 - q^m`` (univariate, m != 0); ArithmeticError if it does not divide."""
        if self.nvars != 1:
            raise ValueError("divide_one_minus is univariate")
        if m == 0:
            raise ZeroDivisionError("1 - q^0")
        if m < 0:
            # 1 - q^m = -q^m (1 - q^-m)
            return -(self.divide_one_minus(-m).times_monomial((-m,)))
        if not self.coeffs:
            return LaurentPoly({}, 1)
        lo = min(e[0] for e in self.coeffs)
        hi = max(e[0] for e in self.coeffs)
        q: dict[int, int] = {}
        for e in range(lo, hi - m + 1):
            v = self.coeffs.get((e,), 0) + q.get(e - m, 0)
            if v:
                q[e] = v
        quotient = LaurentPoly({(e,): c for e, c in q.items()}, 1)
        check = quotient - quotient.times_monomial((m,))
        if check != self:
            raise ArithmeticError(f"1 - q^{m} does not divide the polynomial")
        return quotient


# ---------------------------------------------------------------- Molien-Weyl


def _schur_monomials_brute(lam: Partition, k: int) -> dict[Exponent, int]:
    """Monomials of s_lam(z_1..z_k) by testing every filling of the diagram."""
    cells = [(i, j) for i, row in enumerate(lam.parts) for j in range(row)]
    out: dict[Exponent, int] = defaultdict(int)
    for filling in product(range(k), repeat=len(cells)):
        t = dict(zip(cells, filling))
        if all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t) and all(
            t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t
        ):
            e = [0] * k
            for v in filling:
                e[v] += 1
            out[tuple(e)] += 1
    return dict(out)


def _sym_power_character(monomials: list[Exponent], m: int, k: int) -> LaurentPoly:
    """Character of S^m of a representation with the listed weights, by multiset enumeration."""
    out: dict[Exponent, int] = defaultdict(int)
    for choice in combinations_with_replacement(range(len(monomials)), m):
        e = [0] * k
        for idx in choice:
            for i, x in enumerate(monomials[idx]):
                e[i] += x
        out[tuple(e)] += 1
    return LaurentPoly(out, k)


def _hom_dual_character(N: int, k: int, a: int) -> LaurentPoly:
    """Character of S^a(V (x) Z^) restricted to the torus of GL(Z): weight -e_i with N copies each."""
    out: dict[Exponent, int] = {}

    def rec(i: int, rem: int, acc: tuple[int, ...]) -> None:
        if i == k - 1:
            js = acc + (rem,)
            coef = 1
            for j in js:
                coef *= comb(j + N - 1, N - 1)
            out[tuple(-j for j in js)] = coef
            return
        for j in range(rem + 1):
            rec(i + 1, rem - j, acc + (j,))

    rec(0, a, ())
    return LaurentPoly(out, k)


def _weyl_density(k: int) -> LaurentPoly:
    dens = LaurentPoly.one(k)
    for i in range(k):
        for j in range(k):
            if i != j:
                e = [0] * k
                e[i] += 1
                e[j] -= 1
                dens = dens * (LaurentPoly.one(k) - LaurentPoly.monomial(e))
    return dens


def molien_invariant_dim(p: GLSMPresentation, m: int) -> int:
    """dim of the F-degree-m part of C[Hom(V,Z) x F]^{GL(Z)}, by Weyl integration over the torus."""
    k, N = p.k, p.N
    if k > MAX_MOLIEN_RANK:
        raise NotImplementedError(f"Molien-Weyl oracle supports k <= {MAX_MOLIEN_RANK}, got k={k}")
    if m < 0:
        raise ValueError("m must be non-negative")
    # F^ = sum N_lam (x) S^lam Z has torus weights = tableau contents
    f_dual: list[Exponent] = []
    for mult, lam in p.bundle.summands:
        for e, c in sorted(_schur_monomials_brute(lam, k).items()):
            f_dual.extend([e] * (mult * c))
    chi_f = _sym_power_character(f_dual, m, k)
    dens = _weyl_density(k)
    bound = m * max(lam.size for _, lam in p.bundle.summands)
    total = 0
    for a in range(bound + 2):
        slice_ = (_hom_dual_character(N, k, a) * chi_f).constant_term_of_product(dens)
        if a == bound + 1:
            assert slice_ == 0, "weight balance bound violated"
        total += slice_
    assert total % factorial(k) == 0
    return total // factorial(k)


# ---------------------------------------------------------------- localization


def _first_primes(n: int, skip: int = 0) -> list[int]:
    out: list[int] = []
    cand = 2
    while len(out) < n + skip:
        if all(cand % p for p in out if p * p <= cand):
            out.append(cand)
        cand += 1
    return out[skip:]


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def localization_euler(bundle: HomogeneousBundle, exponents: Iterable[int] | None = None) -> int:
    """Euler characteristic via the holomorphic Lefschetz formula at torus-fixed points.

    The torus acts on V^ with characters x_i; we restrict to the one-parameter
    subgroup x_i = q^{a_i} (``exponents``, default: the first N primes), sum the
    fixed-point contributions exactly as Laurent polynomials over the common
    Vandermonde denominator, divide exactly, and evaluate at q = 1.  A non-exact
    division means the sum is not a character: that is a hard error.
    """
    ctx = bundle.context
    N, k = ctx.N, ctx.k
    if N > MAX_LOCALIZATION_N:
        raise ValueError(f"localization oracle supports N <= {MAX_LOCALIZATION_N}")
    a = list(exponents) if exponents is not None else _first_primes(N)
    skip = 0
    while len(a) != N or len(set(a)) != N:
        # repeated values put a pole on the fixed-point sum; redraw
        skip += 1
        log.info("degenerate torus exponents %s; redrawing", a)
        a = _first_primes(N, skip)

    def q(e: int) -> LaurentPoly:
        return LaurentPoly.monomial((e,))

    weights = list(bundle.expansion.items())
    total = LaurentPoly({}, 1)
    for S in combinations(range(N), k):
        Sc = [j for j in range(N) if j not in S]
        numer = LaurentPoly({}, 1)
        for gamma, mult in weights:
            exps = [gamma[j] + k - 1 - j for j in range(k)]
            for perm in permutations(range(k)):
                e = sum(a[S[perm[j]]] * exps[j] for j in range(k))
                numer = numer + q(e) * (mult * _perm_sign(perm))
        sign = (-1) ** sum(1 for i in S for j in Sc if i < j)
        factor = q(sum(a[j] for j in Sc) * k)
        for i, j in combinations(Sc, 2):
            factor = factor * (q(a[i]) - q(a[j]))
        total = total + numer * factor * sign
    for i, j in combinations(range(N), 2):
        # q^{a_i} - q^{a_j} = q^{a_i} (1 - q^{a_j - a_i})
        total = total.times_monomial((-a[i],)).divide_one_minus(a[j] - a[i])
    return total.value_at_one()
