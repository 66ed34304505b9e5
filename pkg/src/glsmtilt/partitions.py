"""Partitions, mixed GL(k) weights, Schur-functor dimensions and LR products.

Partitions drop trailing zeros.  Mixed weights keep their rank: ``(1, 0)`` and
``(1, 0, 0)`` are different GL-irreducibles, so a :class:`MixedWeight` always
has exactly ``rank`` entries.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be non-negative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self.parts) > k:
            raise ValueError(f"{self} has more than {k} rows")
        return self.parts + (0,) * (k - len(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class MixedWeight:
    """Highest weight of a rational GL(k)-irreducible; ``rank == len(parts)``."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"weight must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> MixedWeight:
        return cls(tuple(parts))

    @classmethod
    def from_partition(cls, lam: Partition | Iterable[int], k: int) -> MixedWeight:
        lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
        return cls(lam.padded(k))

    @classmethod
    def zero(cls, k: int) -> MixedWeight:
        return cls((0,) * k)

    @property
    def rank(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def shift(self, c: int) -> MixedWeight:
        return MixedWeight(tuple(p + c for p in self.parts))

    def dual(self) -> MixedWeight:
        """Weight of the dual representation: ``(-a_k, ..., -a_1)``."""
        return MixedWeight(tuple(-p for p in reversed(self.parts)))

    def is_polynomial(self) -> bool:
        return not self.parts or self.parts[-1] >= 0

    def to_partition(self) -> Partition:
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative entries")
        return Partition(self.parts)

    def normalize(self) -> tuple[Partition, int]:
        """Return ``(lam, c)`` with ``self == lam + c*(1,...,1)`` and ``lam`` a partition with ``< rank`` rows."""
        c = self.parts[-1] if self.parts else 0
        return Partition(tuple(p - c for p in self.parts)), c

    def dimension(self) -> int:
        lam, _ = self.normalize()
        return hook_content_dim(lam, self.rank)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _as_partition(lam: Partition | Iterable[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


@lru_cache(maxsize=None)
def _hook_content_dim(parts: tuple[int, ...], n: int) -> int:
    if len(parts) > n:
        return 0
    conj = Partition(parts).conjugate().parts
    num = den = 1
    for i, row in enumerate(parts):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    assert num % den == 0
    return num // den


def hook_content_dim(lam: Partition | Iterable[int], n: int) -> int:
    """dim S^lam(C^n) by the hook-content formula; 0 if lam has more than n rows."""
    return _hook_content_dim(_as_partition(lam).parts, n)


@lru_cache(maxsize=None)
def _ssyt_weights(parts: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # Branch on the cells holding the largest letter k: they form a horizontal
    # strip lam/mu with mu interlacing lam.
    if len(parts) > k:
        return ()
    if k == 0:
        return (((), 1),) if not parts else ()
    if k == 1:
        return (((sum(parts),), 1),)
    padded = parts + (0,) * (k - len(parts))
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for mu in _interlacing(padded):
        strip = sum(padded) - sum(mu)
        for w, c in _ssyt_weights(Partition(mu).parts, k - 1):
            out[w + (strip,)] += c
    return tuple(sorted(out.items()))


def _interlacing(lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Partitions mu of length len(lam)-1 with lam[i] >= mu[i] >= lam[i+1]."""
    k = len(lam)

    def rec(i: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == k - 1:
            yield acc
            return
        for v in range(lam[i + 1], lam[i] + 1):
            yield from rec(i + 1, acc + (v,))

    yield from rec(0, ())


def ssyt_weight_multiset(lam: Partition | Iterable[int], k: int) -> dict[tuple[int, ...], int]:
    """Content vectors of semistandard tableaux of shape lam with entries in 1..k, with counts."""
    return dict(_ssyt_weights(_as_partition(lam).parts, k))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(acc: tuple[int, ...], bound: int) -> None:
        if len(acc) == rows:
            out.append(acc)
            return
        for v in range(bound + 1):
            rec(acc + (v,), v)

    rec((), cols)
    return [Partition(p) for p in sorted(out)]


def partitions_of(n: int, max_rows: int | None = None) -> list[Partition]:
    """Partitions of n (optionally with at most max_rows parts), reverse-lexicographic."""
    out: list[Partition] = []

    def rec(rem: int, bound: int, acc: tuple[int, ...]) -> None:
        if rem == 0:
            out.append(Partition(acc))
            return
        if max_rows is not None and len(acc) == max_rows:
            return
        for v in range(min(rem, bound), 0, -1):
            rec(rem - v, v, acc + (v,))

    rec(n, n, ())
    return out


@dataclass(frozen=True)
class SchurExpansion:
    """Finite formal sum of GL(rank)-irreducibles with positive multiplicities."""

    rank: int
    terms: Mapping[MixedWeight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[MixedWeight, int] = {}
        for w, c in self.terms.items():
            if not isinstance(w, MixedWeight):
                w = MixedWeight(tuple(w))
            if w.rank != self.rank:
                raise ValueError(f"weight {w} does not have rank {self.rank}")
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for {w}")
            if c:
                clean[w] = clean.get(w, 0) + int(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    @classmethod
    def single(cls, w: MixedWeight, mult: int = 1) -> SchurExpansion:
        return cls(w.rank, {w: mult})

    @classmethod
    def trivial(cls, k: int) -> SchurExpansion:
        return cls.single(MixedWeight.zero(k))

    def __getitem__(self, w: MixedWeight | Iterable[int]) -> int:
        if not isinstance(w, MixedWeight):
            w = MixedWeight(tuple(w))
        return self.terms.get(w, 0)

    def __iter__(self) -> Iterator[MixedWeight]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.rank, tuple(self.terms.items())))

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        merged = dict(self.terms)
        for w, c in other.terms.items():
            merged[w] = merged.get(w, 0) + c
        return SchurExpansion(self.rank, merged)

    def scale(self, c: int) -> SchurExpansion:
        return SchurExpansion(self.rank, {w: c * m for w, m in self.terms.items()})

    def shift(self, c: int) -> SchurExpansion:
        return SchurExpansion(self.rank, {w.shift(c): m for w, m in self.terms.items()})

    def dual(self) -> SchurExpansion:
        return SchurExpansion(self.rank, {w.dual(): m for w, m in self.terms.items()})

    def tensor(self, other: SchurExpansion) -> SchurExpansion:
        out = SchurExpansion(self.rank)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                out = out + lr_product(a, b).scale(ca * cb)
        return out

    def dimension(self) -> int:
        """Dimension as a GL(rank)-representation."""
        return sum(c * w.dimension() for w, c in self.terms.items())

    def gl_dimension(self, n: int) -> int:
        """Sum of mult * dim S^key(C^n); keys must be partitions."""
        return sum(c * hook_content_dim(w.to_partition(), n) for w, c in self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join((f"{c}*" if c != 1 else "") + f"S{w}" for w, c in self.terms.items())


def _horizontal_strips(shape: tuple[int, ...], size: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    """Ways to add ``size`` cells to ``shape`` (padded to max_rows) as a horizontal strip.

    Yields the per-row counts of added cells.
    """
    caps = [size] + [shape[r - 1] - shape[r] for r in range(1, max_rows)]

    def rec(r: int, rem: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if r == max_rows:
            if rem == 0:
                yield acc
            return
        for a in range(min(caps[r], rem), -1, -1):
            yield from rec(r + 1, rem - a, acc + (a,))

    yield from rec(0, size, ())


@lru_cache(maxsize=None)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], max_rows: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # Fill nu/lam letter by letter: the i-th letter occupies a horizontal strip
    # of mu[i] cells.  The reverse reading word is a lattice word iff for every
    # letter i>1 and row r:  #(i in rows <= r) <= #(i-1 in rows < r).
    start = lam + (0,) * (max_rows - len(lam))
    counts: dict[tuple[int, ...], int] = defaultdict(int)

    def rec(i: int, shape: tuple[int, ...], prev_rows: tuple[int, ...]) -> None:
        if i == len(mu):
            counts[shape] += 1
            return
        for strip in _horizontal_strips(shape, mu[i], max_rows):
            if i > 0:
                cum_cur = cum_prev = 0
                ok = True
                for r in range(max_rows):
                    cum_cur += strip[r]
                    if cum_cur > cum_prev:
                        ok = False
                        break
                    cum_prev += prev_rows[r]
                if not ok:
                    continue
            rec(i + 1, tuple(s + a for s, a in zip(shape, strip)), strip)

    rec(0, start, (0,) * max_rows)
    return tuple(sorted(counts.items()))


def lr_coefficients(lam: Partition, mu: Partition, max_rows: int) -> dict[Partition, int]:
    """Littlewood-Richardson coefficients c^nu_{lam,mu} for nu with at most max_rows rows."""
    if len(lam) > max_rows or len(mu) > max_rows:
        return {}
    return {Partition(nu): c for nu, c in _lr(lam.parts, mu.parts, max_rows)}


def lr_product(a: MixedWeight, b: MixedWeight) -> SchurExpansion:
    """Decompose V_a (x) V_b for GL(k) with k = a.rank = b.rank."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    k = a.rank
    la, ca = a.normalize()
    lb, cb = b.normalize()
    # c^nu_{la,lb} is symmetric; put the smaller partition second to keep the search small
    if lb.size > la.size:
        la, lb = lb, la
    terms = {
        MixedWeight.from_partition(nu, k).shift(ca + cb): c
        for nu, c in lr_coefficients(la, lb, k).items()
    }
    return SchurExpansion(k, terms)
