"""Symmetric powers of Schur modules and of direct sums of them.

``plethysm_sym`` works in exactly ``k`` variables: expand ``s_lam`` into
monomials, form the complete symmetric function ``h_m`` of that monomial
multiset, and peel off Schur functions by leading dominant monomial.  Working
in ``k`` variables drops every constituent with more than ``k`` rows, which is
the truncation the higher-rank coordinate ring needs.
"""

from __future__ import annotations

import json
import logging
import os
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from pathlib import Path
from typing import Iterable

from filelock import FileLock

from .partitions import (
    MixedWeight,
    Partition,
    SchurExpansion,
    hook_content_dim,
    partitions_of,
    ssyt_weight_multiset,
)

log = logging.getLogger(__name__)

CACHE_ENV_VAR = "GLSMTILT_CACHE"
CACHE_FORMAT = "glsmtilt-plethysm"
CACHE_VERSION = 1


@dataclass(frozen=True)
class BundleSpec:
    """Summands ``(multiplicity, lam)``: the fiber is ``sum mult * S^lam(C^k)``."""

    summands: tuple[tuple[int, Partition], ...]
    rank_k: int

    def __post_init__(self) -> None:
        if self.rank_k < 1:
            raise ValueError("rank_k must be positive")
        clean = []
        for mult, lam in self.summands:
            lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            if len(lam) > self.rank_k:
                raise ValueError(f"S^{lam}(C^{self.rank_k}) = 0: more rows than k")
            clean.append((int(mult), lam))
        object.__setattr__(self, "summands", tuple(clean))
        if self.fiber_rank() <= 0:
            raise ValueError("bundle has rank 0")

    @classmethod
    def of(cls, k: int, *summands: tuple[int, Iterable[int]]) -> BundleSpec:
        return cls(tuple((m, Partition(tuple(lam))) for m, lam in summands), k)

    def fiber_rank(self) -> int:
        return sum(m * hook_content_dim(lam, self.rank_k) for m, lam in self.summands)


class PlethysmCache:
    """JSON file of plethysm results keyed by ``m|lam|k``.

    Every read-check-write happens under a file lock.  Unreadable, foreign or
    wrong-version files are treated as empty and rewritten.
    """

    def __init__(self, path: str | os.PathLike[str]):
        self.path = Path(path)
        self._lock = FileLock(str(self.path) + ".lock")

    @staticmethod
    def key(m: int, lam: Partition, k: int) -> str:
        return f"{m}|{','.join(map(str, lam.parts))}|{k}"

    def _load(self) -> dict[str, list[list]]:
        try:
            doc = json.loads(self.path.read_text())
        except (OSError, ValueError):
            return {}
        if not isinstance(doc, dict) or doc.get("format") != CACHE_FORMAT or doc.get("version") != CACHE_VERSION:
            return {}
        entries = doc.get("entries")
        return entries if isinstance(entries, dict) else {}

    @staticmethod
    def _decode(raw: object, k: int) -> SchurExpansion | None:
        try:
            return SchurExpansion(k, {MixedWeight(tuple(p)): int(c) for p, c in raw})  # type: ignore[union-attr]
        except (TypeError, ValueError):
            return None

    def get_or_compute(self, m: int, lam: Partition, k: int, compute) -> SchurExpansion:
        key = self.key(m, lam, k)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            entries = self._load()
            if key in entries:
                hit = self._decode(entries[key], k)
                if hit is not None:
                    return hit
                log.warning("corrupt cache entry %s; recomputing", key)
            result = compute()
            entries[key] = [[list(w.parts), c] for w, c in result.items()]
            doc = {"format": CACHE_FORMAT, "version": CACHE_VERSION, "entries": dict(sorted(entries.items()))}
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            tmp.write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n")
            os.replace(tmp, self.path)
            return result


_cache: PlethysmCache | None = None
_cache_configured = False


def set_cache(path: str | os.PathLike[str] | None) -> None:
    """Use ``path`` as the persistent plethysm cache (``None`` disables it)."""
    global _cache, _cache_configured
    _cache = PlethysmCache(path) if path is not None else None
    _cache_configured = True


def get_cache() -> PlethysmCache | None:
    if not _cache_configured:
        env = os.environ.get(CACHE_ENV_VAR)
        return PlethysmCache(env) if env else None
    return _cache


def _complete_homogeneous(monomials: list[tuple[tuple[int, ...], int]], m: int) -> dict[tuple[int, ...], int]:
    """h_m evaluated on a multiset of monomials, as exponent -> coefficient."""
    k = len(monomials[0][0]) if monomials else 0
    levels: list[dict[tuple[int, ...], int]] = [{(0,) * k: 1}] + [{} for _ in range(m)]
    for w, mult in monomials:
        for _ in range(mult):
            # each monomial may be used any number of times: ascending degree order
            for d in range(1, m + 1):
                below = levels[d - 1]
                if not below:
                    continue
                cur = levels[d]
                for e, c in below.items():
                    key = tuple(x + y for x, y in zip(e, w))
                    cur[key] = cur.get(key, 0) + c
    return levels[m]


def schur_from_symmetric(poly: dict[tuple[int, ...], int], k: int) -> SchurExpansion:
    """Convert a symmetric polynomial in k variables to the Schur basis.

    Only dominant monomials are needed: repeatedly take the largest dominant
    exponent and subtract that multiple of the corresponding Schur polynomial.
    """
    dom = {e: c for e, c in poly.items() if c and all(a >= b for a, b in zip(e, e[1:]))}
    out: dict[MixedWeight, int] = {}
    while dom:
        lead = max(dom)
        c = dom[lead]
        if c < 0:
            raise ValueError(f"not a genuine representation: coefficient {c} at {lead}")
        out[MixedWeight(lead)] = c
        for e, kc in ssyt_weight_multiset(Partition(lead), k).items():
            if all(a >= b for a, b in zip(e, e[1:])):
                v = dom.get(e, 0) - c * kc
                if v:
                    dom[e] = v
                else:
                    dom.pop(e, None)
    return SchurExpansion(k, out)


def _plethysm_compute(m: int, lam: Partition, k: int) -> SchurExpansion:
    monomials = sorted(ssyt_weight_multiset(lam, k).items())
    return schur_from_symmetric(_complete_homogeneous(monomials, m), k)


@lru_cache(maxsize=None)
def _plethysm_memo(m: int, lam: Partition, k: int) -> SchurExpansion:
    cache = get_cache()
    if cache is None:
        return _plethysm_compute(m, lam, k)
    return cache.get_or_compute(m, lam, k, lambda: _plethysm_compute(m, lam, k))


def plethysm_sym(m: int, lam: Partition | Iterable[int], k: int) -> SchurExpansion:
    """Schur expansion of S^m(S^lam C^k) in k variables."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if m < 0:
        raise ValueError("m must be non-negative")
    if len(lam) > k:
        raise ValueError(f"{lam} has more than {k} rows")
    if m == 0:
        return SchurExpansion.trivial(k)
    if m == 1:
        return SchurExpansion.single(MixedWeight.from_partition(lam, k))
    return _plethysm_memo(m, lam, k)


def _arrangements(parts: tuple[int, ...], slots: int) -> int:
    """Number of distinct orderings of ``parts`` padded with zeros to ``slots`` entries."""
    padded = parts + (0,) * (slots - len(parts))
    count = factorial(slots)
    for v in set(padded):
        count //= factorial(padded.count(v))
    return count


def _sym_power_multi(a: int, lam: Partition, mult: int, k: int) -> SchurExpansion:
    # S^a(W^{+mult}) = sum over compositions of a into mult parts of tensor S^{a_i}W;
    # group compositions by their sorted parts.
    out = SchurExpansion(k)
    for mu in partitions_of(a, max_rows=mult) if a else [Partition()]:
        term = SchurExpansion.trivial(k)
        for part in mu.parts:
            term = term.tensor(plethysm_sym(part, lam, k))
        out = out + term.scale(_arrangements(mu.parts, mult))
    return out


def sym_power_of_bundle(m: int, spec: BundleSpec) -> SchurExpansion:
    """Schur expansion (rank k) of S^m of the fiber of ``spec``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    k = spec.rank_k
    result = SchurExpansion(k)

    def rec(i: int, rem: int, acc: SchurExpansion) -> None:
        nonlocal result
        if i == len(spec.summands):
            if rem == 0:
                result = result + acc
            return
        mult, lam = spec.summands[i]
        lower = rem if i == len(spec.summands) - 1 else 0
        for a in range(lower, rem + 1):
            rec(i + 1, rem - a, acc.tensor(_sym_power_multi(a, lam, mult, k)))

    rec(0, m, SchurExpansion.trivial(k))
    return result


def sym_power_dimension(m: int, spec: BundleSpec) -> int:
    return comb(spec.fiber_rank() + m - 1, m)


def sym_power_by_monomials(m: int, spec: BundleSpec) -> SchurExpansion:
    """Same decomposition as :func:`sym_power_of_bundle`, via h_m of the whole fiber's monomials."""
    k = spec.rank_k
    monomials: dict[tuple[int, ...], int] = defaultdict(int)
    for mult, lam in spec.summands:
        for e, c in ssyt_weight_multiset(lam, k).items():
            monomials[e] += mult * c
    return schur_from_symmetric(_complete_homogeneous(sorted(monomials.items()), m), k)
