"""Named presentations and the JSON config format.

Preset names:

* ``ci:N:d1[,d2,...]`` - complete intersection of degrees d_i in P^{N-1} (k = 1)
* ``isotropic-orth:N:k`` - isotropic subspaces of a quadric, E = S^2 T
* ``isotropic-symp:N:k`` - isotropic subspaces of a symplectic form, E = Lambda^2 T
* ``beauville-donagi`` - N = 6, k = 2, E = S^3 T (lines on a cubic fourfold)

A config file is ``{"N": .., "k": .., "t": .., "bundle": [{"mult": .., "lambda": [..]}]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .glsm import GLSMPresentation, isotropic_presentation
from .partitions import Partition
from .plethysm import BundleSpec


class ConfigError(ValueError):
    """Unknown preset or malformed config; the CLI maps it to a usage error."""


@dataclass(frozen=True)
class PresetConfig:
    name: str
    N: int
    k: int
    t: int
    summands: tuple[tuple[int, tuple[int, ...]], ...]
    note: str = ""
    kind: str = "custom"  # ci, isotropic-orth, isotropic-symp, beauville-donagi, custom

    def presentation(self) -> GLSMPresentation:
        try:
            spec = BundleSpec(tuple((m, Partition(lam)) for m, lam in self.summands), self.k)
            return GLSMPresentation(self.N, self.k, self.t, spec)
        except ValueError as exc:
            raise ConfigError(f"{self.name}: {exc}") from exc

    def to_dict(self) -> dict[str, Any]:
        return {
            "N": self.N,
            "k": self.k,
            "t": self.t,
            "bundle": [{"mult": m, "lambda": list(lam)} for m, lam in self.summands],
        }

    @classmethod
    def from_dict(cls, doc: Any, name: str = "config") -> PresetConfig:
        if not isinstance(doc, dict):
            raise ConfigError("config must be an object with fields N, k, t, bundle")
        missing = [f for f in ("N", "k", "bundle") if f not in doc]
        if missing:
            raise ConfigError(f"config is missing field(s): {', '.join(missing)}")
        try:
            N, k, t = _int(doc["N"], "N"), _int(doc["k"], "k"), _int(doc.get("t", 1), "t")
            bundle = doc["bundle"]
            if not isinstance(bundle, list) or not bundle:
                raise ConfigError("bundle must be a non-empty list of {mult, lambda}")
            summands = []
            for entry in bundle:
                if not isinstance(entry, dict) or "lambda" not in entry:
                    raise ConfigError(f"bad bundle entry {entry!r}")
                lam = entry["lambda"]
                if not isinstance(lam, list):
                    raise ConfigError(f"lambda must be a list of integers, got {lam!r}")
                summands.append((_int(entry.get("mult", 1), "mult"), tuple(_int(x, "lambda") for x in lam)))
        except (TypeError, KeyError) as exc:
            raise ConfigError(f"malformed config: {exc}") from exc
        cfg = cls(name, N, k, t, tuple(summands))
        cfg.presentation()  # validate eagerly
        return cfg

    @classmethod
    def from_presentation(cls, p: GLSMPresentation, name: str = "config") -> PresetConfig:
        return cls(name, p.N, p.k, p.t, tuple((m, lam.parts) for m, lam in p.bundle.summands))


def _int(x: Any, field_name: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ConfigError(f"{field_name} must be an integer, got {x!r}")
    return x


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ConfigError(f"{what}: expected comma-separated integers, got {text!r}") from None


def preset(name: str) -> PresetConfig:
    parts = name.split(":")
    head = parts[0]
    if head == "beauville-donagi" and len(parts) == 1:
        return PresetConfig(
            name, 6, 2, 1, ((1, (3,)),), "lines on a cubic fourfold in P^5, a hyperkaehler fourfold", "beauville-donagi"
        )
    if head == "ci" and len(parts) == 3:
        (N,) = _ints(parts[1], "N")
        degrees = _ints(parts[2], "degrees")
        if any(d < 1 for d in degrees):
            raise ConfigError(f"{name}: degrees must be positive")
        if N < 2:
            raise ConfigError(f"{name}: need N >= 2 so that 1 <= k < N")
        summands = tuple((degrees.count(d), (d,)) for d in sorted(set(degrees), reverse=True))
        note = f"complete intersection of degrees {degrees} in P^{N - 1}"
        return PresetConfig(name, N, 1, 1, summands, note, "ci")
    if head in ("isotropic-orth", "isotropic-symp") and len(parts) == 3:
        (N,) = _ints(parts[1], "N")
        (k,) = _ints(parts[2], "k")
        kind = "orthogonal" if head == "isotropic-orth" else "symplectic"
        try:
            p = isotropic_presentation(N, k, kind)
        except ValueError as exc:
            raise ConfigError(f"{name}: {exc}") from exc
        note = f"{kind} isotropic Grassmannian of {k}-planes in C^{N}"
        return PresetConfig(name, N, k, 1, tuple((m, lam.parts) for m, lam in p.bundle.summands), note, head)
    raise ConfigError(
        f"unknown preset {name!r}; expected ci:N:d1[,d2..], isotropic-orth:N:k, isotropic-symp:N:k or beauville-donagi"
    )


def load_config(path: str | Path) -> PresetConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return PresetConfig.from_dict(doc, name=str(path))


def standard_presets() -> list[str]:
    """The preset names exercised by the acceptance suite."""
    return [
        "ci:2:2",
        "ci:3:3",
        "ci:4:2,2",
        "ci:5:5",
        "isotropic-orth:4:1",
        "isotropic-orth:4:2",
        "isotropic-orth:6:2",
        "isotropic-symp:4:2",
        "isotropic-symp:6:2",
        "beauville-donagi",
    ]
