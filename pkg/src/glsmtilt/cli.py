"""Command line front end: ``glsmtilt {validate,cone,hilbert,vanishing,oracle}``.

Every command builds a report document.  Its canonical body (sorted keys,
compact separators, no timings) is what ``--json`` prints under ``report``
and what the ``digest`` hashes; wall-clock times live in a separate
``timing`` field.  Exit codes: 0 all checks pass, 1 some check fails,
2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Iterator, Sequence

from . import __version__, git, glsm, hilbert, oracles, plethysm
from .bott import HomogeneousBundle, euler_characteristic
from .glsm import GLSMPresentation
from .partitions import Partition
from .presets import ConfigError, PresetConfig, load_config, preset

log = logging.getLogger("glsmtilt")

SCHEMA = "glsmtilt-report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest(body: dict[str, Any]) -> str:
    return hashlib.sha256(canonical_json(body).encode()).hexdigest()


def default_cache_path() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or str(Path.home() / ".cache")
    return Path(base) / "glsmtilt" / "plethysm.json"


# ---------------------------------------------------------------- sections


class Timer:
    def __init__(self) -> None:
        self.sections: dict[str, float] = {}

    @contextmanager
    def section(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.sections[name] = round(time.perf_counter() - start, 6)


def _flag(f: glsm.Flag) -> dict[str, Any]:
    return {"value": f.value, "hypotheses": list(f.hypotheses)}


def validate_section(p: GLSMPresentation) -> dict[str, Any]:
    rep = glsm.validate(p)
    return {
        "passed": rep.passed,
        "conditions": [
            {
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
                "witness": _witness(c.witness),
            }
            for c in rep.conditions
        ],
        "homogeneous": "GL(V) acts transitively on B; satisfied by construction",
    }


def _witness(w: Any) -> Any:
    if w is None:
        return None
    if isinstance(w, tuple):
        return [_witness(x) for x in w]
    if hasattr(w, "parts"):
        return list(w.parts)
    return w


def cone_section(cfg: PresetConfig, p: GLSMPresentation) -> dict[str, Any]:
    inv = glsm.cone_invariants(p)
    gor = git.gorenstein_check(p)
    c_E, target = inv.crepancy_degree
    out: dict[str, Any] = {
        "dim_B": {"value": inv.dim_B, "route": "formula"},
        "rank_E": {"value": inv.rank_E, "route": "hook_content"},
        "dim_E": {"value": inv.dim_E, "route": "formula"},
        "dim_H": {"value": inv.dim_H, "route": "hook_content"},
        "dim_C_E": None if inv.dim_C_E is None else {"value": inv.dim_C_E, "route": "catalecticant"},
        "birational": inv.birational,
        "exc_codims": None if inv.exc_codims is None else {"value": list(inv.exc_codims), "route": "catalecticant"},
        "min_preimage_codim": inv.min_preimage_codim,
        "crepancy_degree": {"c_E": c_E, "target": target, "route": "weight_sum"},
        "gorenstein": {
            "det_trivial": gor.det_trivial,
            "weight_sum": list(gor.weight_sum),
            "codim_nonstable": gor.codim_nonstable,
            "codim_ok": gor.codim_ok,
        },
        "flags": {name: _flag(f) for name, f in sorted(inv.flags.items())},
    }
    checks = []
    if inv.dim_C_E is not None:
        checks.append({"name": "collapsing_birational", "passed": bool(inv.birational)})
    if cfg.kind in ("isotropic-orth", "isotropic-symp"):
        kind = "orthogonal" if cfg.kind == "isotropic-orth" else "symplectic"
        dim_Z, expected = glsm.isotropic_dims(p.N, p.k, kind)
        out["isotropic"] = {"kind": kind, "dim": dim_Z, "expected_dim": expected, "route": "formula"}
        checks.append({"name": "isotropic_expected_dimension", "passed": dim_Z == expected})
        if p.N == 2 * p.k and kind == "orthogonal":
            out["isotropic"]["note"] = "two connected components"
    out["checks"] = checks
    out["passed"] = all(c["passed"] for c in checks)
    return out


def _init_worker(cache_path: str | None) -> None:
    plethysm.set_cache(cache_path)


def hilbert_section(
    p: GLSMPresentation, series: str, max_m: int, alpha: Sequence[int] | None, executor: Executor | None
) -> dict[str, Any]:
    tables = [hilbert.hilbert_table(p, series, max_m, alpha=alpha, executor=executor)]  # type: ignore[arg-type]
    if series == "R":
        tables.append(hilbert.hilbert_table(p, "R", max_m, route="bott", executor=executor))
    if series == "Lambda" and p.k == 1:
        tables.append(hilbert.hilbert_table(p, "Lambda", max_m, route="closed_form", executor=executor))
    agree = all(t.dims == tables[0].dims for t in tables)
    out: dict[str, Any] = {
        "series": tables[0].series,
        "max_m": max_m,
        "tables": [{"route": t.route, "dims": list(t.dims)} for t in tables],
        "routes_agree": agree,
        "passed": agree,
    }
    if series == "Lambda":
        out["tilting_verified"] = tables[0].tilting_verified
        if not tables[0].tilting_verified:
            out["warning"] = "tilting hypothesis unverified: H^0 dimensions only"
        out["collection"] = [list(a.parts) for a in hilbert.kapranov_collection(p.N, p.k)]
    return out


def vanishing_section(p: GLSMPresentation, i_max: int, max_m: int) -> dict[str, Any]:
    rep = hilbert.vanishing_check(p, i_max, max_m)
    w = rep.witness
    return {
        "passed": rep.passed,
        "i_max": rep.i_max,
        "m_max": rep.m_max,
        "slices_checked": rep.slices_checked,
        "route": "bott",
        "note": rep.note,
        "witness": None
        if w is None
        else {"alpha": list(w.alpha), "beta": list(w.beta), "m": w.m, "i": w.i, "gamma": list(w.gamma), "dim": w.dimension},
    }


def _molien_job(args: tuple[GLSMPresentation, int]) -> tuple[int, int]:
    p, m = args
    return oracles.molien_invariant_dim(p, m), hilbert.dim_R(p, m)


def _localization_job(args: tuple[GLSMPresentation, int]) -> tuple[int, int]:
    p, m = args
    bundle = HomogeneousBundle(p.context, hilbert.hom_slice(p, (), (), m))
    return oracles.localization_euler(bundle), euler_characteristic(bundle)


def _map(executor: Executor | None, fn: Callable, jobs: list) -> list:
    return list(executor.map(fn, jobs)) if executor is not None else [fn(j) for j in jobs]


def oracle_section(p: GLSMPresentation, max_m: int, executor: Executor | None) -> dict[str, Any]:
    jobs = [(p, m) for m in range(max_m + 1)]
    out: dict[str, Any] = {}
    checks = []
    if p.k <= oracles.MAX_MOLIEN_RANK:
        rows = _map(executor, _molien_job, jobs)
        out["molien_vs_R"] = [{"m": m, "molien": a, "porras": b, "agree": a == b} for m, (a, b) in enumerate(rows)]
        checks.extend(r["agree"] for r in out["molien_vs_R"])
    else:
        out["molien_vs_R"] = {"skipped": f"Molien-Weyl oracle supports k <= {oracles.MAX_MOLIEN_RANK}"}
    if p.N <= oracles.MAX_LOCALIZATION_N:
        rows = _map(executor, _localization_job, jobs)
        out["localization_vs_bott"] = [
            {"m": m, "bundle": "S^m E^", "localization": a, "bott": b, "agree": a == b} for m, (a, b) in enumerate(rows)
        ]
        checks.extend(r["agree"] for r in out["localization_vs_bott"])
    else:
        out["localization_vs_bott"] = {"skipped": f"localization oracle supports N <= {oracles.MAX_LOCALIZATION_N}"}
    out["passed"] = all(checks)
    return out


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glsmtilt", description="Exact invariants of GLSMs over Grassmannians.")
    parser.add_argument("--version", action="version", version=f"glsmtilt {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="ci:N:d1[,d2..] | isotropic-orth:N:k | isotropic-symp:N:k | beauville-donagi")
    src.add_argument("--config", help="JSON file {N, k, t, bundle: [{mult, lambda}]}")
    common.add_argument("--json", action="store_true", help="emit the structured report")
    common.add_argument("--workers", type=int, default=1, help="process pool size for degree sweeps")
    cache = common.add_mutually_exclusive_group()
    cache.add_argument("--cache", help=f"plethysm cache file (default: ${plethysm.CACHE_ENV_VAR} or XDG cache dir)")
    cache.add_argument("--no-cache", action="store_true", help="do not use a persistent plethysm cache")
    common.add_argument("-v", "--verbose", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the GLSM axioms")
    sub.add_parser("cone", parents=[common], help="cone invariants, crepancy and Gorenstein data")
    h = sub.add_parser("hilbert", parents=[common], help="graded dimensions of R, Lambda or M_alpha")
    h.add_argument("--max-degree", type=int, required=True)
    h.add_argument("--series", choices=["R", "Lambda", "M"], default="R")
    h.add_argument("--alpha", help="comma-separated partition in P(k, N-k), for --series M")
    v = sub.add_parser("vanishing", parents=[common], help="tilting vanishing check")
    v.add_argument("--max-i", type=int, required=True)
    v.add_argument("--max-degree", type=int, required=True)
    o = sub.add_parser("oracle", parents=[common], help="compare against Molien-Weyl and localization")
    o.add_argument("--max-degree", type=int, required=True)
    return parser


def _resolve_cache(args: argparse.Namespace) -> str | None:
    if args.no_cache:
        return None
    if args.cache:
        return args.cache
    return os.environ.get(plethysm.CACHE_ENV_VAR) or str(default_cache_path())


def _config(args: argparse.Namespace) -> PresetConfig:
    return preset(args.preset) if args.preset else load_config(args.config)


def run(args: argparse.Namespace) -> tuple[dict[str, Any], dict[str, float]]:
    """Build ``(canonical body, timings)``; raises UsageError on bad parameters."""
    cfg = _config(args)
    p = cfg.presentation()
    for name in ("max_degree", "max_i"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    alpha = None
    if args.command == "hilbert":
        if args.series == "M":
            if args.alpha is None:
                raise UsageError("--series M needs --alpha")
            try:
                alpha = [int(x) for x in args.alpha.split(",") if x != ""]
                lam = Partition(tuple(alpha))
            except ValueError as exc:
                raise UsageError(f"--alpha: {exc}") from exc
            if len(lam) > p.k or lam[0] > p.N - p.k:
                raise UsageError(f"--alpha {lam} is not in P({p.k}, {p.N - p.k}), the Kapranov index set")
        elif args.alpha is not None:
            raise UsageError("--alpha only applies to --series M")

    cache_path = _resolve_cache(args)
    plethysm.set_cache(cache_path)
    timer = Timer()
    body: dict[str, Any] = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": args.command,
        "preset": {"name": cfg.name, "note": cfg.note, **cfg.to_dict()},
    }
    executor: Executor | None = None
    if args.workers > 1 and args.command in ("hilbert", "oracle"):
        executor = ProcessPoolExecutor(args.workers, initializer=_init_worker, initargs=(cache_path,))
    try:
        if args.command == "validate":
            with timer.section("validate"):
                body["validate"] = validate_section(p)
        elif args.command == "cone":
            with timer.section("cone"):
                body["cone"] = cone_section(cfg, p)
        elif args.command == "hilbert":
            with timer.section("hilbert"):
                body["hilbert"] = hilbert_section(p, args.series, args.max_degree, alpha, executor)
        elif args.command == "vanishing":
            with timer.section("vanishing"):
                body["vanishing"] = vanishing_section(p, args.max_i, args.max_degree)
        elif args.command == "oracle":
            with timer.section("oracle"):
                body["oracle"] = oracle_section(p, args.max_degree, executor)
    finally:
        if executor is not None:
            executor.shutdown()
    body["passed"] = bool(body[args.command]["passed"])
    return body, timer.sections


def render_text(body: dict[str, Any]) -> str:
    lines = [f"glsmtilt {body['tool_version']}  {body['command']}  preset {body['preset']['name']}"]
    pre = body["preset"]
    summands = " + ".join(f"{b['mult']}*S^({','.join(map(str, b['lambda']))})" for b in pre["bundle"])
    lines.append(f"  N={pre['N']} k={pre['k']} t={pre['t']}  E: {summands}")
    section = body[body["command"]]
    cmd = body["command"]
    if cmd == "validate":
        for c in section["conditions"]:
            lines.append(f"  [{'PASS' if c['passed'] else 'FAIL'}] {c['name']}: {c['detail']}")
    elif cmd == "cone":
        for key in ("dim_B", "rank_E", "dim_E", "dim_H", "dim_C_E", "exc_codims"):
            v = section[key]
            if v is not None:
                lines.append(f"  {key:<20} {v['value']}  [{v['route']}]")
        lines.append(f"  {'min_preimage_codim':<20} {section['min_preimage_codim']}")
        cd = section["crepancy_degree"]
        lines.append(f"  {'crepancy_degree':<20} c_E={cd['c_E']} N={cd['target']}")
        g = section["gorenstein"]
        lines.append(f"  {'det_trivial':<20} {g['det_trivial']}  codim_ok={g['codim_ok']}")
        for name, f in section["flags"].items():
            lines.append(f"  flag {name:<15} {f['value']}  <- {'; '.join(f['hypotheses'])}")
        if "isotropic" in section:
            iso = section["isotropic"]
            lines.append(f"  isotropic {iso['kind']}: dim {iso['dim']} (expected {iso['expected_dim']})")
    elif cmd == "hilbert":
        lines.append(f"  series {section['series']}, m = 0..{section['max_m']}")
        for t in section["tables"]:
            lines.append(f"  {t['route']:<12} " + " ".join(str(d) for d in t["dims"]))
        lines.append(f"  routes agree: {section['routes_agree']}")
        if "tilting_verified" in section:
            lines.append(f"  tilting vanishing verified: {section['tilting_verified']}")
    elif cmd == "vanishing":
        lines.append(f"  {section['note']}; {section['slices_checked']} slices")
        if section["witness"]:
            lines.append(f"  first violation: {section['witness']}")
    elif cmd == "oracle":
        for key in ("molien_vs_R", "localization_vs_bott"):
            rows = section[key]
            if isinstance(rows, dict):
                lines.append(f"  {key}: skipped ({rows['skipped']})")
                continue
            for r in rows:
                vals = {k: v for k, v in r.items() if k not in ("m", "agree", "bundle")}
                lines.append(f"  {key} m={r['m']}: {vals} {'ok' if r['agree'] else 'MISMATCH'}")
    lines.append("PASS" if body["passed"] else "FAIL")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        body, timing = run(args)
    except (ConfigError, UsageError) as exc:
        print(f"glsmtilt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        doc = {"report": body, "digest": digest(body), "timing": timing}
        print(json.dumps(doc, sort_keys=True, indent=1))
    else:
        print(render_text(body))
    return EXIT_OK if body["passed"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
