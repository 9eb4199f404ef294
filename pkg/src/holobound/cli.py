"""Declarative experiment runner.

Experiments are described by a YAML config naming a task plus its inputs
(function, domain, orders, probe overrides); the runner executes the
corresponding library operation and emits a JSON report with four blocks:

* ``config``      -- echo of the parsed configuration
* ``results``     -- task output; byte-reproducible across runs (numbers
                     are rendered as 12-significant-digit decimal strings)
* ``provenance``  -- tool version, seed, evaluation counts
* ``timing``      -- wall-clock seconds (excluded from reproducibility)

Exit codes: 0 on completion (and verification pass), 1 when a verification
task reports a violation, 2 on configuration errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import yaml

from . import __version__, geometry
from .catalog import FunctionHandle, make
from .errors import ConfigError, HoloboundError, MissingDataError
from .favard import favard_constant, lk_constant, verify_max_form
from .geometry import (
    Disc,
    DiscExterior,
    Domain,
    Halfline,
    HalflineFamily,
    HalfPlanes,
    Plane,
    classify,
    recession_cone,
)
from .probe import ProbeConfig, ProbeReport, estimate_sup, find_divergence_witness
from .spaces import (
    OrderSet,
    chain_bound,
    gap_check_bounded,
    gap_check_halflines,
    membership_verdict,
    primitive,
)

TASKS = (
    "favard", "lk-table", "verify-lk", "recession", "probe", "witness",
    "membership", "chain-bound", "thm42", "thm47", "primitive",
)

PLOT_KINDS = ("sup-history", "witness-path", "cone-diagram")


@dataclass
class Report:
    config: dict
    results: dict
    provenance: dict
    timing: dict

    def to_json(self) -> str:
        payload = {
            "config": self.config,
            "results": self.results,
            "provenance": self.provenance,
            "timing": self.timing,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json(text: str) -> "Report":
        data = json.loads(text)
        return Report(data["config"], data["results"], data["provenance"],
                      data["timing"])


# ---------------------------------------------------------------------------
# value formatting (deterministic, 12 significant digits)
# ---------------------------------------------------------------------------


def _fmt(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.12g}"
    if isinstance(value, complex):
        return [_fmt(value.real), _fmt(value.imag)]
    if isinstance(value, str) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _fmt(v) for k, v in value.items()}
    raise ConfigError(f"cannot serialize value of type {type(value).__name__}")


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------


def load_config(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config is not valid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping")
    return data


def _check_keys(mapping: dict, allowed: dict[str, bool], context: str) -> None:
    if not isinstance(mapping, dict):
        raise ConfigError(f"{context} must be a mapping")
    unknown = set(mapping) - set(allowed)
    if unknown:
        raise ConfigError(f"unknown keys in {context}: {sorted(unknown)}")
    missing = [k for k, required in allowed.items() if required and k not in mapping]
    if missing:
        raise ConfigError(f"missing keys in {context}: {missing}")


def _as_complex(value, context: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and \
            all(isinstance(v, (int, float)) for v in value):
        return complex(value[0], value[1])
    raise ConfigError(f"{context} must be a number or a [re, im] pair")


def _as_float(value, context: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{context} must be a number")
    out = float(value)
    if not math.isfinite(out):
        raise ConfigError(f"{context} must be finite")
    return out


def _as_int(value, context: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{context} must be an integer")
    return value


def parse_function(spec, context: str = "function") -> FunctionHandle:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError(f"{context} must be a mapping with a 'kind'")
    kind = str(spec["kind"]).replace("_", "-")
    body = {k: v for k, v in spec.items() if k != "kind"}
    try:
        if kind == "pole":
            _check_keys(spec, {"kind": True, "w": True}, context)
            return make("pole", w=_as_complex(body["w"], f"{context}.w"))
        if kind == "boundary-essential":
            _check_keys(spec, {"kind": True}, context)
            return make("boundary-essential")
        if kind == "directional-exp":
            _check_keys(spec, {"kind": True, "theta": False, "direction": False},
                        context)
            if "direction" in body:
                return make("directional-exp",
                            direction=_as_complex(body["direction"],
                                                  f"{context}.direction"))
            if "theta" not in body:
                raise ConfigError(f"{context} needs 'theta' or 'direction'")
            return make("directional-exp",
                        theta=_as_float(body["theta"], f"{context}.theta"))
        if kind == "monomial":
            _check_keys(spec, {"kind": True, "power": True, "coeff": False},
                        context)
            kwargs = {"power": _as_int(body["power"], f"{context}.power")}
            if "coeff" in body:
                kwargs["coeff"] = _as_complex(body["coeff"], f"{context}.coeff")
            return make("monomial", **kwargs)
        if kind == "sine":
            _check_keys(spec, {"kind": True}, context)
            return make("sine")
        if kind == "constant":
            _check_keys(spec, {"kind": True, "value": True}, context)
            return make("constant", value=_as_complex(body["value"],
                                                      f"{context}.value"))
        if kind == "sum":
            _check_keys(spec, {"kind": True, "parts": True}, context)
            if not isinstance(body["parts"], list) or not body["parts"]:
                raise ConfigError(f"{context}.parts must be a non-empty list")
            parts = tuple(parse_function(p, f"{context}.parts[{i}]")
                          for i, p in enumerate(body["parts"]))
            return make("sum", parts=parts)
        if kind == "scalar-multiple":
            _check_keys(spec, {"kind": True, "scalar": True, "inner": True},
                        context)
            return make("scalar-multiple",
                        scalar=_as_complex(body["scalar"], f"{context}.scalar"),
                        inner=parse_function(body["inner"], f"{context}.inner"))
    except HoloboundError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"{context}: {exc}") from exc
    raise ConfigError(f"{context}: unknown function kind '{kind}'")


def parse_domain(spec, context: str = "domain") -> Domain:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError(f"{context} must be a mapping with a 'kind'")
    kind = str(spec["kind"]).replace("_", "-")
    try:
        if kind == "upper-half-plane":
            _check_keys(spec, {"kind": True}, context)
            return geometry.upper_half_plane()
        if kind == "strip":
            _check_keys(spec, {"kind": True, "y0": False, "y1": False}, context)
            return geometry.horizontal_strip(
                _as_float(spec.get("y0", 0.0), f"{context}.y0"),
                _as_float(spec.get("y1", 1.0), f"{context}.y1"))
        if kind == "quadrant":
            _check_keys(spec, {"kind": True}, context)
            return geometry.first_quadrant()
        if kind == "unit-square":
            _check_keys(spec, {"kind": True}, context)
            return geometry.unit_square()
        if kind == "unit-disc":
            _check_keys(spec, {"kind": True}, context)
            return geometry.unit_disc()
        if kind == "disc":
            _check_keys(spec, {"kind": True, "center": False, "radius": True},
                        context)
            return Disc(_as_complex(spec.get("center", 0.0), f"{context}.center"),
                        _as_float(spec["radius"], f"{context}.radius"))
        if kind == "disc-exterior":
            _check_keys(spec, {"kind": True, "center": False, "radius": True},
                        context)
            return DiscExterior(
                _as_complex(spec.get("center", 0.0), f"{context}.center"),
                _as_float(spec["radius"], f"{context}.radius"))
        if kind == "hpoly":
            _check_keys(spec, {"kind": True, "normals": True, "offsets": True,
                               "witness": True}, context)
            normals = tuple(_as_complex(n, f"{context}.normals[{i}]")
                            for i, n in enumerate(spec["normals"]))
            offsets = tuple(_as_float(c, f"{context}.offsets[{i}]")
                            for i, c in enumerate(spec["offsets"]))
            witness = _as_complex(spec["witness"], f"{context}.witness")
            return HalfPlanes(normals, offsets, witness)
        if kind == "real-line":
            _check_keys(spec, {"kind": True, "overshoot": False}, context)
            return geometry.real_line_rays(
                _as_float(spec.get("overshoot", 1.0), f"{context}.overshoot"))
        if kind == "halfline-family":
            _check_keys(spec, {"kind": True, "rays": True}, context)
            rays = []
            for i, ray in enumerate(spec["rays"]):
                _check_keys(ray, {"base": True, "direction": True,
                                  "overshoot": True}, f"{context}.rays[{i}]")
                rays.append(Halfline(
                    _as_complex(ray["base"], f"{context}.rays[{i}].base"),
                    _as_complex(ray["direction"],
                                f"{context}.rays[{i}].direction"),
                    _as_float(ray["overshoot"],
                              f"{context}.rays[{i}].overshoot")))
            return HalflineFamily(tuple(rays))
        if kind == "plane":
            _check_keys(spec, {"kind": True}, context)
            return Plane()
    except HoloboundError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"{context}: {exc}") from exc
    raise ConfigError(f"{context}: unknown domain kind '{kind}'")


def parse_probe_config(spec, context: str = "probe") -> ProbeConfig:
    if spec is None:
        return ProbeConfig()
    allowed = {
        "coarse_grid": False, "refinement_rounds": False,
        "boundary_band": False, "ray_t_max": False, "budget": False,
        "divergence_threshold": False, "clip_radius": False,
    }
    _check_keys(spec, allowed, context)
    kwargs = {}
    for key in ("coarse_grid", "refinement_rounds", "budget", "clip_radius"):
        if key in spec:
            kwargs[key] = _as_int(spec[key], f"{context}.{key}")
    for key in ("boundary_band", "ray_t_max", "divergence_threshold"):
        if key in spec:
            kwargs[key] = _as_float(spec[key], f"{context}.{key}")
    try:
        return ProbeConfig(**kwargs)
    except HoloboundError as exc:
        raise ConfigError(f"{context}: {exc}") from exc


def parse_orders(value, context: str = "orders") -> OrderSet:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{context} must be a non-empty list of integers")
    return OrderSet(tuple(_as_int(v, f"{context}[{i}]")
                          for i, v in enumerate(value)))


# ---------------------------------------------------------------------------
# task execution
# ---------------------------------------------------------------------------

_COMMON_KEYS = {"task": False, "seed": False}


def _task_keys(extra: dict[str, bool]) -> dict[str, bool]:
    merged = dict(_COMMON_KEYS)
    merged.update(extra)
    return merged


def _probe_report_dict(report: ProbeReport) -> dict:
    out = {
        "order": report.order,
        "sup_estimate": report.sup_estimate,
        "argmax": report.argmax,
        "history": list(report.history),
        "verdict": report.verdict,
        "evaluations": report.evaluations,
        "budget_exhausted": report.budget_exhausted,
        "converged": report.converged,
    }
    if report.witness is not None:
        out["witness"] = {
            "points": list(report.witness.points),
            "moduli": list(report.witness.moduli),
        }
    return out


def run_task(task: str, config: dict, seed: int) -> tuple[dict, bool | None]:
    """Execute one task; returns (results dict, pass verdict or None)."""
    if task == "favard":
        _check_keys(config, _task_keys({"n": True, "tol": False}), "config")
        n = _as_int(config["n"], "n")
        tol = _as_float(config.get("tol", 1e-10), "tol")
        res = favard_constant(n, tol)
        return {"n": n, "tol": tol, "value": res.value,
                "tail_bound": res.tail_bound,
                "terms_used": res.terms_used}, None

    if task == "lk-table":
        _check_keys(config, _task_keys({"n_max": False, "tol": False}), "config")
        n_max = _as_int(config.get("n_max", 12), "n_max")
        tol = _as_float(config.get("tol", 1e-9), "tol")
        rows = []
        for n in range(1, n_max + 1):
            for k in range(0, n + 1):
                res = lk_constant(n, k, tol)
                rows.append({"n": n, "k": k, "value": res.value,
                             "tail_bound": res.tail_bound})
        return {"n_max": n_max, "tol": tol, "rows": rows}, None

    if task == "verify-lk":
        _check_keys(config, _task_keys({
            "function": True, "domain": True, "alpha1": True, "l": True,
            "alpha2": True, "slack": False, "probe": False}), "config")
        f = parse_function(config["function"])
        d = parse_domain(config["domain"])
        cfg = parse_probe_config(config.get("probe"))
        record = verify_max_form(
            f, d, _as_int(config["alpha1"], "alpha1"),
            _as_int(config["l"], "l"), _as_int(config["alpha2"], "alpha2"),
            cfg, _as_float(config.get("slack", 0.05), "slack"))
        results = {
            "orders": list(record.orders),
            "sups": list(record.sups),
            "sources": list(record.sources),
            "constant": {"value": record.constant.value,
                         "tail_bound": record.constant.tail_bound},
            "lhs": record.lhs,
            "rhs": record.rhs,
            "slack": record.slack,
            "passed": record.passed,
        }
        return results, record.passed

    if task == "recession":
        _check_keys(config, _task_keys({"domain": True}), "config")
        d = parse_domain(config["domain"])
        cone = recession_cone(d)
        label = classify(cone)
        results = {
            "shape": cone.shape,
            "classification": {"kind": label.kind, "angle_deg": label.angle_deg},
            "directions": [h for h in cone.directions()],
        }
        if cone.shape == geometry.ARC:
            results["start_deg"] = math.degrees(cone.start)
            results["width_deg"] = math.degrees(cone.width)
        return results, None

    if task == "probe":
        _check_keys(config, _task_keys({
            "function": True, "domain": True, "order": True, "probe": False}),
            "config")
        f = parse_function(config["function"])
        d = parse_domain(config["domain"])
        cfg = parse_probe_config(config.get("probe"))
        report = estimate_sup(f, _as_int(config["order"], "order"), d, cfg)
        return _probe_report_dict(report), None

    if task == "witness":
        _check_keys(config, _task_keys({
            "function": True, "domain": True, "order": True,
            "threshold": False, "probe": False}), "config")
        f = parse_function(config["function"])
        d = parse_domain(config["domain"])
        cfg = parse_probe_config(config.get("probe"))
        threshold = _as_float(config.get("threshold", 1e3), "threshold")
        witness = find_divergence_witness(
            f, _as_int(config["order"], "order"), d, threshold, cfg)
        if witness is None:
            return {"found": False, "threshold": threshold}, None
        return {"found": True, "threshold": threshold,
                "points": list(witness.points),
                "moduli": list(witness.moduli)}, None

    if task == "membership":
        _check_keys(config, _task_keys({
            "function": True, "domain": True, "orders": True,
            "threshold": False, "probe": False}), "config")
        f = parse_function(config["function"])
        d = parse_domain(config["domain"])
        cfg = parse_probe_config(config.get("probe"))
        verdict = membership_verdict(
            f, parse_orders(config["orders"]), d, cfg,
            _as_float(config.get("threshold", 1e3), "threshold"))
        entries = []
        for e in verdict.entries:
            entry = {"order": e.order, "space": e.space, "status": e.status}
            if e.probe is not None:
                entry["sup_estimate"] = e.probe.sup_estimate
                entry["verdict"] = e.probe.verdict
            if e.witness is not None:
                entry["witness_points"] = len(e.witness.points)
                entry["witness_top"] = e.witness.moduli[-1]
            if e.oscillation is not None:
                entry["oscillation"] = {
                    "boundary_point": e.oscillation.boundary_point,
                    "scales": list(e.oscillation.scales),
                    "values": list(e.oscillation.oscillations),
                    "decayed": e.oscillation.decayed,
                }
            entries.append(entry)
        return {"entries": entries, "all_member": verdict.all_member()}, None

    if task == "chain-bound":
        _check_keys(config, _task_keys({
            "function": True, "domain": True, "order_low": True,
            "order_high": True, "anchor": False, "slack": False,
            "probe": False}), "config")
        f = parse_function(config["function"])
        d = parse_domain(config["domain"])
        cfg = parse_probe_config(config.get("probe"))
        anchor = None
        if "anchor" in config:
            anchor = _as_complex(config["anchor"], "anchor")
        res = chain_bound(
            f, _as_int(config["order_low"], "order_low"),
            _as_int(config["order_high"], "order_high"), d, anchor, cfg,
            _as_float(config.get("slack", 0.02), "slack"))
        results = {
            "order_low": res.order_low,
            "order_high": res.order_high,
            "lhs": res.lhs,
            "rhs": res.rhs,
            "slack": res.slack,
            "passed": res.passed,
            "anchor": res.anchor,
            "anchor_terms": list(res.anchor_terms),
            "diameter": res.diam,
            "rhs_source": res.rhs_source,
        }
        return results, res.passed

    if task in ("thm42", "thm47"):
        _check_keys(config, _task_keys({
            "function": True, "domain": True, "orders": True, "slack": False,
            "probe": False}), "config")
        f = parse_function(config["function"])
        d = parse_domain(config["domain"])
        cfg = parse_probe_config(config.get("probe"))
        orders = parse_orders(config["orders"])
        if task == "thm42":
            report = gap_check_halflines(
                f, orders, d, cfg, _as_float(config.get("slack", 0.05), "slack"))
            records = [{
                "orders": list(r.orders), "sups": list(r.sups),
                "sources": list(r.sources), "lhs": r.lhs, "rhs": r.rhs,
                "passed": r.passed,
            } for r in report.records]
        else:
            report = gap_check_bounded(
                f, orders, d, cfg, _as_float(config.get("slack", 0.02), "slack"))
            records = [{
                "order_low": r.order_low, "order_high": r.order_high,
                "lhs": r.lhs, "rhs": r.rhs, "passed": r.passed,
                "rhs_source": r.rhs_source,
            } for r in report.records]
        results = {
            "orders": list(orders.elements),
            "checked_orders": list(report.checked_orders),
            "records": records,
            "passed": report.passed,
        }
        return results, report.passed

    if task == "primitive":
        _check_keys(config, _task_keys({
            "function": True, "domain": True, "base": True, "z": True,
            "tol": False}), "config")
        f = parse_function(config["function"])
        d = parse_domain(config["domain"])
        base = _as_complex(config["base"], "base")
        z = _as_complex(config["z"], "z")
        value = primitive(f, base, z, d,
                          _as_float(config.get("tol", 1e-10), "tol"))
        return {"base": base, "z": z, "value": value}, None

    raise ConfigError(f"unknown task '{task}'")


def run(task: str, config: dict, seed: int = 0) -> tuple[Report, bool | None]:
    """Validate, execute and wrap one experiment."""
    if "task" in config:
        declared = str(config["task"]).replace("_", "-")
        if declared != task:
            raise ConfigError(
                f"config declares task '{declared}' but '{task}' was requested")
    if "seed" in config:
        _as_int(config["seed"], "seed")
    started = time.perf_counter()
    results, passed = run_task(task, config, seed)
    elapsed = time.perf_counter() - started
    report = Report(
        config=_fmt({**config, "task": task}),
        results=_fmt(results),
        provenance={
            "tool": "holobound",
            "version": __version__,
            "seed": seed,
            "task": task,
            "evaluations": _evaluation_count(results),
        },
        timing={"seconds": round(elapsed, 6)},
    )
    return report, passed


def _evaluation_count(results: dict) -> int:
    """Total function evaluations / series terms behind the results."""
    count = 0
    for key in ("evaluations", "terms_used"):
        if isinstance(results.get(key), int):
            count += results[key]
    for entry in results.get("entries", []):
        if isinstance(entry, dict) and isinstance(entry.get("evaluations"), int):
            count += entry["evaluations"]
    for row in results.get("rows", []):
        if isinstance(row, dict) and isinstance(row.get("terms_used"), int):
            count += row["terms_used"]
    return count


# ---------------------------------------------------------------------------
# plots
# ---------------------------------------------------------------------------


def emit_plot(report: Report, kind: str, path: str | Path) -> Path:
    """Render one static SVG from report data; errors if the data is absent."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    kind = kind.replace("_", "-")
    path = Path(path)
    results = report.results
    fig, ax = plt.subplots(figsize=(5, 4))
    try:
        if kind == "sup-history":
            history = results.get("history")
            if not history:
                raise MissingDataError("report has no probe history")
            values = [float(h) for h in history]
            ax.plot(range(len(values)), values, marker="o")
            ax.set_xlabel("round")
            ax.set_ylabel("sup estimate")
            ax.set_title("sup estimate per refinement round")
        elif kind == "witness-path":
            witness = results.get("witness") or (
                results if "points" in results else None)
            if not witness or not witness.get("points"):
                raise MissingDataError("report has no witness points")
            xs = [float(p[0]) for p in witness["points"]]
            ys = [float(p[1]) for p in witness["points"]]
            ax.plot(xs, ys, marker="o", linestyle="-")
            _draw_domain_outline(ax, report.config.get("domain"))
            ax.set_aspect("equal")
            ax.set_title("divergence witness path")
        elif kind == "cone-diagram":
            if "classification" not in results:
                raise MissingDataError("report has no recession data")
            _draw_cone(ax, results)
            ax.set_aspect("equal")
            ax.set_title(f"recession cone: {results['classification']['kind']}")
        else:
            raise ConfigError(f"unknown plot kind '{kind}'")
        fig.tight_layout()
        fig.savefig(path, format="svg")
    finally:
        plt.close(fig)
    return path


def _draw_domain_outline(ax, domain_cfg) -> None:
    import numpy as np

    if not isinstance(domain_cfg, dict):
        return
    kind = str(domain_cfg.get("kind", "")).replace("_", "-")
    if kind in ("unit-disc", "disc"):
        radius = float(domain_cfg.get("radius", 1.0))
        center = domain_cfg.get("center", [0.0, 0.0])
        if isinstance(center, (int, float)):
            center = [center, 0.0]
        ts = np.linspace(0.0, 2.0 * math.pi, 256)
        ax.plot(float(center[0]) + radius * np.cos(ts),
                float(center[1]) + radius * np.sin(ts),
                linewidth=1.0, color="gray")


def _draw_cone(ax, results: dict) -> None:
    import numpy as np

    shape = results.get("shape")
    if shape == geometry.ARC:
        start = math.radians(float(results["start_deg"]))
        width = math.radians(float(results["width_deg"]))
        ts = np.linspace(start, start + width, 128)
        xs = np.concatenate([[0.0], np.cos(ts), [0.0]])
        ys = np.concatenate([[0.0], np.sin(ts), [0.0]])
        ax.fill(xs, ys, alpha=0.4)
    else:
        for p in results.get("directions", []):
            ax.annotate("", xy=(float(p[0]), float(p[1])), xytext=(0, 0),
                        arrowprops={"arrowstyle": "->"})
    circle = np.linspace(0.0, 2.0 * math.pi, 256)
    ax.plot(np.cos(circle), np.sin(circle), linewidth=0.5, color="gray")
    ax.set_xlim(-1.2, 1.2)
    ax.set_ylim(-1.2, 1.2)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _summary_lines(task: str, report: Report, passed: bool | None) -> list[str]:
    lines = [f"task       : {task}",
             f"version    : {report.provenance['version']}"]
    flat = [(k, v) for k, v in sorted(report.results.items())
            if not isinstance(v, (list, dict))]
    for key, value in flat:
        lines.append(f"{key:<11}: {value}")
    if passed is not None:
        lines.append(f"verdict    : {'PASS' if passed else 'FAIL'}")
    lines.append(f"timing     : {report.timing['seconds']} s")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holobound",
        description="run declarative derivative-boundedness experiments")
    sub = parser.add_subparsers(dest="task", required=True)
    for task in TASKS:
        p = sub.add_parser(task, help=f"run the {task} task")
        p.add_argument("--config", required=True, help="YAML experiment config")
        p.add_argument("--out", help="write the JSON report to this path")
        p.add_argument("--plot", choices=PLOT_KINDS,
                       help="emit an SVG plot next to the report")
        p.add_argument("--seed", type=int, default=None,
                       help="seed echoed in provenance (default: config seed or 0)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        seed = args.seed if args.seed is not None else config.get("seed", 0)
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ConfigError("seed must be an integer")
        report, passed = run(args.task, config, seed)
    except ConfigError as exc:
        print(f"config error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except HoloboundError as exc:
        print(f"task error [{exc.code}]: {exc}", file=sys.stderr)
        return 2

    for line in _summary_lines(args.task, report, passed):
        print(line)
    if args.out:
        out_path = Path(args.out)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(report.to_json())
        print(f"report     : {out_path}")
    if args.plot:
        base = Path(args.out) if args.out else Path(f"{args.task}-report.json")
        plot_path = base.with_suffix(f".{args.plot}.svg")
        try:
            emit_plot(report, args.plot, plot_path)
        except MissingDataError as exc:
            print(f"plot error [{exc.code}]: {exc}", file=sys.stderr)
            return 2
        print(f"plot       : {plot_path}")
    return 0 if passed is not False else 1


if __name__ == "__main__":
    sys.exit(main())
