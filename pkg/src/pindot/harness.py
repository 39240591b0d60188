"""Verification campaigns over grids of fields.

A campaign draws ``trials`` seeded point sets per field and runs the selected
checks on each.  Checks whose hypotheses hold are *theorem-backed*: any failure
is a defect.  When the drawn set is too small for the hypothesis (|E| <= q) the
check switches to a brute-force exploratory variant whose outcome is data, not a
verdict.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .errors import PreconditionError, VerificationError
from .ffield import FieldSpec, make_field, parse_field
from .incidence import first_moment, moment_profile, second_moment_formula
from .pinned import max_pinned_pair, pinned_pair, threshold, verify_imp
from .plane import PointSet, all_lines, dot_set, line_points, sub_points
from .sampling import sample_point_set, sample_symmetric_set, set_digest
from .sumsets import (
    ScalarSet,
    complete_pair_check,
    full_field_pinned_sum,
    glibichuk_check,
    pinned_dot_count_range,
    subfield_example,
    zero_options,
)

CHECKS = ("identity", "theorem", "imp", "corollary", "sharpness", "glibichuk", "lines")
FAMILIES = ("random", "subfield")
_SIZE_RE = re.compile(r"^\s*(\d*)\s*q\s*(?:([+-])\s*(\d+))?\s*$")


def set_size_for(expr: str, q: int) -> int:
    """Evaluate a set-size expression such as ``q+1``, ``q``, ``2q`` or ``17``."""
    expr = str(expr).strip()
    if expr.isdigit():
        return int(expr)
    m = _SIZE_RE.match(expr)
    if not m:
        raise ValueError(f"unsupported set size expression {expr!r}")
    n = int(m.group(1) or 1) * q
    if m.group(2):
        n += int(m.group(3)) if m.group(2) == "+" else -int(m.group(3))
    return n


@dataclass(frozen=True)
class CampaignConfig:
    fields: tuple[tuple[int, int], ...]
    trials: int = 10
    set_size: str = "q+1"
    checks: tuple[str, ...] = ("identity", "theorem", "imp", "corollary")
    seed: int = 0
    family: str = "random"

    def __post_init__(self) -> None:
        if not self.fields:
            raise ValueError("a campaign needs at least one field")
        if not self.checks:
            raise ValueError("a campaign needs at least one check")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        for p, k in self.fields:
            spec = make_field(p, k)
            if self.family == "subfield" and k % 2:
                raise ValueError(f"subfield family needs an even degree, got field {p},{k}")
            if self.family == "random" and not 0 <= set_size_for(self.set_size, spec.q) <= spec.q ** 2:
                raise ValueError(f"set size {self.set_size} is out of range for q={spec.q}")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CampaignConfig":
        fields = []
        for f in data["fields"]:
            spec = parse_field(f) if isinstance(f, str) else make_field(*f)
            fields.append((spec.p, spec.k))
        checks = data.get("checks", cls.checks)
        if isinstance(checks, str):
            checks = [c.strip() for c in checks.split(",") if c.strip()]
        return cls(
            fields=tuple(fields),
            trials=int(data.get("trials", cls.trials)),
            set_size=str(data.get("set_size", cls.set_size)),
            checks=tuple(checks),
            seed=int(data.get("seed", cls.seed)),
            family=data.get("family", cls.family),
        )

    def to_json(self) -> dict:
        return {
            "fields": [f"{p},{k}" for p, k in self.fields],
            "trials": self.trials,
            "set_size": self.set_size,
            "checks": list(self.checks),
            "seed": self.seed,
            "family": self.family,
        }


def _outcome(ok: bool, backed: bool, **detail: Any) -> dict:
    return {"status": "pass" if ok else "fail", "theorem_backed": backed, **detail}


def _skip(reason: str) -> dict:
    return {"status": "skip", "theorem_backed": False, "reason": reason}


# -- individual checks -------------------------------------------------------

def check_identity(E: PointSet) -> dict:
    profile = moment_profile(E)
    lhs, rhs = profile.total, second_moment_formula(E)
    fm = first_moment(E)
    ok = lhs == rhs and fm == len(E) * (E.spec.q + 1)
    return _outcome(ok, True, lhs=lhs, rhs=rhs, first_moment=fm, profile=profile.to_json())


def check_theorem(E: PointSet) -> dict:
    q, n = E.spec.q, len(E)
    need = threshold(q)
    if n <= q:
        best = max_pinned_pair(E)
        count = best[2] if best else 0
        return _outcome(count >= need, False, threshold=need, max_dot_count=count, note="exploratory: |E| <= q")
    try:
        w = pinned_pair(E)
    except (PreconditionError, VerificationError, RuntimeError) as exc:
        return _outcome(False, True, threshold=need, error=str(exc))
    avg_bound = (n * n + q * n) // (q + 1)
    chain = {
        "cauchy_schwarz": n * n <= w.moment * w.dot_count,
        "below_twice_mean": q * w.moment < 2 * n * n,
        "below_average": w.moment <= avg_bound,
    }
    ok = w.dot_count >= need and all(chain.values())
    return _outcome(ok, True, threshold=need, witness=w.to_json(), **chain)


def check_imp(E: PointSet) -> dict:
    ok, missing = verify_imp(E)
    backed = len(E) > E.spec.q
    detail = {"missing": [str(d) for d in sorted(missing)]}
    if not backed:
        detail["note"] = "exploratory: |E| <= q"
    return _outcome(ok, backed, **detail)


def check_corollary(E: PointSet) -> dict:
    spec = E.spec
    if len(E) <= spec.q:
        for x in E:
            for y in E:
                if x != y and complete_pair_check(ScalarSet(spec, dot_set(E, sub_points(spec, y, x)))):
                    return _outcome(True, False, x=list(x), y=list(y), note="exploratory: |E| <= q")
        return _outcome(False, False, note="exploratory: |E| <= q")
    try:
        x, y = full_field_pinned_sum(E)
    except (PreconditionError, VerificationError, RuntimeError) as exc:
        return _outcome(False, True, error=str(exc))
    return _outcome(True, True, x=list(x), y=list(y))


def check_sharpness(p: int, k: int) -> dict:
    return dict(_sharpness(p, k))


@functools.lru_cache(maxsize=None)
def _sharpness(p: int, k: int) -> dict:
    if k % 2:
        return _skip("needs an even extension degree")
    E = subfield_example(p, k)
    q = E.spec.q
    root = math.isqrt(q)
    lo, hi = pinned_dot_count_range(E)
    ok = len(E) == q and lo == hi == root
    return _outcome(ok, True, size=len(E), min_dot_count=lo, max_dot_count=hi, sqrt_q=root)


def check_lines(p: int, k: int) -> dict:
    return dict(_lines(p, k))


@functools.lru_cache(maxsize=None)
def _lines(p: int, k: int) -> dict:
    spec = make_field(p, k)
    q = spec.q
    lines = all_lines(spec)
    point_sets = [frozenset(line_points(spec, ln)) for ln in lines]
    distinct = len(set(point_sets))
    per_point = [0] * (q * q)
    pair_hits: dict[tuple, int] = {}
    sizes_ok = True
    for pts in point_sets:
        sizes_ok &= len(pts) == q
        ordered = sorted(pts)
        for a in ordered:
            per_point[a[0] * q + a[1]] += 1
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                pair_hits[(a, b)] = pair_hits.get((a, b), 0) + 1
    n_pairs = q * q * (q * q - 1) // 2
    pairs_ok = len(pair_hits) == n_pairs and all(v == 1 for v in pair_hits.values())
    ok = (
        len(lines) == distinct == q * (q + 1)
        and sizes_ok
        and all(c == q + 1 for c in per_point)
        and pairs_ok
    )
    return _outcome(ok, True, lines=distinct, points_per_line_ok=sizes_ok,
                    lines_per_point_ok=all(c == q + 1 for c in per_point), pairs_ok=pairs_ok)


def check_glibichuk(spec: FieldSpec, seed: int, trial: int) -> dict:
    m = math.isqrt(spec.q) + 1
    if not zero_options(spec, m):
        return _skip(f"no symmetric set of size {m}")
    A = sample_symmetric_set(spec, m, seed, trial)
    return _outcome(glibichuk_check(A), True, A=sorted(A.members))


# -- campaign ----------------------------------------------------------------

def trial_set(config: CampaignConfig, spec: FieldSpec, trial: int) -> PointSet:
    if config.family == "subfield":
        return subfield_example(spec.p, spec.k)
    return sample_point_set(spec, set_size_for(config.set_size, spec.q), config.seed, trial)


def run_trial(config: CampaignConfig, p: int, k: int, trial: int) -> dict:
    spec = make_field(p, k)
    E = trial_set(config, spec, trial)
    results: dict[str, dict] = {}
    for name in config.checks:
        if name == "identity":
            results[name] = check_identity(E)
        elif name == "theorem":
            results[name] = check_theorem(E)
        elif name == "imp":
            results[name] = check_imp(E)
        elif name == "corollary":
            results[name] = check_corollary(E)
        elif name == "sharpness":
            results[name] = check_sharpness(p, k)
        elif name == "lines":
            results[name] = check_lines(p, k)
        elif name == "glibichuk":
            results[name] = check_glibichuk(spec, config.seed, trial)
    record = {"field": f"{p},{k}", "trial": trial, "size": len(E), "digest": set_digest(E), "checks": results}
    if any(r["status"] == "fail" for r in results.values()):
        record["set"] = [list(pt) for pt in E]
    return record


def _run_task(args: tuple) -> dict:
    return run_trial(*args)


@dataclass
class Report:
    config: CampaignConfig
    trials: list[dict]
    summary: dict = field(default_factory=dict)

    @property
    def defects(self) -> list[tuple[str, int, str]]:
        return [
            (r["field"], r["trial"], name)
            for r in self.trials
            for name, out in r["checks"].items()
            if out["status"] == "fail" and out["theorem_backed"]
        ]

    @property
    def ok(self) -> bool:
        return not self.defects

    def to_json(self) -> dict:
        return {"config": self.config.to_json(), "trials": self.trials, "summary": self.summary}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "trial", "size", "digest", "check", "status", "theorem_backed", "detail"])
        for r in self.trials:
            for name, out in r["checks"].items():
                detail = {k: v for k, v in out.items() if k not in ("status", "theorem_backed")}
                w.writerow([r["field"], r["trial"], r["size"], r["digest"], name, out["status"],
                            str(out["theorem_backed"]).lower(), json.dumps(detail, separators=(",", ":"))])
        return buf.getvalue()


def summarize(config: CampaignConfig, trials: list[dict]) -> dict:
    summary: dict[str, dict] = {}
    for p, k in config.fields:
        key = f"{p},{k}"
        per_check = {}
        for name in config.checks:
            outs = [r["checks"][name] for r in trials if r["field"] == key]
            backed = [o["theorem_backed"] for o in outs if o["status"] != "skip"]
            per_check[name] = {
                "pass": sum(o["status"] == "pass" for o in outs),
                "fail": sum(o["status"] == "fail" for o in outs),
                "skip": sum(o["status"] == "skip" for o in outs),
                "expected_pass_rate": 1.0 if backed and all(backed) else None,
            }
        summary[key] = per_check
    return summary


def run_campaign(config: CampaignConfig, workers: int = 1) -> Report:
    """Run every (field, trial) task; records come back ordered by (field, trial)."""
    tasks = [(config, p, k, t) for p, k in config.fields for t in range(config.trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            trials = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        trials = [_run_task(t) for t in tasks]
    return Report(config, trials, summarize(config, trials))
