"""Experiment orchestration and reporting.

A config is a JSON object::

    {
      "master_seed": 0,
      "trials": 1000,              # for randomized algorithms
      "rho": ["7/3", "3"],         # recoverable-value levels to report
      "oracle_limit": 40,          # largest n handed to the exact solver
      "record_timing": false,      # wall-clock durations break byte-identical reports
      "instances": [{"family": "cycle", "params": {"n": 5}}, ...],
      "algorithms": [{"name": "plg", "variant": "G3_HR"}, ...]
    }

Trial ``t`` of algorithm ``j`` on instance ``i`` uses seed
``master_seed * 10**9 + (i * len(algorithms) + j) * 10**6 + t``, so any
single trial can be rerun with the matching ``rng_seed``.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from . import generators as gens
from .avg2 import solve_avg2
from .classic import greedy, lp_plus_greedy, random_permutation_is, weighted_greedy
from .errors import ConfigError, InvariantBreach, PreconditionError
from .exact import BNB_LIMIT, max_recoverable_value, mwis_value
from .graph import Graph, as_fraction, scale_to_int, weight_of
from .halfint import rv_lp_round
from .io import read_dimacs
from .kcolored import best_pair_approx, lp_largest_class_approx
from .layered import (
    PLG_VARIANTS,
    TrialStats,
    degeneracy_pipeline,
    fast_randomized_mwis,
    fast_randomized_trials,
    plg,
    plg_trials,
)

SEED_INSTANCE_STRIDE = 10**6
SEED_MASTER_STRIDE = 10**9


# -- instances --------------------------------------------------------------

@dataclass
class Instance:
    label: str
    family: str
    params: dict
    seed: int | None
    graph: Graph
    weights: tuple | None = None
    coloring: object = None


def _family_builders() -> dict:
    def named(fn):
        return lambda p, seed: (fn(**p), None, None)

    def rnd(kind):
        return lambda p, seed: (gens.gen_random(kind, seed, **p), None, None)

    def from_file(p, seed):
        inst = read_dimacs(Path(p["path"]).read_text())
        return inst.graph, inst.weights, None

    def hardness(p, seed):
        gp, c = gens.gen_hardness_product(build_instance(p["base"]).graph, p["k"])
        return gp, None, c

    def kcolored(p, seed):
        g, c = gens.gen_kcolored(rng_seed=seed, **p)
        return g, None, c

    out = {name: named(fn) for name, fn in gens.NAMED.items()}
    out.update({kind: rnd(kind) for kind in gens.RANDOM_KINDS if kind != "complete_bipartite"})
    out["layered_counterexample"] = lambda p, seed: (gens.gen_layered_counterexample(**p), None, None)
    out["rvlp_tight"] = lambda p, seed: (*gens.gen_rvlp_tight(**p), None)
    out["kcolored"] = kcolored
    out["hardness_product"] = hardness
    out["file"] = from_file
    return out


FAMILIES = _family_builders()


def build_instance(spec: dict) -> Instance:
    if not isinstance(spec, dict) or "family" not in spec:
        raise ConfigError(f"instance must be an object with a 'family' key: {spec!r}")
    family = spec["family"]
    if family not in FAMILIES:
        raise ConfigError(f"unknown instance family {family!r}; known: {sorted(FAMILIES)}")
    params = dict(spec.get("params", {}))
    seed = spec.get("seed", 0)
    try:
        g, w, c = FAMILIES[family](params, seed)
    except ConfigError:
        raise
    except (TypeError, ValueError, KeyError, OSError) as exc:
        raise ConfigError(f"instance {spec!r}: {exc}") from exc
    label = spec.get("label") or _label(family, params)
    return Instance(label, family, params, seed, g, w, c)


def _label(family: str, params: dict) -> str:
    inner = ",".join(f"{k}={json.dumps(v, sort_keys=True)}" for k, v in sorted(params.items()))
    return f"{family}({inner})"


# -- algorithms --------------------------------------------------------------

@dataclass(frozen=True)
class Algorithm:
    name: str
    run: Callable  # (instance, variant) -> frozenset, deterministic algorithms
    trials: Callable | None = None  # (instance, variant, seeds) -> TrialStats, randomized ones
    needs_coloring: bool = False
    variants: tuple = ()
    single: Callable | None = None  # (instance, variant, seed) -> frozenset, one randomized run


def _per_seed(fn: Callable) -> Callable:
    def trials(inst, variant, seeds):
        vals = [weight_of(fn(inst, variant, s), inst.weights) for s in seeds]
        ints, L = scale_to_int(vals)
        return TrialStats(np.asarray(ints, dtype=np.int64), L, tuple(seeds))

    return trials


def _random_permutation(inst, variant, seed):
    return random_permutation_is(inst.graph, rng_seed=seed)


def _degeneracy(inst, variant, seed):
    return degeneracy_pipeline(inst.graph, seed)


def _fast_single(inst, variant, seed):
    return fast_randomized_mwis(inst.graph, inst.weights, seed)


def _plg_single(inst, variant, seed):
    return plg(inst.graph, seed, variant or "G3_HR")


def _fast_trials(inst, variant, seeds):
    g = inst.graph
    if g.n and g.min_degree == 0:
        raise PreconditionError("fast_randomized_mwis needs no isolated vertices")
    return fast_randomized_trials(g, inst.weights, seeds)


def _plg(inst, variant, seeds):
    if inst.weights is not None:
        raise PreconditionError("plg solves unweighted MIS")
    return plg_trials(inst.graph, seeds, variant or "G3_HR")


ALGORITHMS = {
    a.name: a
    for a in (
        Algorithm("greedy", lambda i, v: greedy(i.graph)),
        Algorithm("weighted_greedy", lambda i, v: weighted_greedy(i.graph, i.weights)),
        Algorithm("lp_plus_greedy", lambda i, v: lp_plus_greedy(i.graph)),
        Algorithm("rv_lp_round", lambda i, v: rv_lp_round(i.graph, i.weights)),
        Algorithm("avg2", lambda i, v: solve_avg2(i.graph).members),
        Algorithm("best_pair_approx", lambda i, v: best_pair_approx(i.graph, i.coloring), needs_coloring=True),
        Algorithm("lp_largest_class", lambda i, v: lp_largest_class_approx(i.graph, i.coloring), needs_coloring=True),
        Algorithm("random_permutation", None, _per_seed(_random_permutation), single=_random_permutation),
        Algorithm("degeneracy_pipeline", None, _per_seed(_degeneracy), single=_degeneracy),
        Algorithm("fast_randomized_mwis", None, _fast_trials, single=_fast_single),
        Algorithm("plg", None, _plg, variants=PLG_VARIANTS, single=_plg_single),
    )
}


# -- results -----------------------------------------------------------------

@dataclass
class ExperimentResult:
    instance: str
    family: str
    params: dict
    instance_seed: int | None
    n: int
    m: int
    algorithm: str
    variant: str | None
    randomized: bool
    size: int | None  # deterministic algorithms only
    weight: Fraction | None  # output weight, or the mean for randomized algorithms
    oracle: Fraction | None  # maximum weight of an independent set
    ratio: Fraction | None  # weight / oracle
    rv_max: dict = field(default_factory=dict)  # rho string -> maximum recoverable value
    trials: int | None = None
    seed_first: int | None = None
    seed_last: int | None = None
    ci_low: float | None = None
    ci_high: float | None = None
    std_error: float | None = None
    duration_s: float | None = None
    error: str | None = None


def _fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


_RATIONAL = ("weight", "oracle", "ratio")


def _to_jsonable(r: ExperimentResult) -> dict:
    out = {}
    for f in fields(r):
        v = getattr(r, f.name)
        if f.name in _RATIONAL:
            out[f.name] = None if v is None else _fraction_str(v)
            out[f.name + "_decimal"] = None if v is None else float(v)
        elif f.name == "rv_max":
            out[f.name] = {k: _fraction_str(x) for k, x in v.items()}
            out[f.name + "_decimal"] = {k: float(x) for k, x in v.items()}
        else:
            out[f.name] = v
    return out


def result_from_dict(d: dict) -> ExperimentResult:
    kw = {}
    for f in fields(ExperimentResult):
        v = d.get(f.name)
        if f.name in _RATIONAL and v is not None:
            v = Fraction(v)
        elif f.name == "rv_max":
            v = {k: Fraction(x) for k, x in (v or {}).items()}
        kw[f.name] = v
    return ExperimentResult(**kw)


def load_report(text: str) -> list:
    return [result_from_dict(d) for d in json.loads(text)["results"]]


def emit_report(results: list, format: str = "json") -> str:
    """Render results as ``json``, ``csv`` or a plain-text ``table``; field order is fixed."""
    rows = [_to_jsonable(r) for r in results]
    if format == "json":
        return json.dumps({"schema": "rvmis-report/1", "results": rows}, indent=2) + "\n"
    if format == "csv":
        flat = [_flatten(r) for r in rows]
        header = list(_flatten(_to_jsonable(_blank())).keys())
        for r in flat:
            header += [k for k in r if k not in header]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()
    if format == "table":
        return _table(results)
    raise ConfigError(f"unknown report format {format!r}")


def _blank() -> ExperimentResult:
    return ExperimentResult("", "", {}, None, 0, 0, "", None, False, None, None, None, None)


def _flatten(row: dict) -> dict:
    out = {}
    for k, v in row.items():
        if isinstance(v, dict):
            if k == "params":
                out[k] = json.dumps(v, sort_keys=True)
            else:
                for sub, x in v.items():
                    out[f"{k}[{sub}]"] = x
        else:
            out[k] = "" if v is None else v
    return out


def _table(results: list) -> str:
    head = ("instance", "algorithm", "n", "m", "weight", "oracle", "ratio", "99% CI")
    rows = [head]
    for r in results:
        algo = r.algorithm + (f"[{r.variant}]" if r.variant else "")
        ci = f"[{r.ci_low:.4f}, {r.ci_high:.4f}]" if r.ci_low is not None else ""
        rows.append((
            r.instance, algo, str(r.n), str(r.m),
            _num(r.weight) if r.error is None else f"error: {r.error}",
            _num(r.oracle), _num(r.ratio), ci,
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _num(x) -> str:
    if x is None:
        return "-"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{_fraction_str(x)} ({float(x):.4f})"


# -- orchestration -----------------------------------------------------------

_KEYS = {"master_seed", "trials", "rho", "oracle_limit", "record_timing", "instances", "algorithms"}


@dataclass(frozen=True)
class _AlgoSpec:
    algo: Algorithm
    variant: str | None


def _validate(config: dict):
    if not isinstance(config, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(config) - _KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    trials = config.get("trials", 1000)
    if not isinstance(trials, int) or not 1 <= trials < SEED_INSTANCE_STRIDE:
        raise ConfigError(f"trials must be an integer in [1, {SEED_INSTANCE_STRIDE})")
    try:
        rhos = [as_fraction(Fraction(str(r))) for r in config.get("rho", [])]
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad rho value: {exc}") from exc
    algos = []
    for spec in config.get("algorithms", []):
        spec = {"name": spec} if isinstance(spec, str) else spec
        name = spec.get("name")
        if name not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {name!r}; known: {sorted(ALGORITHMS)}")
        a = ALGORITHMS[name]
        variant = spec.get("variant")
        if variant is not None and variant not in a.variants:
            raise ConfigError(f"algorithm {name!r} has no variant {variant!r}")
        algos.append(_AlgoSpec(a, variant))
    instances = [build_instance(s) for s in config.get("instances", [])]
    for inst in instances:
        for a in algos:
            if a.algo.needs_coloring and inst.coloring is None:
                raise ConfigError(f"{a.algo.name} needs a colored instance; {inst.label} has none")
    if len(instances) * max(len(algos), 1) * SEED_INSTANCE_STRIDE >= SEED_MASTER_STRIDE:
        raise ConfigError("too many instance/algorithm pairs for the seed scheme")
    return instances, algos, trials, rhos


def trial_seeds(master_seed: int, pair_index: int, trials: int) -> range:
    base = master_seed * SEED_MASTER_STRIDE + pair_index * SEED_INSTANCE_STRIDE
    return range(base, base + trials)


def run_experiment(config: dict) -> list:
    """Run every algorithm on every instance; the whole config is validated first."""
    instances, algos, trials, rhos = _validate(config)
    master = int(config.get("master_seed", 0))
    limit = int(config.get("oracle_limit", BNB_LIMIT))
    timing = bool(config.get("record_timing", False))
    results = []
    for i, inst in enumerate(instances):
        g, w = inst.graph, inst.weights
        small = g.n <= limit
        oracle = mwis_value(g, w) if small else None
        rv = {_fraction_str(r): max_recoverable_value(g, r, w) for r in rhos} if small else {}
        for j, spec in enumerate(algos):
            a = spec.algo
            r = ExperimentResult(
                inst.label, inst.family, inst.params, inst.seed, g.n, g.m,
                a.name, spec.variant, a.trials is not None, None, None, oracle, None, dict(rv),
            )
            t0 = time.perf_counter()
            try:
                if a.trials is None:
                    s = g.check_independent(a.run(inst, spec.variant))
                    r.size, r.weight = len(s), weight_of(s, w)
                else:
                    seeds = trial_seeds(master, i * len(algos) + j, trials)
                    st = a.trials(inst, spec.variant, seeds)
                    r.weight = st.mean
                    r.trials, r.seed_first, r.seed_last = st.trials, seeds[0], seeds[-1]
                    r.ci_low, r.ci_high = st.ci(0.99)
                    r.std_error = st.std_error
            except PreconditionError as exc:
                r.error = str(exc)
            if timing:
                r.duration_s = time.perf_counter() - t0
            if r.weight is not None and oracle is not None:
                r.ratio = r.weight / oracle if oracle else Fraction(1)
                if r.ratio > 1:
                    raise InvariantBreach(f"{a.name} on {inst.label} beat the exact optimum")
            results.append(r)
    return results
