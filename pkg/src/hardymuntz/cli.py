"""Command-line experiment runner.

Each subcommand runs one experiment, writes one record per line (JSON lines
or CSV) and exits 0 when every check passes, 1 when a check fails and 2 on a
usage error. Rationals cross the boundary as ``"num/den"`` strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bernstein as bern
from . import gram, muntz, operators
from .exactnum import bareiss_determinant, format_rational, parse_rational
from .l2poly import (IndicatorTail, Poly, Polynomial, RampTail, X, inner_product,
                     polynomial_corpus)

SWEEP_FIELDS = ["experiment", "n", "N_n", "rho_n", "dist_sq", "leak_sq", "sup_err"]
SUP_TOL = 1e-9


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    seed: int = 0
    degree: int = 20
    trials: int = 200
    n_max: int = 40
    rho: Fraction = Fraction(1, 2)
    grid_points: int = 1001
    format: str = "json"
    output: str = "-"
    operator: str = "hardy"
    target: str = "one"

    def validate(self) -> None:
        if self.subcommand not in EXPERIMENTS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if not 0 < self.rho < 1:
            raise ValueError(f"--rho must lie in (0, 1), got {format_rational(self.rho)}")
        if self.n_max < 1:
            raise ValueError(f"--n-max must be >= 1, got {self.n_max}")
        if self.trials < 1:
            raise ValueError(f"--trials must be >= 1, got {self.trials}")
        if self.degree < 0:
            raise ValueError(f"--degree must be >= 0, got {self.degree}")
        if self.grid_points < 2:
            raise ValueError(f"--grid-points must be >= 2, got {self.grid_points}")
        if self.format not in ("json", "csv"):
            raise ValueError(f"--format must be json or csv, got {self.format!r}")
        if self.operator not in operators.BUILTIN_OPERATORS:
            raise ValueError(f"unknown operator {self.operator!r}")
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")


Result = tuple[list[dict], list[str]]

TARGETS = {
    "one": lambda r: Poly(Polynomial.constant(1)),
    "indicator": lambda r: IndicatorTail(r * r),
    "ramp": lambda r: RampTail(r * r),
}


def _sweep_record(experiment, w, dist_sq, leak_sq=None, sup_err=None) -> dict:
    return {
        "experiment": experiment,
        "n": w.n,
        "N_n": w.big_n,
        "rho_n": format_rational(muntz.rho(w)),
        "dist_sq": format_rational(dist_sq),
        "leak_sq": None if leak_sq is None else format_rational(leak_sq),
        "sup_err": sup_err,
    }


def run_identity_check(cfg: RunConfig) -> Result:
    records, failures = [], []
    for i, p in enumerate(polynomial_corpus(cfg.seed, cfg.trials, cfg.degree)):
        lhs, contraction, integral_sq = operators.hardy_identity_terms(p)
        ok = lhs == contraction + integral_sq
        if not ok:
            failures.append(f"identity fails for corpus polynomial {i}")
        records.append({"experiment": "identity-check", "index": i, "degree": p.degree,
                        "lhs": format_rational(lhs),
                        "contraction_term": format_rational(contraction),
                        "integral_sq": format_rational(integral_sq), "passed": ok})
    return records, failures


def run_hardy_norm(cfg: RunConfig) -> Result:
    hardy = operators.BUILTIN_OPERATORS["hardy"]
    records, failures = [], []
    for i, p in enumerate(polynomial_corpus(cfg.seed, cfg.trials, cfg.degree)):
        hp = operators.apply(hardy, p)
        norm = inner_product(p, p)
        hnorm = inner_product(hp, hp)
        cnorm = inner_product(p - hp, p - hp)
        sup_hp, sup_p = operators.sup_contraction_check(p, cfg.grid_points)
        ok = hnorm <= 4 * norm and cnorm <= norm and sup_hp <= sup_p + SUP_TOL
        if not ok:
            failures.append(f"norm bound fails for corpus polynomial {i}")
        records.append({"experiment": "hardy-norm", "index": i,
                        "norm_sq": format_rational(norm), "hardy_norm_sq": format_rational(hnorm),
                        "contraction_norm_sq": format_rational(cnorm),
                        "sup_hp": sup_hp, "sup_p": sup_p, "passed": ok})
    bound = operators.operator_norm_lower_bound(hardy, cfg.degree, cfg.trials, cfg.seed)
    ok = 1.0 <= bound <= 2.0
    if not ok:
        failures.append(f"operator norm witness {bound} outside [1, 2]")
    records.append({"experiment": "hardy-norm", "index": None, "norm_lower_bound": bound,
                    "passed": ok})
    return records, failures


def random_exponent_set(rng: random.Random, max_exponent: int = 25,
                        max_size: int = 8) -> list[int]:
    size = rng.randint(1, max_size)
    return sorted(rng.sample(range(max_exponent + 1), size))


def run_gram_det(cfg: RunConfig) -> Result:
    records, failures = [], []
    for i in range(cfg.trials):
        exps = random_exponent_set(random.Random(f"{cfg.seed}:gram:{i}"))
        closed = gram.gram_det_closed_form(exps)
        elim = bareiss_determinant(gram.gram_matrix(exps))
        cauchy = gram.cauchy_determinant(*gram.cauchy_nodes(exps))
        ok = closed == elim == cauchy and closed > 0
        if not ok:
            failures.append(f"determinant routes disagree for exponents {exps}")
        records.append({"experiment": "gram-det", "exponents": exps,
                        "det": format_rational(closed), "passed": ok})
    return records, failures


def random_cauchy_nodes(rng: random.Random, max_size: int = 6):
    n = rng.randint(1, max_size)
    pool = set()
    while len(pool) < 2 * n:
        pool.add(Fraction(rng.randint(-30, 30), rng.randint(1, 12)))
    nodes = sorted(pool)
    rng.shuffle(nodes)
    return nodes[:n], nodes[n:]


def run_cauchy_check(cfg: RunConfig) -> Result:
    records, failures = [], []
    for i in range(cfg.trials):
        xs, ys = random_cauchy_nodes(random.Random(f"{cfg.seed}:cauchy:{i}"))
        closed = gram.cauchy_determinant(xs, ys)
        elim = bareiss_determinant(gram.cauchy_matrix(xs, ys))
        ok = closed == elim
        if not ok:
            failures.append(f"Cauchy formula fails for instance {i}")
        records.append({"experiment": "cauchy-check", "size": len(xs),
                        "xs": [format_rational(x) for x in xs],
                        "ys": [format_rational(y) for y in ys],
                        "det": format_rational(closed), "passed": ok})
    return records, failures


def _window_checks(cfg: RunConfig, t, w, dist_sq, failures: list[str]) -> None:
    if dist_sq != gram.distance_sq_via_gram(t, w.exponents):
        failures.append(f"bordered Gram and normal equations disagree at n={w.n}")
    if cfg.target == "one" and dist_sq != muntz.rho(w) ** 2:
        failures.append(f"dist(1, M_n)^2 != rho_n^2 at n={w.n}")


def run_distance(cfg: RunConfig) -> Result:
    t = TARGETS[cfg.target](cfg.rho)
    w = muntz.schedule_for_rho(cfg.rho, cfg.n_max)
    _, dist_sq = muntz.project(t, w)
    failures: list[str] = []
    _window_checks(cfg, t, w, dist_sq, failures)
    return [_sweep_record("distance", w, dist_sq)], failures


def run_sweep(cfg: RunConfig) -> Result:
    t = TARGETS[cfg.target](cfg.rho)
    sched = muntz.WindowSchedule(cfg.rho)
    records, failures = [], []
    sweep = muntz.distance_sweep(t, sched, cfg.n_max)
    for n, dist_sq in sweep:
        w = sched.window(n)
        _window_checks(cfg, t, w, dist_sq, failures)
        records.append(_sweep_record("sweep", w, dist_sq))
    if cfg.target != "one" and cfg.n_max > 1 and not sweep[-1][1] < sweep[0][1]:
        failures.append("distance did not decay between n=1 and n=n_max")
    return records, failures


def run_vanish(cfg: RunConfig) -> Result:
    T = operators.builtin_operator(cfg.operator)
    s = cfg.rho ** 2
    sched = muntz.WindowSchedule(cfg.rho)
    rows = muntz.vanishing_preservation_experiment(T, cfg.rho, cfg.n_max)
    records, failures = [], []
    for n, dist_sq, leak_sq in rows:
        w = sched.window(n)
        if T.name == "mult_x":
            p, _ = muntz.project(IndicatorTail(s), w)
            if leak_sq > s * s * Poly(p).norm_sq(s):
                failures.append(f"pointwise bound x <= s violated at n={n}")
        records.append(_sweep_record(f"vanish:{T.name}", w, dist_sq, leak_sq=leak_sq))
    if cfg.n_max > 1 and not rows[-1][2] < rows[0][2]:
        failures.append("leak did not decay between n=1 and n=n_max")
    return records, failures


def run_continuous(cfg: RunConfig) -> Result:
    sched = muntz.WindowSchedule(cfg.rho)
    ramp = RampTail(cfg.rho ** 2)
    volterra = operators.BUILTIN_OPERATORS["volterra"]
    rows = muntz.continuous_case_experiment(cfg.rho, cfg.n_max, cfg.grid_points)
    records, failures = [], []
    for n, sup_err in rows:
        w = sched.window(n)
        p, dist_sq = muntz.project(ramp, w)
        if operators.apply(volterra, 2 * p)(0) != 0:
            failures.append(f"V p_n does not vanish at 0 for n={n}")
        records.append(_sweep_record("continuous", w, 4 * dist_sq, sup_err=sup_err))
    if cfg.n_max > 1 and not rows[-1][1] < rows[0][1]:
        failures.append("sup error did not decay between n=1 and n=n_max")
    return records, failures


def run_bernstein(cfg: RunConfig) -> Result:
    records, failures = [], []

    def check(law: str, n: int, ok: bool) -> None:
        if not ok:
            failures.append(f"{law} fails at n={n}")
        records.append({"experiment": "bernstein", "law": law, "n": n, "passed": ok})

    one = Polynomial.constant(1)
    for n in range(13):
        check("partition_of_unity",
              n, sum((bern.bernstein_basis(k, n) for k in range(n + 1)), Polynomial()) == one)
    for n in range(1, 9):
        check("linear_precision", n, bern.bernstein_approximant(bern.sample(lambda x: x, n), n) == X)
    for n in range(1, 11):
        expected = X * X + X * (1 - X) * Fraction(1, n)
        check("quadratic_law", n,
              bern.bernstein_approximant(bern.sample(lambda x: x * x, n), n) == expected)
    for n in range(1, 13):
        ok = True
        for m in range(n):
            samples = [0] * (m + 1) + [k + 1 for k in range(n - m)]
            ok &= bern.min_support_degree(bern.bernstein_approximant(samples, n)) >= m + 1
        check("support_containment", n, ok)
    return records, failures


def run_conditioning(cfg: RunConfig) -> Result:
    report = gram.conditioning_report(range(cfg.degree + 1))
    failures = [] if report.exact_paths_agree else ["exact determinant paths disagree"]
    record = {"experiment": "conditioning", **report.to_dict()}
    return [record], failures


EXPERIMENTS: dict[str, Callable[[RunConfig], Result]] = {
    "identity-check": run_identity_check,
    "hardy-norm": run_hardy_norm,
    "gram-det": run_gram_det,
    "cauchy-check": run_cauchy_check,
    "distance": run_distance,
    "sweep": run_sweep,
    "vanish": run_vanish,
    "continuous": run_continuous,
    "bernstein": run_bernstein,
    "conditioning": run_conditioning,
}

# per-subcommand overrides of the RunConfig defaults
DEFAULTS = {
    "gram-det": {"trials": 50},
    "cauchy-check": {"trials": 50},
    "conditioning": {"degree": 12},
}


def write_records(records: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        for r in records:
            stream.write(json.dumps(r) + "\n")
        return
    fields = list(SWEEP_FIELDS) if all(set(r) <= set(SWEEP_FIELDS) for r in records) else []
    for r in records:
        fields += [k for k in r if k not in fields]
    writer = csv.DictWriter(stream, fieldnames=fields, restval="", lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow({k: ("" if v is None else json.dumps(v) if isinstance(v, list) else v)
                         for k, v in r.items()})


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hardymuntz", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")
    base = RunConfig("")
    for name in EXPERIMENTS:
        d = {**vars(base), **DEFAULTS.get(name, {})}
        p = sub.add_parser(name)
        p.add_argument("--seed", type=int, default=d["seed"])
        p.add_argument("--degree", type=int, default=d["degree"])
        p.add_argument("--trials", type=int, default=d["trials"])
        p.add_argument("--n-max", type=int, default=d["n_max"])
        p.add_argument("--rho", type=_rational_arg, default=d["rho"], help="rational 'num/den' in (0, 1)")
        p.add_argument("--grid-points", type=int, default=d["grid_points"])
        p.add_argument("--format", choices=["json", "csv"], default=d["format"])
        p.add_argument("--output", default=d["output"], help="file path, or '-' for stdout")
        p.add_argument("--operator", choices=sorted(operators.BUILTIN_OPERATORS), default=d["operator"])
        p.add_argument("--target", choices=sorted(TARGETS), default=d["target"])
    return parser


def dispatch(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"hardymuntz: error: {exc}", file=stderr)
        return 2
    records, failures = EXPERIMENTS[cfg.subcommand](cfg)
    if cfg.output == "-":
        write_records(records, cfg.format, stdout)
    else:
        with open(cfg.output, "w", newline="") as fh:
            write_records(records, cfg.format, fh)
    for f in failures:
        print(f"hardymuntz: check failed: {f}", file=stderr)
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items()})
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())
