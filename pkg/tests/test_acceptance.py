"""Exit criteria for the package, one test per criterion.

Each test prints a ``[PASS]``/``[FAIL]`` line; the lines are repeated in the
terminal summary under "acceptance criteria".
"""

import json
import math
import random
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from hardymuntz.bernstein import (bernstein_approximant, bernstein_basis, min_support_degree,
                                  sample)
from hardymuntz.cli import random_cauchy_nodes
from hardymuntz.exactnum import bareiss_determinant
from hardymuntz.gram import (cauchy_determinant, cauchy_matrix, cauchy_nodes,
                             conditioning_report, distance_sq_via_gram, gram_det_closed_form,
                             gram_matrix, monomial_distance_sq_closed_form)
from hardymuntz.l2poly import IndicatorTail, Poly, Polynomial, X, inner_product, polynomial_corpus
from hardymuntz.muntz import (DriftWindow, WindowSchedule, continuous_case_experiment,
                              distance_sweep, project, vanishing_preservation_experiment)
from hardymuntz.operators import (apply, builtin_operator, hardy_identity_terms,
                                  sup_contraction_check)

FROZEN = json.loads((Path(__file__).parent / "fixtures" / "frozen.json").read_text())
CORPUS_SEED = 7
RHO = F(1, 2)
N_MAX = 40

hardy = builtin_operator("hardy")
volterra = builtin_operator("volterra")
mult_x = builtin_operator("mult_x")


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def corpus():
    return polynomial_corpus(CORPUS_SEED, 200, 20)


def test_01_hardy_identity(corpus):
    t0 = time.perf_counter()
    bad = []
    for i, p in enumerate(corpus):
        lhs, contraction, integral_sq = hardy_identity_terms(p)
        if lhs != contraction + integral_sq:
            bad.append(i)
    elapsed = time.perf_counter() - t0
    report(1, "|p|^2 = |(1-H)p|^2 + (int p)^2 exactly on 200 polynomials",
           not bad and elapsed < 10, f"failures={bad}, {elapsed:.2f}s")


def test_02_hardy_inequality(corpus):
    bad = []
    for i, p in enumerate(corpus):
        hp = apply(hardy, p)
        norm = inner_product(p, p)
        if not (inner_product(hp, hp) <= 4 * norm and inner_product(p - hp, p - hp) <= norm):
            bad.append(i)
    report(2, "|Hp|^2 <= 4|p|^2 and |(1-H)p|^2 <= |p|^2 exactly", not bad, f"failures={bad}")


def test_03_eigenrelation_and_factorization(corpus):
    eig = all(apply(hardy, X ** k).coeffs == {k: F(1, k + 1)} for k in range(51))
    fact = all(apply(volterra, p) == apply(mult_x, apply(hardy, p)) for p in corpus)
    report(3, "H x^k = x^k/(k+1) for k <= 50; V = M_x H on corpus", eig and fact,
           f"eigen={eig}, factorization={fact}")


def test_04_distance_law():
    t0 = time.perf_counter()
    one = Poly(Polynomial([1]))
    bad = []
    for n in range(1, 26):
        for N in range(0, 11):
            exps = list(range(n, n + N + 1))
            expected = F(n, n + N + 1) ** 2
            bordered = distance_sq_via_gram(one, exps)
            closed = monomial_distance_sq_closed_form(0, exps)
            det_ratio = gram_det_closed_form([0] + exps) / gram_det_closed_form(exps)
            _, elim = project(one, DriftWindow(n, N))
            if not bordered == closed == det_ratio == elim == expected:
                bad.append((n, N))
    elapsed = time.perf_counter() - t0
    report(4, "bordered Gram = closed form = elimination = (n/(n+N+1))^2, n<=25, N<=10",
           not bad and elapsed < 60, f"failures={bad}, {elapsed:.2f}s")


def test_05_cauchy_formula():
    bad = []
    for i in range(50):
        xs, ys = random_cauchy_nodes(random.Random(f"acceptance:cauchy:{i}"))
        assert len(set(xs + ys)) == 2 * len(xs) <= 12
        if cauchy_determinant(xs, ys) != bareiss_determinant(cauchy_matrix(xs, ys)):
            bad.append(i)
    report(5, "Cauchy closed form = exact elimination on 50 random instances", not bad,
           f"failures={bad}")


def test_06_asymptotic_sweep():
    sched = WindowSchedule(RHO)
    one = distance_sweep(Poly(Polynomial([1])), sched, N_MAX)
    law = all(d == F(n, 2 * n + 1) ** 2 for n, d in one)
    gap = abs(math.sqrt(float(one[-1][1])) - 0.5)
    ind = distance_sweep(IndicatorTail(RHO ** 2), sched, N_MAX)
    fixture = ind[-1][1] == F(FROZEN["indicator_dist_sq"][str(N_MAX)])
    decay = ind[-1][1] < ind[0][1]
    report(6, "dist(1,M_n) = n/(2n+1); chi_[1/4,1] sweep matches fixture and decays",
           law and gap < 1.3e-2 and fixture and decay,
           f"|dist-1/2|={gap:.4g} at n=40, fixture={fixture}, "
           f"dist^2: {float(ind[0][1]):.4g} -> {float(ind[-1][1]):.4g}")


@pytest.mark.parametrize("op", ["hardy", "volterra", "mult_x"])
def test_07_vanishing_preservation(op):
    rows = vanishing_preservation_experiment(op, RHO, N_MAX)
    leak1, leak40 = rows[0][2], rows[-1][2]
    fixture = leak40 == F(FROZEN["leak_sq"][op][str(N_MAX)])
    report(7, f"leak int_0^(1/4) (T p_n)^2 for T={op} matches fixture and decays",
           fixture and leak40 < leak1,
           f"fixture={fixture}, leak: {float(leak1):.4g} -> {float(leak40):.4g}")


def test_08_continuous_case():
    rows = continuous_case_experiment(RHO, N_MAX, 1001)
    err1, err40 = rows[0][1], rows[-1][1]
    frozen = float(FROZEN["continuous_sup_err"][str(N_MAX)])
    report(8, "sup |V p_n - ((x-1/4)^+)^2| on 1001 points matches fixture and decays",
           abs(err40 - frozen) <= 1e-12 and err40 < err1,
           f"sup_err: {err1:.6g} -> {err40:.6g}, |diff|={abs(err40 - frozen):.2g}")


def test_09_bernstein_laws():
    one = Polynomial([1])
    pou = all(sum((bernstein_basis(k, n) for k in range(n + 1)), Polynomial()) == one
              for n in range(13))
    lin = all(bernstein_approximant(sample(lambda t: t, n), n) == X for n in range(1, 9))
    quad = all(bernstein_approximant(sample(lambda t: t * t, n), n) == X ** 2 + X * (1 - X) * F(1, n)
               for n in range(1, 11))
    support = True
    patterns = 0
    for n in range(1, 13):
        for m in range(n):
            for tail in ([1] * (n - m), [F(k + 1, n) for k in range(n - m)],
                         [(-1) ** k for k in range(n - m)]):
                patterns += 1
                deg = min_support_degree(bernstein_approximant([0] * (m + 1) + tail, n))
                support &= deg is not None and deg >= m + 1
    report(9, "Bernstein partition of unity, linear precision, quadratic law, support",
           pou and lin and quad and support,
           f"pou={pou}, linear={lin}, quadratic={quad}, support={support} on {patterns} patterns")


def test_10_sup_norm_contraction(corpus):
    worst = -math.inf
    for p in corpus:
        sup_hp, sup_p = sup_contraction_check(p, 1001)
        worst = max(worst, sup_hp - sup_p)
    report(10, "grid sup|Hp| <= grid sup|p| + 1e-9 on 1001 points", worst <= 1e-9,
           f"max(sup|Hp| - sup|p|)={worst:.3g}")


def test_11_conditioning_report():
    exps = list(range(13))
    r = conditioning_report(exps)
    cauchy = cauchy_determinant(*cauchy_nodes(exps))
    ok = r.det_closed == r.det_bareiss == cauchy == bareiss_determinant(gram_matrix(exps))
    report(11, "exact determinant paths agree for exponents 0..12", ok,
           f"binary64 rel. error {r.rel_err_float:.3e} (informational)")
