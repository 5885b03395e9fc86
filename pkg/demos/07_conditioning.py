# Hilbert matrices: the exact determinant versus LAPACK in binary64.
from hardymuntz import conditioning_report

print(f"{'N':>3} {'exact det':>12} {'float det':>12} {'rel err':>10} {'t_exact':>10} {'t_float':>10}")
for n in range(2, 17, 2):
    r = conditioning_report(range(n))
    assert r.exact_paths_agree
    print(f"{n:>3} {float(r.det_bareiss):>12.3e} {r.det_float:>12.3e} {r.rel_err_float:>10.2e} "
          f"{r.t_exact_ns / 1e3:>8.0f}us {r.t_float_ns / 1e3:>8.0f}us")
