"""The quadratic transformation and its two contiguous companions.

Each identity relates (1+x)^{-2a} F(a,b; c; 4x/(1+x)^2), with c = 2b, 2b+1
or 2b-1, to hypergeometric series in x^2.  Here we evaluate both sides at
single points and then sweep a seeded random grid.
"""

from hypquad import TransformCase, check_identity, lhs_eval, map_x_to_z, rhs_eval, sample_grid

# the argument map sends the unit interval into itself
for x in (0.1, 0.3, 0.6):
    print(f"x = {x}: 4x/(1+x)^2 = {float(map_x_to_z(x)):.6f}")
print()

a, b, x = 0.7, 1.2, 0.35
for case in TransformCase:
    lhs = lhs_eval(case, a, b, x)
    rhs = rhs_eval(case, a, b, x)
    print(f"{case.value:>6}: lhs = {lhs:.15f}  rhs = {rhs:.15f}  diff = {lhs-rhs:.2e}")
print()

# a seeded grid check: 200 valid draws per identity, tolerance 1e-10
for case in TransformCase:
    grid = sample_grid(case, 200, seed=42)
    report = check_identity(case, grid, tol=1e-10)
    worst = max(s.rel_err for s in report.samples)
    print(f"{case.value:>6}: {report.n_pass}/{len(report.samples)} pass, "
          f"worst rel err {worst:.3e}")
