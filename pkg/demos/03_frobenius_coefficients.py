"""Frobenius series for x(1-x^2) y'' + (p0+p1 x+p2 x^2) y' + (q0+q1 x) y = 0.

The exponents at the regular singular point x = 0 solve lam(lam+p0-1) = 0.
Coefficients follow from a three-term recurrence; for the three named ODEs
they also have closed rising-factorial forms.  Exact rational arithmetic
makes the agreement of the two routes a machine-checkable fact, including
the two transcription slips in the c = 2b-1 case that the oracle settles:
c1 = +2a/(2b-1) on the analytic branch, and (a-2b+2)_n in the even
coefficients of the second branch.
"""

from fractions import Fraction as F

from hypquad import (
    Branch,
    ClosedFormCase,
    TransformCase,
    closed_form_coeffs,
    indicial_roots,
    ode_from_case,
    ode_residual,
    recurrence_coeffs,
    series_max_term,
    split_even_odd,
)

a, b = F(1), F(3, 4)
case = TransformCase.PLUS_ONE
ode = ode_from_case(case, a, b)
print("ODE coefficients:", ode)
roots = indicial_roots(ode)
print("indicial roots:", roots.lambda1, roots.lambda2)
print()

for lam, branch in ((roots.lambda1, Branch.ANALYTIC), (roots.lambda2, Branch.SINGULAR)):
    rec = recurrence_coeffs(ode, lam, 8)
    closed = closed_form_coeffs(ClosedFormCase(case, branch), a, b, 8)
    print(f"lam = {lam}:")
    for n, (u, v) in enumerate(zip(rec.coeffs, closed.coeffs)):
        print(f"  c_{n}: recurrence {str(u):>12}  closed {str(v):>12}  equal={u == v}")
print()

# even/odd split: the two series-in-x^2 hiding inside one Frobenius solution
even, odd = split_even_odd(recurrence_coeffs(ode, F(0), 9))
print("even part (coefficients in v=x^2):", [str(c) for c in even.coeffs])
print("odd part: ", [str(c) for c in odd.coeffs])
print()

# residual check by term-wise analytic differentiation
cs = recurrence_coeffs(ode, F(0), 60)
for x in (0.1, 0.3, 0.5):
    rel = abs(float(ode_residual(ode, cs, x))) / series_max_term(cs, x)
    print(f"residual/max-term at x={x}: {rel:.3e}")
