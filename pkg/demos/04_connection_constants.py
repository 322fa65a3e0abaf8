"""Connection constants by least squares.

The prefactored Gauss function (1+x)^{-2a} F(a,b;c;4x/(1+x)^2) solves the
same ODE as the pair of Frobenius solutions y1 (analytic at 0) and y2
(carrying a non-integer power of x).  Writing it as A y1 + B y2 and fitting
A, B over a handful of sample points re-enacts the analyticity argument:
B must vanish and A must be 1.
"""

from hypquad import TransformCase, fit_connection_constants

xs = [0.1, 0.2, 0.3, 0.4]
for case, (a, b) in (
    (TransformCase.GAUSS, (0.5, 0.25)),
    (TransformCase.PLUS_ONE, (1.0, 0.75)),
    (TransformCase.MINUS_ONE, (1.0, 1.25)),
):
    fit = fit_connection_constants(case, a, b, xs)
    print(f"{case.value:>6}: A = {fit.A:+.12f}  B = {fit.B:+.3e}  "
          f"residual = {fit.residual:.2e}  cond = {fit.cond:.1f}")
