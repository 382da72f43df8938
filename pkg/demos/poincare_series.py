"""Recover the Poincare series of I_(2,3) from its Hilbert function."""
from hilbpoly.series_recon import factor_denominator, period_and_degree, reconstruct

rf = reconstruct((2, 3))
print("numerator:  ", rf.num)
print("denominator:", rf.den)

fac = factor_denominator(rf)
print("denominator =", fac)

period, degree, pole = period_and_degree(fac)
print("period", period, "| quasi-polynomial degree <=", degree, "| pole order at 1:", pole)

# re-expanding gives the Hilbert function back
print(list(map(int, rf.series(13))))
