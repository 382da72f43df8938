"""Closed trigonometric forms, in plain text and LaTeX."""
from fractions import Fraction

from hilbpoly.quasipoly import hilbert_quasipolynomial, render, to_fourier

for d in [(2,), (3,), (4,)]:
    print(d, render(hilbert_quasipolynomial(d), "fourier"))

ff = to_fourier(hilbert_quasipolynomial((4,)))
s = ff.term(0, Fraction(1, 3)).sin_coeff
print("sine coefficient squared:", (s * s).to_rational())

print(render(hilbert_quasipolynomial((2, 3)), "latex"))
