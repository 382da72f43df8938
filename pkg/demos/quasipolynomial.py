"""Fit the Hilbert quasi-polynomial of I_5 and check it against counting."""
from hilbpoly.exact import format_poly
from hilbpoly.quasipoly import check_against, evaluate, hilbert_quasipolynomial, render
from hilbpoly.slmod import hilbert_values

qp = hilbert_quasipolynomial((5,))
print("period", qp.period, "degree", qp.degree)
for r in (0, 1):
    print(f"constituent n = {r} mod {qp.period}:", format_poly(qp.constituents[r], "n"))

print("H(I_5, 100) =", evaluate(qp, 100))
print("first disagreement below 300:", check_against(qp, hilbert_values((5,), 300)))

print(render(hilbert_quasipolynomial((3,)), "constituents"))
