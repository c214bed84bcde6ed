"""Present the augmentation-style ideal R = {p in Q<x> : p(1) = 0} and check it.

    python3 demos/augmentation_ideal.py
"""

from corank.fixtures import aug1
from corank.free_algebra import parse_poly
from corank.presentation import build_symbol_tables, compute_U, phibar, present_right_ideal, psibar_eval, verify_presentation

rep = aug1()
pres = present_right_ideal(rep)
print(pres.render())
print(pres.stats())

tables = build_symbol_tables(rep)
udata = compute_U(rep, tables)
p = parse_poly("x^3 - 2*x^2 + x", rep.alphabet, rep.ring)
normal = phibar(udata, p)
print(f"normal form of {p}: {normal}")
assert psibar_eval(udata, normal) == p

report = verify_presentation(rep, pres, deg_cap=5, samples=20)
for d, expected, achieved in report.completeness:
    print(f"degree <= {d}: members {expected}, reached by generators {achieved}")
print("verified" if report.ok else "verification failed")
