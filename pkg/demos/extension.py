"""Recover generators of I from R = Id(x^2 - x) and B = R/I = Q<t>/Id(t^2).

    python3 demos/extension.py
"""

from corank.extension import compose_extension
from corank.free_algebra import Alphabet, parse_poly
from corank.membership import ideal_membership_bounded
from corank.rings import QQ

X = Alphabet(["x"])
t = parse_poly("x^2 - x", X, QQ)
cube = parse_poly("x^3 - x^2", X, QQ)

ext = compose_extension(X, [("t", t)], ["t^2"], deg_cap=3, known_relations=[cube])
print("generators of I:", ", ".join(str(g) for g in ext.i_generators))
for (x, y, side), p in ext.witnesses.items():
    print(f"  p[{x},{y}] ({side}) = {p}")

cert = ideal_membership_bounded(list(ext.i_generators), cube, "two_sided", 6)
print("x^3 - x^2 =", " + ".join(f"({s.left})*g{s.gen_index + 1}*({s.right})" for s in cert.summands))
