"""Generators of B = span{x^2, x^3, ...} in Q<x> and explicit rewrites into them.

    python3 demos/finite_generation.py
"""

from corank.fixtures import sub2
from corank.free_algebra import parse_poly
from corank.generation import GenerationSpec, evaluate, finite_generating_set, render, rewrite_member

rep = sub2()
spec = GenerationSpec(rep, ["x"])
gens = finite_generating_set(spec)
for i, g in enumerate(gens.generators, start=1):
    print(f"g{i} = {g}")

for text in ["x^4", "x^5", "x^7 - 3*x^2", "2*x^6 + x^3"]:
    p = parse_poly(text, rep.alphabet, rep.ring)
    node = rewrite_member(spec, gens, p)
    assert evaluate(node, gens.generators, rep.ring, rep.alphabet) == p
    print(f"{text} = {render(node, rep.ring)}")
