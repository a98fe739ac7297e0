#!/usr/bin/env python3
"""Dimension counts for coloured surfaces, and the gluing law in action.

A surface of genus g with boundary colours s1..sm is assigned the unit
multiplicity of Q_s1 * ... * Q_sm * w^g, where w sums Q_dual(a) * Q_a
over all labels.  Cutting and gluing the surface in any order gives the
same number; the torus always counts the labels.
"""

from verlinde import (ColouredSurface, dim_V, dim_V_disjoint, handle_vector,
                      modular_report, render_report_text,
                      verify_gluing_consistency)
from verlinde.fusion import cyclic_ring, direct_product, fibonacci_ring

fib = fibonacci_ring()
S = ColouredSurface

print("handle vector of the Fibonacci ring:", handle_vector(fib))
print("closed surfaces, genus 0..4:",
      [dim_V(fib, S(g)) for g in range(5)])
print("(the torus gives the rank; genus 2 gives the famous 5)")

# Boundaries: the disk sees only the vacuum, the pair of pants sees the
# fusion coefficients themselves.
print("\ndisk coloured by the unit:", dim_V(fib, S(0, (0,))))
print("disk coloured by tau:", dim_V(fib, S(0, (1,))))
print("pair of pants (tau, tau, tau):", dim_V(fib, S(0, (1, 1, 1))))

# The same number along every recursion order.
report = verify_gluing_consistency(fib, S(2, (1, 1)), trials=8, seed=1)
print("\ngluing consistency on genus 2 with two tau boundaries:",
      report.render())

# Disjoint unions multiply.
z2 = cyclic_ring(2)
print("\ntwo disjoint tori over Z/2:",
      dim_V_disjoint(z2, [S(1), S(1)]), "= 2 * 2")

# The full report for a ring with a reducible unit: one modular functor
# per non-trivial block.
product = direct_product(fib, z2)
rep = modular_report(product, surfaces={"torus": S(1), "genus2": S(2)})
print("\n" + render_report_text(rep))
