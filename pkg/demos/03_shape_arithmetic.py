"""Arithmetic on canonical shapes, and analytic Green tests.

Every element of the closure is a Zero, Constant, Singleton, or NSupport
map.  Sums and composites of shapes follow short algebraic rules, which is
what makes the analytic Green relation tests possible.  This script works
a few of those rules concretely and cross-checks the analytic tests
against the brute-force partitions.
"""

from ans import closure, generators, green, maps

n = 2


def show(op, f, g):
    h = op(f, g)
    sym = "+" if op is maps.pointwise_add else "o"
    print(f"  {maps.map_str(f)} {sym} {maps.map_str(g)} = {maps.map_str(h)}")
    return h


print("sums of shapes:")
const11 = maps.render(maps.Constant((1, 1)), n)
const12 = maps.render(maps.Constant((1, 2)), n)
col1 = maps.render(maps.NSupport(1, 1, (1, 2)), n)
col1_swap = maps.render(maps.NSupport(1, 1, (2, 1)), n)
col2 = maps.render(maps.NSupport(2, 2, (1, 2)), n)
show(maps.pointwise_add, const11, const12)
show(maps.pointwise_add, col1, col1_swap)   # same column: collapses to a singleton
show(maps.pointwise_add, col1, col2)        # different columns: annihilates
show(maps.pointwise_add, const11, col1)     # constant then column map

print("composites of shapes:")
show(maps.compose, col1, col2)              # matching column and row chain
show(maps.compose, col1, const12)           # constants absorb on the right
show(maps.compose, const12, col2)

# Analytic relation tests take canonical forms, not raw tuples.
a = maps.Singleton((1, 1), (1, 2))
b = maps.Singleton((2, 2), (1, 2))
print("\nanalytic multiplicative tests on "
      f"{maps.canonical_str(a)} and {maps.canonical_str(b)}:")
for rel in green.RELATIONS:
    res = green.green_analytic_multiplicative(a, b, rel)
    print(f"  {rel}: {res}")

# Full agreement with the brute-force partitions, pair by pair.
ns = closure.additive_closure(generators.enumerate_aff(n))
forms = [maps.classify(f) for f in ns.elements]
checked = mismatches = 0
for label, fn in (("additive", green.green_analytic_additive),
                  ("multiplicative", green.green_analytic_multiplicative)):
    gs = green.green_brute(ns.reduct(label))
    for rel in green.RELATIONS:
        cls = gs.class_of[rel]
        for i, fa in enumerate(forms):
            for j, fb in enumerate(forms):
                checked += 1
                if fn(fa, fb, rel) != (cls[i] == cls[j]):
                    mismatches += 1
print(f"\nanalytic vs brute force at n={n}: "
      f"{checked} pair tests, {mismatches} mismatches")
