#!/usr/bin/env python3
"""A colouring as a random experiment: pick a vertex uniformly at random and
read off its colour index.  This walk-through builds a few colourings by hand
and inspects their exact p.m.f., mean and variance."""

from fractions import Fraction

import bchrom as b

# A path on six vertices, coloured with three colours.
g = b.path(6)
c = b.Colouring(3, (1, 2, 3, 1, 2, 1))

print("graph: path(6), colouring:", c.colours)
print("proper:", b.is_proper(g, c))

# The class sizes induce the p.m.f. f(i) = theta(i) / n, all exact rationals.
d = b.distribution(g, c)
print("strengths:", d.strengths)
print("pmf:", [str(f) for f in d.pmf])
print("mean:", b.mean(d), " variance:", b.variance(d))
assert sum(d.pmf) == 1   # exact, not approximate

# Is it a b-colouring?  Every class needs a member adjacent to all other
# classes.  b_vertices() shows the witnesses per class.
for colour in (1, 2, 3):
    print(f"b-vertices of class {colour}:", sorted(b.b_vertices(g, c, colour)))
print("b-colouring:", b.is_b_colouring(g, c))

# A near miss: on the 4-cycle, three colours can be proper yet never form a
# b-colouring; the singleton classes cannot see each other.
c4 = b.cycle(4)
bad = b.Colouring(3, (1, 2, 3, 2))
print("\ncycle(4) with", bad.colours, "-> proper:", b.is_proper(c4, bad),
      " b-colouring:", b.is_b_colouring(c4, bad))
print("class 1 witnesses:", sorted(b.b_vertices(c4, bad, 1)), "(empty = failure)")

# Reversing the labels (i -> k+1-i) mirrors the mean around (k+1)/2 and
# leaves the variance untouched.
s = b.colouring_stats(g, c)
r = b.colouring_stats(g, c.reversed_labels())
print("\nreversal: mean", s.mean, "->", r.mean, "  variance", s.variance, "->", r.variance)
assert r.mean == c.k + 1 - s.mean and r.variance == s.variance

# Complete graphs are the degenerate case: every proper colouring uses n
# singleton classes, so the colour index is uniform on {1..n}.
k5 = b.complete(5)
u = b.distribution(k5, b.Colouring(5, (1, 2, 3, 4, 5)))
print("\nK5 pmf:", [str(f) for f in u.pmf], " mean:", b.mean(u), " variance:", b.variance(u))
assert b.mean(u) == Fraction(6, 2)            # (n+1)/2
assert b.variance(u) == Fraction(24, 12)      # (n^2-1)/12
