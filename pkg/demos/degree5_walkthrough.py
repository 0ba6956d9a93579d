"""
Degree 5: from cacti to a projective map
=========================================

Enumerate the cacti with passport (1,1,2), look at their walls and
the trees at the ends of each wall, and glue everything into the
moduli map.
"""
from collections import Counter

from zolotarev import Color, Passport, Side, build_atlas, contract, degenerate, enumerate_cacti, transform

pp = Passport(5, 1, 1, 2)
cacti = enumerate_cacti(pp)
print("%d cacti of passport %s" % (len(cacti), pp))
for c in cacti:
    print("  %d: star %-8s circ %-8s bullet %-12s aut %d" % (c.id, c.g_star, c.g_circ, c.g_bullet, c.aut_order))

# each cactus has three walls, one for each critical value that can sit
# in the middle of the segment
walls = Counter(degenerate(c, col).canon for c in cacti for col in Color)
print("\n%d slots, %d distinct walls" % (sum(walls.values()), len(walls)))
print("owners per wall:", dict(Counter(walls.values())))

# crossing a wall lands in the neighbouring cell
by_key = {c.key: c for c in cacti}
for c in cacti:
    print("  cactus %d borders %s" % (c.id, [by_key[transform(c, col).key].id for col in Color]))

# contracting either half of a wall gives a plane tree: the wall's endpoints
trees = {contract(degenerate(c, col), side).canon for c in cacti for col in Color for side in Side}
print("\n%d trees at wall ends" % len(trees))

a = build_atlas(cacti)
for comp in a.components:
    print("component", comp.index, comp.summary())
for e in a.edges:
    tag = " (self-adjacent)" if e.self_adjacent else ""
    print("  faces %s%s" % (e.faces, tag))
