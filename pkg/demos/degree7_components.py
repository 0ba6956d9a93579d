"""
Degree 7: two components and a small stratum
=============================================

The 20 cacti with passport (2,2,2) split by monodromy group. Walls
never connect the two strata, so each gets its own map.
"""
from collections import Counter

from zolotarev import Passport, build_atlas, enumerate_cacti, select

pp = Passport(7, 2, 2, 2)
cacti = enumerate_cacti(pp)
print(Counter((c.group.name, c.group.order) for c in cacti))

for group in ("alternating", "psl27"):
    a = build_atlas(select(cacti, group), group)
    print("\n%s stratum: %d faces" % (group, len(a.faces)))
    for comp in a.components:
        print("  component %d: %s" % (comp.index, comp.summary()))
        print("    vertex degrees", sorted((d for _, d in comp.vertex_degrees), reverse=True))

# the same tree can end walls in both alternating components
a = build_atlas(select(cacti, "alternating"), "alternating")
v0, v1 = (set(c.vertices) for c in a.components)
print("\ntrees shared by the two alternating components:", len(v0 & v1))
