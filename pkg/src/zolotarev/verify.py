"""Reproduction checks for the three reference families and the analytic families.

Each check returns ``(passed, detail)``. The CLI ``verify`` subcommand
runs them and prints one line per check.
"""
import math
from collections import Counter

import numpy as np

from . import analytic as A
from .atlas import build_atlas, export_json, single_slot_edges, vertex_degree_multiset
from .cactus import CactusClass, Color, Passport, enumerate_cacti, select
from .degeneration import crossing, degenerate

DEG5 = Passport(5, 1, 1, 2)
DEG6 = Passport(6, 2, 2, 1)
DEG7 = Passport(7, 2, 2, 2)
FAMILIES = ((DEG5, "any"), (DEG6, "symmetric"), (DEG7, "alternating"))


def family(pp, group):
    return select(enumerate_cacti(pp), group)


def slot_words(classes):
    return Counter(degenerate(c, col).canon for c in classes for col in Color)


def _summaries(a):
    return [c.summary() for c in a.components]


def check_deg5_cacti():
    cs = enumerate_cacti(DEG5)
    auts = sorted(c.aut_order for c in cs)
    return len(cs) == 5 and auts == [1] * 5, "classes=%d aut=%s" % (len(cs), auts)


def check_deg5_walls():
    w = slot_words(enumerate_cacti(DEG5))
    mult = Counter(w.values())
    return len(w) == 8 and mult == Counter({2: 7, 1: 1}), "walls=%d owners=%s" % (len(w), dict(mult))


def check_deg5_trees():
    a = build_atlas(enumerate_cacti(DEG5))
    trees = {t for e in a.edges for t in e.vertices}
    degs = vertex_degree_multiset(a)
    return len(trees) == 4 and degs == [7, 4, 3, 2], "trees=%d degrees=%s" % (len(trees), degs)


def check_deg5_atlas():
    s = _summaries(build_atlas(enumerate_cacti(DEG5)))
    return s == ["F=5 E=8 V=4 chi=1 projective_plane"], "; ".join(s)


def check_deg6_cacti():
    cs = enumerate_cacti(DEG6)
    sym = sum(c.aut_order == 2 for c in cs)
    s6 = sum(c.group.order == 720 for c in cs)
    return len(cs) == 15 and sym == 3 and s6 == 12, "classes=%d aut2=%d S6=%d" % (len(cs), sym, s6)


def check_deg6_atlas():
    a = build_atlas(family(DEG6, "symmetric"), "symmetric")
    s = _summaries(a)
    degs = vertex_degree_multiset(a)
    ok = s == ["F=12 E=18 V=8 chi=2 sphere"] and degs == [6, 6, 6, 5, 4, 4, 3, 2]
    return ok, "; ".join(s) + " degrees=%s" % degs


def check_deg7_cacti():
    cs = enumerate_cacti(DEG7)
    orders = Counter(c.group.order for c in cs)
    return len(cs) == 20 and orders == Counter({168: 6, 2520: 14}), \
        "classes=%d orders=%s" % (len(cs), dict(sorted(orders.items())))


def check_deg7_atlas():
    a = build_atlas(family(DEG7, "alternating"), "alternating")
    s = _summaries(a)
    trees = {t for e in a.edges for t in e.vertices}
    shared = set(a.components[0].vertices) & set(a.components[1].vertices) if len(a.components) == 2 else set()
    per_comp = Counter(e.component for e in single_slot_edges(a))
    ok = (s == ["F=7 E=11 V=5 chi=1 projective_plane"] * 2 and len(a.edges) == 22
          and len(trees) == 8 and len(shared) == 2 and per_comp == Counter({0: 1, 1: 1}))
    return ok, "%s walls=%d trees=%d shared=%d" % (" | ".join(s), len(a.edges), len(trees), len(shared))


def check_transform_involution():
    bad = 0
    total = 0
    for pp, g in FAMILIES:
        cs = family(pp, g)
        keys = {c.key for c in cs}
        words = slot_words(cs)
        for c in cs:
            for col in Color:
                total += 1
                t, m2 = crossing(c, col)
                w = degenerate(c, col).canon
                d = CactusClass(pp, *t)
                back = crossing(d, m2)
                same_word = degenerate(d, m2).canon == w
                paired = (d.key != c.key) == (words[w] == 2)
                if d.key not in keys or back != (c.triple, col) or not same_word or not paired:
                    bad += 1
    return bad == 0, "slots=%d failures=%d" % (total, bad)


def check_intro():
    recs = A.intro_report()
    bad = [r.check for r in recs if not r.passed]
    return not bad, "failing: %s" % ", ".join(bad) if bad else "all values within tolerance"


def check_q_axis_zeros():
    full = [A.deg5_degeneracy(x, y) for x, y in ((1, 0), (0.2, 0), (0, 1 / math.sqrt(3)))]
    inner = [A.deg5_degeneracy(x, y) / (x * y) if x * y else A._q_inner(x, y)
             for x, y in ((1, 0), (0.2, 0), (0, 1 / math.sqrt(5)))]
    ok = all(abs(v) <= 1e-9 for v in full) and all(abs(v) <= 1e-9 for v in inner)
    return ok, "full=%s inner=%s" % (["%.1e" % v for v in full], ["%.1e" % v for v in inner])


def check_q_collinear():
    tol = 1e-6
    on = A.deg5_degeneracy_points(50)
    miss = sum(A.collinear_middle(*A.deg5_critical_triangle(b), tol) is None for b in on)
    rng = np.random.default_rng(1)
    off = []
    while len(off) < 50:
        r, th = rng.uniform(0.2, 2.5), rng.uniform(0, 2 * math.pi)
        x, y = r * math.cos(th), r * math.sin(th)
        if abs(A.deg5_degeneracy(x, y)) > 1e-3 * A.deg5_degeneracy_scale(x, y):
            off.append(complex(x, y))
    false_hits = sum(A.collinear_middle(*A.deg5_critical_triangle(b), tol) is not None for b in off)
    return miss == 0 and false_hits == 0, "on-curve misses=%d off-curve hits=%d" % (miss, false_hits)


def check_deg5_shabat():
    try:
        roots = A.deg5_shabat_parameters()
    except A.VerificationFailure as e:
        return False, str(e)
    ok = abs(roots[0] - 0.10) <= 0.01 and abs(roots[1] - 1.89) <= 0.01
    return ok, "roots=%s" % ["%.6f" % r for r in roots]


def check_deg5_closed_forms():
    rng = np.random.default_rng(2)
    bad = 0
    for _ in range(100):
        b = rng.uniform(0.1, 3) * complex(math.cos(t := rng.uniform(0, 2 * math.pi)), math.sin(t))
        try:
            A.deg5_family(b)
        except A.VerificationFailure:
            bad += 1
    return bad == 0, "mismatches=%d/100" % bad


def check_deg6_identities():
    rng = np.random.default_rng(3)
    bad = 0
    for _ in range(100):
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        try:
            A.deg6_family(z)
        except (A.VerificationFailure, A.DomainError):
            bad += 1
    return bad == 0, "failures=%d/100" % bad


def check_deg6_vertices():
    counts = {
        "i": A.deg6_family(1j)[1].distinct_value_count(1e-9),
        "1.73": A.deg6_family(1.73)[1].distinct_value_count(0.02),
        "0.44i": A.deg6_family(0.44j)[1].distinct_value_count(0.02),
    }
    return all(v == 2 for v in counts.values()), "distinct values %s" % counts


def check_determinism():
    pp, g = DEG6, "symmetric"
    first = export_json(build_atlas(family(pp, g), g))
    enumerate_cacti.cache_clear()
    second = export_json(build_atlas(family(pp, g), g))
    return first == second, "bytes=%d" % len(first)


CHECKS = (
    ("cactus", "deg5.enumerate", check_deg5_cacti),
    ("degeneration", "deg5.walls", check_deg5_walls),
    ("degeneration", "deg5.trees", check_deg5_trees),
    ("atlas", "deg5.atlas", check_deg5_atlas),
    ("cactus", "deg6.enumerate", check_deg6_cacti),
    ("atlas", "deg6.atlas", check_deg6_atlas),
    ("cactus", "deg7.enumerate", check_deg7_cacti),
    ("atlas", "deg7.atlas", check_deg7_atlas),
    ("degeneration", "transform.involution", check_transform_involution),
    ("analytic", "intro_example", check_intro),
    ("analytic", "deg5_degeneracy.axis_zeros", check_q_axis_zeros),
    ("analytic", "deg5_degeneracy.collinearity", check_q_collinear),
    ("analytic", "deg5_shabat_parameters", check_deg5_shabat),
    ("analytic", "deg5_family.closed_forms", check_deg5_closed_forms),
    ("analytic", "deg6_family.identities", check_deg6_identities),
    ("analytic", "deg6_family.vertices", check_deg6_vertices),
    ("determinism", "atlas_json", check_determinism),
)
GROUPS = tuple(sorted({g for g, _, _ in CHECKS}))


def run(only=None):
    """Run the checks (optionally one group); yields ``(name, passed, detail)``."""
    for group, name, fn in CHECKS:
        if only and group != only:
            continue
        try:
            ok, detail = fn()
        except Exception as e:  # a crash is a failed check, reported by name
            ok, detail = False, "%s: %s" % (type(e).__name__, e)
        yield name, bool(ok), detail
