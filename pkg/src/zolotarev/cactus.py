r"""
Zolotarev cacti as monodromy triples.

A cactus of degree `n` is a triple of involutions ``(g_star, g_circ,
g_bullet)`` on the ovals `\{1, ..., n\}` whose product, taken star
then circle then bullet, is the base cycle ``(1 2 ... n)``. Each
2-cycle of ``g_c`` is a simple critical point over the critical value
of colour ``c``.

Two triples describe the same cactus when they are simultaneously
conjugate. When the passport gives two or three colours the same
count, a cyclic relabelling of the colours that preserves the
passport also gives the same cactus: the triangle of critical values
has no preferred first vertex in that case.
"""
import enum
import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from . import perm as P
from .errors import UsageError
from .perm import Perm


class Color(enum.IntEnum):
    STAR = 0
    CIRC = 1
    BULLET = 2

    @property
    def succ(self):
        return Color((self + 1) % 3)

    @property
    def pred(self):
        return Color((self - 1) % 3)

    @property
    def label(self):
        return self.name.lower()

    @classmethod
    def parse(cls, text):
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise UsageError("unknown colour %r" % text) from None


@dataclass(frozen=True)
class Passport:
    """Degree and simple critical point counts over star, circle, bullet."""
    n: int
    k: int
    l: int
    m: int

    def __post_init__(self):
        n, counts = self.n, self.counts
        if n < 3:
            raise UsageError("degree must be at least 3")
        if min(counts) < 0 or sum(counts) != n - 1:
            raise UsageError("passport %s must sum to degree - 1 = %d" % (counts, n - 1))
        if any(2 * c > n for c in counts):
            raise UsageError("passport %s: more transpositions than %d points allow" % (counts, n))

    @classmethod
    def parse(cls, degree, text):
        try:
            k, l, m = (int(t) for t in text.split(","))
        except ValueError:
            raise UsageError("passport must look like k,l,m; got %r" % text) from None
        return cls(degree, k, l, m)

    @property
    def counts(self):
        return (self.k, self.l, self.m)

    def count(self, color):
        return self.counts[color]

    @cached_property
    def color_symmetries(self):
        """Colour permutations preserving the counts, as ``(pi, is_odd)``.

        ``pi[c]`` is the new colour of old colour ``c``.
        """
        out = []
        for pi in itertools.permutations(range(3)):
            if all(self.counts[pi[c]] == self.counts[c] for c in range(3)):
                odd = sum(pi[i] > pi[j] for i in range(3) for j in range(i + 1, 3)) % 2
                out.append((pi, bool(odd)))
        return tuple(out)

    @property
    def rotations(self):
        return tuple(pi for pi, odd in self.color_symmetries if not odd)

    @property
    def reflection(self):
        """Some odd passport-preserving colour permutation, or None."""
        for pi, odd in self.color_symmetries:
            if odd:
                return pi
        return None

    def __str__(self):
        return "%d;%d,%d,%d" % (self.n, self.k, self.l, self.m)


def _key(triple):
    return triple[0].array + triple[1].array + triple[2].array


def canonical_triple(triple, passport, rotations=None):
    """Least representative of a cactus whose product is still the base cycle.

    Returns ``(triple, pi)`` where ``pi`` is the colour rotation that was
    applied (``pi[c]`` is where old colour ``c`` went). The search runs
    over passport-preserving colour rotations and, for each, the `n`
    conjugators taking the product onto ``(1 2 ... n)``; any conjugator
    doing so differs from another by a power of the base cycle.
    """
    n = passport.n
    best = None
    for pi in (passport.rotations if rotations is None else rotations):
        t = relabel_colors(triple, pi)
        prod = P.compose(P.compose(t[0], t[1]), t[2])
        cyc = P.cycles(prod)
        if len(cyc) != 1:
            raise UsageError("triple product is not an n-cycle")
        cyc = [x - 1 for x in cyc[0]]
        for r in range(n):
            s = [0] * n
            for j, x in enumerate(cyc):
                s[x] = (j + r) % n
            s = Perm._raw(tuple(s))
            cand = tuple(P.conjugate(g, s) for g in t)
            if best is None or _key(cand) < _key(best[0]):
                best = (cand, pi)
    return best


def relabel_colors(triple, pi):
    """Triple with old colour ``c`` renamed ``pi[c]``."""
    t = [None] * 3
    for c in range(3):
        t[pi[c]] = triple[c]
    return tuple(t)


def color_stabilizer(c):
    """Passport-preserving colour rotations that map the class to itself."""
    ident = ((0, 1, 2),)
    return tuple(pi for pi in c.passport.rotations
                 if canonical_triple(relabel_colors(c.triple, pi), c.passport, ident)[0] == c.triple)


def is_cactus_triple(triple, passport):
    n = passport.n
    for g, c in zip(triple, passport.counts):
        if g.n != n or P.cycle_type(g) != P.cycle_type(_inv_shape(n, c)):
            return False
    prod = P.compose(P.compose(*triple[:2]), triple[2])
    return prod == Perm.base_cycle(n)


@lru_cache(maxsize=None)
def _inv_shape(n, k):
    return Perm.from_cycles([[2 * i + 1, 2 * i + 2] for i in range(k)], n)


@dataclass(frozen=True)
class CactusClass:
    """One cactus up to relabelling of ovals (and passport symmetry of colours)."""
    passport: Passport
    g_star: Perm
    g_circ: Perm
    g_bullet: Perm
    id: int = field(default=None, compare=False)

    @property
    def triple(self):
        return (self.g_star, self.g_circ, self.g_bullet)

    def perm(self, color):
        return self.triple[color]

    @property
    def key(self):
        return _key(self.triple)

    @cached_property
    def aut_order(self):
        return automorphism_order(self)

    @cached_property
    def group(self):
        return monodromy(self)

    def __str__(self):
        return " ".join(str(g) for g in self.triple)


def make_class(triple, passport, id=None):
    """Canonicalise a valid triple into a ``CactusClass``."""
    canon, _ = canonical_triple(triple, passport)
    return CactusClass(passport, *canon, id=id)


def involutions_with(n, k):
    return P.involutions(n, k)


@lru_cache(maxsize=None)
def enumerate_cacti(passport):
    """All cactus classes of ``passport``, sorted by canonical key.

    ``g_bullet`` is solved from the other two, so only pairs are scanned.
    """
    n = passport.n
    if n > P.MAX_DEGREE:
        raise P.CapabilityError("enumeration is capped at degree %d" % P.MAX_DEGREE)
    zeta = Perm.base_cycle(n)
    want = P.cycle_type(_inv_shape(n, passport.m))
    found = set()
    for a in P.involutions(n, passport.k):
        for b in P.involutions(n, passport.l):
            c = P.compose(P.inverse(P.compose(a, b)), zeta)
            if P.cycle_type(c) == want:
                canon, _ = canonical_triple((a, b, c), passport)
                found.add(canon)
    return tuple(CactusClass(passport, *t, id=i)
                 for i, t in enumerate(sorted(found, key=_key)))


def automorphism_order(c):
    """Number of relabellings fixing all three permutations.

    Such a relabelling commutes with the base cycle, so only its powers
    are tried.
    """
    n = c.passport.n
    zeta = Perm.base_cycle(n)
    s = Perm.identity(n)
    count = 0
    for _ in range(n):
        if all(P.conjugate(g, s) == g for g in c.triple):
            count += 1
        s = P.compose(s, zeta)
    return count


def monodromy(c):
    return P.group_order(c.triple)


def expected_count(n, k):
    """Closed form for the number of involutions with ``k`` transpositions."""
    return math.factorial(n) // (2 ** k * math.factorial(k) * math.factorial(n - 2 * k))


def select(classes, group="any", min_aut=1):
    """Filter classes by monodromy group name and minimum automorphism order."""
    if group not in ("any", "symmetric", "alternating", "psl27", "other"):
        raise UsageError("unknown group filter %r" % group)
    return tuple(c for c in classes
                 if (group == "any" or c.group.name == group) and c.aut_order >= min_aut)
