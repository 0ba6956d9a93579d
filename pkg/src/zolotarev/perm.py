r"""
Permutations of `\{1, ..., n\}` and the few group computations the
rest of the package needs.

Composition is read left to right: ``compose(p, q)`` is "p then q",
so ``compose(p, q)(i) == q(p(i))``. Conjugation of ``p`` by ``s`` is
``s^{-1} p s`` under the same convention, which relabels every point
``j`` as ``s(j)``.

Points are 1-based in every public surface. Internally images are
stored 0-based.
"""
import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass

from .errors import CapabilityError, UsageError

MAX_DEGREE = 9


class Perm:
    r"""
    Immutable permutation of `\{1, ..., n\}`.

    EXAMPLES::

        >>> p = Perm.parse("(1 2 3)", 4)
        >>> p.images
        (2, 3, 1, 4)
        >>> p(3)
        1
        >>> str(p)
        '(1 2 3)'
    """
    __slots__ = ("_a",)

    def __init__(self, images):
        a = tuple(int(x) - 1 for x in images)
        if sorted(a) != list(range(len(a))):
            raise UsageError("not a bijection of {1..%d}: %r" % (len(a), tuple(images)))
        object.__setattr__(self, "_a", a)

    @classmethod
    def _raw(cls, a):
        # trusted 0-based tuple, no validation
        p = object.__new__(cls)
        object.__setattr__(p, "_a", a)
        return p

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(range(n)))

    @classmethod
    def base_cycle(cls, n):
        """The n-cycle ``(1 2 ... n)``."""
        return cls._raw(tuple((i + 1) % n for i in range(n)))

    @classmethod
    def from_cycles(cls, cycles, n):
        a = list(range(n))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise UsageError("point %d outside 1..%d" % (x, n))
                if x in seen:
                    raise UsageError("point %d repeated" % x)
                seen.add(x)
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                a[x - 1] = y - 1
        return cls._raw(tuple(a))

    @classmethod
    def parse(cls, text, n):
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
        s = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s*,?\s*\d+)*)?\s*\)\s*)*", s):
            raise UsageError("malformed cycle notation: %r" % text)
        cycles = [[int(t) for t in re.findall(r"\d+", body)]
                  for body in re.findall(r"\(([^)]*)\)", s)]
        return cls.from_cycles([c for c in cycles if c], n)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @property
    def n(self):
        return len(self._a)

    @property
    def images(self):
        return tuple(x + 1 for x in self._a)

    @property
    def array(self):
        """0-based image tuple."""
        return self._a

    def __call__(self, i):
        return self._a[i - 1] + 1

    def __eq__(self, other):
        return isinstance(other, Perm) and self._a == other._a

    def __lt__(self, other):
        return self._a < other._a

    def __hash__(self):
        return hash(self._a)

    def __repr__(self):
        return "Perm(%r)" % (self.images,)

    def __str__(self):
        return cycle_string(self)

    def __reduce__(self):
        return (Perm, (self.images,))

    def is_identity(self):
        return all(i == x for i, x in enumerate(self._a))

    def is_even(self):
        return (self.n - len(cycles(self))) % 2 == 0


def _check_same(p, q):
    if p.n != q.n:
        raise UsageError("degree mismatch: %d vs %d" % (p.n, q.n))


def compose(p, q):
    """``p`` then ``q``."""
    _check_same(p, q)
    qa = q._a
    return Perm._raw(tuple(qa[x] for x in p._a))


def inverse(p):
    r = [0] * p.n
    for i, x in enumerate(p._a):
        r[x] = i
    return Perm._raw(tuple(r))


def conjugate(p, s):
    """``s^{-1} p s``: the permutation ``s(j) -> s(p(j))``."""
    _check_same(p, s)
    r = [0] * p.n
    sa = s._a
    for j, x in enumerate(p._a):
        r[sa[j]] = sa[x]
    return Perm._raw(tuple(r))


def cycles(p):
    """Disjoint cycles (fixed points included) as lists of 1-based points."""
    seen = [False] * p.n
    out = []
    for i in range(p.n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p._a[j]
        out.append(cyc)
    return out


def cycle_type(p):
    """Cycle lengths as a ``Counter`` (length -> multiplicity)."""
    return Counter(len(c) for c in cycles(p))


def cycle_string(p):
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


@dataclass(frozen=True)
class GroupClass:
    order: int
    name: str  # symmetric | alternating | psl27 | other

    def __str__(self):
        return "%s(%d)" % (self.name, self.order)


def classify(order, n, all_even):
    fact = math.factorial(n)
    if order == fact:
        return GroupClass(order, "symmetric")
    if 2 * order == fact and all_even:
        return GroupClass(order, "alternating")
    if n == 7 and order == 168:
        return GroupClass(order, "psl27")
    return GroupClass(order, "other")


def group_order(generators):
    """Order and coarse name of the group generated by ``generators``.

    Breadth-first closure, so exhaustive; refused above degree 9.
    """
    gens = list(generators)
    if not gens:
        raise UsageError("need at least one generator")
    n = gens[0].n
    for g in gens:
        _check_same(gens[0], g)
    if n > MAX_DEGREE:
        raise CapabilityError("group closure is capped at degree %d" % MAX_DEGREE)
    ga = [g._a for g in gens]
    e = tuple(range(n))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in ga:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return classify(len(seen), n, all(g.is_even() for g in gens))


def min_conjugate_tuple(perms):
    """Lexicographically least simultaneous conjugate of ``perms``.

    Brute force over all of `S_n`; keys compare the concatenated image
    sequences.
    """
    perms = tuple(perms)
    if not perms:
        return perms
    n = perms[0].n
    for p in perms:
        _check_same(perms[0], p)
    if n > MAX_DEGREE:
        raise CapabilityError("canonical forms are capped at degree %d" % MAX_DEGREE)
    best = None
    for s in itertools.permutations(range(n)):
        key = []
        for p in perms:
            r = [0] * n
            for j, x in enumerate(p._a):
                r[s[j]] = s[x]
            key.extend(r)
        if best is None or key < best:
            best = key
    return tuple(Perm._raw(tuple(best[i * n:(i + 1) * n])) for i in range(len(perms)))


def involutions(n, k):
    """All permutations of cycle type `2^k 1^{n-2k}`, in lexicographic order."""
    if k < 0 or 2 * k > n:
        raise UsageError("no involution with %d transpositions on %d points" % (k, n))
    out = []

    def rec(a, free, left):
        if left == 0:
            out.append(tuple(a))
            return
        # pair the smallest free point with a later one, or fix it if room remains
        if len(free) < 2 * left:
            return
        i = free[0]
        rest = free[1:]
        if len(rest) >= 2 * left:
            rec(a, rest, left)
        for pos, j in enumerate(rest):
            a[i], a[j] = j, i
            rec(a, rest[:pos] + rest[pos + 1:], left - 1)
            a[i], a[j] = i, j

    rec(list(range(n)), list(range(n)), k)
    return sorted(Perm._raw(a) for a in out)
