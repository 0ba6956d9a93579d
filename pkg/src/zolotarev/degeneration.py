r"""
Degenerated cacti and their contractions.

When one critical value moves onto the segment joining the other two,
each oval collapses to a path ``u -- mid -- v`` and the cactus becomes
a plane tree with `2n` edges (a :class:`TriTree`). Edges are darts
``L1..Ln`` (from the ``u`` end to the middle) and ``R1..Rn`` (from the
middle to the ``v`` end), where ``u`` and ``v`` are the cyclic
predecessor and successor of the middle colour. Internally dart
``L_i`` is index ``i - 1`` and ``R_i`` is ``n + i - 1``.

A tree is stored by two rotations: ``sigma_mid`` around middle-colour
vertices and ``sigma_ends`` around the end vertices. Contracting all
``L`` or all ``R`` edges gives a 2-coloured plane tree with `n` edges
(a :class:`BiTree`).

Canonical words identify trees up to isomorphism of coloured plane
trees. For passports with repeated counts, colour permutations that
preserve the passport are part of the identification; an odd one
swaps the roles of ``L`` and ``R``.
"""
import enum
from dataclasses import dataclass, field
from functools import cached_property

from . import perm as P
from .cactus import Color, canonical_triple, CactusClass
from .errors import ConsistencyError, UsageError
from .perm import Perm


class Side(enum.Enum):
    MERGE_PREDECESSOR = "merge_predecessor"   # contract every L dart
    MERGE_SUCCESSOR = "merge_successor"       # contract every R dart


# sigma_mid(L_i) = R_i, sigma_mid(R_i) = L_{g_mid(i)}
INTERLEAVE = "ell_to_r"


def _face_order(rot_a, rot_b):
    """Darts in face order for the map with rotations ``rot_a``, ``rot_b``.

    Returns None unless the map has exactly one face.
    """
    N = len(rot_a)
    f = [rot_b[rot_a[d]] for d in range(N)]
    order = [0]
    while len(order) < N:
        nxt = f[order[-1]]
        if nxt == 0:
            return None
        order.append(nxt)
    return order if f[order[-1]] == 0 else None


def _min_face_word(rot_a, rot_b, side_of):
    """Least token sequence over the starting darts of the unique face.

    Token of a dart: its side, the size of its ``rot_a`` orbit, and how
    far along the face ``rot_a`` sends it. The offsets pin the map down
    completely, so equal words mean isomorphic one-face maps.
    """
    order = _face_order(rot_a, rot_b)
    if order is None:
        raise ConsistencyError("map does not have a single face")
    N = len(order)
    pos = [0] * N
    for i, d in enumerate(order):
        pos[d] = i
    deg = [0] * N
    for cyc in P.cycles(Perm._raw(tuple(rot_a))):
        for x in cyc:
            deg[x - 1] = len(cyc)
    base = [(side_of(d), deg[d], (pos[rot_a[d]] - pos[d]) % N) for d in order]
    return min(tuple(base[i:] + base[:i]) for i in range(N))


def _render(tokens):
    return " ".join("%s%d.%d" % t for t in tokens)


@dataclass(frozen=True)
class TriTree:
    """A degenerated cactus: 3-coloured plane tree on `2n` darts."""
    passport: object
    middle: Color
    sigma_mid: Perm
    sigma_ends: Perm

    @property
    def n(self):
        return self.passport.n

    def check(self):
        n = self.n
        sm, se = self.sigma_mid.array, self.sigma_ends.array
        if _face_order(sm, se) is None:
            raise ConsistencyError("degenerated cactus is not a plane tree")
        for d in range(2 * n):
            if (se[d] < n) != (d < n) or (sm[d] < n) == (d < n):
                raise ConsistencyError("rotation mixes the L/R dart classes")

    @cached_property
    def canon(self):
        return tri_canonical(self)

    def dart_name(self, d):
        return ("L%d" % d) if d <= self.n else ("R%d" % (d - self.n))

    def as_dict(self):
        return {
            "n": self.n,
            "middle": self.middle.label,
            "sigma_mid": _named_cycles(self.sigma_mid, self.dart_name),
            "sigma_ends": _named_cycles(self.sigma_ends, self.dart_name),
            "canon": self.canon,
        }


@dataclass(frozen=True)
class BiTree:
    """A 2-coloured plane tree with `n` edges (a Shabat tree)."""
    rho_merged: Perm
    rho_plain: Perm

    @property
    def n(self):
        return self.rho_merged.n

    @cached_property
    def canon(self):
        return bi_canonical(self)

    def as_dict(self):
        return {
            "n": self.n,
            "rho_merged": str(self.rho_merged),
            "rho_plain": str(self.rho_plain),
            "canon": self.canon,
        }


def _named_cycles(p, name):
    parts = ["(" + " ".join(name(x) for x in c) + ")" for c in P.cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


def degenerate(c, middle):
    """Degenerated cactus of ``c`` when colour ``middle`` lies between the others."""
    middle = Color(middle)
    n = c.passport.n
    gu = c.perm(middle.pred).array
    gm = c.perm(middle).array
    gv = c.perm(middle.succ).array
    se = [0] * (2 * n)
    sm = [0] * (2 * n)
    for i in range(n):
        se[i] = gu[i]
        se[n + i] = n + gv[i]
        sm[i] = n + i
        sm[n + i] = gm[i]
    t = TriTree(c.passport, middle, Perm._raw(tuple(sm)), Perm._raw(tuple(se)))
    t.check()
    return t


def _swap_sides(t):
    """The same tree with the L and R dart classes exchanged."""
    n = t.n

    def sw(d):
        return d + n if d < n else d - n
    sm, se = t.sigma_mid.array, t.sigma_ends.array
    return (tuple(sw(sm[sw(d)]) for d in range(2 * n)),
            tuple(sw(se[sw(d)]) for d in range(2 * n)))


def tri_canonical(t):
    """Canonical word of a degenerated cactus (an opaque, stable key)."""
    n = t.n
    plain = (t.sigma_mid.array, t.sigma_ends.array)
    swapped = None
    best = None
    for pi, odd in t.passport.color_symmetries:
        if odd:
            swapped = swapped or _swap_sides(t)
            rots = swapped
        else:
            rots = plain
        tokens = _min_face_word(rots[0], rots[1], lambda d: "L" if d < n else "R")
        cand = (Color(pi[t.middle]).label, tokens)
        if best is None or cand < best:
            best = cand
    return best[0] + "|" + _render(best[1])


def contract(t, side):
    """Collapse every L dart (merge_predecessor) or every R dart (merge_successor).

    The merged rotation follows the boundary walk: from a surviving
    half-edge, step around its vertex and, on meeting a contracted
    edge, hop to its other end and keep stepping. Surviving darts are
    relabelled ``1..n`` in increasing dart order.
    """
    side = Side(side)
    n = t.n
    sm, se = t.sigma_mid.array, t.sigma_ends.array
    lo = n if side is Side.MERGE_PREDECESSOR else 0
    surv = range(lo, lo + n)

    def gone(d):
        return not lo <= d < lo + n

    def step(d):
        # half-edge (d, at_mid): at_mid True means the end at the middle vertex
        at_mid = True
        d = sm[d]
        while gone(d):
            at_mid = not at_mid
            d = se[d] if not at_mid else sm[d]
        if not at_mid:
            raise ConsistencyError("contraction walk left the merged vertex")
        return d

    merged = tuple(step(d) - lo for d in surv)
    plain = tuple(se[d] - lo for d in surv)
    b = BiTree(Perm._raw(merged), Perm._raw(plain))
    if _face_order(b.rho_merged.array, b.rho_plain.array) is None:
        raise ConsistencyError("contraction is not a plane tree")
    return b


def bi_canonical(b):
    """Canonical word of a plane tree, ignoring which colour class is which."""
    a, p = b.rho_merged.array, b.rho_plain.array
    w1 = _min_face_word(a, p, lambda d: "E")
    w2 = _min_face_word(p, a, lambda d: "E")
    return "tree%d|" % b.n + _render(min(w1, w2))


def crossing(c, middle):
    """Neighbouring cactus across the wall ``degenerate(c, middle)``.

    Returns ``(triple, middle')``: the canonical triple of the neighbour
    and the colour its shared wall has as seen from the neighbour.

    The tree is re-glued into ovals using the other corners at middle
    vertices (``R_k`` followed by ``L_{g_mid(k)}``); the triangle of
    critical values comes out with reversed orientation, so the colours
    are relabelled by an odd passport-preserving permutation.
    """
    middle = Color(middle)
    pp = c.passport
    pi = pp.reflection
    if pi is None:
        raise UsageError("passport %s has no colour reflection; walls lead out of the family" % pp)
    u, v = middle.pred, middle.succ
    gu, gm = c.perm(u), c.perm(middle)
    t = [None] * 3
    t[u] = P.conjugate(gu, gm)
    t[middle] = gm
    t[v] = c.perm(v)
    relabeled = [None] * 3
    for col in range(3):
        relabeled[pi[col]] = t[col]
    prod = P.compose(P.compose(relabeled[0], relabeled[1]), relabeled[2])
    if len(P.cycles(prod)) != 1:
        raise ConsistencyError("re-glued cactus does not close up around infinity")
    canon, rot = canonical_triple(tuple(relabeled), pp)
    return canon, Color(rot[pi[middle]])


def transform(c, middle):
    """The cactus on the other side of the wall ``degenerate(c, middle)``."""
    canon, _ = crossing(c, middle)
    return CactusClass(c.passport, *canon)


def borders(c):
    """The three degenerated cacti of ``c``, indexed by middle colour."""
    return tuple(degenerate(c, col) for col in Color)


def slot_middle(c, middle):
    """Representative middle colour of the border slot of ``c`` at ``middle``.

    Borders related by a colour symmetry of the cactus itself are one
    slot. Only classes fixed by a colour rotation have fewer than three.
    """
    from .cactus import color_stabilizer
    return Color(min(pi[middle] for pi in color_stabilizer(c)))
