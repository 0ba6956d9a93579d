r"""
The combinatorial moduli map of a cactus family.

Faces are cactus classes, edges are degenerated cacti (walls), and
vertices are the 2-coloured trees obtained by contracting a wall one
way or the other. A vertex is identified by its tree *within a
component*: the same tree reached from two components gives two
vertices.
"""
import json
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .cactus import CactusClass, Color, Passport
from .degeneration import Side, contract, crossing, degenerate, slot_middle
from .errors import ClosureError, ConsistencyError, UsageError
from .perm import GroupClass, Perm

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Border:
    middle: Color
    edge_key: str
    neighbor_id: int
    neighbor_middle: Color


@dataclass(frozen=True)
class FaceRecord:
    cactus: CactusClass
    borders: tuple   # one Border per middle colour, in colour order

    @property
    def id(self):
        return self.cactus.id


@dataclass(frozen=True)
class EdgeRecord:
    key: str
    faces: tuple      # face id per slot; (f, f) when the wall is one-sided
    vertices: tuple   # sorted pair of tree words, possibly equal
    slots: int
    component: int

    @property
    def self_adjacent(self):
        return self.slots == 1


@dataclass(frozen=True)
class ComponentSummary:
    index: int
    faces: tuple
    edges: tuple
    vertex_degrees: tuple   # ((tree word, degree), ...) sorted by word

    @property
    def vertices(self):
        return tuple(w for w, _ in self.vertex_degrees)

    @property
    def F(self):
        return len(self.faces)

    @property
    def E(self):
        return len(self.edges)

    @property
    def V(self):
        return len(self.vertex_degrees)

    @property
    def chi(self):
        return self.V - self.E + self.F

    @property
    def surface(self):
        return surface_name(self.chi)

    def summary(self):
        return "F=%d E=%d V=%d chi=%d %s" % (self.F, self.E, self.V, self.chi, self.surface)


@dataclass(frozen=True)
class Atlas:
    passport: Passport
    filter: str
    faces: tuple
    edges: tuple
    components: tuple

    def face(self, fid):
        for f in self.faces:
            if f.id == fid:
                return f
        raise KeyError(fid)

    def edge(self, key):
        for e in self.edges:
            if e.key == key:
                return e
        raise KeyError(key)


def surface_name(chi):
    # closed surfaces with chi 2 and 1 are unique; anything else is reported numerically
    return {2: "sphere", 1: "projective_plane"}.get(chi, "chi_only")


def build_atlas(classes, filter="any", passport=None):
    """Assemble the moduli map of a wall-crossing-closed set of cacti."""
    classes = tuple(classes)
    if not classes:
        if passport is None:
            raise UsageError("an empty family needs an explicit passport")
        return Atlas(passport, filter, (), (), ())
    passport = classes[0].passport
    if any(c.passport != passport for c in classes):
        raise UsageError("classes do not share one passport")
    if len({c.id for c in classes}) != len(classes) or any(c.id is None for c in classes):
        raise UsageError("classes need distinct ids")
    by_key = {c.key: c for c in classes}

    faces = []
    slot_owner = {}   # edge key -> list of (face id, slot middle)
    endpoints = {}
    for c in classes:
        bs = []
        seen_slots = set()
        for col in Color:
            t = degenerate(c, col)
            key = t.canon
            nb_triple, nb_mid = crossing(c, col)
            nb = by_key.get(CactusClass(passport, *nb_triple).key)
            if nb is None:
                raise ClosureError(
                    "wall %s of cactus %d leads to a cactus outside the set: %s"
                    % (col.label, c.id, " ".join(str(g) for g in nb_triple)),
                    missing=nb_triple)
            if degenerate(nb, nb_mid).canon != key:
                raise ConsistencyError("wall crossing disagrees with tree matching")
            bs.append(Border(col, key, nb.id, nb_mid))
            s = slot_middle(c, col)
            if s not in seen_slots:
                seen_slots.add(s)
                slot_owner.setdefault(key, []).append(c.id)
            if key not in endpoints:
                ends = sorted(contract(t, side).canon for side in Side)
                endpoints[key] = tuple(ends)
        faces.append(FaceRecord(c, tuple(bs)))
    faces.sort(key=lambda f: f.id)

    for key, owners in slot_owner.items():
        if len(owners) not in (1, 2):
            raise ConsistencyError("wall %s owns %d slots" % (key, len(owners)))

    # components from face-edge incidence only
    ids = [f.id for f in faces]
    index = {fid: i for i, fid in enumerate(ids)}
    rows, cols = [], []
    for owners in slot_owner.values():
        rows.append(index[owners[0]])
        cols.append(index[owners[-1]])
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(ids), len(ids)))
    _, labels = connected_components(graph, directed=False)
    # renumber components by their least face id
    order = {}
    for fid in ids:
        order.setdefault(int(labels[index[fid]]), len(order))
    comp_of = {fid: order[int(labels[index[fid]])] for fid in ids}

    edges = []
    for key in sorted(slot_owner):
        owners = slot_owner[key]
        comp = comp_of[owners[0]]
        fs = tuple(sorted(owners)) if len(owners) == 2 else (owners[0], owners[0])
        edges.append(EdgeRecord(key, fs, endpoints[key], len(owners), comp))

    components = []
    for ci in range(len(order)):
        fids = tuple(f for f in ids if comp_of[f] == ci)
        eks = tuple(e.key for e in edges if e.component == ci)
        deg = Counter()
        for e in edges:
            if e.component == ci:
                deg.update(e.vertices)
        components.append(ComponentSummary(ci, fids, eks, tuple(sorted(deg.items()))))
    atlas = Atlas(passport, filter, tuple(faces), tuple(edges), tuple(components))
    check_atlas(atlas)
    return atlas


def check_atlas(a):
    """Raise ConsistencyError unless the incidence bookkeeping balances."""
    slots = sum(len({slot_middle(f.cactus, b.middle) for b in f.borders}) for f in a.faces)
    if slots != sum(e.slots for e in a.edges):
        raise ConsistencyError("face slots and edge slots disagree")
    for f in a.faces:
        for b in f.borders:
            nb = a.face(b.neighbor_id)
            back = nb.borders[b.neighbor_middle]
            if back.edge_key != b.edge_key or back.neighbor_id != f.id:
                raise ConsistencyError("neighbour relation is not symmetric at face %d" % f.id)
    for comp in a.components:
        if 2 * comp.E != sum(d for _, d in comp.vertex_degrees):
            raise ConsistencyError("component %d: endpoint count mismatch" % comp.index)
    seen = [x for comp in a.components for x in comp.faces]
    if sorted(seen) != sorted(f.id for f in a.faces):
        raise ConsistencyError("components do not partition the faces")


def single_slot_edges(a):
    """Walls bounding the same face on both sides."""
    return tuple(e for e in a.edges if e.self_adjacent)


def vertex_degree_multiset(a):
    return sorted((d for comp in a.components for _, d in comp.vertex_degrees), reverse=True)


def _group_dict(g):
    return {"name": g.name, "order": g.order}


def to_dict(a):
    return {
        "schema": SCHEMA_VERSION,
        "passport": [a.passport.n, *a.passport.counts],
        "filter": a.filter,
        "faces": [
            {
                "id": f.id,
                "permutations": {col.label: str(f.cactus.perm(col)) for col in Color},
                "aut_order": f.cactus.aut_order,
                "group": _group_dict(f.cactus.group),
                "borders": [
                    {
                        "middle": b.middle.label,
                        "edge_key": b.edge_key,
                        "neighbor_id": b.neighbor_id,
                        "neighbor_middle": b.neighbor_middle.label,
                    }
                    for b in f.borders
                ],
            }
            for f in a.faces
        ],
        "edges": [
            {
                "key": e.key,
                "faces": list(e.faces),
                "vertices": list(e.vertices),
                "self_adjacent": e.self_adjacent,
                "component": e.component,
            }
            for e in a.edges
        ],
        "components": [
            {
                "index": c.index,
                "faces": list(c.faces),
                "edges": list(c.edges),
                "vertices": [{"key": w, "degree": d} for w, d in c.vertex_degrees],
                "F": c.F,
                "E": c.E,
                "V": c.V,
                "chi": c.chi,
                "surface": c.surface,
            }
            for c in a.components
        ],
    }


def export_json(a):
    return json.dumps(to_dict(a), indent=2, ensure_ascii=False) + "\n"


def atlas_from_json(text):
    """Rebuild an :class:`Atlas` from :func:`export_json` output."""
    d = json.loads(text)
    pp = Passport(*d["passport"])
    faces = []
    for fd in d["faces"]:
        perms = [Perm.parse(fd["permutations"][col.label], pp.n) for col in Color]
        c = CactusClass(pp, *perms, id=fd["id"])
        # cached values travel with the document
        c.__dict__["aut_order"] = fd["aut_order"]
        c.__dict__["group"] = GroupClass(fd["group"]["order"], fd["group"]["name"])
        bs = tuple(Border(Color.parse(b["middle"]), b["edge_key"], b["neighbor_id"],
                          Color.parse(b["neighbor_middle"])) for b in fd["borders"])
        faces.append(FaceRecord(c, bs))
    edges = tuple(EdgeRecord(e["key"], tuple(e["faces"]), tuple(e["vertices"]),
                             1 if e["self_adjacent"] else 2, e["component"])
                  for e in d["edges"])
    comps = tuple(ComponentSummary(c["index"], tuple(c["faces"]), tuple(c["edges"]),
                                   tuple((v["key"], v["degree"]) for v in c["vertices"]))
                  for c in d["components"])
    return Atlas(pp, d["filter"], tuple(faces), edges, comps)


def export_dot(a):
    """Vertex-edge incidence multigraph, one undirected graph per component."""
    out = []
    for comp in a.components:
        names = {w: "v%d" % i for i, (w, _) in enumerate(comp.vertex_degrees)}
        out.append("graph component_%d {" % comp.index)
        for w, d in comp.vertex_degrees:
            out.append('  %s [label="%s", degree=%d];' % (names[w], w, d))
        for e in a.edges:
            if e.component != comp.index:
                continue
            u, v = (names[w] for w in e.vertices)
            attrs = 'faces="%s"' % ",".join(map(str, e.faces))
            if e.self_adjacent:
                attrs += ", self_adjacent=true, style=dashed"
            out.append('  %s -- %s [%s, key="%s"];' % (u, v, attrs, e.key))
        out.append("}")
    return "\n".join(out) + "\n"
