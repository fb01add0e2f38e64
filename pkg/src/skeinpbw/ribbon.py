"""Ciliated ribbon graphs, boundary cycles of the fattening, and the induced presentation."""

import json
from dataclasses import dataclass

from .errors import UnsupportedError, ValidationError
from .presentation import SOURCE_ABOVE, GeneratorArc, Presentation


@dataclass(frozen=True)
class CiliatedGraph:
    """Vertices carry a linear order of half-edges; edges run first -> second."""

    vertices: tuple  # ((vertex id, (half-edge ids...)), ...)
    edges: tuple  # ((edge id, (h1, h2)), ...)

    def __post_init__(self):
        seen_v = {}
        for vid, hs in self.vertices:
            if not hs:
                raise ValidationError("vertex without half-edges", {"vertex": vid})
            for h in hs:
                if h in seen_v:
                    raise ValidationError("half-edge listed at two places", {"half_edge": h})
                seen_v[h] = vid
        seen_e = {}
        for eid, pair in self.edges:
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ValidationError("an edge needs two distinct half-edges", {"edge": eid})
            for h in pair:
                if h in seen_e:
                    raise ValidationError("half-edge used by two edges", {"half_edge": h})
                if h not in seen_v:
                    raise ValidationError("edge uses an unknown half-edge", {"half_edge": h})
                seen_e[h] = eid
        missing = set(seen_v) - set(seen_e)
        if missing:
            raise ValidationError("half-edge not attached to an edge",
                                  {"half_edges": sorted(missing)})
        if len({v for v, _ in self.vertices}) != len(self.vertices):
            raise ValidationError("vertex ids must be distinct")
        if len({e for e, _ in self.edges}) != len(self.edges):
            raise ValidationError("edge ids must be distinct")

    @classmethod
    def from_json(cls, data):
        try:
            verts = tuple((str(v["id"]), tuple(map(str, v["half_edges"]))) for v in data["vertices"])
            edges = tuple((str(e["id"]), tuple(map(str, e["half_edges"]))) for e in data["edges"])
        except (KeyError, TypeError) as exc:
            raise ValidationError("malformed graph JSON", {"detail": str(exc)}) from None
        return cls(verts, edges)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))

    def to_json(self):
        return {"vertices": [{"id": v, "half_edges": list(hs)} for v, hs in self.vertices],
                "edges": [{"id": e, "half_edges": list(p)} for e, p in self.edges]}

    # incidence helpers
    def vertex_of(self):
        return {h: v for v, hs in self.vertices for h in hs}

    def position_of(self):
        return {h: k for _, hs in self.vertices for k, h in enumerate(hs)}

    def partner(self):
        out = {}
        for _, (h1, h2) in self.edges:
            out[h1], out[h2] = h2, h1
        return out

    def rotation(self):
        """Cyclic successor of each half-edge around its vertex."""
        out = {}
        for _, hs in self.vertices:
            for k, h in enumerate(hs):
                out[h] = hs[(k + 1) % len(hs)]
        return out

    def is_connected(self):
        parent = {v: v for v, _ in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        vof = self.vertex_of()
        for _, (h1, h2) in self.edges:
            parent[find(vof[h1])] = find(vof[h2])
        return len({find(v) for v, _ in self.vertices}) == 1


def trace_boundary(graph):
    """Orbits of the face permutation ``h -> rotation(partner(h))``."""
    rot, par = graph.rotation(), graph.partner()
    order = [h for _, hs in graph.vertices for h in hs]
    seen = set()
    cycles = []
    for start in order:
        if start in seen:
            continue
        cyc = []
        h = start
        while h not in seen:
            seen.add(h)
            cyc.append(h)
            h = rot[par[h]]
        cycles.append(tuple(cyc))
    return cycles


@dataclass(frozen=True)
class SurfaceInvariants:
    genus: int
    boundary_components_of_fattening: int
    punctures_closed: int
    boundary_arcs_open: int
    inner_punctures_open: int

    def to_json(self):
        return dict(self.__dict__)


def surface_invariants(graph):
    cycles = trace_boundary(graph)
    b = len(cycles)
    chi = len(graph.vertices) - len(graph.edges)
    twice_genus = 2 - chi - b
    if twice_genus < 0 or twice_genus % 2:
        raise ValidationError("inconsistent Euler characteristic", {"chi": chi, "cycles": b})
    # the cilium of v sits in the corner before its first half-edge
    cyc_of = {h: k for k, c in enumerate(cycles) for h in c}
    with_arc = {cyc_of[hs[0]] for _, hs in graph.vertices}
    return SurfaceInvariants(twice_genus // 2, b, b, len(graph.vertices), b - len(with_arc))


def build_presentation(graph):
    """One generator per edge, loops normalised to type d.

    A loop whose first half-edge comes later in the vertex order than its
    second is reversed, so the generator named after the edge is the
    inverse path; its stated generators are the transposed ones.
    """
    if not graph.is_connected():
        raise UnsupportedError("graph must be connected")
    vof, pos = graph.vertex_of(), graph.position_of()
    gens = []
    for k, (eid, (h1, h2)) in enumerate(graph.edges):
        src = (vof[h1], pos[h1])
        tgt = (vof[h2], pos[h2])
        height = None
        if src[0] == tgt[0]:
            if src[1] > tgt[1]:
                src, tgt = tgt, src
            height = SOURCE_ABOVE
        gens.append(GeneratorArc(eid, src, tgt, height, k))
    return Presentation([v for v, _ in graph.vertices], gens)


def reversed_loops(graph):
    """Ids of loops whose orientation ``build_presentation`` reverses."""
    vof, pos = graph.vertex_of(), graph.position_of()
    return sorted(e for e, (h1, h2) in graph.edges if vof[h1] == vof[h2] and pos[h1] > pos[h2])
