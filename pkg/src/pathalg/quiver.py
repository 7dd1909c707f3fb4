"""Finite acyclic quivers: validation, sources/sinks, connectivity.

A quiver is immutable after construction.  Acyclicity is enforced at
construction time (every structural result downstream assumes it), and the
topological order found during validation is kept for path enumeration.
"""

from dataclasses import dataclass

from .errors import CyclicQuiverError, ParseError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """Finite directed multigraph without oriented cycles.

    Vertex and arrow names are arbitrary identifiers; canonical order is
    declaration order.  Parallel arrows are allowed (they are keyed by name).
    """

    def __init__(self, vertices, arrows):
        vertices = list(vertices)
        arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
        if not vertices:
            raise ParseError("a quiver needs at least one vertex")
        seen = set()
        for v in vertices:
            if v in seen:
                raise ParseError(f"duplicate vertex name {v!r}")
            seen.add(v)
        vset = set(vertices)
        aseen = set()
        for a in arrows:
            if a.name in aseen:
                raise ParseError(f"duplicate arrow name {a.name!r}")
            aseen.add(a.name)
            if a.source not in vset:
                raise ParseError(f"arrow {a.name!r} references unknown vertex {a.source!r}")
            if a.target not in vset:
                raise ParseError(f"arrow {a.name!r} references unknown vertex {a.target!r}")
            # trivial paths print as e_<vertex>; forbid arrow names that collide
            if a.name.startswith("e_") and a.name[2:] in vset:
                raise ParseError(f"arrow name {a.name!r} collides with a trivial-path label")
        self.vertices = vertices
        self.arrows = arrows
        self.vertex_index = {v: i for i, v in enumerate(vertices)}
        self.arrow_by_name = {a.name: a for a in arrows}
        self.topological = topological_order(vertices, [(a.source, a.target) for a in arrows])

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v):
        return [a for a in self.arrows if a.target == v]

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def topological_order(vertices, edges):
    """Kahn's algorithm; raises CyclicQuiverError with a witness cycle."""
    indeg = {v: 0 for v in vertices}
    out = {v: [] for v in vertices}
    for s, t in edges:
        indeg[t] += 1
        out[s].append(t)
    order = [v for v in vertices if indeg[v] == 0]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for t in out[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                order.append(t)
    if len(order) == len(vertices):
        return order
    # every unprocessed vertex keeps an unprocessed predecessor, so walking
    # predecessors inside the leftover set must close a cycle
    stuck = [v for v in vertices if indeg[v] > 0]
    inside = set(stuck)
    pred = {v: [] for v in stuck}
    for s, t in edges:
        if s in inside and t in inside:
            pred[t].append(s)
    walk = [stuck[0]]
    seen_at = {stuck[0]: 0}
    while True:
        nxt = pred[walk[-1]][0]
        if nxt in seen_at:
            cycle = walk[seen_at[nxt]:] + [nxt]
            cycle.reverse()
            raise CyclicQuiverError(cycle)
        seen_at[nxt] = len(walk)
        walk.append(nxt)


def validate_acyclic(q):
    """Re-check acyclicity; returns the topological order witness."""
    return topological_order(q.vertices, [(a.source, a.target) for a in q.arrows])


def sources(q):
    """Vertices with no incoming arrow."""
    targets = {a.target for a in q.arrows}
    return {v for v in q.vertices if v not in targets}


def sinks(q):
    """Vertices with no outgoing arrow."""
    starts = {a.source for a in q.arrows}
    return {v for v in q.vertices if v not in starts}


def is_connected(q):
    """Connectivity of the underlying undirected graph."""
    if not q.vertices:
        return True
    adj = {v: set() for v in q.vertices}
    for a in q.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen = {q.vertices[0]}
    stack = [q.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(q.vertices)


def remove_vertex(q, v):
    """Subquiver with one vertex (and its incident arrows) removed."""
    verts = [u for u in q.vertices if u != v]
    arrows = [a for a in q.arrows if a.source != v and a.target != v]
    return Quiver(verts, arrows)
