"""Resolutions of a diagram into webs, vertex-pair reduction and component types.

At a positive crossing bit 0 is the singular resolution and bit 1 the
oriented one; at a negative crossing it is the other way round.  A singular
resolution joins the two incoming ends through a sink and the two outgoing
ends through a source.  Both pairings join slots s and s+1 (mod 4).

Preferred edges: a sink prefers its end at slot s+1, a source its end at
slot s.  Drawn with both strands pointing up, this is the edge entering the
sink from the right and the edge leaving the source to the right.  With this
choice no traced component has |sum p| > 2, so reduction never gets stuck.

Along a traversal each vertex has p = +1 if its preferred edge lies ahead and
p = -1 if behind.  Two consecutive vertices are of the same type when their
shared edge is preferred by both or by neither, i.e. p != p'.  Same-type
pairs are removed while a component has more than two vertices, so every
component that carries vertices ends as a bi-web and circles are exactly the
components with no singular site.
"""
from dataclasses import dataclass, field
import random as _random

CIRCLE_PLUS = "0+"
CIRCLE_MINUS = "0-"
BIWEB = "1"
TYPES = (CIRCLE_PLUS, CIRCLE_MINUS, BIWEB)


class IrreducibleWeb(RuntimeError):
    """A component kept more than two vertices and has no removable pair."""


@dataclass(frozen=True)
class Vertex:
    position: int      # the vertex sits just before arcs[position]
    kind: str          # "sink" | "source"
    p: int             # +1: preferred edge is arcs[position]; -1: it is arcs[position - 1]
    crossing: int


@dataclass(frozen=True)
class WebComponent:
    arcs: tuple                    # (label, forward) in traversal order
    vertices: tuple                # Vertex, ordered by position
    origin_arcs: frozenset
    connectors: frozenset = frozenset()   # (crossing, (s, t)) used by this component
    loop: object = None            # free loop id, or None

    @property
    def key(self):
        if self.loop is not None:
            return ("loop", self.loop)
        return ("arcs", self.origin_arcs)

    @property
    def sort_key(self):
        if self.loop is not None:
            return (1, self.loop)
        return (0, min(self.origin_arcs))

    def preferred_arc(self, v):
        pos = v.position if v.p > 0 else v.position - 1
        return self.arcs[pos % len(self.arcs)][0]

    def check(self):
        m = len(self.arcs)
        at = {v.position for v in self.vertices}
        for t in range(m):
            flip = self.arcs[t][1] != self.arcs[t - 1][1]
            if flip != (t in at):
                raise AssertionError("orientation must reverse exactly at vertices")
        if len(self.vertices) % 2:
            raise AssertionError("odd vertex count")
        kinds = [v.kind for v in self.vertices]
        for k in range(len(kinds)):
            if kinds[k] == kinds[k - 1] and len(kinds) > 1:
                raise AssertionError("sinks and sources must alternate")


@dataclass
class Resolution:
    J: tuple
    components: list                   # reduced WebComponent, canonical order
    types: list                        # per component, one of TYPES
    raw: list = field(default_factory=list)   # components before reduction

    @property
    def type_sequence(self):
        return list(self.types)

    def index_of(self, key):
        for t, c in enumerate(self.components):
            if c.key == key:
                return t
        raise KeyError(key)

    def dump(self):
        bits = "".join(str(b) for b in self.J)
        lines = []
        for l, (c, t, r) in enumerate(zip(self.components, self.types, self.raw)):
            arcs = ",".join(str(a) for a in sorted(c.origin_arcs)) if c.loop is None else "U%d" % c.loop
            lines.append("J=%s comp%d type=%s arcs={%s} verts=%d" % (bits, l, t, arcs, len(r.vertices)))
        return "\n".join(lines)


def is_oriented(d, J, i):
    return (J[i] == 1) == (d.crossings[i].sign > 0)


def smoothing(d, J, i):
    """The two slot pairs joined at crossing i, each as (s, s+1 mod 4)."""
    inc = d.crossings[i].incoming
    p1 = [(0, 1), (2, 3)]
    p2 = [(3, 0), (1, 2)]
    mixed = all(inc[a] != inc[b] for a, b in p1)
    if is_oriented(d, J, i):
        return p1 if mixed else p2
    return p2 if mixed else p1


def from_the_right(d, i, s, t, kind):
    """Preferred end of the pair (s, t = s+1): t at a sink, s at a source."""
    return t if kind == "sink" else s


PREFERRED = from_the_right


def trace(d, J, preferred=None):
    """Unreduced web components of the J-resolution, canonically ordered."""
    J = tuple(J)
    rule = preferred or PREFERRED
    conn, pref = {}, {}
    for i in range(d.n):
        singular = not is_oriented(d, J, i)
        inc = d.crossings[i].incoming
        for s, t in smoothing(d, J, i):
            conn[(i, s)] = (i, t)
            conn[(i, t)] = (i, s)
            if singular:
                pref[(i, s)] = pref[(i, t)] = rule(d, i, s, t, "sink" if inc[s] else "source")
    seen = set()
    comps = []
    for start in sorted(conn):
        if start in seen:
            continue
        arcs, verts, cons = [], [], set()
        e = start
        while True:
            seen.add(e)
            f = conn[e]
            seen.add(f)
            i = e[0]
            cons.add((i, tuple(sorted((e[1], f[1])))))
            if e in pref:
                kind = "sink" if d.crossings[i].incoming[f[1]] else "source"
                verts.append(Vertex(len(arcs), kind, 1 if pref[e] == f[1] else -1, i))
            lab = d.crossings[i].labels[f[1]]
            tail, _ = d.arcs[lab]
            arcs.append((lab, f == tail))
            e = d.other_end(f)
            if e == start:
                break
        comps.append(WebComponent(tuple(arcs), tuple(verts), frozenset(a for a, _ in arcs),
                                  frozenset(cons)))
    for k, _ in d.free_loops:
        comps.append(WebComponent((), (), frozenset(), frozenset(), loop=k))
    comps.sort(key=lambda c: c.sort_key)
    return comps


def component_count(d, J):
    return len(trace(d, J))


def removable_pairs(c):
    """Indices k such that vertices k and k+1 (cyclically) are of the same type."""
    vs = c.vertices
    if len(vs) < 2:
        return []
    return [k for k in range(len(vs)) if vs[k].p != vs[(k + 1) % len(vs)].p]


def remove_pair(c, k):
    """Delete vertices k and k+1, reversing the arcs strictly between them."""
    vs = list(c.vertices)
    n = len(vs)
    v, w = vs[k], vs[(k + 1) % n]
    m = len(c.arcs)
    span = set()
    t = v.position
    while t % m != w.position:
        span.add(t % m)
        t += 1
    arcs = [(lab, (not fw) if t in span else fw) for t, (lab, fw) in enumerate(c.arcs)]
    rest = [x for j, x in enumerate(vs) if j not in (k, (k + 1) % n)]
    return WebComponent(tuple(arcs), tuple(rest), c.origin_arcs, c.connectors, c.loop)


def reduce(c, rng=None, to_circle=False):
    """Remove same-type pairs until two vertices are left.

    rng picks a random removable pair each step (default: the first one).
    to_circle=True keeps going while a pair is removable; only used to
    compare against the stop-at-bi-web reading.
    """
    floor = 0 if to_circle else 2
    while len(c.vertices) > floor:
        ks = removable_pairs(c)
        if not ks:
            break
        k = rng.choice(ks) if rng is not None else ks[0]
        c = remove_pair(c, k)
    if len(c.vertices) > 2:
        raise IrreducibleWeb("component with arcs %s keeps %d vertices (p = %s)"
                             % (sorted(c.origin_arcs), len(c.vertices),
                                [v.p for v in c.vertices]))
    return c


class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        p = self.p
        p.setdefault(x, x)
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        self.p[self.find(a)] = self.find(b)


def traversal_is_ccw(d, J, c):
    """True if walking c in its traversal direction goes counterclockwise.

    The curve c splits the sphere in two regions; faces on the same side are
    glued across every diagram arc not on c and across the corners that the
    smoothings do not cut off along c.  The walk is counterclockwise exactly
    when the outer face lies on its right.
    """
    uf = _UF()
    on_c = set(c.origin_arcs)
    for lab in d.arcs:
        if lab not in on_c:
            uf.union(d.left_face(lab, True), d.left_face(lab, False))
    for i in range(d.n):
        pairs = smoothing(d, J, i)
        cut = [(s, (i, tuple(sorted((s, t)))) in c.connectors) for s, t in pairs]
        middle = [k for k in range(4) if k not in (cut[0][0], cut[1][0])]
        uf.union(d.corner_face[(i, middle[0])], d.corner_face[(i, middle[1])])
        for s, mine in cut:
            if not mine:
                uf.union(d.corner_face[(i, s)], d.corner_face[(i, middle[0])])
    lab, fw = c.arcs[0]
    left = d.left_face(lab, fw)
    return uf.find(left) != uf.find(d.outer_face)


def classify(c, d, J, force_neg=False):
    if c.vertices:
        return BIWEB
    if force_neg:
        return CIRCLE_MINUS
    if c.loop is not None:
        return CIRCLE_PLUS if dict(d.free_loops)[c.loop] == "ccw" else CIRCLE_MINUS
    ccw = traversal_is_ccw(d, J, c) == c.arcs[0][1]
    return CIRCLE_PLUS if ccw else CIRCLE_MINUS


def resolve(d, J, force_neg=False, rng=None):
    J = tuple(J)
    if len(J) != d.n:
        raise ValueError("J has %d bits for %d crossings" % (len(J), d.n))
    raw = trace(d, J)
    comps = [reduce(c, rng=rng) for c in raw]
    types = [classify(c, d, J, force_neg) for c in comps]
    return Resolution(J, comps, types, raw)


def random_reduction_types(d, J, seed):
    """Types obtained with a randomized removal order (for confluence checks)."""
    rng = _random.Random(seed)
    return resolve(d, J, rng=rng).types
