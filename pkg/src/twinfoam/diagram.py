"""Oriented planar link diagrams from PD codes.

A crossing X[a,b,c,d] lists its four arc labels counterclockwise, starting
at the incoming under-strand; the under-strand runs a -> c.  The crossing is
positive when the over-strand runs d -> b and negative when it runs b -> d.
Crossingless components are written U+ (counterclockwise) or U- (clockwise).

Slots are numbered 0..3 in that order.  A corner (i, c) is the angle at
crossing i between slot c and slot c+1; every face is a cycle of corners.
"""
from dataclasses import dataclass, field
import re


class DiagramError(ValueError):
    """Malformed or inconsistent diagram input."""


@dataclass(frozen=True)
class Crossing:
    labels: tuple          # arc labels at slots 0..3
    incoming: tuple        # per slot: True if that arc-end enters the crossing
    sign: int              # +1 or -1

    @property
    def half_edges(self):
        return tuple(zip(self.labels, self.incoming))


@dataclass(frozen=True)
class Face:
    id: int
    corners: tuple         # (crossing, corner) in boundary order
    darts: tuple           # (arc label, forward?) traversed with the face on the left


@dataclass
class LinkDiagram:
    crossings: list
    arcs: dict                        # label -> (tail end, head end); an end is (crossing, slot)
    free_loops: list                  # (loop id, "ccw" | "cw")
    n_plus: int = 0
    n_minus: int = 0
    faces: list = field(default_factory=list)
    corner_face: dict = field(default_factory=dict)
    outer_face: int = 0
    loop_faces: dict = field(default_factory=dict)   # loop id -> (outside face, inside face)

    @property
    def n(self):
        return len(self.crossings)

    def other_end(self, end):
        lab = self.crossings[end[0]].labels[end[1]]
        tail, head = self.arcs[lab]
        return head if end == tail else tail

    def left_face(self, lab, forward=True):
        """Face on the left of arc `lab` when walked along (or against) its orientation."""
        tail, head = self.arcs[lab]
        i, s = head if forward else tail
        return self.corner_face[(i, (s - 1) % 4)]

    def render(self):
        toks = ["X[%s]" % ",".join(str(v) for v in x.labels) for x in self.crossings]
        toks += ["U+" if o == "ccw" else "U-" for _, o in self.free_loops]
        return " ".join(toks)

    def with_outer_face(self, fid):
        return build_diagram([x.labels for x in self.crossings],
                             [o for _, o in self.free_loops], outer_face=fid)

    def reordered(self, perm):
        """Same diagram with crossing i moved to position perm[i]."""
        xs = [None] * self.n
        for i, j in enumerate(perm):
            xs[j] = self.crossings[i].labels
        return build_diagram(xs, [o for _, o in self.free_loops])

    def relabeled(self, mapping):
        """Same diagram with arc labels renamed by an injective mapping."""
        xs = [tuple(mapping[v] for v in x.labels) for x in self.crossings]
        return build_diagram(xs, [o for _, o in self.free_loops])


_TOKEN = re.compile(r"X\[\s*([^\]]*)\]|U([+\-−])|(\S+)")


def tokenize(text):
    xs, loops = [], []
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    for m in _TOKEN.finditer("\n".join(lines)):
        if m.group(3) is not None:
            raise DiagramError("malformed token %r" % m.group(3))
        if m.group(1) is not None:
            parts = [p.strip() for p in m.group(1).split(",")]
            if len(parts) != 4:
                raise DiagramError("crossing must have 4 labels: %r" % m.group(0))
            try:
                xs.append(tuple(int(p) for p in parts))
            except ValueError:
                raise DiagramError("non-integer arc label in %r" % m.group(0)) from None
        else:
            loops.append("ccw" if m.group(2) == "+" else "cw")
    return xs, loops


def parse_pd(text, outer_face=None):
    xs, loops = tokenize(text)
    return build_diagram(xs, loops, outer_face=outer_face)


def read_pd(path, outer_face=None):
    with open(path, encoding="utf-8") as fh:
        return parse_pd(fh.read(), outer_face=outer_face)


def _orient(xs):
    ends = {}
    for i, x in enumerate(xs):
        for s, lab in enumerate(x):
            ends.setdefault(lab, []).append((i, s))
    for lab, e in ends.items():
        if len(e) != 2:
            raise DiagramError("arc %d appears %d times (must be exactly twice)" % (lab, len(e)))

    def partner(end):
        a, b = ends[xs[end[0]][end[1]]]
        return b if end == a else a

    inc = {}

    def mark(end, value, todo):
        old = inc.get(end)
        if old is None:
            inc[end] = value
            todo.append(end)
        elif old != value:
            raise DiagramError("inconsistent orientation at crossing %d slot %d" % end)

    def propagate(todo):
        while todo:
            e = todo.pop()
            mark(partner(e), not inc[e], todo)
            mark((e[0], (e[1] + 2) % 4), not inc[e], todo)

    todo = []
    for i in range(len(xs)):
        mark((i, 0), True, todo)
        mark((i, 2), False, todo)
    propagate(todo)
    # components that only ever pass over: follow increasing labels
    for i, x in enumerate(xs):
        if (i, 1) not in inc:
            b, d = x[1], x[3]
            d_in = (b == d + 1) or (d > b + 1)
            todo = []
            mark((i, 3), d_in, todo)
            propagate(todo)
    return ends, inc


def _trace_faces(xs, arcs):
    def other(end):
        tail, head = arcs[xs[end[0]][end[1]]]
        return head if end == tail else tail

    corner_face = {}
    faces = []
    for i in range(len(xs)):
        for c in range(4):
            if (i, c) in corner_face:
                continue
            fid = len(faces)
            corners, darts = [], []
            cur = (i, c)
            while cur not in corner_face:
                corner_face[cur] = fid
                corners.append(cur)
                i0, c0 = cur
                lab = xs[i0][c0]
                tail, _ = arcs[lab]
                darts.append((lab, (i0, c0) == tail))
                o = other((i0, c0))
                cur = (o[0], (o[1] - 1) % 4)
            if cur != (i, c):
                raise DiagramError("rotation data does not close up into faces")
            faces.append(Face(fid, tuple(corners), tuple(darts)))
    return faces, corner_face


def build_diagram(xs, loops=(), outer_face=None):
    xs = [tuple(x) for x in xs]
    ends, inc = _orient(xs)
    crossings = []
    for i, x in enumerate(xs):
        flags = tuple(inc[(i, s)] for s in range(4))
        if flags[0] == flags[2] or flags[1] == flags[3]:
            raise DiagramError("crossing %d: a strand must enter and leave" % i)
        crossings.append(Crossing(x, flags, 1 if flags[3] else -1))
    arcs = {}
    for lab, (e1, e2) in ends.items():
        if inc[e1] == inc[e2]:
            raise DiagramError("arc %d has inconsistent orientation" % lab)
        arcs[lab] = (e2, e1) if inc[e1] else (e1, e2)
    free = [(k, o) for k, o in enumerate(loops)]
    d = LinkDiagram(crossings, arcs, free,
                    n_plus=sum(1 for x in crossings if x.sign > 0),
                    n_minus=sum(1 for x in crossings if x.sign < 0))
    if xs:
        _check_connected(xs, ends)
        faces, corner_face = _trace_faces(xs, arcs)
        V, E, F = len(xs), len(arcs), len(faces)
        if V - E + F != 2:
            raise DiagramError("non-planar rotation data: V - E + F = %d" % (V - E + F))
    else:
        faces, corner_face = [Face(0, (), ())], {}
    # each free loop bounds one extra face; loops sit inside the outer face
    base = len(faces)
    d.faces = list(faces)
    d.corner_face = corner_face
    for k, o in free:
        d.faces.append(Face(base + k, (), ()))
    d.outer_face = choose_outer_face(d) if outer_face is None else int(outer_face)
    if not 0 <= d.outer_face < len(d.faces):
        raise DiagramError("outer face %d does not exist (%d faces)" % (d.outer_face, len(d.faces)))
    for k, o in free:
        d.loop_faces[k] = (d.outer_face if d.outer_face < base else 0, base + k)
    return d


def _check_connected(xs, ends):
    parent = list(range(len(xs)))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for (i, _), (j, _) in ends.values():
        parent[find(i)] = find(j)
    if len({find(i) for i in range(len(xs))}) != 1:
        raise DiagramError("split diagrams with crossings in several pieces are not supported")


def faces(d):
    return list(d.faces)


def choose_outer_face(d):
    """Face on the right of the smallest arc id; with no crossings, right of the first loop."""
    if d.arcs:
        return d.left_face(min(d.arcs), forward=False)
    if d.free_loops and d.free_loops[0][1] == "cw":
        return 1
    return 0
