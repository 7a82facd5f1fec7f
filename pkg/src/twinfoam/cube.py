"""Edge maps of the cube of resolutions.

Every factor is stored in the basis (1, X) of A.  The tabulated edge maps are
written with 0+ factors in the basis (1, h - X); as maps of elements they
are the compositions below, so no conversion is needed at lookup time.

All fourteen tables share one shape.  Let s be X -> h - X applied to every
0+ factor and n+(in), n+(out) the numbers of 0+ factors on each side; then
  merge = s o (-i)^(n+(in) - n+(out)) m o s,
  split = s o i (-i)^(n+(in) - n+(out)) Delta_C o s.
``derived_local_map`` implements this; it reproduces the fourteen tables and
is used (unless strict=True) for signatures outside them.  Rescaling every
generator of a resolution by (-i)^(number of 0+ factors) turns all merges
into m and all splits into i*Delta_C, so faces commute.
"""
from dataclasses import dataclass
import itertools

from .exactnum import GaussianRational, ONE, I
from . import twinfrob as tf
from .twinfrob import LinMap
from .webs import CIRCLE_PLUS, CIRCLE_MINUS, BIWEB


class UnsupportedEdgeSignature(RuntimeError):
    pass


class MalformedEdge(RuntimeError):
    pass


P, M, W = CIRCLE_PLUS, CIRCLE_MINUS, BIWEB


def _merge_tables(p):
    m, id_, z1, g = tf.m_W(p), tf.identity(), tf.z1(p), tf.g(p)
    return {
        (P, M): z1 @ tf.m_C(p) @ g.tensor(id_),
        (M, P): z1 @ tf.m_C(p) @ id_.tensor(g),
        (M, W): m @ z1.tensor(id_),
        (W, M): m @ id_.tensor(z1),
        (P, W): m @ (z1 @ g).tensor(id_),
        (W, P): m @ id_.tensor(z1 @ g),
        (W, W): m,
    }


def _split_tables(p):
    D, id_, s = tf.Delta_C(p), tf.identity(), tf.sigma(p)
    left = (s.tensor(id_) @ D).scale(-1)     # 1 -> -[1 (x) X + (h-X) (x) 1 - h 1 (x) 1]
    right = (id_.tensor(s) @ D).scale(-1)    # 1 -> -[1 (x) (h-X) + X (x) 1 - h 1 (x) 1]
    return {
        (P, M): left,
        (M, P): right,
        (W, M): tf.Delta_W(p),
        (M, W): tf.Delta_W(p),
        (W, P): right,
        (P, W): left,
        (W, W): tf.Delta_W(p),
    }


def fourteen_signatures():
    out = []
    for pair in [(P, M), (M, P), (M, W), (W, M), (P, W), (W, P), (W, W)]:
        out.append(("merge", pair, (W,)))
    for pair in [(P, M), (M, P), (W, M), (M, W), (W, P), (P, W), (W, W)]:
        out.append(("split", (W,), pair))
    return out


FOURTEEN = frozenset(fourteen_signatures())


def table_local_map(sig, p=None):
    """The tabulated map for one of the fourteen signatures."""
    kind, src, tgt = sig
    if sig not in FOURTEEN:
        raise UnsupportedEdgeSignature("signature %s not among the fourteen cases" % (sig,))
    if kind == "merge":
        return _merge_tables(p)[tuple(src)]
    return _split_tables(p)[tuple(tgt)]


def _relabel(types, p):
    out = LinMap.identity(1)
    for t in types:
        out = out.tensor(tf.sigma(p) if t == P else tf.identity())
    return out


def derived_local_map(sig, p=None):
    kind, src, tgt = sig
    shift = sum(1 for t in src if t == P) - sum(1 for t in tgt if t == P)
    c = (-I) ** shift
    if kind == "merge":
        base = tf.m_C(p).scale(c)
    else:
        base = tf.Delta_C(p).scale(I * c)
    return _relabel(tgt, p) @ base @ _relabel(src, p)


def lookup_local_map(sig, p=None, strict=False):
    sig = (sig[0], tuple(sig[1]), tuple(sig[2]))
    if sig in FOURTEEN:
        return table_local_map(sig, p)
    if strict:
        raise UnsupportedEdgeSignature(
            "edge signature %s -> %s (%s) is outside the fourteen cases" % (sig[1], sig[2], sig[0]))
    return derived_local_map(sig, p)


@dataclass(frozen=True)
class EdgeDescriptor:
    J: tuple
    k: int
    kind: str
    source_slots: tuple
    target_slots: tuple
    signature: tuple
    carry: tuple        # (source slot, target slot) for untouched components

    @property
    def target_J(self):
        return self.J[:self.k] + (1,) + self.J[self.k + 1:]


@dataclass
class CubeEdgeMap:
    descriptor: EdgeDescriptor
    sign: int
    local: LinMap
    n_source: int
    n_target: int
    entries: dict       # source index -> {target index: coefficient}, sign included

    def dense(self):
        m = LinMap(2 ** self.n_target, 2 ** self.n_source)
        for c, col in self.entries.items():
            for r, v in col.items():
                m.entries[r][c] = v
        return m


def classify_edge(src, tgt, k):
    """Match components by arc sets and describe the merge or split at crossing k."""
    if tgt.J != src.J[:k] + (1,) + src.J[k + 1:] or src.J[k] != 0:
        raise MalformedEdge("target is not J plus crossing %d" % k)
    skeys = [c.key for c in src.components]
    tkeys = [c.key for c in tgt.components]
    tpos = {key: t for t, key in enumerate(tkeys)}
    carry, s_aff = [], []
    for s, key in enumerate(skeys):
        if key in tpos:
            t = tpos[key]
            if src.types[s] != tgt.types[t]:
                raise MalformedEdge("untouched component changed type: %s" % (key,))
            carry.append((s, t))
        else:
            s_aff.append(s)
    kept = {t for _, t in carry}
    t_aff = [t for t in range(len(tkeys)) if t not in kept]
    if (len(s_aff), len(t_aff)) == (2, 1):
        kind = "merge"
    elif (len(s_aff), len(t_aff)) == (1, 2):
        kind = "split"
    else:
        raise MalformedEdge("edge J=%s k=%d changes %d -> %d components"
                            % (src.J, k, len(s_aff), len(t_aff)))
    union_s = frozenset().union(*(src.components[s].origin_arcs for s in s_aff))
    union_t = frozenset().union(*(tgt.components[t].origin_arcs for t in t_aff))
    if union_s != union_t:
        raise MalformedEdge("affected components do not cover the same arcs")
    sig = (kind, tuple(src.types[s] for s in s_aff), tuple(tgt.types[t] for t in t_aff))
    return EdgeDescriptor(src.J, k, kind, tuple(s_aff), tuple(t_aff), sig, tuple(carry))


def edge_sign(J, k):
    return -1 if sum(J[:k]) % 2 else 1


def assemble_edge_map(desc, p=None, n_source=None, n_target=None, strict=False):
    n_source = len(desc.source_slots) + len(desc.carry) if n_source is None else n_source
    n_target = len(desc.target_slots) + len(desc.carry) if n_target is None else n_target
    local = lookup_local_map(desc.signature, p, strict=strict)
    sign = edge_sign(desc.J, desc.k)
    # nonzero columns of the local map as lists of (target bits, coefficient)
    cols = []
    for c in range(local.cols):
        col = []
        for r in range(local.rows):
            v = local.entries[r][c]
            if v:
                bits = [(r >> (len(desc.target_slots) - 1 - j)) & 1
                        for j in range(len(desc.target_slots))]
                col.append((bits, v * sign))
        cols.append(col)
    entries = {}
    for sbits in itertools.product((0, 1), repeat=n_source):
        lc = 0
        for s in desc.source_slots:
            lc = 2 * lc + sbits[s]
        base = [0] * n_target
        for s, t in desc.carry:
            base[t] = sbits[s]
        out = {}
        for tbits, v in cols[lc]:
            for t, b in zip(desc.target_slots, tbits):
                base[t] = b
            idx = 0
            for b in base:
                idx = 2 * idx + b
            out[idx] = out.get(idx, 0) + v
        col = {r: v for r, v in out.items() if v}
        if col:
            entries[_index(sbits)] = col
    return CubeEdgeMap(desc, sign, local, n_source, n_target, entries)


def _index(bits):
    idx = 0
    for b in bits:
        idx = 2 * idx + b
    return idx


def permutation_map(order):
    """Factor permutation on A^(x)n sending factor j to position order[j]."""
    n = len(order)
    cols = []
    for bits in itertools.product((0, 1), repeat=n):
        new = [0] * n
        for j, b in enumerate(bits):
            new[order[j]] = b
        cols.append({_index(new): 1})
    return LinMap.from_columns(cols, 2 ** n)


def assemble_dense(desc, p=None, strict=False):
    """P_target o (local (x) id) o P_source, built from explicit permutations."""
    local = lookup_local_map(desc.signature, p, strict=strict)
    carry = sorted(desc.carry)
    n_s = len(desc.source_slots) + len(carry)
    n_t = len(desc.target_slots) + len(carry)
    # source: affected slots first, then carried ones in source order
    src_order = [None] * n_s
    for j, s in enumerate(list(desc.source_slots) + [s for s, _ in carry]):
        src_order[s] = j
    tgt_front = list(desc.target_slots) + [t for _, t in carry]
    tgt_order = [None] * n_t
    for j, t in enumerate(tgt_front):
        tgt_order[j] = t
    middle = local.tensor(LinMap.identity(2 ** len(carry)))
    mat = permutation_map(tgt_order) @ middle @ permutation_map(src_order)
    return mat.scale(edge_sign(desc.J, desc.k))


@dataclass
class Cube:
    diagram: object
    params: object
    resolutions: dict      # J -> Resolution
    edges: dict            # (J, k) -> CubeEdgeMap

    def edge(self, J, k):
        return self.edges[(tuple(J), k)]

    def dump(self):
        lines = []
        for (J, k) in sorted(self.edges, key=lambda e: (sum(e[0]), e[0], e[1])):
            e = self.edges[(J, k)]
            d = e.descriptor
            lines.append("edge J=%s k=%d kind=%s sig=(%s)->(%s) src=%s tgt=%s sign=%+d" % (
                "".join(map(str, J)), k, d.kind, ",".join(d.signature[1]), ",".join(d.signature[2]),
                list(d.source_slots), list(d.target_slots), e.sign))
            for c in sorted(e.entries):
                for r in sorted(e.entries[c]):
                    lines.append("  %d -> %d : %s" % (c, r, e.entries[c][r]))
        return "\n".join(lines) + "\n"


def build_cube(d, p=None, force_neg=False, strict=False, threads=1):
    from .webs import resolve
    p = p if p is not None else tf.Params()
    states = list(itertools.product((0, 1), repeat=d.n))
    pairs = [(J, k) for J in states for k in range(d.n) if J[k] == 0]

    def one_edge(e):
        J, k = e
        src, tgt = res[J], res[J[:k] + (1,) + J[k + 1:]]
        desc = classify_edge(src, tgt, k)
        return assemble_edge_map(desc, p, len(src.components), len(tgt.components), strict)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as ex:
            res = dict(zip(states, ex.map(lambda J: resolve(d, J, force_neg), states)))
            edges = dict(zip(pairs, ex.map(one_edge, pairs)))
    else:
        res = {J: resolve(d, J, force_neg) for J in states}
        edges = {e: one_edge(e) for e in pairs}
    return Cube(d, p, res, edges)


def compose_sparse(second, first):
    """Matrix of second o first for {col: {row: v}} dictionaries."""
    out = {}
    for c, col in first.items():
        acc = {}
        for mid, v in col.items():
            for r, w in second.get(mid, {}).items():
                acc[r] = acc.get(r, 0) + v * w
        acc = {r: v for r, v in acc.items() if v}
        if acc:
            out[c] = acc
    return out


def _sparse_sum(x, y, sy=1):
    out = {c: dict(col) for c, col in x.items()}
    for c, col in y.items():
        acc = out.setdefault(c, {})
        for r, v in col.items():
            acc[r] = acc.get(r, 0) + sy * v
            if not acc[r]:
                del acc[r]
        if not acc:
            del out[c]
    return out


def face_defects(cube, signed=True):
    """Square faces that fail to anticommute (signed) or commute (unsigned)."""
    bad = []
    n = cube.diagram.n
    for (J, k), e1 in cube.edges.items():
        for l in range(k + 1, n):
            if J[l]:
                continue
            Jk = J[:k] + (1,) + J[k + 1:]
            Jl = J[:l] + (1,) + J[l + 1:]
            a = compose_sparse(cube.edges[(Jk, l)].entries, e1.entries)
            b = compose_sparse(cube.edges[(Jl, k)].entries, cube.edges[(J, l)].entries)
            if signed:
                total = _sparse_sum(a, b)
            else:
                s = e1.sign * cube.edges[(Jk, l)].sign
                t = cube.edges[(J, l)].sign * cube.edges[(Jl, k)].sign
                total = _sparse_sum({c: {r: v * s for r, v in col.items()} for c, col in a.items()},
                                    {c: {r: v * t for r, v in col.items()} for c, col in b.items()}, -1)
            if total:
                bad.append((J, k, l))
    return bad
