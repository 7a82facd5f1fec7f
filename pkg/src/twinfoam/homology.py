"""Total complex of the signed cube and its cohomology over Q(i).

A generator of the vertex J is a tensor index over the components of the
J-resolution (bit 0 = 1, bit 1 = X).  It sits in homological degree
|J| - n+ and q-degree  internal + 2 n+ - n- - |J|,  internal being the sum
of -1 for each 1 and +1 for each X.
"""
from dataclasses import dataclass

from .exactnum import LaurentPolynomial
from .twinfrob import Params, DEGREE
from .cube import build_cube, compose_sparse


class D2Violation(RuntimeError):
    pass


@dataclass(frozen=True)
class Generator:
    J: tuple
    index: int
    q: int


@dataclass
class CochainComplex:
    n_plus: int
    n_minus: int
    params: Params
    objects: dict                 # degree -> list of Generator
    differentials: dict           # degree -> {source position: {target position: coeff}}
    cube: object = None

    @property
    def degrees(self):
        return range(-self.n_plus, self.n_minus + 1)

    def dim(self, i):
        return len(self.objects.get(i, []))


@dataclass
class BigradedDims:
    dims: dict                    # (i, j) -> dim; j is None when not graded
    graded: bool

    @property
    def total(self):
        return sum(self.dims.values())

    def items(self):
        return sorted(self.dims.items(), key=lambda kv: (kv[0][0], kv[0][1] if kv[0][1] is not None else 0))

    def poincare(self):
        if not self.dims:
            return "0"
        parts = []
        for (i, j), d in self.items():
            mono = []
            if i:
                mono.append("t" if i == 1 else "t^%d" % i)
            if j is not None and j:
                mono.append("q" if j == 1 else "q^%d" % j)
            body = "*".join(mono) if mono else "1"
            parts.append(body if d == 1 else "%d*%s" % (d, body) if mono else str(d))
        return " + ".join(parts)

    def as_list(self):
        return [[i, j, d] for (i, j), d in self.items()]

    def euler(self):
        total = LaurentPolynomial()
        for (i, j), d in self.dims.items():
            total = total + LaurentPolynomial({j if j is not None else 0: (-1) ** (i % 2) * d})
        return total

    def __eq__(self, other):
        if not isinstance(other, BigradedDims):
            return NotImplemented
        return self.graded == other.graded and self.dims == other.dims


def internal_degree(index, ncomp):
    return sum(DEGREE[(index >> (ncomp - 1 - t)) & 1] for t in range(ncomp))


def build_complex(d, p=None, force_neg=False, strict=False, threads=1, check=True):
    p = p if p is not None else Params()
    cube = build_cube(d, p, force_neg=force_neg, strict=strict, threads=threads)
    npos, nneg = d.n_plus, d.n_minus
    objects, where = {}, {}
    for J in sorted(cube.resolutions, key=lambda J: (sum(J), J)):
        i = sum(J) - npos
        ncomp = len(cube.resolutions[J].components)
        lst = objects.setdefault(i, [])
        where[J] = len(lst)
        shift = 2 * npos - nneg - sum(J)
        for idx in range(2 ** ncomp):
            lst.append(Generator(J, idx, internal_degree(idx, ncomp) + shift))
    for i in range(-npos, nneg + 1):
        objects.setdefault(i, [])
    diffs = {i: {} for i in objects}
    for (J, k), e in cube.edges.items():
        i = sum(J) - npos
        J2 = J[:k] + (1,) + J[k + 1:]
        o1, o2 = where[J], where[J2]
        target = diffs[i]
        for c, col in e.entries.items():
            acc = target.setdefault(o1 + c, {})
            for r, v in col.items():
                acc[o2 + r] = acc.get(o2 + r, 0) + v
                if not acc[o2 + r]:
                    del acc[o2 + r]
    cx = CochainComplex(npos, nneg, p, objects, diffs, cube)
    if check:
        check_d2(cx)
    return cx


def check_d2(cx):
    for i in cx.degrees:
        if i + 1 not in cx.differentials:
            continue
        dd = compose_sparse(cx.differentials[i + 1], cx.differentials[i])
        if dd:
            c = next(iter(dd))
            g = cx.objects[i][c]
            raise D2Violation("d^2 != 0 in degree %d starting at J=%s generator %d"
                              % (i, "".join(map(str, g.J)), g.index))


def rank(columns):
    """Rank of a sparse matrix given as {col: {row: v}} over Q(i)."""
    basis = {}
    r = 0
    for col in columns.values():
        vec = dict(col)
        while vec:
            lead = min(vec)
            if lead not in basis:
                basis[lead] = vec
                r += 1
                break
            piv = basis[lead]
            f = vec[lead] / piv[lead]
            for key, w in piv.items():
                nv = vec.get(key, 0) - f * w
                if nv:
                    vec[key] = nv
                else:
                    vec.pop(key, None)
    return r


def _restrict(dmat, rows_ok, cols_ok):
    out = {}
    for c, col in dmat.items():
        if c in cols_ok:
            sub = {r: v for r, v in col.items() if r in rows_ok}
            if sub:
                out[c] = sub
    return out


def homology_dims(cx, threads=1):
    graded = cx.params.graded
    blocks = []
    for i in cx.degrees:
        gens = cx.objects[i]
        if graded:
            qs = sorted({g.q for g in gens})
            for j in qs:
                blocks.append((i, j))
        elif gens:
            blocks.append((i, None))

    def positions(i, j):
        return {t for t, g in enumerate(cx.objects.get(i, [])) if j is None or g.q == j}

    def one(block):
        i, j = block
        here = positions(i, j)
        out_rank = rank(_restrict(cx.differentials.get(i, {}), positions(i + 1, j), here))
        in_rank = rank(_restrict(cx.differentials.get(i - 1, {}), here, positions(i - 1, j)))
        return len(here) - out_rank - in_rank

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as ex:
            values = list(ex.map(one, blocks))
    else:
        values = [one(b) for b in blocks]
    return BigradedDims({b: v for b, v in zip(blocks, values) if v}, graded)


def euler_characteristic(cx):
    total = {}
    for i, gens in cx.objects.items():
        s = -1 if i % 2 else 1
        for g in gens:
            total[g.q] = total.get(g.q, 0) + s
    return LaurentPolynomial(total)


def degree_defects(cx):
    """Nonzero differential entries that change the shifted q-degree (a = h = 0 only)."""
    bad = []
    for i, dmat in cx.differentials.items():
        for c, col in dmat.items():
            for r in col:
                if cx.objects[i][c].q != cx.objects[i + 1][r].q:
                    bad.append((i, c, r))
    return bad


def compute(d, p=None, force_neg=False, strict=False, threads=1):
    cx = build_complex(d, p, force_neg=force_neg, strict=strict, threads=threads)
    return homology_dims(cx, threads=threads)
