"""The identical twin Frobenius algebra A = R[X]/(X^2 - hX - a).

A has basis (1, X), index 0 and 1.  Tensor powers use the lexicographic
basis with the first factor most significant, so index(u, v) = 2*u + v.
A_C and A_W share the multiplication; the W structure is the C structure
twisted by i.
"""
from dataclasses import dataclass
import itertools

from .exactnum import GaussianRational, ZERO, ONE, I


@dataclass(frozen=True)
class Params:
    a: GaussianRational = ZERO
    h: GaussianRational = ZERO

    def __post_init__(self):
        object.__setattr__(self, "a", GaussianRational.coerce(self.a))
        object.__setattr__(self, "h", GaussianRational.coerce(self.h))

    @property
    def graded(self):
        return not self.a and not self.h


@dataclass(frozen=True)
class AlgElement:
    """c1*1 + cX*X."""
    c1: GaussianRational = ZERO
    cX: GaussianRational = ZERO

    def vector(self):
        return [GaussianRational.coerce(self.c1), GaussianRational.coerce(self.cX)]


# internal q-degree of the basis elements 1 and X
DEGREE = (-1, 1)


class LinMap:
    """Dense matrix over Q(i); entries[r][c] is the coefficient of output r on input c."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [[ZERO] * cols for _ in range(rows)]
        else:
            entries = [[GaussianRational.coerce(v) for v in row] for row in entries]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry shape does not match %dx%d" % (rows, cols))
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[ONE if r == c else ZERO for c in range(n)] for r in range(n)])

    @classmethod
    def from_columns(cls, columns, rows):
        """Build from a list of {row index: coeff} images, one per input basis vector."""
        m = cls(rows, len(columns))
        for c, col in enumerate(columns):
            for r, v in col.items():
                m.entries[r][c] = m.entries[r][c] + GaussianRational.coerce(v)
        return m

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("cannot compose %dx%d after %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        out = LinMap(self.rows, other.cols)
        for r in range(self.rows):
            row = self.entries[r]
            acc = out.entries[r]
            for k in range(self.cols):
                v = row[k]
                if not v:
                    continue
                ok = other.entries[k]
                for c in range(other.cols):
                    if ok[c]:
                        acc[c] = acc[c] + v * ok[c]
        return out

    def tensor(self, other):
        out = LinMap(self.rows * other.rows, self.cols * other.cols)
        for r1, c1 in itertools.product(range(self.rows), range(self.cols)):
            v = self.entries[r1][c1]
            if not v:
                continue
            for r2, c2 in itertools.product(range(other.rows), range(other.cols)):
                w = other.entries[r2][c2]
                if w:
                    out.entries[r1 * other.rows + r2][c1 * other.cols + c2] = v * w
        return out

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in sum")
        return LinMap(self.rows, self.cols,
                      [[x + y for x, y in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        s = GaussianRational.coerce(s)
        return LinMap(self.rows, self.cols, [[s * v for v in r] for r in self.entries])

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self.entries))))

    def apply(self, vec):
        return [sum((self.entries[r][c] * vec[c] for c in range(self.cols)), ZERO)
                for r in range(self.rows)]

    def column(self, c):
        return {r: self.entries[r][c] for r in range(self.rows) if self.entries[r][c]}

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in r) for r in self.entries)
        return "LinMap(%dx%d: [%s])" % (self.rows, self.cols, body)


def _p(p):
    return p if p is not None else Params()


def scalar(s):
    return LinMap(1, 1, [[s]])


def identity():
    return LinMap.identity(2)


def tau():
    """The symmetry A (x) A -> A (x) A."""
    return LinMap.from_columns([{0: 1}, {2: 1}, {1: 1}, {3: 1}], 4)


# the C structure

def m_C(p=None):
    p = _p(p)
    return LinMap.from_columns([{0: 1}, {1: 1}, {1: 1}, {0: p.a, 1: p.h}], 2)


def Delta_C(p=None):
    p = _p(p)
    return LinMap.from_columns([{1: 1, 2: 1, 0: -p.h}, {3: 1, 0: p.a}], 4)


def iota_C(p=None):
    return LinMap.from_columns([{0: 1}], 2)


def eps_C(p=None):
    return LinMap(1, 2, [[0, 1]])


# the W structure: same multiplication and unit, counit scaled by -i

def m_W(p=None):
    return m_C(p)


def Delta_W(p=None):
    return Delta_C(p).scale(I)


def iota_W(p=None):
    return iota_C(p)


def eps_W(p=None):
    return eps_C(p).scale(-I)


# zippers, their duals and the two automorphisms they induce

def z1(p=None):
    return identity()


def z1s(p=None):
    return identity().scale(-I)


def sigma(p=None):
    """X -> h - X, the involution exchanging the two bases of A."""
    p = _p(p)
    return LinMap.from_columns([{0: 1}, {0: p.h, 1: -1}], 2)


def z2(p=None):
    return sigma(p)


def z2s(p=None):
    return sigma(p).scale(I)


def f(p=None):
    return z2s(p) @ z1(p)


def g(p=None):
    return z1s(p) @ z2(p)


def basis_to_plus(p=None):
    """Coordinates change between the bases (1, X) and (1, h - X)."""
    return sigma(p)


def basis_from_plus(p=None):
    return sigma(p)


# splitting isomorphisms A = R{1} + R{-1}; the summand order is (R{1}, R{-1})

def alpha_C(p=None):
    eps = eps_C(p)
    second = eps @ m_C(p) @ (LinMap.from_columns([{1: 1}], 2).tensor(identity()))
    return LinMap(2, 2, [eps.entries[0], second.entries[0]])


def beta_C(p=None):
    p = _p(p)
    # (1,0) -> X - h, (0,1) -> 1
    return LinMap.from_columns([{1: 1, 0: -p.h}, {0: 1}], 2)


def alpha_W(p=None):
    eps = eps_W(p)
    second = eps @ m_W(p) @ (LinMap.from_columns([{1: 1}], 2).tensor(identity()))
    return LinMap(2, 2, [eps.entries[0], second.entries[0]])


def beta_W(p=None):
    return beta_C(p).scale(I)


def _frobenius_identities(name, m, D, u, e):
    idm = identity()
    out = []
    out.append(("%s commutative" % name, m @ tau(), m))
    out.append(("%s associative" % name, m @ m.tensor(idm), m @ idm.tensor(m)))
    out.append(("%s unit" % name, m @ u.tensor(idm), idm))
    out.append(("%s cocommutative" % name, tau() @ D, D))
    out.append(("%s coassociative" % name, D.tensor(idm) @ D, idm.tensor(D) @ D))
    out.append(("%s counit" % name, e.tensor(idm) @ D, idm))
    out.append(("%s Frobenius left" % name, idm.tensor(m) @ D.tensor(idm), D @ m))
    out.append(("%s Frobenius right" % name, m.tensor(idm) @ idm.tensor(D), D @ m))
    return out


def axiom_identities(p=None):
    """(name, lhs, rhs) triples for the twin Frobenius algebra axioms."""
    p = _p(p)
    idm = identity()
    out = _frobenius_identities("C", m_C(p), Delta_C(p), iota_C(p), eps_C(p))
    out += _frobenius_identities("W", m_W(p), Delta_W(p), iota_W(p), eps_W(p))
    out.append(("W twisting of counit", eps_W(p), eps_C(p) @ identity().scale(-I)))
    out.append(("W twisting of comultiplication", Delta_W(p), Delta_C(p) @ identity().scale(I)))
    for k, (z, zs) in enumerate([(z1(p), z1s(p)), (z2(p), z2s(p))], 1):
        out.append(("z%d algebra map" % k, z @ m_C(p), m_W(p) @ z.tensor(z)))
        out.append(("z%d unital" % k, z @ iota_C(p), iota_W(p)))
        out.append(("duality k=%d" % k,
                    eps_C(p) @ m_C(p) @ idm.tensor(zs),
                    eps_W(p) @ m_W(p) @ z.tensor(idm)))
        out.append(("signed genus-one k=%d" % k,
                    (z @ m_C(p) @ Delta_C(p) @ zs).scale(-1),
                    m_W(p) @ tau() @ Delta_W(p)))
    out.append(("(i z1*) z1 = id", z1s(p).scale(I) @ z1(p), idm))
    out.append(("z1 (i z1*) = id", z1(p) @ z1s(p).scale(I), idm))
    out.append(("(-i z2*) z2 = id", z2s(p).scale(-I) @ z2(p), idm))
    out.append(("z2 (-i z2*) = id", z2(p) @ z2s(p).scale(-I), idm))
    out.append(("g f = id", g(p) @ f(p), idm))
    out.append(("f g = id", f(p) @ g(p), idm))
    return out


def local_relation_identities(p=None):
    p = _p(p)
    m, D, u, e = m_C(p), Delta_C(p), iota_C(p), eps_C(p)
    h2 = p.h * p.h + 4 * p.a
    genus = m @ D
    out = [
        ("S: sphere", e @ u, scalar(0)),
        ("T: torus", e @ genus @ u, scalar(2)),
        ("UFO with f", e @ f(p) @ genus @ u, scalar(-2 * I)),
        ("UFO with g", e @ g(p) @ genus @ u, scalar(2 * I)),
        ("UFO genus two", e @ f(p) @ genus @ genus @ u, scalar(0)),
        ("UFO without handle", e @ f(p) @ u, scalar(0)),
        ("G2", genus @ genus @ u, u.scale(h2)),
        ("SF", (u @ e @ genus).scale(GaussianRational(1, 0) / 2)
         + (genus @ u @ e).scale(GaussianRational(1, 0) / 2), identity()),
        ("CN", (iota_W(p) @ (e @ genus @ z1s(p))).scale(I / 2)
         + ((z1(p) @ genus @ u) @ eps_W(p)).scale(I / 2), identity()),
        ("splitting C: beta alpha", beta_C(p) @ alpha_C(p), identity()),
        ("splitting C: alpha beta", alpha_C(p) @ beta_C(p), identity()),
        ("splitting W: beta alpha", beta_W(p) @ alpha_W(p), identity()),
        ("splitting W: alpha beta", alpha_W(p) @ beta_W(p), identity()),
    ]
    return out


def _report(triples):
    return [(name, lhs == rhs) for name, lhs, rhs in triples]


def check_axioms(p=None):
    """List of (identity name, holds) for the twin Frobenius algebra axioms."""
    return _report(axiom_identities(p))


def check_local_relations(p=None):
    """List of (relation name, holds) for the local foam relations."""
    return _report(local_relation_identities(p))


def failures(report):
    return [name for name, ok in report if not ok]
