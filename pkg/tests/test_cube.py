import itertools
import random
from fractions import Fraction

import pytest

from twinfoam.exactnum import GaussianRational as G, I, ONE, ZERO
from twinfoam.twinfrob import Params, LinMap
from twinfoam import cube as cb
from twinfoam.cube import (FOURTEEN, table_local_map, derived_local_map, lookup_local_map,
                           UnsupportedEdgeSignature, MalformedEdge, build_cube, face_defects,
                           assemble_dense, classify_edge)
from twinfoam.webs import resolve, CIRCLE_PLUS as P, CIRCLE_MINUS as M, BIWEB as W
from conftest import load

PARAMS = [Params(), Params(1, 0), Params("2/3-i", "1+5*i"), Params(-3, "1/2")]


def vec(*elems):
    """Coordinates of a tensor product of algebra elements given as (c1, cX)."""
    out = [ONE]
    for c1, cx in elems:
        out = [u * G.coerce(w) for u in out for w in (c1, cx)]
    return out


def comb(*terms):
    n = None
    total = None
    for coeff, elems in terms:
        v = [G.coerce(coeff) * x for x in vec(*elems)]
        total = v if total is None else [a + b for a, b in zip(total, v)]
    return total


def check(p, sig, src, expected):
    ours = table_local_map(sig, p).apply(vec(*src))
    assert ours == expected, (sig, src)


@pytest.mark.parametrize("p", PARAMS, ids=str)
def test_printed_tables(p):
    h, a = p.h, p.a
    one, x, hx = (1, 0), (0, 1), (h, -1)
    # merge (0+, 0-): inputs of the 0+ factor in the basis (1, h - X)
    sig = ("merge", (P, M), (W,))
    check(p, sig, [one, one], comb((-I, [one])))
    check(p, sig, [one, x], comb((-I, [x])))
    check(p, sig, [hx, one], comb((-I, [x])))
    check(p, sig, [hx, x], comb((-I, [(a, h)])))
    sig = ("merge", (M, P), (W,))
    check(p, sig, [x, hx], comb((-I, [(a, h)])))
    for pair in [(M, W), (W, M), (W, W)]:
        sig = ("merge", pair, (W,))
        check(p, sig, [one, one], comb((1, [one])))
        check(p, sig, [one, x], comb((1, [x])))
        check(p, sig, [x, one], comb((1, [x])))
        check(p, sig, [x, x], comb((1, [(a, h)])))
    check(p, ("merge", (P, W), (W,)), [hx, one], comb((-I, [x])))
    check(p, ("merge", (W, P), (W,)), [one, one], comb((-I, [one])))
    # split 1 -> (0+, 0-)
    sig = ("split", (W,), (P, M))
    check(p, sig, [one], comb((-1, [one, x]), (-1, [hx, one]), (h, [one, one])))
    check(p, sig, [x], comb((-1, [hx, x]), (-a, [one, one])))
    sig = ("split", (W,), (M, P))
    check(p, sig, [one], comb((-1, [x, one]), (-1, [one, hx]), (h, [one, one])))
    for pair in [(W, M), (M, W), (W, W)]:
        sig = ("split", (W,), pair)
        check(p, sig, [one], comb((I, [one, x]), (I, [x, one]), (-I * h, [one, one])))
        check(p, sig, [x], comb((I, [x, x]), (I * a, [one, one])))
    check(p, ("split", (W,), (W, P)), [one],
          comb((-1, [one, hx]), (-1, [x, one]), (h, [one, one])))
    check(p, ("split", (W,), (P, W)), [one],
          comb((-1, [hx, one]), (-1, [one, x]), (h, [one, one])))


def test_fourteen_count():
    assert len(FOURTEEN) == 14


@pytest.mark.parametrize("p", PARAMS, ids=str)
def test_derived_maps_reproduce_the_tables(p):
    for sig in FOURTEEN:
        assert derived_local_map(sig, p) == table_local_map(sig, p), sig


def test_lookup_outside_the_fourteen():
    sig = ("split", (W,), (P, P))
    with pytest.raises(UnsupportedEdgeSignature):
        lookup_local_map(sig, strict=True)
    with pytest.raises(UnsupportedEdgeSignature):
        table_local_map(sig)
    assert lookup_local_map(sig) == derived_local_map(sig)


def test_strict_mode_rejects_nested_split():
    with pytest.raises(UnsupportedEdgeSignature):
        build_cube(load("kink_pos"), strict=True)
    build_cube(load("kink_neg"), strict=True)
    build_cube(load("trefoil3"), strict=True)


def test_edge_signature_examples():
    c = build_cube(load("trefoil_mirror"))
    for k in range(3):
        assert c.edge((0, 0, 0), k).descriptor.signature == ("merge", (W, W), (W,))
    c = build_cube(load("kink_pos"))
    assert c.edge((0,), 0).descriptor.kind == "split"


def test_sign_rule():
    assert cb.edge_sign((0, 0, 0), 2) == 1
    assert cb.edge_sign((1, 0, 0), 2) == -1
    assert cb.edge_sign((1, 1, 0), 2) == 1


def test_malformed_edge():
    d = load("trefoil3")
    with pytest.raises(MalformedEdge):
        classify_edge(resolve(d, (0, 0, 0)), resolve(d, (0, 1, 1)), 1)


def brute_force(desc, p, src_res, tgt_res):
    """Edge matrix by looping over basis tensors of the source, factor by factor."""
    local = lookup_local_map(desc.signature, p)
    ns, nt = len(src_res.components), len(tgt_res.components)
    out = LinMap(2 ** nt, 2 ** ns)
    sign = cb.edge_sign(desc.J, desc.k)
    for sbits in itertools.product((0, 1), repeat=ns):
        lin = int("".join(str(sbits[s]) for s in desc.source_slots), 2)
        for r in range(local.rows):
            v = local.entries[r][lin]
            if not v:
                continue
            tb = [None] * nt
            for s, t in desc.carry:
                tb[t] = sbits[s]
            rbits = format(r, "0%db" % len(desc.target_slots))
            for t, b in zip(desc.target_slots, rbits):
                tb[t] = int(b)
            ci = int("".join(map(str, sbits)), 2) if ns else 0
            ri = int("".join(map(str, tb)), 2) if nt else 0
            out.entries[ri][ci] = out.entries[ri][ci] + sign * v
    return out


@pytest.mark.parametrize("name", ["figure8", "hopf_pos", "trefoil4"])
def test_sparse_dense_and_brute_force_agree(name):
    p = Params("1/2", "i")
    d = load(name)
    c = build_cube(d, p)
    for (J, k), e in c.edges.items():
        src, tgt = c.resolutions[J], c.resolutions[e.descriptor.target_J]
        dense = assemble_dense(e.descriptor, p)
        assert e.dense() == dense
        assert brute_force(e.descriptor, p, src, tgt) == dense


@pytest.mark.parametrize("p", PARAMS, ids=str)
def test_faces_anticommute(corpus_name, p):
    c = build_cube(load(corpus_name), p)
    assert face_defects(c, signed=True) == []
    assert face_defects(c, signed=False) == []


def test_dump_is_stable_under_threads():
    d = load("figure8")
    assert build_cube(d, threads=1).dump() == build_cube(d, threads=4).dump()
