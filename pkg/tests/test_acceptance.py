"""Acceptance criteria 1-8, exact arithmetic throughout.

Each criterion prints one PASS/FAIL line (also when run as a script).
"""
import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from twinfoam.exactnum import GaussianRational as G
from twinfoam.twinfrob import (Params, check_axioms, check_local_relations, failures,
                               alpha_C, beta_C, alpha_W, beta_W, identity)
from twinfoam.cube import face_defects
from twinfoam.homology import build_complex, homology_dims, euler_characteristic, compute
from twinfoam.skein import p2_state_sum
from conftest import load, CORPUS_COMPONENTS
from oracles.khovanov_ref import khovanov

CORPUS = sorted(CORPUS_COMPONENTS)


def random_pairs(n, seed):
    rng = random.Random(seed)

    def r():
        return G(Fraction(rng.randint(-20, 20), rng.randint(1, 9)),
                 Fraction(rng.randint(-20, 20), rng.randint(1, 9)))
    return [Params(r(), r()) for _ in range(n)]


SAMPLED = [Params(), Params(1, 0)] + random_pairs(2, 7)


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for p in [Params(), Params(1, 0)] + random_pairs(20, 1):
        bad += [(str(p), name) for name in failures(check_axioms(p) + check_local_relations(p))]
    dt = time.perf_counter() - t0
    return not bad and dt < 1.0, "%d failing identities, %.2fs" % (len(bad), dt)


def criterion_2():
    slow, bad = [], []
    for name in CORPUS:
        t0 = time.perf_counter()
        d = load(name)
        if euler_characteristic(build_complex(d)) != p2_state_sum(d):
            bad.append(name)
        if time.perf_counter() - t0 > 10:
            slow.append(name)
    return not bad and not slow, "mismatch %s, slow %s" % (bad, slow)


def criterion_3():
    bad = []
    for name in CORPUS:
        d = load(name)
        for p in SAMPLED:
            t0 = time.perf_counter()
            cx = build_complex(d, p)          # raises D2Violation if d^2 != 0
            if face_defects(cx.cube):
                bad.append((name, str(p)))
            if time.perf_counter() - t0 > 10:
                bad.append((name, "slow"))
    return not bad, "defects %s" % bad


def invariance_pairs():
    pairs = [("unknot", "kink_pos"), ("unknot", "kink_neg"), ("unknot", "unknot_r2"),
             ("trefoil3", "trefoil4")]
    out = [(load(a), load(b), "%s/%s" % (a, b)) for a, b in pairs]
    for name in ["kink_neg", "hopf_pos", "trefoil3", "figure8"]:
        d = load(name)
        for f in range(len(d.faces)):
            out.append((d, load(name, outer_face=f), "%s/outer=%d" % (name, f)))
    return out


def criterion_4():
    t0 = time.perf_counter()
    bad = [label for a, b, label in invariance_pairs() if compute(a) != compute(b)]
    dt = time.perf_counter() - t0
    return not bad and dt < 30, "failing %s, %.1fs" % (bad, dt)


def criterion_5():
    want = {"unknot": 2, "hopf_pos": 4, "hopf_neg": 4, "trefoil3": 4, "trefoil_mirror": 4,
            "trefoil4": 4, "figure8": 6}
    t0 = time.perf_counter()
    bad = []
    for name, total in want.items():
        d = load(name)
        h = compute(d)
        ref = {(-i, j): v for (i, j), v in khovanov(d.render()).items()}
        if h.total != total or h.dims != ref:
            bad.append(name)
    dt = time.perf_counter() - t0
    return not bad and dt < 60, "failing %s, %.1fs" % (bad, dt)


def criterion_6():
    t0 = time.perf_counter()
    bad = [name for name in CORPUS
           if compute(load(name), Params(1, 0)).total != 2 ** CORPUS_COMPONENTS[name]]
    dt = time.perf_counter() - t0
    return not bad and dt < 60, "failing %s, %.1fs" % (bad, dt)


def criterion_7():
    rng = random.Random(2024)
    bad = []
    for name in CORPUS:
        d = load(name)
        ref = compute(d)
        for _ in range(5):
            perm = list(range(d.n))
            rng.shuffle(perm)
            labels = sorted(d.arcs)
            mapping = dict(zip(labels, rng.sample(range(1, 10 * len(labels) + 10), len(labels))))
            e = d.reordered(perm).relabeled(mapping) if d.n else d
            if compute(e) != ref:
                bad.append(name)
    return not bad, "failing %s" % bad


def criterion_8():
    bad = []
    for p in [Params(), Params(1, 0)] + random_pairs(10, 3):
        if beta_C(p) @ alpha_C(p) != identity() or beta_W(p) @ alpha_W(p) != identity():
            bad.append(str(p))
    return not bad, "failing %s" % bad


CRITERIA = [
    (1, "algebra axioms and local relations", criterion_1),
    (2, "Euler characteristic equals state sum", criterion_2),
    (3, "d^2 = 0 and anticommuting faces", criterion_3),
    (4, "Reidemeister and outer-face invariance", criterion_4),
    (5, "Khovanov totals at a = h = 0", criterion_5),
    (6, "Lee totals at (a, h) = (1, 0)", criterion_6),
    (7, "crossing order and arc labels", criterion_7),
    (8, "splitting isomorphisms", criterion_8),
]


def report(num, title, fn):
    ok, detail = fn()
    return ok, "criterion %d %-42s %s  (%s)" % (num, title, "PASS" if ok else "FAIL", detail)


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[str(c[0]) for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, line = report(num, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
