"""Diagram generators shared by several test files."""
from twinfoam.diagram import build_diagram


def braid_closure(n, word):
    """PD crossings of the closure of a braid word on n strands (+i / -i = sigma_i^{+-1})."""
    cur = list(range(1, n + 1))
    nxt = n + 1
    xs = []
    for g in word:
        i = abs(g) - 1
        bl, br = cur[i], cur[i + 1]
        tl, tr = nxt, nxt + 1
        nxt += 2
        xs.append([br, tr, tl, bl] if g > 0 else [bl, br, tr, tl])
        cur[i], cur[i + 1] = tl, tr
    ren = {cur[j]: j + 1 for j in range(n)}
    return [[ren.get(v, v) for v in x] for x in xs]


def add_kink(xs, lab, variant, base=100):
    """Insert a curl at the head of arc lab; variant 0..3 picks the slot pair holding the loop."""
    d = build_diagram(xs)
    hi, hs = d.arcs[lab][1]
    loop, out = base, base + 1
    xs = [list(x) for x in xs]
    xs[hi][hs] = out
    new = {0: [lab, out, loop, loop], 1: [lab, loop, loop, out],
           2: [loop, loop, out, lab], 3: [loop, lab, out, loop]}[variant]
    return xs + [new]


def random_braid(rng, strands=(2, 3), length=(2, 6)):
    while True:
        n = rng.choice(strands)
        word = [rng.choice([1, -1]) * rng.randint(1, n - 1)
                for _ in range(rng.randint(*length))]
        if set(abs(g) for g in word) == set(range(1, n)):
            return n, word
