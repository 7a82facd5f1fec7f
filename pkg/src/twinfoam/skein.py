"""State-sum oracle for the quantum sl(2) polynomial.

Each resolution contributes the product of its crossing coefficients times
(q + q^-1)^(number of components); vertex pairs never change the bracket, so
webs are only counted, never typed.
"""
import itertools

from .exactnum import LaurentPolynomial
from .webs import component_count, is_oriented

LOOP = LaurentPolynomial({1: 1, -1: 1})

# (crossing sign, oriented?) -> coefficient
COEFF = {
    (1, True): LaurentPolynomial({1: 1}),
    (1, False): LaurentPolynomial({2: -1}),
    (-1, True): LaurentPolynomial({-1: 1}),
    (-1, False): LaurentPolynomial({-2: -1}),
}


def state_terms(d):
    """(J, coefficient, component count) for every resolution."""
    out = []
    for J in itertools.product((0, 1), repeat=d.n):
        c = LaurentPolynomial({0: 1})
        for i, x in enumerate(d.crossings):
            c = c * COEFF[(x.sign, is_oriented(d, J, i))]
        out.append((J, c, component_count(d, J)))
    return out


def p2_state_sum(d):
    total = LaurentPolynomial()
    for _, c, k in state_terms(d):
        total = total + c * LOOP ** k
    return total
