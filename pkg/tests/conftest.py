import os
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)

CORPUS = os.path.join(os.path.dirname(HERE), "corpus")

# name -> number of link components
CORPUS_COMPONENTS = {
    "unknot": 1, "kink_pos": 1, "kink_neg": 1, "unknot_r2": 1,
    "hopf_pos": 2, "hopf_neg": 2, "trefoil3": 1, "trefoil4": 1,
    "trefoil_mirror": 1, "figure8": 1,
}


def corpus_path(name):
    return os.path.join(CORPUS, name + ".pd")


def load(name, outer_face=None):
    from twinfoam.diagram import read_pd
    return read_pd(corpus_path(name), outer_face=outer_face)


@pytest.fixture(params=sorted(CORPUS_COMPONENTS))
def corpus_name(request):
    return request.param
