"""Twin-foam sl(2) link homology over Q(i) from planar diagram codes."""
from .exactnum import GaussianRational, LaurentPolynomial, parse_gq
from .twinfrob import Params, check_axioms, check_local_relations
from .diagram import DiagramError, LinkDiagram, parse_pd, read_pd
from .webs import IrreducibleWeb, resolve
from .cube import UnsupportedEdgeSignature, build_cube, face_defects
from .homology import D2Violation, BigradedDims, build_complex, compute, euler_characteristic
from .skein import p2_state_sum

__all__ = [
    "GaussianRational", "LaurentPolynomial", "parse_gq", "Params", "check_axioms",
    "check_local_relations", "DiagramError", "LinkDiagram", "parse_pd", "read_pd",
    "IrreducibleWeb", "resolve", "UnsupportedEdgeSignature", "build_cube", "face_defects",
    "D2Violation", "BigradedDims", "build_complex", "compute", "euler_characteristic",
    "p2_state_sum",
]
