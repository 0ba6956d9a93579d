r"""
Zolotarev cacti and their combinatorial moduli spaces.

A cactus of degree `n` is a triple of involutions whose product is the
long cycle `(1\,2\,\dots\,n)`; it encodes a polynomial with simple critical
points over three critical values. Walls of the parameter space are
degenerated cacti (three-coloured plane trees) and the vertices are
two-coloured plane trees.

EXAMPLES::

    >>> from zolotarev import Passport, enumerate_cacti, build_atlas
    >>> cs = enumerate_cacti(Passport(5, 1, 1, 2))
    >>> len(cs)
    5
    >>> [c.summary() for c in build_atlas(cs).components]
    ['F=5 E=8 V=4 chi=1 projective_plane']
"""
from .analytic import (CriticalData, collinear_middle, deg5_degeneracy, deg5_family,
                       deg5_shabat_parameters, deg6_family, format_complex, intro_report,
                       parse_complex, verify_intro_example)
from .atlas import (Atlas, atlas_from_json, build_atlas, export_dot, export_json,
                    single_slot_edges, vertex_degree_multiset)
from .cactus import (CactusClass, Color, Passport, automorphism_order, enumerate_cacti,
                     make_class, monodromy, select)
from .degeneration import BiTree, Side, TriTree, contract, degenerate, transform
from .errors import (CapabilityError, ClosureError, ConsistencyError, DomainError,
                     UsageError, VerificationFailure)
from .perm import Perm, compose, conjugate, cycle_type, group_order, inverse, involutions

__version__ = "0.1.0"
