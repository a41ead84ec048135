"""Dowker complexes, acyclic matchings, collapse certificates and homology.

Every function takes and returns plain JSON-shaped Python values, the same
documents the ``dmorse`` command line tool reads and writes.
"""

import json as _json

from . import _dmorse
from ._dmorse import (  # noqa: F401
    DEFAULT_RECTANGLE_BUDGET,
    PRNG,
    ConstructionError,
    CyclicMatchingError,
    DomainError,
    Error,
    ParseError,
    PreconditionError,
    SizeError,
)


def _enc(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def _dec(text):
    return _json.loads(text)


def dowker(relation, side="both", strategy="intersection"):
    """C_X, C_Y or both as {"left": ..., "right": ...}."""
    return _dec(_dmorse._dowker(_enc(relation), side, strategy))


def biclique(relation):
    return _dec(_dmorse._biclique(_enc(relation)))


def rectangle(relation, budget=DEFAULT_RECTANGLE_BUDGET):
    return _dec(_dmorse._rectangle(_enc(relation), budget))


def disjointify(relation):
    return _dec(_dmorse._disjointify(_enc(relation)))


def matching(relation, side="left"):
    return _dec(_dmorse._matching(_enc(relation), side))


def collapse(relation, side="left"):
    """Certificate that the biclique complex collapses onto C_X (left) or C_Y (right)."""
    return _dec(_dmorse._collapse(_enc(relation), side))


def verify(document):
    """Replays a certificate or a zigzag. Returns {"ok": bool, ...}."""
    return _dec(_dmorse._verify(_enc(document)))


def find_cycle(matching_doc):
    """The faces of a cycle, or None for an acyclic matching."""
    return _dec(_dmorse._find_cycle(_enc(matching_doc)))


def homology(complex_doc):
    return _dec(_dmorse._homology(_enc(complex_doc)))


def pipeline(relation, seed=None, replay=0, timing=True):
    return _dec(_dmorse._pipeline(_enc(relation), seed, replay, timing))


def random_relation(nx, ny, density, seed=0):
    return _dec(_dmorse._random_relation(nx, ny, density, seed))


def zigzag(relation, expand_relabels=False):
    return _dec(_dmorse._zigzag(_enc(relation), expand_relabels))


def isomorphic_zigzag(d, d2, alpha):
    return _dec(_dmorse._isomorphic_zigzag(_enc(d), _enc(d2), dict(alpha)))
