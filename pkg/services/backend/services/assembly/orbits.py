"""
Clique orbits under block permutations.

Cliques are compared up to one block permutation applied to all their
classes at once.
"""
from itertools import permutations
from typing import Sequence, Tuple

from services.classes import CandidateClass


def clique_orbit_key(classes: Sequence[CandidateClass]) -> Tuple:
    """Smallest sorted key tuple over all simultaneous block permutations"""
    if not classes:
        return ()
    m = classes[0].m
    best = None
    for order in permutations(range(m)):
        key = tuple(sorted(X.permuted(order).key for X in classes))
        if best is None or key < best:
            best = key
    return best
