import pytest

from frobcalc import MonomialIdeal, PolyRing


@pytest.fixture
def ring2():
    return PolyRing(2, ["x", "y"])


@pytest.fixture
def ring3():
    return PolyRing(3, ["x", "y"])


@pytest.fixture
def ring5xyz():
    return PolyRing(5, ["x", "y", "z"])


# Monomial ideal corpus inside m^2, in at most 3 variables.  Entries are
# (#vars, generator exponent tuples, ci_codimension or None).  Complete
# intersections are the ones with pairwise disjoint supports.
CORPUS = [
    (2, [], None),
    (2, [(2, 0)], 1),
    (2, [(1, 1)], 1),
    (2, [(0, 3)], 1),
    (2, [(2, 0), (0, 2)], 2),
    (2, [(2, 0), (0, 3)], 2),
    (2, [(3, 0), (0, 4)], 2),
    (2, [(2, 0), (1, 1)], None),
    (2, [(2, 0), (1, 1), (0, 2)], None),
    (2, [(4, 0), (2, 2), (0, 4)], None),
    (2, [(3, 0), (2, 2)], None),
    (2, [(2, 1), (1, 2)], None),
    (3, [], None),
    (3, [(1, 1, 1)], 1),
    (3, [(2, 0, 0), (0, 2, 0)], 2),
    (3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)], 3),
    (3, [(2, 0, 0), (0, 3, 0), (0, 0, 4)], 3),
    (3, [(1, 1, 0), (0, 0, 2)], 2),
    (3, [(2, 0, 0), (1, 1, 0), (0, 2, 0)], None),
    (3, [(1, 1, 0), (0, 1, 1)], None),
    (3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)], None),
    (3, [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)], None),
    (3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)], None),
]


def corpus_ideals(p=2):
    """Instantiate the corpus over F_p."""
    out = []
    for nvars, gens, ci in CORPUS:
        ring = PolyRing(p, ["x", "y", "z"][:nvars])
        out.append((MonomialIdeal(ring, gens), ci))
    return out
