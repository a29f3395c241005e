"""Standard shapes: frozen inventories and labels, orientation, DOT output.

Frozen oracle values:
  square (nu=2, n=2): 4 points {LL,LR,RL,RR}, 4 edges {L*,R*,*L,*R}, 1 filler
  triangle (nu=1, n=3): 3 points, 3 lines, 1 filler (counts only, level 1..3)
  edge *R of the square runs between LR and RR
"""

import pytest

from nusets.errors import AllLetters
from nusets.presheaf import carrier_sizes, check_functor_laws
from nusets.shapes import (
    geometric_inventory, orientation_endpoints, standard_shape, to_dot,
)
from nusets.words import hom_count, parse_word


def test_square_inventory_and_labels():
    P = standard_shape(2, 2)
    assert carrier_sizes(P) == (4, 4, 1)
    assert set(P.carriers[0].labels) == {"LL", "LR", "RL", "RR"}
    assert set(P.carriers[1].labels) == {"L*", "R*", "*L", "*R"}
    assert P.carriers[2].labels == ("**",)


def test_triangle_inventory():
    P = standard_shape(1, 3)
    assert carrier_sizes(P) == (1, 3, 3, 1)
    assert geometric_inventory(P) == (3, 3, 1)


def test_inventories_match_hom_count():
    for nu in (1, 2, 3):
        for n in range(7 if nu < 3 else 5):
            P = standard_shape(nu, n)
            for p in range(n + 1):
                assert P.carriers[p].size == hom_count(nu, p, n)


def test_geometric_inventories_acceptance_table():
    assert geometric_inventory(standard_shape(1, 1)) == (1,)
    assert geometric_inventory(standard_shape(1, 2)) == (2, 1)
    assert geometric_inventory(standard_shape(1, 3)) == (3, 3, 1)
    assert geometric_inventory(standard_shape(2, 0)) == (1,)
    assert geometric_inventory(standard_shape(2, 1)) == (2, 1)
    assert geometric_inventory(standard_shape(2, 2)) == (4, 4, 1)


def test_orientation_frozen():
    assert [str(x) for x in orientation_endpoints(parse_word(1, "**0"))] \
        == ["0*0"]
    assert [str(x) for x in orientation_endpoints(parse_word(2, "*R"))] \
        == ["LR", "RR"]
    assert [str(x) for x in orientation_endpoints(parse_word(1, "*"))] == ["0"]
    with pytest.raises(AllLetters):
        orientation_endpoints(parse_word(2, "LR"))


def test_orientation_typing():
    for nu in (1, 2):
        for n in range(1, 5):
            from nusets.words import hom_enumerate
            for p in range(1, n + 1):
                for w in hom_enumerate(nu, p, n):
                    for e in orientation_endpoints(w):
                        assert e.length == w.length
                        assert e.stars == w.stars - 1


def test_functor_laws_delegated():
    for nu in (1, 2):
        for n in range(5):
            assert check_functor_laws(standard_shape(nu, n)).ok


def test_dot_square():
    dot = to_dot(standard_shape(2, 1))
    assert dot.count("--") == 1
    assert '"L"' in dot and '"R"' in dot
    assert 'label="*"' in dot


def test_dot_interval_simplex():
    dot = to_dot(standard_shape(1, 2))
    assert '"*0"' in dot and '"0*"' in dot
    assert 'label="**"' in dot


def test_dot_point():
    dot = to_dot(standard_shape(2, 0))
    assert "ε" in dot
    assert "--" not in dot


def test_dot_deterministic():
    assert to_dot(standard_shape(2, 2)) == to_dot(standard_shape(2, 2))
    assert to_dot(standard_shape(2, 2)).count("--") == 4
