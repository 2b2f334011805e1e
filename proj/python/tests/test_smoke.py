import itertools
import json
import math

import pytest

import glindex


def complete_minus(n, missing):
    every = itertools.combinations(range(1, n + 1), 3)
    return glindex.Clutter(n, 3, [list(t) for t in every if t not in missing])


def test_koszul_betti_numbers():
    ideal = glindex.MonomialIdeal(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert glindex.betti_table(ideal) == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    assert glindex.gl_index(ideal) == math.inf


def test_pentagon_index_is_two():
    edges = [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]
    ideal = glindex.Clutter(5, 2, edges).edge_ideal()
    assert glindex.gl_index(ideal) == 2
    assert glindex.beta(ideal, 1, 4) == 0


def test_bipyramid_complement_has_a_quadratic_gap():
    b = glindex.catalog("B")
    ideal = b.complement().edge_ideal()
    for field in ("q", "2"):
        assert glindex.beta(ideal, 1, 5, field) == 1
    assert not glindex.is_linearly_presented(ideal)
    assert not glindex.is_c_free(b)


def test_sturmfels_square():
    ideal = glindex.catalog("D1_6").edge_ideal()
    assert glindex.is_linearly_presented(ideal)
    assert not glindex.is_linearly_presented(ideal, power=2)
    assert glindex.beta(ideal.power(2), 1, 8) >= 1


def test_conca():
    ideal = glindex.catalog("conca")
    assert glindex.is_linearly_presented(ideal)
    assert not glindex.is_linearly_presented(ideal, 2)


def test_family_d_membership(tmp_path):
    d16 = glindex.catalog("D1_6")
    assert not glindex.is_d_free(d16, cache_dir=str(tmp_path))
    assert glindex.is_d_free(complete_minus(6, set()), cache_dir=str(tmp_path))
    assert (tmp_path / "family_d.json").exists()


def test_json_round_trip():
    c = complete_minus(5, {(1, 2, 3)})
    again = glindex.parse(c.to_json())
    assert again == c
    assert json.loads(c.to_json())["n"] == 5


def test_canonical_form_ignores_labels():
    a = glindex.Clutter(4, 3, [[1, 2, 3], [1, 2, 4]])
    b = glindex.Clutter(4, 3, [[2, 3, 4], [1, 3, 4]])
    assert a.canonical_form() == b.canonical_form()
    assert a.is_isomorphic(b)


def test_small_searches():
    assert [len(glindex.enumerate_minimal(2, 1, n)) for n in range(1, 7)] == [0, 0, 0, 1, 0, 0]
    size, witness = glindex.kappa(2)
    assert size == 4 and len(witness) == 4
    assert glindex.census()["cases"] == 105


def test_bad_input_raises():
    with pytest.raises(ValueError):
        glindex.parse("{")
    with pytest.raises(ValueError):
        glindex.Clutter(3, 3, [[1, 2]])
