import json

import pytest
from hypothesis import given, settings

from wmge.pathpair import (
    Alignment,
    InstanceError,
    PathPair,
    Side,
    derive,
    parse_instance,
)

from conftest import path_pairs

POS, NEG = Alignment.POSITIVE, Alignment.NEGATIVE


def scan_definitions(px, py):
    """Definitions applied literally with list.index; no rank tables."""
    n = len(px)
    sw_x = [px[i] for i in range(1, n - 1)
            if (py.index(px[i - 1]) < py.index(px[i])) == (py.index(px[i + 1]) < py.index(px[i]))]
    sw_y = [py[i] for i in range(1, n - 1)
            if (px.index(py[i - 1]) < px.index(py[i])) == (px.index(py[i + 1]) < px.index(py[i]))]
    shared = set()
    for u in range(n):
        for v in range(u + 1, n):
            if abs(px.index(u) - px.index(v)) == 1 and abs(py.index(u) - py.index(v)) == 1:
                shared.add(frozenset((u, v)))

    def align(u, v):
        same = (px.index(u) < px.index(v)) == (py.index(u) < py.index(v))
        return POS if same else NEG

    ax = [align(px[i], px[i + 1]) for i in range(n - 1)]
    ay = [align(py[i], py[i + 1]) for i in range(n - 1)]
    return sw_x, sw_y, shared, ax, ay


# --- parse_instance ----------------------------------------------------------


def test_parse_json_inverse_permutation():
    p = parse_instance('{"n": 3, "px": [0, 1, 2], "py": [0, 2, 1]}')
    assert p.pos_y == (0, 2, 1)
    assert p.n == 3


def test_parse_single_vertex():
    p = parse_instance('{"n": 1, "px": [0], "py": [0]}')
    assert p.n == 1 and p.pos_x == (0,) and p.pos_y == (0,)


def test_parse_duplicate_id_names_token():
    with pytest.raises(InstanceError, match="duplicate vertex id 1"):
        parse_instance('{"n": 3, "px": [0, 1, 1], "py": [0, 2, 1]}')


@pytest.mark.parametrize(
    "doc, msg",
    [
        ('{"n": 3, "px": [0, 1], "py": [0, 2, 1]}', "length mismatch"),
        ('{"n": 3, "px": [0, 1, 3], "py": [0, 2, 1]}', "out of range"),
        ('{"n": 3, "px": [0, 1, 2]}', "missing key 'py'"),
        ('{"n": 3, "px": [0, 1, 2], "py": [0, 2, 1]', "malformed JSON"),
        ("[1, 2]", "JSON object"),
        ("", "empty"),
        ("PX: 0 1 2\n", "both a PX and a PY"),
        ("PX: 0 1\nPQ: 1 0\n", "unexpected line"),
    ],
)
def test_parse_errors(doc, msg):
    with pytest.raises(InstanceError, match=msg):
        parse_instance(doc)


def test_parse_plain_text():
    p = parse_instance("PX: 0 1 2\nPY: 2 0 1\n")
    assert p.pi_x == (0, 1, 2) and p.pi_y == (2, 0, 1)


def test_parse_labels_mapped_densely():
    p = parse_instance('{"px": ["a", "b", "c"], "py": ["c", "a", "b"]}')
    assert p.pi_x == (0, 1, 2)
    assert p.pi_y == (2, 0, 1)
    assert p.labels == ("a", "b", "c")
    assert json.loads(json.dumps(p.to_json()))["py"] == ["c", "a", "b"]
    with pytest.raises(InstanceError, match="does not occur"):
        parse_instance("PX: a b\nPY: a z\n")


# --- derive -----------------------------------------------------------------


def test_derive_triangle():
    d = derive(PathPair((0, 1, 2), (0, 2, 1)))
    assert d.switch_x == (1,)
    assert d.switch_y == (2,)
    assert [s.pair for s in d.shared_edges] == [frozenset({1, 2})]
    assert (d.shared_edges[0].x_index, d.shared_edges[0].y_index) == (1, 1)
    assert d.align_x == (POS, NEG)
    assert d.align_y == (POS, NEG)
    # same answer from the literal definitions
    sw_x, sw_y, shared, ax, ay = scan_definitions([0, 1, 2], [0, 2, 1])
    assert (sw_x, sw_y, shared, ax, ay) == ([1], [2], {frozenset({1, 2})}, [POS, NEG], [POS, NEG])


def test_derive_identical_paths():
    d = derive(PathPair((0, 1, 2), (0, 1, 2)))
    assert d.switch_x == () and d.switch_y == ()
    assert {s.pair for s in d.shared_edges} == {frozenset({0, 1}), frozenset({1, 2})}
    assert set(d.align_x) == set(d.align_y) == {POS}


def test_derive_two_vertices_reversed():
    d = derive(PathPair((0, 1), (1, 0)))
    assert d.switch_x == () and d.switch_y == ()
    assert [s.pair for s in d.shared_edges] == [frozenset({0, 1})]
    assert d.align_x == (NEG,) and d.align_y == (NEG,)


def test_derive_single_vertex():
    d = derive(PathPair((0,), (0,)))
    assert d.switch_x == d.switch_y == d.shared_edges == d.align_x == d.align_y == ()


@settings(max_examples=300, deadline=None)
@given(path_pairs(max_n=9))
def test_derive_matches_definitions(p):
    d = derive(p)
    sw_x, sw_y, shared, ax, ay = scan_definitions(list(p.pi_x), list(p.pi_y))
    assert list(d.switch_x) == sw_x
    assert list(d.switch_y) == sw_y
    assert {s.pair for s in d.shared_edges} == shared
    assert list(d.align_x) == ax and list(d.align_y) == ay
    for s in d.shared_edges:
        assert set(p.pi_x[s.x_index : s.x_index + 2]) == s.pair
        assert set(p.pi_y[s.y_index : s.y_index + 2]) == s.pair


@settings(max_examples=200, deadline=None)
@given(path_pairs(max_n=12))
def test_switch_pairs_have_opposite_alignment(p):
    d = derive(p)
    for v in d.switch_x:
        i = p.pos_x[v]
        assert d.align_x[i - 1] != d.align_x[i]
    for v in d.switch_y:
        i = p.pos_y[v]
        assert d.align_y[i - 1] != d.align_y[i]


@settings(max_examples=200, deadline=None)
@given(path_pairs(max_n=12))
def test_shared_edge_incarnations_agree_on_alignment(p):
    d = derive(p)
    for s in d.shared_edges:
        assert d.align_x[s.x_index] == d.align_y[s.y_index]


@settings(max_examples=50, deadline=None)
@given(path_pairs(max_n=10))
def test_derive_is_pure(p):
    again = PathPair(tuple(p.pi_x), tuple(p.pi_y))
    assert derive(p) == derive(again)


def test_path_edges_follow_order():
    p = PathPair((2, 0, 1), (1, 2, 0))
    edges = p.edges(Side.Y)
    assert [e.endpoints for e in edges] == [(1, 2), (2, 0)]
    assert all(e.endpoints == (p.pi_y[e.index], p.pi_y[e.index + 1]) for e in edges)
