"""Poset construction, flag vectors, Eulerian checks, joins."""

import pytest

from fvlab import (FlagVector, GradedPoset, PosetError, boolean_lattice,
                   dihedral_sphere, flag_vector, is_eulerian, join,
                   order_complex, polygon)


def path_poset():
    """Face poset of a path with two edges: a 1-ball, not a sphere."""
    ranks = {"bot": 0, "a": 1, "b": 1, "c": 1, "ab": 2, "bc": 2, "top": 3}
    covers = [("bot", "a"), ("bot", "b"), ("bot", "c"),
              ("a", "ab"), ("b", "ab"), ("b", "bc"), ("c", "bc"),
              ("ab", "top"), ("bc", "top")]
    return GradedPoset(ranks, covers)


def test_boolean_lattice_shape():
    b2 = boolean_lattice(2)
    assert [len(b2.level(r)) for r in range(3)] == [1, 2, 1]
    b5 = boolean_lattice(5)
    assert [len(b5.level(r)) for r in range(1, 5)] == [5, 10, 10, 5]


def test_boolean_lattice_flag():
    v = flag_vector(boolean_lattice(3))
    assert v[{1}] == 3 and v[{2}] == 3 and v[{1, 2}] == 6
    assert v[set()] == 1


def test_polygon_flag():
    for m in (3, 4, 7):
        v = flag_vector(polygon(m))
        assert v[{1}] == m and v[{2}] == m and v[{1, 2}] == 2 * m


def test_triangle_is_boolean():
    assert polygon(3).is_isomorphic_to(boolean_lattice(3))


def test_dihedral_flag_powers_of_two():
    for d in (1, 2, 4, 5):
        v = flag_vector(dihedral_sphere(d))
        for S in v.subsets():
            assert v[S] == 2 ** len(S)


def test_flag_vector_brute_force_cross_check():
    # chains enumerated directly from the order relation
    import itertools
    for p in (boolean_lattice(3), polygon(5), dihedral_sphere(3)):
        v = flag_vector(p)
        above = p.above_sets()
        proper = [x for x in p.elements if x not in (p.bottom, p.top)]
        counts = {}
        for size in range(1, p.d + 1):
            for chain in itertools.combinations(proper, size):
                ordered = sorted(chain, key=p.rank_of)
                if len({p.rank_of(x) for x in ordered}) < size:
                    continue
                if all(ordered[i + 1] in above[ordered[i]]
                       for i in range(size - 1)):
                    S = frozenset(p.rank_of(x) for x in ordered)
                    counts[S] = counts.get(S, 0) + 1
        for S, c in counts.items():
            assert v[S] == c


def test_eulerian():
    assert is_eulerian(boolean_lattice(4))
    assert is_eulerian(polygon(5))
    assert is_eulerian(dihedral_sphere(4))
    assert not is_eulerian(path_poset())


def test_join_identity():
    chain = GradedPoset({"bot": 0, "top": 1}, [("bot", "top")])
    assert join(polygon(5), chain).is_isomorphic_to(polygon(5))
    assert join(chain, polygon(5)).is_isomorphic_to(polygon(5))


def test_join_of_two_atom_lattices_is_dihedral():
    b2 = boolean_lattice(2)
    assert join(b2, b2).is_isomorphic_to(dihedral_sphere(2))


def test_join_flag_multiplies():
    # chain counts across the seam factor exactly
    p, q = boolean_lattice(2), polygon(4)
    vp, vq, vj = flag_vector(p), flag_vector(q), flag_vector(join(p, q))
    dp = p.d
    for S in vj.subsets():
        s_p = frozenset(r for r in S if r <= dp)
        s_q = frozenset(r - dp for r in S if r > dp)
        assert vj[S] == vp[s_p] * vq[s_q]


def test_dihedral_minimizes_flags():
    for p in (boolean_lattice(3), polygon(6),
              join(boolean_lattice(2), boolean_lattice(2))):
        d = p.d
        ref = flag_vector(dihedral_sphere(d))
        v = flag_vector(p)
        for S in v.subsets():
            assert ref[S] <= v[S]


def test_order_complex_shapes():
    oc = order_complex(boolean_lattice(2))
    assert oc.dim == 0 and len(oc.vertices) == 2
    oc = order_complex(polygon(4))
    assert oc.dim == 1 and len(oc.vertices) == 8 and len(oc.facets) == 8
    oc = order_complex(dihedral_sphere(2))
    assert sorted(len(f) for f in oc.facets) == [2, 2, 2, 2]


def test_poset_validation():
    with pytest.raises(PosetError):
        GradedPoset({"a": 0, "b": 0, "top": 1}, [("a", "top"), ("b", "top")])
    with pytest.raises(PosetError):
        GradedPoset({"bot": 0, "x": 1, "top": 2},
                    [("bot", "x"), ("bot", "top")])  # rank-2 cover jump
    with pytest.raises(PosetError):
        GradedPoset({"bot": 0, "x": 1, "y": 1, "top": 2},
                    [("bot", "x"), ("x", "top")])    # y disconnected
    with pytest.raises(PosetError):
        GradedPoset({"bot": 0, "top": 2}, [])        # empty level


def test_json_round_trip():
    for p in (polygon(5), boolean_lattice(3), dihedral_sphere(3)):
        doc = p.to_json()
        q = GradedPoset.from_json(doc)
        assert q.is_isomorphic_to(p)
        assert flag_vector(q).counts == flag_vector(p).counts


def test_flag_vector_json():
    v = flag_vector(polygon(3))
    doc = v.to_json()
    assert doc == {"0": "1", "1": "3", "2": "3", "3": "6"}
    back = FlagVector.from_json(2, doc)
    assert back.counts == v.counts


def test_flag_vector_validation():
    with pytest.raises(ValueError):
        FlagVector(2, {frozenset(): 2})
    with pytest.raises(ValueError):
        FlagVector(2, {frozenset({5}): 1})
