import pytest
from hypothesis import given, strategies as st

import oracles
from atype_fillings.combinatorics import (
    Diagonal, Permutation312, Triangulation, catalan, clip_sequence, enumerate_312, fan_triangulation,
    internal_triangle_count, is_312_avoiding, rotate_triangulation, triangulation_of, wrap,
)
from atype_fillings.errors import MalformedInput
from strategies import permutations_312, triangulation_pairs, triangulations

P = Permutation312.parse


# is_312_avoiding


@pytest.mark.parametrize("word, expected", [
    ((1, 5, 4, 3, 6, 2), True),
    ((1, 2, 3, 4), True),
    ((3, 1, 2), False),
    ((2, 4, 1, 3), False),
    ((), True),
])
def test_is_312_avoiding_examples(word, expected):
    assert is_312_avoiding(word) is expected


@pytest.mark.parametrize("word", [(1, 1, 2), (0, 1), (1, 3), "abc"])
def test_is_312_avoiding_rejects_non_permutations(word):
    with pytest.raises(MalformedInput):
        is_312_avoiding(word)


@given(st.permutations(range(1, 9)))
def test_is_312_avoiding_matches_triple_scan(word):
    assert is_312_avoiding(word) == (not oracles.has_312(word))


def test_permutation_rejects_312():
    with pytest.raises(MalformedInput):
        Permutation312((3, 1, 2))


def test_parse_and_print_roundtrip():
    assert str(P("154362")) == "154362"
    long = Permutation312(tuple(range(1, 12)))
    assert str(long) == "1,2,3,4,5,6,7,8,9,10,11"
    assert P(str(long)) == long
    with pytest.raises(MalformedInput):
        P("15x")


# enumeration and counting


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (4, 14), (10, 16796)])
def test_catalan(n, expected):
    assert catalan(n) == expected


@pytest.mark.parametrize("n", range(0, 8))
def test_enumerate_matches_brute_force(n):
    assert [p.word for p in enumerate_312(n)] == oracles.brute_312(n)


def test_enumerate_small_cases():
    assert [str(p) for p in enumerate_312(1)] == ["1"]
    assert [str(p) for p in enumerate_312(3)] == ["123", "132", "213", "231", "321"]
    assert enumerate_312(0) == [Permutation312(())]


def test_enumerate_n4_is_the_published_table_column():
    table = ["1234", "1243", "1324", "1342", "1432", "2134", "2143",
             "2314", "2341", "2431", "3214", "3241", "3421", "4321"]
    assert [str(p) for p in enumerate_312(4)] == table


@pytest.mark.parametrize("n", range(1, 11))
def test_enumerate_count_is_catalan(n):
    assert len(enumerate_312(n)) == catalan(n) == oracles.catalan_binomial(n)


# clip bijection


def test_clip_examples():
    assert clip_sequence(Triangulation(1, frozenset())) == P("1")
    assert clip_sequence(Triangulation.from_pairs(3, [(1, 3), (3, 5)])) == P("213")


def test_triangulation_of_examples():
    assert triangulation_of(P("1")).diagonals == frozenset()
    assert triangulation_of(P("213")).diagonals == {Diagonal(1, 3), Diagonal(3, 5)}
    t = triangulation_of(P("154362"))
    assert clip_sequence(t) == P("154362")
    # D2,6 is flipped in the worked example and therefore belongs to this triangulation
    assert Diagonal(2, 6) in t.diagonals


@pytest.mark.parametrize("n", range(1, 8))
def test_clip_matches_naive_procedure(n):
    for pairs in oracles.all_triangulations(n):
        t = Triangulation.from_pairs(n, pairs)
        assert clip_sequence(t).word == oracles.naive_clip(n, pairs)


@pytest.mark.parametrize("n", range(1, 9))
def test_roundtrip_both_directions(n):
    perms = enumerate_312(n)
    tris = {triangulation_of(p) for p in perms}
    assert len(tris) == catalan(n)
    assert {frozenset(t.diagonals) for t in tris} == set(oracles.all_triangulations(n))
    for p in perms:
        assert clip_sequence(triangulation_of(p)) == p


@given(triangulations(max_n=40))
def test_roundtrip_random_large(t):
    p = clip_sequence(t)
    assert is_312_avoiding(p.word)
    assert triangulation_of(p) == t


@given(permutations_312(max_n=40))
def test_triangulation_of_is_valid(p):
    t = triangulation_of(p)
    Triangulation(t.n, t.diagonals)


# triangulation validation


def test_triangulation_rejects_bad_input():
    with pytest.raises(MalformedInput):
        Triangulation.from_pairs(4, [(1, 3), (2, 4), (1, 4)])  # crossing
    with pytest.raises(MalformedInput):
        Triangulation.from_pairs(4, [(1, 3)])  # too few
    with pytest.raises(MalformedInput):
        Diagonal.of(1, 2, 4)  # polygon side
    with pytest.raises(MalformedInput):
        Diagonal.of(1, 6, 4)  # side through the wrap


def test_wrap_maps_zero_to_last_label():
    assert wrap(0, 6) == 6
    assert wrap(7, 6) == 1
    assert wrap(-1, 6) == 5


@given(triangulation_pairs(min_n=2, max_n=20))
def test_at_least_two_ears(data):
    n, pairs = data
    t = Triangulation.from_pairs(n, pairs)
    touched = {v for d in t.diagonals for v in d}
    assert len(set(range(1, n + 3)) - touched) >= 2


# rotation and internal triangles


def test_rotate_pentagon_example():
    t = Triangulation.from_pairs(3, [(1, 3), (3, 5)])
    assert rotate_triangulation(t, 1).diagonals == {Diagonal(2, 5), Diagonal(2, 4)}


@given(triangulations(max_n=20))
def test_full_turn_is_identity(t):
    cur = t
    for _ in range(t.size):
        cur = rotate_triangulation(cur, 1)
    assert cur == t
    assert rotate_triangulation(t, t.size) == t


@given(triangulations(max_n=20), st.integers(-30, 30))
def test_rotation_matches_oracle(t, k):
    assert rotate_triangulation(t, k).diagonals == oracles.rotate_pairs(t.n, t.diagonals, k)


def test_internal_triangles_examples():
    assert internal_triangle_count(fan_triangulation(8)) == 0
    hexagon = Triangulation.from_pairs(4, [(1, 3), (3, 5), (1, 5)])
    assert internal_triangle_count(hexagon) == 1


# distribution of internal-triangle counts, computed by the independent oracle
INTERNAL_DISTRIBUTION = {
    3: {0: 5},
    4: {0: 12, 1: 2},
    5: {0: 28, 1: 14},
    6: {0: 64, 1: 64, 2: 4},
    7: {0: 144, 1: 240, 2: 45},
    8: {0: 320, 1: 800, 2: 300, 3: 10},
}


@pytest.mark.parametrize("n", sorted(INTERNAL_DISTRIBUTION))
def test_internal_triangle_distribution(n):
    counts = {}
    for p in enumerate_312(n):
        k = internal_triangle_count(triangulation_of(p))
        counts[k] = counts.get(k, 0) + 1
    assert counts == INTERNAL_DISTRIBUTION[n]


@given(triangulations(max_n=12))
def test_internal_triangles_match_oracle(t):
    assert internal_triangle_count(t) == oracles.internal_triangles(t.n, t.diagonals)


def test_triangles_cover_polygon():
    for p in enumerate_312(6):
        tris = triangulation_of(p).triangles()
        assert len(tris) == p.n
        sides = [frozenset(s) for tri in tris for s in tri.sides()]
        # every diagonal borders two triangles, every polygon side one
        assert len(sides) == 2 * (p.n - 1) + p.n + 2
        assert all(1 <= v <= p.n + 2 for tri in tris for v in tri[:3])


def test_fan_triangulation_permutations():
    assert clip_sequence(fan_triangulation(5)) == P("23451")
    assert clip_sequence(fan_triangulation(5, apex=7)) == P("12345")
    assert clip_sequence(fan_triangulation(5, apex=6)) == P("54321")
    for n in range(1, 8):
        assert clip_sequence(fan_triangulation(n, apex=n + 2)).word == tuple(range(1, n + 1))
