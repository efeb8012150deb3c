import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mtopo import (
    CountExceedsBound,
    EmptyFamilyWithoutAmbient,
    MSpace,
    MSet,
    NegativeCount,
    NotASubmset,
    SpaceMismatch,
    UnknownElement,
    add,
    complement_in,
    enumerate_submsets,
    equals,
    family_intersection,
    family_union,
    intersect,
    is_full_submset,
    is_partial_whole_submset,
    is_submset,
    is_whole_submset,
    make_mset,
    parse_mset,
    subtract,
    support,
    union,
)
from mtopo.errors import MTopoError
from mtopo.mset import MPoint, is_full_submset_literal, parse_counts

AB3 = MSpace(("a", "b"), 3)
ABC5 = MSpace(("a", "b", "c"), 5)
F2_SPACE = MSpace(("a", "b", "c", "d"), 5)


def m(text, space=AB3):
    return parse_mset(text, space)


class TestMakeMset:
    def test_example_multiset(self):
        a = make_mset(ABC5, {"a": 3, "b": 5, "c": 1})
        assert str(a) == "{3/a,5/b,1/c}"
        assert a.count("b") == 5

    def test_empty(self):
        assert make_mset(AB3, {}).is_empty()
        assert str(make_mset(AB3, {})) == "{}"

    def test_zero_counts_normalized(self):
        assert make_mset(AB3, {"a": 1, "b": 0}) == make_mset(AB3, {"a": 1})
        assert make_mset(AB3, {"a": 1, "b": 0}).as_dict() == {"a": 1}

    @pytest.mark.parametrize(
        "counts, exc",
        [({"a": 4}, CountExceedsBound), ({"a": -1}, NegativeCount), ({"z": 1}, UnknownElement)],
    )
    def test_errors(self, counts, exc):
        with pytest.raises(exc):
            make_mset(AB3, counts)

    def test_space_validation(self):
        with pytest.raises(MTopoError):
            MSpace(("a", "a"), 2)
        with pytest.raises(MTopoError):
            MSpace(("a",), 0)
        with pytest.raises(MTopoError):
            MSpace(("",), 1)

    def test_immutable(self):
        a = m("{1/a}")
        with pytest.raises(AttributeError):
            a.counts = (2, 0)


class TestComparisons:
    def test_equals(self):
        assert equals(m("{2/a,3/b}"), m("{2/a,3/b}"))
        assert not equals(m("{2/a}"), m("{2/a,1/b}"))
        assert equals(m("{1/a}"), make_mset(AB3, {"a": 1, "b": 0}))

    def test_space_mismatch(self):
        with pytest.raises(SpaceMismatch):
            equals(m("{1/a}"), make_mset(ABC5, {"a": 1}))
        with pytest.raises(SpaceMismatch):
            union(m("{1/a}"), make_mset(ABC5, {"a": 1}))

    def test_submset(self):
        assert is_submset(m("{1/a,2/b}"), m("{1/a,3/b}"))
        assert not is_submset(m("{2/a}"), m("{1/a,3/b}"))
        assert is_submset(m("{}"), m("{3/a,3/b}"))
        assert m("{1/a}") <= m("{1/a,1/b}")


class TestOperations:
    def test_union_intersection(self):
        assert union(m("{1/a}"), m("{2/b}")) == m("{1/a,2/b}")
        assert intersect(m("{1/a,3/c}", F2_SPACE), m("{2/b,5/d}", F2_SPACE)).is_empty()
        assert union(m("{1/a,3/b}"), m("{}")) == m("{1/a,3/b}")

    def test_add_caps_at_w(self):
        assert add(m("{2/a}"), m("{2/a}")) == m("{3/a}")
        assert add(m("{1/a}"), m("{1/b}")) == m("{1/a,1/b}")
        assert add(m("{2/a,1/b}"), m("{}")) == m("{2/a,1/b}")

    def test_subtract_truncates(self):
        assert subtract(m("{2/a,3/b}"), m("{1/a,3/b}")) == m("{1/a}")
        assert subtract(m("{1/a}"), m("{2/a}")).is_empty()
        assert subtract(m("{1/a,2/b}"), m("{}")) == m("{1/a,2/b}")

    def test_operators_match_functions(self):
        a, b = m("{2/a,1/b}"), m("{1/a,3/b}")
        assert a | b == union(a, b)
        assert a & b == intersect(a, b)
        assert a + b == add(a, b)
        assert a - b == subtract(a, b)

    def test_complement(self):
        assert complement_in(m("{1/a,3/b}"), m("{2/a,3/b}")) == m("{1/a}")
        g2 = m("{5/a,3/b,5/c,5/d}", F2_SPACE)
        assert complement_in(m("{3/a,3/b,3/c,3/d}", F2_SPACE), g2) == m("{2/a,2/c,2/d}", F2_SPACE)
        assert complement_in(m("{2/a,3/b}"), m("{2/a,3/b}")).is_empty()
        with pytest.raises(NotASubmset):
            complement_in(m("{3/a}"), m("{2/a,3/b}"))

    def test_families(self, f1):
        assert family_union([], AB3).is_empty()
        with pytest.raises(EmptyFamilyWithoutAmbient):
            family_union([])
        assert family_union(f1.opens) == f1.ground
        assert family_intersection([m("{1/a,3/b}"), m("{1/a,1/b}")]) == m("{1/a,1/b}")
        assert family_intersection([m("{1/a}")]) == m("{1/a}")
        assert family_intersection([], ambient=f1.ground) == f1.ground
        with pytest.raises(EmptyFamilyWithoutAmbient):
            family_intersection([])

    def test_support(self):
        assert support(make_mset(ABC5, {"a": 3, "b": 5, "c": 1})) == {"a", "b", "c"}
        assert support(m("{}")) == frozenset()
        assert support(m("{1/a,2/b}", F2_SPACE)) == {"a", "b"}


class TestSubmsetKinds:
    G = "{2/a,3/b}"

    def test_whole(self):
        assert is_whole_submset(m("{2/a}"), m(self.G))
        assert is_whole_submset(m("{}"), m(self.G))

    def test_partial_whole(self):
        assert is_partial_whole_submset(m("{2/a,1/b}"), m(self.G))
        assert not is_whole_submset(m("{2/a,1/b}"), m(self.G))
        assert not is_partial_whole_submset(m("{}"), m(self.G))

    def test_full(self):
        assert is_full_submset(m("{1/a,1/b}"), m(self.G))
        assert not is_full_submset(m("{1/a}"), m(self.G))

    def test_literal_full_reading_is_vacuous(self):
        g = m(self.G)
        assert all(is_full_submset_literal(n, g) for n in enumerate_submsets(g))

    def test_requires_submset(self):
        with pytest.raises(NotASubmset):
            is_whole_submset(m("{3/a}"), m(self.G))


class TestLiterals:
    def test_roundtrip(self):
        for a in enumerate_submsets(m("{2/a,3/b}")):
            assert parse_mset(str(a), AB3) == a

    def test_spaces_and_order_tolerated(self):
        assert parse_counts("{ 3/b , 1/a }") == {"b": 3, "a": 1}
        assert m("{3/b, 1/a}") == m("{1/a,3/b}")

    @pytest.mark.parametrize("bad", ["1/a", "{1/a,1/a}", "{a}", "{x/a}", "{1/a,,2/b}"])
    def test_rejects(self, bad):
        with pytest.raises(MTopoError):
            parse_counts(bad)

    def test_point(self):
        assert str(MPoint("a", 2)) == "2/a"
        with pytest.raises(MTopoError):
            MPoint("a", 0)


# ---------------------------------------------------------------- laws


F1_SUBS = enumerate_submsets(m("{2/a,3/b}"))
F1_GROUND = m("{2/a,3/b}")


def test_f1_has_twelve_submsets():
    assert len(F1_SUBS) == 12


def test_exhaustive_lattice_laws_on_f1():
    g = F1_GROUND
    empty = AB3.empty()
    for a in F1_SUBS:
        assert complement_in(complement_in(a, g), g) == a
        assert union(a, a) == a and intersect(a, a) == a
        assert union(a, empty) == a and intersect(a, g) == a
        assert union(a, g) == g and intersect(a, empty) == empty
        for b in F1_SUBS:
            assert union(a, b) == union(b, a)
            assert intersect(a, b) == intersect(b, a)
            assert union(a, intersect(a, b)) == a
            assert intersect(a, union(a, b)) == a
            ca, cb = complement_in(a, g), complement_in(b, g)
            assert complement_in(union(a, b), g) == intersect(ca, cb)
            assert complement_in(intersect(a, b), g) == union(ca, cb)
            assert all(c >= 0 for c in subtract(a, b).counts)
            assert all(c <= AB3.w for c in add(a, b).counts)
            for c in F1_SUBS:
                assert union(union(a, b), c) == union(a, union(b, c))
                assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))


def test_family_de_morgan_on_f1():
    g = F1_GROUND
    for r in range(1, 4):
        for fam in itertools.combinations(F1_SUBS, r):
            comps = [complement_in(a, g) for a in fam]
            assert complement_in(family_union(fam), g) == family_intersection(comps)
            assert complement_in(family_intersection(fam), g) == family_union(comps)


def test_whole_implies_partial_whole():
    for n in F1_SUBS:
        if is_whole_submset(n, F1_GROUND) and not n.is_empty():
            assert is_partial_whole_submset(n, F1_GROUND)


@st.composite
def msets_in_space(draw, n=2):
    d = draw(st.integers(1, 4))
    w = draw(st.integers(1, 6))
    space = MSpace(tuple("abcdef"[:d]), w)
    vecs = draw(st.lists(st.lists(st.integers(0, w), min_size=d, max_size=d), min_size=n, max_size=n))
    return [MSet(space, v) for v in vecs]


@given(msets_in_space(3))
def test_random_algebra_laws(triple):
    a, b, c = triple
    w = a.space.w
    assert all(x <= w for x in add(a, b).counts)
    assert add(a, b) == add(b, a)
    assert union(a, intersect(b, c)) == intersect(union(a, b), union(a, c))
    assert intersect(a, union(b, c)) == union(intersect(a, b), intersect(a, c))
    assert is_submset(subtract(a, b), a)
    assert is_submset(intersect(a, b), union(a, b))
    g = union(union(a, b), c)
    assert complement_in(complement_in(a, g), g) == a
