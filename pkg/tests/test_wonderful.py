import itertools
import random

import pytest
from hypothesis import given, strategies as st

from rankone import catalog, rootsys, sweep, wonderful
from rankone.errors import DimensionError, StructuralError
from rankone.rootsys import root_system
from rankone.wonderful import irreducible, make_induced, variety_from_config

from conftest import catalog_varieties, induced_varieties


def test_b4_induced_gamma(b4_induced):
    assert b4_induced.gamma == (-1, 1, 0, 0)
    assert b4_induced.levi == (2, 3, 4)
    assert b4_induced.outer == (1,)
    assert b4_induced.label == "B4/{2,3,4}/9B(3)"


def test_trivial_induction_of_p1xp1():
    X = make_induced(root_system("A", 1), [1], catalog.p1xp1(), {1: 1})
    assert X == irreducible(catalog.p1xp1())
    assert not X.is_induced


def test_g2_fiber_does_not_fit_a3():
    with pytest.raises(StructuralError):
        make_induced(root_system("A", 3), [1, 3], catalog.case_15(), {1: 1, 2: 3})


def test_correspondence_must_match_levi():
    with pytest.raises(StructuralError):
        make_induced(root_system("B", 4), [2, 3, 4], catalog.case_9b(3), {1: 1, 2: 3, 3: 4})
    with pytest.raises(StructuralError):
        # reversed order breaks the Cartan integers at the short root
        make_induced(root_system("B", 4), [2, 3, 4], catalog.case_9b(3), {1: 4, 2: 3, 3: 2})


def test_flag_fiber_cannot_be_induced():
    flag = catalog.get_entry("flag", group={"type": "A", "rank": 1}, pic=[[1]])
    with pytest.raises(StructuralError):
        make_induced(root_system("A", 2), [1], flag, {1: 1})


@pytest.mark.parametrize("doc", sweep.INDUCED_FIXTURES)
def test_fixture_invariants(doc):
    X = variety_from_config(doc)
    for d in X.outer:
        assert X.gamma[d - 1] <= 0
    assert [x for x in X.gamma if x > 0] == [1]
    # gamma lies in the span of the Levi simple roots
    r = rootsys.to_simple_root_coords(X.ambient, X.gamma)
    assert all(r[d - 1] == 0 for d in X.outer)
    assert variety_from_config(X.to_config()) == X


def test_pic_plus_examples(b4_induced):
    X = b4_induced
    assert wonderful.pic_plus_contains(X, (1, 2, 0, 0))
    assert not wonderful.pic_plus_contains(X, (0, 0, 1, 0))
    for Y in catalog_varieties() + induced_varieties():
        assert wonderful.pic_plus_contains(Y, (0,) * Y.ambient.rank)


def test_pic_plus_on_star_nontrivial_ambient():
    X = variety_from_config(sweep.P1XP1_FIXTURES[0])
    assert wonderful.pic_plus_contains(X, (1, 0, 2))
    assert not wonderful.pic_plus_contains(X, (1, -1, 0))
    # the levi node is 1, so a dual weight (a,b,c) restricts through lam* = (c,b,a)
    assert wonderful.split_dual(X, (1, 0, 2)) == ((2, 0, 0), (0, 0, 1))


def test_flag_entry_irreducible_uses_lambda_directly():
    e = catalog.get_entry("flag", group={"type": "A", "rank": 2}, pic=[[1, 0]])
    X = irreducible(e)
    assert wonderful.pic_plus_contains(X, (3, 0))
    assert not wonderful.pic_plus_contains(X, (0, 3))
    assert X.pic_basis == ((1, 0),)


@pytest.mark.parametrize("X", catalog_varieties() + induced_varieties(), ids=lambda X: X.label)
def test_pic_plus_closed_under_addition(X):
    ws = sweep.pic_plus_weights(X, 3)
    for a, b in itertools.product(ws, repeat=2):
        assert wonderful.pic_plus_contains(X, tuple(x + y for x, y in zip(a, b)))


@pytest.mark.parametrize("X", catalog_varieties()[:3] + induced_varieties(), ids=lambda X: X.label)
def test_pic_plus_enumeration_matches_brute_force(X):
    rank = X.ambient.rank
    box = [w for w in itertools.product(range(3), repeat=rank) if wonderful.pic_plus_contains(X, w)]
    assert sorted(box) == sweep.pic_plus_weights(X, 2)


def test_globally_generated():
    X15 = irreducible(catalog.case_15())
    assert wonderful.is_globally_generated(X15, (1, 0))
    P = irreducible(catalog.p1xp1())
    assert not wonderful.is_globally_generated(P, (1, -1))
    for X in catalog_varieties() + induced_varieties() + [P]:
        assert wonderful.is_globally_generated(X, (0,) * wonderful.pic_rank(X))
    with pytest.raises(DimensionError):
        wonderful.is_globally_generated(X15, (1, 0, 0))


def test_p1xp1_class_restricts_trivially():
    # O(1) x O(-1) restricts to the trivial weight on the diagonal yet is not generated
    P = irreducible(catalog.p1xp1())
    assert wonderful.class_to_weight(P, (1, -1)) == (0,)
    assert not wonderful.is_globally_generated(P, (1, -1))


def test_restriction_injective():
    assert wonderful.pic_restriction_injective(irreducible(catalog.case_9b(2)))
    assert not wonderful.pic_restriction_injective(irreducible(catalog.p1xp1()))
    X = make_induced(root_system("B", 4), [4], catalog.p1xp1(), {1: 4})
    assert not wonderful.pic_restriction_injective(X)
    for Y in catalog_varieties() + induced_varieties():
        assert wonderful.pic_restriction_injective(Y)


def test_pic_rank_examples(b4_induced):
    assert wonderful.pic_rank(irreducible(catalog.case_15())) == 2
    assert wonderful.pic_rank(irreducible(catalog.p1xp1())) == 2
    assert wonderful.pic_rank(b4_induced) == 2


def _random_inductions(count, seed=0):
    """Random (ambient, levi, fiber) triples where the fiber diagram embeds."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = rng.choice("BCAF")
        if kind == "F":
            rank = 4
        else:
            rank = rng.randint(2, 8)
        rs = root_system(kind, rank)
        choice = rng.choice(["9B", "9C", "P1xP1"])
        if choice == "P1xP1":
            node = rng.randint(1, rank)
            fiber, corr = catalog.p1xp1(), {1: node}
        else:
            if kind == "F":
                k = 3
                corr = {1: 1, 2: 2, 3: 3} if choice == "9B" else {1: 4, 2: 3, 3: 2}
            elif (kind, choice) in (("B", "9B"), ("C", "9C")):
                k = rng.randint(2, rank)
                corr = {i + 1: rank - k + 1 + i for i in range(k)}
            elif kind in "BC" and rank >= 2:
                # B2 = C2 with the nodes swapped
                k = 2
                corr = {1: rank, 2: rank - 1}
            else:
                continue
            fiber = catalog.get_entry(choice, k)
        try:
            X = make_induced(rs, list(corr.values()), fiber, corr)
        except StructuralError:
            continue
        out.append(X)
    return out


def test_pic_rank_exact_sequence_count():
    varieties = _random_inductions(100)
    assert len(varieties) == 100
    for X in varieties:
        assert wonderful.pic_rank(X) == len(X.outer) + X.fiber.pic_rank == len(X.pic_basis)
        for d in X.outer:
            if X.gamma is not None:
                assert X.gamma[d - 1] <= 0
        if X.gamma is not None:
            assert [x for x in X.gamma if x > 0] == [1]


@given(st.lists(st.integers(0, 4), min_size=2, max_size=2))
def test_class_weight_roundtrip(coeffs):
    X = variety_from_config(sweep.INDUCED_FIXTURES[0])
    w = wonderful.class_to_weight(X, coeffs)
    assert wonderful.pic_plus_contains(X, w)
