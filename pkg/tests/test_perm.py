import pytest
from hypothesis import given
from hypothesis import strategies as st

from combknot.perm import (
    Permutation,
    compose,
    conjugate,
    inner_involution,
    inverse,
    orbits,
    parity,
    power,
)
from figures import FIG1, FIG1_P, FIG2, perm


def dict_of(p):
    return {x: p(x) for x in range(1, p.size + 1)}


def oracle_compose(a, b):
    # apply a, then b
    da, db = dict_of(a), dict_of(b)
    return {x: db[da[x]] for x in da}


def oracle_parity(p):
    img = p.images
    inversions = sum(1 for i in range(len(img)) for j in range(i + 1, len(img)) if img[i] > img[j])
    return inversions % 2


@st.composite
def perms(draw, n=None):
    if n is None:
        n = draw(st.integers(0, 24))
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def perm_pairs(draw):
    n = draw(st.integers(0, 24))
    return draw(perms(n)), draw(perms(n))


@st.composite
def perm_triples(draw):
    n = draw(st.integers(0, 24))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


def test_compose_fig1_face_rotation():
    P = perm(FIG1_P, 12)
    assert compose(P, inner_involution(12)) == perm(FIG1["Q"], 12)


def test_compose_is_left_to_right():
    a = perm("(1 2)", 3)
    b = perm("(2 3)", 3)
    # 1 -> 2 under a, then 2 -> 3 under b
    assert (a * b)(1) == 3
    assert (a * b).cycle_string() == "(1 3 2)"


def test_compose_identity_and_inverse():
    p = perm(FIG1_P, 12)
    e = Permutation.identity(12)
    assert e * p == p
    assert (p * p.inverse()).is_identity()


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


@pytest.mark.parametrize(
    "text, size, expected",
    [
        ("(1 2 3)", 3, "(1 3 2)"),
        ("()", 5, "()"),
        (FIG1_P, 12, "(1 6 9)(2 12 3)(4 7 5)(8 11 10)"),
    ],
)
def test_inverse(text, size, expected):
    assert inverse(perm(text, size)) == perm(expected, size)


def test_conjugate_fig1_edge_rotation():
    P = perm(FIG1_P, 12)
    assert conjugate(inner_involution(12), P.inverse()) == perm(FIG1["rho"], 12)


def test_conjugate_fig2_even_green_cycles():
    odd = perm("(1 5 13 17 7 11)(3 15 9)", 18)
    assert conjugate(odd, inner_involution(18)) == perm("(2 6 14 18 8 12)(4 16 10)", 18)


def test_conjugate_by_identity_and_xor_operator():
    p = perm(FIG1_P, 12)
    assert conjugate(p, Permutation.identity(12)) == p
    t = perm("(1 2 3)", 12)
    assert p ^ t == t.inverse() * p * t


def test_orbits():
    assert orbits(perm("(1 2)(3 4)(5 6)", 6)) == [[1, 2], [3, 4], [5, 6]]
    assert orbits(Permutation.identity(4)) == [[1], [2], [3], [4]]
    mu = perm("(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18)", 18)
    assert [len(o) for o in orbits(mu)] == [18]


def test_orbits_start_at_minimum():
    assert orbits(perm("(5 3 4)(2 1)", 5)) == [[1, 2], [3, 4, 5]]


def test_parity():
    assert parity(perm("(1 2)", 2)) == "odd"
    assert parity(perm("(1 2 3)", 3)) == "even"
    assert parity(perm(FIG1_P, 12)) == "even"


def test_power():
    eps = perm(FIG2["epsilon"], 18)
    assert power(eps, 2) == perm("(1 11 7 17 13 5)(2 12 8 18 14 6)(3 9 15)(4 10 16)", 18)
    assert power(eps, 0).is_identity()
    assert power(perm("(1 2)", 2), 2).is_identity()
    assert power(eps, -3) == power(eps.inverse(), 3)


def test_rejects_non_permutations():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation.from_cycles([[1, 2], [2, 3]], 3)
    with pytest.raises(ValueError):
        Permutation.from_cycles([[1, 4]], 3)


def test_inner_involution():
    assert inner_involution(6).cycle_string() == "(1 2)(3 4)(5 6)"
    assert inner_involution(6).is_involution(fixed_point_free=True)
    with pytest.raises(ValueError):
        inner_involution(5)


@given(perm_pairs())
def test_compose_matches_oracle(pair):
    a, b = pair
    assert dict_of(a * b) == oracle_compose(a, b)


@given(perm_triples())
def test_associative_with_neutral_identity(triple):
    a, b, c = triple
    e = Permutation.identity(a.size)
    assert (a * b) * c == a * (b * c)
    assert e * a == a == a * e


@given(perms())
def test_inverse_matches_oracle(p):
    d = dict_of(p)
    assert dict_of(p.inverse()) == {v: k for k, v in d.items()}


@given(perm_pairs())
def test_conjugate_preserves_cycle_type(pair):
    a, t = pair
    assert conjugate(a, t).cycle_type() == a.cycle_type()


@given(perm_pairs())
def test_parity_is_homomorphism(pair):
    a, b = pair
    assert (a * b).parity() == a.parity() ^ b.parity()
    assert a.parity() == oracle_parity(a)


@given(perms())
def test_cycles_round_trip(p):
    assert Permutation.from_cycles(p.cycles(), p.size) == p
