import pytest

from hopflab.groups import (
    BUNDLED_GROUPS,
    GroupError,
    GroupTable,
    cyclic,
    dihedral4,
    direct_product,
    quaternion8,
    symmetric3,
)


@pytest.mark.parametrize("name", sorted(BUNDLED_GROUPS))
def test_bundled_tables_are_groups(name):
    G = BUNDLED_GROUPS[name]  # constructor already validates; re-check basics
    e = G.identity
    for g in range(G.order):
        assert G.mul(e, g) == g == G.mul(g, e)
        assert G.mul(g, G.inverse[g]) == e


def test_orders():
    assert {n: BUNDLED_GROUPS[n].order for n in BUNDLED_GROUPS} == {
        "c2": 2, "c3": 3, "c4": 4, "k4": 4, "s3": 6, "d4": 8, "q8": 8,
    }


def test_abelianness():
    for name in ("c2", "c3", "c4", "k4"):
        assert BUNDLED_GROUPS[name].is_abelian()
    for name in ("s3", "d4", "q8"):
        assert not BUNDLED_GROUPS[name].is_abelian()


def test_rejects_non_latin_square():
    with pytest.raises(GroupError):
        GroupTable([[0, 0], [1, 1]])


def test_rejects_non_associative():
    # a Latin square that is not a group table (order 5 loop)
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError):
        GroupTable(t)


def test_d4_relations():
    G = dihedral4()
    r, s = 1, 4  # r¹ and s
    assert G.power(r, 4) == G.identity
    assert G.power(s, 2) == G.identity
    # s r s = r⁻¹
    assert G.mul(G.mul(s, r), s) == G.inverse[r]


def test_q8_relations():
    G = quaternion8()
    one, minus_one, i, j, k = 0, 1, 2, 4, 6
    assert G.mul(i, i) == minus_one
    assert G.mul(j, j) == minus_one
    assert G.mul(i, j) == k
    assert G.mul(j, i) == G.inverse[k]
    assert G.names[k] == "k"
    assert G.power(i, 4) == one


def test_s3_composition_convention():
    G = symmetric3()
    # (s∘t)(x) = s(t(x)); pick s = (0 1), t = (1 2) as tuples
    import itertools

    perms = sorted(itertools.permutations(range(3)))
    s = perms.index((1, 0, 2))
    t = perms.index((0, 2, 1))
    st = perms.index(tuple(perms[s][perms[t][x]] for x in range(3)))
    assert G.mul(s, t) == st
    assert G.mul(s, t) != G.mul(t, s)


def test_direct_product_structure():
    A, B = cyclic(2), cyclic(3)
    G = direct_product(A, B)
    assert G.order == 6
    assert G.is_abelian()
    # (1,1) has order lcm(2,3) = 6
    x = 1 * 3 + 1
    orders = {n for n in range(1, 7) if G.power(x, n) == G.identity}
    assert min(orders) == 6


def test_conjugate():
    G = symmetric3()
    for h in range(6):
        for x in range(6):
            got = G.conjugate(h, x)
            assert got == G.mul(G.mul(h, x), G.inverse[h])
