import json

import pytest

import corpus
from boolat.errors import NotAGroup, OrderTooLarge, ParseError
from boolat.grouplat import (
    coatoms_fixed_fields,
    cyclic,
    cyclic_report,
    dihedral,
    direct_product,
    distributive_implies_cyclic_check,
    divisor_lattice,
    from_cayley,
    group_from_json,
    is_boolean_galois,
    quaternion,
    subgroup_lattice,
    subgroups_bruteforce,
    symmetric,
)
from boolat.latcore import (
    chain,
    dual,
    is_boolean,
    is_distributive,
    is_isomorphic,
    length,
)

KLEIN = direct_product(cyclic(2), cyclic(2))


def test_constructors():
    assert cyclic(6).order == 6 and cyclic(6).is_cyclic()
    assert KLEIN.order == 4 and not KLEIN.is_cyclic() and KLEIN.is_abelian()
    assert direct_product(cyclic(2), cyclic(3)).is_cyclic()
    assert symmetric(3).order == 6 and not symmetric(3).is_abelian()
    assert dihedral(4).order == 8 and quaternion().order == 8


@pytest.mark.parametrize("table", [
    [[0, 1, 2], [1, 0, 0], [2, 0, 1]],  # not a Latin square
    [[0, 1, 2], [1, 2, 0], [2, 1, 0]],  # no two-sided identity
    [[1, 0], [0, 1], [0, 0]],
    [[0, 5], [5, 0]],
])
def test_not_a_group(table):
    with pytest.raises(NotAGroup):
        from_cayley(table)


def test_non_associative_latin_square():
    # a loop of order 5 that is not a group
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        from_cayley(table)


def test_group_json():
    G = group_from_json(json.dumps({"order": 2, "table": [[0, 1], [1, 0]]}))
    assert G.order == 2
    for bad in ["{", "[]", '{"table": 3}', '{"order": 3, "table": [[0, 1], [1, 0]]}']:
        with pytest.raises(ParseError):
            group_from_json(bad)


def test_subgroup_lattice_examples():
    sl = subgroup_lattice(cyclic(30))
    assert len(sl.subgroups) == 8
    assert is_isomorphic(dual(sl.lattice), divisor_lattice(30))
    assert is_isomorphic(sl.lattice, divisor_lattice(30))
    kl = subgroup_lattice(KLEIN).lattice
    assert len(kl) == 5 and kl.atoms() == kl.coatoms() and len(kl.atoms()) == 3
    assert is_isomorphic(subgroup_lattice(cyclic(4)).lattice, chain(3))
    assert sl.lattice.labels[0] == "[0]"


def test_subgroup_counts():
    assert len(subgroup_lattice(symmetric(4)).subgroups) == 30
    assert len(subgroup_lattice(quaternion()).subgroups) == 6
    assert len(subgroup_lattice(dihedral(4)).subgroups) == 10


def test_order_limit():
    with pytest.raises(OrderTooLarge):
        subgroup_lattice(cyclic(65))
    with pytest.raises(OrderTooLarge):
        is_boolean_galois(cyclic(70))
    assert is_boolean_galois(cyclic(70), max_order=70).boolean


@pytest.mark.parametrize("G", [G for G in corpus.groups() if G.order <= 12], ids=repr)
def test_subgroups_match_bruteforce(G):
    assert subgroup_lattice(G).subgroups == subgroups_bruteforce(G)


def test_is_boolean_galois_examples():
    assert is_boolean_galois(cyclic(30)).boolean
    assert not is_boolean_galois(cyclic(4)).boolean
    assert not is_boolean_galois(KLEIN).boolean


@pytest.mark.parametrize("G", corpus.groups(), ids=repr)
def test_galois_routes_agree_and_dual(G):
    v = is_boolean_galois(G)
    assert v.lattice_route == v.cyclic_squarefree_route == v.boolean
    lat = subgroup_lattice(G).lattice
    assert is_boolean(dual(lat)) == is_boolean(lat)
    if G.order <= 16:
        assert distributive_implies_cyclic_check(G)


def test_coatoms_fixed_fields():
    assert sorted(len(H) for H in coatoms_fixed_fields(cyclic(30))) == [2, 3, 5]
    assert [len(H) for H in coatoms_fixed_fields(cyclic(9))] == [3]
    assert sorted(len(H) for H in coatoms_fixed_fields(KLEIN)) == [2, 2, 2]


def test_divisor_lattice_examples():
    D = divisor_lattice(30)
    assert len(D) == 8 and is_boolean(D)
    D = divisor_lattice(12)
    assert len(D) == 6 and not is_boolean(D)
    assert len(divisor_lattice(1)) == 1
    with pytest.raises(ValueError):
        divisor_lattice(0)


def test_cyclic_report_examples():
    assert cyclic_report(12) == (6, 3, False)
    assert cyclic_report(30) == (8, 3, True)
    assert cyclic_report(1) == (1, 0, True)


def test_divisor_lattices_up_to_200():
    for n in range(1, 201):
        D = divisor_lattice(n)
        tau, ell, sqf = cyclic_report(n)
        assert is_distributive(D)[0]
        assert len(D) == tau and length(D) == ell and is_boolean(D) == sqf


def test_distributive_implies_cyclic_examples():
    assert distributive_implies_cyclic_check(KLEIN)
    assert distributive_implies_cyclic_check(cyclic(8))
    assert is_distributive(subgroup_lattice(cyclic(8)).lattice)[0]
