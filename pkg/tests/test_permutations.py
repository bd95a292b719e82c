import pickle

import hypothesis
import hypothesis.strategies as st
import pytest

from halfarc.permutations import (
    DomainMismatch,
    ElementCapExceeded,
    Permutation,
    PermGroup,
    all_normal_subgroups,
    center,
    centralizer,
    cyclic_group,
    describe_structure,
    dihedral_group,
    direct_product,
    generate_elements,
    is_normal,
    is_prime,
    minimal_normal_subgroups,
    normal_closure,
    orbits,
    point_stabilizer,
)


def permutations(size):
    return st.permutations(list(range(size))).map(Permutation)


@pytest.mark.parametrize(
    "number,expected",
    [(0, False), (1, False), (2, True), (3, True), (4, False), (9, False), (13, True)],
)
def test_is_prime(number, expected):
    assert is_prime(number) is expected


def test_invalid_images():
    with pytest.raises(ValueError) as excinfo:
        Permutation([0, 0, 1])
    assert "bijection" in str(excinfo.value)


def test_composition_is_left_to_right():
    first = Permutation.from_cycles(3, (0, 1))
    second = Permutation.from_cycles(3, (1, 2))
    product = first * second
    # 0 -> 1 -> 2
    assert product(0) == 2
    assert product == Permutation([2, 0, 1])


def test_domain_mismatch():
    with pytest.raises(DomainMismatch):
        Permutation.identity(3) * Permutation.identity(4)


def test_cycles_and_str():
    perm = Permutation.from_cycles(6, (0, 2, 4), (1, 3))
    assert perm.cycles() == [(0, 2, 4), (1, 3)]
    assert str(perm) == "(0 2 4)(1 3)"
    assert str(Permutation.identity(2)) == "()"
    assert perm.order() == 6
    assert perm.fixed_points() == [5]


def test_pickle_preserves_hash():
    perm = Permutation([2, 0, 1])
    copy = pickle.loads(pickle.dumps(perm))
    assert copy == perm
    assert hash(copy) == hash(perm)


@hypothesis.given(permutations(6), permutations(6), permutations(6))
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity(6)
    assert a.conjugate(b) == b.inverse() * a * b


@hypothesis.given(permutations(7), st.integers(min_value=-10, max_value=10))
def test_powers(perm, exponent):
    assert perm ** perm.order() == Permutation.identity(7)
    assert perm ** exponent * perm ** -exponent == Permutation.identity(7)


@hypothesis.given(st.lists(permutations(5), min_size=1, max_size=3))
def test_generated_order_divides_symmetric_group(generators):
    elements = generate_elements(generators)
    assert 120 % len(elements) == 0
    assert list(elements) == sorted(set(elements))


def test_element_cap():
    group = PermGroup(dihedral_group(10).generators, cap=10)
    with pytest.raises(ElementCapExceeded) as excinfo:
        group.order()
    assert excinfo.value.cap == 10
    assert "more than 10 elements" in str(excinfo.value)

    with pytest.raises(ElementCapExceeded):
        generate_elements(dihedral_group(10).generators, cap=19)
    assert len(generate_elements(dihedral_group(10).generators, cap=20)) == 20


def test_group_without_generators():
    with pytest.raises(ValueError):
        PermGroup([])
    trivial = PermGroup([], domain_size=3)
    assert trivial.order() == 1
    with pytest.raises(ValueError):
        minimal_normal_subgroups(trivial)


def test_subgroup_of_non_element():
    group = cyclic_group(4)
    with pytest.raises(ValueError):
        group.subgroup([Permutation.from_cycles(4, (0, 1))])


def test_dihedral_square():
    d4 = dihedral_group(4)
    assert d4.order() == 8
    normals = all_normal_subgroups(d4)
    assert len(normals) == 6
    assert [len(n) for n in normals] == [1, 2, 4, 4, 4, 8]
    assert all(is_normal(d4, n) for n in normals)

    minimal = minimal_normal_subgroups(d4)
    assert len(minimal) == 1
    assert minimal[0] == center(d4)
    assert len(center(d4)) == 2


def test_normal_closure_of_a_reflection():
    d5 = dihedral_group(5)
    reflection = Permutation((-x) % 5 for x in range(5))
    closure = normal_closure(d5, [reflection])
    assert closure == d5.as_subgroup()
    assert not is_normal(d5, d5.subgroup([reflection]))


def test_normal_closure_rejects_outsiders():
    with pytest.raises(ValueError):
        normal_closure(cyclic_group(3), [Permutation([1, 0, 2])])


def test_conjugacy_classes_of_s3():
    s3 = dihedral_group(3)
    sizes = sorted(len(c) for c in s3.conjugacy_classes())
    assert sizes == [1, 2, 3]


@pytest.mark.parametrize(
    "group,expected",
    [
        (cyclic_group(1), "trivial"),
        (cyclic_group(6), "cyclic"),
        (dihedral_group(3), "dihedral"),
        (dihedral_group(6), "dihedral"),
    ],
)
def test_describe_structure(group, expected):
    assert describe_structure(group.as_subgroup()) == expected


def test_direct_product():
    product = direct_product(cyclic_group(2), dihedral_group(3))
    assert product.group.order() == 12
    assert [len(f) for f in product.factors] == [2, 6]
    assert all(is_normal(product.group, f) for f in product.factors)
    assert product.factors[0].intersection(product.factors[1]).is_trivial()
    assert product.factors[0].join(product.factors[1]) == product.group.as_subgroup()
    assert centralizer(product.group, product.factors[1]) == product.factors[0]
    assert describe_structure(product.group.as_subgroup()) == "dihedral"


def test_orbits_and_stabilizers():
    product = direct_product(cyclic_group(2), cyclic_group(3))
    partition = orbits(product.group)
    assert partition.as_lists() == [[0, 1], [2, 3, 4]]
    assert orbits(product.group, domain=[4]).as_lists() == [[2, 3, 4]]
    assert len(point_stabilizer(product.group, 0)) == 3
    with pytest.raises(ValueError):
        point_stabilizer(product.group, 5)


def test_is_normal_requires_a_subgroup():
    big = dihedral_group(4)
    other = dihedral_group(4).subgroup([Permutation.from_cycles(4, (0, 2))])
    with pytest.raises(ValueError):
        is_normal(cyclic_group(4), other)
    assert is_normal(big, other) is False


def test_subgroup_conjugate():
    d4 = dihedral_group(4)
    reflection = d4.subgroup([Permutation.from_cycles(4, (1, 3))])
    rotation = Permutation([1, 2, 3, 0])
    conjugate = reflection.conjugate(rotation)
    assert conjugate != reflection
    assert len(conjugate) == 2
    assert conjugate.conjugate(rotation) == reflection


def minimal_by_brute_force(group):
    nontrivial = [n for n in all_normal_subgroups(group) if not n.is_trivial()]
    return sorted(
        (n for n in nontrivial if not any(o != n and o.issubset(n) for o in nontrivial)),
        key=lambda n: n.sort_key(),
    )


def check_minimal_normals_of_products(r, s):
    for second in (cyclic_group(s), dihedral_group(s)):
        product = direct_product(dihedral_group(r), second)
        group = product.group
        minimal = minimal_normal_subgroups(group)
        assert minimal == minimal_by_brute_force(group)
        central = center(group)
        for subgroup in minimal:
            assert is_prime(len(subgroup))
            assert describe_structure(subgroup) == "cyclic"
            inside_factor = any(subgroup.issubset(f) for f in product.factors)
            central_involution = (
                len(subgroup) == 2 and subgroup.issubset(central) and r % 2 == 0 and s % 2 == 0
            )
            assert inside_factor or central_involution


@pytest.mark.parametrize("r", range(3, 7))
@pytest.mark.parametrize("s", range(3, 7))
def test_minimal_normals_of_dihedral_products(r, s):
    check_minimal_normals_of_products(r, s)


@pytest.mark.slow
@pytest.mark.parametrize("r", range(3, 13))
@pytest.mark.parametrize("s", range(3, 13))
def test_minimal_normals_of_larger_dihedral_products(r, s):
    check_minimal_normals_of_products(r, s)
