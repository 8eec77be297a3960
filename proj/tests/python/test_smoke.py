import nlnum


def test_partition_operations():
    assert nlnum.conjugate([4, 2, 1]) == [3, 2, 1, 1]
    assert nlnum.meet([3], [2, 2]) == [2]
    assert nlnum.join([2], [1, 1]) == [2, 1]
    assert nlnum.sym_diff_size([3], [2, 1]) == 2
    assert nlnum.union_sorted([2, 1], [2]) == [2, 2, 1]
    assert nlnum.subpartitions_of_size([2, 1], 2) == [[2], [1, 1]]


def test_lr_and_nl_numbers():
    assert nlnum.lr_coefficient([3, 1], [4, 2, 1], [5, 4, 2]) == 2
    assert nlnum.standard_count([2, 1]) == 2
    assert nlnum.nl_number([2, 2], [2, 2], [2, 2]) == 2
    assert nlnum.nl_number([1], [1], [1]) == 0
    assert nlnum.nl_number([1], [1], []) == 1


def test_product_and_profile():
    product = dict((tuple(p), c) for p, c in nlnum.nl_product([3], [2, 1]))
    assert product[(3, 1)] == 2
    assert len(product) == 10
    assert nlnum.h_profile([2, 2], [2, 2]) == [1, 2, 6, 8, 6]
    assert nlnum.nl_pieri([1], 1) == [([], 1), ([1, 1], 1), ([2], 1)]


def test_second_route_agrees():
    assert nlnum.kt_product_via_schur([2, 1], [2, 2]) == nlnum.nl_product(
        [2, 1], [2, 2]
    )
    kt = dict((tuple(p), c) for p, c in nlnum.kt_to_schur([4, 2, 1]))
    assert kt == {
        (4, 2, 1): 1,
        (4, 1): -1,
        (3, 2): -1,
        (3, 1, 1): -1,
        (3,): 1,
        (2, 1): 1,
    }


def test_polytope_and_witnesses():
    assert nlnum.count_lattice_points([2, 2], [2, 2], [2, 2]) == 2
    assert nlnum.count_lattice_points([1], [1], [1]) == 0
    witnesses = nlnum.nl_witnesses([2, 2], [2, 2], [2, 2])
    assert len(witnesses) == 2
    assert all(mult == 1 for _, _, _, mult in witnesses)


def test_inequalities_and_analysis():
    assert nlnum.nl2_member([1, 1], [1, 1], [1, 1])
    assert not nlnum.nl2_member([1], [1], [1])
    assert nlnum.horn_holds([6], [4, 2, 2], [4, 4], 3)
    assert nlnum.extended_weyl_holds([6], [4, 2, 2], [4, 4], 3)
    assert nlnum.nl_number([6], [4, 2, 2], [4, 4]) == 0

    assert nlnum.is_nl_multiplicity_free([3], [2, 2, 2])
    assert not nlnum.is_nl_multiplicity_free([2, 1], [2, 1])
    assert nlnum.nl_function([1, 1], [1, 1], [1, 1], 8) == [1, 2, 2, 3, 3, 4, 4, 5]
    assert nlnum.kleber_rank(2, 2) == (4, 4)
    assert nlnum.detection_witness([3, 1]) == [2]
    assert nlnum.oscillating_count([2, 1], 3) == 2
