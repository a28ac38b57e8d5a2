import pytest

import fmc


def test_h_poly():
    assert fmc.h_poly(3, 2) == [0, 1, 4, 1]
    assert fmc.sigma(2, 2) == [0, 1, 1, 1]


def test_egf_matches_recurrence():
    series = fmc.egf_solve(6, 3)
    assert series[0] == []
    for n in range(1, 7):
        assert series[n] == fmc.h_poly(n, 3)


def test_big_coefficients_are_python_ints():
    coeffs = fmc.h_poly(14, 4)
    assert max(coeffs) > 2**63
    assert all(isinstance(c, int) for c in coeffs)


def test_decomposition_and_nests_agree():
    for n in range(1, 5):
        table = fmc.multiplicity_table(n, 2)
        assert table == fmc.brute_bivariate(n, 2)
    assert fmc.decompose_formal(2, 3) == [(2, 0, 1), (1, 1, 1), (1, 2, 1)]
    assert fmc.x3_oracle(2) == fmc.decompose_formal(3, 2)


def test_nests():
    nests = fmc.enumerate_nests(3)
    assert len(nests) == 8
    components, sons = fmc.nest_stats(3, [[1], [2], [3], [1, 2], [1, 2, 3]])
    assert components == 1
    assert sons == [([1, 2], 2), ([1, 2, 3], 2)]
    with pytest.raises(fmc._core.BudgetExceeded):
        fmc.enumerate_nests(8)


def test_betti():
    assert fmc.betti_of_fm([1, 0, 1, 0, 1], 2, 2) == [1, 0, 3, 0, 4, 0, 3, 0, 1]
    assert fmc.kunneth_rational([1, 0, 1], 2) == [1, 0, 2, 0, 1]


def test_verify():
    overall, checks = fmc.verify(3, 2)
    assert overall
    assert all(c["pass"] for c in checks)


def test_invalid_input():
    with pytest.raises(ValueError):
        fmc.h_poly(0, 2)
