import pytest

import mtasep


def test_steady_three_sites():
    w = mtasep.steady([1, 1, 1])
    assert w == {"012": 2, "021": 1, "102": 1, "120": 2, "201": 2, "210": 1}


def test_methods_agree_on_four_sites():
    fm = mtasep.steady([1, 1, 1, 1], method="fm")
    assert fm["0123"] == 9 and fm["0132"] == 3
    assert mtasep.steady([1, 1, 1, 1], method="mpf") == fm
    assert mtasep.steady([1, 1, 1, 1], method="kernel") == fm


def test_mass_is_number_of_multiline_states():
    # levels (1, 2) on four sites: C(4,1) * C(4,2)
    assert sum(mtasep.steady([2, 1, 1]).values()) == 24


def test_bad_input():
    with pytest.raises(ValueError):
        mtasep.steady([1, 0, 1])
    with pytest.raises(ValueError):
        mtasep.steady([1, 1, 1], method="simulation")
    with pytest.raises(mtasep.BudgetExceeded):
        mtasep.steady([1, 1, 1, 1], budget=10)


def test_combinatorial_r():
    assert mtasep.apply_r("1100100100", "0010111110") == ("1110110100", "0000101110")
    assert mtasep.ybe_check(1, 2, 2, 4)


def test_quantum_r_entry():
    table = mtasep.rmatrix(1, 2, 3)
    assert len(table) == 15
    assert table[("001", "110", "001", "110")] == "q + q^2*z"


def test_projection_and_operators():
    assert mtasep.pi("000010,001010,001011") == "0,0,2,0,3,1"
    assert mtasep.x_operator(1, 2) == "1 * K\n"
    assert all(all(row) for row in mtasep.hat_check(3))
    assert mtasep.conjecture_check([1, 1, 1], 1)["ok"]
