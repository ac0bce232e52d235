from fractions import Fraction

import pytest

import harmonic_knapsack as hk


def test_table_cells():
    assert hk.solve(12, Fraction(12, 11))["opt"] == Fraction(391, 231)
    assert hk.solve(10, hk.mu_for("refined", 10))["opt"] == Fraction(2525, 1491)
    assert hk.to_decimal(Fraction(31, 18)) == "1.72222222"


def test_string_and_int_inputs():
    assert hk.eval_fk(4, "4/3", "2/7") == Fraction(1, 3)
    assert hk.classify(4, "1.75", Fraction(1, 4)) == 4
    assert hk.score(4, "4/3", [1, 1, 0]) == Fraction(31, 18)
    assert hk.cost(4, "4/3", [1, 1, 0]) == Fraction(5, 6)


def test_sylvester_and_bracket():
    rows = hk.sylvester_table(7)
    assert [r for r, _ in rows] == [1, 2, 6, 42, 1806, 3263442, 10650056950806]
    b = hk.tinf_bracket(10)
    assert b["lower_decimal"] == b["upper_decimal"] == "1.691030206757254"
    assert b["upper"] - b["lower"] < Fraction(1, 10**75)


def test_solvers_agree():
    brute = hk.solve_brute(7, Fraction(7, 6))
    assert brute["opt"] == hk.solve_closed_form(7, Fraction(7, 6))["opt"]
    assert hk.greedy_solution(7, Fraction(7, 6))["z"] == [1, 1, 0, 0, 0, 0]
    assert len(hk.enumerate_feasible(3, 1)) == 5


def test_witness_and_packing():
    items = hk.build_witness(4, "4/3", [1, 1, 0], "1/100")
    assert sum(items) == 1
    assert items[:2] == [Fraction(101, 200), Fraction(101, 300)]
    packed = hk.harmonic_pack(3, "3/2", ["3/5", "3/5", "3/10", "3/10", "3/10"])
    assert packed["bins_used"] == 3
    assert packed["per_class_bins"] == {1: 2, 3: 1}
    adv = hk.adversarial_instance(4, "4/3", 10, "1/100", seed=5)
    assert sum(adv) == 10


def test_errors():
    with pytest.raises(ValueError):
        hk.solve_closed_form(3, "1/2")
    with pytest.raises(ValueError):
        hk.mu_for("caprara", 2)
    with pytest.raises(IndexError):
        hk.tinf_bracket(13)
