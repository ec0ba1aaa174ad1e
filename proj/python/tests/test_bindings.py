from fractions import Fraction

import pytest

import growthcodes as gc


def test_seed_code_parameters():
    for q in (2, 3):
        for i in range(2, 5):
            code = gc.seed_code(i, q)
            assert (code.length, code.dimension) == (2 * i, 2 * i - 1)
            assert code.verified_distance == 1
            assert gc.check_bounded(code, 2 * i - 1)["bounded"]


def test_seed_matrix_small():
    assert gc.seed_matrix(1, 2) == [[0, 1], [1, 0]]
    assert gc.seed_matrix(2, 3)[0] == [0, 2, 1, 2]


def test_family_chain_distances():
    want = [1, 4, 20, 120, 840, 6720]
    for j, d in enumerate(want):
        member = gc.family_code(2, j, q=3)
        assert member["d"] == d
        assert member["code"].verified_distance == d


def test_construction_step_lower_bound():
    code = gc.LinearCode(2, [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 0], [0, 1, 0, 1, 0, 1]])
    d = code.min_distance()
    nxt = gc.construction_step(code)
    assert nxt.length == 24 and nxt.dimension == 4
    assert nxt.min_distance(workers=2) >= 3 * d


def test_big_numbers_are_python_types():
    s = gc.series_params(3)
    assert isinstance(s["n"], int) and s["n"] > 2**64
    assert s["kd_over_n"] == Fraction(6)
    assert s["alternate_kd_over_n"] == Fraction(9, 2)
    p = gc.predict_params(4, 3, 1, 3, 5)
    assert (p["n"], p["k"], p["d"], p["u"]) == (26880, 8, 6720, 7560)
    assert p["d_exact"]
    assert gc.rm_third(6)["kd_over_n"] == Fraction(21, 4)


def test_reed_muller():
    code = gc.rm_generator(5, 2)
    assert (code.length, code.dimension, code.min_distance()) == (32, 16, 8)
    assert gc.rm_params(7, 3)["kd_over_n"] == 8


def test_text_round_trip():
    code = gc.family_code(2, 1)["code"]
    assert gc.LinearCode.from_text(code.to_text()) == code


def test_errors():
    with pytest.raises(gc.DependentBasis):
        gc.LinearCode(2, [[1, 1], [1, 1]])
    with pytest.raises(gc.CompositeModulus):
        gc.LinearCode(4, [[1, 1]])
    with pytest.raises(gc.RangeViolation):
        gc.family_code(2, 6)
    with pytest.raises(gc.BudgetExceeded):
        gc.LinearCode.from_text(gc.seed_code(6, 3).to_text()).min_distance(budget=10)
    with pytest.raises(gc.UnknownFamily):
        gc.growth_table("nope")
    assert issubclass(gc.BudgetExceeded, gc.GrowthCodesError)


def test_growth_and_theorem_main():
    csv = gc.growth_table("seed-series", 1, 3, verify=False)
    rows = [line.split(",") for line in csv.strip().splitlines()]
    assert rows[0][:3] == ["family", "index", "n"]
    assert [r[6] for r in rows[1:]] == ["2", "4", "6"]
    assert all(holds for _, _, holds in gc.theorem_main_check(50))


def test_run_cli_in_process():
    code, out, err = gc.run_cli(["seed-matrix", "--i", "1", "--field", "2"])
    assert (code, out, err) == (0, "2 2 2\n0 1\n1 0\n", "")
    code, _, err = gc.run_cli(["growth", "--family", "nope"])
    assert code == 2 and "nope" in err
