from fractions import Fraction

import pytest

import qcramer

A = [["1", "i", "j"], ["-k", "i", "1"], ["k", "j", "-i"], ["j", "-1", "i"]]
B = [["i", "1", "j"], ["j", "k", "-i"]]
D = [["1", "i", "j"], ["k", "0", "i"], ["1", "j", "0"], ["0", "k", "i"]]

X_LS = [
    ["1/18+5/72i+1/36j-1/72k", "-1/72-1/36i+5/72j-1/18k"],
    ["1/72+1/72i-1/36j-1/36k", "-1/36+1/36i+1/72j-1/72k"],
    ["1/36-1/24i-1/24j", "1/24i-1/24j-1/36k"],
]


def test_two_by_two_row_and_column_determinants():
    a = [["i", "j"], ["1", "k"]]
    # rdet_1 = ad - bc, cdet_1 = da - bc
    assert qcramer.rdet(a, 1) == "-2j"
    assert qcramer.cdet(a, 1) == "0"
    assert qcramer.rdet(a, 2) == "0"
    assert qcramer.cdet(a, 2) == "-2j"


def test_hermitian_det_matches_gram():
    h = [["2", "i"], ["-i", "3"]]
    assert qcramer.hermitian_det(h) == "5"
    assert qcramer.gram_det([["1", "j"]]) == "0"
    assert qcramer.ddet([["i", 0], [0, (0, 0, 2, 0)]]) == "4"


def test_pinv_agrees_with_oracle_and_penrose():
    a = [["1", "i"], ["j", "k"], ["1+i", "0"]]
    for route in ("auto", "cdet", "rdet"):
        x = qcramer.pinv(a, route=route)
        assert x == qcramer.pinv_oracle(a)
        assert qcramer.check_penrose(a, x) == [True, True, True, True]


def test_zero_candidate_fails_third_condition():
    a = [["1", "i"], ["j", "k"]]
    assert qcramer.check_penrose(a, [["0", "0"], ["0", "0"]])[2] is False


def test_reference_solve_both_routes():
    for route in ("dB", "dA"):
        rep = qcramer.solve_axb_d(A, B, D, route=route)
        assert rep["solution"] == X_LS
        assert rep["route"].endswith(route)
        assert rep["rank_a"] == 2 and rep["rank_b"] == 1


def test_float_backend_close_to_exact():
    rep = qcramer.solve_axb_d(A, B, D, scalar="float64")
    for row_f, row_q in zip(rep["solution"], X_LS):
        for f, q in zip(row_f, row_q):
            got = qcramer.components(f, "float64")
            want = qcramer.components(q)
            assert got == pytest.approx([float(c) for c in want], abs=1e-12)


def test_ax_b_and_xa_b():
    a = [["1", "i"], ["j", "-k"]]  # second row is j times the first
    b = [["1"], ["j"]]
    rep = qcramer.solve_ax_b(a, b)
    assert rep["rank_a"] == 1
    rep2 = qcramer.solve_xa_b(a, [["1", "0"]])
    assert len(rep2["solution"]) == 1 and len(rep2["solution"][0]) == 2


def test_components_parses_canonical_strings():
    assert qcramer.components("1/18+5/72i+1/36j-1/72k") == (
        Fraction(1, 18), Fraction(5, 72), Fraction(1, 36), Fraction(-1, 72))
    assert qcramer.components("-k") == (0, 0, 0, -1)


def test_errors_carry_kind():
    with pytest.raises(qcramer.QcramerError) as info:
        qcramer.rdet([["1", "2"]], 1)
    assert info.value.kind == "shape_mismatch"
    with pytest.raises(qcramer.QcramerError) as info:
        qcramer.pinv_oracle([["1"]], mode="limit", scalar="rational")
    assert info.value.kind == "unsupported_mode"
