import math

import pytest

import covering_codes as cc


def test_ball_volume_and_distance():
    assert cc.ball_volume(3, 4, 2) == 33
    assert cc.ball_volume(2, 300, 300) == 2**300
    assert cc.hamming_distance([0, 1, 2, 0], [0, 2, 1, 0]) == 2
    assert cc.index_word(2, 3, 7) == [1, 1, 1]
    assert cc.word_index(3, [2, 2, 2]) == 26
    assert sorted(cc.enumerate_ball(2, "00", 1)) == ["00", "01", "10"]


def test_verify_and_density():
    assert cc.verify_covering(2, 3, ["000", "111"], 1) is None
    assert cc.verify_covering(2, 3, ["000"], 1) == "011"
    assert cc.density(2, 4, ["0000", "1000", "0111", "1111"], 1) == (5, 4, 1.25)
    assert cc.sphere_covering_lower_bound(2, 4, 1) == 4


def test_solver():
    res = cc.minimal_covering_code(2, 5, 1)
    assert res["optimal_size"] == 7
    assert res["status"] == "optimal"
    assert res["density"]["exact"] == "21/16"


def test_construction_covers():
    x = 2 * math.log(2) + 2
    words, trace = cc.ksv_construct(2, 12, 2, x, 2.0, seed=7)
    assert cc.verify_covering(2, 12, words, 2) is None
    assert trace["total_size"] == len(words)
    top = trace["levels"][0]
    assert top["size"] == top["x_size"] * 2 ** top["r"] + top["n_bar_size"] * top["k2_size"]


def test_bounds():
    R = 6
    y = R * math.log(R) + 1
    x = R * math.log(y) + 2 * math.log(R)
    assert cc.feasibility(R, x, y) == pytest.approx(1 / 36, rel=1e-12)
    assert cc.theorem1_bound(R, x, y) <= cc.corollary_bound_new(R) < cc.corollary_bound_ksv(2, R)
    assert cc.theorem15_bound(R, x, y, 0, 1.0) == cc.theorem1_bound(R, x, y)
    holds, steps = cc.corollary2_chain_check(R)
    assert holds and steps["quoted"][2]
    _, _, best = cc.optimize_theorem1(R)
    assert best <= cc.theorem1_bound(R, x, y)
    assert cc.limit_lemma_bound(1.0, 0.5) == 2.0
    assert cc.bounds_table_csv(6, 6).startswith("R,t_feas,")


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        cc.theorem1_bound(3, 1.0, 2.0)
    with pytest.raises(ValueError):
        cc.verify_covering(2, 3, ["012"], 1)
    with pytest.raises(ValueError):
        cc.corollary_bound_new(5)
