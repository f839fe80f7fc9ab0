import pytest

import lcubes


def box(*intervals):
    return {"intervals": [{"lo": lo, "hi": hi} for lo, hi in intervals]}


GRID = {
    "dim": 2,
    "cubes": [
        box(("0", "1/2"), ("0", "1/2")),
        box(("0", "1/2"), ("1/2", "1")),
        box(("1/2", "1"), ("0", "1/2")),
        box(("1/2", "1"), ("1/2", "1")),
    ],
}


def test_round_trip_random_word():
    word = lcubes.gen_word(seed=42)
    config = lcubes.eval_word(word)
    factored = lcubes.factor(config)
    assert lcubes.eval_word(factored) == config
    assert lcubes.word_equal(word, factored)[0]


def test_grid_is_decomposable():
    assert lcubes.is_decomposable(GRID)
    assert lcubes.brute_force_decomposable(GRID)


def test_pinwheel_and_its_contraction():
    pin = lcubes.gen_config(dim=2, j=4, pinwheel=True)
    result = lcubes.factor(pin)
    assert result["decomposable"] is False
    assert not lcubes.brute_force_decomposable(pin)
    assert lcubes.threshold(pin, grid=2)["threshold"] == "1/2"
    assert lcubes.is_decomposable(lcubes.contract(pin, "1/2"))
    with pytest.raises(lcubes.ThresholdNotFound):
        lcubes.threshold(pin, grid=1)


def test_invalid_input_raises_value_error():
    bad = {"dim": 2, "cubes": [box(("1/2", "1/4"), ("0", "1"))]}
    with pytest.raises(ValueError):
        lcubes.factor(bad)
    with pytest.raises(ValueError):
        lcubes.contract(GRID, "1")


def test_normal_form_and_svg():
    word = lcubes.gen_word(seed=3, max_generators=4)
    config = lcubes.eval_word(word)
    if len(config["cubes"]) >= 2:
        assert lcubes.eval_word(lcubes.normalize_gen_pos(word)) == config
    svg = lcubes.render_svg(GRID)
    assert svg.startswith("<?xml") or svg.startswith("<svg")
    assert svg.count('class="strip-block1"') == 2


def test_suites_pass():
    assert "roundtrip" in lcubes.suite_names()
    report = lcubes.run_suite("algebra", trials=50)
    assert report["passed"]
