import simpson2x2 as sp


def test_blyth_reversal():
    t1 = (1000, 9000, 50, 950)
    t2 = (95, 5, 5000, 5000)
    assert sp.case_of(t1, t2) == 3
    assert sp.sp(t1, t2) == "SP1"
    report = sp.analyze(t1, t2)
    assert report["case"] == 3
    assert report["class"] == "Paradox"
    assert report["sp"]["verdict"] == "SP1"
    assert report["sp"]["via_odds_ratio"] == "SP1"
    assert report["quantities"]["mu"]["num"] == "219"
    assert report["quantities"]["mu"]["den"] == "2020"


def test_string_entries_are_exact():
    t1 = ("1/2", "0.25", "3", "7/5")
    t2 = (1, 1, 1, 1)
    report = sp.analyze(t1, t2)
    assert report["input"]["t1"]["a"] == "1/2"
    assert report["input"]["t1"]["b"] == "1/4"


def test_representatives_cover_all_cases():
    for c in range(1, 28):
        t1, t2 = sp.representative(c)
        assert sp.case_of(t1, t2) == c


def test_corpus_and_enumeration():
    corpus = sp.literature_corpus()
    assert [e["id"] for e in corpus] == [
        "simpson1951",
        "blyth1971",
        "gardner1976",
        "lindley_novick1981",
        "hand1994",
    ]
    for e in corpus:
        assert sp.case_of(e["t1"], e["t2"]) == e["expected_case"]
    assert sp.pair_count(2) == 256


def test_toggling_and_random_are_deterministic():
    seq = sp.toggling_sequence(8)
    assert len(seq) == 8
    assert sp.case_of(*seq[0]) == 3
    assert sp.case_of(*seq[1]) == 1
    assert sp.random_pair(7, 9) == sp.random_pair(7, 9)


def test_bad_input_raises():
    import pytest

    with pytest.raises(ValueError):
        sp.case_of((0, 1, 1, 1), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        sp.analyze(("1/0", 1, 1, 1), (1, 1, 1, 1))
