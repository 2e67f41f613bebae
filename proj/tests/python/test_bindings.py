import pytest

import mdhomology as mdh

THETA = {"vertices": ["u", "v"],
         "edges": [{"u": "u", "v": "v", "sigma": "1"}, {"u": "u", "v": "v", "sigma": "5"},
                   {"u": "u", "v": "v", "sigma": "5"}]}


def uniform(word, beta, alpha):
    letters = sorted(set(word), key=word.index)
    return {"beta": str(beta), "word": word, "spectra": {x: [str(alpha)] for x in letters}}


def test_theta_inner_profile():
    p = mdh.inner_profile(THETA)
    assert p == {"intervals": [{"from": "1", "to": "5", "rank": 1}, {"from": "5", "to": "inf", "rank": 2}],
                 "at_infinity": 2}
    assert mdh.mdh_inner(THETA, "2") == 1
    assert mdh.mdh_inner(THETA, "inf") == 2
    assert mdh.mdh_inner(THETA, "3/2", degree=3) == 0
    assert mdh.link_betti(THETA) == (1, 2)


def test_quotient_matches_inner():
    for b in ["1", "2", "5"]:
        assert mdh.quotient_rank(THETA, b)[0] == mdh.mdh_inner(THETA, b)


def test_reduction_and_simplify():
    r = mdh.b_reduce(THETA, "2")
    assert sorted(r["complex"]["vertices"]) == ["w", "w1"]
    assert [s["operation"] for s in r["trace"]["steps"]] == ["B_b"]
    path = {"vertices": ["a", "b", "c"],
            "edges": [{"u": "a", "v": "b", "sigma": "2"}, {"u": "b", "v": "c", "sigma": "3"}]}
    s = mdh.simplify(path)
    assert len(s["edges"]) == 1 and s["edges"][0]["sigma"] == "2"
    assert mdh.is_isomorphic(THETA, THETA)


def test_errors_are_typed():
    bad = {"vertices": ["a"], "edges": [{"u": "a", "v": "a", "sigma": "2"}]}
    with pytest.raises(mdh.InputError):
        mdh.inner_profile(bad)
    with pytest.raises(mdh.DomainError):
        mdh.mdh_inner(THETA, "2", degree=-1)
    with pytest.raises(mdh.MdhError):
        mdh.make_gluing_word(1)


def test_snake_names():
    assert mdh.validate_snake_name("x1 x2 x1 x3 x2 x3") == []
    assert mdh.validate_snake_name(["x1", "x1", "x2", "x2"])[0]["kind"] == "consecutive repeat"
    assert mdh.make_gluing_word(3) == ["x1", "x2", "x1", "x3", "x2", "x3"]
    assert mdh.node_counts(mdh.make_gluing_word(5)) == (5, 10)


def test_outer_profiles():
    w2 = uniform(["x1", "x2", "x1", "x2"], 1, 2)
    p = mdh.outer_profile(snake=w2)
    assert p == mdh.mdh1_basic_snake(w2)
    assert mdh.rank_at(p, "3/2") == 2 and mdh.rank_at(p, 2) == 0
    t = mdh.build_target_snake([1, 3], ["2", "3"], 1)
    assert t["expected"] == t["oracle"]
    assert [r["rank"] for r in t["expected"]["intervals"]] == [3, 1, 0]


def test_realization_tords():
    bubble = mdh.realize_bubble_snake(1, 2)
    arcs = {a["name"]: a["terms"] for a in bubble["arcs"]}
    assert mdh.tord(arcs["gamma1"], arcs["gamma2"]) == "2"
    assert abs(mdh.tord_numeric(arcs["gamma1"], arcs["gamma2"]) - 2.0) < 0.05
    nb = mdh.realize_nonsnake_bubble(2, 1, ["2", "3"])
    assert nb["dimension"] == 9 and len(nb["arcs"]) == 9


def test_certificate():
    x = uniform(["x1", "x2", "x3", "x1", "x4", "x3", "x2", "x4"], 1, 2)
    y = uniform(["x1", "x2", "x1", "x2", "x3", "x1", "x3"], 1, 2)
    assert mdh.weak_equiv_same_homology(x, y)["verdict"] == "not-guaranteed"
    assert mdh.weak_equiv_same_homology(x, x)["verdict"] == "guaranteed-equal"
    assert mdh.outer_profile(snake=x) == mdh.outer_profile(snake=y)
