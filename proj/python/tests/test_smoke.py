import pytest

import pysuperstring as ss


def test_words():
    w = ss.nice_rotation("ab")
    assert w["word"] == "ba"
    assert w["alpha"] == 1
    assert ss.nice_rotation("aabab")["kind"] == "min"
    assert ss.overlap("aab", "aba") == "ab"
    with pytest.raises(ValueError):
        ss.nice_rotation("abab")


def test_normalize_and_matrix():
    assert ss.normalize(["ab", "ab", "ba"]) == ["ab", "ba"]
    assert ss.overlap_matrix(["abc", "bcd", "cde"]) == [[0, 2, 1], [0, 0, 2], [0, 0, 0]]


@pytest.mark.parametrize("algo", ["combined", "s1", "s2", "greedy", "exact"])
def test_solve(algo):
    r = ss.solve(["abc", "bcd", "cde"], algo=algo)
    assert r["length"] == len(r["superstring"])
    assert r["length"] == (5 if algo in ("exact", "greedy") else 6)
    assert ss.validate(["abc", "bcd", "cde"], r["superstring"])


def test_solve_maps_order_to_input():
    r = ss.solve(["b", "cde", "abc", "bcd"], algo="exact")
    assert r["order"] == [2, 3, 1]


def test_solver_limit():
    with pytest.raises(ss.SolverLimitExceeded):
        ss.solve(["ax", "by", "cz"], algo="exact", exact_limit=2)
    with pytest.raises(ValueError):
        ss.solve(["ab"], algo="nope")


def test_max_path():
    assert ss.max_path([[0, 5], [3, 0]]) == {"order": [0, 1], "weight": 5, "solver": "exact"}
    assert ss.max_path([[0, 5], [3, 0]], solver="half")["weight"] == 5


def test_generators():
    a, b = ss.gen_tight2(1)
    assert (len(a), len(b)) == (15, 9)
    assert len(ss.overlap(a, b)) == 9
    assert len(ss.gen_tight3(2)) == 3
    assert ss.gen_greedy(6)[:3] == ["abbab", "bbaabba", "aabbbaabb"]


def test_verify():
    r = ss.verify("tight")
    assert r["failed"] == 0
    assert r["checks"]["tight2_gap"]["run"] == 64
    p1 = ss.verify("pairs", trials=200, seed=3)
    p2 = ss.verify("pairs", trials=200, seed=3, workers=2)
    assert p1 == p2
    assert p1["failed"] == 0
