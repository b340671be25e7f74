"""Smoke tests for the _wcifano extension module.

Run from the repository root (the database is loaded from its default
relative location); the build directory containing _wcifano*.so must be on
PYTHONPATH.
"""

import _wcifano as w

DB = "data/families.json"


def test_degrees_and_classification():
    assert w.anticanonical_degree([1, 1, 4, 5, 6, 6], [10, 12]) == "1/6"
    assert w.anticanonical_degree([1, 5, 6, 7, 9, 11], [18, 20]) == "4/231"
    assert w.classify([1, 1, 4, 5, 6, 6], [10, 12]) == "F(i)"
    assert w.classify([1, 3, 4, 7, 10, 17], [20, 21]) == "F(ii)"


def test_basket_and_distinguished():
    basket = sorted(w.compute_basket([1, 2, 3, 4, 5, 8], [10, 12]))
    assert basket == [(2, 1, 3), (4, 1, 1), (8, 3, 1)]
    cfgs = w.detect_distinguished([1, 2, 3, 4, 5, 8], [10, 12])
    assert cfgs == [(5, 1, 3, 2, 4)]


def test_quasismoothness_predicates():
    assert w.quasismooth_hypersurface(14, [1, 2, 5, 6, 7, 9])
    assert not w.quasismooth_hypersurface(6, [1, 2, 3, 7])
    assert w.quasismooth_ci([1, 1, 4, 5, 6, 6], [10, 12])
    assert not w.quasismooth_ci([1, 1, 4, 5, 6, 6], [10, 13])
    assert w.wellformed([1, 2, 5, 6, 7, 9], [14])
    assert not w.wellformed([2, 2, 3], [])


def test_combinatorics():
    assert not w.semigroup_contains(4, 6, 5)
    assert w.semigroup_contains(4, 6, 10)
    assert w.semigroup_min_multiple(4, 6, 5) == 2
    assert w.monomials_of_degree(10, [4, 6, 6]) == [[1, 0, 1], [1, 1, 0]]
    assert w.isolating_by_projection([1, 2, 5, 6, 7, 9], 1) == 18


def test_certification():
    res = w.load_and_certify(DB, 42)
    assert res["certified"]
    assert res["verdict"] == "lct_equals_1"
    assert res["open_points"] == []

    res57 = w.load_and_certify(DB, 57)
    assert res57["certified"]
    assert res57["verdict"] == "lct_on_Xcirc_equals_1"
    assert len(res57["open_points"]) == 2

    everything = w.certify_all(DB)
    assert len(everything) == 29
    assert all(r["certified"] for r in everything)
    verdicts = [r["verdict"] for r in everything]
    assert verdicts.count("lct_equals_1") == 11


def test_lxy_mult():
    assert w.lxy_mult(DB, 56, "p_u") == 4
    assert w.lxy_mult(DB, 68, "p_s") == 3
    assert w.lxy_mult(DB, 68, "p_s", "11") == 3


def test_superrigid():
    rep = w.superrigid(DB, "14;1,2,5,6,7,9")
    assert rep["certified"]
    assert rep["family"] == 66
    try:
        w.superrigid(DB, "10;1,1,1,1,1,1")
    except RuntimeError:
        pass
    else:
        raise AssertionError("nonpositive complementary degree must raise")


def test_validate_and_falsify():
    assert w.validate_db(DB) == []
    rep = w.falsify_quasismooth([1, 1, 4, 5, 6, 6], [10, 13])
    assert rep["definite"]
    assert "edge" in rep["witness"]
    clean = w.falsify_quasismooth([1, 1, 4, 5, 6, 6], [10, 12])
    assert not clean["definite"]


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
