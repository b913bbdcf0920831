"""Smoke tests for the gtcodes extension module.

Runnable directly (python3 test_smoke.py) or under pytest.
"""

import gtcodes as gt


def test_builtin_codes():
    eq8 = gt.builtin("eq8")
    assert isinstance(eq8, gt.BinaryCode)
    assert (eq8.num_rows, eq8.num_cols) == (9, 12)
    assert eq8.column(2) == "111000000"
    assert gt.BinaryCode.from_text(eq8.to_text()) == eq8

    c4 = gt.builtin("c4")
    assert isinstance(c4, gt.QaryCode)
    assert (c4.num_rows, c4.num_cols, c4.alphabet_size) == (3, 8, 4)


def test_construction_pipeline():
    inner = gt.trivial_code(4, 2, 2)
    assert (inner.num_rows, inner.num_cols) == (6, 4)
    cat = gt.concatenate(gt.builtin("c4"), inner)
    assert (cat.num_rows, cat.num_cols) == (18, 8)
    slim = gt.dedupe_rows(cat)
    assert (slim.num_rows, slim.num_cols) == (14, 8)
    assert gt.is_superimposed_sl(slim, 2, 2).holds

    big = gt.rs_concatenation(2, 2, 1, 5, gt.trivial_code(5, 2, 2))
    assert (big.num_rows, big.num_cols) == (50, 25)


def test_reed_solomon():
    code, params = gt.reed_solomon(5, 1)
    assert (params.q, params.k, params.n, params.d) == (5, 2, 6, 5)
    assert gt.min_distance(code) == 5
    assert gt.is_mds(code, 2).holds
    assert gt.mds_implies_separating(5, 2, 5, 2, 2)
    assert gt.is_separating(gt.take_rows(code, 5), 2, 2).holds


def test_verification_reports():
    eq8 = gt.builtin("eq8")
    report = gt.is_superimposed(eq8, 2)
    assert report.holds and bool(report)
    assert report.checked == 804
    assert report.verdict_line().startswith("HOLDS superimposed(s=2)")

    bad = gt.BinaryCode.from_text("2 2\n11\n11\n")
    failed = gt.is_superimposed(bad, 1)
    assert not failed.holds
    assert "witness" in failed.verdict_line()

    spot = gt.spot_check_sl(eq8, 1, 1, 500, 7)
    assert spot.holds and spot.mode == "randomized"


def test_models_and_decoding():
    eq8 = gt.builtin("eq8")
    r = gt.result_disjunct(eq8, [0, 1])
    assert gt.decode_disjunct(eq8, r, 2) == [0, 1]

    assert gt.result_inhibitor(eq8, [2], [4]) == "011000000"
    assert gt.decode_inhibitor(eq8, "011000000", 1, 1) == [2]

    slim = gt.dedupe_rows(gt.concatenate(gt.builtin("c4"),
                                         gt.trivial_code(4, 2, 2)))
    rc = gt.result_superset(slim, [[0, 1]])
    assert gt.decode_superset(slim, rc, 2, 2) == [[0, 1]]

    for p, i in gt.enumerate_pi(6, 2, 1):
        ident = gt.identity_code(6)
        ri = gt.result_inhibitor(ident, p, i)
        assert gt.decode_inhibitor(ident, ri, 2, 1) == p


def test_enumeration_counts():
    assert len(gt.enumerate_defective_sets(12, 2)) == 79
    assert len(gt.enumerate_complexes(4, 2, 2)) == 44
    assert len(gt.enumerate_pi(12, 1, 1)) == 144


def test_errors():
    try:
        gt.trivial_code(3, 2, 2)
        raise AssertionError("expected DomainError")
    except gt.DomainError:
        pass
    try:
        gt.BinaryCode.from_text("2 2\n1\n11\n")
        raise AssertionError("expected FormatError")
    except gt.FormatError:
        pass
    assert issubclass(gt.DomainError, ValueError)
    assert issubclass(gt.FormatError, ValueError)


def main():
    tests = [value for name, value in sorted(globals().items())
             if name.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
