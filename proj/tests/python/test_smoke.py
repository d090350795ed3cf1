import pytest

import realbott as rb

KLEIN = rb.BottMatrix.parse("2\n01\n00")


def test_parse_and_invariants():
    assert KLEIN.key == "1"
    assert rb.type_signature(KLEIN) == [1, 1]
    assert not rb.is_orientable(KLEIN)
    zero = rb.BottMatrix(3)
    assert rb.type_signature(zero) == [3]
    assert rb.is_orientable(zero)


def test_parse_rejects_lower_triangle():
    with pytest.raises(ValueError, match="line 3"):
        rb.BottMatrix.parse("2\n01\n10")


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 12)])
def test_class_counts(n, count):
    classes = rb.classify(n)
    assert len(classes) == count
    assert sum(c["member_count"] for c in classes) == 2 ** (n * (n - 1) // 2)


def test_isomorphism_witness_round_trip():
    a = rb.BottMatrix.from_key(3, "101")
    b = rb.BottMatrix.from_key(3, "111")
    p = rb.find_isomorphism(a, b)
    assert p is not None
    assert rb.is_isomorphism(a, b, p)
    assert rb.find_isomorphism(rb.BottMatrix(2), KLEIN) is None


def test_group_words_match_motions():
    assert rb.word_multiply(KLEIN, [0, 1], [1, 0]) == [1, -1]
    signs, t2 = rb.evaluate(KLEIN, [1, 0])
    assert signs == [1, -1] and t2 == [1, 0]
    assert rb.commutation_relations_hold(KLEIN)
    assert rb.freeness_check(KLEIN, 3)
    assert rb.extension_cocycle(KLEIN)[(2, 1)] == [0, 1]


def test_rho_and_cohomology():
    result = rb.rho_check(rb.BottMatrix.from_key(3, "101"), rb.BottMatrix.from_key(3, "111"))
    assert result["ok"] and result["det_q"] % 2 == 1
    assert rb.h2_of_character(1, 0) == (0, [2])
    assert rb.h2_of_character(1, 1) == (0, [])
    assert rb.verify_appendix(2)


def test_cli_in_process():
    code, out, _ = rb.run_cli(["classify", "--dim", "3", "--format", "json"])
    assert code == 0 and '"dim":3' in out
    code, _, _ = rb.run_cli(["classify", "--dim", "0"])
    assert code == 2
