"""Exact-arithmetic bound checkers and parameter families."""

import pytest

from qdscodes.bounds import (
    CodeParams,
    ceil_log2,
    conjectured_bound,
    impure_bound,
    pure_only_families,
    qds_hamming,
    qds_hamming_d3,
    quantum_hamming,
    region_table,
)
from qdscodes.errors import PreconditionError


def test_ceil_log2():
    assert [ceil_log2(x) for x in (1, 2, 3, 4, 63, 64, 65, 505)] == [0, 1, 2, 2, 6, 6, 7, 9]
    with pytest.raises(PreconditionError):
        ceil_log2(0)


def test_qds_hamming_examples():
    assert qds_hamming(CodeParams(7, 1, d=3)) is True  # 28 <= 64
    assert qds_hamming(CodeParams(5, 1, d=3)) is False  # 20 > 16
    assert qds_hamming(CodeParams(9, 1, d=1)) is True  # t = 0: 1 <= 2^m
    with pytest.raises(PreconditionError):
        qds_hamming(CodeParams(9, 1, d=4))


def test_qds_hamming_d3_reduction():
    # the general sum at d=3, l=0 equals the closed inequality 4n-k+1 <= 2^(n-k)
    for n in range(3, 40):
        for k in range(1, n):
            assert qds_hamming_d3(n, k) == (4 * n - k + 1 <= 2 ** (n - k))


def test_qds_hamming_d3_verdicts():
    assert qds_hamming_d3(5, 1) is False  # 20 > 16
    assert qds_hamming_d3(6, 1) is True  # 24 <= 32
    assert qds_hamming_d3(7, 1) is True
    assert qds_hamming_d3(8, 3) is True  # 30 <= 32


def test_qds_hamming_with_redundancy():
    # adding measurements enlarges the left side while 2^m is fixed
    assert qds_hamming(CodeParams(5, 1, d=3, l=0)) is False
    assert qds_hamming(CodeParams(7, 1, d=3, l=1)) is True  # 29 <= 64
    base = CodeParams(10, 2, d=3, l=0)
    widened = CodeParams(10, 2, d=3, l=5)
    assert qds_hamming(base) and qds_hamming(widened)


def test_quantum_hamming_examples():
    assert quantum_hamming(9, 1) is True  # 2^8 >= 28
    assert quantum_hamming(21, 15) is True  # equality: 2^6 = 64 = 3*21+1
    assert quantum_hamming(21, 16) is False
    assert quantum_hamming(5, 1) is True  # the perfect code sits at equality


def test_impure_bound_examples():
    assert impure_bound(22, 15) is True  # 74 <= 128
    assert impure_bound(21, 15) is False  # 70 > 64
    assert impure_bound(19, 12) is True  # 65 <= 128
    assert impure_bound(9, 1) is True  # Shor code is impure


def test_conjectured_bound_examples():
    assert conjectured_bound(22, 15) is True  # 61 <= 64
    assert conjectured_bound(20, 14) is False  # 55 > 32
    assert conjectured_bound(9, 1) is True  # 22 <= 128


def test_impure_bound_agrees_with_general_sum_up_to_512():
    for n in range(3, 513):
        for k in range(1, n):
            assert impure_bound(n, k) == qds_hamming_d3(n, k)


def test_conjectured_bound_at_least_as_strict():
    # conjecture satisfied implies the impure bound satisfied, n >= 6
    for n in range(6, 160):
        for k in range(1, n):
            if conjectured_bound(n, k):
                assert impure_bound(n, k)


def test_pure_only_families_small():
    fams = pure_only_families(3)
    assert (5, 1) in fams
    assert (21, 15) in fams
    assert (168, 159) in fams  # 8*f_3 = 168, ceil(log2(505)) = 9
    assert fams == sorted(set(fams))
    with pytest.raises(PreconditionError):
        pure_only_families(1)


def test_pure_only_family_members():
    # a = 4 contributes f_4 = 85 -> (85, 77); a = 7 admits ell = 4
    fams = pure_only_families(7)
    assert (85, 77) in fams
    f7 = (4**7 - 1) // 3
    assert (f7, f7 - 14) in fams
    assert (f7 - 4, (f7 - 4) - 14) in fams


def test_pure_only_families_satisfy_hamming_but_violate_impure():
    for n, k in pure_only_families(7):
        assert quantum_hamming(n, k)
        assert not impure_bound(n, k)


def test_region_table_envelopes():
    rows = {r.n: r for r in region_table((5, 26))}
    assert (rows[19].singleton_k, rows[19].hamming_k) == (15, 13)
    assert rows[19].impure_k == 13
    assert rows[19].conjecture_k == 12  # matches the optimal (19,12) point
    assert rows[26].hamming_k == 19  # matches the optimal (26,19) point
    assert rows[26].impure_k == 19
    assert rows[26].conjecture_k == 18
    assert rows[5].hamming_k == 1
    # envelope ordering: singleton >= hamming >= impure >= conjecture here
    for r in rows.values():
        assert r.singleton_k >= r.hamming_k >= r.impure_k >= r.conjecture_k


def test_code_params_validation():
    with pytest.raises(PreconditionError):
        CodeParams(5, 5)
    with pytest.raises(PreconditionError):
        CodeParams(5, 1, d=0)
    p = CodeParams(12, 5, d=5, l=2)
    assert (p.m, p.t) == (7, 2)
