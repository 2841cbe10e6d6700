"""Affine gluing, the fifteen-pattern condition and the classification."""

import pytest

from quiddity import (
    KNOWN_ROWS,
    Scalar,
    Triple,
    check_generic_rows,
    classify_mu,
    cor15_check,
    decompose_affine,
    is_quiddity,
    sigma1,
    sigma2,
    verify_cor15_on_classified,
    walk,
)
from quiddity.affine import canonical_period_key


def mu(n, e1, e, e2):
    return Triple.from_exponents(n, e1, e, e2)


# ---------------------------------------------------------------------------
# decomposition


def test_decompose_period_two():
    dec = decompose_affine((2,))
    assert dec is not None
    assert dec.blocks == ((0, 0),)
    assert dec.junctions[0][1:] == (0, 0)  # 2 = 0 + 2 + 0


def test_decompose_period_one_four():
    dec = decompose_affine((1, 4))
    assert dec is not None
    assert dec.blocks == ((1, 1, 1),)
    pos, x, y = dec.junctions[0]
    assert x == 1 and y == 1  # 4 = 1 + 2 + 1


def test_decompose_non_affine():
    assert decompose_affine((2, 2, 5)) is None
    assert decompose_affine((0,)) is None
    assert decompose_affine((1,)) is None


def test_decompose_table_periods():
    for period in [(2,), (1, 4), (2, 3, 1, 3), (4, 1, 3, 3, 1), (6, 1, 3, 1)]:
        dec = decompose_affine(period)
        assert dec is not None, period
        assert dec.reassemble() == dec.word()
        for block in dec.blocks:
            assert len(block) >= 2 and is_quiddity(block)
        # junction count is forced by the triangle-count sum
        word = dec.word()
        assert len(dec.junctions) == 3 * len(word) - sum(word)


def test_decompose_soundness_reassembly():
    dec = decompose_affine((6, 1, 3, 1))
    assert dec is not None
    assert dec.blocks == ((2, 1, 3, 1, 2),)
    assert dec.reassemble() == (6, 1, 3, 1)


# ---------------------------------------------------------------------------
# fifteen patterns


def test_cor15_examples():
    assert cor15_check((2,))  # via (2,2,2,2) in the four-fold tiling
    assert cor15_check((6, 1, 3, 1))
    assert not cor15_check((2, 2, 5))


def test_cor15_on_table_periods():
    for row in KNOWN_ROWS:
        assert cor15_check(row.period), row


def test_affine_implies_cor15_small_periods():
    # necessity direction on a brute box of candidate periods
    from itertools import product

    for length in range(1, 5):
        for period in product(range(7), repeat=length):
            if decompose_affine(period) is not None:
                assert cor15_check(period), period


# ---------------------------------------------------------------------------
# classification


def test_classify_mu3_row1():
    report = classify_mu(3)
    assert report.ok
    rows = {o.row_matched for o in report.orbits}
    assert rows == {1}
    diag = {t for o in report.orbits for t in o.diagrams}
    assert mu(3, 1, 1, 1) in diag and mu(3, 2, 2, 2) in diag


def test_classify_mu6_row4_orbit():
    report = classify_mu(6)
    assert report.ok
    row4 = [o for o in report.orbits if o.row_matched == 4]
    assert row4
    listed = {mu(6, 4, 1, 2), mu(6, 2, 3, 2), mu(6, 2, 1, 4)}
    assert any(listed <= set(o.diagrams) for o in row4)


def test_classify_mu12_rows():
    report = classify_mu(12)
    assert report.ok
    rows = {o.row_matched for o in report.orbits}
    assert {1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 13, 14} <= rows
    # row 10's five listed diagrams live in one orbit, each up to label swap
    listed = {
        mu(12, 1, 8, 6),
        mu(12, 6, 4, 3),
        mu(12, 3, 2, 9),
        mu(12, 9, 4, 6),
        mu(12, 6, 8, 7),
    }
    row10 = [o for o in report.orbits if o.row_matched == 10]
    assert any(
        all(t in set(o.diagrams) or t.swap() in set(o.diagrams) for t in listed)
        for o in row10
    )


def test_classify_periods_match_rows():
    report = classify_mu(12)
    by_row = {
        1: (2,), 2: (2,), 3: (2,), 4: (2,), 5: (2,), 6: (1, 4), 7: (1, 4),
        9: (2, 3, 1, 3), 10: (4, 1, 3, 3, 1), 12: (2,), 13: (2,), 14: (1, 4),
    }
    for o in report.orbits:
        if o.row_matched in by_row:
            assert canonical_period_key(o.period) == canonical_period_key(
                by_row[o.row_matched]
            )


def test_classify_orbit_closure():
    report = classify_mu(6)
    for o in report.orbits:
        members = set(o.diagrams)
        for t in members:
            for sigma in (sigma1, sigma2):
                res = sigma(t)
                assert res is not None and res[0] in members


def test_classify_rejects_tiny_bound():
    with pytest.raises(ValueError):
        classify_mu(1)


# ---------------------------------------------------------------------------
# generic rows


def test_generic_rows_clean():
    report = check_generic_rows(max_order=24)
    assert report.ok
    assert report.rows[12]["period"] == [2]
    assert report.rows[13]["period"] == [2]
    assert report.rows[14]["period"] == [1, 4]
    assert all(d["shape"] == "chain" for d in report.rows.values())
    assert all(d["affine"] for d in report.rows.values())


def test_generic_row14_exclusions():
    report = check_generic_rows(max_order=12)
    r14 = [s for s in report.specializations if s.row == 14]
    for s in r14:
        if s.order in (1, 2, 3, 4):
            assert s.status != "match", s
        else:
            assert s.status == "match", s


def test_generic_rows_pm_one_degenerates():
    report = check_generic_rows(max_order=6)
    for s in report.specializations:
        if s.order in (1, 2):
            assert s.status != "match", s


def test_row14_mu4_walk_directly():
    q = Scalar.root_of_unity(4, 1)
    rep = walk(Triple(q, q ** -4, q ** 4))
    assert canonical_period_key(rep.period) != canonical_period_key((1, 4))
    assert decompose_affine(rep.period) is None


def test_verify_cor15_on_classified_small():
    report = verify_cor15_on_classified(8)
    assert report.ok
    assert (1, 4) in report.periods or (1, 4) in {
        canonical_period_key(p) for p in report.periods
    }
