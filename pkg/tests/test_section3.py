import pytest

from lensfill import section3
from lensfill.plumbing import abelianization


def test_assert_mode_checks():
    rows = section3.verify()
    bad = [r for r in rows if not r[1]]
    assert not bad, bad
    assert len(rows) == 3 + 11 + 4


def test_pairings_exact():
    got = {label: (v, w) for label, v, w in section3.pairing_checks()}
    assert got["alpha.alpha"] == (2, 2)
    assert got["K.alpha"] == (-6, -6)
    assert got["h.alpha"] == (10, 10)
    assert all(got[f"alpha.u{i}"][0] == 0 for i in range(1, 12))


@pytest.mark.parametrize("n", range(2, 13))
def test_presentation_family(n):
    g = abelianization(section3.pi1_b_presentation(n))
    assert g.rank == 0 and g.order == 2 * n - 1


def test_presentation_n9_shape():
    P = section3.pi1_b_presentation()
    # one relator per 2-handle: 1 - 12 + 13 = euler 2
    assert P.generators == 12 and len(P.relators) == 13
    assert str(abelianization(P)) == "Z17"


def test_gram_report_deterministic():
    a, b = section3.gram_report(), section3.gram_report()
    assert a == b and a.lines() == b.lines()
    assert a.lines()[0] == f"dataset v{section3.DATASET_VERSION}"


def test_gram_report_flags_transcription_caveat():
    rep = section3.gram_report()
    assert (1, 3, -1) in rep.bad_pairs
    assert any("u1.u3 = -1" in line for line in rep.lines())
    # pinned for dataset v1; these change only with a data edit
    assert rep.diagonal == (-9, -4, -4, -2, -2, -2, -2, -2, -2, -2, -3)
    assert rep.signature == -11 and rep.signature_matches
    assert rep.determinant == -2960 and not rep.det_matches


def test_bookkeeping():
    assert section3.euler_signature_bookkeeping() == (9, -5)
