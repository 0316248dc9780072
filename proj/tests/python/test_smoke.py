import pytest

import vinberg


def test_run_n3_is_finite():
    code, doc = vinberg.run(3)
    assert code == vinberg.EXIT_OK
    assert doc["meta"]["schema"] == 1
    assert doc["meta"]["verdict"] == "FiniteVolume"
    assert [r["vector"] for r in doc["roots"]][-1] == [1, 3, 0, 0]
    labels = sorted(e["label"] for e in doc["diagram"]["edges"])
    assert labels == ["3", "4", "6"]


def test_run_n13_counts():
    code, doc = vinberg.run(13)
    assert code == vinberg.EXIT_OK
    assert len(doc["roots"]) == 22
    assert doc["volume"]["cusps"] == 13
    assert doc["symmetry"]["order"] == 4


def test_budget_exhausted():
    code, doc = vinberg.run(14, max_roots=18)
    assert code == vinberg.EXIT_BUDGET
    assert doc["roots"][14]["vector"][:2] == [1, 3]


def test_dot_format():
    code, text = vinberg.run(3, format="dot")
    assert code == vinberg.EXIT_OK
    assert text.startswith("graph coxeter {")


def test_check_roundtrip_of_roots():
    code, doc = vinberg.check({"form": {"phi": 3, "dim": 2}, "roots": [[0, -1, 1], [0, 0, -1], [1, 3, 0]]})
    assert code == vinberg.EXIT_OK
    assert doc["volume"]["compact"] is True


def test_check_reports_bad_angle():
    with pytest.raises(vinberg.VinbergError) as info:
        vinberg.check({"dim": 3, "gram": [[5, -2], [-2, 2]]})
    assert info.value.error["type"] == "NonCoxeterAngle"
    assert info.value.error["c"] == "2/5"


def test_certify():
    code, doc = vinberg.certify_nonreflective(14)
    assert code == vinberg.EXIT_CERTIFIED
    assert doc["certificate"]["gamma_p"]["components"] == ["~E6", "~E6"]
    with pytest.raises(vinberg.VinbergError):
        vinberg.certify_nonreflective(12)


def test_oracle():
    code, report = vinberg.oracle(4)
    assert code == vinberg.EXIT_OK
    assert report["identical"] is True
