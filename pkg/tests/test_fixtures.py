import pytest

from drawiso.fixtures import fixture_drawings, fixture_suite, read_expected, rejection_fixtures
from drawiso.isomorphism import KINDS, iso_report
from drawiso.model import SingleClassGraph, induced_subdrawing, parse_drawing, serialize, validate

PAIRS = [fp.id for fp in fixture_suite()]


def test_suite_contents(suite):
    assert {"fig05", "fig10", "fig11", "fig13", "fig15", "fig16", "fig17", "fig18", "fig19",
            "fig20"} <= set(suite)
    assert "fig21" not in suite
    assert len(fixture_drawings()) == 50
    assert set(fixture_drawings(extended=False, derived=False)) < set(fixture_drawings())


@pytest.mark.parametrize("fid", PAIRS)
def test_labeled_vector(fid, suite):
    fp = suite[fid]
    assert iso_report(fp.left, fp.right).as_dict() == fp.expected.as_dict()


@pytest.mark.parametrize("fid", [fp.id for fp in fixture_suite() if fp.expected_unlabeled])
def test_unlabeled_vector(fid, suite):
    fp = suite[fid]
    got = iso_report(fp.left, fp.right, labeled=False)
    assert got.as_dict() == fp.expected_unlabeled.as_dict()
    assert not got.labeled


@pytest.mark.parametrize("fid", PAIRS)
def test_expected_vectors_respect_cone(fid, suite):
    fp = suite[fid]
    assert fp.expected.cone_violations() == []
    if fp.expected_unlabeled:
        assert fp.expected_unlabeled.cone_violations() == []


@pytest.mark.parametrize("fid", [fp.id for fp in fixture_suite() if fp.extended])
def test_extension_keeps_vector(fid, suite):
    fp = suite[fid]
    left, right = fp.extended
    assert iso_report(left, right).as_dict() == fp.expected.as_dict()
    # removing the added vertex gives back the pair
    keep = set(fp.left.vertices)
    assert induced_subdrawing(left, keep) == fp.left
    assert induced_subdrawing(right, keep) == fp.right


def test_all_realizable(corpus):
    for name, d in corpus.items():
        assert validate(d).realizable, name


def test_rejections():
    rej = rejection_fixtures()
    assert [r.id for r in rej] == ["fig21"]
    for r in rej:
        assert r.error == "SingleClassGraph"
        with pytest.raises(SingleClassGraph):
            parse_drawing(r.path.read_text())


def test_read_expected(tmp_path):
    p = tmp_path / "expected.txt"
    p.write_text("# note\nrs = true\n\nname=x=y\n")
    assert read_expected(p) == {"rs": "true", "name": "x=y"}


def test_custom_root(tmp_path, suite):
    src = suite["fig13"]
    d = tmp_path / "only"
    d.mkdir()
    for fname, x in zip(src.files, src.drawings()):
        (d / fname).write_text(serialize(x))
    (d / "expected.txt").write_text("\n".join(f"{k}={str(v).lower()}"
                                              for k, v in src.expected.as_dict().items()))
    got = fixture_suite(tmp_path)
    assert [fp.id for fp in got] == ["only"]
    assert got[0].expected.as_dict() == src.expected.as_dict()
    assert set(got[0].expected.as_dict()) == set(KINDS)
