import pytest

from fanoaut import fanodb
from fanoaut.fanodb import DatabaseError, FamilyId, parse_model_ref, parse_text

from lists import (ALWAYS_INFINITE, H12_INFINITE, LEMMA_ONLY_SOMETIMES, NONREDUCTIVE, SOME_MEMBER_NOT_KE,
                   SOMETIMES_INFINITE)


def key(fid):
    r, i = fid.split(".")
    return int(r), int(i)


@pytest.fixture(scope="module")
def db():
    return fanodb.load()


def test_all_105_families(db):
    assert len(db.families) == 105
    assert len(db.infinite_always()) + len(db.infinite_sometimes()) + len(db.never_infinite()) == 105


def test_headline_lists(db):
    assert db.infinite_always() == sorted(ALWAYS_INFINITE, key=key)
    assert db.infinite_sometimes() == sorted(SOMETIMES_INFINITE + LEMMA_ONLY_SOMETIMES, key=key)
    assert db.discrepancies() == LEMMA_ONLY_SOMETIMES
    assert db.nonreductive_always() == sorted(NONREDUCTIVE, key=key)
    assert db.h12_infinite() == H12_INFINITE


def test_ke_obstructions_cover_the_corollary(db):
    ke = set(db.ke_obstructed())
    assert set(NONREDUCTIVE) | set(SOME_MEMBER_NOT_KE) <= ke
    # every flagged family has a non-reductive group somewhere
    for fid in ke:
        assert any(fanodb.is_nonreductive(g) for g in db.lookup(fid).groups())


def test_lookup(db):
    f = db.lookup("1.15")
    assert f.degree == 40 and f.infinity_class == "always"
    assert str(f.generic_aut0) == "PGL(2)"
    assert db.lookup("1.10").degree == 22
    with pytest.raises(DatabaseError):
        db.lookup("2.37")
    with pytest.raises(DatabaseError):
        FamilyId.parse("two")


def test_model_refs_resolve(db):
    from fanoaut.catalog import roster
    for fid, ref in db.model_refs():
        name, _ = parse_model_ref(ref)
        assert name in roster()
        db.lookup(fid)


def test_models_match_rows(db):
    bad = [row for row in fanodb.check_models(db) if not row[2]]
    assert not bad


def _row(fid, cls="never", gen="1", members="-", flags="-"):
    return "\t".join([fid, cls, gen, members, flags, "anchor", "desc"])


def _table_with(line, replace):
    rows = [ln for ln in fanodb._embedded_text().splitlines() if ln and not ln.startswith("#")]
    rows = [line if ln.split("\t")[0] == replace else ln for ln in rows]
    return "\n".join(rows)


def test_drift_is_rejected():
    # a non-reductive group without the obstruction flag
    with pytest.raises(DatabaseError, match="ke_obstructed"):
        parse_text(_table_with(_row("2.28", "always", "Ga^3 : Gm"), "2.28"))
    # a finite family cannot list an infinite group
    with pytest.raises(DatabaseError):
        parse_text(_table_with(_row("1.1", "never", "Gm"), "1.1"))
    with pytest.raises(DatabaseError, match="unknown flags"):
        parse_text(_table_with(_row("1.1", flags="colour=red"), "1.1"))
    with pytest.raises(DatabaseError, match="duplicate"):
        parse_text(fanodb._embedded_text() + "\n" + _row("1.1"))
    with pytest.raises(DatabaseError, match="missing"):
        parse_text("\n".join(ln for ln in fanodb._embedded_text().splitlines() if not ln.startswith("1.1\t")))
    with pytest.raises(DatabaseError, match="7 tab-separated"):
        parse_text("1.1\tnever")


def test_load_from_path(tmp_path, db):
    p = tmp_path / "families.tsv"
    p.write_text(fanodb._embedded_text(), encoding="utf-8")
    assert fanodb.load(str(p)).infinite_always() == db.infinite_always()
