import pytest

from virtcover import parse
from virtcover.errors import InvalidCode
from virtcover.gauss import (
    ExtendedGaussCode,
    Passage,
    classify_crossings,
    interior_endpoint_count,
    is_even,
    make_code,
    mirror_switch,
    project_to_plain,
    relabel,
    validate,
    writhe,
)

from .conftest import EL2, T3, VHL


def test_empty_unknot_is_valid():
    assert validate(parse("()")) == []


def test_single_occurrence_reported():
    code = ExtendedGaussCode(((Passage.over(1, 1), Passage.over(2, 1), Passage.under(2, 1)),))
    assert "chord 1 has 1 occurrence" in validate(code)


def test_sign_mismatch_reported():
    code = ExtendedGaussCode(((Passage.over(1, 1), Passage.under(1, -1)),))
    assert validate(code) == ["chord 1 has mismatched signs"]


def test_virtual_pairing_and_slot_range():
    code = ExtendedGaussCode(((Passage.over(1, 1), Passage.under(1, 1), Passage.virtual(7)),))
    assert "virtual crossing 7 has 1 occurrence" in validate(code)
    out = ExtendedGaussCode(parse("O1+ U1+").components, ((0, 2),))
    assert validate(out) == ["cut point slot 2 out of range on component 0"]
    with pytest.raises(InvalidCode):
        make_code("O1+ U1+", cuts=[(1, 0)])


def test_project_to_plain():
    assert str(project_to_plain(parse("O1+ O2+ V1 U1+ U2+ V1"))) == "O1+ O2+ U1+ U2+"
    assert project_to_plain(parse(T3)) == parse(T3)
    assert project_to_plain(parse("() # #")) == parse("()")


def test_classify_crossings():
    assert all(t.is_self for t in classify_crossings(parse(T3)).values())
    (t,) = classify_crossings(parse("O1+\nU1+")).values()
    assert (t.over_component, t.under_component) == (0, 1) and not t.is_self
    assert {c: (t.over_component, t.under_component) for c, t in classify_crossings(parse(EL2)).items()} == {
        "1": (0, 1),
        "2": (0, 1),
    }


def test_evenness():
    assert is_even(parse(T3)) == ([True], True)
    assert is_even(parse(VHL)) == ([False, False], False)
    assert is_even(parse(EL2))[1]


def test_mirrors():
    vt = parse("O1+ O2+ U1+ U2+")
    assert str(mirror_switch(vt, "switch")) == "U1- U2- O1- O2-"
    assert str(mirror_switch(vt, "reflect")) == "O1- O2- U1- U2-"
    for mode in ("switch", "reflect"):
        assert mirror_switch(parse("()"), mode) == parse("()")
        assert mirror_switch(mirror_switch(parse(T3), mode), mode) == parse(T3)
    with pytest.raises(ValueError):
        mirror_switch(vt, "rotate")


def test_writhe_and_interior_counts():
    assert writhe(parse(T3)) == 3
    assert [interior_endpoint_count(parse(T3), c) for c in "123"] == [2, 2, 2]
    assert [interior_endpoint_count(parse("O1+ O2+ U1+ U2+"), c) for c in "12"] == [1, 1]


def test_relabel_normalizes_ids():
    code = parse("Oa+ Vx Ub+ Ua+ Vx Ob+")
    assert str(relabel(code)) == "O1+ V1 U2+ U1+ V1 O2+"


def test_cut_counts_and_slots():
    code = parse("O1+ O2+ V1 # U1+ U2+ V1 #")
    assert code.cut_points == ((0, 2), (0, 5))
    assert code.slot_count(0) == 6
    assert parse("()").slot_count(0) == 1
    assert code.without_cuts().with_cuts([(0, 5), (0, 2)]) == code
