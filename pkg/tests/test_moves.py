import random

import pytest

from virtcover import parse
from virtcover.bracket import f_polynomial
from virtcover.errors import NotApplicable
from virtcover.generators import random_realized
from virtcover.moves import MoveInstance, apply, enumerate_moves, r3_sites, random_walk
from virtcover.gauss import project_to_plain
from virtcover.orientation import canonical_cut_system, is_cut_system
from virtcover.realize import realize

from .conftest import T3, VTX


def kinds(code, *ks):
    return {m.kind for m in enumerate_moves(code, kinds=ks)}


def test_kink_offers_r1_minus():
    assert "R1-" in kinds(parse("O1+ U1+"), "R1-")
    (move,) = enumerate_moves(parse("O1+ U1+"), kinds=("R1-",))
    assert apply(parse("O1+ U1+"), move) == parse("()")


def test_trefoil_has_no_reducing_moves():
    assert kinds(parse(T3), "R1-", "R2-") == set()


def test_cp1_at_both_virtual_passages():
    sites = {m.site for m in enumerate_moves(parse(VTX), kinds=("CP1",))}
    assert sites == {(0, 2, 1), (0, 5, 4)}
    for m in enumerate_moves(parse(VTX), kinds=("CP1",)):
        assert is_cut_system(apply(parse(VTX), m))


def test_cp2_inverse_pair():
    code = parse(VTX)
    up = apply(code, MoveInstance("CP2+", (0, 3)))
    assert len(up.cut_points) == 4
    assert apply(up, MoveInstance("CP2-", (0, 3))) == code
    with pytest.raises(NotApplicable):
        apply(code, MoveInstance("CP2-", (0, 3)))


def test_cp3_pair():
    code = parse(VTX)
    up = apply(code, MoveInstance("CP3+", ("1",)))
    assert len(up.cut_points) == 6 and is_cut_system(up)
    assert apply(up, MoveInstance("CP3-", ("1",))) == code


def test_r_moves_need_empty_cut_set():
    with pytest.raises(NotApplicable):
        apply(parse(VTX), MoveInstance("Detour", ()))
    with pytest.raises(NotApplicable):
        random_walk(parse(VTX), 3, 0)


def test_bad_sites_rejected():
    with pytest.raises(NotApplicable):
        apply(parse(T3), MoveInstance("R1-", ("1",)))
    with pytest.raises(NotApplicable):
        apply(parse(T3), MoveInstance("R1+", (0, 9), {"first": "O", "sign": 1}))


def test_walks_stay_planar():
    # planar codes admit the canonical cut system; random virtual placements often do not
    rng = random.Random(6)
    for _ in range(30):
        code, _ = random_walk(random_realized(rng, rng.randint(1, 5), rng.randint(1, 3)), 6, rng.randrange(10**6))
        assert is_cut_system(canonical_cut_system(code))


def test_walk_identity_and_determinism():
    code = realize(parse(T3)).code
    assert random_walk(code, 0, 5) == (code, [])
    assert random_walk(code, 8, 5) == random_walk(code, 8, 5)


def test_trefoil_walk_keeps_f():
    code = realize(parse(T3)).code
    for seed in range(5):
        walked, _ = random_walk(code, 12, seed)
        assert f_polynomial(walked) == f_polynomial(code)


def test_every_move_kind_keeps_f():
    rng = random.Random(9)
    for _ in range(60):
        code = random_realized(rng, rng.randint(1, 5), rng.randint(1, 2))
        for kind in ("R1+", "R1-", "R2+", "R2-", "R3", "Detour"):
            options = enumerate_moves(code, kinds=(kind,))
            if options:
                moved = apply(code, rng.choice(options))
                assert f_polynomial(moved) == f_polynomial(code), kind


def test_r3_triangle():
    code = parse("O3- U1+ U2+ O2+ U3- O1+")
    assert r3_sites(code) == [("3", "1", "2")]
    # switching the sign of one side breaks the triangle's consistency
    assert r3_sites(parse("O3+ U1+ U2+ O2+ U3+ O1+")) == []
    moved = apply(realize(code).code, MoveInstance("R3", ("3", "1", "2")))
    assert str(project_to_plain(moved)) == "O1+ U2+ U1+ U3- O2+ O3-"
    assert f_polynomial(moved) == f_polynomial(code)
