import random

import pytest

from virtcover import parse
from virtcover.errors import MissingRotation
from virtcover.gauss import project_to_plain
from virtcover.generators import random_plain
from virtcover.orientation import canonical_cut_system, is_cut_system
from virtcover.realize import genus, realize, sign_rotations

from .conftest import EL2, HOPF, T3, VT


def _faces(code, rot):
    # F = 2 - 2g - V + E on one piece
    v = len(rot)
    return 2 - 2 * genus(code, rot)[0] - v + 2 * v


def test_sign_rotation_genus():
    assert genus(parse(T3), sign_rotations(parse(T3))) == [0]
    assert _faces(parse(T3), sign_rotations(parse(T3))) == 5
    assert genus(parse(VT), sign_rotations(parse(VT))) == [1]
    assert genus(parse("()"), {}) == [0]


def test_missing_rotation():
    with pytest.raises(MissingRotation):
        genus(parse(T3), {})


@pytest.mark.parametrize("text", [T3, VT, HOPF, EL2, "O1+\nU1+", "O1+ U1+\n()", "()"])
@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_realizations_are_planar(text, seed):
    real = realize(parse(text), seed)
    assert all(g == 0 for g in genus(real.code, real.rotations))
    assert project_to_plain(real.code) == parse(text)
    assert is_cut_system(canonical_cut_system(real.code))


def test_classical_needs_no_virtuals_but_vt_does():
    assert realize(parse("()")).code == parse("()")
    assert len(realize(parse(VT)).code.virtual_ids()) >= 1
    assert all(len(realize(parse(VT), s).code.virtual_ids()) >= 1 for s in range(8))


def test_realize_ignores_input_virtuals_and_cuts():
    assert realize(parse("O1+ O2+ V1 # U1+ U2+ V1 #")).code == realize(parse(VT)).code


def test_seed_determinism():
    rng = random.Random(2)
    for _ in range(20):
        plain = random_plain(rng, rng.randint(0, 6), rng.randint(1, 3))
        s = rng.randrange(1000)
        assert realize(plain, s).code == realize(plain, s).code
