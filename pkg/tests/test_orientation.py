import random

import pytest

from virtcover import parse
from virtcover.errors import InfeasibleOrientation, NonEmptyCutSet, NotAKnot
from virtcover.generators import random_cut_system, random_plain, random_realized
from virtcover.orientation import (
    ParityUnionFind,
    canonical_cut_system,
    has_alternate_orientation,
    is_cut_system,
    is_normal,
    odd_crossings,
    solve_alternate,
    solve_flavor,
)

from .conftest import T3, VHL, VT, VTX


def test_parity_union_find():
    uf = ParityUnionFind(4)
    assert uf.union(0, 1, 1)
    assert uf.union(1, 2, 1)
    assert uf.parity_to_root(0) ^ uf.parity_to_root(2) == 0
    assert not uf.union(0, 2, 1)
    assert uf.union(0, 2, 0)


def test_alternate_examples():
    assert has_alternate_orientation(parse(T3))
    with pytest.raises(InfeasibleOrientation):
        solve_alternate(parse(VT))
    solve_alternate(parse(VTX))


def test_alternate_assignment_properties():
    a = solve_alternate(parse(VTX))
    code = parse(VTX)
    # bits flip exactly at flip points
    for i, p in enumerate(code.components[0]):
        before, after = a.bit_before(0, i), a.bit_before(0, (i + 1) % 6)
        flipped = p.is_classical + code.cut_counts()[0].get(i, 0)
        assert (before ^ after) == flipped % 2
    # every chord has one sink and one source end
    types = {}
    for (k, i), p in code.positions():
        if p.is_classical:
            types.setdefault(p.ident, set()).add(a.passage_type(k, i))
    assert all(t == {0, 1} for t in types.values())


def test_normality():
    assert is_normal(parse(T3))
    assert not is_normal(parse(VT))
    assert is_normal(parse("()"))


def test_cut_system_examples():
    assert is_cut_system(parse(T3))
    assert not is_cut_system(parse(VT).with_cuts([(0, 1)]))
    assert is_cut_system(canonical_cut_system(parse(VT.replace("O2+", "O2+ V1").replace("U2+", "U2+ V1"))))


def test_canonical_cut_system():
    assert canonical_cut_system(parse(T3)) == parse(T3)
    assert canonical_cut_system(parse("O1+ O2+ V1 U1+ U2+ V1")) == parse(VTX)
    with pytest.raises(NonEmptyCutSet):
        canonical_cut_system(parse(VTX))
    rng = random.Random(11)
    for _ in range(50):
        code = random_realized(rng, rng.randint(0, 6), rng.randint(1, 3))
        cc = canonical_cut_system(code)
        assert len(cc.cut_points) == 2 * len(code.virtual_ids())
        assert is_cut_system(cc)


def test_odd_crossings():
    assert odd_crossings(parse(T3)) == set()
    assert odd_crossings(parse(VT)) == {"1", "2"}
    assert odd_crossings(parse("()")) == set()
    with pytest.raises(NotAKnot):
        odd_crossings(parse(VHL))


def test_normal_iff_no_odd_crossings_on_knots():
    rng = random.Random(5)
    for _ in range(200):
        code = random_plain(rng, rng.randint(0, 7))
        assert is_normal(code) == (not odd_crossings(code))


def test_flavors():
    rng = random.Random(3)
    for _ in range(30):
        code = random_realized(rng, rng.randint(1, 5), rng.randint(2, 3), even=True)
        solve_flavor(code, "virtual")
        solve_flavor(random_cut_system(rng, code), "cut")
    with pytest.raises(InfeasibleOrientation) as err:
        solve_flavor(parse(VHL), "virtual")
    assert err.value.component == 0
