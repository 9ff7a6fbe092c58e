import random

import pytest

from virtcover import parse, serialize
from virtcover.covering import (
    canonical_cover,
    coherent_double_cover,
    cover_with_cut_orientation,
    over_sums,
)
from virtcover.errors import NotACutSystem
from virtcover.gauss import chords
from virtcover.generators import random_cut_system, random_realized
from virtcover.invariants import nu_abs
from virtcover.orientation import canonical_cut_system, is_normal

from .conftest import T3, VT, VTX


def test_trivial_system_gives_two_copies():
    cover = coherent_double_cover(parse(T3))
    assert serialize(cover.code) == "O1+ U2+ O3+ U1+ O2+ U3+\nO1*+ U2*+ O3*+ U1*+ O2*+ U3*+"
    assert canonical_cover(parse(T3)) == cover
    assert cover.labels == ("1.1", "1.2")


def test_virtual_trefoil_cover():
    cover = coherent_double_cover(parse(VTX))
    assert serialize(cover.code) == "U1+ U2+ O1*+ O2*+\nU1*+ U2*+ O1+ O2+"
    assert cover.num_components == 2
    assert is_normal(cover.code)
    assert is_normal(canonical_cover(parse("O1+ O2+ V1 U1+ U2+ V1")).code)


def test_rejects_non_cut_system():
    with pytest.raises(NotACutSystem):
        coherent_double_cover(parse(VT).with_cuts([(0, 0)]))
    with pytest.raises(NotACutSystem):
        coherent_double_cover(parse(VT))


def test_lift_counts_and_signs():
    rng = random.Random(8)
    for _ in range(40):
        code = random_cut_system(rng, random_realized(rng, rng.randint(0, 5), rng.randint(1, 3)))
        cover = coherent_double_cover(code)
        base, up = chords(code), chords(cover.code)
        assert len(up) == 2 * len(base)
        for c, ch in base.items():
            assert up[c].sign == up[c + "*"].sign == ch.sign
        assert sorted(ch.sign for ch in up.values()) == sorted(2 * [ch.sign for ch in base.values()])


def test_arc_trace_switches_copy_at_cuts():
    code = parse(VTX)
    cover = coherent_double_cover(code)
    for trace in cover.arc_trace:
        copies = [c for _, _, c in trace]
        assert all(a != b for a, b in zip(copies, copies[1:]))


def test_empty_system_keeps_signs():
    oriented = cover_with_cut_orientation(parse("O1+ U2+\nU1+ O2+"))
    lifted = chords(oriented.cover.code)
    assert oriented.effective_signs == {c: ch.sign for c, ch in lifted.items()}


def test_reversed_strand_flips_sign():
    oriented = cover_with_cut_orientation(parse("O1- # U2- #\nO2- # U1- #"))
    assert oriented.component_bits == (1, 0, 1, 0)
    # each chord joins a reversed lift to a kept one
    assert set(oriented.effective_signs.values()) == {1}
    assert {ch.sign for ch in chords(oriented.cover.code).values()} == {-1}


def test_over_sum_matches_nu_on_even_links():
    rng = random.Random(21)
    for _ in range(30):
        code = random_realized(rng, rng.randint(1, 5), 2, even=True)
        cc = canonical_cut_system(code)
        sums = over_sums(cover_with_cut_orientation(cc), 0, 1)
        assert {abs(s) for s in sums} == {nu_abs(cc, 0, 1)}
