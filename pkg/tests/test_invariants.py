import random

import pytest

from virtcover import parse
from virtcover.codec import emit_report, report_to_dict
from virtcover.errors import BadComponent, NotAKnot, NotEven
from virtcover.gauss import mirror_switch
from virtcover.generators import random_cut_system, random_realized
from virtcover.invariants import (
    alternation_over_sum,
    compute_report,
    lambda_abs,
    linking,
    lk_n,
    nu_abs,
    odd_writhe,
    q_set,
    self_pair_link,
)
from virtcover.orientation import canonical_cut_system

from .conftest import EL2, HOPF, T3, VHL, VT, VTX


def test_odd_writhe_examples():
    assert odd_writhe(parse(T3)) == 0
    assert odd_writhe(parse(VT)) == 2
    assert odd_writhe(mirror_switch(parse(VT), "reflect")) == -2
    with pytest.raises(NotAKnot):
        odd_writhe(parse(HOPF))


def test_linking_examples():
    assert linking(parse("O1+ U1+\nO2+ U2+"), 0, 1) == 0
    assert linking(parse(VHL), 0, 1) == 1
    assert linking(parse(HOPF), 0, 1) == 2
    with pytest.raises(BadComponent):
        linking(parse(HOPF), 0, 2)


def test_lk_n_examples():
    assert lk_n(parse(T3)) == 0
    assert lk_n(parse(VTX)) == 2
    assert lk_n(mirror_switch(parse(VTX), "switch")) == -2
    assert lk_n(mirror_switch(parse(VTX), "reflect")) == -2


def test_lambda_and_nu():
    split = parse("O1+ U1+ O2- U2-\nO3+ U3+")
    assert lambda_abs(split, 0, 1) == 0
    fixture = random_realized(random.Random(0), 0, 2)  # two empty circles
    assert lambda_abs(fixture, 0, 1) == 0
    assert nu_abs(parse(EL2), 0, 1) == 2  # no flips: |1 + 1|
    assert nu_abs(parse(HOPF), 0, 1) == 1
    with pytest.raises(NotEven):
        lambda_abs(parse(VHL), 0, 1)


def test_lambda_fixture_of_size_two():
    from virtcover.checks import LAMBDA_FIXTURE
    from virtcover.realize import realize

    code = realize(parse(LAMBDA_FIXTURE)).code
    assert lambda_abs(code, 0, 1) == lambda_abs(code, 1, 0) == 2
    assert nu_abs(canonical_cut_system(code), 0, 1) == 2


def test_lambda_matches_alternation_sum():
    rng = random.Random(17)
    for _ in range(40):
        code = random_realized(rng, rng.randint(1, 6), 2, even=True)
        assert lambda_abs(code, 0, 1) == abs(alternation_over_sum(code, 0, 1))
        assert nu_abs(random_cut_system(rng, code), 0, 1) == lambda_abs(code, 0, 1)


def test_q_sets_and_self_pairs():
    split = parse("O1+ U1+\nO2+ U2+")
    assert q_set(split, 0, 1) == (0, 0)
    assert self_pair_link(split, 0) == self_pair_link(split, 1) == 0
    # a knot's self-pair value is lk_N, here kept doubled
    assert self_pair_link(parse(VTX), 0) == 2 * lk_n(parse(VTX))


def test_self_pair_distinguishes_fixtures():
    from virtcover.checks import SELF_PAIR_TWO, SELF_PAIR_ZERO
    from virtcover.realize import realize

    zero = parse(SELF_PAIR_ZERO)
    two = canonical_cut_system(realize(parse(SELF_PAIR_TWO)).code)
    assert self_pair_link(zero, 0) == 0
    assert self_pair_link(two, 0) == 4
    assert q_set(zero, 0, 1) == q_set(two, 0, 1) == (0, 2)


def test_unknot_report():
    d = report_to_dict(compute_report(parse("()")))
    assert d["normal"] is True and d["odd_writhe"] == 0 and d["f_polynomial"] == "1"


def test_virtual_trefoil_reports():
    d = report_to_dict(compute_report(parse(VT)))
    assert d["even"] is True and d["normal"] is False
    # no virtual passages: the canonical system is empty, and VT is not normal
    assert d["cut_system"] == "canonical" and d["is_cut_system"] is False
    d = report_to_dict(compute_report(parse(VTX)))
    assert (d["odd_writhe"], d["lk_N"], d["normal"]) == (2, 2, False)
    assert d["cover"]["components"] == 2 and d["cover"]["normal"] is True
    assert d["self_pair_link"] == {"1": "2"}


def test_half_integer_linking_rendered():
    code = parse("O1+ V1 O2+ V2 O3+\nU1+ V1 U2+ V2 U3+")
    d = report_to_dict(compute_report(code))
    assert d["linking"]["1,2"] == "3/2"
    assert '"3/2"' in emit_report(compute_report(code))


def test_report_keeps_invalid_cuts_as_data():
    d = report_to_dict(compute_report(parse(VT).with_cuts([(0, 1)])))
    assert d["is_cut_system"] is False and d["cover"] is None
