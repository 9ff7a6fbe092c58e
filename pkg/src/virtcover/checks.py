"""Seeded property checks behind ``virtcover selftest`` and the acceptance tests.

Each check draws its own random cases from ``seed`` and returns a
:class:`CheckResult`; nothing here is tolerance-based, every comparison is
exact.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .codec import parse
from .covering import canonical_cover, coherent_double_cover, cover_with_cut_orientation, over_sums
from .gauss import is_even, mirror_switch, project_to_plain
from .generators import add_random_virtuals, random_cut_system, random_plain, random_realized
from .invariants import (
    cover_link_quadruple,
    cover_vector,
    lambda_abs,
    lk_n,
    nu_abs,
    odd_writhe,
    q_set,
    self_pair_link,
)
from .moves import random_walk
from .orientation import canonical_cut_system, is_cut_system, is_normal
from .realize import genus, realize

COVER_F_CAP = 14


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def fail(self, message):
        if len(self.failures) < 20:
            self.failures.append(message)
        else:
            self.failures.append("...")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.cases - len(self.failures)}/{self.cases}"


def _random_knot(rng, planar=False):
    """Knot with at most 8 chords and 6 virtual crossings.

    ``planar`` draws realizations (resampling those with too many virtual
    crossings); otherwise virtual passages are inserted at random.
    """
    while True:
        plain = random_plain(rng, rng.randint(0, 8))
        if not planar:
            return add_random_virtuals(rng, plain, rng.randint(0, 6))
        code = realize(plain, rng.randrange(2**31)).code
        if len(code.virtual_ids()) <= 6:
            return code


def check_odd_writhe_covering(cases=300, seed=0):
    """lk_N equals the odd writhe for random knots and random cut systems."""
    res = CheckResult("odd writhe = lk_N")
    rng = random.Random(seed)
    for t in range(cases):
        knot = _random_knot(rng, planar=t % 2 == 0)
        j = odd_writhe(knot)
        for _ in range(3):
            dp = random_cut_system(rng, knot)
            res.cases += 1
            got = lk_n(dp)
            if got != j:
                res.fail(f"{dp}: lk_N={got} odd_writhe={j}")
    return res


def check_cover_normal(cases=300, seed=1):
    res = CheckResult("covers are normal")
    rng = random.Random(seed)
    for t in range(cases):
        r = 1 if t % 2 == 0 else rng.randint(2, 3)
        code = add_random_virtuals(rng, random_plain(rng, rng.randint(0, 7), r), rng.randint(0, 4))
        dp = random_cut_system(rng, code)
        res.cases += 1
        if not is_normal(coherent_double_cover(dp).code):
            res.fail(f"cover of {dp!s} is not normal")
    return res


def arc_alternation_ok(cover, base_cut_counts) -> bool:
    """Consecutive arcs, and the two copies of an arc, lie on different lifts."""
    where = {}
    for t, trace in enumerate(cover.arc_trace):
        for k, j, copy in trace:
            where[k, j, copy] = t
    for k, n in enumerate(base_cut_counts):
        if n == 0 or n % 2:
            continue
        for j in range(n):
            nxt = (j + 1) % n
            if where[k, j, 0] == where[k, nxt, 0] or where[k, j, 0] == where[k, j, 1]:
                return False
    return True


def check_component_structure(cases=300, seed=2):
    res = CheckResult("cover component structure")
    rng = random.Random(seed)
    for t in range(cases):
        if t % 2 == 0:
            code, r = _random_knot(rng), 1
        else:
            r = rng.randint(2, 3)
            code = random_realized(rng, rng.randint(0, 6), r, even=True)
        dp = random_cut_system(rng, code)
        cover = coherent_double_cover(dp)
        res.cases += 1
        counts = [sum(c.values()) for c in dp.cut_counts()]
        if cover.num_components != 2 * r or any(a == b for a, b in cover.pairing):
            res.fail(f"{dp!s}: {cover.num_components} components for {r}")
        elif not arc_alternation_ok(cover, counts):
            res.fail(f"{dp!s}: arcs do not alternate between lifts")
    return res


def _walk_case(rng):
    r = rng.choice((1, 1, 2, 3))
    return random_realized(rng, rng.randint(0, 4), r)


def check_main_invariance(cases=200, seed=3, steps=12):
    """The canonical covering's invariant vector survives Reidemeister walks."""
    res = CheckResult("canonical cover invariance under walks")
    rng = random.Random(seed)
    for _ in range(cases):
        code = _walk_case(rng)
        before = cover_vector(canonical_cover(code), COVER_F_CAP)
        walked, trace = random_walk(code, steps, rng.randrange(2**31))
        after = cover_vector(canonical_cover(walked), COVER_F_CAP)
        res.cases += 1
        if not before.comparable(after):
            res.fail(f"{code!s} -> {walked!s} via {[str(m) for m in trace]}")
    return res


def check_cut_system_independence(cases=200, seed=4, steps=10):
    res = CheckResult("cover independent of cut system")
    rng = random.Random(seed)
    for t in range(cases):
        r = rng.choice((1, 2, 3))
        even = t % 2 == 0
        code = random_realized(rng, rng.randint(0, 5), r, even=even)
        dp = random_cut_system(rng, code)
        before = cover_vector(coherent_double_cover(dp), COVER_F_CAP)
        walked, trace = random_walk(dp, steps, rng.randrange(2**31), cut_moves=True)
        res.cases += 1
        if not is_cut_system(walked):
            res.fail(f"{dp!s}: walk left the cut systems")
            continue
        if len(walked.cut_points) % 2:
            res.fail(f"{walked!s}: odd number of cut points")
        if is_even(walked)[1] and any(sum(c.values()) % 2 for c in walked.cut_counts()):
            res.fail(f"{walked!s}: odd cut count on a component of an even diagram")
        after = cover_vector(coherent_double_cover(walked), COVER_F_CAP)
        if not before.comparable(after):
            res.fail(f"{dp!s} -> {walked!s}")
    return res


def check_even_link_invariants(cases=200, seed=5):
    """|nu| is cut-system independent, equals |lambda| and the covering over-sums."""
    res = CheckResult("even link nu/lambda/cover over-sum")
    rng = random.Random(seed)
    for _ in range(cases):
        r = rng.randint(2, 3)
        code = random_realized(rng, rng.randint(1, 6), r, even=True)
        systems = [canonical_cut_system(code)] + [random_cut_system(rng, code) for _ in range(3)]
        res.cases += 1
        for i in range(r):
            for j in range(r):
                if i == j:
                    continue
                lam = lambda_abs(code, i, j)
                nus = {nu_abs(p, i, j) for p in systems}
                sums = set()
                for p in systems:
                    oriented = cover_with_cut_orientation(p)
                    sums |= {abs(s) for s in over_sums(oriented, i, j)}
                if nus != {lam} or sums != {lam}:
                    res.fail(f"{code!s} ({i},{j}): lambda={lam} nu={nus} cover={sums}")
    return res


def _q_profile(code):
    cc = canonical_cut_system(code)
    r = code.num_components
    q = {(i, j): q_set(cc, i, j) for i in range(r) for j in range(r) if i != j}
    return q, tuple(self_pair_link(cc, i) for i in range(r))


def check_q_sets(cases=200, seed=6, steps=12):
    res = CheckResult("Q-set pairing and invariance")
    rng = random.Random(seed)
    for _ in range(cases):
        r = rng.randint(2, 3)
        code = random_realized(rng, rng.randint(1, 4), r, even=True)
        res.cases += 1
        for p in (canonical_cut_system(code), random_cut_system(rng, code)):
            cover = coherent_double_cover(p)
            for i in range(r):
                for j in range(r):
                    if i != j:
                        l11, l12, l21, l22 = cover_link_quadruple(cover, i, j)
                        if l11 != l22 or l12 != l21:
                            res.fail(f"{p!s} ({i},{j}): pairing {l11, l12, l21, l22}")
        before = _q_profile(code)
        walked, _ = random_walk(code, steps, rng.randrange(2**31))
        if _q_profile(walked) != before:
            res.fail(f"{code!s} -> {walked!s}: Q profile changed")
    return res


def check_mirror(cases=300, seed=7):
    res = CheckResult("mirror antisymmetry of lk_N")
    rng = random.Random(seed)
    for _ in range(cases):
        knot = _random_knot(rng)
        dp = random_cut_system(rng, knot)
        base = lk_n(dp)
        res.cases += 1
        for mode in ("switch", "reflect"):
            other = lk_n(random_cut_system(rng, mirror_switch(knot, mode)))
            if other != -base:
                res.fail(f"{knot!s} {mode}: {other} vs {base}")
    return res


VT_CANONICAL = "O1+ O2+ V1 # U1+ U2+ V1 #"
LAMBDA_FIXTURE = "O1+ U2+ O3+ U4+\nU1+ O2+ U3+ O4+"
SELF_PAIR_ZERO = "O1+ U2+\nU1+ O2+"
SELF_PAIR_TWO = "O1+ O2+ U1+ U2+ O3+ U4+\nU3+ O4+"


def check_fixture_magnitudes(cases=1, seed=8):
    """Fixed diagrams reproducing the magnitudes quoted for the worked examples."""
    res = CheckResult("worked example magnitudes")
    vt = parse(VT_CANONICAL)
    values = {lk_n(vt), lk_n(mirror_switch(vt, "switch")), lk_n(mirror_switch(vt, "reflect"))}
    res.cases += 1
    if values != {2, -2}:
        res.fail(f"virtual trefoil lk_N values {values}")
    lam = realize(parse(LAMBDA_FIXTURE)).code
    res.cases += 1
    if (lambda_abs(lam, 0, 1), lambda_abs(lam, 1, 0)) != (2, 2):
        res.fail("lambda fixture does not give |lambda| = 2 both ways")
    zero = parse(SELF_PAIR_ZERO)  # normal: the empty set is a cut system
    two = canonical_cut_system(realize(parse(SELF_PAIR_TWO)).code)
    res.cases += 1
    # doubled values: lk~ = 0 and lk~ = 2
    if (self_pair_link(zero, 0), self_pair_link(two, 0)) != (0, 4):
        res.fail("self-pair fixtures do not give 0 and 2")
    if q_set(zero, 0, 1) != q_set(two, 0, 1):
        res.fail("self-pair fixtures should share their Q-set")
    return res


def check_realization(cases=500, seed=9):
    res = CheckResult("realization soundness")
    rng = random.Random(seed)
    for _ in range(cases):
        plain = random_plain(rng, rng.randint(0, 7), rng.randint(1, 3))
        for s in range(3):
            seed_s = rng.randrange(2**31)
            real = realize(plain, seed_s)
            res.cases += 1
            if any(genus(real.code, real.rotations)):
                res.fail(f"{plain!s} seed {seed_s}: genus {genus(real.code, real.rotations)}")
            elif project_to_plain(real.code) != plain:
                res.fail(f"{plain!s} seed {seed_s}: plain round trip failed")
            elif not is_cut_system(canonical_cut_system(real.code)):
                res.fail(f"{plain!s} seed {seed_s}: canonical cut system rejected")
    return res


CHECKS = (
    ("1", check_odd_writhe_covering, 300),
    ("2", check_cover_normal, 300),
    ("3", check_component_structure, 300),
    ("4", check_main_invariance, 200),
    ("5", check_cut_system_independence, 200),
    ("6", check_even_link_invariants, 200),
    ("7", check_q_sets, 200),
    ("8", check_mirror, 300),
    ("9", check_fixture_magnitudes, 1),
    ("10", check_realization, 500),
)


def run_all(cases=None, seed=0):
    """Run every check; ``cases`` overrides each check's default case count."""
    out = []
    for key, fn, default in CHECKS:
        n = default if cases is None else cases
        out.append((key, fn(cases=n, seed=seed * 100 + int(key))))
    return out


def summary(results) -> Counter:
    return Counter("pass" if r.passed else "fail" for _, r in results)
