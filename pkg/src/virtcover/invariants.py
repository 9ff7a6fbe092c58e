"""Numeric invariants of diagrams and of their coherent double coverings.

Linking numbers are kept doubled (``2 * lk``) so everything stays an
integer; only ``lk_N`` is halved, where integrality is guaranteed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .bracket import DEFAULT_CAP, f_polynomial
from .covering import CoverCode, coherent_double_cover
from .errors import BadComponent, InfeasibleOrientation, NotACutSystem, NotAKnot, NotEven
from .gauss import ExtendedGaussCode, chords, is_even, require_valid, writhe
from .orientation import (
    OrientationAssignment,
    canonical_cut_system,
    is_cut_system,
    is_normal,
    odd_crossings,
    solve_flavor,
)


def odd_writhe(code: ExtendedGaussCode) -> int:
    """Sum of the signs of the odd crossings of a knot."""
    odd = odd_crossings(code)
    return sum(ch.sign for c, ch in chords(code).items() if c in odd)


def linking(code: ExtendedGaussCode, i: int, j: int) -> int:
    """Doubled linking number of components ``i`` and ``j``."""
    require_valid(code)
    n = code.num_components
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise BadComponent(f"bad component pair ({i}, {j}) for {n} components")
    pair = {i, j}
    return sum(
        ch.sign for ch in chords(code).values() if {ch.over_pos[0], ch.under_pos[0]} == pair
    )


def linking_matrix(code: ExtendedGaussCode) -> dict:
    return {(i, j): linking(code, i, j) for i, j in combinations(range(code.num_components), 2)}


def lk_n(code: ExtendedGaussCode) -> int:
    """Linking number of the two-component covering of a knot with a cut system."""
    require_valid(code)
    if not code.is_knot:
        raise NotAKnot(f"expected 1 component, got {code.num_components}")
    if not is_cut_system(code):
        raise NotACutSystem("cut points do not form a cut system")
    cover = coherent_double_cover(code)
    assert cover.num_components == 2, "a knot must lift to two components"
    doubled = linking(cover.code, 0, 1)
    assert doubled % 2 == 0
    return doubled // 2


def _adjusted_over_sum(code, orient: OrientationAssignment, i, j):
    total = 0
    for ch in chords(code).values():
        (ko, io), (ku, iu) = ch.over_pos, ch.under_pos
        if ko == i and ku == j:
            total += ch.sign * (-1) ** (orient.direction(ko, io) + orient.direction(ku, iu))
    return total


def _check_pair(code, i, j):
    n = code.num_components
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise BadComponent(f"bad component pair ({i}, {j}) for {n} components")


def lambda_signed(code: ExtendedGaussCode, i: int, j: int) -> int:
    """Over-sum of ``i`` on ``j`` under the virtual orientation (sign is a convention)."""
    require_valid(code)
    _check_pair(code, i, j)
    if not is_even(code)[1]:
        raise NotEven("the virtual orientation invariant needs an even diagram")
    orient = solve_flavor(code.without_cuts(), "virtual")
    return _adjusted_over_sum(code, orient, i, j)


def lambda_abs(code: ExtendedGaussCode, i: int, j: int) -> int:
    return abs(lambda_signed(code, i, j))


def nu_signed(code: ExtendedGaussCode, i: int, j: int) -> int:
    """Over-sum of ``i`` on ``j`` under the cut orientation of the code's cut points."""
    require_valid(code)
    _check_pair(code, i, j)
    if not is_even(code)[1]:
        raise NotEven("the cut orientation invariant needs an even diagram")
    if not is_cut_system(code):
        raise NotACutSystem("cut points do not form a cut system")
    orient = solve_flavor(code, "cut")
    return _adjusted_over_sum(code, orient, i, j)


def nu_abs(code: ExtendedGaussCode, i: int, j: int) -> int:
    return abs(nu_signed(code, i, j))


def _even_cover(code):
    require_valid(code)
    if not is_even(code)[1]:
        raise NotEven("needs an even diagram")
    if not is_cut_system(code):
        raise NotACutSystem("cut points do not form a cut system")
    return coherent_double_cover(code)


def cover_link_quadruple(cover: CoverCode, i: int, j: int) -> tuple:
    """Doubled ``(lk(i1,j1), lk(i1,j2), lk(i2,j1), lk(i2,j2))`` between lifts."""
    (i1, i2), (j1, j2) = cover.pairing[i], cover.pairing[j]
    lk = lambda a, b: linking(cover.code, a, b)  # noqa: E731
    return lk(i1, j1), lk(i1, j2), lk(i2, j1), lk(i2, j2)


def q_set(code: ExtendedGaussCode, i: int, j: int) -> tuple:
    """The multiset of doubled linking numbers of ``D^i_1`` with both lifts of ``j``."""
    _check_pair(code, i, j)
    cover = _even_cover(code)
    l11, l12, _, _ = cover_link_quadruple(cover, i, j)
    return tuple(sorted((l11, l12)))


def self_pair_link(code: ExtendedGaussCode, i: int) -> int:
    """Doubled linking number between the two lifts of component ``i``."""
    cover = _even_cover(code)
    if not 0 <= i < code.num_components:
        raise BadComponent(f"no component {i}")
    a, b = cover.pairing[i]
    return linking(cover.code, a, b)


def alternation_over_sum(code: ExtendedGaussCode, i: int, j: int) -> int:
    """Over-sum of ``i`` on ``j`` with each sign weighted by ``(-1)^(K(o)+K(u))``.

    ``K`` counts classical passages before a passage on its component.  Up
    to a global sign this equals the cut-orientation sum for every cut
    system, which makes it an oracle for ``nu_abs`` and ``lambda_abs``.
    """
    from .gauss import classical_before

    before = [classical_before(comp) for comp in code.components]
    total = 0
    for ch in chords(code).values():
        (ko, io), (ku, iu) = ch.over_pos, ch.under_pos
        if ko == i and ku == j:
            total += ch.sign * (-1) ** (before[ko][io] + before[ku][iu])
    return total


def resolve_cut_system(code: ExtendedGaussCode, mode: str = "auto") -> tuple[ExtendedGaussCode, str]:
    """Pick the cut system used for coverings.

    ``inline`` keeps the code's cut points, ``canonical`` replaces them by the
    canonical system, ``auto`` keeps them when present.
    """
    if mode == "auto":
        mode = "inline" if code.cut_points else "canonical"
    if mode == "canonical":
        return canonical_cut_system(code.without_cuts()), "canonical"
    if mode == "inline":
        return code, "inline"
    raise ValueError(f"unknown cut mode {mode!r}")


def _swap_canonical(cover: CoverCode, base_components: int) -> tuple:
    """Doubled linking matrix of the cover, minimized over swapping the lifts of each component."""
    best = None
    for mask in range(2 ** base_components):
        order = []
        for k, (a, b) in enumerate(cover.pairing):
            if a == b:
                order.append(a)
            elif (mask >> k) & 1:
                order.extend([b, a])
            else:
                order.extend([a, b])
        mat = tuple(
            linking(cover.code, order[s], order[t]) for s, t in combinations(range(len(order)), 2)
        )
        if best is None or mat < best:
            best = mat
    return best


@dataclass(frozen=True)
class CoverVector:
    """Comparable summary of a covering diagram."""

    components: int
    lifts: tuple
    linking: tuple
    normal: bool
    f_polynomial: tuple | None

    def comparable(self, other: "CoverVector") -> bool:
        """Equality, ignoring f-polynomials when either side skipped it."""
        same = (self.components, self.lifts, self.linking, self.normal) == (
            other.components,
            other.lifts,
            other.linking,
            other.normal,
        )
        if self.f_polynomial is None or other.f_polynomial is None:
            return same
        return same and self.f_polynomial == other.f_polynomial


def cover_vector(cover: CoverCode, f_cap: int | None = 14) -> CoverVector:
    base = len(cover.pairing)
    f = None
    if f_cap is None or cover.code.num_chords() <= f_cap:
        f = tuple(sorted(f_polynomial(cover.code, cap=None).items()))
    return CoverVector(
        cover.num_components,
        tuple(1 if a == b else 2 for a, b in cover.pairing),
        _swap_canonical(cover, base),
        is_normal(cover.code),
        f,
    )


@dataclass(frozen=True)
class CoverSummary:
    components: int
    labels: tuple
    normal: bool
    doubled_linking: dict


@dataclass(frozen=True)
class InvariantReport:
    """Everything :func:`compute_report` knows about a diagram.

    Component indices in the maps are 1-based; linking values are doubled.
    Entries that do not apply (odd writhe of a link, ``lambda`` of an odd
    diagram...) are ``None``.
    """

    components: int
    even: bool
    normal: bool
    cut_system: str
    is_cut_system: bool
    writhe: int
    odd_writhe: int | None
    lk_n: int | None
    doubled_linking: dict
    cover: CoverSummary | None
    lambda_abs: dict | None
    nu_abs: dict | None
    q_sets: dict | None
    self_pair_link: dict | None
    f_polynomial: dict | None


def compute_report(code: ExtendedGaussCode, cut: str = "auto", f_cap: int = DEFAULT_CAP) -> InvariantReport:
    require_valid(code)
    n = code.num_components
    even = is_even(code)[1]
    with_cuts, cut_label = resolve_cut_system(code, cut)
    valid_cuts = is_cut_system(with_cuts)
    ordered = list(permutations(range(n), 2))

    cover = None
    if valid_cuts:
        cc = coherent_double_cover(with_cuts)
        labels = cc.labels
        cover = CoverSummary(
            cc.num_components,
            labels,
            is_normal(cc.code),
            {(labels[a], labels[b]): v for (a, b), v in linking_matrix(cc.code).items()},
        )

    lam = None
    if even:
        try:
            lam = {(i + 1, j + 1): lambda_abs(code, i, j) for i, j in ordered}
        except InfeasibleOrientation:
            lam = None
    nu = q = spl = None
    if even and valid_cuts:
        nu = {(i + 1, j + 1): nu_abs(with_cuts, i, j) for i, j in ordered}
        q = {(i + 1, j + 1): q_set(with_cuts, i, j) for i, j in ordered}
        spl = {i + 1: self_pair_link(with_cuts, i) for i in range(n)}

    f = None
    if code.num_chords() <= f_cap:
        f = f_polynomial(code, cap=f_cap)

    return InvariantReport(
        components=n,
        even=even,
        normal=is_normal(code),
        cut_system=cut_label,
        is_cut_system=valid_cuts,
        writhe=writhe(code),
        odd_writhe=odd_writhe(code) if code.is_knot else None,
        lk_n=lk_n(with_cuts) if code.is_knot and valid_cuts else None,
        doubled_linking={(i + 1, j + 1): v for (i, j), v in linking_matrix(code).items()},
        cover=cover,
        lambda_abs=lam,
        nu_abs=nu,
        q_sets=q,
        self_pair_link=spl,
        f_polynomial=f,
    )
