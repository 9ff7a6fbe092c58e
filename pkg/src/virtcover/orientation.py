"""Alternate, cut and virtual orientations.

An orientation of a component is described by the direction bit of each
of its segments (``0`` = agrees with the traversal order of the code).
The bit flips at every *flip point*; which points flip depends on the
flavor:

``alternate``
    classical passages and cut points,
``cut``
    cut points only,
``virtual``
    virtual passages only.

Segments are numbered from the one containing the component's start point
(just before passage 0), so segment ``j`` follows flip point ``j - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import InfeasibleOrientation, NonEmptyCutSet, NotAKnot
from .gauss import ExtendedGaussCode, chords, interior_endpoint_count, require_valid

Flavor = Literal["alternate", "cut", "virtual"]


class ParityUnionFind:
    """Union-find over GF(2) variables with constraints ``x_a + x_b = p``."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.parity = [0] * n  # parity to parent

    def find(self, a):
        path = []
        while self.parent[a] != a:
            path.append(a)
            a = self.parent[a]
        # path compression, re-deriving parities to the root
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = a
        return a

    def parity_to_root(self, a):
        self.find(a)
        return self.parity[a] if self.parent[a] != a else 0

    def union(self, a, b, p) -> bool:
        """Impose ``x_a + x_b = p``; False if that contradicts earlier constraints."""
        ra, rb = self.find(a), self.find(b)
        pa, pb = self.parity_to_root(a), self.parity_to_root(b)
        if ra == rb:
            return (pa ^ pb) == p
        self.parent[ra] = rb
        self.parity[ra] = pa ^ pb ^ p
        return True

    def value(self, a, root_values=None):
        r = self.find(a)
        base = 0 if root_values is None else root_values.get(r, 0)
        return base ^ self.parity_to_root(a)


@dataclass(frozen=True)
class OrientationAssignment:
    """Direction bits of every segment, per component.

    ``flip_points[k]`` lists ``("passage", i)`` or ``("cut", slot)`` in
    traversal order from the start point; ``segment_bits[k][j]`` is the bit
    of segment ``j``.
    """

    flavor: str
    flip_points: tuple
    segment_bits: tuple
    flips_before: tuple  # per component, per passage: flip points before it

    def bit_before(self, k: int, i: int) -> int:
        """Direction bit of the segment just before passage ``i``."""
        return self.segment_bits[k][self.flips_before[k][i] % len(self.segment_bits[k])]

    def direction(self, k: int, i: int) -> int:
        """Direction bit of the strand at a passage that is not a flip point."""
        return self.bit_before(k, i)

    def passage_type(self, k: int, i: int) -> int:
        """Sink/source type of a classical passage under an alternate orientation."""
        return self.bit_before(k, i)


def _flip_layout(code, flavor):
    counts = code.cut_counts()
    layouts = []
    for k, comp in enumerate(code.components):
        flips, before = [], []
        for i, p in enumerate(comp):
            before.append(len(flips))
            if (flavor == "alternate" and p.is_classical) or (flavor == "virtual" and p.is_virtual):
                flips.append(("passage", i))
            if flavor in ("alternate", "cut"):
                flips.extend([("cut", i)] * counts[k].get(i, 0))
        if not comp and flavor in ("alternate", "cut"):
            flips.extend([("cut", 0)] * counts[k].get(0, 0))
        layouts.append((tuple(flips), tuple(before)))
    return layouts


def _assignment(flavor, layouts, start_bits):
    bits = []
    for (flips, _), x in zip(layouts, start_bits):
        n = max(len(flips), 1)
        bits.append(tuple(x ^ (j % 2) for j in range(n)))
    return OrientationAssignment(
        flavor,
        tuple(f for f, _ in layouts),
        tuple(bits),
        tuple(b for _, b in layouts),
    )


def solve_alternate(code: ExtendedGaussCode) -> OrientationAssignment:
    """Alternate orientation flipping at classical passages and cut points.

    Each chord gets one endpoint of each sink/source type.  Raises
    :class:`InfeasibleOrientation` when none exists.
    """
    require_valid(code)
    layouts = _flip_layout(code, "alternate")
    for k, (flips, _) in enumerate(layouts):
        if len(flips) % 2:
            raise InfeasibleOrientation(
                f"component {k} has an odd number of flip points", component=k
            )
    uf = ParityUnionFind(code.num_components)
    for c, ch in chords(code).items():
        (k1, i1), (k2, i2) = ch.over_pos, ch.under_pos
        p = 1 ^ (layouts[k1][1][i1] % 2) ^ (layouts[k2][1][i2] % 2)
        if not uf.union(k1, k2, p):
            raise InfeasibleOrientation(f"chord {c} cannot get opposite types", chord=c)
    start = [uf.value(k) for k in range(code.num_components)]
    return _assignment("alternate", layouts, start)


def has_alternate_orientation(code: ExtendedGaussCode) -> bool:
    try:
        solve_alternate(code)
    except InfeasibleOrientation:
        return False
    return True


def odd_crossings(code: ExtendedGaussCode) -> set:
    """Chords with an odd number of endpoints strictly inside their tail-to-head arc."""
    require_valid(code)
    if not code.is_knot:
        raise NotAKnot(f"expected 1 component, got {code.num_components}")
    return {c for c in chords(code) if interior_endpoint_count(code, c) % 2}


def is_normal(code: ExtendedGaussCode) -> bool:
    """Checkerboard colorability, ignoring any cut points."""
    result = has_alternate_orientation(code.without_cuts())
    if code.is_knot:
        # independent criterion: every chord has an even interior count
        assert result == (not odd_crossings(code)), "normality criteria disagree"
    return result


def is_cut_system(code: ExtendedGaussCode) -> bool:
    """Whether the code's cut points form a cut system of its diagram."""
    return has_alternate_orientation(code)


def canonical_cut_system(code: ExtendedGaussCode) -> ExtendedGaussCode:
    """Put one cut point right after each virtual passage."""
    require_valid(code)
    if code.cut_points:
        raise NonEmptyCutSet("canonical cut system needs a code without cut points")
    cuts = [(k, i) for (k, i), p in code.positions() if p.is_virtual]
    return code.with_cuts(cuts)


def solve_flavor(code: ExtendedGaussCode, flavor: Flavor) -> OrientationAssignment:
    """Cut or virtual orientation; the start segment of each component keeps bit 0."""
    require_valid(code)
    if flavor not in ("cut", "virtual"):
        raise ValueError(f"unknown flavor {flavor!r}")
    layouts = _flip_layout(code, flavor)
    for k, (flips, _) in enumerate(layouts):
        if len(flips) % 2:
            raise InfeasibleOrientation(
                f"component {k} has an odd number of {flavor} flip points", component=k
            )
    return _assignment(flavor, layouts, [0] * code.num_components)
