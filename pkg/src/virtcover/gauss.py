"""Extended Gauss codes: the data model every other module works on.

A diagram is a list of components.  Each component is the cyclic sequence
of passages met while walking along it in its own orientation.  A classical
passage ``O3+`` / ``U3+`` is one end of chord ``3``; a virtual passage
``V1`` is one strand of virtual crossing ``1``.  Cut points are not
passages: they sit in *slots*, slot ``i`` being the gap right after
passage ``i`` of the component (cyclically).  A component without
passages has the single slot ``0``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, NamedTuple, Sequence

from .errors import InvalidCode

OVER, UNDER, VIRTUAL = "O", "U", "V"

Position = tuple  # (component_index, passage_index)
Slot = tuple  # (component_index, slot_index)


@dataclass(frozen=True, order=True)
class Passage:
    kind: str
    ident: str
    sign: int = 0

    @classmethod
    def over(cls, ident, sign):
        return cls(OVER, str(ident), sign)

    @classmethod
    def under(cls, ident, sign):
        return cls(UNDER, str(ident), sign)

    @classmethod
    def virtual(cls, ident):
        return cls(VIRTUAL, str(ident), 0)

    @property
    def is_classical(self) -> bool:
        return self.kind != VIRTUAL

    @property
    def is_virtual(self) -> bool:
        return self.kind == VIRTUAL

    @property
    def is_over(self) -> bool:
        return self.kind == OVER

    def __str__(self):
        if self.is_virtual:
            return f"V{self.ident}"
        return f"{self.kind}{self.ident}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class ExtendedGaussCode:
    """Immutable diagram-with-cut-points.

    ``cut_points`` is a sorted tuple of ``(component, slot)`` pairs; a slot
    may appear several times.
    """

    components: tuple = ()
    cut_points: tuple = field(default=())

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        cuts = tuple(sorted((int(k), int(s)) for k, s in self.cut_points))
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "cut_points", cuts)

    def __str__(self):
        from .codec import serialize

        return serialize(self)

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    @property
    def is_plain(self) -> bool:
        return not self.cut_points and not any(
            p.is_virtual for comp in self.components for p in comp
        )

    def slot_count(self, k: int) -> int:
        return max(len(self.components[k]), 1)

    def positions(self) -> Iterator[tuple[Position, Passage]]:
        for k, comp in enumerate(self.components):
            for i, p in enumerate(comp):
                yield (k, i), p

    def cut_counts(self) -> list[Counter]:
        """Per component, a Counter ``slot -> number of cut points``."""
        counts = [Counter() for _ in self.components]
        for k, s in self.cut_points:
            counts[k][s] += 1
        return counts

    def chord_ids(self) -> list[str]:
        seen = {}
        for _, p in self.positions():
            if p.is_classical:
                seen.setdefault(p.ident, None)
        return list(seen)

    def virtual_ids(self) -> list[str]:
        seen = {}
        for _, p in self.positions():
            if p.is_virtual:
                seen.setdefault(p.ident, None)
        return list(seen)

    def num_chords(self) -> int:
        return sum(1 for _, p in self.positions() if p.is_over)

    def with_cuts(self, cut_points: Iterable[Slot]) -> "ExtendedGaussCode":
        return ExtendedGaussCode(self.components, tuple(cut_points))

    def without_cuts(self) -> "ExtendedGaussCode":
        return ExtendedGaussCode(self.components, ())


@dataclass(frozen=True)
class Chord:
    chord_id: str
    over_pos: Position
    under_pos: Position
    sign: int

    def endpoints(self) -> tuple[Position, Position]:
        return self.over_pos, self.under_pos


class CrossingType(NamedTuple):
    """Component indices of the over and under strand of a crossing."""

    over_component: int
    under_component: int

    @property
    def is_self(self) -> bool:
        return self.over_component == self.under_component

    @property
    def components(self) -> tuple[int, int]:
        return tuple(sorted((self.over_component, self.under_component)))


def validate(code: ExtendedGaussCode) -> list[str]:
    """Return a list of human-readable violations; empty iff ``code`` is valid."""
    violations = []
    classical = {}
    virtual = Counter()
    for (k, i), p in code.positions():
        if p.kind not in (OVER, UNDER, VIRTUAL):
            violations.append(f"passage {k}:{i} has unknown kind {p.kind!r}")
        elif p.is_virtual:
            virtual[p.ident] += 1
        else:
            if p.sign not in (1, -1):
                violations.append(f"chord {p.ident} has invalid sign {p.sign!r}")
            classical.setdefault(p.ident, []).append(p)
    for ident, ps in classical.items():
        if len(ps) != 2:
            violations.append(f"chord {ident} has {len(ps)} occurrence{'s' * (len(ps) != 1)}")
            continue
        if sorted(p.kind for p in ps) != [OVER, UNDER]:
            violations.append(f"chord {ident} needs one over and one under passage")
        if ps[0].sign != ps[1].sign:
            violations.append(f"chord {ident} has mismatched signs")
    for ident, n in virtual.items():
        if n != 2:
            violations.append(f"virtual crossing {ident} has {n} occurrence{'s' * (n != 1)}")
    for k, s in code.cut_points:
        if not 0 <= k < code.num_components:
            violations.append(f"cut point on missing component {k}")
        elif not 0 <= s < code.slot_count(k):
            violations.append(f"cut point slot {s} out of range on component {k}")
    return violations


def require_valid(code: ExtendedGaussCode) -> ExtendedGaussCode:
    violations = validate(code)
    if violations:
        raise InvalidCode(violations)
    return code


def chords(code: ExtendedGaussCode) -> dict[str, Chord]:
    """Chords keyed by id, in order of first occurrence."""
    over, under, sign = {}, {}, {}
    order = []
    for pos, p in code.positions():
        if p.is_virtual:
            continue
        if p.ident not in sign:
            order.append(p.ident)
            sign[p.ident] = p.sign
        (over if p.is_over else under)[p.ident] = pos
    return {c: Chord(c, over[c], under[c], sign[c]) for c in order}


def project_to_plain(code: ExtendedGaussCode) -> ExtendedGaussCode:
    """Drop virtual passages and cut points."""
    require_valid(code)
    return ExtendedGaussCode(
        tuple(tuple(p for p in comp if p.is_classical) for comp in code.components)
    )


def classify_crossings(code: ExtendedGaussCode) -> dict[str, CrossingType]:
    require_valid(code)
    return {
        c: CrossingType(ch.over_pos[0], ch.under_pos[0]) for c, ch in chords(code).items()
    }


def is_even(code: ExtendedGaussCode) -> tuple[list[bool], bool]:
    """Per-component parity of classical passage counts, and their conjunction."""
    require_valid(code)
    per = [sum(p.is_classical for p in comp) % 2 == 0 for comp in code.components]
    return per, all(per)


def mirror_switch(
    code: ExtendedGaussCode, mode: Literal["switch", "reflect"] = "switch"
) -> ExtendedGaussCode:
    """Crossing switch (``"switch"``) or reflection (``"reflect"``).

    Switching swaps over and under and negates the sign; reflecting only
    negates the sign.
    """
    require_valid(code)
    if mode not in ("switch", "reflect"):
        raise ValueError(f"unknown mirror mode {mode!r}")
    swap = {OVER: UNDER, UNDER: OVER}

    def flip(p):
        if p.is_virtual:
            return p
        kind = swap[p.kind] if mode == "switch" else p.kind
        return Passage(kind, p.ident, -p.sign)

    return ExtendedGaussCode(
        tuple(tuple(flip(p) for p in comp) for comp in code.components), code.cut_points
    )


def relabel(code: ExtendedGaussCode) -> ExtendedGaussCode:
    """Rename chords and virtual crossings to 1, 2, ... in traversal order."""
    chord_names, virt_names = {}, {}
    comps = []
    for comp in code.components:
        out = []
        for p in comp:
            names = virt_names if p.is_virtual else chord_names
            name = names.setdefault(p.ident, str(len(names) + 1))
            out.append(Passage(p.kind, name, p.sign))
        comps.append(tuple(out))
    return ExtendedGaussCode(tuple(comps), code.cut_points)


def writhe(code: ExtendedGaussCode) -> int:
    return sum(ch.sign for ch in chords(code).values())


def classical_before(comp: Sequence[Passage]) -> list[int]:
    """For each index, the number of classical passages strictly before it."""
    out, n = [], 0
    for p in comp:
        out.append(n)
        n += p.is_classical
    return out


def cuts_before(code: ExtendedGaussCode, k: int) -> list[int]:
    """For each passage index of component ``k``, cut points in slots before it.

    The count starts at the component's start point, which sits just before
    passage 0, so cut points of the last slot are never counted.
    """
    counts = code.cut_counts()[k]
    out, n = [], 0
    for i in range(len(code.components[k])):
        out.append(n)
        n += counts.get(i, 0)
    return out


def interior_endpoint_count(code: ExtendedGaussCode, chord_id: str) -> int:
    """Chord endpoints strictly inside the arc from the tail (over) to the head (under).

    Only defined for a single component; virtual passages are ignored.
    """
    plain = [p for p in code.components[0] if p.is_classical]
    n = len(plain)
    tail = next(i for i, p in enumerate(plain) if p.ident == chord_id and p.is_over)
    head = next(i for i, p in enumerate(plain) if p.ident == chord_id and not p.is_over)
    return (head - tail - 1) % n


def make_code(*components: str, cuts: Iterable[Slot] = ()) -> ExtendedGaussCode:
    """Build a code from whitespace-separated token strings (no ``#`` tokens)."""
    from .codec import parse_component_tokens

    comps = tuple(parse_component_tokens(c) for c in components)
    return require_valid(ExtendedGaussCode(comps, tuple(cuts)))
