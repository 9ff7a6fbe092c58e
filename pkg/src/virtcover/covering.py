"""The coherent double covering of a diagram with a cut system.

At the Gauss code level the covering is two copies of the diagram whose
strands are exchanged at every cut point: walking along a lifted component
follows the cyclic order of the base component, toggling between copy 0
and copy 1 each time a cut point is passed.  Chords stay inside their
copy; copy-1 chords get a ``*`` suffix.  Virtual passages are dropped, so
the result is a plain code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleOrientation, NotACutSystem, NotEven
from .gauss import (
    ExtendedGaussCode,
    Passage,
    chords,
    classify_crossings,
    is_even,
    relabel,
    require_valid,
)
from .orientation import canonical_cut_system, is_cut_system, solve_flavor


@dataclass(frozen=True)
class CoverCode:
    """A covering diagram together with its trace back to the base.

    Attributes
    ----------
    code : ExtendedGaussCode
        Plain code of the covering diagram.
    labels : tuple of str
        ``"i.1"`` / ``"i.2"`` label of each cover component (1-based ``i``).
    pairing : tuple
        For each base component, the indices of its two lifts (equal when
        the component has an odd number of cut points and lifts to a
        single circle).
    chord_map : dict
        Base chord id -> (copy-0 id, copy-1 id).
    arc_trace : tuple
        For each cover component, the arcs ``(base component, arc index,
        copy)`` it runs through, in order.
    origin : tuple
        For each cover component, ``(base component, passage index, copy)``
        of every passage.
    """

    code: ExtendedGaussCode
    labels: tuple
    pairing: tuple
    chord_map: dict
    arc_trace: tuple
    origin: tuple

    @property
    def num_components(self) -> int:
        return self.code.num_components


def _arcs(comp_len, slots):
    """Passage index runs between consecutive cut points of one component."""
    n = len(slots)
    arcs = []
    for j in range(n):
        start = slots[j] + 1
        end = slots[(j + 1) % n] + (comp_len if j == n - 1 else 0)
        arcs.append([i % comp_len for i in range(start, end + 1)] if comp_len else [])
    if n == 1 and comp_len:
        arcs[0] = [(slots[0] + 1 + t) % comp_len for t in range(comp_len)]
    return arcs


def coherent_double_cover(code: ExtendedGaussCode) -> CoverCode:
    """Build the coherent double covering of ``code`` along its cut points."""
    require_valid(code)
    if not is_cut_system(code):
        raise NotACutSystem("cut points do not form a cut system")
    ids = set(code.chord_ids())
    work = relabel(code) if any(c + "*" in ids for c in ids) else code
    base_ids = dict(zip(work.chord_ids(), code.chord_ids()))

    def lift(p, copy):
        return Passage(p.kind, p.ident + "*" * copy, p.sign)

    comps, labels, pairing, traces, origins = [], [], [], [], []
    counts = work.cut_counts()
    for k, comp in enumerate(work.components):
        slots = sorted(counts[k].elements())
        m = len(comp)
        if not slots:
            walks = [[(0, list(range(m)), 0)], [(0, list(range(m)), 1)]]
        else:
            arcs = _arcs(m, slots)
            n = len(arcs)
            walk, copy = [], 0
            for step in range(2 * n if n % 2 else n):
                walk.append((step % n, arcs[step % n], copy))
                copy ^= 1
            walks = [walk]
            if n % 2 == 0:
                walks.append([(j, a, c ^ 1) for j, a, c in walk])
        first = len(comps)
        for w, walk in enumerate(walks):
            seq, org = [], []
            for _, arc, copy in walk:
                for i in arc:
                    if comp[i].is_classical:
                        seq.append(lift(comp[i], copy))
                        org.append((k, i, copy))
            comps.append(tuple(seq))
            origins.append(tuple(org))
            traces.append(tuple((k, j, copy) for j, _, copy in walk))
            labels.append(f"{k + 1}.{w + 1}")
        pairing.append((first, len(comps) - 1))
    chord_map = {base_ids[c]: (c, c + "*") for c in work.chord_ids()}
    return CoverCode(
        ExtendedGaussCode(tuple(comps)),
        tuple(labels),
        tuple(pairing),
        chord_map,
        tuple(traces),
        tuple(origins),
    )


def canonical_cover(code: ExtendedGaussCode) -> CoverCode:
    return coherent_double_cover(canonical_cut_system(code))


@dataclass(frozen=True)
class CutOrientedCover:
    """Covering whose components carry the orientation induced by a cut orientation.

    ``component_bits[t]`` is 1 when cover component ``t`` runs against the
    traversal order of ``cover.code``; ``code`` is the cover with those
    components reversed and every chord sign recomputed.
    """

    cover: CoverCode
    component_bits: tuple
    effective_signs: dict
    code: ExtendedGaussCode


def cover_with_cut_orientation(code: ExtendedGaussCode) -> CutOrientedCover:
    require_valid(code)
    if not is_cut_system(code):
        raise NotACutSystem("cut points do not form a cut system")
    if not is_even(code)[1]:
        raise NotEven("cut orientation needs an even diagram")
    orient = solve_flavor(code, "cut")
    cover = coherent_double_cover(code)
    bits = []
    for t, org in enumerate(cover.origin):
        inherited = {orient.direction(k, i) ^ copy for k, i, copy in org}
        if len(inherited) > 1:
            raise InfeasibleOrientation(f"inherited orientation incoherent on cover component {t}")
        bits.append(inherited.pop() if inherited else 0)
    signs = {}
    for c, ch in chords(cover.code).items():
        rho = bits[ch.over_pos[0]] + bits[ch.under_pos[0]]
        signs[c] = ch.sign * (-1) ** rho
    comps = []
    for t, comp in enumerate(cover.code.components):
        seq = [Passage(p.kind, p.ident, signs[p.ident]) for p in comp]
        comps.append(tuple(reversed(seq)) if bits[t] else tuple(seq))
    return CutOrientedCover(cover, tuple(bits), signs, ExtendedGaussCode(tuple(comps)))


def over_sums(oriented: CutOrientedCover, i: int, j: int) -> tuple[int, int]:
    """Signed sums of crossings between lift ``D^i_k`` (over) and the lifts of ``j``.

    Returns the pair for ``k = 1, 2``.
    """
    cover = oriented.cover
    lifts_j = set(cover.pairing[j])
    types = classify_crossings(oriented.code)
    signs = {c: ch.sign for c, ch in chords(oriented.code).items()}
    out = []
    for t in cover.pairing[i]:
        out.append(
            sum(
                signs[c]
                for c, ty in types.items()
                if ty.over_component == t and ty.under_component in lifts_j
            )
        )
    return tuple(out)
