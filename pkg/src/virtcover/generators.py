"""Seeded random codes and cut systems for property checks."""

from __future__ import annotations

import random

from .gauss import ExtendedGaussCode, Passage
from .realize import realize


def random_plain(rng: random.Random, n_chords: int, n_components: int = 1, even: bool = False):
    """Random plain code; with ``even`` every component gets an even number of passages."""
    tokens = []
    for c in range(1, n_chords + 1):
        s = rng.choice((1, -1))
        tokens += [Passage.over(c, s), Passage.under(c, s)]
    rng.shuffle(tokens)
    total = len(tokens)
    if n_components == 1:
        return ExtendedGaussCode((tuple(tokens),))
    step = 2 if even else 1
    cuts = sorted(rng.choice(range(0, total + 1, step)) for _ in range(n_components - 1))
    comps, prev = [], 0
    for x in cuts + [total]:
        comps.append(tuple(tokens[prev:x]))
        prev = x
    return ExtendedGaussCode(tuple(comps))


def add_random_virtuals(rng: random.Random, code: ExtendedGaussCode, count: int):
    """Insert ``count`` virtual crossings at random places (the result need not be planar)."""
    comps = [list(c) for c in code.components]
    for v in range(1, count + 1):
        for _ in range(2):
            k = rng.randrange(len(comps))
            comps[k].insert(rng.randint(0, len(comps[k])), Passage.virtual(v))
    return ExtendedGaussCode(tuple(tuple(c) for c in comps))


def random_realized(rng: random.Random, n_chords: int, n_components: int = 1, even: bool = False):
    plain = random_plain(rng, n_chords, n_components, even)
    return realize(plain, seed=rng.randrange(2**31)).code


def _gaps(comp):
    """Slot groups between consecutive classical passages.

    Returns ``(index of the passage opening the gap, slots in the gap)``; a
    component without classical passages is one gap with every slot.
    """
    classical = [i for i, p in enumerate(comp) if p.is_classical]
    if not classical:
        return [(None, list(range(max(len(comp), 1))))]
    gaps = []
    for t, i in enumerate(classical):
        j = classical[(t + 1) % len(classical)]
        slots, s = [], i
        while True:
            slots.append(s)
            s = (s + 1) % len(comp)
            if s == j:
                break
        gaps.append((i, slots))
    return gaps


def random_cut_system(rng: random.Random, code: ExtendedGaussCode, extra_pairs: int = 2):
    """A random cut system of ``code`` (existing cut points are replaced).

    Picks a random sink/source type for every chord, places the cut points
    each gap needs for the induced orientation to switch correctly, then
    adds up to ``extra_pairs`` pairs of cut points inside random gaps.
    """
    types = {}
    for (k, i), p in code.positions():
        if p.is_classical and p.ident not in types:
            types[p.ident] = rng.randrange(2)

    def type_of(p):
        return types[p.ident] ^ (0 if p.is_over else 1)

    cuts = []
    all_gaps = []
    for k, comp in enumerate(code.components):
        gaps = _gaps(comp)
        for opener, slots in gaps:
            all_gaps.append((k, slots))
            if opener is None:
                continue
            nxt = comp[(slots[-1] + 1) % len(comp)]
            need = (1 ^ type_of(comp[opener])) ^ type_of(nxt)
            if need:
                cuts.append((k, rng.choice(slots)))
    for _ in range(rng.randint(0, extra_pairs)):
        k, slots = rng.choice(all_gaps)
        cuts += [(k, rng.choice(slots)), (k, rng.choice(slots))]
    return code.with_cuts(cuts)
