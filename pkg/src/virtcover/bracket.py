"""Kauffman bracket of a (virtual) Gauss code.

Every classical crossing contributes four ends: over-in, over-out,
under-in, under-out.  The diagram joins the out-end of each passage to the
in-end of the next classical passage on its component; a smoothing pairs
the four ends of a crossing two by two.  Loops of a state are the cycles of
the union of both pairings, so virtual crossings never matter.

At a positive crossing the A-smoothing is the oriented one
(over-in with under-out, under-in with over-out); at a negative crossing
it is the other one.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import product

from .errors import TooLarge
from .gauss import ExtendedGaussCode, chords, require_valid, writhe

OI, OO, UI, UO = range(4)
DEFAULT_CAP = 16


def _poly_mul(p, q):
    out = defaultdict(int)
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] += c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


_LOOP = {2: -1, -2: -1}  # d = -A^2 - A^-2


def _ends(code):
    """Diagram pairing of ends, the crossing order and per-crossing smoothings."""
    chs = chords(code)
    index = {c: n for n, c in enumerate(chs)}
    edge = {}
    free_loops = 0
    for comp in code.components:
        seq = [p for p in comp if p.is_classical]
        if not seq:
            free_loops += 1
            continue
        for t, p in enumerate(seq):
            q = seq[(t + 1) % len(seq)]
            a = 4 * index[p.ident] + (OO if p.is_over else UO)
            b = 4 * index[q.ident] + (OI if q.is_over else UI)
            edge[a] = b
            edge[b] = a
    smoothings = []
    for c, ch in chs.items():
        base = 4 * index[c]
        oriented = ((base + OI, base + UO), (base + UI, base + OO))
        other = ((base + OI, base + UI), (base + OO, base + UO))
        # (A-smoothing, B-smoothing)
        smoothings.append((oriented, other) if ch.sign > 0 else (other, oriented))
    return edge, smoothings, free_loops


def _finish(terms, free_loops, w):
    """Sum ``coef * A^a * d^(loops-1)`` and normalize by ``(-A^3)^-w``."""
    total = {}
    for (a, loops), coef in terms.items():
        loops += free_loops
        if loops == 0:
            poly = {a: coef}
        else:
            poly = {a: coef}
            for _ in range(loops - 1):
                poly = _poly_mul(poly, _LOOP)
        total = _poly_add(total, poly)
    sign = -1 if w % 2 else 1
    return {e - 3 * w: sign * c for e, c in total.items() if c}


def _check_size(code, cap):
    n = code.num_chords()
    if cap is not None and n > cap:
        raise TooLarge(f"{n} chords exceeds the cap of {cap}")


def bracket_state_sum(code: ExtendedGaussCode, cap: int | None = DEFAULT_CAP) -> dict:
    """Normalized bracket by enumerating all ``2^n`` states.  Slow; used as an oracle."""
    require_valid(code)
    _check_size(code, cap)
    edge, smoothings, free_loops = _ends(code)
    terms = Counter()
    for choice in product((0, 1), repeat=len(smoothings)):
        mate = {}
        for pick, sm in zip(choice, smoothings):
            for a, b in sm[pick]:
                mate[a] = b
                mate[b] = a
        seen, loops = set(), 0
        for start in mate:
            if start in seen:
                continue
            loops += 1
            x = start
            while x not in seen:
                seen.add(x)
                y = mate[x]
                seen.add(y)
                x = edge[y]
        a = sum(1 if pick == 0 else -1 for pick in choice)
        terms[a, loops] += 1
    return _finish(terms, free_loops, writhe(code))


def f_polynomial(code: ExtendedGaussCode, cap: int | None = DEFAULT_CAP) -> dict:
    """Normalized bracket ``(-A^3)^-w <D>`` as ``{exponent: coefficient}``.

    Sums the same states as :func:`bracket_state_sum`, crossing by crossing,
    merging partial states that leave the same open strands connected.
    """
    require_valid(code)
    _check_size(code, cap)
    edge, smoothings, free_loops = _ends(code)
    processed = set()
    states = {(): Counter({(0, 0): 1})}
    for sm in smoothings:
        cset = {x for pair in sm[0] for x in pair}
        new_states = defaultdict(Counter)
        for state, terms in states.items():
            mate = {}
            for a, b in state:
                mate[a] = b
                mate[b] = a
            for pick, delta in ((0, 1), (1, -1)):
                smooth = {}
                for a, b in sm[pick]:
                    smooth[a] = b
                    smooth[b] = a
                pairs, loops = _absorb(cset, smooth, edge, mate, processed)
                kept = tuple(p for p in state if p[0] not in cset and p[1] not in cset)
                key = tuple(sorted(kept + pairs))
                target = new_states[key]
                for (a, l), coef in terms.items():
                    target[a + delta, l + loops] += coef
        processed |= cset
        states = new_states
    terms = states.get((), Counter())
    return _finish(terms, free_loops, writhe(code))


def _absorb(cset, smooth, edge, mate, processed):
    """Glue one smoothed crossing onto the processed region.

    Returns the new stub pairs through the crossing and the number of loops
    it closes.
    """
    visited = set()

    def walk(e):
        while True:
            visited.add(e)
            e2 = smooth[e]
            visited.add(e2)
            f = edge[e2]
            if f in cset:
                if f in visited:
                    return None
                e = f
                continue
            if f in processed:
                m = mate[e2]
                if m in cset:
                    if m in visited:
                        return None
                    e = m
                    continue
                return m
            return f

    pairs = []
    starts = []
    for e in sorted(cset):
        f = edge[e]
        if f not in cset and f not in processed:
            starts.append((e, f))
        elif f in processed:
            m = mate[e]
            if m not in cset:
                starts.append((e, m))
    for e, label in starts:
        if e in visited:
            continue
        other = walk(e)
        pairs.append((min(label, other), max(label, other)))
    loops = 0
    for e in sorted(cset):
        if e not in visited:
            walk(e)
            loops += 1
    return tuple(pairs), loops
