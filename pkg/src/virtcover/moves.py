"""Generalized Reidemeister moves and cut point moves as code rewrites.

Reidemeister moves are recognized and rewritten on the plain projection;
the result is then re-realized (see :mod:`virtcover.realize`) with the
move's ``seed``, so the extended code stays planar.  A ``Detour`` is a bare
re-realization, which covers every rearrangement of virtual crossings.
Cut point moves touch only the cut points.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .errors import NotApplicable
from .gauss import ExtendedGaussCode, Passage, chords, project_to_plain, require_valid
from .realize import realize

R_KINDS = ("R1+", "R1-", "R2+", "R2-", "R3", "Detour")
CP_KINDS = ("CP1", "CP2+", "CP2-", "CP3+", "CP3-")


@dataclass(frozen=True)
class MoveInstance:
    kind: str
    site: tuple
    params: dict = field(default_factory=dict)

    def __str__(self):
        extra = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.kind}{self.site}" + (f"[{extra}]" if extra else "")


def _adjacent(plain, p, q):
    """True when position ``q`` directly follows ``p`` on the same component."""
    if p[0] != q[0]:
        return False
    m = len(plain.components[p[0]])
    return (p[1] + 1) % m == q[1]


def _slots(code):
    return [(k, s) for k in range(code.num_components) for s in range(code.slot_count(k))]


def _fresh_ids(code, n):
    used = set(code.chord_ids())
    out, k = [], 1
    while len(out) < n:
        if str(k) not in used:
            out.append(str(k))
        k += 1
    return out


def _r1_minus(plain):
    out = []
    for c, ch in chords(plain).items():
        o, u = ch.over_pos, ch.under_pos
        if _adjacent(plain, o, u) or _adjacent(plain, u, o):
            out.append(MoveInstance("R1-", (c,)))
    return out


def _r2_minus(plain):
    chs = chords(plain)
    ids = list(chs)
    out = []
    for x, a in enumerate(ids):
        for b in ids[x + 1 :]:
            ca, cb = chs[a], chs[b]
            if ca.sign == cb.sign:
                continue
            overs = _adjacent(plain, ca.over_pos, cb.over_pos) or _adjacent(plain, cb.over_pos, ca.over_pos)
            unders = _adjacent(plain, ca.under_pos, cb.under_pos) or _adjacent(
                plain, cb.under_pos, ca.under_pos
            )
            if overs and unders:
                out.append(MoveInstance("R2-", (a, b)))
    return out


def _order(plain, p, q):
    """+1 if ``q`` directly follows ``p``, -1 if ``p`` follows ``q``, None otherwise.

    Components of two passages make the order ambiguous and give None.
    """
    if p[0] != q[0] or len(plain.components[p[0]]) < 3:
        return None
    if _adjacent(plain, p, q):
        return 1
    if _adjacent(plain, q, p):
        return -1
    return None


def r3_sites(plain):
    """Triples ``(top, mid, bot)`` of chords forming a movable triangle.

    ``top`` crosses the top strand over the middle one, ``mid`` the top over
    the bottom and ``bot`` the middle over the bottom.
    """
    chs = chords(plain)
    out = []
    for a, ca in chs.items():
        for b, cb in chs.items():
            if a == b:
                continue
            s_top = _order(plain, ca.over_pos, cb.over_pos)
            if s_top is None:
                continue
            for c, cc in chs.items():
                if c in (a, b):
                    continue
                s_mid = _order(plain, ca.under_pos, cc.over_pos)
                s_bot = _order(plain, cb.under_pos, cc.under_pos)
                if s_mid is None or s_bot is None:
                    continue
                o = ca.sign * s_top * s_mid
                if cb.sign * s_top * s_bot == o and cc.sign * s_mid * s_bot == o:
                    out.append((a, b, c))
    return out


def _cp_moves(code):
    counts = code.cut_counts()
    out = []
    for (k, i), p in code.positions():
        m = len(code.components[k])
        if not p.is_virtual or m < 2:
            continue
        before = (i - 1) % m
        if counts[k].get(before):
            out.append(MoveInstance("CP1", (k, before, i)))
        if counts[k].get(i):
            out.append(MoveInstance("CP1", (k, i, before)))
    for k, s in _slots(code):
        out.append(MoveInstance("CP2+", (k, s)))
        if counts[k].get(s, 0) >= 2:
            out.append(MoveInstance("CP2-", (k, s)))
    have = Counter(code.cut_points)
    for c, ch in chords(code).items():
        four = Counter(_flanking(code, ch.over_pos) + _flanking(code, ch.under_pos))
        out.append(MoveInstance("CP3+", (c,)))
        if all(have[s] >= n for s, n in four.items()):
            out.append(MoveInstance("CP3-", (c,)))
    return out


def _flanking(code, pos):
    k, i = pos
    m = len(code.components[k])
    return [(k, (i - 1) % m), (k, i)]


def _r1_plus(plain):
    out = []
    for k, s in _slots(plain):
        for first in ("O", "U"):
            for sign in (1, -1):
                out.append(MoveInstance("R1+", (k, s), {"first": first, "sign": sign}))
    return out


def _r2_plus(plain):
    out = []
    slots = _slots(plain)
    for s1 in slots:
        for s2 in slots:
            for parallel in (True, False):
                for sign in (1, -1):
                    firsts = ("O", "U") if s1 == s2 else ("O",)
                    for first in firsts:
                        out.append(
                            MoveInstance(
                                "R2+", (s1, s2), {"parallel": parallel, "sign": sign, "first": first}
                            )
                        )
    return out


def enumerate_moves(code: ExtendedGaussCode, kinds=None) -> list[MoveInstance]:
    """All applicable moves of the requested kinds (default: every kind).

    Reidemeister moves are only offered on codes without cut points.
    """
    require_valid(code)
    kinds = set(R_KINDS + CP_KINDS if kinds is None else kinds)
    out = []
    if not code.cut_points and kinds & set(R_KINDS):
        plain = project_to_plain(code)
        if "R1-" in kinds:
            out += _r1_minus(plain)
        if "R2-" in kinds:
            out += _r2_minus(plain)
        if "R3" in kinds:
            out += [MoveInstance("R3", t) for t in r3_sites(plain)]
        if "R1+" in kinds:
            out += _r1_plus(plain)
        if "R2+" in kinds:
            out += _r2_plus(plain)
        if "Detour" in kinds:
            out.append(MoveInstance("Detour", ()))
    if kinds & set(CP_KINDS):
        out += [mv for mv in _cp_moves(code) if mv.kind in kinds]
    return out


def _insert(comps, slot, passages):
    k, s = slot
    comp = list(comps[k])
    at = s + 1 if comp else 0
    comps[k] = tuple(comp[:at] + list(passages) + comp[at:])


def _rewrite_plain(plain, move):
    comps = [list(c) for c in plain.components]
    chs = chords(plain)
    if move.kind == "R1-":
        (c,) = move.site
        comps = [[p for p in comp if p.ident != c] for comp in comps]
    elif move.kind == "R2-":
        a, b = move.site
        comps = [[p for p in comp if p.ident not in (a, b)] for comp in comps]
    elif move.kind == "R3":
        a, b, c = move.site
        pairs = [
            (chs[a].over_pos, chs[b].over_pos),
            (chs[a].under_pos, chs[c].over_pos),
            (chs[b].under_pos, chs[c].under_pos),
        ]
        for (k1, i1), (k2, i2) in pairs:
            comps[k1][i1], comps[k2][i2] = comps[k2][i2], comps[k1][i1]
    elif move.kind == "R1+":
        (new,) = _fresh_ids(plain, 1)
        sign = move.params["sign"]
        pair = [Passage.over(new, sign), Passage.under(new, sign)]
        if move.params["first"] == "U":
            pair.reverse()
        comps = [tuple(c) for c in comps]
        _insert(comps, move.site, pair)
    elif move.kind == "R2+":
        a, b = _fresh_ids(plain, 2)
        eps = move.params["sign"]
        overs = [Passage.over(a, eps), Passage.over(b, -eps)]
        unders = [Passage.under(a, eps), Passage.under(b, -eps)]
        if not move.params["parallel"]:
            unders.reverse()
        s1, s2 = move.site
        comps = [tuple(c) for c in comps]
        if s1 == s2:
            seq = overs + unders if move.params["first"] == "O" else unders + overs
            _insert(comps, s1, seq)
        else:
            _insert(comps, s1, overs)
            k2, j2 = s2
            if k2 == s1[0] and j2 > s1[1]:
                j2 += 2
            _insert(comps, (k2, j2), unders)
    elif move.kind != "Detour":
        raise NotApplicable(f"unknown move kind {move.kind}")
    return ExtendedGaussCode(tuple(tuple(c) for c in comps))


def apply(code: ExtendedGaussCode, move: MoveInstance) -> ExtendedGaussCode:
    """Rewrite ``code`` by ``move``; raises :class:`NotApplicable` if it does not apply."""
    require_valid(code)
    if move.kind in R_KINDS:
        if code.cut_points:
            raise NotApplicable("Reidemeister moves need a code without cut points")
        plain = project_to_plain(code)
        if move.kind in ("R1-", "R2-", "R3"):
            valid = {
                "R1-": lambda: _r1_minus(plain),
                "R2-": lambda: _r2_minus(plain),
                "R3": lambda: [MoveInstance("R3", t) for t in r3_sites(plain)],
            }[move.kind]()
            if all(mv.site != move.site for mv in valid):
                raise NotApplicable(f"{move} does not apply")
        elif move.kind in ("R1+", "R2+"):
            slots = set(_slots(plain))
            sites = [move.site] if move.kind == "R1+" else list(move.site)
            if any(tuple(s) not in slots for s in sites):
                raise NotApplicable(f"{move} names a missing slot")
        rewritten = _rewrite_plain(plain, move)
        return realize(rewritten, seed=move.params.get("seed", 0)).code

    if move.kind not in CP_KINDS:
        raise NotApplicable(f"unknown move kind {move.kind}")
    cuts = Counter(code.cut_points)
    if move.kind == "CP1":
        k, src, dst = move.site
        if all(mv.site != move.site for mv in _cp_moves(code) if mv.kind == "CP1"):
            raise NotApplicable(f"{move} does not apply")
        cuts[k, src] -= 1
        cuts[k, dst] += 1
    elif move.kind in ("CP2+", "CP2-"):
        slot = tuple(move.site)
        if slot not in set(_slots(code)):
            raise NotApplicable(f"{move} names a missing slot")
        if move.kind == "CP2+":
            cuts[slot] += 2
        elif cuts[slot] >= 2:
            cuts[slot] -= 2
        else:
            raise NotApplicable(f"{move} needs two cut points in the slot")
    else:
        (c,) = move.site
        chs = chords(code)
        if c not in chs:
            raise NotApplicable(f"no chord {c}")
        four = Counter(_flanking(code, chs[c].over_pos) + _flanking(code, chs[c].under_pos))
        if move.kind == "CP3+":
            cuts.update(four)
        elif all(cuts[s] >= n for s, n in four.items()):
            cuts.subtract(four)
        else:
            raise NotApplicable(f"{move} needs the four flanking cut points")
    return code.with_cuts(sorted(cuts.elements()))


def random_walk(
    code: ExtendedGaussCode, steps: int, seed: int, cut_moves: bool = False
) -> tuple[ExtendedGaussCode, list[MoveInstance]]:
    """Apply ``steps`` randomly chosen moves; reproducible for a given seed.

    Without ``cut_moves`` the walk uses Reidemeister moves and detours on a
    code without cut points; with it, only cut point moves.  A step whose
    chosen kind has no instance is skipped.
    """
    require_valid(code)
    rng = random.Random(seed)
    kinds = CP_KINDS if cut_moves else R_KINDS
    if not cut_moves and code.cut_points:
        raise NotApplicable("Reidemeister walks need a code without cut points")
    trace = []
    for _ in range(steps):
        kind = rng.choice(kinds)
        options = enumerate_moves(code, kinds=(kind,))
        if not options:
            continue
        move = rng.choice(options)
        if kind in R_KINDS:
            move = MoveInstance(move.kind, move.site, {**move.params, "seed": rng.randrange(1, 2**31)})
        code = apply(code, move)
        trace.append(move)
    return code, trace
