"""Planar realization of Gauss codes and a rotation-system genus check.

:func:`realize` draws the classical crossings on a horizontal spine and
routes every edge with axis-parallel segments on its own levels; each
place where two routes meet becomes a virtual crossing.  The drawing is a
real plane picture, so the resulting extended code is planar, and
:func:`genus` certifies that from the code and its rotations alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import MissingRotation
from .gauss import ExtendedGaussCode, Passage, chords, project_to_plain, require_valid

SPACING = 10.0

# ccw order of the four ends at a positive crossing, and at a negative one
_CCW = {
    1: ("OO", "UO", "OI", "UI"),
    -1: ("OO", "UI", "OI", "UO"),
}
_DIAGONALS = ((1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0))  # 45, 135, 225, 315 degrees


def _next_position(code, pos):
    k, i = pos
    return k, (i + 1) % len(code.components[k])


def _prev_position(code, pos):
    k, i = pos
    return k, (i - 1) % len(code.components[k])


def sign_rotations(code: ExtendedGaussCode) -> dict:
    """Rotations of the classical crossings implied by their signs.

    Half-edges are ``(position, "in" | "out")``.  Virtual crossings get the
    interleaved order ``(a out, b out, a in, b in)`` with ``a`` the first
    passage in traversal order.
    """
    rot = {}
    for c, ch in chords(code).items():
        ends = {
            "OO": (ch.over_pos, "out"),
            "OI": (ch.over_pos, "in"),
            "UO": (ch.under_pos, "out"),
            "UI": (ch.under_pos, "in"),
        }
        rot["C", c] = tuple(ends[e] for e in _CCW[ch.sign])
    vpos = {}
    for pos, p in code.positions():
        if p.is_virtual:
            vpos.setdefault(p.ident, []).append(pos)
    for v, (a, b) in vpos.items():
        rot["V", v] = ((a, "out"), (b, "out"), (a, "in"), (b, "in"))
    return rot


def _crossing_key(p):
    return ("V" if p.is_virtual else "C", p.ident)


def genus(code: ExtendedGaussCode, rotations: dict) -> list[int]:
    """Genus of each connected piece of the diagram's 4-valent graph.

    Pieces are listed in order of first appearance; a component without
    passages is a piece of genus 0.
    """
    require_valid(code)
    keys = {_crossing_key(p) for _, p in code.positions()}
    missing = sorted(keys - set(rotations))
    if missing:
        raise MissingRotation(f"no rotation for crossing {missing[0]}")
    # successor of a half-edge in its vertex's ccw order
    succ, vertex_of = {}, {}
    for key in keys:
        order = rotations[key]
        for t, h in enumerate(order):
            succ[h] = order[(t + 1) % 4]
            vertex_of[h] = key

    def across(h):
        pos, d = h
        if d == "out":
            return _next_position(code, pos), "in"
        return _prev_position(code, pos), "out"

    # connected pieces over crossings
    parent = {k: k for k in keys}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    order = []
    for pos, p in code.positions():
        key = _crossing_key(p)
        if key not in order:
            order.append(key)
        nxt = code.components[pos[0]][_next_position(code, pos)[1]]
        parent[find(key)] = find(_crossing_key(nxt))

    faces = {}
    seen = set()
    for h in succ:
        if h in seen:
            continue
        x = h
        while x not in seen:
            seen.add(x)
            x = succ[across(x)]
        root = find(vertex_of[h])
        faces[root] = faces.get(root, 0) + 1

    verts = {}
    for key in keys:
        root = find(key)
        verts[root] = verts.get(root, 0) + 1
    out = []
    roots_done = set()
    for key in order:
        root = find(key)
        if root in roots_done:
            continue
        roots_done.add(root)
        v = verts[root]
        e = 2 * v
        out.append((2 - v + e - faces[root]) // 2)
    out.extend(0 for comp in code.components if not comp)
    return out


@dataclass(frozen=True)
class Layout:
    """Geometry of a realization: crossing centers, edge routes, virtual points."""

    centers: dict
    routes: list = field(default_factory=list)  # (component, passage index, [points])
    virtual_points: dict = field(default_factory=dict)
    free_circles: list = field(default_factory=list)  # centers of crossing-free components
    signs: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Realization:
    code: ExtendedGaussCode
    rotations: dict
    layout: Layout


def _segments(points):
    return list(zip(points, points[1:]))


def _intersect(s1, s2):
    """Transverse meeting point of an axis-parallel pair, or None."""
    (a, b), (c, d) = s1, s2
    h1, h2 = a[1] == b[1], c[1] == d[1]
    if h1 == h2:
        return None
    if not h1:
        (a, b), (c, d) = (c, d), (a, b)
    # (a, b) horizontal, (c, d) vertical
    y, x = a[1], c[0]
    lo_x, hi_x = sorted((a[0], b[0]))
    lo_y, hi_y = sorted((c[1], d[1]))
    if lo_x < x < hi_x and lo_y < y < hi_y:
        return (x, y)
    return None


def _arc_param(points, q):
    """Distance along a polyline to a point lying on it."""
    total = 0.0
    for p0, p1 in _segments(points):
        if min(p0[0], p1[0]) <= q[0] <= max(p0[0], p1[0]) and min(p0[1], p1[1]) <= q[1] <= max(
            p0[1], p1[1]
        ):
            return total + abs(q[0] - p0[0]) + abs(q[1] - p0[1])
        total += abs(p1[0] - p0[0]) + abs(p1[1] - p0[1])
    raise ValueError("point not on polyline")


def _angle_index(dx, dy):
    return {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}[(dx, dy)]


def realize(plain: ExtendedGaussCode, seed: int = 0) -> Realization:
    """Insert virtual passages so that ``plain`` becomes a planar diagram.

    Seed 0 gives the canonical layout (crossings in order of first
    occurrence); other seeds shuffle crossing order, local pictures, levels
    and spine gaps, which moves the virtual crossings around.
    """
    plain = project_to_plain(plain)
    rng = random.Random(seed) if seed else None
    chs = chords(plain)
    order = list(chs)
    if rng:
        rng.shuffle(order)
    centers = {c: (SPACING * t, 0.0) for t, c in enumerate(order)}

    ports = {}
    for c in order:
        turn = rng.randrange(4) if rng else 0
        for t, end in enumerate(_CCW[chs[c].sign]):
            dx, dy = _DIAGONALS[(t + turn) % 4]
            cx, cy = centers[c]
            ports[c, end] = (cx + dx, cy + dy)

    edges = []  # (component, passage index of the out-end, start port key, end port key)
    for k, comp in enumerate(plain.components):
        m = len(comp)
        for i, p in enumerate(comp):
            q = comp[(i + 1) % m]
            edges.append((k, i, (p.ident, "OO" if p.is_over else "UO"), (q.ident, "OI" if q.is_over else "UI")))

    n_edges = len(edges)
    ranks = list(range(2 * n_edges))
    if rng:
        rng.shuffle(ranks)
    routes = []
    for e, (k, i, s_key, t_key) in enumerate(edges):
        s, t = ports[s_key], ports[t_key]
        side_s, side_t = (1 if s[1] > 0 else -1), (1 if t[1] > 0 else -1)
        h1 = side_s * (2.0 + ranks[2 * e])
        pts = [centers[s_key[0]], s, (s[0], h1)]
        if side_s == side_t:
            pts += [(t[0], h1)]
        else:
            if rng:
                gap = rng.randrange(-1, len(order))
            else:
                gap = order.index(s_key[0])
            xc = SPACING * gap + 2.0 + 6.0 * (e + 1) / (n_edges + 1)
            h2 = side_t * (2.0 + ranks[2 * e + 1])
            pts += [(xc, h1), (xc, h2), (t[0], h2)]
        pts += [t, centers[t_key[0]]]
        routes.append((k, i, pts))

    # routed part excludes the diagonal stubs at both ends
    inner = [r[2][1:-1] for r in routes]
    hits = {e: [] for e in range(n_edges)}
    vpoints = {}
    vdirs = {}
    for e in range(n_edges):
        for f in range(e + 1, n_edges):
            for s1 in _segments(inner[e]):
                for s2 in _segments(inner[f]):
                    q = _intersect(s1, s2)
                    if q is None:
                        continue
                    key = len(vpoints)
                    vpoints[key] = q
                    vdirs[key] = {}
                    for g, seg in ((e, s1), (f, s2)):
                        hits[g].append((_arc_param(inner[g], q), key))
                        (x0, y0), (x1, y1) = seg
                        vdirs[key][g] = (
                            (x1 > x0) - (x1 < x0),
                            (y1 > y0) - (y1 < y0),
                        )

    # assemble the extended code; virtual ids follow traversal order
    names, comps, vpos = {}, [], {}
    edge_index = {(k, i): e for e, (k, i, _, _) in enumerate(edges)}
    for k, comp in enumerate(plain.components):
        seq = []
        for i, p in enumerate(comp):
            seq.append(p)
            e = edge_index[k, i]
            for _, key in sorted(hits[e]):
                name = names.setdefault(key, str(len(names) + 1))
                vpos.setdefault(key, {})[e] = (k, len(seq))
                seq.append(Passage.virtual(name))
        comps.append(tuple(seq))
    code = ExtendedGaussCode(tuple(comps))

    rotations = sign_rotations(code)
    for key, by_edge in vpos.items():
        halfs = []
        for e, pos in by_edge.items():
            dx, dy = vdirs[key][e]
            halfs.append((_angle_index(dx, dy), (pos, "out")))
            halfs.append((_angle_index(-dx, -dy), (pos, "in")))
        rotations["V", names[key]] = tuple(h for _, h in sorted(halfs))

    free = [
        (SPACING * (len(order) + 1 + t), 0.0)
        for t, comp in enumerate(c for c in plain.components if not c)
    ]
    layout = Layout(
        centers=centers,
        routes=routes,
        virtual_points={names[k]: q for k, q in vpoints.items()},
        free_circles=free,
        signs={c: ch.sign for c, ch in chs.items()},
    )
    return Realization(code, rotations, layout)
