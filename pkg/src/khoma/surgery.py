"""Diagram surgery: resolving crossings, Reidemeister moves, sums.

All operations work on raw crossing tuples with provisional arc labels
and funnel through one renormalization step that re-orients components
where the surgery broke orientation (a resolution against the strand
direction), renumbers arcs canonically, and revalidates the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedToken, NotAKnot, SiteMismatch
from .pd import LinkDiagram
from .planar import PlanarMap

PASS_THROUGH = ((0, 2), (1, 3))  # reconnect strands as if the crossing vanished


@dataclass(frozen=True)
class ReidemeisterMove:
    """kind: R1+ | R1- | R2 | R2inverse | R1inverse.

    Sites are arc labels: a single arc for R1 twists (or "O" to twist a
    free loop), (over, under) for R2, the kink's loop arc for R1inverse,
    and the two bigon arcs for R2inverse.
    """

    kind: str
    site: tuple


def _tolerant_trace(tuples):
    """Trace undirected component cycles of a raw tuple list.

    Returns a list of (cycle_arcs, steps) where steps are
    ((crossing, kind), from_arc, to_arc) in the traced direction.
    """
    incid: dict[int, list[tuple[int, str]]] = {}
    passage_arcs: dict[tuple[int, str], tuple[int, int]] = {}
    for cid, (a, b, c, d) in enumerate(tuples):
        passage_arcs[(cid, "U")] = (a, c)
        passage_arcs[(cid, "O")] = (b, d)
        for arc, key in ((a, (cid, "U")), (c, (cid, "U")), (b, (cid, "O")), (d, (cid, "O"))):
            incid.setdefault(arc, []).append(key)

    used: set[tuple[int, str]] = set()
    visited: set[int] = set()
    out = []
    for start in sorted(incid):
        if start in visited:
            continue
        cycle = [start]
        steps = []
        current = start
        while True:
            nxt = None
            for key in incid[current]:
                if key in used:
                    continue
                u, v = passage_arcs[key]
                other = v if current == u else u
                used.add(key)
                steps.append((key, current, other))
                nxt = other
                break
            if nxt is None:
                raise MalformedToken(f"arc {current} has a dangling end")
            if nxt == start:
                break
            cycle.append(nxt)
            current = nxt
        visited.update(cycle)
        out.append((cycle, steps))
    return out


def _renormalize(tuples, free_loops: int) -> LinkDiagram:
    """Re-orient, renumber 1..2n along components, and validate."""
    tuples = [tuple(t) for t in tuples]
    components = _tolerant_trace(tuples)

    # decide a direction per component: follow the under-passages when
    # they agree; if surgery made them conflict, side with the
    # under-passage at the lowest crossing index
    oriented_cycles = []
    for cycle, steps in components:
        votes = []
        for (cid, kind), frm, _to in steps:
            if kind == "U":
                votes.append((cid, frm == tuples[cid][0]))
        if not votes:
            reverse = False
        elif all(v for _cid, v in votes):
            reverse = False
        elif not any(v for _cid, v in votes):
            reverse = True
        else:
            votes.sort()
            reverse = not votes[0][1]
        if reverse:
            cycle = [cycle[0]] + cycle[:0:-1]
        lo = min(cycle)
        pos = cycle.index(lo)
        oriented_cycles.append(cycle[pos:] + cycle[:pos])
        reversed_comps.append(reverse)

    # crossings whose under-strand runs against the chosen direction get
    # rotated by two (the real incoming under-arc is c, not a)
    successor: dict[int, int] = {}
    for cyc in oriented_cycles:
        for i, arc in enumerate(cyc):
            successor[arc] = cyc[(i + 1) % len(cyc)]
    fixed = []
    for a, b, c, d in tuples:
        if successor[a] == c:
            fixed.append((a, b, c, d))
        else:
            fixed.append((c, d, a, b))

    oriented_cycles.sort(key=lambda cyc: cyc[0])
    relabel: dict[int, int] = {}
    nxt = 1
    for cyc in oriented_cycles:
        for arc in cyc:
            relabel[arc] = nxt
            nxt += 1
    final = [tuple(relabel[arc] for arc in t) for t in fixed]
    return LinkDiagram(final, free_loops)


def _delete_crossings(diagram: LinkDiagram, deletions: dict[int, tuple]) -> LinkDiagram:
    """Remove crossings, gluing their arcs by the given slot pairings."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    free = diagram.free_loops
    for cid, pairs in deletions.items():
        arcs = diagram.crossings[cid].arcs
        for s1, s2 in pairs:
            u, v = find(arcs[s1]), find(arcs[s2])
            if u == v:
                free += 1  # the glued chain closed into a crossingless circle
            else:
                parent[max(u, v)] = min(u, v)
    tuples = [
        tuple(find(arc) for arc in cr.arcs)
        for cid, cr in enumerate(diagram.crossings)
        if cid not in deletions
    ]
    return _renormalize(tuples, free)


def resolve_crossing(diagram: LinkDiagram, cid: int, bit: int) -> LinkDiagram:
    """Replace one crossing by its 0- or 1-smoothing.

    When the chosen smoothing is inconsistent with the orientation the
    affected components are re-oriented deterministically.
    """
    if not (0 <= cid < diagram.n):
        raise SiteMismatch(f"no crossing {cid}")
    pairs = ((0, 1), (2, 3)) if bit == 0 else ((0, 3), (1, 2))
    return _delete_crossings(diagram, {cid: pairs})


def _head_position(diagram: LinkDiagram, arc: int) -> tuple[int, int]:
    """(crossing index, slot) of the occurrence where the arc ends."""
    cid, kind = diagram.arc_head(arc)
    cr = diagram.crossings[cid]
    if kind == "U":
        return cid, 0
    return cid, 1 if cr.over_in == cr.b else 3


def _fresh(diagram: LinkDiagram, count: int) -> list[int]:
    return [diagram.arc_count + 1 + i for i in range(count)]


def _apply_r1(diagram: LinkDiagram, site, positive: bool) -> LinkDiagram:
    tuples = [list(c.arcs) for c in diagram.crossings]
    free = diagram.free_loops
    if site == "O":
        if free == 0:
            raise SiteMismatch("no free loop to twist")
        w, q = _fresh(diagram, 2)
        r = w  # the twisted loop is a single outer arc
        free -= 1
    else:
        arc = int(site)
        if not (1 <= arc <= diagram.arc_count):
            raise SiteMismatch(f"no arc {arc}")
        q, r = _fresh(diagram, 2)
        cid, slot = _head_position(diagram, arc)
        tuples[cid][slot] = r
        w = arc  # incoming piece keeps the old label; r is the outgoing piece
    if positive:
        # strand passes under itself, the over-strand runs q -> r
        new = (w, r, q, q)
    else:
        new = (q, w, r, q)
    tuples.append(list(new))
    return _renormalize(tuples, free)


def _apply_r2(diagram: LinkDiagram, over_arc: int, under_arc: int) -> LinkDiagram:
    """Push ``over_arc`` across a shared face, over ``under_arc``."""
    if over_arc == under_arc:
        raise SiteMismatch("R2 requires two distinct arcs")
    for arc in (over_arc, under_arc):
        if not (1 <= arc <= diagram.arc_count):
            raise SiteMismatch(f"no arc {arc}")
    planar = PlanarMap(diagram)
    chosen = None
    for orbit in planar.faces:
        dx = next((d for d in orbit if d[0] == over_arc), None)
        dy = next((d for d in orbit if d[0] == under_arc), None)
        if dx and dy:
            chosen = (dx, dy)
            break
    if chosen is None:
        raise SiteMismatch(
            f"arcs {over_arc} and {under_arc} do not bound a common face"
        )
    (x, xdir), (y, ydir) = chosen
    x_fwd = xdir == +1
    y_fwd = ydir == +1

    xt, f1, f2, f3 = _fresh(diagram, 4)
    if x_fwd:
        xw, xe = x, f1  # x runs west to east across the bump
    else:
        xe, xw = x, f1
    ym = f2
    if y_fwd:
        ye, yw = y, f3  # y's dart runs west, so y enters from the east
    else:
        yw, ye = y, f3

    tuples = [list(c.arcs) for c in diagram.crossings]
    cidx, sx = _head_position(diagram, x)
    tuples[cidx][sx] = xe if x_fwd else xw
    cidy, sy = _head_position(diagram, y)
    tuples[cidy][sy] = yw if y_fwd else ye

    # positional slots E,N,W,S; tuples start at the incoming under-arc
    if y_fwd:
        c_left = (ym, xt, yw, xw)
        c_right = (ye, xt, ym, xe)
    else:
        c_left = (yw, xw, ym, xt)
        c_right = (ym, xe, ye, xt)
    tuples.append(list(c_left))
    tuples.append(list(c_right))
    return _renormalize(tuples, diagram.free_loops)


def _apply_r1_inverse(diagram: LinkDiagram, loop_arc: int) -> LinkDiagram:
    for cid, cr in enumerate(diagram.crossings):
        arcs = cr.arcs
        slots = [s for s, arc in enumerate(arcs) if arc == loop_arc]
        if len(slots) == 2:
            s1, s2 = slots
            if (s2 - s1) % 4 in (1, 3):
                return _delete_crossings(diagram, {cid: PASS_THROUGH})
            raise SiteMismatch(f"arc {loop_arc} is not a kink loop")
    raise SiteMismatch(f"arc {loop_arc} is not a kink loop")


def _apply_r2_inverse(diagram: LinkDiagram, arc1: int, arc2: int) -> LinkDiagram:
    if arc1 == arc2:
        raise SiteMismatch("R2inverse needs the two distinct bigon arcs")
    planar = PlanarMap(diagram)
    for orbit in planar.faces:
        if len(orbit) != 2:
            continue
        if {orbit[0][0], orbit[1][0]} != {arc1, arc2}:
            continue
        ports1 = planar._arc_ports[arc1]
        ports2 = planar._arc_ports[arc2]
        cids1 = {port[0] for port in ports1.values()}
        cids2 = {port[0] for port in ports2.values()}
        if len(cids1) != 2 or cids1 != cids2:
            continue
        over1 = all(port[1] % 2 == 1 for port in ports1.values())
        under1 = all(port[1] % 2 == 0 for port in ports1.values())
        over2 = all(port[1] % 2 == 1 for port in ports2.values())
        under2 = all(port[1] % 2 == 0 for port in ports2.values())
        if not ((over1 and under2) or (over2 and under1)):
            continue
        c1, c2 = sorted(cids1)
        if diagram.crossings[c1].sign == diagram.crossings[c2].sign:
            continue
        return _delete_crossings(diagram, {c1: PASS_THROUGH, c2: PASS_THROUGH})
    raise SiteMismatch(f"arcs ({arc1},{arc2}) do not bound a removable bigon")


def apply_reidemeister(diagram: LinkDiagram, move: ReidemeisterMove) -> LinkDiagram:
    kind = move.kind
    if kind == "R1+":
        return _apply_r1(diagram, move.site[0], positive=True)
    if kind == "R1-":
        return _apply_r1(diagram, move.site[0], positive=False)
    if kind == "R2":
        return _apply_r2(diagram, int(move.site[0]), int(move.site[1]))
    if kind == "R1inverse":
        return _apply_r1_inverse(diagram, int(move.site[0]))
    if kind == "R2inverse":
        return _apply_r2_inverse(diagram, int(move.site[0]), int(move.site[1]))
    raise SiteMismatch(f"unknown move kind {kind!r}")


def available_moves(diagram: LinkDiagram, grow: bool = True) -> list[ReidemeisterMove]:
    """Enumerate applicable moves: every shrinking site, and (optionally)
    one R1 twist per arc plus every co-facial R2 pair."""
    moves: list[ReidemeisterMove] = []
    for cid, cr in enumerate(diagram.crossings):
        arcs = cr.arcs
        for arc in set(arcs):
            slots = [s for s, other in enumerate(arcs) if other == arc]
            if len(slots) == 2 and (slots[1] - slots[0]) % 4 in (1, 3):
                moves.append(ReidemeisterMove("R1inverse", (arc,)))
    planar = PlanarMap(diagram) if diagram.n else None
    if planar:
        seen = set()
        for orbit in planar.faces:
            if len(orbit) == 2 and orbit[0][0] != orbit[1][0]:
                pair = tuple(sorted((orbit[0][0], orbit[1][0])))
                if pair not in seen:
                    seen.add(pair)
                    try:
                        _apply_r2_inverse(diagram, *pair)
                    except SiteMismatch:
                        continue
                    moves.append(ReidemeisterMove("R2inverse", pair))
    if grow:
        for arc in range(1, diagram.arc_count + 1):
            moves.append(ReidemeisterMove("R1+", (arc,)))
            moves.append(ReidemeisterMove("R1-", (arc,)))
        if diagram.free_loops:
            moves.append(ReidemeisterMove("R1+", ("O",)))
            moves.append(ReidemeisterMove("R1-", ("O",)))
        if planar:
            seen_pairs = set()
            for orbit in planar.faces:
                arcs_here = sorted({d[0] for d in orbit})
                for i, x in enumerate(arcs_here):
                    for y in arcs_here[i + 1:]:
                        if (x, y) not in seen_pairs:
                            seen_pairs.add((x, y))
                            moves.append(ReidemeisterMove("R2", (x, y)))
    return moves


def connected_sum(d1: LinkDiagram, arc1, d2: LinkDiagram, arc2) -> LinkDiagram:
    """Splice two knot diagrams along the given arcs."""
    if d1.n_components != 1 or d2.n_components != 1:
        raise NotAKnot("connected sum requires single-component diagrams")
    if d1.n == 0:
        return d2
    if d2.n == 0:
        return d1
    arc1, arc2 = int(arc1), int(arc2)
    if not (1 <= arc1 <= d1.arc_count) or not (1 <= arc2 <= d2.arc_count):
        raise SiteMismatch("connected sum arc out of range")
    shift = d1.arc_count
    tuples = [list(c.arcs) for c in d1.crossings]
    tuples += [[arc + shift for arc in c.arcs] for c in d2.crossings]
    cid1, s1 = _head_position(d1, arc1)
    cid2, s2 = _head_position(d2, arc2)
    # cut both arcs and cross-join the ends, respecting orientation
    tuples[cid1][s1] = arc2 + shift
    tuples[len(d1.crossings) + cid2][s2] = arc1
    return _renormalize(tuples, 0)
