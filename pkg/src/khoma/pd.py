"""Oriented link diagrams from PD codes.

A diagram is a whitespace-separated list of tokens ``X(a,b,c,d)`` and
``O``.  Each crossing lists its four incident arcs counterclockwise
starting at the incoming under-strand ``a``; ``O`` is a crossingless
unknot component (PD codes cannot encode those).  Arcs are numbered
1..2n consecutively along each component, following its orientation.

The over-strand direction (and hence each crossing sign) is inferred
from the arc numbering: a crossing is positive exactly when the
over-strand runs d -> b, i.e. crosses left-to-right over the
under-strand's direction.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import (
    ArcLabelUsedWrongMultiplicity,
    InconsistentOrientation,
    MalformedToken,
    SameComponent,
    StateSpaceTooLarge,
)

STATE_CAP = 30

State = tuple  # bits aligned with crossing order

_X_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True)
class Crossing:
    """One crossing: arcs (a,b,c,d) CCW from the incoming under-strand.

    ``sign`` is +1/-1; ``over_in`` is the arc on which the over-strand
    enters (d for positive crossings, b for negative ones).
    """

    a: int
    b: int
    c: int
    d: int
    sign: int
    over_in: int

    @property
    def arcs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class Smoothing:
    """Circles of one complete resolution, canonically ordered.

    Arc circles come first, sorted by minimal arc label, then one
    singleton per free loop.  ``circles`` holds tuples of arc labels;
    free loops appear as ``("O", k)`` markers.
    """

    circles: tuple
    circle_count: int

    def circle_of_arc(self) -> dict[int, int]:
        owner: dict[int, int] = {}
        for idx, circ in enumerate(self.circles):
            if circ and circ[0] != "O":
                for arc in circ:
                    owner[arc] = idx
        return owner


class LinkDiagram:
    """Validated oriented link diagram.

    Immutable; all operations return new diagrams.
    """

    def __init__(self, crossings: list[tuple[int, int, int, int]], free_loops: int = 0):
        self._init_from_tuples([tuple(c) for c in crossings], free_loops)

    def _init_from_tuples(self, tuples, free_loops):
        n = len(tuples)
        arc_count = 2 * n
        seen: dict[int, int] = {}
        for t in tuples:
            if len(t) != 4:
                raise MalformedToken(f"crossing {t} does not have four arcs")
            for arc in t:
                if not (1 <= arc <= arc_count):
                    raise ArcLabelUsedWrongMultiplicity(
                        f"arc {arc} outside 1..{arc_count}"
                    )
                seen[arc] = seen.get(arc, 0) + 1
        for arc in range(1, arc_count + 1):
            if seen.get(arc, 0) != 2:
                raise ArcLabelUsedWrongMultiplicity(
                    f"arc {arc} used {seen.get(arc, 0)} times, expected 2"
                )
        for a, b, c, d in tuples:
            if a == c or b == d:
                raise InconsistentOrientation(
                    "a strand cannot close on itself through one crossing"
                )

        components, transitions = _trace_components(tuples)

        crossings = []
        for cid, (a, b, c, d) in enumerate(tuples):
            over_from, _ = transitions[(cid, "O")]
            sign = +1 if over_from == d else -1
            crossings.append(Crossing(a, b, c, d, sign, over_from))

        self.crossings: tuple[Crossing, ...] = tuple(crossings)
        self.free_loops: int = free_loops
        self.arc_count: int = arc_count
        self.component_arcs: tuple[tuple[int, ...], ...] = tuple(
            tuple(comp) for comp in components
        )
        self._arc_component = {
            arc: ci for ci, comp in enumerate(self.component_arcs) for arc in comp
        }
        # head incidence: the passage where each arc ends
        self._arc_head = {}
        for key, (frm, _to) in transitions.items():
            self._arc_head[frm] = key

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.component_arcs) + self.free_loops

    def writhe_counts(self) -> tuple[int, int]:
        """(n_plus, n_minus)."""
        n_plus = sum(1 for c in self.crossings if c.sign > 0)
        return n_plus, self.n - n_plus

    @property
    def n_plus(self) -> int:
        return self.writhe_counts()[0]

    @property
    def n_minus(self) -> int:
        return self.writhe_counts()[1]

    def component_of_arc(self, arc: int) -> int:
        return self._arc_component[arc]

    def arc_head(self, arc: int) -> tuple[int, str]:
        """(crossing index, 'U'|'O') of the passage where the arc ends."""
        return self._arc_head[arc]

    def linking_number(self, l: int, m: int) -> int:
        """Linking number of components l and m (1-based indices).

        Half the signed count of crossings between the two components;
        free-loop components never cross anything.
        """
        k = self.n_components
        if not (1 <= l <= k and 1 <= m <= k):
            raise SameComponent(f"component index out of range 1..{k}")
        if l == m:
            raise SameComponent("linking number needs two distinct components")
        n_arc_comps = len(self.component_arcs)
        if l > n_arc_comps or m > n_arc_comps:
            return 0
        li, mi = l - 1, m - 1
        total = 0
        for cr in self.crossings:
            comps = {self._arc_component[cr.a], self._arc_component[cr.b]}
            if comps == {li, mi}:
                total += cr.sign
        if total % 2:
            raise InconsistentOrientation("odd signed crossing count between components")
        return total // 2

    # -- states and smoothings ----------------------------------------

    def enumerate_states(self):
        """All 2^n states in lexicographic order over bit tuples."""
        if self.n > STATE_CAP:
            raise StateSpaceTooLarge(f"{self.n} crossings exceeds cap {STATE_CAP}")
        return itertools.product((0, 1), repeat=self.n)

    def smoothing_joins(self, cid: int, bit: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Arc pairs joined at crossing cid: 0 joins a-b, c-d; 1 joins a-d, b-c."""
        cr = self.crossings[cid]
        if bit == 0:
            return (cr.a, cr.b), (cr.c, cr.d)
        return (cr.a, cr.d), (cr.b, cr.c)

    def resolve_state(self, state: State) -> Smoothing:
        """Circles of the complete resolution selected by ``state``."""
        if len(state) != self.n:
            raise MalformedToken(f"state length {len(state)} != {self.n} crossings")
        parent = list(range(self.arc_count + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for cid, bit in enumerate(state):
            for u, v in self.smoothing_joins(cid, bit):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
        classes: dict[int, list[int]] = {}
        for arc in range(1, self.arc_count + 1):
            classes.setdefault(find(arc), []).append(arc)
        circles = [tuple(sorted(arcs)) for arcs in classes.values()]
        circles.sort(key=lambda circ: circ[0])
        circles.extend(("O", k) for k in range(self.free_loops))
        return Smoothing(circles=tuple(circles), circle_count=len(circles))

    # -- serialization -------------------------------------------------

    def serialize(self) -> str:
        parts = [f"X({c.a},{c.b},{c.c},{c.d})" for c in self.crossings]
        parts.extend("O" for _ in range(self.free_loops))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"LinkDiagram({self.serialize()!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinkDiagram)
            and self.free_loops == other.free_loops
            and [c.arcs for c in self.crossings] == [c.arcs for c in other.crossings]
        )

    def __hash__(self) -> int:
        return hash((self.free_loops, tuple(c.arcs for c in self.crossings)))


def _trace_components(tuples):
    """Trace oriented components and resolve every passage direction.

    Returns (components, transitions): components as arc cycles starting
    at their minimal label and following the orientation; transitions
    maps (crossing, 'U'|'O') to (from_arc, to_arc).
    """
    # incidences: arc -> list of (cid, kind, end) with end 0|1 per passage
    incid: dict[int, list[tuple[int, str, int]]] = {}
    passage_arcs: dict[tuple[int, str], tuple[int, int]] = {}
    for cid, (a, b, c, d) in enumerate(tuples):
        passage_arcs[(cid, "U")] = (a, c)
        passage_arcs[(cid, "O")] = (b, d)
        incid.setdefault(a, []).append((cid, "U", 0))
        incid.setdefault(c, []).append((cid, "U", 1))
        incid.setdefault(b, []).append((cid, "O", 0))
        incid.setdefault(d, []).append((cid, "O", 1))

    used_passage: set[tuple[int, str]] = set()
    visited: set[int] = set()
    components = []
    transitions: dict[tuple[int, str], tuple[int, int]] = {}

    for start in sorted(incid):
        if start in visited:
            continue
        cycle = [start]
        steps = []  # (passage, from_arc, to_arc) in traced direction
        current = start
        while True:
            nxt = None
            for cid, kind, _end in incid[current]:
                key = (cid, kind)
                if key in used_passage:
                    continue
                u, v = passage_arcs[key]
                other = v if current == u else u
                used_passage.add(key)
                steps.append((key, current, other))
                nxt = other
                break
            if nxt is None:
                raise InconsistentOrientation(f"cannot continue tracing at arc {current}")
            if nxt == start:
                break
            cycle.append(nxt)
            current = nxt
        visited.update(cycle)

        # fix the direction from under-passages (a -> c is forced)
        forward_votes = []
        for key, frm, to in steps:
            if key[1] == "U":
                a, c = passage_arcs[key]
                forward_votes.append(frm == a)
        if forward_votes and all(forward_votes):
            direction = +1
        elif forward_votes and not any(forward_votes):
            direction = -1
        elif forward_votes:
            raise InconsistentOrientation(
                f"under-strand directions conflict on component of arc {start}"
            )
        else:
            direction = 0  # all-over component, decided by labels below

        lo = min(cycle)
        if sorted(cycle) != list(range(lo, lo + len(cycle))):
            raise InconsistentOrientation(
                f"component of arc {lo} is not labelled consecutively"
            )

        def oriented(cyc, stp, reverse: bool):
            if reverse:
                cyc = [cyc[0]] + cyc[:0:-1]
                stp = [(key, to, frm) for key, frm, to in reversed(stp)]
            pos = cyc.index(lo)
            cyc = cyc[pos:] + cyc[:pos]
            return cyc, stp

        candidates = []
        for rev in (False, True):
            if direction == +1 and rev:
                continue
            if direction == -1 and not rev:
                continue
            cyc, stp = oriented(list(cycle), list(steps), rev)
            if cyc == list(range(lo, lo + len(cyc))):
                candidates.append((cyc, stp))
        if not candidates:
            raise InconsistentOrientation(
                f"arc numbering of component {lo} does not follow its orientation"
            )
        if len(candidates) == 2:
            # ambiguous 2-arc all-over component: prefer the direction whose
            # first transition out of the minimal arc uses the lower crossing
            def first_cid(cand):
                for key, frm, _to in cand[1]:
                    if frm == lo:
                        return key[0]
                return -1

            candidates.sort(key=first_cid)
        cyc, stp = candidates[0]
        components.append(cyc)
        for key, frm, to in stp:
            transitions[key] = (frm, to)

    components.sort(key=lambda comp: comp[0])
    return components, transitions


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD text: ``X(a,b,c,d)`` tokens plus ``O`` free loops."""
    crossings = []
    free_loops = 0
    for token in text.split():
        if token == "O":
            free_loops += 1
            continue
        m = _X_RE.fullmatch(token)
        if not m:
            raise MalformedToken(f"bad token {token!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
    return LinkDiagram(crossings, free_loops)


def enumerate_states(diagram: LinkDiagram):
    return diagram.enumerate_states()


def resolve_state(diagram: LinkDiagram, state: State) -> Smoothing:
    return diagram.resolve_state(state)


def writhe_counts(diagram: LinkDiagram) -> tuple[int, int]:
    return diagram.writhe_counts()


def linking_number(diagram: LinkDiagram, l: int, m: int) -> int:
    return diagram.linking_number(l, m)


def mirror(diagram: LinkDiagram) -> LinkDiagram:
    """Swap over/under strands everywhere; all crossing signs flip."""
    tuples = []
    for cr in diagram.crossings:
        if cr.sign > 0:
            tuples.append((cr.d, cr.a, cr.b, cr.c))
        else:
            tuples.append((cr.b, cr.c, cr.d, cr.a))
    return LinkDiagram(tuples, diagram.free_loops)


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Place the diagrams side by side; D2's arc labels are shifted."""
    shift = d1.arc_count
    tuples = [c.arcs for c in d1.crossings]
    tuples += [tuple(arc + shift for arc in c.arcs) for c in d2.crossings]
    return LinkDiagram(tuples, d1.free_loops + d2.free_loops)
