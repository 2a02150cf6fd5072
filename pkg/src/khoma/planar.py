"""Planar structure of a diagram: faces, nesting depths, handedness.

A PD code determines the 4-valent map on the sphere.  Faces are traced
as orbits of the next-dart permutation (each orbit is the face lying to
the left of its darts).  Smoothing a crossing merges the two faces that
meet across the new channel, so the regions of any complete resolution
are union-find classes of map faces.  Nesting depths then come from the
face/circle incidence tree once an unbounded face is chosen.

The choice of unbounded face is not canonical (a PD code lives on the
sphere); the default picks, per connected piece, a face with the fewest
sides, which reproduces the hand-drawn pictures for the golden fixtures.
Callers may override it with a signed arc hint: +x means the face left
of arc x, -x the face to its right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousEmbedding, MalformedToken
from .pd import LinkDiagram, Smoothing

Dart = tuple  # (arc, +1|-1); +1 travels tail -> head


@dataclass(frozen=True)
class CircleGeometry:
    """Planar data for one smoothing circle (or free loop)."""

    depth: int
    fwd_left_face: int | None  # region left of the circle traversed forward
    bwd_left_face: int | None
    inner_face: int | None  # region separated from the unbounded face


class PlanarMap:
    """Faces of the diagram's underlying 4-valent map."""

    def __init__(self, diagram: LinkDiagram):
        self.diagram = diagram
        n = diagram.n
        port_map: dict[tuple[int, int], tuple[int, str]] = {}
        for cid, cr in enumerate(diagram.crossings):
            port_map[(cid, 0)] = (cr.a, "head")
            port_map[(cid, 2)] = (cr.c, "tail")
            if cr.over_in == cr.b:
                port_map[(cid, 1)] = (cr.b, "head")
                port_map[(cid, 3)] = (cr.d, "tail")
            else:
                port_map[(cid, 3)] = (cr.d, "head")
                port_map[(cid, 1)] = (cr.b, "tail")
        arc_ports: dict[int, dict[str, tuple[int, int]]] = {}
        for port, (arc, end) in port_map.items():
            arc_ports.setdefault(arc, {})[end] = port
        self._port_map = port_map
        self._arc_ports = arc_ports

        def phi(dart: Dart) -> Dart:
            arc, direction = dart
            end = "head" if direction == +1 else "tail"
            cid, slot = arc_ports[arc][end]
            nxt_arc, nxt_end = port_map[(cid, (slot - 1) % 4)]
            return (nxt_arc, +1 if nxt_end == "tail" else -1)

        self.face_of_dart: dict[Dart, int] = {}
        self.faces: list[list[Dart]] = []
        for arc in range(1, diagram.arc_count + 1):
            for direction in (+1, -1):
                start = (arc, direction)
                if start in self.face_of_dart:
                    continue
                face_id = len(self.faces)
                orbit = []
                dart = start
                while True:
                    self.face_of_dart[dart] = face_id
                    orbit.append(dart)
                    dart = phi(dart)
                    if dart == start:
                        break
                self.faces.append(orbit)

        # connected pieces of the 4-valent graph, via shared crossings
        parent = list(range(max(n, 1)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for arc, ports in arc_ports.items():
            cids = [port[0] for port in ports.values()]
            if len(cids) == 2:
                ra, rb = find(cids[0]), find(cids[1])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        self.piece_of_crossing = [find(cid) for cid in range(n)]
        self.piece_of_arc = {
            arc: self.piece_of_crossing[ports["head"][0]]
            for arc, ports in arc_ports.items()
        }
        self.piece_of_face = [
            self.piece_of_arc[orbit[0][0]] for orbit in self.faces
        ]

        # Euler characteristic per connected piece (sphere: V - E + F = 2)
        pieces = sorted(set(self.piece_of_crossing)) if n else []
        for piece in pieces:
            v = sum(1 for p in self.piece_of_crossing if p == piece)
            e = sum(1 for p in self.piece_of_arc.values() if p == piece)
            f = sum(1 for p in self.piece_of_face if p == piece)
            if v - e + f != 2:
                raise AmbiguousEmbedding(
                    f"PD code is not planar: V-E+F = {v - e + f} != 2"
                )

    def dart_face(self, dart: Dart) -> int:
        return self.face_of_dart[dart]


class SmoothedDiagram:
    """Regions and circles of one complete resolution."""

    def __init__(self, diagram: LinkDiagram, state, smoothing: Smoothing | None = None,
                 planar: PlanarMap | None = None):
        self.diagram = diagram
        self.state = tuple(state)
        self.planar = planar or PlanarMap(diagram)
        self.smoothing = smoothing or diagram.resolve_state(self.state)

        nfaces = len(self.planar.faces)
        parent = list(range(nfaces))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def dart_into(cid: int, slot: int) -> Dart:
            arc, end = self.planar._port_map[(cid, slot)]
            return (arc, +1 if end == "head" else -1)

        for cid, bit in enumerate(self.state):
            if bit == 0:
                pair = (dart_into(cid, 2), dart_into(cid, 0))
            else:
                pair = (dart_into(cid, 1), dart_into(cid, 3))
            fa = find(self.planar.dart_face(pair[0]))
            fb = find(self.planar.dart_face(pair[1]))
            if fa != fb:
                parent[max(fa, fb)] = min(fa, fb)
        self.region_of_face = [find(f) for f in range(nfaces)]

    def region_of_dart(self, dart: Dart) -> int:
        return self.region_of_face[self.planar.dart_face(dart)]

    def geometry(self, outer_face_hint: int | None = None) -> list[CircleGeometry]:
        """Per-circle nesting depth, side regions and inner region.

        The hint, when given, is a signed arc label choosing the
        unbounded region of that arc's connected piece.
        """
        diagram = self.diagram
        circles = self.smoothing.circles
        arc_circle = self.smoothing.circle_of_arc()

        region_sizes: dict[int, int] = {}
        region_piece: dict[int, int] = {}
        for face_id, orbit in enumerate(self.planar.faces):
            region = self.region_of_face[face_id]
            region_sizes[region] = region_sizes.get(region, 0) + len(orbit)
            region_piece[region] = self.planar.piece_of_face[face_id]

        # circle <-> region incidence
        circle_regions: list[set[int]] = [set() for _ in circles]
        for arc, ci in arc_circle.items():
            for direction in (+1, -1):
                circle_regions[ci].add(self.region_of_dart((arc, direction)))
        for ci, regions in enumerate(circle_regions):
            if circles[ci][0] == "O":
                continue
            if len(regions) != 2:
                raise AmbiguousEmbedding(
                    f"circle {ci} borders {len(regions)} regions, expected 2"
                )

        hint_region: dict[int, int] = {}
        if outer_face_hint is not None:
            arc = abs(outer_face_hint)
            if not (1 <= arc <= diagram.arc_count):
                raise MalformedToken(f"outer face hint arc {arc} out of range")
            dart = (arc, +1 if outer_face_hint > 0 else -1)
            piece = self.planar.piece_of_arc[arc]
            hint_region[piece] = self.region_of_dart(dart)

        # pick an outer region per connected piece, then BFS the
        # region/circle incidence tree to get depths
        pieces = sorted(set(region_piece.values()))
        region_dist: dict[int, int] = {}
        for piece in pieces:
            if piece in hint_region:
                outer = hint_region[piece]
            else:
                candidates = [r for r, p in region_piece.items() if p == piece]
                outer = min(candidates, key=lambda r: (region_sizes[r], r))
            adjacency: dict[int, list[tuple[int, int]]] = {}
            for ci, regions in enumerate(circle_regions):
                if circles[ci][0] == "O":
                    continue
                if self.planar.piece_of_arc[circles[ci][0]] != piece:
                    continue
                r1, r2 = sorted(regions)
                adjacency.setdefault(r1, []).append((r2, ci))
                adjacency.setdefault(r2, []).append((r1, ci))
            region_dist[outer] = 0
            frontier = [outer]
            while frontier:
                nxt = []
                for r in frontier:
                    for r2, _ci in adjacency.get(r, ()):
                        if r2 not in region_dist:
                            region_dist[r2] = region_dist[r] + 1
                            nxt.append(r2)
                frontier = nxt

        out: list[CircleGeometry] = []
        for ci, circ in enumerate(circles):
            if circ[0] == "O":
                out.append(CircleGeometry(0, None, None, None))
                continue
            regions = sorted(circle_regions[ci], key=lambda r: region_dist[r])
            depth = region_dist[regions[0]]
            if region_dist[regions[1]] != depth + 1:
                raise AmbiguousEmbedding("region incidence graph is not a tree")
            min_arc = circ[0]
            out.append(
                CircleGeometry(
                    depth=depth,
                    fwd_left_face=self.region_of_dart((min_arc, +1)),
                    bwd_left_face=self.region_of_dart((min_arc, -1)),
                    inner_face=regions[1],
                )
            )
        return out


def nesting_depths(diagram: LinkDiagram, state, outer_face_hint: int | None = None) -> dict[int, int]:
    """Depth of each circle of the smoothing: how many circles separate
    it from the unbounded region.  Keys are canonical circle indices."""
    smoothed = SmoothedDiagram(diagram, state)
    geo = smoothed.geometry(outer_face_hint)
    return {ci: g.depth for ci, g in enumerate(geo)}
