"""Finite abstract simplicial complexes and their combinatorial predicates.

A complex is stored as an antichain of facets on a dense vertex set
0..n-1, with a label table preserving the external vertex names.  The
empty face belongs to every complex, and the complex ``{}`` consisting
of the empty face alone (dimension -1, no vertices) is a first-class
value; the void complex with no faces at all cannot be represented.

Instances are immutable and hashable, and every operation here is a
pure function, so complexes can be shared freely between threads.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

Face = frozenset[int]


class EmptyComplexError(ValueError):
    """The input document describes no faces at all."""


class DuplicateVertexError(ValueError):
    """A facet repeats one of its vertex labels."""


class FaceNotInComplexError(ValueError):
    """An operation received a face that is not in the complex."""


class NonMaximalFaceWarning(UserWarning):
    """Input faces were absorbed into larger facets."""


def _label_key(label: str):
    # numeric labels sort numerically, all others lexicographically after them
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex given by its facets.

    ``labels[i]`` is the external name of vertex id ``i``; every vertex
    id occurs in at least one facet (isolated vertices are singleton
    facets) and the facets form an antichain.
    """

    labels: tuple[str, ...]
    facets: tuple[Face, ...]

    def __post_init__(self):
        used: set[int] = set()
        for f in self.facets:
            used.update(f)
        if not self.facets:
            raise ValueError("a simplicial complex must contain at least the empty face")
        if used != set(range(len(self.labels))):
            raise ValueError("every vertex must lie in some facet")
        if len(set(self.labels)) != len(self.labels):
            raise DuplicateVertexError(f"duplicate vertex labels in {self.labels!r}")
        for a in self.facets:
            for b in self.facets:
                if a is not b and a <= b:
                    raise ValueError("facets must form an antichain")

    @classmethod
    def from_label_facets(
        cls, label_facets: Iterable[Iterable[str]], *, warn_absorbed: bool = True
    ) -> "SimplicialComplex":
        """Canonicalize arbitrary label faces: dedupe, absorb non-maximal ones."""
        faces: list[tuple[str, ...]] = []
        for raw in label_facets:
            face = tuple(raw)
            if len(set(face)) != len(face):
                raise DuplicateVertexError(f"facet {face!r} repeats a vertex label")
            faces.append(face)
        if not faces:
            raise EmptyComplexError("no facets given")
        labels = tuple(sorted({v for face in faces for v in face}, key=_label_key))
        index = {lbl: i for i, lbl in enumerate(labels)}
        candidates = {frozenset(index[v] for v in face) for face in faces}
        maximal = {f for f in candidates if not any(f < g for g in candidates)}
        absorbed = len(faces) - len(maximal)
        if absorbed and warn_absorbed:
            warnings.warn(
                f"absorbed {absorbed} non-maximal or duplicate input face(s) into facets",
                NonMaximalFaceWarning,
                stacklevel=3,
            )
        facets = tuple(sorted(maximal, key=lambda f: tuple(sorted(f))))
        return cls(labels, facets)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def has_face(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def face_labels(self, face: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in sorted(face))

    def ids(self, labels: Iterable[str]) -> Face:
        index = {lbl: i for i, lbl in enumerate(self.labels)}
        missing = [lbl for lbl in labels if lbl not in index]
        if missing:
            raise FaceNotInComplexError(f"unknown vertex labels {missing!r}")
        return frozenset(index[lbl] for lbl in labels)

    def facet_label_sets(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.face_labels(f) for f in self.facets)

    def __repr__(self) -> str:
        facets = ", ".join("{" + " ".join(self.face_labels(f)) + "}" for f in self.facets)
        return f"SimplicialComplex([{facets}])"


def make_complex(facets: Iterable[Iterable[object]]) -> SimplicialComplex:
    """Build a complex from faces of ints or strings (labels are str())."""
    return SimplicialComplex.from_label_facets(
        [[str(v) for v in face] for face in facets]
    )


IRRELEVANT = SimplicialComplex(labels=(), facets=(frozenset(),))


def parse_complex(text: str) -> SimplicialComplex:
    """Parse a facet-list document: one facet per line (whitespace
    separated labels, ``#`` starts a comment line), or the JSON form
    ``{"facets": [["1","2"], ...]}``."""
    stripped = text.strip()
    if not stripped:
        raise EmptyComplexError("empty document")
    if stripped.startswith("{"):
        data = json.loads(text)
        if not isinstance(data, dict) or "facets" not in data:
            raise ValueError('JSON input must be an object with a "facets" key')
        facets = [[str(v) for v in face] for face in data["facets"]]
        if not facets:
            raise EmptyComplexError("empty facet list in JSON document")
        return SimplicialComplex.from_label_facets(facets)
    facets = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        facets.append(line.split())
    if not facets:
        raise EmptyComplexError("document contains no facet lines")
    return SimplicialComplex.from_label_facets(facets)


@lru_cache(maxsize=None)
def faces_of(delta: SimplicialComplex) -> frozenset[Face]:
    """All faces of the complex, the empty face included."""
    out: set[Face] = set()
    for facet in delta.facets:
        verts = sorted(facet)
        for r in range(len(verts) + 1):
            out.update(frozenset(c) for c in combinations(verts, r))
    return frozenset(out)


def face_dim(face: Iterable[int]) -> int:
    return len(frozenset(face)) - 1


def link(delta: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """The subcomplex of faces disjoint from ``face`` whose union with it
    is again a face, presented on the vertices it actually uses."""
    face = frozenset(face)
    if not delta.has_face(face):
        raise FaceNotInComplexError(f"face with ids {sorted(face)} is not in the complex")
    carriers = {f - face for f in delta.facets if face <= f}
    maximal = [c for c in carriers if not any(c < d for d in carriers)]
    return SimplicialComplex.from_label_facets(
        [delta.face_labels(c) for c in maximal], warn_absorbed=False
    )


def connected_components(delta: SimplicialComplex) -> list[SimplicialComplex]:
    """Split the vertex set along shared faces; the complex ``{}`` has no
    vertices and therefore no components."""
    parent = list(range(delta.n_vertices))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for facet in delta.facets:
        verts = sorted(facet)
        for v in verts[1:]:
            parent[find(verts[0])] = find(v)

    groups: dict[int, list[Face]] = {}
    for facet in delta.facets:
        if not facet:
            continue
        groups.setdefault(find(min(facet)), []).append(facet)
    components = []
    for root in sorted(groups, key=lambda r: min(min(f) for f in groups[r])):
        components.append(
            SimplicialComplex.from_label_facets(
                [delta.face_labels(f) for f in groups[root]], warn_absorbed=False
            )
        )
    return components


def is_connected(delta: SimplicialComplex) -> bool:
    """At most one connected component (the vertex-free complex counts)."""
    return len(connected_components(delta)) <= 1


def is_pure(delta: SimplicialComplex) -> bool:
    """Every facet has the dimension of the complex."""
    return len({len(f) for f in delta.facets}) == 1


def is_strongly_connected(delta: SimplicialComplex) -> bool:
    """Pure, and any two facets are joined by a chain of facets meeting
    in ridges (faces of codimension one).

    For a pure 0-dimensional complex every pair of facets shares the
    empty ridge, so such complexes are strongly connected.
    """
    if not is_pure(delta):
        return False
    facets = delta.facets
    if len(facets) <= 1:
        return True
    d = delta.dim
    seen = {0}
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(len(facets)):
            if j not in seen and len(facets[i] & facets[j]) == d:
                seen.add(j)
                queue.append(j)
    return len(seen) == len(facets)


def cone_points(delta: SimplicialComplex) -> Face:
    """Vertices lying in every facet: the maximal cone face."""
    return frozenset.intersection(*delta.facets)


def is_normal(delta: SimplicialComplex) -> bool:
    """Links of all faces of dimension at most dim - 2 are connected.

    The empty face counts, so a normal complex of dimension at least 1
    is connected.
    """
    bound = delta.dim - 2
    for face in faces_of(delta):
        if len(face) - 1 <= bound and not is_connected(link(delta, face)):
            return False
    return True


def disjoint_union(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    """Relabel both vertex sets with side tags and take the union."""
    facets = [
        [f"({lbl},1)" for lbl in d1.face_labels(f)] for f in d1.facets if f
    ] + [
        [f"({lbl},2)" for lbl in d2.face_labels(f)] for f in d2.facets if f
    ]
    if not facets:
        return IRRELEVANT
    return SimplicialComplex.from_label_facets(facets, warn_absorbed=False)


def path_edge_count(delta: SimplicialComplex) -> int | None:
    """Number of edges if the complex is a path graph, else None.

    A path is a connected 1-dimensional pure complex that is a tree with
    maximum vertex degree two.  A single edge counts as a path with one
    edge; a lone vertex does not.
    """
    if delta.dim != 1 or not is_pure(delta):
        return None
    if not is_connected(delta):
        return None
    n_edges = len(delta.facets)
    if delta.n_vertices != n_edges + 1:
        return None
    degree = [0] * delta.n_vertices
    for e in delta.facets:
        for v in e:
            degree[v] += 1
    if max(degree) > 2:
        return None
    return n_edges
