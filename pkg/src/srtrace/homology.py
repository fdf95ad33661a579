"""Reduced simplicial homology over a field, and the topological
predicates built on it: the local sphere condition on links, homology
spheres and manifolds, pseudomanifolds and orientability.

All chain complexes are augmented: the empty face spans the chain group
in degree -1, so links of facets (which are the complex ``{}``) need no
special casing anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import (
    Face,
    SimplicialComplex,
    connected_components,
    faces_of,
    is_strongly_connected,
    link,
)
from .exact_linalg import FieldSpec, SparseIntMatrix, rank_over_field, smith_normal_form


class NotPseudomanifoldError(ValueError):
    """Orientability is only defined for pseudomanifolds."""


@dataclass
class HomologyProfile:
    """Reduced Betti numbers of a complex over a fixed field.

    ``betti`` maps every degree in -1..dim to dim H~_i; degrees outside
    that range are absent and count as zero.
    """

    field: FieldSpec
    betti: dict[int, int]

    def betti_number(self, i: int) -> int:
        return self.betti.get(i, 0)


@lru_cache(maxsize=None)
def _graded_faces(delta: SimplicialComplex) -> tuple[tuple[Face, ...], ...]:
    """Faces grouped by dimension, index i holding the (i-1)-faces."""
    by_dim: list[list[Face]] = [[] for _ in range(delta.dim + 2)]
    for face in faces_of(delta):
        by_dim[len(face)].append(face)
    return tuple(tuple(sorted(fs, key=lambda f: tuple(sorted(f)))) for fs in by_dim)


def boundary_matrix(delta: SimplicialComplex, i: int) -> SparseIntMatrix:
    """Matrix of the boundary map from i-chains to (i-1)-chains with the
    standard alternating signs on vertices in increasing id order; the
    map in degree 0 is the augmentation onto the empty face."""
    if not -1 <= i <= delta.dim + 1:
        raise ValueError(f"degree {i} outside -1..{delta.dim + 1}")
    graded = _graded_faces(delta)
    source = graded[i + 1] if i + 1 < len(graded) else ()
    target = graded[i] if 0 <= i < len(graded) else ()
    index = {face: r for r, face in enumerate(target)}
    entries = []
    for c, face in enumerate(source):
        verts = sorted(face)
        for j, v in enumerate(verts):
            sub = face - {v}
            entries.append((index[sub], c, (-1) ** j))
    return SparseIntMatrix.from_entries(len(target), len(source), entries)


@lru_cache(maxsize=None)
def _betti_tuple(delta: SimplicialComplex, field: FieldSpec) -> tuple[int, ...]:
    graded = _graded_faces(delta)
    ranks = [
        rank_over_field(boundary_matrix(delta, i), field)
        for i in range(-1, delta.dim + 2)
    ]
    # dim H~_i = nullity of d_i minus rank of d_{i+1}
    return tuple(
        len(graded[i + 1]) - ranks[i + 1] - ranks[i + 2] for i in range(-1, delta.dim + 1)
    )


def reduced_betti(delta: SimplicialComplex, field: FieldSpec) -> HomologyProfile:
    values = _betti_tuple(delta, field)
    return HomologyProfile(field, {i - 1: v for i, v in enumerate(values)})


def star_condition(delta: SimplicialComplex, face: Face, field: FieldSpec) -> bool:
    """True when the link of the face has the reduced homology of a
    sphere of the link's own dimension (one copy of the field on top,
    nothing below).  Facets pass automatically: their link is ``{}``."""
    lk = link(delta, face)
    profile = reduced_betti(lk, field)
    top = lk.dim
    return profile.betti_number(top) == 1 and all(
        v == 0 for i, v in profile.betti.items() if i != top
    )


def is_homology_sphere(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """The local sphere condition holds at every face, the empty one included."""
    return all(star_condition(delta, face, field) for face in faces_of(delta))


def is_homology_manifold(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """Connected, with the local sphere condition at every nonempty face."""
    if len(connected_components(delta)) != 1:
        return False
    return all(
        star_condition(delta, face, field) for face in faces_of(delta) if face
    )


def is_pseudomanifold(delta: SimplicialComplex) -> bool:
    """Strongly connected and every ridge lies in exactly two facets."""
    if not is_strongly_connected(delta):
        return False
    counts: dict[Face, int] = {}
    for facet in delta.facets:
        for v in facet:
            ridge = facet - {v}
            counts[ridge] = counts.get(ridge, 0) + 1
    return all(c == 2 for c in counts.values())


def _require_pseudomanifold(delta: SimplicialComplex) -> None:
    if not is_pseudomanifold(delta):
        raise NotPseudomanifoldError(
            "orientability is defined for pseudomanifolds only"
        )


def is_orientable_over(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """Nonvanishing of the top homology over the field.

    In dimension at least 1 the top homology agrees with its reduced
    version; 0-dimensional pseudomanifolds are orientable by convention
    since their unreduced H_0 never vanishes.
    """
    _require_pseudomanifold(delta)
    d = delta.dim
    if d <= 0:
        return True
    return reduced_betti(delta, field).betti_number(d) > 0


def is_orientable_z(delta: SimplicialComplex) -> bool:
    """Nonvanishing of the top integral homology, via the free rank read
    off the Smith normal form of the top boundary map."""
    _require_pseudomanifold(delta)
    d = delta.dim
    if d <= 0:
        return True
    n_top = len(_graded_faces(delta)[d + 1])
    rank, _ = smith_normal_form(boundary_matrix(delta, d))
    return n_top - rank > 0
