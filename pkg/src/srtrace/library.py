"""Built-in reference complexes.

Facet lists are embedded but never trusted as authored: the test suite
recomputes their homology before they ship.
"""

from __future__ import annotations

import re
from itertools import combinations

from .complexes import SimplicialComplex, make_complex


def octahedron_boundary() -> SimplicialComplex:
    """Boundary of the octahedron: the minimal 2-sphere with 6 vertices.

    Vertices pair up as antipodes (1,2), (3,4), (5,6); facets pick one
    vertex from each pair.
    """
    pairs = [(1, 2), (3, 4), (5, 6)]
    return make_complex([(a, b, c) for a in pairs[0] for b in pairs[1] for c in pairs[2]])


def path(n_vertices: int) -> SimplicialComplex:
    if n_vertices < 1:
        raise ValueError("a path needs at least one vertex")
    if n_vertices == 1:
        return make_complex([(1,)])
    return make_complex([(i, i + 1) for i in range(1, n_vertices)])


def cycle(n_vertices: int) -> SimplicialComplex:
    if n_vertices < 3:
        raise ValueError("a cycle needs at least three vertices")
    edges = [(i, i + 1) for i in range(1, n_vertices)] + [(n_vertices, 1)]
    return make_complex(edges)


def rp2_minimal() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane
    (antipodal quotient of the icosahedron): 10 facets, every vertex
    link a 5-cycle."""
    return make_complex(
        [
            (1, 2, 3),
            (1, 2, 4),
            (1, 3, 5),
            (1, 4, 6),
            (1, 5, 6),
            (2, 3, 6),
            (2, 4, 5),
            (2, 5, 6),
            (3, 4, 5),
            (3, 4, 6),
        ]
    )


def csaszar_torus() -> SimplicialComplex:
    """The 7-vertex torus: 14 facets on vertex set Z/7, every pair of
    vertices an edge."""
    facets = []
    for i in range(7):
        facets.append([(i + k) % 7 + 1 for k in (0, 1, 3)])
        facets.append([(i + k) % 7 + 1 for k in (0, 2, 3)])
    return make_complex(facets)


def sphere(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-simplex: the minimal d-sphere."""
    if d < 0:
        raise ValueError("sphere dimension must be nonnegative")
    return make_complex(combinations(range(1, d + 3), d + 1))


_FIXED = {
    "octa": octahedron_boundary,
    "path3": lambda: path(3),
    "path4": lambda: path(4),
    "cycle4": lambda: cycle(4),
    "rp2_6": rp2_minimal,
    "torus_csaszar": csaszar_torus,
}

_PATTERNS = [
    (re.compile(r"^sphere_(\d+)$"), sphere),
    (re.compile(r"^path(\d+)$"), path),
    (re.compile(r"^cycle(\d+)$"), cycle),
]


def builtin_names() -> list[str]:
    return sorted(_FIXED) + ["sphere_<d>"]


def is_builtin(name: str) -> bool:
    if name in _FIXED:
        return True
    return any(p.match(name) for p, _ in _PATTERNS)


def builtin_complex(name: str) -> SimplicialComplex:
    if name in _FIXED:
        return _FIXED[name]()
    for pattern, factory in _PATTERNS:
        m = pattern.match(name)
        if m:
            return factory(int(m.group(1)))
    raise KeyError(f"unknown builtin complex {name!r}; known: {', '.join(builtin_names())}")


def builtin_facet_text(name: str) -> str:
    delta = builtin_complex(name)
    lines = [f"# {name}: {delta.n_vertices} vertices, {len(delta.facets)} facets"]
    lines += [" ".join(delta.face_labels(f)) for f in delta.facets]
    return "\n".join(lines) + "\n"
