"""Ring-theoretic predicates of a Stanley-Reisner ring computed from the
combinatorics of its complex, and the canonical trace classification of
a connected complex.

Everything here is decided from homology of links; the canonical module
itself is never materialized.  Verdicts outside the reach of the
implemented criteria are reported as Unknown rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .complexes import (
    SimplicialComplex,
    cone_points,
    connected_components,
    faces_of,
    is_normal,
    is_pure,
    link,
    path_edge_count,
)
from .exact_linalg import FieldSpec
from .homology import (
    is_homology_manifold,
    is_homology_sphere,
    is_orientable_over,
    is_pseudomanifold,
    reduced_betti,
)
from .verdicts import NO, YES, Evidence, Rule, TraceClass, TriState, unknown


@dataclass(frozen=True)
class ScopeFlags:
    """Every hypothesis the trace classification consults, precomputed."""

    normal: bool
    pure: bool
    connected: bool
    cm: bool
    cm_punctured: bool
    gorenstein: bool
    gorenstein_punctured: bool
    quasi_gorenstein: TriState
    pseudomanifold: bool
    orientable: TriState
    homology_manifold: bool
    cone_points: tuple[str, ...]


@dataclass(frozen=True)
class TraceReport:
    """Classification of the canonical trace of one connected complex,
    with the evidence trail that justifies it."""

    trace_class: TraceClass
    field: FieldSpec
    scope_flags: ScopeFlags
    evidence: tuple[Evidence, ...]


@lru_cache(maxsize=None)
def is_cohen_macaulay(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """Every link (the whole complex included) has vanishing reduced
    homology below its own dimension."""
    for face in faces_of(delta):
        lk = link(delta, face)
        profile = reduced_betti(lk, field)
        if any(v != 0 for i, v in profile.betti.items() if i < lk.dim):
            return False
    return True


def is_cm_on_punctured(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """Cohen-Macaulayness of every vertex link; localizing at a vertex
    turns the ring into the link's ring with a unit adjoined."""
    return all(
        is_cohen_macaulay(link(delta, frozenset([v])), field)
        for v in range(delta.n_vertices)
    )


@lru_cache(maxsize=None)
def is_gorenstein(delta: SimplicialComplex, field: FieldSpec) -> bool:
    """The link of the maximal cone face is a homology sphere."""
    core = link(delta, cone_points(delta))
    return is_homology_sphere(core, field)


def is_gorenstein_on_punctured(
    delta: SimplicialComplex, field: FieldSpec, *, check_all_faces: bool = False
) -> bool:
    """Gorensteinness of every vertex link; by induction on links this
    already covers every nonempty face.  ``check_all_faces`` runs the
    redundant full scan for cross-validation."""
    if check_all_faces:
        return all(
            is_gorenstein(link(delta, face), field)
            for face in faces_of(delta)
            if face
        )
    return all(
        is_gorenstein(link(delta, frozenset([v])), field)
        for v in range(delta.n_vertices)
    )


def is_quasi_gorenstein(delta: SimplicialComplex, field: FieldSpec) -> TriState:
    """Decide whether the component ring is quasi-Gorenstein.

    Cohen-Macaulay complexes reduce to the Gorenstein link criterion.
    Otherwise normal pseudomanifolds are decided by orientability over
    the field: orientable ones are quasi-Gorenstein, non-orientable ones
    have trace inside the square of the maximal ideal and so cannot be.
    Anything else is out of reach and reported Unknown.
    """
    if len(connected_components(delta)) > 1:
        raise ValueError(
            "quasi-Gorenstein criteria apply to connected complexes; "
            "split into components first"
        )
    if is_cohen_macaulay(delta, field):
        return YES if is_gorenstein(delta, field) else NO
    if is_normal(delta) and is_pseudomanifold(delta):
        return YES if is_orientable_over(delta, field) else NO
    return unknown(
        "not Cohen-Macaulay and not a normal pseudomanifold, so neither the "
        "Gorenstein link rule nor the orientability rule applies"
    )


def is_teter_type(delta: SimplicialComplex, field: FieldSpec) -> TriState:
    """For pure complexes the trace is realized by a single homomorphism
    exactly when the ring is quasi-Gorenstein; impure complexes give
    mixed rings where that equivalence is unavailable."""
    if not is_pure(delta):
        return unknown("the Teter type equivalence requires an unmixed (pure) complex")
    return is_quasi_gorenstein(delta, field)


def scope_flags(delta: SimplicialComplex, field: FieldSpec) -> ScopeFlags:
    """Evaluate every classification hypothesis on one complex."""
    connected = len(connected_components(delta)) <= 1
    pm = is_pseudomanifold(delta)
    if pm:
        orientable = YES if is_orientable_over(delta, field) else NO
    else:
        orientable = unknown("orientability is defined for pseudomanifolds only")
    if connected:
        qg = is_quasi_gorenstein(delta, field)
    else:
        qg = unknown("quasi-Gorenstein criteria apply to connected complexes only")
    return ScopeFlags(
        normal=is_normal(delta),
        pure=is_pure(delta),
        connected=connected,
        cm=is_cohen_macaulay(delta, field),
        cm_punctured=is_cm_on_punctured(delta, field),
        gorenstein=is_gorenstein(delta, field),
        gorenstein_punctured=is_gorenstein_on_punctured(delta, field),
        quasi_gorenstein=qg,
        pseudomanifold=pm,
        orientable=orientable,
        homology_manifold=is_homology_manifold(delta, field),
        cone_points=delta.face_labels(cone_points(delta)),
    )


def classify_trace_connected(
    delta: SimplicialComplex, field: FieldSpec, *, check_all_faces: bool = False
) -> TraceReport:
    """Canonical trace of the ring of a connected complex.

    Requires link connectivity (the combinatorial form of Serre's
    condition in codimension two); without it the report is Unknown with
    the flags still populated.  Disconnected input is an error: that case
    belongs to the disjoint-union classifier.
    """
    if len(connected_components(delta)) > 1:
        raise ValueError(
            "complex is disconnected; classify it through the disjoint-union route"
        )
    flags = scope_flags(delta, field)
    if check_all_faces:
        flags = replace(
            flags,
            gorenstein_punctured=is_gorenstein_on_punctured(
                delta, field, check_all_faces=True
            ),
        )
    evidence: list[Evidence] = []

    if not flags.normal:
        evidence.append(Evidence("is_normal", "false", Rule.S2_HYPOTHESIS))
        evidence.append(
            Evidence(
                "classification",
                "unknown: some low-dimensional link is disconnected, so the "
                "trace theorems do not apply",
                Rule.S2_HYPOTHESIS,
            )
        )
        return TraceReport(TraceClass.UNKNOWN, field, flags, tuple(evidence))

    qg = flags.quasi_gorenstein
    evidence.append(Evidence("quasi_gorenstein", str(qg), Rule.TRACE_IS_RING_IFF_QG))
    if qg.is_yes:
        if flags.cm:
            evidence.append(Evidence("gorenstein", "true", Rule.GORENSTEIN_LINK))
        else:
            evidence.append(
                Evidence("orientable", "true", Rule.ORIENTABLE_PSEUDOMANIFOLD_QG)
            )
        if not flags.gorenstein_punctured:
            # trace equals the ring while some link is not Gorenstein:
            # recorded rather than resolved
            evidence.append(
                Evidence(
                    "gorenstein_on_punctured",
                    "false (tension with the power-of-m characterization)",
                    Rule.PUNCTURED_GORENSTEIN_POWERS,
                )
            )
        return TraceReport(TraceClass.EQUALS_RING, field, flags, tuple(evidence))

    gp = flags.gorenstein_punctured
    evidence.append(
        Evidence("gorenstein_on_punctured", str(gp).lower(), Rule.PUNCTURED_GORENSTEIN_POWERS)
    )
    if gp:
        edges = path_edge_count(delta)
        if edges is not None and edges >= 3:
            evidence.append(
                Evidence(
                    "path_edge_count",
                    f"{edges} (reading path length as edge count)",
                    Rule.PATH_TRACE_EQUALS_M,
                )
            )
            return TraceReport(TraceClass.EQUALS_MAX_IDEAL, field, flags, tuple(evidence))
        if flags.homology_manifold and flags.orientable.is_no:
            evidence.append(
                Evidence(
                    "homology_manifold_nonorientable",
                    "true",
                    Rule.NONORIENTABLE_MANIFOLD_M2,
                )
            )
            return TraceReport(
                TraceClass.EQUALS_MAX_IDEAL_SQUARED, field, flags, tuple(evidence)
            )
        if qg.is_unknown:
            evidence.append(
                Evidence(
                    "classification",
                    "unknown: cannot separate trace-equals-ring from the proper cases",
                    Rule.TRACE_IS_RING_IFF_QG,
                )
            )
            return TraceReport(TraceClass.UNKNOWN, field, flags, tuple(evidence))
        evidence.append(
            Evidence(
                "classification",
                "unknown: Gorenstein on the punctured spectrum but neither a "
                "long path nor a non-orientable homology manifold; primitive "
                "results are inconsistent",
                Rule.PUNCTURED_GORENSTEIN_POWERS,
            )
        )
        return TraceReport(TraceClass.UNKNOWN, field, flags, tuple(evidence))

    if qg.is_unknown:
        evidence.append(
            Evidence(
                "classification",
                "unknown: quasi-Gorensteinness undecided, so trace-equals-ring "
                "cannot be separated from not-m-primary",
                Rule.TRACE_IS_RING_IFF_QG,
            )
        )
        return TraceReport(TraceClass.UNKNOWN, field, flags, tuple(evidence))
    if flags.pseudomanifold and flags.orientable.is_no:
        evidence.append(
            Evidence(
                "nonorientable_normal_pseudomanifold",
                "true",
                Rule.NONORIENTABLE_PSEUDOMANIFOLD_M2,
            )
        )
        return TraceReport(
            TraceClass.CONTAINED_IN_M_SQUARED, field, flags, tuple(evidence)
        )
    return TraceReport(TraceClass.NOT_M_PRIMARY, field, flags, tuple(evidence))
