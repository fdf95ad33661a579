"""Exhaustive enumeration of small complexes and the property battery
run over them: homology oracle agreement, Euler characteristic balance,
and the implication chains between the ring predicates.

Complexes are enumerated as facet antichains covering the vertex set,
one representative per relabeling class.  The counts stay small enough
through five vertices that everything below is exact and fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from itertools import permutations

from .classify import (
    classify_trace_connected,
    is_cohen_macaulay,
    is_gorenstein,
    is_gorenstein_on_punctured,
)
from .complexes import (
    IRRELEVANT,
    SimplicialComplex,
    connected_components,
    faces_of,
    is_normal,
    is_pure,
    is_strongly_connected,
    make_complex,
)
from .exact_linalg import GF2, GF3, QQ, FieldSpec, smith_normal_form
from .homology import boundary_matrix, is_pseudomanifold, reduced_betti, _graded_faces
from .verdicts import TraceClass

DEFAULT_FIELDS = (QQ, GF2, GF3)


def _antichains(masks: list[int]) -> list[list[int]]:
    """All antichains (as lists of bitmasks) over the given subsets."""
    out: list[list[int]] = [[]]
    chosen: list[int] = []

    def extend(start: int) -> None:
        for idx in range(start, len(masks)):
            m = masks[idx]
            if all((m & c != m) and (m & c != c) for c in chosen):
                chosen.append(m)
                out.append(list(chosen))
                extend(idx + 1)
                chosen.pop()

    extend(0)
    return out


def _canonical(n: int, facets: list[int]) -> tuple[tuple[int, ...], ...]:
    best = None
    verts = range(n)
    for perm in permutations(verts):
        relabeled = sorted(
            tuple(sorted(perm[v] for v in range(n) if mask >> v & 1)) for mask in facets
        )
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return best


def enumerate_complexes(
    max_vertices: int, *, connected_only: bool = False
) -> list[SimplicialComplex]:
    """One complex per isomorphism class with at most the given number of
    vertices, every vertex lying in some facet.  The complex ``{}`` is
    the single representative with zero vertices."""
    found: list[SimplicialComplex] = []
    if not connected_only:
        found.append(IRRELEVANT)
    for n in range(1, max_vertices + 1):
        full = (1 << n) - 1
        masks = list(range(1, full + 1))
        seen = set()
        for chain in _antichains(masks):
            cover = 0
            for m in chain:
                cover |= m
            if cover != full:
                continue
            key = _canonical(n, chain)
            if key in seen:
                continue
            seen.add(key)
            delta = make_complex([key_face for key_face in key])
            if connected_only and len(connected_components(delta)) != 1:
                continue
            found.append(delta)
    return found


def betti_via_integer_snf(delta: SimplicialComplex, p: int | None) -> dict[int, int]:
    """Betti numbers over Q (p None) or F_p recovered from the integer
    Smith normal forms of the boundary maps: free rank plus the count of
    elementary divisors divisible by p on each side."""
    graded = _graded_faces(delta)
    snf = [smith_normal_form(boundary_matrix(delta, i)) for i in range(-1, delta.dim + 2)]
    out = {}
    for i in range(-1, delta.dim + 1):
        n_i = len(graded[i + 1])
        rank_i, div_i = snf[i + 1]
        rank_next, div_next = snf[i + 2]
        free = n_i - rank_i - rank_next
        if p is None:
            out[i] = free
        else:
            out[i] = (
                free
                + sum(1 for d in div_i if d % p == 0)
                + sum(1 for d in div_next if d % p == 0)
            )
    return out


def check_homology(delta: SimplicialComplex, fields=DEFAULT_FIELDS) -> list[str]:
    """Field Betti numbers against the integer route, plus the Euler
    characteristic balance."""
    problems = []
    for field in fields:
        profile = reduced_betti(delta, field)
        oracle = betti_via_integer_snf(delta, field.p)
        if profile.betti != oracle:
            problems.append(
                f"{delta!r}: betti over {field} {profile.betti} != integer route {oracle}"
            )
        f_alt = sum((-1) ** (len(f) - 1) for f in faces_of(delta) if f)
        h_alt = sum((-1 if i % 2 else 1) * v for i, v in profile.betti.items())
        if f_alt - 1 != h_alt:
            problems.append(
                f"{delta!r}: Euler balance fails over {field}: {f_alt - 1} != {h_alt}"
            )
    return problems


def check_predicate_implications(
    delta: SimplicialComplex, fields=DEFAULT_FIELDS
) -> list[str]:
    problems = []
    connected = len(connected_components(delta)) == 1
    if is_strongly_connected(delta) and not is_pure(delta):
        problems.append(f"{delta!r}: strongly connected but impure")
    if is_normal(delta) and connected:
        if not is_pure(delta) or not is_strongly_connected(delta):
            problems.append(f"{delta!r}: normal and connected but not strongly connected")
    if is_pseudomanifold(delta):
        for field in fields:
            if reduced_betti(delta, field).betti_number(delta.dim) > 1:
                problems.append(f"{delta!r}: pseudomanifold with top betti > 1 over {field}")
    for field in fields:
        cm = is_cohen_macaulay(delta, field)
        if is_gorenstein(delta, field) and not cm:
            problems.append(f"{delta!r}: Gorenstein but not Cohen-Macaulay over {field}")
        if cm and connected and not is_normal(delta):
            problems.append(f"{delta!r}: Cohen-Macaulay and connected but not normal ({field})")
    return problems


_M_POWER_CLASSES = (
    TraceClass.EQUALS_RING,
    TraceClass.EQUALS_MAX_IDEAL,
    TraceClass.EQUALS_MAX_IDEAL_SQUARED,
)


def check_trace_classification(
    delta: SimplicialComplex, fields=DEFAULT_FIELDS
) -> tuple[list[str], int]:
    """Checks on connected normal complexes: the punctured-Gorenstein
    power-of-m equivalence, the dimension bound for trace = m, and the
    cone point restriction.  Returns (problems, unknown verdict count)."""
    problems = []
    unknowns = 0
    if len(connected_components(delta)) != 1 or not is_normal(delta):
        return problems, unknowns
    for field in fields:
        report = classify_trace_connected(delta, field)
        verdict = report.trace_class
        gp = is_gorenstein_on_punctured(delta, field)
        if verdict is TraceClass.UNKNOWN:
            unknowns += 1
            if is_cohen_macaulay(delta, field):
                problems.append(
                    f"{delta!r}: unknown verdict on a Cohen-Macaulay complex over {field}"
                )
            continue
        if gp != (verdict in _M_POWER_CLASSES):
            problems.append(
                f"{delta!r}: punctured-Gorenstein is {gp} but verdict {verdict.value} "
                f"over {field}"
            )
        if verdict is TraceClass.EQUALS_MAX_IDEAL and delta.dim >= 2:
            problems.append(f"{delta!r}: trace = m in dimension {delta.dim} over {field}")
        if (
            report.scope_flags.cone_points
            and report.scope_flags.quasi_gorenstein.is_no
            and gp
        ):
            problems.append(
                f"{delta!r}: cone point present, not quasi-Gorenstein, yet "
                f"Gorenstein on the punctured spectrum over {field}"
            )
        sanity = is_gorenstein_on_punctured(delta, field, check_all_faces=True)
        if sanity != gp:
            problems.append(
                f"{delta!r}: vertex-link and all-faces punctured scans disagree over {field}"
            )
    return problems, unknowns


@dataclass
class SweepReport:
    complexes: int = 0
    verdicts: dict[str, int] = dataclass_field(default_factory=dict)
    unknown_verdicts: int = 0
    problems: list[str] = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def run_sweep(max_vertices: int, fields=DEFAULT_FIELDS) -> SweepReport:
    report = SweepReport()
    for delta in enumerate_complexes(max_vertices):
        report.complexes += 1
        report.problems += check_homology(delta, fields)
        report.problems += check_predicate_implications(delta, fields)
        problems, unknowns = check_trace_classification(delta, fields)
        report.problems += problems
        report.unknown_verdicts += unknowns
        if len(connected_components(delta)) == 1 and is_normal(delta):
            for field in fields:
                verdict = classify_trace_connected(delta, field).trace_class
                report.verdicts[verdict.value] = report.verdicts.get(verdict.value, 0) + 1
    return report
