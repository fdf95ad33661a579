"""Symbolic trace calculus for fiber products of graded rings over a
field, and its specialization to Stanley-Reisner rings of disconnected
complexes.

The trace of the product splits as a direct sum: the top-dimensional
factors contribute their dagger trace (the trace itself when proper, the
maximal ideal when the factor is quasi-Gorenstein) and every lower
dimensional factor contributes its socle.  One-dimensional products are
refused outright: the direct-sum formula genuinely fails there, the
product of two polynomial lines being Gorenstein.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .classify import TraceReport, classify_trace_connected, is_cm_on_punctured
from .complexes import SimplicialComplex, connected_components
from .exact_linalg import FieldSpec
from .verdicts import (
    NO,
    YES,
    Evidence,
    IdealClass,
    Rule,
    TraceClass,
    TriState,
    UnsupportedHypothesisError,
    tri_all,
    unknown,
)


class Dim1UnsupportedError(UnsupportedHypothesisError):
    """The combined ring has dimension one, where the formula fails."""


class TrivialFactorError(UnsupportedHypothesisError):
    """A factor equals its degree-zero part, i.e. is the base field."""


@dataclass(frozen=True)
class RingDescriptor:
    """Abstract summary of one positively graded factor ring.

    ``nontrivial`` asserts the ring differs from its degree-zero part;
    the base field itself is not an admissible factor.  A reduced ring
    of positive dimension cannot have square-zero maximal ideal, so that
    flag is normalized to No on construction.
    """

    name: str
    dim: int
    trace_class: IdealClass
    socle_square_zero: TriState
    reduced: bool
    nontrivial: bool = True

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("Krull dimension must be nonnegative")
        if self.reduced and self.dim >= 1:
            if self.socle_square_zero.is_yes:
                raise ValueError(
                    f"{self.name}: a reduced ring of positive dimension cannot "
                    "have square-zero maximal ideal"
                )
            if self.socle_square_zero.is_unknown:
                object.__setattr__(self, "socle_square_zero", NO)

    @property
    def is_artinian(self) -> bool:
        return self.dim == 0

    @classmethod
    def from_json(cls, data: dict) -> "RingDescriptor":
        socle = str(data.get("socle_square_zero", "unknown"))
        if socle == "unknown":
            tri = unknown("socle behaviour unspecified in descriptor")
        elif socle in ("yes", "no"):
            tri = YES if socle == "yes" else NO
        else:
            raise ValueError(f'socle_square_zero must be "yes", "no" or "unknown", got {socle!r}')
        return cls(
            name=str(data["name"]),
            dim=int(data["dim"]),
            trace_class=IdealClass(data["trace_class"]),
            socle_square_zero=tri,
            reduced=bool(data["reduced"]),
            nontrivial=bool(data.get("nontrivial", True)),
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "trace_class": self.trace_class.value,
            "socle_square_zero": self.socle_square_zero.state,
            "reduced": self.reduced,
            "nontrivial": self.nontrivial,
        }


def dagger(descriptor: RingDescriptor) -> IdealClass:
    """Trace class after the dagger: the maximal ideal exactly when the
    trace contains it, every properly smaller class is fixed."""
    if descriptor.trace_class in (
        IdealClass.WHOLE_RING,
        IdealClass.CONTAINS_M,
        IdealClass.EQUALS_M,
    ):
        return IdealClass.EQUALS_M
    return descriptor.trace_class


def _class_contains_m(c: IdealClass) -> TriState:
    if c in (IdealClass.WHOLE_RING, IdealClass.EQUALS_M, IdealClass.CONTAINS_M):
        return YES
    if c is IdealClass.EQUALS_M2:
        return NO
    return unknown(f"class {c.value} does not determine whether the trace contains m")


def _class_radical_contains_m(c: IdealClass) -> TriState:
    if c is IdealClass.OTHER:
        return unknown("class other carries no radical information")
    return YES


class SummandKind(str, Enum):
    DAGGER = "dagger"
    SOCLE = "socle"
    ZERO = "zero"


@dataclass(frozen=True)
class Summand:
    """Contribution of one factor to the direct-sum trace."""

    name: str
    kind: SummandKind
    ideal: IdealClass | None = None

    def describe(self) -> str:
        if self.kind is SummandKind.DAGGER:
            return f"{self.name}: dagger trace ({self.ideal.value})"
        if self.kind is SummandKind.ZERO:
            return f"{self.name}: socle (zero: reduced of positive dimension)"
        return f"{self.name}: socle"


@dataclass(frozen=True)
class FiberVerdicts:
    equals_ring: TriState
    equals_m: TriState
    m_primary: TriState
    contains_m_squared: TriState | None = None
    equals_m_squared: TriState | None = None


@dataclass(frozen=True)
class FiberTraceReport:
    overall_dim: int
    summands: tuple[Summand, ...]
    verdicts: FiberVerdicts
    evidence: tuple[Evidence, ...]


def _socle_summand(d: RingDescriptor) -> Summand:
    if d.reduced and d.dim >= 1:
        return Summand(d.name, SummandKind.ZERO)
    return Summand(d.name, SummandKind.SOCLE)


def _guard(descriptors: tuple[RingDescriptor, ...]) -> int:
    if len(descriptors) < 2:
        raise ValueError("a fiber product needs at least two factors")
    for d in descriptors:
        if not d.nontrivial:
            raise TrivialFactorError(
                f"factor {d.name!r} equals its degree-zero part (the base field); "
                "the trace formula requires every factor to have elements of "
                "positive degree"
            )
    overall = max(d.dim for d in descriptors)
    if overall == 1:
        raise Dim1UnsupportedError(
            "the combined ring is one-dimensional, where the direct-sum trace "
            "formula fails (two polynomial lines glue to a Gorenstein ring); "
            "refusing rather than guessing"
        )
    return overall


def combine_many(descriptors) -> FiberTraceReport:
    """Trace verdicts for the fiber product of the given factors."""
    ds = tuple(descriptors)
    overall = _guard(ds)
    top = [d for d in ds if d.dim == overall]
    rest = [d for d in ds if d.dim < overall]

    summands = tuple(
        [Summand(d.name, SummandKind.DAGGER, dagger(d)) for d in top]
        + [_socle_summand(d) for d in rest]
    )
    equals_m = tri_all(
        [_class_contains_m(d.trace_class) for d in top]
        + [d.socle_square_zero for d in rest]
    )
    m_primary = tri_all(
        [_class_radical_contains_m(d.trace_class) for d in top]
        + [YES if d.dim == 0 else NO for d in rest]
    )
    evidence = (
        Evidence(
            "summands",
            "; ".join(s.describe() for s in summands),
            Rule.FIBER_DIRECT_SUM,
        ),
        Evidence("equals_ring", "no", Rule.FIBER_NEVER_QG),
        Evidence("equals_m", str(equals_m), Rule.FIBER_EQUALS_M),
        Evidence("m_primary", str(m_primary), Rule.FIBER_M_PRIMARY),
    )
    return FiberTraceReport(
        overall_dim=overall,
        summands=summands,
        verdicts=FiberVerdicts(equals_ring=NO, equals_m=equals_m, m_primary=m_primary),
        evidence=evidence,
    )


def combine_pair(a: RingDescriptor, b: RingDescriptor) -> FiberTraceReport:
    return combine_many([a, b])


# Verdict contributions of one component's trace class.  A component that
# is not m-primary settles several questions definitely, which the closed
# descriptor algebra alone could not express.
_REPORT_CONTAINS_M = {
    TraceClass.EQUALS_RING: YES,
    TraceClass.EQUALS_MAX_IDEAL: YES,
    TraceClass.EQUALS_MAX_IDEAL_SQUARED: NO,
    TraceClass.NOT_M_PRIMARY: NO,
    TraceClass.CONTAINED_IN_M_SQUARED: NO,
}
_REPORT_RADICAL_CONTAINS_M = {
    TraceClass.EQUALS_RING: YES,
    TraceClass.EQUALS_MAX_IDEAL: YES,
    TraceClass.EQUALS_MAX_IDEAL_SQUARED: YES,
    TraceClass.NOT_M_PRIMARY: NO,
}
_REPORT_EQUALS_M2 = {
    TraceClass.EQUALS_RING: NO,
    TraceClass.EQUALS_MAX_IDEAL: NO,
    TraceClass.EQUALS_MAX_IDEAL_SQUARED: YES,
    TraceClass.NOT_M_PRIMARY: NO,
    TraceClass.CONTAINED_IN_M_SQUARED: NO,
}
_REPORT_CONTAINS_M2 = {
    TraceClass.EQUALS_RING: YES,
    TraceClass.EQUALS_MAX_IDEAL: YES,
    TraceClass.EQUALS_MAX_IDEAL_SQUARED: YES,
    TraceClass.NOT_M_PRIMARY: NO,
    TraceClass.CONTAINED_IN_M_SQUARED: NO,
}

_CLASS_FROM_REPORT = {
    TraceClass.EQUALS_RING: IdealClass.WHOLE_RING,
    TraceClass.EQUALS_MAX_IDEAL: IdealClass.EQUALS_M,
    TraceClass.EQUALS_MAX_IDEAL_SQUARED: IdealClass.EQUALS_M2,
    TraceClass.NOT_M_PRIMARY: IdealClass.OTHER,
    TraceClass.CONTAINED_IN_M_SQUARED: IdealClass.OTHER,
    TraceClass.UNKNOWN: IdealClass.OTHER,
}


def _lookup(table: dict, trace_class: TraceClass, question: str) -> TriState:
    value = table.get(trace_class)
    if value is None:
        return unknown(f"component verdict {trace_class.value} leaves {question} open")
    return value


@dataclass(frozen=True)
class ComponentResult:
    name: str
    complex: SimplicialComplex
    report: TraceReport
    descriptor: RingDescriptor


@dataclass(frozen=True)
class SRClassification:
    """Per-component reports plus, for a disconnected complex, the
    assembled direct-sum verdicts.  ``fiber`` is None when the whole
    classification was delegated to the connected-complex route."""

    components: tuple[ComponentResult, ...]
    fiber: FiberTraceReport | None


def classify_sr(
    delta: SimplicialComplex, field: FieldSpec, *, check_all_faces: bool = False
) -> SRClassification:
    """Classify the canonical trace of the ring of any complex.

    Connected complexes go straight to the connected classifier.  A
    disconnected complex of positive dimension splits into components
    whose rings combine as a fiber product over the field, and the
    verdicts come from the direct-sum formula; disconnected complexes of
    dimension zero give one-dimensional rings, which are refused.
    """
    comps = connected_components(delta)
    if len(comps) <= 1:
        report = classify_trace_connected(delta, field, check_all_faces=check_all_faces)
        result = ComponentResult(
            name="component_1",
            complex=delta,
            report=report,
            descriptor=_descriptor_from(delta, report, "component_1"),
        )
        return SRClassification(components=(result,), fiber=None)

    if delta.dim == 0:
        raise Dim1UnsupportedError(
            "a disconnected complex of dimension zero gives a one-dimensional "
            "ring; the direct-sum trace formula does not apply there"
        )

    results = []
    for i, comp in enumerate(comps, start=1):
        name = f"component_{i}"
        report = classify_trace_connected(comp, field, check_all_faces=check_all_faces)
        results.append(
            ComponentResult(name, comp, report, _descriptor_from(comp, report, name))
        )

    top = [r for r in results if r.complex.dim == delta.dim]
    rest = [r for r in results if r.complex.dim < delta.dim]
    dims_equal = not rest

    summands = tuple(
        [
            Summand(r.name, SummandKind.DAGGER, dagger(r.descriptor))
            for r in top
        ]
        + [_socle_summand(r.descriptor) for r in rest]
    )

    equals_m = tri_all(
        [_lookup(_REPORT_CONTAINS_M, r.report.trace_class, "trace containing m") for r in top]
        + [YES if dims_equal else NO]
    )
    m_primary = tri_all(
        [
            _lookup(_REPORT_RADICAL_CONTAINS_M, r.report.trace_class, "the trace radical")
            for r in top
        ]
        + [YES if dims_equal else NO]
    )

    evidence = [
        Evidence(
            "summands",
            "; ".join(s.describe() for s in summands),
            Rule.FIBER_DIRECT_SUM,
        ),
        Evidence("equals_ring", "no", Rule.FIBER_NEVER_QG),
        Evidence("equals_m", str(equals_m), Rule.FIBER_EQUALS_M),
        Evidence("m_primary", str(m_primary), Rule.FIBER_M_PRIMARY),
    ]

    contains_m2 = None
    equals_m2 = None
    if all(is_cm_on_punctured(r.complex, field) for r in results):
        contains_m2 = tri_all(
            [
                _lookup(_REPORT_CONTAINS_M2, r.report.trace_class, "trace containing m^2")
                for r in results
            ]
            + [YES if dims_equal else NO]
        )
        equals_m2 = tri_all(
            [
                _lookup(_REPORT_EQUALS_M2, r.report.trace_class, "trace equal to m^2")
                for r in results
            ]
            + [YES if dims_equal else NO]
        )
        evidence.append(
            Evidence("contains_m_squared", str(contains_m2), Rule.DISJOINT_CONTAINS_M2)
        )
        evidence.append(Evidence("equals_m_squared", str(equals_m2), Rule.DISJOINT_EQUALS_M2))
        # with every component Cohen-Macaulay off the vertex, m-primariness
        # coincides with containing the square of the maximal ideal
        if m_primary.is_unknown and not contains_m2.is_unknown:
            m_primary = contains_m2
            evidence.append(
                Evidence("m_primary", str(m_primary), Rule.DISJOINT_CONTAINS_M2)
            )

    fiber = FiberTraceReport(
        overall_dim=delta.dim + 1,
        summands=summands,
        verdicts=FiberVerdicts(
            equals_ring=NO,
            equals_m=equals_m,
            m_primary=m_primary,
            contains_m_squared=contains_m2,
            equals_m_squared=equals_m2,
        ),
        evidence=tuple(evidence),
    )
    return SRClassification(components=tuple(results), fiber=fiber)


def _descriptor_from(
    comp: SimplicialComplex, report: TraceReport, name: str
) -> RingDescriptor:
    # a component ring is reduced of dimension dim+1 >= 1, so its socle
    # is zero and in particular never square-zero
    return RingDescriptor(
        name=name,
        dim=comp.dim + 1,
        trace_class=_CLASS_FROM_REPORT[report.trace_class],
        socle_square_zero=NO,
        reduced=True,
    )
