"""Shared verdict vocabulary: three-valued answers, trace ideal classes,
and the fixed rule tags that justify every classification step."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class UnsupportedHypothesisError(ValueError):
    """The input falls outside the hypotheses of every applicable rule."""


@dataclass(frozen=True)
class TriState:
    """Yes / No / Unknown with a mandatory reason on Unknown.

    Deliberately not truthy: use ``is_yes`` etc., so an Unknown can never
    be silently collapsed to a boolean.
    """

    state: str
    reason: str | None = None

    def __post_init__(self):
        if self.state not in ("yes", "no", "unknown"):
            raise ValueError(f"bad TriState {self.state!r}")
        if self.state == "unknown" and not self.reason:
            raise ValueError("an unknown verdict must carry a reason")

    @property
    def is_yes(self) -> bool:
        return self.state == "yes"

    @property
    def is_no(self) -> bool:
        return self.state == "no"

    @property
    def is_unknown(self) -> bool:
        return self.state == "unknown"

    def __bool__(self) -> bool:
        raise TypeError("TriState is three-valued; test .is_yes / .is_no explicitly")

    def __str__(self) -> str:
        if self.is_unknown:
            return f"unknown ({self.reason})"
        return self.state


YES = TriState("yes")
NO = TriState("no")


def unknown(reason: str) -> TriState:
    return TriState("unknown", reason)


def tri_all(items: Iterable[TriState | bool]) -> TriState:
    """Three-valued conjunction: any No wins, else any Unknown, else Yes."""
    pending: TriState | None = None
    for item in items:
        if isinstance(item, bool):
            item = YES if item else NO
        if item.is_no:
            return NO
        if item.is_unknown and pending is None:
            pending = item
    return pending if pending is not None else YES


class TraceClass(str, Enum):
    """What the canonical trace of one connected component is known to be."""

    EQUALS_RING = "equals_ring"
    EQUALS_MAX_IDEAL = "equals_max_ideal"
    EQUALS_MAX_IDEAL_SQUARED = "equals_max_ideal_squared"
    NOT_M_PRIMARY = "not_m_primary"
    CONTAINED_IN_M_SQUARED = "contained_in_m_squared"
    UNKNOWN = "unknown"


class IdealClass(str, Enum):
    """Closed algebra of trace ideal descriptions for abstract graded rings."""

    WHOLE_RING = "whole_ring"
    EQUALS_M = "equals_m"
    EQUALS_M2 = "equals_m2"
    CONTAINS_M = "contains_m"
    RADICAL_EQUALS_M = "radical_equals_m"
    OTHER = "other"


class Rule(str, Enum):
    """Fixed tags naming the classification rules cited in evidence trails."""

    GORENSTEIN_LINK = "gorenstein-iff-core-link-is-homology-sphere"
    REISNER_CM = "cohen-macaulay-iff-links-acyclic-below-top"
    CM_PUNCTURED_VIA_VERTEX_LINKS = "cm-on-punctured-iff-vertex-links-cm"
    TRACE_IS_RING_IFF_QG = "trace-equals-ring-iff-quasi-gorenstein"
    ORIENTABLE_PSEUDOMANIFOLD_QG = "orientable-normal-pseudomanifold-is-quasi-gorenstein"
    NONORIENTABLE_PSEUDOMANIFOLD_M2 = "nonorientable-normal-pseudomanifold-trace-inside-m-squared"
    PATH_TRACE_EQUALS_M = "path-with-three-edges-trace-equals-max-ideal"
    NONORIENTABLE_MANIFOLD_M2 = "nonorientable-homology-manifold-trace-equals-m-squared"
    PUNCTURED_GORENSTEIN_POWERS = "gorenstein-on-punctured-iff-trace-is-power-of-m"
    TRACE_RADICAL_QG_LOCUS = "trace-radical-cuts-out-non-qg-locus"
    TRACE_EQUALS_M_FORCES_DIM1 = "trace-equals-max-ideal-forces-dim-at-most-one"
    TETER_IFF_QG = "teter-type-iff-quasi-gorenstein-when-unmixed"
    S2_HYPOTHESIS = "classification-requires-link-connectivity"
    FIBER_DIRECT_SUM = "fiber-trace-is-direct-sum-of-dagger-traces"
    FIBER_NEVER_QG = "fiber-product-never-quasi-gorenstein"
    FIBER_EQUALS_M = "fiber-trace-equals-m-iff-top-traces-contain-m-and-small-socles-square-zero"
    FIBER_M_PRIMARY = "fiber-trace-m-primary-iff-top-radicals-contain-m-and-rest-artinian"
    DISJOINT_EQUALS_M2 = "disjoint-union-trace-equals-m-squared-componentwise"
    DISJOINT_CONTAINS_M2 = "disjoint-union-trace-contains-m-squared-iff-m-primary"
    DIM1_GUARD = "one-dimensional-fiber-products-unsupported"
    DAGGER_DEFINITION = "dagger-trace-is-m-exactly-when-trace-contains-m"


@dataclass(frozen=True)
class Evidence:
    """One audited step: which check ran, what it returned, which rule used it."""

    check: str
    result: str
    rule: Rule

    def as_dict(self) -> dict[str, str]:
        return {"check": self.check, "result": self.result, "rule": self.rule.value}
