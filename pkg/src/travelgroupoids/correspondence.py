"""The two conversion maps and their round-trip verification.

``phi`` reads a validated system as its associated groupoid; ``psi``
extracts the right translation system of a travel groupoid on a graph.
On any fixed graph the two are mutually inverse bijections between the
set of travel groupoids and the set of T-partition systems, which
``verify_roundtrip`` confirms by exhaustion over enumerated populations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import DEFAULT_ORACLE_LIMIT, enumerate_systems, oracle_enumerate
from .graphs import Graph
from .groupoids import OpTable, check_t1, check_t2, is_on_graph
from .systems import (
    PARTITION_AXIOMS,
    TPartitionSystem,
    _PARTITION_CHECKERS,
    associated_groupoid,
    is_tpartition_system,
    right_translation_system,
)


class ValidationError(ValueError):
    """A conversion precondition failed; names the failed axiom."""

    def __init__(self, message: str, axiom: str):
        super().__init__(message)
        self.axiom = axiom


@dataclass
class CorrespondenceReport:
    """Round-trip outcome over one graph's full populations."""

    graph: Graph
    phi_psi_identity: bool
    psi_phi_identity: bool
    counterexample: tuple[str, object] | None

    def __post_init__(self):
        both = self.phi_psi_identity and self.psi_phi_identity
        if both != (self.counterexample is None):
            raise ValueError("counterexample must be present exactly on failure")

    def __bool__(self) -> bool:
        return self.counterexample is None


def phi(s: TPartitionSystem, g: Graph) -> OpTable:
    """System -> associated groupoid, after full validation against g."""
    if s.validated_on() != g and not is_tpartition_system(s, g):
        for name in PARTITION_AXIOMS:
            report = _PARTITION_CHECKERS[name](s, g, witness_limit=1)
            if not report.holds:
                raise ValidationError(
                    f"not a T-partition system on the given graph: axiom "
                    f"{name} fails at {report.witnesses[0]}",
                    axiom=name,
                )
        raise AssertionError("validation failed but every axiom holds")
    return associated_groupoid(s, g)


def psi(t: OpTable, g: Graph) -> TPartitionSystem:
    """Travel groupoid on g -> its right translation system."""
    if t.n != g.n:
        raise ValueError(f"size mismatch: table has n={t.n}, graph has n={g.n}")
    for name, checker in (("t1", check_t1), ("t2", check_t2)):
        report = checker(t, witness_limit=1)
        if not report.holds:
            raise ValidationError(
                f"not a travel groupoid: axiom {name} fails at "
                f"{report.witnesses[0]}",
                axiom=name,
            )
    if not is_on_graph(t, g):
        raise ValidationError(
            "the table's associated graph differs from the given graph",
            axiom="on-graph",
        )
    s = right_translation_system(t)
    assert is_tpartition_system(s, g)  # guaranteed for travel groupoids on g
    return s


def verify_roundtrip(
    g: Graph, oracle_limit: int = DEFAULT_ORACLE_LIMIT
) -> CorrespondenceReport:
    """Check psi(phi(P)) = P and phi(psi(T)) = T over full populations.

    Systems come from the assignment search, travel groupoids from the
    independent oracle; the first counterexample in canonical order is
    reported (systems direction first).
    """
    systems = enumerate_systems(g).items
    assert systems is not None
    tables = oracle_enumerate(g, limit=oracle_limit)

    psi_phi = True
    counterexample: tuple[str, object] | None = None
    for s in systems:
        if psi(phi(s, g), g) != s:
            psi_phi = False
            counterexample = ("psi_phi", s)
            break

    phi_psi = True
    for t in tables:
        if phi(psi(t, g), g) != t:
            phi_psi = False
            if counterexample is None:
                counterexample = ("phi_psi", t)
            break

    return CorrespondenceReport(
        graph=g,
        phi_psi_identity=phi_psi,
        psi_phi_identity=psi_phi,
        counterexample=counterexample,
    )
