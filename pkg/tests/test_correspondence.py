import pytest

from travelgroupoids import (
    CorrespondenceReport,
    OpTable,
    TPartitionSystem,
    ValidationError,
    associated_graph,
    enumerate_systems,
    oracle_enumerate,
    phi,
    psi,
    verify_roundtrip,
)

from conftest import (
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
    star_graph,
)

K1 = edgeless_graph(1)
K2 = complete_graph(2)


def test_phi_psi_on_golden(golden_table, golden_system, c4):
    assert phi(golden_system, c4) == golden_table
    assert psi(golden_table, c4) == golden_system


def test_k1_singleton(golden_table):
    s = TPartitionSystem(1, [[[0]]])
    assert phi(s, K1) == OpTable([[0]])
    assert psi(OpTable([[0]]), K1) == s


def test_k2_unique_pair():
    table = OpTable([[0, 1], [0, 1]])
    system = TPartitionSystem(2, [[[0], [1]], [[0], [1]]])
    assert phi(system, K2) == table
    assert psi(table, K2) == system


def test_phi_rejects_invalid_system(c4):
    broken = TPartitionSystem(4, [[[w] for w in range(4)]] * 4)
    with pytest.raises(ValidationError) as exc:
        phi(broken, c4)
    assert exc.value.axiom in ("P0", "P1a", "P1b", "P1c", "P2")


def test_psi_rejects_non_travel_groupoid(c4):
    not_t2 = OpTable([[0, 1, 0, 0], [0, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3]])
    with pytest.raises(ValidationError) as exc:
        psi(not_t2, c4)
    assert exc.value.axiom in ("t1", "t2")
    assert exc.value.axiom in str(exc.value)


def test_psi_rejects_wrong_graph(golden_table):
    with pytest.raises(ValidationError) as exc:
        psi(golden_table, path_graph(4))
    assert exc.value.axiom == "on-graph"


def test_psi_size_mismatch(golden_table):
    with pytest.raises(ValueError):
        psi(golden_table, path_graph(3))


@pytest.mark.parametrize(
    "g",
    [
        K1,
        K2,
        path_graph(3),
        path_graph(4),
        cycle_graph(4),
        complete_graph(4),
        star_graph(3),
        edgeless_graph(2),
    ],
)
def test_roundtrip_identities(g):
    report = verify_roundtrip(g)
    assert report.phi_psi_identity and report.psi_phi_identity
    assert report.counterexample is None
    assert bool(report)


def test_correspondence_report_invariant(c4):
    with pytest.raises(ValueError):
        CorrespondenceReport(c4, True, True, counterexample=("psi_phi", None))
    with pytest.raises(ValueError):
        CorrespondenceReport(c4, False, True, counterexample=None)
    assert bool(CorrespondenceReport(c4, True, True, counterexample=None))


def test_phi_preserves_the_graph(c4):
    for system in enumerate_systems(c4).items:
        assert associated_graph(phi(system, c4)) == c4


def test_phi_images_are_travel_groupoids_in_each_class(c4):
    from travelgroupoids import check_simple, check_smooth, check_semismooth, check_R3, check_R4, check_R5

    for system in enumerate_systems(c4).items:
        table = phi(system, c4)
        assert check_R3(system, c4, witness_limit=1).holds == check_simple(table, witness_limit=1).holds
        assert check_R4(system, c4, witness_limit=1).holds == check_smooth(table, witness_limit=1).holds
        assert check_R5(system, c4, witness_limit=1).holds == check_semismooth(table, witness_limit=1).holds


def test_class_populations_correspond(c4):
    # filtering systems by class and mapping through phi lands exactly on
    # the tables of that class, both ways
    from travelgroupoids import check_smooth

    smooth_systems = enumerate_systems(c4, filter="smooth").items
    smooth_tables = [
        t for t in oracle_enumerate(c4) if check_smooth(t, witness_limit=1).holds
    ]
    assert {phi(s, c4) for s in smooth_systems} == set(smooth_tables)
    assert {psi(t, c4) for t in smooth_tables} == set(smooth_systems)
