import itertools

import pytest
from hypothesis import given, strategies as st

from travelgroupoids import (
    Graph,
    OpTable,
    SystemFormatError,
    TPartitionSystem,
    associated_groupoid,
    check_P0,
    check_P1a,
    check_P1b,
    check_P1c,
    check_P2,
    check_R1,
    check_R2,
    check_R3,
    check_R4,
    check_R5,
    is_tpartition_system,
    parse_system,
    render_system,
    right_translation_system,
)

from conftest import cycle_graph, edgeless_graph, path_graph

K2 = Graph.from_edges(2, [(0, 1)])
K1 = Graph.from_edges(1, [])


@st.composite
def raw_systems(draw, max_n=4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    cells = [
        [draw(st.sets(st.integers(0, n - 1))) for _ in range(n)] for _ in range(n)
    ]
    return TPartitionSystem(n, cells)


def test_construction_normalizes_and_validates():
    s = TPartitionSystem(2, [[{1, 0}, []], [[], [1]]])
    assert s.cell(0, 0) == (0, 1)
    with pytest.raises(ValueError):
        TPartitionSystem(2, [[[0], [2]], [[], []]])  # member out of range
    with pytest.raises(ValueError):
        TPartitionSystem(2, [[[0, 0], []], [[], []]])  # repeated member
    with pytest.raises(ValueError):
        TPartitionSystem(2, [[[0], []]])  # missing row


def test_golden_partition_conditions(golden_system, c4):
    for checker in (check_P0, check_P1a, check_P1b, check_P1c, check_P2):
        assert checker(golden_system, c4).holds
    assert is_tpartition_system(golden_system, c4)
    assert golden_system.validated_on() == c4


def test_golden_on_wrong_graph_fails(golden_system):
    p4 = path_graph(4)
    assert not check_P1b(golden_system, p4).holds
    assert not check_P1c(golden_system, p4).holds
    assert not is_tpartition_system(golden_system, p4)


def test_singleton_system_on_k1():
    s = TPartitionSystem(1, [[[0]]])
    assert is_tpartition_system(s, K1)
    assert associated_groupoid(s, K1) == OpTable([[0]])


def test_p0_catches_uncovered_vertex():
    s = TPartitionSystem(2, [[[0], []], [[0], [1]]])
    report = check_P0(s, K2)
    assert not report.holds
    assert (0, 1) in report.witnesses  # vertex 1 uncovered at source 0


def test_p1a_witnesses():
    oversized = TPartitionSystem(2, [[[0, 1], [1]], [[0], [1]]])
    assert check_P1a(oversized, K2).witnesses == ((0,),)
    empty_diag = TPartitionSystem(2, [[[], [1]], [[0], [1]]])
    assert not check_P1a(empty_diag, K2).holds


def test_p1b_and_p1c_against_edges():
    missing_neighbor = TPartitionSystem(2, [[[0], []], [[0], [1]]])
    assert not check_P1b(missing_neighbor, K2).holds
    assert not check_P1c(missing_neighbor, K2).holds
    on_edgeless = TPartitionSystem(2, [[[0], [1]], [[0], [1]]])
    assert not check_P1b(on_edgeless, edgeless_graph(2)).holds


def test_p1c_nonedge_with_nonempty_cell():
    cells = [
        [[0], [1], [3], [2]],
        [[0, 3], [1], [2], []],
        [[], [0, 1], [2], [3]],
        [[0], [], [1, 2], [3]],
    ]
    s = TPartitionSystem(4, cells)
    report = check_P1c(s, cycle_graph(4))
    assert not report.holds
    assert (0, 2) in report.witnesses


def test_p2_witness_names_shared_vertex():
    s = TPartitionSystem(3, [[[0], [2], []], [[2, 0], [1], []], [[], [], [2]]])
    report = check_P2(s, path_graph(3))
    assert not report.holds
    assert (0, 1, 2) in report.witnesses


def test_size_mismatch_raises(golden_system):
    with pytest.raises(ValueError):
        check_P0(golden_system, path_graph(3))


def test_r1_r2_on_golden(golden_system):
    assert check_R1(golden_system).holds
    assert check_R2(golden_system).holds


def test_r1_witness():
    s = TPartitionSystem(2, [[[0], [1]], [[], [0, 1]]])
    report = check_R1(s)
    assert not report.holds
    assert (0, 1) in report.witnesses


def test_rts_of_golden_table(golden_table, golden_system):
    assert right_translation_system(golden_table) == golden_system


def test_rts_of_right_projection_on_k2():
    t = OpTable([[0, 1], [0, 1]])
    s = right_translation_system(t)
    assert s == TPartitionSystem(2, [[[0], [1]], [[0], [1]]])


def test_associated_groupoid_golden(golden_system, c4, golden_table):
    assert associated_groupoid(golden_system, c4) == golden_table


def test_associated_groupoid_structural_error_names_pair():
    # vertex 1 lies in no cell of the family at source 0
    s = TPartitionSystem(2, [[[0], []], [[0], [1]]])
    with pytest.raises(ValueError, match=r"u=0, v=1"):
        associated_groupoid(s, K2)


def test_r3_golden_witness(golden_system, c4):
    report = check_R3(golden_system, c4)
    assert not report.holds
    assert (0, 2, 1, 3) in report.witnesses
    # replay: 0 in V[2][1], 2 in V[0][3], but 1 not in V[0][3]
    assert 0 in golden_system.members(2, 1)
    assert 2 in golden_system.members(0, 3)
    assert 1 not in golden_system.members(0, 3)


def test_r4_r5_golden(golden_system, c4):
    assert check_R4(golden_system, c4).holds
    assert check_R5(golden_system, c4).holds


def test_r4_failure_example():
    # cell V[0][1] = {1, 2} with 1 in V[2][0] but 0 outside the cell
    cells = [[[0], [1, 2], []], [[], [1], []], [[1], [], [2]]]
    s = TPartitionSystem(3, cells)
    g = path_graph(3)
    report = check_R4(s, g)
    assert not report.holds
    u, v, x, y, z = report.witnesses[0]
    assert x in s.members(u, v) and y in s.members(u, v)
    assert x in s.members(y, z)
    assert z not in s.members(u, v)


@given(raw_systems())
def test_r4_readings_agree(s):
    g = edgeless_graph(s.n)
    a = check_R4(s, g, witness_limit=1, reading="statement").holds
    b = check_R4(s, g, witness_limit=1, reading="proof").holds
    assert a == b


@given(raw_systems())
def test_r5_readings_agree(s):
    g = edgeless_graph(s.n)
    a = check_R5(s, g, witness_limit=1, reading="statement").holds
    b = check_R5(s, g, witness_limit=1, reading="proof").holds
    assert a == b


@given(raw_systems())
def test_r4_implies_r5(s):
    g = edgeless_graph(s.n)
    if check_R4(s, g, witness_limit=1).holds:
        assert check_R5(s, g, witness_limit=1).holds


@given(raw_systems())
def test_render_parse_round_trip(s):
    assert parse_system(render_system(s)) == s


def test_parse_is_strict():
    good = '{"n":1,"cells":[[[0]]]}'
    assert parse_system(good) == TPartitionSystem(1, [[[0]]])
    for bad in (
        "not json",
        "[1]",
        '{"n":1}',
        '{"n":1,"cells":[[[0]]],"extra":1}',
        '{"n":0,"cells":[]}',
        '{"n":true,"cells":[[[0]]]}',
        '{"n":1,"cells":[[[1]]]}',  # out of range
        '{"n":2,"cells":[[[1,0],[]],[[],[]]]}',  # not ascending
        '{"n":2,"cells":[[[0],[]]]}',  # wrong shape
        '{"n":1,"cells":[[[0.5]]]}',  # non-integer member
    ):
        with pytest.raises(SystemFormatError):
            parse_system(bad)


def test_every_pair_has_a_cell_even_when_empty(golden_system):
    assert golden_system.cell(0, 2) == ()
    all_pairs = list(itertools.product(range(4), repeat=2))
    assert len(all_pairs) == 16
    for u, v in all_pairs:
        assert isinstance(golden_system.cell(u, v), tuple)
