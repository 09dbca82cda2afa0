import pytest
from hypothesis import given, strategies as st

from planeprox import ConstructionSpec, PlanarCodeError, build, cube, icosahedron, k4, read_planar_code, write_planar_code
from planeprox.constructions import FAMILIES, supported_orders
from planeprox.planar_code import HEADER, read_file, write_file


def test_k4_bytes():
    assert write_planar_code([k4()]) == HEADER + bytes([4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0])


def test_header_only_is_empty():
    assert read_planar_code(HEADER) == []


def test_round_trip_small(tmp_path):
    graphs = [k4(), cube(), icosahedron()]
    path = tmp_path / "g.plc"
    write_file(path, graphs)
    back = read_file(path)
    assert [g.rotation for g in back] == [g.rotation for g in graphs]


@given(family=st.sampled_from(FAMILIES), i=st.integers(0, 40))
def test_round_trip_constructions(family, i):
    orders = supported_orders(family, 200)
    g = build(ConstructionSpec(family, orders[i % len(orders)]))
    (back,) = read_planar_code(write_planar_code([g]))
    assert back.rotation == g.rotation


def test_errors_carry_offsets():
    with pytest.raises(PlanarCodeError) as e:
        read_planar_code(b">>planar_code>>" + bytes([1, 0]))
    assert e.value.offset == 0
    good = write_planar_code([k4()])
    with pytest.raises(PlanarCodeError) as e:
        read_planar_code(good[:-3])
    assert e.value.offset == len(good) - 3
    bad = bytearray(good)
    bad[len(HEADER) + 2] = 9
    with pytest.raises(PlanarCodeError) as e:
        read_planar_code(bytes(bad))
    assert e.value.offset == len(HEADER) + 2
    # asymmetric rotation: reported at the start of the record
    bad = bytearray(good)
    bad[len(HEADER) + 1] = 1
    with pytest.raises(PlanarCodeError) as e:
        read_planar_code(good + bytes(bad[len(HEADER):]))
    assert e.value.offset == len(good)
