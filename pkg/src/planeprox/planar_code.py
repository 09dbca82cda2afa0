"""Reader and writer for the binary ``planar_code`` format used by plantri.

Only the single-byte variant is handled: after the 15-byte header each graph
is one byte ``n`` followed, for every vertex ``1..n``, by its clockwise
neighbours (1-based) and a terminating zero byte.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .planegraph import PlaneGraph, StructuralError

HEADER = b">>planar_code<<"


class PlanarCodeError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def iter_planar_code(data: bytes) -> Iterator[PlaneGraph]:
    if data[: len(HEADER)] != HEADER:
        raise PlanarCodeError(f"missing header {HEADER.decode()!r}", 0)
    p = len(HEADER)
    end = len(data)
    while p < end:
        start = p
        n = data[p]
        p += 1
        if n == 0:
            raise PlanarCodeError("two-byte planar_code entries are not supported", start)
        rotation = []
        for _ in range(n):
            nbrs = []
            while True:
                if p >= end:
                    raise PlanarCodeError("truncated graph record", p)
                x = data[p]
                p += 1
                if x == 0:
                    break
                if x > n:
                    raise PlanarCodeError(f"neighbour {x} out of range 1..{n}", p - 1)
                nbrs.append(x - 1)
            rotation.append(nbrs)
        try:
            yield PlaneGraph(rotation)
        except StructuralError as exc:
            raise PlanarCodeError(f"invalid graph: {exc}", start) from exc


def read_planar_code(data: bytes) -> list[PlaneGraph]:
    return list(iter_planar_code(data))


def encode_graph(g: PlaneGraph) -> bytes:
    if g.n > 255:
        raise ValueError("graphs with more than 255 vertices need the two-byte format")
    out = bytearray([g.n])
    for r in g.rotation:
        out.extend(x + 1 for x in r)
        out.append(0)
    return bytes(out)


def write_planar_code(graphs: Iterable[PlaneGraph]) -> bytes:
    return HEADER + b"".join(encode_graph(g) for g in graphs)


def read_file(path) -> list[PlaneGraph]:
    with open(path, "rb") as fh:
        return read_planar_code(fh.read())


def write_file(path, graphs: Iterable[PlaneGraph]) -> None:
    with open(path, "wb") as fh:
        fh.write(write_planar_code(graphs))
