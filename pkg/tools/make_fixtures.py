"""Write cross-check fixtures in planar_code format.

This script is deliberately independent of the ``planeprox`` package: it
enumerates plane triangulations and quadrangulations by a breadth-first walk
over their flip graphs instead of by vertex splitting, uses its own canonical
form, its own face tracer and its own planar_code writer, and takes
connectivity from networkx.

* Triangulations: replace an edge ``uv`` by the other diagonal of the
  quadrilateral formed by its two faces.  All simple triangulations with the
  same number of vertices are connected by such flips (Wagner).
* Quadrangulations: the two faces on an edge ``uv`` form a hexagon; replace
  ``uv`` by one of the hexagon's other two long diagonals.  These are the
  diagonal slides; a vertex of degree two may also move to the other
  diagonal of the 4-cycle around it (diagonal rotation).  Slides and
  rotations connect all quadrangulations of the sphere with the same number
  of vertices (Nakamoto).

Usage::

    python tools/make_fixtures.py [OUTDIR]
"""

import json
import sys
from collections import deque
from pathlib import Path

import networkx as nx

HEADER = b">>planar_code<<"

RANGES = {
    "tri": (4, 11),
    "tri4": (6, 12),
    "tri5": (12, 12),
    "quad": (4, 12),
    "quad3": (8, 13),
}


def bipyramid(n):
    if n == 4:
        return [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]
    ring = list(range(2, n))
    k = len(ring)
    rot = [None] * n
    rot[0] = ring[:]
    rot[1] = ring[::-1]
    for i, v in enumerate(ring):
        a, b = ring[(i - 1) % k], ring[(i + 1) % k]
        rot[v] = [0, a, 1, b]
    return rot


def k2n(n):
    # two poles joined through n - 2 vertices of degree two
    mids = list(range(2, n))
    rot = [mids[:], mids[::-1]] + [[0, 1] for _ in mids]
    return rot


def face_lengths(rot):
    seen = set()
    out = []
    for u, r in enumerate(rot):
        for v in r:
            if (u, v) in seen:
                continue
            length = 0
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                length += 1
                rb = rot[b]
                a, b = b, rb[(rb.index(a) + 1) % len(rb)]
            out.append(length)
    return out


def canon(rot):
    n = len(rot)
    key = max((len(rot[u]), len(rot[v])) for u in range(n) for v in rot[u])
    best = None
    for u in range(n):
        for k, v in enumerate(rot[u]):
            if (len(rot[u]), len(rot[v])) != key:
                continue
            for step in (1, -1):
                label = {u: 1}
                start = {u: k}
                order = [u]
                code = []
                for x in order:
                    r = rot[x]
                    d = len(r)
                    for t in range(d):
                        y = r[(start[x] + step * t) % d]
                        if y not in label:
                            label[y] = len(label) + 1
                            start[y] = rot[y].index(x)
                            order.append(y)
                        code.append(label[y])
                    code.append(0)
                code = tuple(code)
                if best is None or code < best:
                    best = code
    return best


def decode(code):
    rot = [[]]
    for c in code:
        if c == 0:
            rot.append([])
        else:
            rot[-1].append(c - 1)
    return rot[:-1]


def next_after(rot, b, a):
    rb = rot[b]
    return rb[(rb.index(a) + 1) % len(rb)]


def insert_between(rot, x, left, right, new):
    r = rot[x]
    i = r.index(left)
    assert r[(i + 1) % len(r)] == right
    r.insert(i + 1, new)


def tri_flips(rot):
    for u in range(len(rot)):
        for v in rot[u]:
            if u > v or len(rot[u]) < 4 or len(rot[v]) < 4:
                continue
            a = next_after(rot, v, u)
            b = next_after(rot, u, v)
            if b in rot[a]:
                continue
            new = [list(r) for r in rot]
            new[u].remove(v)
            new[v].remove(u)
            insert_between(new, a, v, u, b)
            insert_between(new, b, u, v, a)
            yield new


def quad_flips(rot):
    for u in range(len(rot)):
        for v in rot[u]:
            if u > v or len(rot[u]) < 3 or len(rot[v]) < 3:
                continue
            p = next_after(rot, v, u)
            q = next_after(rot, p, v)
            s = next_after(rot, u, v)
            t = next_after(rot, s, u)
            for x, xl, xr, y, yl, yr in ((p, v, q, s, u, t), (q, p, u, t, s, v)):
                if y in rot[x] or x == y:
                    continue
                new = [list(r) for r in rot]
                new[u].remove(v)
                new[v].remove(u)
                insert_between(new, x, xl, xr, y)
                insert_between(new, y, yl, yr, x)
                yield new
    # diagonal rotations: a vertex of degree two moves to the other diagonal
    for w in range(len(rot)):
        if len(rot[w]) != 2:
            continue
        x, y = rot[w]
        if len(rot[x]) < 3 or len(rot[y]) < 3:
            continue
        a = next_after(rot, x, w)
        b = next_after(rot, y, w)
        if a == b:
            continue
        new = [list(r) for r in rot]
        new[x].remove(w)
        new[y].remove(w)
        new[w] = [a, b]
        insert_between(new, a, x, y, w)
        insert_between(new, b, y, x, w)
        yield new


def flip_closure(start, flips, face_len):
    first = canon(start)
    seen = {first}
    queue = deque([first])
    out = []
    while queue:
        code = queue.popleft()
        rot = decode(code)
        out.append(rot)
        for new in flips(rot):
            assert set(face_lengths(new)) == {face_len}
            c = canon(new)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return out


def connectivity(rot):
    g = nx.Graph()
    g.add_edges_from((u, v) for u, r in enumerate(rot) for v in r)
    return nx.node_connectivity(g)


def encode(rot):
    out = bytearray([len(rot)])
    for r in rot:
        out.extend(x + 1 for x in r)
        out.append(0)
    return bytes(out)


def main(outdir="fixtures"):
    outdir = Path(outdir)
    manifest = {
        "generator": "tools/make_fixtures.py (flip-graph search, independent of the package)",
        "command": "python tools/make_fixtures.py " + str(outdir),
        "note": (
            "These files are not plantri output: no plantri binary could be installed where they "
            "were produced. They come from a second, independent generator, and their counts agree "
            "with the published census values."
        ),
        "files": {},
    }
    cache = {}
    for tag, (lo, hi) in RANGES.items():
        quad = tag.startswith("quad")
        need = {"tri": 3, "tri4": 4, "tri5": 5, "quad": 2, "quad3": 3}[tag]
        for n in range(lo, hi + 1):
            key = (quad, n)
            if key not in cache:
                if quad:
                    cache[key] = flip_closure(k2n(n), quad_flips, 4)
                else:
                    cache[key] = flip_closure(bipyramid(n), tri_flips, 3)
            graphs = [r for r in cache[key] if connectivity(r) >= need]
            path = outdir / tag / f"{n}.plc"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(HEADER + b"".join(encode(r) for r in graphs))
            manifest["files"][f"{tag}/{n}.plc"] = len(graphs)
            print(tag, n, len(graphs), flush=True)
    (outdir / "MANIFEST.json").write_text(json.dumps(manifest, indent=1) + "\n")


if __name__ == "__main__":
    main(*sys.argv[1:])
