"""Compiled inner loops shared by the graph, metrics and enumeration layers.

Graphs are passed around as a padded neighbour matrix ``adj`` (row ``v`` holds
the clockwise rotation of ``v`` in its first ``deg[v]`` slots) plus the degree
vector.  Canonical codes are flat ``uint8`` rows: for every vertex in
breadth-first order its rotation written with the new labels (1-based), each
list closed by a zero byte.  A code therefore has length ``2m + n``.
"""

import numpy as np
from numba import njit

# expansion kinds
SPLIT_TRI = 0
SPLIT_QUAD = 1


@njit(cache=True)
def inverse_index(adj, deg, n):
    """``inv[u, k]`` is the position of ``u`` inside the rotation of ``adj[u, k]``."""
    inv = np.full(adj.shape, -1, np.int32)
    for u in range(n):
        for k in range(deg[u]):
            w = adj[u, k]
            for t in range(deg[w]):
                if adj[w, t] == u:
                    inv[u, k] = t
                    break
    return inv


@njit(cache=True)
def canonical_code(adj, deg, n, code):
    """Write the lexicographically smallest BFS code of the graph into ``code``.

    Starts are restricted to directed edges whose (tail degree, head degree)
    pair is maximal, which is isomorphism invariant and cuts the search.
    Both rotation directions are tried, so mirror images share one code.
    """
    inv = inverse_index(adj, deg, n)
    best_key = -1
    for u in range(n):
        for k in range(deg[u]):
            key = deg[u] * 1024 + deg[adj[u, k]]
            if key > best_key:
                best_key = key
    label = np.zeros(n, np.int32)
    first = np.zeros(n, np.int32)
    queue = np.zeros(n, np.int32)
    have = False
    for u in range(n):
        for k in range(deg[u]):
            if deg[u] * 1024 + deg[adj[u, k]] != best_key:
                continue
            for o in (1, -1):
                label[:] = 0
                label[u] = 1
                first[u] = k
                queue[0] = u
                qn = 1
                nxt = 2
                p = 0
                # -1 writing first code, 0 tied so far, 1 already smaller
                state = 0 if have else -1
                aborted = False
                for qi in range(n):
                    x = queue[qi]
                    d = deg[x]
                    s = first[x]
                    for t in range(d):
                        idx = (s + o * t) % d
                        y = adj[x, idx]
                        if label[y] == 0:
                            label[y] = nxt
                            nxt += 1
                            queue[qn] = y
                            qn += 1
                            first[y] = inv[x, idx]
                        c = label[y]
                        if state == 0:
                            if c > code[p]:
                                aborted = True
                                break
                            if c < code[p]:
                                state = 1
                        if state != 0:
                            code[p] = c
                        p += 1
                    if aborted:
                        break
                    if state == 0 and code[p] > 0:
                        state = 1
                    if state != 0:
                        code[p] = 0
                    p += 1
                have = True


@njit(cache=True)
def decode(code, n, width):
    """Inverse of :func:`canonical_code` (up to mirror image)."""
    adj = np.full((n, width), -1, np.int32)
    deg = np.zeros(n, np.int32)
    v = 0
    for c in code:
        if v >= n:
            break
        if c == 0:
            v += 1
        else:
            adj[v, deg[v]] = c - 1
            deg[v] += 1
    return adj, deg


@njit(cache=True)
def deficiency(deg, n, k):
    total = 0
    for v in range(n):
        if deg[v] < k:
            total += k - deg[v]
    return total


@njit(cache=True)
def _insert(adj, deg, x, pos, w):
    for t in range(deg[x], pos, -1):
        adj[x, t] = adj[x, t - 1]
    adj[x, pos] = w
    deg[x] += 1


@njit(cache=True)
def split_vertex(adj, deg, n, v, i, j, joined, cadj, cdeg):
    """Split ``v`` at rotation positions ``i < j`` into ``v`` and a new vertex ``n``.

    The new vertex takes the arc ``x_i .. x_j``; ``v`` keeps ``x_j .. x_i``.
    With ``joined`` the two halves are adjacent (triangulation splitting),
    otherwise a new quadrangle ``v x_i w x_j`` appears (face expansion).
    """
    w = n
    d = deg[v]
    cadj[:n, :] = adj[:n, :]
    cdeg[:n] = deg[:n]
    cadj[w, :] = -1
    xi = adj[v, i]
    xj = adj[v, j]
    # v keeps x_j .. x_i (wrapping), then w
    cnt = 0
    for t in range(j, i + d + 1):
        cadj[v, cnt] = adj[v, t % d]
        cnt += 1
    if joined:
        cadj[v, cnt] = w
        cnt += 1
    for t in range(cnt, cadj.shape[1]):
        cadj[v, t] = -1
    cdeg[v] = cnt
    cnt = 0
    if joined:
        cadj[w, 0] = v
        cnt = 1
    for t in range(i, j + 1):
        cadj[w, cnt] = adj[v, t]
        cnt += 1
    cdeg[w] = cnt
    for t in range(i + 1, j):
        x = adj[v, t]
        for s in range(deg[x]):
            if cadj[x, s] == v:
                cadj[x, s] = w
                break
    for s in range(cdeg[xi]):
        if cadj[xi, s] == v:
            _insert(cadj, cdeg, xi, s, w)
            break
    for s in range(cdeg[xj]):
        if cadj[xj, s] == v:
            _insert(cadj, cdeg, xj, s + 1, w)
            break


@njit(cache=True)
def count_children(codes, n, width):
    total = 0
    for r in range(codes.shape[0]):
        adj, deg = decode(codes[r], n, width)
        for v in range(n):
            total += deg[v] * (deg[v] - 1) // 2
    return total


@njit(cache=True)
def expand(codes, n, width, kind, k, budget, out):
    """Write codes of all children of every parent row into ``out``.

    Children whose ``k``-deficiency exceeds ``budget`` are dropped.  Returns
    the number of rows written.
    """
    joined = kind == SPLIT_TRI
    cadj = np.full((n + 1, width), -1, np.int32)
    cdeg = np.zeros(n + 1, np.int32)
    rows = 0
    for r in range(codes.shape[0]):
        adj, deg = decode(codes[r], n, width)
        for v in range(n):
            d = deg[v]
            for i in range(d):
                for j in range(i + 1, d):
                    split_vertex(adj, deg, n, v, i, j, joined, cadj, cdeg)
                    if k > 0 and deficiency(cdeg, n + 1, k) > budget:
                        continue
                    canonical_code(cadj, cdeg, n + 1, out[rows])
                    rows += 1
    return rows


@njit(cache=True)
def status_vector(adj, deg, n):
    """Total distance from every vertex (breadth-first search from each)."""
    sigma = np.zeros(n, np.int64)
    dist = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    for s in range(n):
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        total = 0
        while head < tail:
            x = queue[head]
            head += 1
            total += dist[x]
            for t in range(deg[x]):
                y = adj[x, t]
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue[tail] = y
                    tail += 1
        sigma[s] = total
    return sigma


@njit(cache=True)
def batch_min_status(codes, n, width):
    res = np.empty(codes.shape[0], np.int64)
    for r in range(codes.shape[0]):
        adj, deg = decode(codes[r], n, width)
        res[r] = status_vector(adj, deg, n).min()
    return res


# ---------------------------------------------------------------- flows

@njit(cache=True)
def _build_network(adj, deg, n):
    # node 2v = in(v), 2v+1 = out(v); arcs stored with their reverse index
    m2 = 0
    for v in range(n):
        m2 += deg[v]
    narcs = 2 * (n + m2)
    head = np.full(2 * n, -1, np.int32)
    nxt = np.empty(narcs, np.int32)
    to = np.empty(narcs, np.int32)
    base = np.zeros(narcs, np.int32)
    e = 0
    for v in range(n):
        for a, b, c in ((2 * v, 2 * v + 1, 1), (2 * v + 1, 2 * v, 0)):
            to[e] = b
            base[e] = c
            nxt[e] = head[a]
            head[a] = e
            e += 1
        for t in range(deg[v]):
            u = adj[v, t]
            for a, b, c in ((2 * v + 1, 2 * u, n), (2 * u, 2 * v + 1, 0)):
                to[e] = b
                base[e] = c
                nxt[e] = head[a]
                head[a] = e
                e += 1
    return head, nxt, to, base


@njit(cache=True)
def _local_connectivity(head, nxt, to, base, cap, nn, s, t, limit):
    # arcs come in pairs (e, e ^ 1)
    cap[:] = base
    src = 2 * s + 1
    snk = 2 * t
    flow = 0
    pred = np.empty(nn, np.int32)
    queue = np.empty(nn, np.int32)
    while flow < limit:
        pred[:] = -2
        pred[src] = -1
        queue[0] = src
        qh = 0
        qt = 1
        while qh < qt and pred[snk] == -2:
            x = queue[qh]
            qh += 1
            e = head[x]
            while e >= 0:
                y = to[e]
                if cap[e] > 0 and pred[y] == -2:
                    pred[y] = e
                    queue[qt] = y
                    qt += 1
                e = nxt[e]
        if pred[snk] == -2:
            break
        y = snk
        while y != src:
            e = pred[y]
            cap[e] -= 1
            cap[e ^ 1] += 1
            y = to[e ^ 1]
        flow += 1
    return flow


@njit(cache=True)
def vertex_connectivity(adj, deg, n):
    """Exact vertex connectivity of a connected graph.

    Uses the Esfahanian-Hakimi reduction: with ``v`` of minimum degree it is
    enough to separate ``v`` from its non-neighbours and to separate
    non-adjacent pairs of neighbours of ``v``.
    """
    m2 = 0
    for x in range(n):
        m2 += deg[x]
    if m2 == n * (n - 1):
        return n - 1
    v = 0
    for x in range(n):
        if deg[x] < deg[v]:
            v = x
    best = deg[v]
    head, nxt, to, base = _build_network(adj, deg, n)
    cap = base.copy()
    adjm = np.zeros((n, n), np.bool_)
    for x in range(n):
        for t in range(deg[x]):
            adjm[x, adj[x, t]] = True
    for w in range(n):
        if w != v and not adjm[v, w]:
            f = _local_connectivity(head, nxt, to, base, cap, 2 * n, v, w, best)
            if f < best:
                best = f
    for a in range(deg[v]):
        x = adj[v, a]
        for b in range(a + 1, deg[v]):
            y = adj[v, b]
            if not adjm[x, y]:
                f = _local_connectivity(head, nxt, to, base, cap, 2 * n, x, y, best)
                if f < best:
                    best = f
    return best


@njit(cache=True)
def filter_connectivity(codes, n, width, k):
    keep = np.zeros(codes.shape[0], np.bool_)
    for r in range(codes.shape[0]):
        adj, deg = decode(codes[r], n, width)
        keep[r] = vertex_connectivity(adj, deg, n) >= k
    return keep
