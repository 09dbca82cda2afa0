"""Conjectured proximity maximisers T, T4, T5, Q and Q3.

Each family and residue class is given by one base graph on named vertices
(``a1``, ``b3``, ...) together with a *block*: a set of vertices forming one
period of the repeating column pattern.  ``boundary`` maps the column just
left of the block onto the block's last column, which is how consecutive
copies are glued.  A graph of order ``n`` is obtained by replacing the block
with ``c`` copies of it, where ``c`` follows from the order:

* ``c = 0`` removes the block and reconnects the right part to the left
  boundary through ``boundary``;
* ``c >= 1`` chains ``c`` copies, the first attached to the left part as in
  the base graph, each further copy attached to the previous copy's last
  column, and the last copy attached to the right part.

Each pattern also records a status witness, a vertex attaining the minimum
status, whose position depends on the parity of ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import _pattern_data
from .metrics import invariants
from .planegraph import QUAD, QUAD3, TRI, TRI4, TRI5, DomainError, GraphClass, PlaneGraph, classify, icosahedron

FAMILIES = ("T", "T4", "T5", "Q", "Q3")
PERIOD = {"T": 6, "T4": 8, "T5": 10, "Q": 4, "Q3": 6}
FAMILY_CLASS = {"T": TRI, "T4": TRI4, "T5": TRI5, "Q": QUAD, "Q3": QUAD3}
# orders below these are outside every closed form
FORMULA_MIN_ORDER = {"T": 4, "T4": 6, "T5": 12, "Q": 4, "Q3": 8}


class UnsupportedOrder(DomainError):
    """No construction of the requested family exists at this order."""


@dataclass(frozen=True)
class Pattern:
    family: str
    residue: int
    order: int
    black: str
    copies_per_period: int
    block: tuple[str, ...]
    boundary: dict
    odd_witness: tuple[str, int]
    even_witness: tuple[str, int]
    zero_witness: Optional[str]
    edges: tuple[tuple[str, str], ...]

    @property
    def min_copies(self) -> int:
        # T5 patterns are only used with their blocks present
        return 1 if self.family == "T5" else 0

    @property
    def n_min(self) -> int:
        return self.order - (1 - self.min_copies) * len(self.block)

    def copies(self, n: int) -> int:
        size = len(self.block)
        if (n - self.order) % PERIOD[self.family]:
            raise UnsupportedOrder(f"{self.family}: order {n} is not {self.residue} mod {PERIOD[self.family]}")
        c = 1 + (n - self.order) // size
        if c < self.min_copies or (c - 1) % self.copies_per_period:
            raise UnsupportedOrder(f"{self.family}: smallest supported order in this residue class is {self.n_min}")
        return c


def _load() -> dict[tuple[str, int], Pattern]:
    out = {}
    for d in _pattern_data.PATTERN_DATA:
        edges = tuple(tuple(e.split("-")) for e in d["edges"].split())
        p = Pattern(
            family=d["family"],
            residue=d["residue"],
            order=d["order"],
            black=d["black"],
            copies_per_period=d["copies_per_period"],
            block=tuple(d["block"]),
            boundary=dict(d["boundary"]),
            odd_witness=tuple(d["odd_witness"]),
            even_witness=tuple(d["even_witness"]),
            zero_witness=d["zero_witness"],
            edges=edges,
        )
        out[p.family, p.residue] = p
    return out


PATTERNS = _load()


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")

    @property
    def residue(self) -> int:
        return self.n % PERIOD[self.family]

    @property
    def pattern(self) -> Pattern:
        return PATTERNS[self.family, self.residue]

    @property
    def k(self) -> int:
        """Number of block copies used for this order."""
        if _is_icosahedron(self.family, self.n):
            return 0
        return self.pattern.copies(self.n)


def _is_icosahedron(family: str, n: int) -> bool:
    return family == "T5" and n == 12


def n_min(family: str, residue: int) -> int:
    p = PATTERNS[family, residue]
    if family == "T5" and residue == 2:
        return 12
    return p.n_min


def supported(family: str, n: int) -> bool:
    try:
        ConstructionSpec(family, n).k
    except DomainError:
        return False
    return True


def supported_orders(family: str, upto: int) -> list[int]:
    return [n for n in range(4, upto + 1) if supported(family, n)]


def _spliced(p: Pattern, c: int) -> tuple[list[str], list[tuple[str, str]], dict[str, str]]:
    """Names and edges with ``c`` copies of the block; copy ``j`` of ``x`` is named ``x~j``."""
    block = set(p.block)
    adj: dict[str, set[str]] = {}
    for a, b in p.edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    left = set(p.boundary)
    stack = list(left)
    while stack:
        for y in adj[stack.pop()]:
            if y not in block and y not in left:
                left.add(y)
                stack.append(y)
    right = set(adj) - block - left
    inv = {r: l for l, r in p.boundary.items()}

    def copy(x: str, j: int) -> str:
        return f"{x}~{j}"

    edges = []
    for a, b in p.edges:
        if a in block and b in block:
            edges.extend((copy(a, j), copy(b, j)) for j in range(c))
        elif a not in block and b not in block:
            if (a in left) != (b in left):
                raise AssertionError("left and right parts must only meet through the block")
            edges.append((a, b))
        else:
            x, y = (a, b) if a in block else (b, a)
            if y in left:
                if c:
                    edges.append((y, copy(x, 0)))
                    edges.extend((copy(p.boundary[y], j - 1), copy(x, j)) for j in range(1, c))
                # with no copies the left part keeps only its own edges
            elif c:
                edges.append((copy(x, c - 1), y))
            else:
                edges.append((inv[x], y))
    names = sorted(left) + [copy(x, j) for j in range(c) for x in sorted(block)] + sorted(right)
    return names, edges, inv


def _witness_name(p: Pattern, c: int, inv: dict[str, str]) -> str:
    if c == 0:
        return p.zero_witness
    x, off = p.odd_witness if c % 2 else p.even_witness
    if x not in p.block:
        return x
    j = c // 2 + off
    if j == -1:
        return inv[x]
    return f"{x}~{j}"


@dataclass(frozen=True)
class Construction:
    spec: ConstructionSpec
    graph: PlaneGraph
    witness: int
    names: tuple[str, ...]


def construct(spec: ConstructionSpec) -> Construction:
    """Build the graph of ``spec`` together with its status witness."""
    if _is_icosahedron(spec.family, spec.n):
        g = icosahedron()
        return Construction(spec, g, 0, tuple(f"v{i}" for i in range(12)))
    p = spec.pattern
    c = spec.k
    names, edges, inv = _spliced(p, c)
    index = {x: i for i, x in enumerate(names)}
    g = PlaneGraph.from_edges(((index[a], index[b]) for a, b in edges), len(names))
    if g.n != spec.n:
        raise AssertionError(f"built {g.n} vertices for order {spec.n}")
    return Construction(spec, g, index[_witness_name(p, c, inv)], tuple(names))


def build(spec: ConstructionSpec) -> PlaneGraph:
    return construct(spec).graph


# ---------------------------------------------------------------- closed forms

_F = Fraction
# pi = (n + a) / b + corrections[n mod period] / (n - 1)
_FORMULAS = {
    "T": (5, 12, {0: _F(5, 12), 1: _F(0), 2: _F(5, 12), 3: _F(2, 3), 4: _F(3, 4), 5: _F(2, 3)}),
    "T4": (9, 16, {0: _F(25, 16), 1: _F(1), 2: _F(21, 16), 3: _F(3, 2), 4: _F(25, 16), 5: _F(3, 2), 6: _F(21, 16), 7: _F(1)}),
    "T5": (
        13,
        20,
        {
            0: _F(-7, 20), 1: _F(-1), 2: _F(-1, 4), 3: _F(-8, 5), 4: _F(-11, 20),
            5: _F(-3, 5), 6: _F(-3, 4), 7: _F(0), 8: _F(-7, 20), 9: _F(-4, 5),
        },
    ),
    "Q": (1, 8, {0: _F(17, 8), 1: _F(2), 2: _F(21, 8), 3: _F(2)}),
    "Q3": (9, 12, {0: _F(-13, 4), 1: _F(-3), 2: _F(-23, 12), 3: _F(-4), 4: _F(-13, 4), 5: _F(-8, 3)}),
}


def formula_proximity(family: str, n: int) -> Fraction:
    """Closed-form proximity of the family at order ``n``, evaluated exactly."""
    if family not in _FORMULAS:
        raise DomainError(f"unknown family {family!r}")
    if n < FORMULA_MIN_ORDER[family]:
        raise DomainError(f"the {family} closed form is not defined for n = {n}")
    a, b, corr = _FORMULAS[family]
    return _F(n + a, b) + corr[n % PERIOD[family]] / (n - 1)


@dataclass(frozen=True)
class ConstructionReport:
    family: str
    n: int
    built_min_status: int
    formula_min_status: Fraction
    match: bool
    graph_class: Optional[GraphClass]
    class_ok: bool
    witness_ok: bool


def verify_construction(family: str, n: int) -> ConstructionReport:
    spec = ConstructionSpec(family, n)
    con = construct(spec)
    inv = invariants(con.graph)
    formula = formula_proximity(family, n) * (n - 1)
    cls = classify(con.graph)
    return ConstructionReport(
        family=family,
        n=n,
        built_min_status=inv.min_status,
        formula_min_status=formula,
        match=formula == inv.min_status,
        graph_class=cls,
        class_ok=cls == FAMILY_CLASS[family],
        witness_ok=inv.sigma[con.witness] == inv.min_status,
    )
